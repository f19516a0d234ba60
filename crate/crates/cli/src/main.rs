use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (code, out) = critval_cli::execute(&args);
    if code == 0 {
        print!("{out}");
        let _ = std::io::stdout().flush();
    } else {
        eprint!("{out}");
    }
    ExitCode::from(code as u8)
}
