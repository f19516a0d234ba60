use std::path::PathBuf;

use critval_cli::execute;

/// One invocation per verb, with the golden file it is compared against.
pub const GOLDEN_CASES: &[(&str, &[&str])] = &[
    ("analyze", &["analyze", "(x^2-1)^2", "--json"]),
    ("decompose", &["decompose", "x^6-6*x^4+9*x^2-2", "--json"]),
    ("dickson", &["dickson", "2*x^3-6*x+1", "--json"]),
    ("monodromy", &["monodromy", "x^5-5*x^3+5*x", "--json"]),
    ("shapes", &["shapes", "x^3+x", "(x^2+x)^3+x^2+x", "--json"]),
    ("decide", &["decide", "x^3-3*x", "x^4-4*x^2+2", "--json"]),
    ("family", &["family", "rising-factorial", "6", "1", "--json"]),
    ("sample", &["sample", "x^3+x", "--trials", "300", "--seed", "7", "--json"]),
];

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"))
}

/// Compares against the stored golden; `UPDATE_GOLDENS=1` rewrites it.
pub fn check_golden(name: &str, argv: &[&str]) -> Result<(), String> {
    let (code, out) = execute(argv);
    if code != 0 {
        return Err(format!("{name}: exit {code}: {out}"));
    }
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDENS").is_some() {
        std::fs::write(&path, &out).map_err(|e| e.to_string())?;
        return Ok(());
    }
    let expected = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if expected == out {
        Ok(())
    } else {
        Err(format!("{name}: output differs from {}\n{out}", path.display()))
    }
}
