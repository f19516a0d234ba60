//! The `critval` command line: argument handling, verb dispatch and report
//! rendering. [`execute`] is the whole program minus process I/O.

pub mod json;
pub mod parse;

use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use critval_core as core;
use critval_core::{Poly, Rational};

pub use parse::{parse_polynomial, ParseError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{input:?}: {source}")]
    Parse { input: String, source: ParseError },
    #[error("{0}")]
    Domain(#[from] core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            _ => 2,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "critval", version, about = "Critical values, decompositions and finiteness of f(x) = g(y)")]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for sampling.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Number of sampling trials.
    #[arg(long, global = true, default_value_t = 2000)]
    trials: usize,
    /// Decide every {"f": ..., "g": ...} line of FILE, printing one JSON
    /// verdict per line in input order.
    #[arg(long, value_name = "FILE")]
    batch: Option<String>,
    #[command(subcommand)]
    verb: Option<Verb>,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Critical points, critical values and the collision polynomial.
    Analyze { f: String },
    /// Complete decomposition into indecomposable factors.
    Decompose { f: String },
    /// Detect a linear relation to a Dickson polynomial.
    Dickson { f: String },
    /// Certified monodromy classification.
    Monodromy { f: String },
    /// Exceptional derivative shapes; with G, also quadratic covers and
    /// sporadic pairs.
    Shapes { f: String, g: Option<String> },
    /// Finiteness of solutions of f(x) = g(y).
    Decide { f: String, g: String },
    /// Generate a family member and report on it.
    Family {
        name: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<String>,
    },
    /// Cycle-type sampling at random primes.
    Sample { f: String },
}

/// A rendered command result.
pub struct Report {
    pub verb: &'static str,
    pub inputs: Vec<String>,
    pub outcome: String,
    pub certificate: Value,
    pub reasons: Vec<Value>,
    pub witnesses: Value,
    pub text: String,
}

impl Report {
    pub fn to_json(&self) -> Value {
        json!({
            "verb": self.verb,
            "inputs": self.inputs,
            "outcome": self.outcome,
            "certificate": self.certificate,
            "reasons": self.reasons,
            "witnesses": self.witnesses,
        })
    }
}

fn poly_arg(text: &str) -> Result<Poly, CliError> {
    parse_polynomial(text).map_err(|source| CliError::Parse { input: text.to_string(), source })
}

fn rational_arg(text: &str) -> Result<Rational, CliError> {
    let p = poly_arg(text)?;
    if p.degree().unwrap_or(0) > 0 {
        return Err(CliError::Usage(format!("expected a number, got {text:?}")));
    }
    Ok(p.coeff(0))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn critical_text(out: &mut String, r: &core::CriticalReport) {
    let profile: Vec<String> = r.multiplicity_profile.iter().map(|(m, c)| format!("{c}x{m}")).collect();
    let _ = writeln!(out, "collision class: {}", r.collision_class);
    let _ = writeln!(
        out,
        "critical points: {} distinct, {} simple (count x multiplicity: {})",
        r.distinct_critical_points,
        r.simple_critical_points,
        profile.join(" ")
    );
    let _ = writeln!(out, "collision polynomial: {}", r.collision_poly.to_string().replace('x', "t"));
    let _ = writeln!(
        out,
        "isolated critical value at multiplicity <= 2: {} (simple: {})",
        yes_no(r.has_low_mult_distinct_witness),
        yes_no(r.has_simple_distinct_witness)
    );
}

fn analyze(f: &Poly) -> Result<Report, CliError> {
    let r = core::critical_report(f)?;
    let mut text = format!("f = {f}\n");
    critical_text(&mut text, &r);
    Ok(Report {
        verb: "analyze",
        inputs: vec![f.to_string()],
        outcome: r.collision_class.name().to_string(),
        certificate: Value::Null,
        reasons: Vec::new(),
        witnesses: json::critical(&r),
        text,
    })
}

fn decompose(f: &Poly) -> Result<Report, CliError> {
    let chain = core::full_decomposition(f)?;
    let indecomposable = chain.len() == 1;
    let outcome = if indecomposable { "Indecomposable" } else { "Decomposable" };
    let factors: Vec<String> = chain.factors.iter().map(|p| p.to_string()).collect();
    let mut text = format!("f = {f}\n{outcome}\n");
    for (i, p) in factors.iter().enumerate() {
        let _ = writeln!(text, "  factor {}: {p}", i + 1);
    }
    Ok(Report {
        verb: "decompose",
        inputs: vec![f.to_string()],
        outcome: outcome.to_string(),
        certificate: json!({ "chain": factors }),
        reasons: Vec::new(),
        witnesses: json!({ "degrees": chain.degrees() }),
        text,
    })
}

fn dickson(f: &Poly) -> Result<Report, CliError> {
    let form = core::dickson_detect(f)?;
    let outcome = match &form {
        None => "NotRelated",
        Some(d) if d.is_pure_power() => "PurePower",
        Some(_) => "DicksonRelated",
    };
    let mut text = format!("f = {f}\n{outcome}\n");
    if let Some(d) = &form {
        let _ = writeln!(
            text,
            "f = {} * D_{}(x + {}, {}) + {}",
            d.scale, d.n, d.gamma, d.beta, d.e0
        );
    }
    Ok(Report {
        verb: "dickson",
        inputs: vec![f.to_string()],
        outcome: outcome.to_string(),
        certificate: form.as_ref().map(json::dickson_form).unwrap_or(Value::Null),
        reasons: Vec::new(),
        witnesses: Value::Null,
        text,
    })
}

fn monodromy(f: &Poly) -> Result<Report, CliError> {
    let c = core::classify(f)?;
    let phi = if f.degree().unwrap_or(0) >= 3 { Some(core::phi_irreducible(f)?) } else { None };
    let mut text = format!("f = {f}\nclassification: {}\n", c.classification);
    for r in &c.rule_chain {
        let _ = writeln!(text, "  {} -> {}: {}", r.rule.id(), r.conclusion, r.rule.statement());
        if let Some(b) = &r.decomposition {
            let _ = writeln!(text, "     outer {} inner {}", b.outer, b.inner);
        }
    }
    if let Some(phi) = phi {
        let _ = writeln!(text, "difference quotient: {phi}");
    }
    Ok(Report {
        verb: "monodromy",
        inputs: vec![f.to_string()],
        outcome: c.classification.name().to_string(),
        certificate: json::monodromy(&c),
        reasons: Vec::new(),
        witnesses: json!({
            "phi": phi.map(|p| p.name()),
            "critical": json::critical(&c.critical),
        }),
        text,
    })
}

fn shapes(f: &Poly, g: Option<&Poly>) -> Result<Report, CliError> {
    let n = f.degree().unwrap_or(0);
    let composite = n >= 6 && (2..n).any(|d| n % d == 0);
    let poss11 = if composite { core::detect_poss11(f)? } else { None };
    let poss21 = if n >= 6 && n % 3 == 0 { core::detect_poss21(f)? } else { None };
    let mut found: Vec<&str> = Vec::new();
    let mut text = format!("f = {f}\n");
    for w in poss11.iter().chain(poss21.iter()) {
        found.push(w.kind.name());
        let _ = writeln!(
            text,
            "{}: t={} profile {:?}, outer {} inner {}",
            w.kind.name(),
            w.t,
            w.profile,
            w.inner_decomposition.outer,
            w.inner_decomposition.inner
        );
    }
    let mut cover = None;
    let mut pair = None;
    if let Some(g) = g {
        let _ = writeln!(text, "g = {g}");
        let m = g.degree().unwrap_or(0);
        if n >= 2 && m == 2 * n && core::is_indecomposable(f)? {
            cover = core::quadratic_cover(f, g)?;
        }
        if matches!((n, m), (3, 4) | (3, 5) | (4, 5) | (4, 6)) {
            pair = core::match_dem22_pair(f, g)?;
        }
        if let Some(nu) = &cover {
            found.push("QuadraticCover");
            let _ = writeln!(text, "QuadraticCover: g = f({nu})");
        }
        if let Some(c) = &pair {
            found.push(c.kind.name());
            let _ = writeln!(text, "{}: a={} e1={} e0={}", c.kind.name(), c.a, c.e1, c.e0);
        }
    }
    let outcome = if found.is_empty() { "None".to_string() } else { found.join(",") };
    if found.is_empty() {
        text.push_str("no exceptional shape\n");
    }
    let mut inputs = vec![f.to_string()];
    inputs.extend(g.map(|g| g.to_string()));
    Ok(Report {
        verb: "shapes",
        inputs,
        outcome,
        certificate: Value::Null,
        reasons: Vec::new(),
        witnesses: json!({
            "poss11": poss11.as_ref().map(json::shape),
            "poss21": poss21.as_ref().map(json::shape),
            "quadratic_cover": cover.as_ref().map(json::poly),
            "pair": pair.as_ref().map(json::pair),
        }),
        text,
    })
}

fn decide(f: &Poly, g: &Poly) -> Result<Report, CliError> {
    let v = core::decide(f, g)?;
    let mut text = format!("f = {f}\ng = {g}\noutcome: {}\n", v.outcome);
    if v.swapped {
        text.push_str("(arguments ordered by degree: f and g exchanged)\n");
    }
    match &v.certificate {
        Some(core::Certificate::Linear { u, v }) => {
            let _ = writeln!(text, "certificate: f(x) = g({})", Poly::linear(u.clone(), v.clone()));
        }
        Some(core::Certificate::Quadratic { nu }) => {
            let _ = writeln!(text, "certificate: g(x) = f({nu})");
        }
        Some(core::Certificate::Pair(c)) => {
            let _ = writeln!(text, "certificate: {} pair with a={}", c.kind, c.a);
        }
        None => {}
    }
    for r in &v.reasons {
        let mark = if r.passed { "ok  " } else { "FAIL" };
        let _ = writeln!(text, "  [{mark}] {}: {} ({})", r.subject, r.check, r.detail);
    }
    Ok(Report {
        verb: "decide",
        inputs: vec![f.to_string(), g.to_string()],
        outcome: v.outcome.name().to_string(),
        certificate: v.certificate.as_ref().map(json::certificate).unwrap_or(Value::Null),
        reasons: v.reasons.iter().map(json::reason).collect(),
        witnesses: json!({ "theorem": v.theorem.id(), "swapped": v.swapped }),
        text,
    })
}

fn family(name: &str, params: &[String]) -> Result<Report, CliError> {
    let values = params.iter().map(|p| rational_arg(p)).collect::<Result<Vec<_>, _>>()?;
    let spec = core::FamilySpec::parse(name, &values)?;
    let r = core::family_report(&spec)?;
    let mut text = format!("{}\nfamily: {spec}\n", r.poly);
    critical_text(&mut text, &r.report);
    match &r.prediction {
        Some(p) => {
            let rel = if p.exact { "=" } else { "<=" };
            let _ = writeln!(
                text,
                "predicted: class {rel} {} ({}); matched: {}",
                p.bound,
                p.source,
                yes_no(r.matched == Some(true))
            );
        }
        None => text.push_str("predicted: none\n"),
    }
    Ok(Report {
        verb: "family",
        inputs: vec![spec.to_string()],
        outcome: r.report.collision_class.name().to_string(),
        certificate: Value::Null,
        reasons: Vec::new(),
        witnesses: json!({
            "poly": json::poly(&r.poly),
            "critical": json::critical(&r.report),
            "prediction": r.prediction.as_ref().map(|p| json!({
                "bound": p.bound.name(),
                "exact": p.exact,
                "source": p.source,
            })),
            "matched": r.matched,
        }),
        text,
    })
}

fn sample(f: &Poly, trials: usize, seed: u64) -> Result<Report, CliError> {
    let e = core::evidence(f, trials, seed)?;
    let outcome = match e.two_transitive_consistent {
        Some(true) => "TwoTransitiveConsistent",
        Some(false) => "NotTwoTransitiveConsistent",
        None => "TooFewTrials",
    };
    let mut text = format!("f = {f}\n{outcome}\n");
    let _ = writeln!(
        text,
        "trials {} (seed {}), accepted {}, rejected {}",
        e.trials, e.seed, e.accepted, e.rejected
    );
    let _ = writeln!(
        text,
        "mean r {:.4}, mean r^2 {:.4}, rank estimate {:.4}",
        e.mean_r, e.mean_r2, e.rank_estimate
    );
    let _ = writeln!(
        text,
        "n-cycle seen: {}, transposition seen: {}",
        yes_no(e.saw_n_cycle),
        yes_no(e.saw_transposition)
    );
    for (k, v) in &e.cycle_types {
        let _ = writeln!(text, "  {k:?}: {v}");
    }
    Ok(Report {
        verb: "sample",
        inputs: vec![f.to_string()],
        outcome: outcome.to_string(),
        certificate: Value::Null,
        reasons: Vec::new(),
        witnesses: json::evidence(&e),
        text,
    })
}

fn run_verb(verb: &Verb, cli: &Cli) -> Result<Report, CliError> {
    match verb {
        Verb::Analyze { f } => analyze(&poly_arg(f)?),
        Verb::Decompose { f } => decompose(&poly_arg(f)?),
        Verb::Dickson { f } => dickson(&poly_arg(f)?),
        Verb::Monodromy { f } => monodromy(&poly_arg(f)?),
        Verb::Shapes { f, g } => {
            let g = g.as_deref().map(poly_arg).transpose()?;
            shapes(&poly_arg(f)?, g.as_ref())
        }
        Verb::Decide { f, g } => decide(&poly_arg(f)?, &poly_arg(g)?),
        Verb::Family { name, params } => family(name, params),
        Verb::Sample { f } => sample(&poly_arg(f)?, cli.trials, cli.seed),
    }
}

fn error_json(e: &CliError) -> Value {
    json!({ "error": e.to_string(), "exit_code": e.exit_code() })
}

fn batch_line(line: &str) -> Result<Report, CliError> {
    let spec: Value = serde_json::from_str(line)
        .map_err(|e| CliError::Usage(format!("invalid JSON: {e}")))?;
    let field = |k: &str| -> Result<Poly, CliError> {
        match spec.get(k).and_then(Value::as_str) {
            Some(s) => poly_arg(s),
            None => Err(CliError::Usage(format!("missing string field {k:?}"))),
        }
    };
    decide(&field("f")?, &field("g")?)
}

fn batch(path: &str) -> (i32, String) {
    let content = match std::fs::read_to_string(path) {
        Ok(c) => c,
        Err(e) => return (2, format!("cannot read {path}: {e}\n")),
    };
    let lines: Vec<&str> = content.lines().filter(|l| !l.trim().is_empty()).collect();
    let results: Vec<Result<Report, CliError>> = lines.par_iter().map(|l| batch_line(l)).collect();
    let mut out = String::new();
    let mut code = 0;
    for r in &results {
        let v = match r {
            Ok(rep) => rep.to_json(),
            Err(e) => {
                code = code.max(e.exit_code());
                error_json(e)
            }
        };
        out.push_str(&v.to_string());
        out.push('\n');
    }
    (code, out)
}

/// Runs the program on `argv` (without the program name) and returns the
/// exit code with everything that would be printed.
pub fn execute<S: AsRef<str>>(argv: &[S]) -> (i32, String) {
    let args = std::iter::once("critval").chain(argv.iter().map(|s| s.as_ref()));
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    if let Some(path) = &cli.batch {
        if cli.verb.is_some() {
            return (2, "--batch cannot be combined with a verb\n".to_string());
        }
        return batch(path);
    }
    let Some(verb) = &cli.verb else {
        return (2, "a verb or --batch is required; see --help\n".to_string());
    };
    match run_verb(verb, &cli) {
        Ok(r) if cli.json => {
            let mut s = serde_json::to_string_pretty(&r.to_json()).expect("serializable");
            s.push('\n');
            (0, s)
        }
        Ok(r) => (0, r.text),
        Err(e) if cli.json => {
            let mut s = serde_json::to_string_pretty(&error_json(&e)).expect("serializable");
            s.push('\n');
            (e.exit_code(), s)
        }
        Err(e) => (e.exit_code(), format!("error: {e}\n")),
    }
}
