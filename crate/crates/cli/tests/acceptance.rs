//! Acceptance criterion 10: byte-stable goldens for every verb and a
//! render/parse round trip. Prints one PASS/FAIL line.

mod common;

use std::time::Instant;

use critval_cli::{execute, parse_polynomial};
use critval_core::{Poly, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BUDGET_SECS: f64 = 30.0;

fn goldens() -> Result<(), String> {
    for (name, argv) in common::GOLDEN_CASES {
        common::check_golden(name, argv)?;
        // a second run must reproduce the same bytes
        if execute(argv) != execute(argv) {
            return Err(format!("{name}: output is not stable across runs"));
        }
    }
    Ok(())
}

fn round_trip() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..500 {
        let len = rng.gen_range(0..=9);
        let coeffs: Vec<Rational> = (0..len)
            .map(|_| Rational::new(rng.gen_range(-50i64..=50).into(), rng.gen_range(1i64..=12).into()))
            .collect();
        let p = Poly::from_coeffs(coeffs);
        let text = p.to_string();
        match parse_polynomial(&text) {
            Ok(q) if q == p => {}
            Ok(q) => return Err(format!("{text} parsed back as {q}")),
            Err(e) => return Err(format!("{text}: {e}")),
        }
    }
    Ok(())
}

fn main() {
    let start = Instant::now();
    let result = goldens().and_then(|_| round_trip());
    let secs = start.elapsed().as_secs_f64();
    let (status, detail) = match &result {
        Ok(()) if secs <= BUDGET_SECS => ("PASS", format!("{} verbs golden, 500 round trips", common::GOLDEN_CASES.len())),
        Ok(()) => ("FAIL", format!("exceeded {BUDGET_SECS} s budget")),
        Err(e) => ("FAIL", e.clone()),
    };
    println!("{status} criterion 10: CLI goldens and round trip [{secs:.2} s / {BUDGET_SECS} s] {detail}");
    if status == "FAIL" {
        std::process::exit(1);
    }
}
