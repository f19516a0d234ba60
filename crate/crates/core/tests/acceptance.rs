//! Acceptance criteria 1–9. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

mod common;

use std::time::{Duration, Instant};

use common::*;
use critval_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome1 = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn d(n: i64, a: i64) -> Poly {
    dickson(n, &q(a)).unwrap()
}

// 1 -------------------------------------------------------------------------

fn dickson_identities() -> Outcome1 {
    let mut checks = 0;
    for a in [-2, -1, 1, 2] {
        let a = q(a);
        for m in 2..=5i64 {
            for n in 2..=5i64 {
                let an = num_traits::pow(a.clone(), n as usize);
                let rhs = compose(&dickson(m, &an).unwrap(), &dickson(n, &a).unwrap());
                ensure(dickson(m * n, &a).unwrap() == rhs, || format!("composition m={m} n={n} a={a}"))?;
                checks += 1;
            }
        }
        for n in 0..=12i64 {
            let dn = dickson(n, &a).unwrap();
            let d1 = dn.derivative();
            let d2 = d1.derivative();
            let coef = Poly::from_coeffs(vec![q(-4) * &a, q(0), q(1)]);
            let residual = &(&(&coef * &d2) + &(&p(&[0, 1]) * &d1)) - &dn.scale(&q(n * n));
            ensure(residual.is_zero(), || format!("differential residual n={n} a={a}"))?;
            checks += 1;
        }
        for b in [q(2), q(-3), qq(1, 2)] {
            for n in 0..=8i64 {
                let lhs = dickson(n, &a).unwrap().scale(&num_traits::pow(b.clone(), n as usize));
                let rhs = dickson(n, &(&b * &b * &a)).unwrap().compose_linear(&b, &q(0));
                ensure(lhs == rhs, || format!("scaling n={n} a={a} b={b}"))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} exact identities"))
}

// 2 -------------------------------------------------------------------------

fn dickson_critical_law() -> Outcome1 {
    let t2m4 = p(&[-4, 0, 1]);
    for n in 3..=10i64 {
        let f = d(n, 1);
        let r = collision_poly(&f).unwrap();
        ensure(r.divides(&t2m4.pow(n as u32)), || format!("R(t) of D{n} = {r} has a root outside ±2"))?;
        let rep = critical_report(&f).unwrap();
        let repeated = rep.collision_class != CollisionClass::AllDistinct;
        let three = rep.collision_class == CollisionClass::ThreeOrMoreEqual;
        ensure(repeated == (n >= 4), || format!("D{n}: repeated value flag {repeated}"))?;
        ensure(three == (n >= 6), || format!("D{n}: class {}", rep.collision_class))?;
    }
    Ok("n = 3..10".into())
}

// 3 -------------------------------------------------------------------------

fn decomposition_round_trip() -> Outcome1 {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for i in 0..200 {
        let (dg, dh) = (rng.gen_range(2..=6), rng.gen_range(2..=6));
        let g = random_poly(&mut rng, dg, -3, 3);
        let h = random_poly(&mut rng, dh, -3, 3);
        let f = compose(&g, &h);
        let b = right_factor(&f, dh).unwrap().ok_or_else(|| format!("round trip {i}: no factor for {f}"))?;
        ensure(b.recompose() == f, || format!("round trip {i}: recomposition differs"))?;
    }
    let mut lengths = std::collections::BTreeMap::new();
    for i in 0..50 {
        let mut parts = Vec::new();
        for _ in 0..3 {
            let deg = rng.gen_range(2..=3);
            parts.push(random_poly(&mut rng, deg, -3, 3));
        }
        let left = compose(&compose(&parts[0], &parts[1]), &parts[2]);
        let right = compose(&parts[0], &compose(&parts[1], &parts[2]));
        let (cl, cr) = (full_decomposition(&left).unwrap(), full_decomposition(&right).unwrap());
        ensure(cl.len() == cr.len() && cl.len() == 3, || {
            format!("triple {i}: chain lengths {} and {}", cl.len(), cr.len())
        })?;
        ensure(cl.recompose() == left && cr.recompose() == right, || format!("triple {i}: chain recomposition"))?;
        *lengths.entry(cl.len()).or_insert(0) += 1;
    }
    Ok(format!("200 round trips, 50 triples, chain lengths {lengths:?}"))
}

// 4 -------------------------------------------------------------------------

const SEEDS: u64 = 20;
const TRIALS: usize = 2000;
const TOLERANCE: f64 = 0.15;

fn evidence_cross_validation() -> Outcome1 {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut panel = Vec::new();
    while panel.len() < 50 {
        let deg = rng.gen_range(4..=8);
        let f = random_poly(&mut rng, deg, -3, 3);
        let r = critical_report(&f).unwrap();
        if r.collision_class == CollisionClass::AllDistinct && r.distinct_critical_points >= 2 {
            panel.push(f);
        }
    }
    let mut classes = std::collections::BTreeMap::new();
    let (mut within, mut raw_within, mut worst) = (0usize, 0usize, 0.0f64);
    for f in &panel {
        let n = f.degree().unwrap();
        let c = classify(f).unwrap();
        ensure(c.classification.implies_doubly_transitive(n), || {
            format!("{f} classified {}", c.classification)
        })?;
        *classes.entry(c.classification.name()).or_insert(0) += 1;
        let mut ok = 0;
        for seed in 1..=SEEDS {
            let e = evidence(f, TRIALS, seed).unwrap();
            let est = e.rank_estimate;
            worst = worst.max((est - 2.0).abs());
            if e.two_transitive_consistent == Some(true) {
                ok += 1;
            }
            if (e.mean_r2 - 2.0).abs() <= TOLERANCE {
                raw_within += 1;
            }
        }
        ensure(ok * 100 >= 95 * SEEDS as usize, || format!("{f}: only {ok}/{SEEDS} seeds consistent"))?;
        within += ok;
    }
    let d4 = d(4, 1);
    let mut d4_ok = 0;
    for seed in 1..=SEEDS {
        let e = evidence(&d4, TRIALS, seed).unwrap();
        if (e.rank_estimate - 3.0).abs() <= TOLERANCE {
            d4_ok += 1;
        }
    }
    ensure(d4_ok * 100 >= 95 * SEEDS as usize, || format!("D4: {d4_ok}/{SEEDS} seeds within {TOLERANCE} of 3"))?;
    let total = panel.len() * SEEDS as usize;
    Ok(format!(
        "classes {classes:?}; rank estimate within {TOLERANCE} of 2 on {within}/{total} runs \
         (max deviation {worst:.3}; raw mean r^2 within on {raw_within}/{total}); D4 {d4_ok}/{SEEDS} near 3"
    ))
}

// 5 -------------------------------------------------------------------------

fn truncated_binomials() -> Outcome1 {
    let mut count = 0;
    for n in 5..=20usize {
        for k in 3..n - 1 {
            let f = generate(&FamilySpec::TruncBinomial(n, k)).unwrap();
            let class = critical_report(&f).unwrap().collision_class;
            ensure(class == CollisionClass::AllDistinct, || format!("P({n}, {k}) is {class}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} polynomials AllDistinct"))
}

// 6 -------------------------------------------------------------------------

fn class_of(spec: &FamilySpec) -> CollisionClass {
    critical_report(&generate(spec).unwrap()).unwrap().collision_class
}

fn family_suite() -> Outcome1 {
    use CollisionClass::*;
    for n in 3..=12 {
        ensure(class_of(&FamilySpec::Geometric(n)) == AllDistinct, || format!("geometric {n}"))?;
    }
    for n in 3..=10 {
        ensure(class_of(&FamilySpec::TaylorExp(n)) == AllDistinct, || format!("taylor-exp {n}"))?;
    }
    for m in 2..=10 {
        for dd in [1, 2] {
            let spec = FamilySpec::RisingFactorial(m, q(dd));
            ensure(class_of(&spec) <= AtMostTwoEqual, || format!("{spec}"))?;
        }
    }
    for n in (3..=15).step_by(2) {
        let spec = FamilySpec::PowerDiff(n);
        let f = generate(&spec).unwrap();
        let inner = p(&[0, 1, 1]);
        let through = if n == 3 {
            // degree 2: 3(x² + x) + 1
            f == p(&[1, 3, 3])
        } else {
            right_factor(&f, 2).unwrap().is_some_and(|b| b.inner == inner)
        };
        ensure(through, || format!("{spec} does not factor through x^2+x"))?;
        ensure(class_of(&spec) <= AtMostTwoEqual, || format!("{spec}"))?;
    }
    for n in 0..=12i64 {
        let spec = FamilySpec::ChebyshevU(n as usize);
        let u = generate(&spec).unwrap();
        let (u1, u2) = (u.derivative(), u.derivative().derivative());
        let residual = &(&(&p(&[1, 0, -1]) * &u2) - &(&p(&[0, 3]) * &u1)) + &u.scale(&q(n * (n + 2)));
        ensure(residual.is_zero(), || format!("{spec} differential equation"))?;
        if n >= 2 {
            ensure(class_of(&spec) <= AtMostTwoEqual, || format!("{spec}"))?;
        }
    }
    Ok("geometric, taylor-exp, rising-factorial, power-diff, chebyshev-u".into())
}

// 7 -------------------------------------------------------------------------

fn shape_detectors() -> Outcome1 {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut perturbed_absent = 0;
    let mut made = 0;
    while made < 100 {
        let (k0, k1, t) = (rng.gen_range(1..=3), rng.gen_range(1..=3), rng.gen_range(2..=3));
        let x0 = random_rational(&mut rng, 4);
        let x1 = random_rational(&mut rng, 4);
        if x0 == x1 || k0 + k1 < 3 {
            continue;
        }
        let c1 = random_nonzero_rational(&mut rng, 4);
        let c0 = random_rational(&mut rng, 4);
        let base = &Poly::linear(q(1), -x0).pow(k0) * &Poly::linear(q(1), -x1).pow(k1);
        let f = &base.scale(&c1).pow(t) + &Poly::constant(c0);
        let w = detect_poss11(&f).unwrap().ok_or_else(|| format!("Poss11 missed on {f}"))?;
        ensure(w.inner_decomposition.recompose() == f, || format!("Poss11 witness for {f}"))?;
        let mut c = f.coeffs().to_vec();
        let i = rng.gen_range(0..c.len() - 1);
        c[i] += q(1);
        if detect_poss11(&Poly::from_coeffs(c)).unwrap().is_none() {
            perturbed_absent += 1;
        }
        made += 1;
    }
    for i in 0..20 {
        let r1 = rng.gen_range(-3..=3);
        let r2 = r1 + rng.gen_range(1..=3);
        let h = integrate(&(&p(&[-r1, 1]) * &p(&[-r2, 1])));
        let (v1, v2) = (h.eval(&q(r1)), h.eval(&q(r2)));
        let (t0, t1) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let gp = &Poly::linear(q(1), -v1).pow(t0) * &Poly::linear(q(1), -v2).pow(t1);
        let g = &integrate(&gp).scale(&random_nonzero_rational(&mut rng, 3)) + &Poly::constant(q(i));
        let f = compose(&g, &h);
        let w = detect_poss21(&f).unwrap().ok_or_else(|| format!("Poss21 missed on {f}"))?;
        ensure(w.inner_decomposition.recompose() == f, || format!("Poss21 witness for {f}"))?;
    }
    let x6 = p(&[0, 0, 0, 0, 0, 0, 1]);
    let x9 = Poly::monomial(q(1), 9);
    let d9 = compose(&d(3, 1), &d(3, 1));
    ensure(detect_poss11(&d(6, 1)).unwrap().is_none(), || "D6 accepted as Poss11".into())?;
    ensure(detect_poss11(&x6).unwrap().is_none(), || "x^6 accepted as Poss11".into())?;
    ensure(detect_poss21(&x9).unwrap().is_none(), || "x^9 accepted as Poss21".into())?;
    ensure(detect_poss21(&d9).unwrap().is_none(), || "D9 accepted as Poss21".into())?;
    Ok(format!("100 Poss11 + 20 Poss21 recomposed; {perturbed_absent}/100 perturbations absent; rejections hold"))
}

fn integrate(f: &Poly) -> Poly {
    let mut c = vec![q(0)];
    c.extend(f.coeffs().iter().enumerate().map(|(i, a)| a / q(i as i64 + 1)));
    Poly::from_coeffs(c)
}

// 8 -------------------------------------------------------------------------

fn expect_outcome(f: &Poly, g: &Poly, want: critval_core::Outcome) -> std::result::Result<Verdict, String> {
    let v = decide(f, g).unwrap();
    ensure(v.outcome == want, || format!("({f}, {g}): {} instead of {}", v.outcome.name(), want.name()))?;
    if want == critval_core::Outcome::PossiblyInfinite {
        let (a, b) = if v.swapped { (g, f) } else { (f, g) };
        let cert = v.certificate.as_ref().ok_or("missing certificate")?;
        ensure(cert.verify(a, b), || format!("({f}, {g}): certificate does not recompose"))?;
    }
    if want == critval_core::Outcome::Inconclusive {
        ensure(v.reasons.iter().any(|r| !r.passed), || format!("({f}, {g}): no failing reason"))?;
    }
    Ok(v)
}

fn decision_procedure() -> Outcome1 {
    use critval_core::Outcome::*;
    let templates = [
        (d(3, 1), d(4, 1)),
        (d(3, 1), d(5, 1)),
        (d(4, 1), d(5, 1)),
        (p(&[0, 0, 0, -4, 3]), p(&[-1, 0, 1]).pow(3)),
    ];
    for (f, g) in &templates {
        expect_outcome(f, g, PossiblyInfinite)?;
    }
    let tb = |n, k| generate(&FamilySpec::TruncBinomial(n, k)).unwrap();
    let binomial_pairs = [((7, 4), (9, 5)), ((5, 3), (7, 4)), ((6, 3), (9, 6)), ((8, 4), (11, 7)), ((10, 5), (12, 8))];
    for ((n1, k1), (n2, k2)) in binomial_pairs {
        expect_outcome(&tb(n1, k1), &tb(n2, k2), Finite)?;
    }
    let mut gt = 0;
    for n in 3..=8 {
        for m in n + 1..=8 {
            let f = generate(&FamilySpec::Geometric(n)).unwrap();
            let g = generate(&FamilySpec::TaylorExp(m)).unwrap();
            expect_outcome(&f, &g, Finite)?;
            gt += 1;
        }
    }
    let w = p(&[-1, 0, 1]).pow(2);
    expect_outcome(&w, &w, Inconclusive)?;
    expect_outcome(&w, &w.shift(&q(1)), Inconclusive)?;
    expect_outcome(&d(5, 1), &d(6, 1), Inconclusive)?;
    Ok(format!("4 templates certified; {} binomial and {gt} geometric/taylor pairs Finite; 3 Inconclusive", binomial_pairs.len()))
}

// 9 -------------------------------------------------------------------------

fn phi_oracle() -> Outcome1 {
    let mut polys = Vec::new();
    for code in 0..3usize.pow(5) {
        let c: Vec<i64> = (0..5).map(|i| (code / 3usize.pow(i)) as i64 % 3 - 1).collect();
        if c[4] != 0 {
            polys.push(p(&c));
        }
    }
    // φ only depends on f up to adding a constant and scaling
    let mut classes: Vec<Poly> = polys
        .iter()
        .map(|f| (f - &Poly::constant(f.coeff(0))).monic())
        .collect();
    classes.sort_by_key(|f| f.to_string());
    classes.dedup();
    let (mut irreducible, mut reducible, mut dickson_checked) = (0, 0, 0);
    for f in &polys {
        match phi_irreducible(f).unwrap() {
            PhiVerdict::Irreducible => {
                ensure(phi_linear_factor(f).is_none(), || format!("{f}: Irreducible but has a linear factor"))?;
                irreducible += 1;
            }
            PhiVerdict::Reducible => {
                ensure(phi_linear_factor(f).is_some(), || format!("{f}: Reducible but no rational factor"))?;
                if let Some(form) = dickson_detect(f).unwrap() {
                    for y0 in [q(0), q(1), q(-2), qq(1, 3)] {
                        ensure(dickson_factors_divide(f, &form.gamma, &form.beta, &y0), || {
                            format!("{f}: Dickson factors fail at y = {y0}")
                        })?;
                    }
                    dickson_checked += 1;
                }
                reducible += 1;
            }
            PhiVerdict::Unknown => return Err(format!("{f}: Unknown verdict")),
        }
    }
    ensure(dickson_checked > 0, || "no Dickson case exercised".into())?;
    Ok(format!(
        "{} polynomials ({} up to constants and scaling): {irreducible} Irreducible, {reducible} Reducible, \
         {dickson_checked} Dickson factorizations confirmed",
        polys.len(),
        classes.len()
    ))
}

// ---------------------------------------------------------------------------

fn main() {
    let criteria: [(&str, u64, fn() -> Outcome1); 9] = [
        ("dickson identity suite", 5, dickson_identities),
        ("critical-value law for Dickson", 5, dickson_critical_law),
        ("decomposition round-trip and chain invariance", 30, decomposition_round_trip),
        ("monodromy vs cycle-type evidence", 120, evidence_cross_validation),
        ("truncated binomials AllDistinct", 60, truncated_binomials),
        ("family suite", 60, family_suite),
        ("shape detectors", 30, shape_detectors),
        ("decision procedure", 60, decision_procedure),
        ("difference-quotient oracle", 300, phi_oracle),
    ];
    let mut failures = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(*budget);
        let (status, detail) = match (&result, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; exceeded {budget} s budget")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!("{status} criterion {}: {name} [{:.2} s / {budget} s] {detail}", i + 1, elapsed.as_secs_f64());
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
