//! Finiteness of bounded-denominator solutions of `f(x) = g(y)`.
//!
//! Two sufficient-condition procedures are implemented: one for pairs whose
//! critical values are pairwise distinct ([`decide_dem`]) and one for pairs
//! of different degrees where at most two critical points share a value
//! ([`decide_dem2`]). Every hypothesis is checked and recorded; anything the
//! procedures do not cover comes back `Inconclusive`.

use std::fmt;

use crate::critical::{critical_report, CollisionClass};
use crate::decompose::{is_indecomposable, linear_equivalence};
use crate::error::{domain, Result};
use crate::ratpoly::{compose, Poly, Rational};
use crate::shapes::{
    detect_poss11, detect_poss21, match_dem22_pair, quadratic_cover, PairCertificate,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Finite,
    PossiblyInfinite,
    Inconclusive,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Outcome::Finite => "Finite",
            Outcome::PossiblyInfinite => "PossiblyInfinite",
            Outcome::Inconclusive => "Inconclusive",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which procedure produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// Distinct critical values: infinite iff `f = g ∘ μ` with linear `μ`.
    Dem,
    /// At most two equal critical values, `deg f < deg g`.
    Dem2,
    /// Neither procedure applied.
    None,
}

impl Theorem {
    pub fn id(self) -> &'static str {
        match self {
            Theorem::Dem => "dem",
            Theorem::Dem2 => "dem2",
            Theorem::None => "none",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `f(x) = g(u x + v)`.
    Linear { u: Rational, v: Rational },
    /// `g(x) = f(ν(x))`.
    Quadratic { nu: Poly },
    Pair(PairCertificate),
}

impl Certificate {
    pub fn verify(&self, f: &Poly, g: &Poly) -> bool {
        match self {
            Certificate::Linear { u, v } => g.compose_linear(u, v) == *f,
            Certificate::Quadratic { nu } => compose(f, nu) == *g,
            Certificate::Pair(c) => c.verify(f, g),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisCheck {
    /// `"f"`, `"g"` or `"pair"`.
    pub subject: String,
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

impl HypothesisCheck {
    fn new(subject: &str, check: &str, passed: bool, detail: impl Into<String>) -> Self {
        HypothesisCheck {
            subject: subject.to_string(),
            check: check.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub theorem: Theorem,
    /// Refers to `f` and `g` after ordering by degree.
    pub certificate: Option<Certificate>,
    pub reasons: Vec<HypothesisCheck>,
    /// `decide` exchanged its arguments to put the lower degree first.
    pub swapped: bool,
}

impl Verdict {
    fn new(outcome: Outcome, theorem: Theorem, reasons: Vec<HypothesisCheck>) -> Self {
        Verdict { outcome, theorem, certificate: None, reasons, swapped: false }
    }

    fn hypotheses_hold(reasons: &[HypothesisCheck]) -> bool {
        reasons.iter().all(|r| r.passed)
    }
}

/// Degree, collision class and critical-point count of one side.
fn side_checks(name: &str, f: &Poly, worst: CollisionClass) -> Vec<HypothesisCheck> {
    let n = f.degree().unwrap_or(0);
    let mut out = vec![HypothesisCheck::new(name, "degree >= 3", n >= 3, format!("degree {n}"))];
    if n < 2 {
        return out;
    }
    let report = critical_report(f).expect("degree checked");
    let class = report.collision_class;
    out.push(HypothesisCheck::new(
        name,
        &format!("collision class <= {worst}"),
        class <= worst,
        format!("class {class}"),
    ));
    out.push(HypothesisCheck::new(
        name,
        "at least two distinct critical points",
        report.distinct_critical_points >= 2,
        format!("{} distinct critical points", report.distinct_critical_points),
    ));
    out
}

fn shape_checks(name: &str, f: &Poly) -> Result<Vec<HypothesisCheck>> {
    let n = f.degree().unwrap_or(0);
    let mut out = Vec::new();
    if n >= 6 && !crate::decompose::is_prime(n) {
        let w = detect_poss11(f)?;
        let detail = match &w {
            Some(w) => format!("witness t={} profile {:?}", w.t, w.profile),
            None => "absent".to_string(),
        };
        out.push(HypothesisCheck::new(name, "no Poss11 shape", w.is_none(), detail));
    }
    if n >= 6 && n % 3 == 0 {
        let w = detect_poss21(f)?;
        let detail = match &w {
            Some(w) => format!("witness t={} profile {:?}", w.t, w.profile),
            None => "absent".to_string(),
        };
        out.push(HypothesisCheck::new(name, "no Poss21 shape", w.is_none(), detail));
    }
    Ok(out)
}

pub fn decide_dem(f: &Poly, g: &Poly) -> Result<Verdict> {
    let mut reasons = side_checks("f", f, CollisionClass::AllDistinct);
    reasons.extend(side_checks("g", g, CollisionClass::AllDistinct));
    if !Verdict::hypotheses_hold(&reasons) {
        return Ok(Verdict::new(Outcome::Inconclusive, Theorem::Dem, reasons));
    }
    match linear_equivalence(f, g) {
        Some((u, v)) => {
            reasons.push(HypothesisCheck::new("pair", "f = g(u x + v)", true, format!("u={u} v={v}")));
            let mut verdict = Verdict::new(Outcome::PossiblyInfinite, Theorem::Dem, reasons);
            verdict.certificate = Some(Certificate::Linear { u, v });
            Ok(verdict)
        }
        None => {
            reasons.push(HypothesisCheck::new("pair", "f = g(u x + v)", false, "no linear relation"));
            Ok(Verdict::new(Outcome::Finite, Theorem::Dem, reasons))
        }
    }
}

pub fn decide_dem2(f: &Poly, g: &Poly) -> Result<Verdict> {
    let (m, n) = (f.degree().unwrap_or(0), g.degree().unwrap_or(0));
    let mut reasons = vec![HypothesisCheck::new(
        "pair",
        "3 <= deg f < deg g",
        3 <= m && m < n,
        format!("degrees ({m}, {n})"),
    )];
    reasons.extend(side_checks("f", f, CollisionClass::AtMostTwoEqual));
    reasons.extend(side_checks("g", g, CollisionClass::AtMostTwoEqual));
    if !Verdict::hypotheses_hold(&reasons) {
        return Ok(Verdict::new(Outcome::Inconclusive, Theorem::Dem2, reasons));
    }
    reasons.extend(shape_checks("f", f)?);
    reasons.extend(shape_checks("g", g)?);
    if !Verdict::hypotheses_hold(&reasons) {
        return Ok(Verdict::new(Outcome::Inconclusive, Theorem::Dem2, reasons));
    }

    if matches!((m, n), (3, 4) | (3, 5) | (4, 5) | (4, 6)) {
        if let Some(cert) = match_dem22_pair(f, g)? {
            reasons.push(HypothesisCheck::new("pair", "sporadic pair", true, cert.kind.name()));
            let mut verdict = Verdict::new(Outcome::PossiblyInfinite, Theorem::Dem2, reasons);
            verdict.certificate = Some(Certificate::Pair(cert));
            return Ok(verdict);
        }
        reasons.push(HypothesisCheck::new("pair", "sporadic pair", false, "no template matches"));
    }
    if n == 2 * m {
        if is_indecomposable(f)? {
            if let Some(nu) = quadratic_cover(f, g)? {
                reasons.push(HypothesisCheck::new("pair", "g = f(nu)", true, format!("nu={nu}")));
                let mut verdict = Verdict::new(Outcome::PossiblyInfinite, Theorem::Dem2, reasons);
                verdict.certificate = Some(Certificate::Quadratic { nu });
                return Ok(verdict);
            }
            reasons.push(HypothesisCheck::new("pair", "g = f(nu)", false, "no quadratic nu"));
        } else {
            reasons.push(HypothesisCheck::new("pair", "g = f(nu)", false, "f is decomposable"));
        }
    }
    Ok(Verdict::new(Outcome::Finite, Theorem::Dem2, reasons))
}

/// Orders the pair by degree, then tries [`decide_dem`] and [`decide_dem2`].
pub fn decide(f: &Poly, g: &Poly) -> Result<Verdict> {
    for (name, p) in [("f", f), ("g", g)] {
        if p.degree().unwrap_or(0) < 3 {
            return domain(format!("{name} must have degree >= 3, got {}", p.degree_i64()));
        }
    }
    let swapped = f.degree() > g.degree();
    let (f, g) = if swapped { (g, f) } else { (f, g) };

    let dem = decide_dem(f, g)?;
    if dem.outcome != Outcome::Inconclusive {
        return Ok(Verdict { swapped, ..dem });
    }
    let mut reasons = dem.reasons;
    if f.degree() == g.degree() {
        reasons.push(HypothesisCheck::new(
            "pair",
            "distinct degrees",
            false,
            "equal degrees with shared critical values are not covered",
        ));
    } else {
        let dem2 = decide_dem2(f, g)?;
        if dem2.outcome != Outcome::Inconclusive {
            return Ok(Verdict { swapped, ..dem2 });
        }
        for r in dem2.reasons {
            if !reasons.contains(&r) {
                reasons.push(r);
            }
        }
    }
    Ok(Verdict { swapped, ..Verdict::new(Outcome::Inconclusive, Theorem::None, reasons) })
}
