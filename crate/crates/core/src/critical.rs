//! Critical-point and critical-value structure, computed without leaving `Q`.
//!
//! Critical values are never materialised as algebraic numbers. Instead the
//! collision polynomial `R(t) = Res_x(f(x) − t, s(x))`, with `s` the
//! squarefree part of `f′`, has one root per critical value, with multiplicity
//! equal to the number of distinct critical points sharing that value.

use std::fmt;

use crate::error::{domain, Result};
use crate::ratpoly::{gcd, squarefree_decompose, value_resultant, Poly, SquarefreeDecomposition};

/// How many distinct critical points can share one critical value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CollisionClass {
    AllDistinct,
    AtMostTwoEqual,
    ThreeOrMoreEqual,
}

impl CollisionClass {
    pub fn name(self) -> &'static str {
        match self {
            CollisionClass::AllDistinct => "AllDistinct",
            CollisionClass::AtMostTwoEqual => "AtMostTwoEqual",
            CollisionClass::ThreeOrMoreEqual => "ThreeOrMoreEqual",
        }
    }
}

impl fmt::Display for CollisionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalReport {
    pub degree: usize,
    /// Degree of the squarefree part of `f′`.
    pub distinct_critical_points: usize,
    pub simple_critical_points: usize,
    /// `(multiplicity as a root of f′, number of such critical points)`.
    pub multiplicity_profile: Vec<(usize, usize)>,
    pub collision_class: CollisionClass,
    /// Some critical point of multiplicity ≤ 2 has a value shared with no
    /// other critical point.
    pub has_low_mult_distinct_witness: bool,
    /// Whether that witness can be taken to be a simple critical point.
    pub has_simple_distinct_witness: bool,
    pub collision_poly: Poly,
}

/// `Res_x(f(x) − t, squarefree(f′))` as a polynomial in `t`.
pub fn collision_poly(f: &Poly) -> Result<Poly> {
    let sq = derivative_structure(f)?;
    value_resultant(f, &sq.radical())
}

fn derivative_structure(f: &Poly) -> Result<SquarefreeDecomposition> {
    match f.degree() {
        Some(d) if d >= 2 => squarefree_decompose(&f.derivative()),
        _ => domain(format!("critical analysis needs degree >= 2, got {}", f.degree_i64())),
    }
}

pub fn critical_report(f: &Poly) -> Result<CriticalReport> {
    let degree = f.degree().unwrap_or(0);
    let fprime = derivative_structure(f)?;
    let s = fprime.radical();
    let r = value_resultant(f, &s)?;
    let rsq = squarefree_decompose(&r)?;

    let collision_class = match rsq.max_multiplicity() {
        0 | 1 => CollisionClass::AllDistinct,
        2 => CollisionClass::AtMostTwoEqual,
        _ => CollisionClass::ThreeOrMoreEqual,
    };

    let multiplicity_profile: Vec<(usize, usize)> = fprime
        .parts
        .iter()
        .map(|(p, m)| (*m, p.degree().unwrap_or(0)))
        .collect();
    let simple = fprime.part(1);

    // Values carried by exactly one critical point.
    let unshared = rsq.part(1);
    let witness_for = |points: &Poly| -> Result<bool> {
        if points.is_constant() || unshared.is_constant() {
            return Ok(false);
        }
        let values = value_resultant(f, points)?;
        Ok(!gcd(&unshared, &values)?.is_constant())
    };
    let low = fprime
        .parts
        .iter()
        .filter(|(_, m)| *m <= 2)
        .fold(Poly::one(), |acc, (p, _)| &acc * p);

    Ok(CriticalReport {
        degree,
        distinct_critical_points: s.degree().unwrap_or(0),
        simple_critical_points: simple.degree().unwrap_or(0),
        multiplicity_profile,
        collision_class,
        has_low_mult_distinct_witness: witness_for(&low)?,
        has_simple_distinct_witness: witness_for(&simple)?,
        collision_poly: r,
    })
}
