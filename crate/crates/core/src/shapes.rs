//! Exceptional derivative shapes, quadratic covers `g = f ∘ ν`, and the
//! sporadic pairs of degrees (3,4), (3,5), (4,5), (4,6).
//!
//! The shape detectors work on the rational normal-form decomposition, so
//! conjugate irrational critical points need no special handling.

use std::fmt;

use num_traits::Zero;

use crate::decompose::{is_indecomposable, linear_equivalence, right_factor, Bidecomposition};
use crate::dickson::{dickson_detect, dickson_poly};
use crate::error::{domain, Result};
use crate::ratpoly::{
    compose, rat, rational_nth_roots, squarefree_decompose, value_resultant, Poly, Rational,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShapeKind {
    /// `f = c₁((x − x₀)^k₀ (x − x₁)^k₁)^t + c₀`.
    Poss11,
    /// `f = outer ∘ inner` with cubic `inner` that has a double point over
    /// each of the two critical values of `outer`.
    Poss21,
}

impl ShapeKind {
    pub fn name(self) -> &'static str {
        match self {
            ShapeKind::Poss11 => "Poss11",
            ShapeKind::Poss21 => "Poss21",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeWitness {
    pub kind: ShapeKind,
    /// Degree of the outer factor.
    pub t: usize,
    pub inner_decomposition: Bidecomposition,
    /// `(k₀, k₁)` for `Poss11`, `(t₀, t₁)` for `Poss21`; ascending.
    pub profile: (usize, usize),
}

/// Multiplicities of the two distinct roots of a polynomial whose radical
/// has degree 2.
fn two_root_profile(f: &Poly) -> Result<Option<(usize, usize)>> {
    let sq = squarefree_decompose(f)?;
    let mut mults = Vec::new();
    for (part, m) in &sq.parts {
        for _ in 0..part.degree().unwrap_or(0) {
            mults.push(*m);
        }
    }
    if mults.len() != 2 {
        return Ok(None);
    }
    mults.sort_unstable();
    Ok(Some((mults[0], mults[1])))
}

pub fn detect_poss11(f: &Poly) -> Result<Option<ShapeWitness>> {
    let n = f.degree().unwrap_or(0);
    if n < 6 || crate::decompose::is_prime(n) {
        return domain(format!("Poss11 detection needs composite degree >= 6, got {n}"));
    }
    for t in (2..=n / 3).filter(|t| n % t == 0) {
        let Some(b) = right_factor(f, n / t)? else { continue };
        let rad = squarefree_decompose(&b.outer.derivative())?.radical();
        if rad.degree() != Some(1) {
            continue;
        }
        let gamma0 = -rad.coeff(0) / rad.coeff(1);
        let shifted = &b.inner - &Poly::constant(gamma0);
        if let Some(profile) = two_root_profile(&shifted)? {
            return Ok(Some(ShapeWitness {
                kind: ShapeKind::Poss11,
                t,
                inner_decomposition: b,
                profile,
            }));
        }
    }
    Ok(None)
}

pub fn detect_poss21(f: &Poly) -> Result<Option<ShapeWitness>> {
    let n = f.degree().unwrap_or(0);
    if n < 6 || n % 3 != 0 {
        return domain(format!("Poss21 detection needs degree divisible by 3 and >= 6, got {n}"));
    }
    let Some(b) = right_factor(f, 3)? else { return Ok(None) };
    let outer_prime = b.outer.derivative();
    let Some(profile) = two_root_profile(&outer_prime)? else { return Ok(None) };
    let rad = squarefree_decompose(&outer_prime)?.radical();
    // Critical values of the cubic inner factor, as a quadratic in γ.
    let rho = value_resultant(&b.inner, &b.inner.derivative())?;
    if rho.is_zero() || !rad.divides(&rho) {
        return Ok(None);
    }
    Ok(Some(ShapeWitness { kind: ShapeKind::Poss21, t: n / 3, inner_decomposition: b, profile }))
}

/// The quadratic `ν` with `g = f ∘ ν`, for indecomposable `f`.
pub fn quadratic_cover(f: &Poly, g: &Poly) -> Result<Option<Poly>> {
    let n = f.degree().unwrap_or(0);
    if n < 2 || g.degree() != Some(2 * n) {
        return domain(format!(
            "quadratic cover needs deg g = 2 deg f >= 4, got {} and {}",
            f.degree_i64(),
            g.degree_i64()
        ));
    }
    if !is_indecomposable(f)? {
        return domain("quadratic cover needs an indecomposable f");
    }
    let Some(b) = right_factor(g, 2)? else { return Ok(None) };
    let Some((u, v)) = linear_equivalence(&b.outer, f) else { return Ok(None) };
    let nu = &b.inner.scale(&u) + &Poly::constant(v);
    Ok((compose(f, &nu) == *g).then_some(nu))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairKind {
    Dickson34,
    Dickson35,
    Dickson45,
    FifthKind,
}

impl PairKind {
    pub fn name(self) -> &'static str {
        match self {
            PairKind::Dickson34 => "Dickson34",
            PairKind::Dickson35 => "Dickson35",
            PairKind::Dickson45 => "Dickson45",
            PairKind::FifthKind => "FifthKind",
        }
    }

    fn degrees(self) -> (usize, usize) {
        match self {
            PairKind::Dickson34 => (3, 4),
            PairKind::Dickson35 => (3, 5),
            PairKind::Dickson45 => (4, 5),
            PairKind::FifthKind => (4, 6),
        }
    }

    /// `(f₁, g₁)` at parameter `a`.
    pub fn templates(self, a: &Rational) -> (Poly, Poly) {
        let (k, l) = self.degrees();
        match self {
            PairKind::FifthKind => {
                let f1 = Poly::from_ints(&[0, 0, 0, -4, 3]);
                let q = Poly::from_coeffs(vec![rat(-1), rat(0), a.clone()]);
                (f1, q.pow(3))
            }
            _ => (
                dickson_poly(k, &num_traits::pow(a.clone(), l)),
                dickson_poly(l, &num_traits::pow(a.clone(), k)),
            ),
        }
    }
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `f = e₁·f₁(c₁x + c₀) + e₀` and `g = e₁·g₁(d₁x + d₀) + e₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCertificate {
    pub kind: PairKind,
    pub a: Rational,
    pub e1: Rational,
    pub e0: Rational,
    pub c1: Rational,
    pub c0: Rational,
    pub d1: Rational,
    pub d0: Rational,
}

impl PairCertificate {
    /// The two right-hand sides, expanded.
    pub fn recompose(&self) -> (Poly, Poly) {
        let (f1, g1) = self.kind.templates(&self.a);
        let side = |t: &Poly, u1: &Rational, u0: &Rational| {
            &t.compose_linear(u1, u0).scale(&self.e1) + &Poly::constant(self.e0.clone())
        };
        (side(&f1, &self.c1, &self.c0), side(&g1, &self.d1, &self.d0))
    }

    pub fn verify(&self, f: &Poly, g: &Poly) -> bool {
        let (rf, rg) = self.recompose();
        rf == *f && rg == *g
    }
}

pub fn match_dem22_pair(f: &Poly, g: &Poly) -> Result<Option<PairCertificate>> {
    let kind = match (f.degree(), g.degree()) {
        (Some(3), Some(4)) => PairKind::Dickson34,
        (Some(3), Some(5)) => PairKind::Dickson35,
        (Some(4), Some(5)) => PairKind::Dickson45,
        (Some(4), Some(6)) => PairKind::FifthKind,
        _ => {
            return domain(format!(
                "no sporadic pair has degrees ({}, {})",
                f.degree_i64(),
                g.degree_i64()
            ))
        }
    };
    let cert = match kind {
        PairKind::FifthKind => match_fifth_kind(f, g),
        _ => match_dickson_pair(kind, f, g)?,
    };
    Ok(cert.filter(|c| c.verify(f, g)))
}

/// Writing `f = s·D_k(x + γ, β) + e₀`, a template match needs
/// `c₁² = a^l/β_f`, `d₁² = a^k/β_g` and `e₁ = s_f/c₁^k = s_g/d₁^l`.
/// Replacing `a` by `a·w²` rescales a solution, so only the square class of
/// `a` matters, and it is forced to be that of `β_f` or `β_g` because one of
/// `k`, `l` is odd.
fn match_dickson_pair(kind: PairKind, f: &Poly, g: &Poly) -> Result<Option<PairCertificate>> {
    let (k, l) = kind.degrees();
    let (Some(ff), Some(gf)) = (dickson_detect(f)?, dickson_detect(g)?) else {
        return Ok(None);
    };
    if ff.e0 != gf.e0 || ff.beta.is_zero() || gf.beta.is_zero() {
        return Ok(None);
    }
    let lhs = &ff.scale * &ff.scale * num_traits::pow(ff.beta.clone(), k);
    let rhs = &gf.scale * &gf.scale * num_traits::pow(gf.beta.clone(), l);
    if lhs != rhs {
        return Ok(None);
    }
    for a in [ff.beta.clone(), gf.beta.clone()] {
        let c1s = rational_nth_roots(&(num_traits::pow(a.clone(), l) / &ff.beta), 2);
        let d1s = rational_nth_roots(&(num_traits::pow(a.clone(), k) / &gf.beta), 2);
        for c1 in &c1s {
            let e1 = &ff.scale / num_traits::pow(c1.clone(), k);
            for d1 in &d1s {
                if &gf.scale / num_traits::pow(d1.clone(), l) != e1 {
                    continue;
                }
                let cert = PairCertificate {
                    kind,
                    a: a.clone(),
                    e1: e1.clone(),
                    e0: ff.e0.clone(),
                    c1: c1.clone(),
                    c0: c1 * &ff.gamma,
                    d1: d1.clone(),
                    d0: d1 * &gf.gamma,
                };
                if cert.verify(f, g) {
                    return Ok(Some(cert));
                }
            }
        }
    }
    Ok(None)
}

/// `3X⁴ − 4X³` has a double critical point at `X = 0` (value 0) and a simple
/// one at `X = 1` (value −1), which fixes `c₁, c₀, e₁, e₀` from `f`. On the
/// `g` side `d₁ = 1` is a normalization.
fn match_fifth_kind(f: &Poly, g: &Poly) -> Option<PairCertificate> {
    let sq = squarefree_decompose(&f.derivative()).ok()?;
    let (double, simple) = (sq.part(2), sq.part(1));
    if double.degree() != Some(1) || simple.degree() != Some(1) {
        return None;
    }
    let x0 = -double.coeff(0) / double.coeff(1);
    let x1 = -simple.coeff(0) / simple.coeff(1);
    let e0 = f.eval(&x0);
    let e1 = &e0 - f.eval(&x1);
    if e1.is_zero() {
        return None;
    }
    let c1 = (&x1 - &x0).recip();
    let c0 = -(&c1 * &x0);
    let a = rational_nth_roots(&(g.lc() / &e1), 3).into_iter().next()?;
    // x⁵ coefficient of e₁(a(x + d₀)² − 1)³ is 6e₁a³d₀.
    let d0 = g.coeff(5) / (rat(6) * &e1 * num_traits::pow(a.clone(), 3));
    Some(PairCertificate { kind: PairKind::FifthKind, a, e1, e0, c1, c0, d1: rat(1), d0 })
}
