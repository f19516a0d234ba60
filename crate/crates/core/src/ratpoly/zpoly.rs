//! Integer-coefficient helpers used by the fraction-free gcd and resultant
//! routines.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Poly, Rational};

/// Ascending coefficients, no trailing zeros.
pub(crate) type ZPoly = Vec<BigInt>;

pub(crate) fn trim(p: &mut ZPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn degree(p: &ZPoly) -> usize {
    p.len() - 1
}

/// Splits `p` as `content * prim` with `prim` integral, primitive and
/// positive-leading. `p` must be nonzero.
pub(crate) fn primitive_split(p: &Poly) -> (Rational, ZPoly) {
    let den = p.denominator_lcm();
    let ints: ZPoly = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if ints.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    let prim = ints.iter().map(|c| c / &g).collect();
    (Rational::new(g, den), prim)
}

pub(crate) fn primitive_part(p: &ZPoly) -> ZPoly {
    let mut g = p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if p.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    if g.is_one() {
        return p.clone();
    }
    p.iter().map(|c| c / &g).collect()
}

pub(crate) fn to_poly(p: &ZPoly) -> Poly {
    Poly::from_coeffs(p.iter().map(|c| Rational::from_integer(c.clone())).collect())
}

/// Pseudo-remainder: `lc(b)^(deg a − deg b + 1) · a = q·b + r`.
pub(crate) fn prem(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let db = degree(b);
    let mut r = a.clone();
    if r.len() <= db {
        return r;
    }
    let lb = &b[db];
    let mut steps = r.len() - db;
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let shift = dr - db;
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
        trim(&mut r);
        steps -= 1;
    }
    if steps > 0 {
        let f = num_traits::pow(lb.clone(), steps);
        for c in r.iter_mut() {
            *c *= &f;
        }
    }
    r
}

pub(crate) fn div_scalar_exact(p: &ZPoly, d: &BigInt) -> ZPoly {
    p.iter()
        .map(|c| {
            let (q, r) = c.div_rem(d);
            debug_assert!(r.is_zero(), "inexact division in subresultant sequence");
            q
        })
        .collect()
}
