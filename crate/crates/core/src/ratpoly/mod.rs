//! Exact rational arithmetic and the univariate polynomial kernel.

mod poly;
mod zpoly;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use poly::{Poly, Rational};
pub(crate) use poly::rat;
#[cfg(test)]
pub(crate) use poly::ratio;

use crate::error::{domain, Result};
use zpoly::ZPoly;

/// `f = unit · Π factorᵢ^multiplicityᵢ` with monic, squarefree, pairwise
/// coprime factors listed by strictly increasing multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub unit: Rational,
    pub parts: Vec<(Poly, usize)>,
}

impl SquarefreeDecomposition {
    /// Product of all factors taken once: the squarefree part of the input.
    pub fn radical(&self) -> Poly {
        self.parts.iter().fold(Poly::one(), |acc, (f, _)| &acc * f)
    }

    /// Factor carrying exactly multiplicity `m`, or `1` if there is none.
    pub fn part(&self, m: usize) -> Poly {
        self.parts
            .iter()
            .find(|(_, k)| *k == m)
            .map(|(f, _)| f.clone())
            .unwrap_or_else(Poly::one)
    }

    pub fn max_multiplicity(&self) -> usize {
        self.parts.last().map(|(_, m)| *m).unwrap_or(0)
    }

    pub fn expand(&self) -> Poly {
        let mut acc = Poly::constant(self.unit.clone());
        for (f, m) in &self.parts {
            acc = &acc * &f.pow(*m as u32);
        }
        acc
    }
}

/// Monic greatest common divisor, via the primitive remainder sequence over
/// `Z` to keep coefficient growth in check.
pub fn gcd(a: &Poly, b: &Poly) -> Result<Poly> {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return domain("gcd of two zero polynomials"),
        (true, false) => return Ok(b.monic()),
        (false, true) => return Ok(a.monic()),
        _ => {}
    }
    if a.is_constant() || b.is_constant() {
        return Ok(Poly::one());
    }
    let (_, mut u) = zpoly::primitive_split(a);
    let (_, mut v) = zpoly::primitive_split(b);
    if u.len() < v.len() {
        std::mem::swap(&mut u, &mut v);
    }
    loop {
        let r = zpoly::prem(&u, &v);
        if r.is_empty() {
            return Ok(zpoly::to_poly(&v).monic());
        }
        if r.len() == 1 {
            return Ok(Poly::one());
        }
        u = v;
        v = zpoly::primitive_part(&r);
    }
}

/// Yun's squarefree decomposition (characteristic zero).
pub fn squarefree_decompose(f: &Poly) -> Result<SquarefreeDecomposition> {
    if f.is_zero() {
        return domain("squarefree decomposition of the zero polynomial");
    }
    let unit = f.lc();
    let f = f.monic();
    let mut parts = Vec::new();
    if f.is_constant() {
        return Ok(SquarefreeDecomposition { unit, parts });
    }
    let df = f.derivative();
    let a0 = gcd(&f, &df)?;
    let mut b = f.exact_div(&a0).expect("gcd divides f");
    let c = df.exact_div(&a0).expect("gcd divides f'");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = gcd(&b, &d)?;
        b = b.exact_div(&a).expect("gcd divides b");
        let c = d.exact_div(&a).expect("gcd divides d");
        d = &c - &b.derivative();
        if !a.is_constant() {
            parts.push((a, i));
        }
        i += 1;
    }
    Ok(SquarefreeDecomposition { unit, parts })
}

/// Squarefree part (radical) of a nonzero polynomial, monic.
pub fn squarefree_part(f: &Poly) -> Result<Poly> {
    Ok(squarefree_decompose(f)?.radical())
}

/// Resultant `lc(a)^deg b · Π b(αᵢ)` over the roots of `a`, computed with the
/// subresultant polynomial remainder sequence on primitive integer parts.
pub fn resultant(a: &Poly, b: &Poly) -> Result<Rational> {
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return domain("resultant with a zero polynomial");
    };
    if da == 0 {
        return Ok(num_traits::pow(a.lc(), db));
    }
    if db == 0 {
        return Ok(num_traits::pow(b.lc(), da));
    }
    let (ca, pa) = zpoly::primitive_split(a);
    let (cb, pb) = zpoly::primitive_split(b);
    let scale = num_traits::pow(ca, db) * num_traits::pow(cb, da);
    Ok(scale * Rational::from_integer(subresultant(pa, pb)))
}

fn subresultant(mut a: ZPoly, mut b: ZPoly) -> BigInt {
    let mut sign = BigInt::one();
    if a.len() < b.len() {
        if zpoly::degree(&a) % 2 == 1 && zpoly::degree(&b) % 2 == 1 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let (dega, degb) = (zpoly::degree(&a), zpoly::degree(&b));
        let delta = dega - degb;
        if dega % 2 == 1 && degb % 2 == 1 {
            sign = -sign;
        }
        let r = zpoly::prem(&a, &b);
        a = b;
        if r.is_empty() {
            return BigInt::zero();
        }
        let divisor = &g * num_traits::pow(h.clone(), delta);
        b = zpoly::div_scalar_exact(&r, &divisor);
        g = a[zpoly::degree(&a)].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => num_traits::pow(g.clone(), delta) / num_traits::pow(h, delta - 1),
        };
        if zpoly::degree(&b) == 0 {
            break;
        }
    }
    let dega = zpoly::degree(&a);
    let lb = b[0].clone();
    let res = num_traits::pow(lb, dega) / num_traits::pow(h, dega - 1);
    sign * res
}

/// Functional composition `g(h(x))` by Horner's rule.
pub fn compose(g: &Poly, h: &Poly) -> Poly {
    let mut acc = Poly::zero();
    for c in g.coeffs().iter().rev() {
        acc = &(&acc * h) + &Poly::constant(c.clone());
    }
    acc
}

/// Unique polynomial of degree `< points.len()` through the given points
/// (Newton divided differences).
pub fn interpolate(points: &[(Rational, Rational)]) -> Result<Poly> {
    for (i, (xi, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(xj, _)| xj == xi) {
            return domain(format!("repeated interpolation abscissa {xi}"));
        }
    }
    let n = points.len();
    let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &table[i] - &table[i - 1];
            let den = &points[i].0 - &points[i - level].0;
            table[i] = num / den;
        }
    }
    let mut acc = Poly::zero();
    for i in (0..n).rev() {
        let lin = Poly::linear(Rational::one(), -points[i].0.clone());
        acc = &(&acc * &lin) + &Poly::constant(table[i].clone());
    }
    Ok(acc)
}

/// `Res_x(f(x) − t, s(x))` as a polynomial in `t`, of degree `deg s`.
///
/// Evaluated at `deg s + 1` integer values of `t` and interpolated. The
/// degree of `f − t` in `x` never drops for `deg f ≥ 1`, so every
/// evaluation point is admissible.
pub(crate) fn value_resultant(f: &Poly, s: &Poly) -> Result<Poly> {
    let Some(ds) = s.degree() else {
        return domain("value resultant against the zero polynomial");
    };
    if f.degree().unwrap_or(0) < 1 {
        return domain("value resultant needs a nonconstant polynomial");
    }
    let mut points = Vec::with_capacity(ds + 1);
    for t in evaluation_points().take(ds + 1) {
        let shifted = f - &Poly::constant(t.clone());
        points.push((t, resultant(&shifted, s)?));
    }
    let r = interpolate(&points)?;
    debug_assert_eq!(r.degree(), Some(ds));
    Ok(r)
}

/// `0, 1, −1, 2, −2, …`
fn evaluation_points() -> impl Iterator<Item = Rational> {
    (0i64..).flat_map(|k| {
        if k == 0 { vec![rat(0)] } else { vec![rat(k), rat(-k)] }
    })
}

/// Rational `n`-th roots of `c` (at most two: `±r` for even `n`).
pub(crate) fn rational_nth_roots(c: &Rational, n: usize) -> Vec<Rational> {
    if c.is_zero() {
        return vec![Rational::zero()];
    }
    let n32 = n as u32;
    if n % 2 == 0 && c.is_negative() {
        return Vec::new();
    }
    let root_of = |z: &BigInt| -> Option<BigInt> {
        let r = z.abs().nth_root(n32);
        (num_traits::pow(r.clone(), n) == z.abs()).then_some(r)
    };
    let (Some(p), Some(q)) = (root_of(c.numer()), root_of(c.denom())) else {
        return Vec::new();
    };
    let r = Rational::new(p, q);
    if n % 2 == 0 {
        vec![r.clone(), -r]
    } else if c.is_negative() {
        vec![-r]
    } else {
        vec![r]
    }
}
