//! Squarefree, distinct-degree and equal-degree factorization over `F_p`.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::polymodp::PolyModP;
use crate::error::{domain, Result};

/// Seed of the equal-degree splitter; the factorization is a pure function
/// of its input.
const SPLIT_SEED: u64 = 0x0c2a_5eed;

/// `unit · Π factorᵢ^multiplicityᵢ` with monic irreducible factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModFactorization {
    pub unit: u64,
    pub factors: Vec<(PolyModP, usize)>,
}

impl ModFactorization {
    pub fn expand(&self, p: u64) -> PolyModP {
        self.factors.iter().fold(PolyModP::new(p, vec![self.unit]), |acc, (f, m)| {
            (0..*m).fold(acc, |a, _| a.mul(f))
        })
    }
}

pub fn factor_mod_p(f: &PolyModP) -> Result<ModFactorization> {
    if f.is_zero() {
        return domain("factorization of the zero polynomial");
    }
    let p = f.p();
    let unit = f.lc();
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED ^ p);
    let mut factors = Vec::new();
    for (sq, m) in squarefree_mod_p(&f.monic()) {
        for (block, d) in distinct_degree(&sq, None) {
            for irr in equal_degree(&block, d, &mut rng) {
                factors.push((irr, m));
            }
        }
    }
    factors.sort_by(|a, b| {
        (a.0.degree(), a.0.coeffs(), a.1).cmp(&(b.0.degree(), b.0.coeffs(), b.1))
    });
    Ok(ModFactorization { unit, factors })
}

/// Squarefree factorization of a monic polynomial, handling `p`-th powers.
pub(crate) fn squarefree_mod_p(f: &PolyModP) -> Vec<(PolyModP, usize)> {
    let p = f.p();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    let mut c = f.gcd(&df);
    let mut w = f.div_rem(&c).0;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_rem(&y).0;
        if fac.degree().unwrap_or(0) > 0 {
            out.push((fac.monic(), i));
        }
        w = y;
        c = c.div_rem(&w).0;
        i += 1;
    }
    if c.degree().unwrap_or(0) > 0 {
        // c is a p-th power: take the root coefficientwise (Frobenius is
        // the identity on F_p).
        let root = PolyModP::new(p, c.coeffs().iter().step_by(p as usize).copied().collect());
        for (g, m) in squarefree_mod_p(&root.monic()) {
            out.push((g, m * p as usize));
        }
    }
    out.sort_by_key(|(_, m)| *m);
    out
}

/// Splits a monic squarefree polynomial into products of irreducibles of
/// equal degree: `(product, degree)`.
/// `xp`, when given, is `x^p mod f`.
pub(crate) fn distinct_degree(f: &PolyModP, xp: Option<&PolyModP>) -> Vec<(PolyModP, usize)> {
    let p = f.p();
    let n = f.degree().unwrap_or(0);
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let x = PolyModP::x(p);
    let xp = match xp {
        Some(xp) => xp.clone(),
        None => x.pow_mod(p, f),
    };
    // Frobenius matrix: rows are x^(ip) mod f, so h^p = sum h_i x^(ip).
    let mut rows = Vec::with_capacity(n);
    let mut r = PolyModP::one(p).rem(f);
    for _ in 0..n {
        let next = r.mul_mod(&xp, f);
        rows.push(r);
        r = next;
    }
    let frobenius = |h: &PolyModP| {
        let mut acc = vec![0u64; n];
        for (hi, row) in h.coeffs().iter().zip(&rows) {
            if *hi == 0 {
                continue;
            }
            for (a, c) in acc.iter_mut().zip(row.coeffs()) {
                *a = (*a + hi * c) % p;
            }
        }
        PolyModP::new(p, acc)
    };
    let mut rest = f.clone();
    // h = x^(p^d) mod f; gcds against rest stay valid since rest divides f.
    let mut h = xp;
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        if d > 1 {
            h = frobenius(&h);
        }
        let g = rest.gcd(&h.sub(&x));
        if !g.is_one() {
            rest = rest.div_rem(&g).0;
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(deg) = rest.degree().filter(|&k| k > 0) {
        out.push((rest.monic(), deg));
    }
    out
}

/// Degree multiset of a squarefree polynomial, from distinct-degree
/// factorization alone.
pub(crate) fn factor_degrees(f: &PolyModP, xp: Option<&PolyModP>) -> Vec<usize> {
    let mut parts = Vec::new();
    for (block, d) in distinct_degree(&f.monic(), xp) {
        let count = block.degree().unwrap_or(0) / d;
        parts.extend(std::iter::repeat_n(d, count));
    }
    parts.sort_unstable();
    parts
}

/// Cantor–Zassenhaus splitting of a product of degree-`d` irreducibles.
fn equal_degree(f: &PolyModP, d: usize, rng: &mut ChaCha8Rng) -> Vec<PolyModP> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        return vec![f.monic()];
    }
    let p = f.p();
    let exp = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a = PolyModP::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // Trace to F_2: a + a^2 + ... + a^(2^(d-1)).
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul_mod(&t, f);
                acc = acc.add(&t);
            }
            acc
        } else {
            a.pow_mod_big(&exp, f).sub(&PolyModP::one(p))
        };
        let g = f.gcd(&b);
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let h = f.div_rem(&g).0;
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&h.monic(), d, rng));
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x2_plus_1_mod_5_splits() {
        let f = PolyModP::new(5, vec![1, 0, 1]);
        let fac = factor_mod_p(&f).unwrap();
        assert_eq!(
            fac.factors,
            vec![(PolyModP::new(5, vec![2, 1]), 1), (PolyModP::new(5, vec![3, 1]), 1)]
        );
    }

    #[test]
    fn cubic_mod_7_is_irreducible() {
        let f = PolyModP::new(7, vec![6, 1, 0, 1]);
        // no root among the seven residues
        assert!((0..7).all(|r| f.eval(r) != 0));
        let fac = factor_mod_p(&f).unwrap();
        assert_eq!(fac.factors, vec![(f.clone(), 1)]);
    }

    #[test]
    fn square_mod_3() {
        let fac = factor_mod_p(&PolyModP::new(3, vec![0, 0, 1])).unwrap();
        assert_eq!(fac.factors, vec![(PolyModP::x(3), 2)]);
    }

    #[test]
    fn pth_power_and_unit() {
        // 2 (x^3 + 1)^2 (x + 1) mod 3: x^3 + 1 = (x + 1)^3
        let base = PolyModP::new(3, vec![1, 0, 0, 1]);
        let f = base.mul(&base).mul(&PolyModP::new(3, vec![1, 1])).scale(2);
        let fac = factor_mod_p(&f).unwrap();
        assert_eq!(fac.unit, 2);
        assert_eq!(fac.factors, vec![(PolyModP::new(3, vec![1, 1]), 7)]);
        assert_eq!(fac.expand(3), f);
    }

    #[test]
    fn splits_over_f2() {
        // (x^2 + x + 1)(x^4 + x + 1)(x^4 + x^3 + 1) x over F_2
        let parts = [vec![1, 1, 1], vec![1, 1, 0, 0, 1], vec![1, 0, 0, 1, 1], vec![0, 1]];
        let f = parts.iter().fold(PolyModP::one(2), |acc, c| acc.mul(&PolyModP::new(2, c.clone())));
        let fac = factor_mod_p(&f).unwrap();
        assert_eq!(fac.expand(2), f);
        assert_eq!(fac.factors.len(), 4);
        assert_eq!(factor_degrees(&f, None), vec![1, 2, 4, 4]);
    }

    #[test]
    fn zero_is_rejected() {
        assert!(factor_mod_p(&PolyModP::zero(7)).is_err());
    }
}
