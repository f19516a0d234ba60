//! Functional decomposition over `Q` in the normal form `f = g ∘ h` with `h`
//! monic and `h(0) = 0`.
//!
//! In characteristic zero the degree-`k` right factor in that normal form is
//! unique when it exists, and its coefficients are pinned down one at a time
//! by the top `k − 1` coefficients of `f`. Decomposition is therefore a
//! decision procedure rather than a search.

use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::ratpoly::{compose, rat, rational_nth_roots, Poly, Rational};

/// `outer ∘ inner` with `inner` monic, `inner(0) = 0`, both of degree ≥ 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bidecomposition {
    pub outer: Poly,
    pub inner: Poly,
}

impl Bidecomposition {
    pub fn recompose(&self) -> Poly {
        compose(&self.outer, &self.inner)
    }
}

/// Indecomposable factors, outermost first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionChain {
    pub factors: Vec<Poly>,
}

impl DecompositionChain {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn recompose(&self) -> Poly {
        let mut it = self.factors.iter().rev();
        let Some(first) = it.next() else { return Poly::x() };
        it.fold(first.clone(), |acc, outer| compose(outer, &acc))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.degree().unwrap_or(0)).collect()
    }
}

fn proper_divisors(n: usize) -> impl Iterator<Item = usize> {
    (2..n).filter(move |k| n % k == 0)
}

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// The unique normalized right factor of degree `k`, if `f` has one.
pub fn right_factor(f: &Poly, k: usize) -> Result<Option<Bidecomposition>> {
    let n = f.degree().unwrap_or(0);
    if n < 4 {
        return domain(format!("right_factor needs degree >= 4, got {}", f.degree_i64()));
    }
    if k <= 1 || k >= n || n % k != 0 {
        return domain(format!("{k} is not a proper divisor of {n}"));
    }
    let r = n / k;
    let lead = f.lc();
    let monic = f.monic();
    let r_rat = rat(r as i64);

    // h = x^k + h_{k−1} x^{k−1} + … + h_1 x. The coefficient of x^{n−j} in
    // h^r is r·h_{k−j} plus terms in h_{k−1}, …, h_{k−j+1} only, so each
    // coefficient is solved in turn.
    let mut h = vec![Rational::zero(); k + 1];
    h[k] = Rational::one();
    for j in 1..k {
        let partial = Poly::from_coeffs(h.clone()).pow(r as u32);
        let residual = monic.coeff(n - j) - partial.coeff(n - j);
        h[k - j] = residual / &r_rat;
    }
    let inner = Poly::from_coeffs(h);

    // h-adic expansion; every digit must be a constant.
    let mut digits = Vec::with_capacity(r + 1);
    let mut rest = monic;
    while !rest.is_zero() {
        let (q, rem) = rest.div_rem(&inner);
        if !rem.is_constant() {
            return Ok(None);
        }
        digits.push(rem.coeff(0));
        rest = q;
    }
    let outer = Poly::from_coeffs(digits).scale(&lead);
    let cand = Bidecomposition { outer, inner };
    Ok((cand.recompose() == *f).then_some(cand))
}

/// A maximal decomposition, peeling the smallest right factor first.
pub fn full_decomposition(f: &Poly) -> Result<DecompositionChain> {
    let n = f.degree().unwrap_or(0);
    if n < 2 {
        return domain(format!("decomposition needs degree >= 2, got {}", f.degree_i64()));
    }
    let mut inners = Vec::new();
    let mut current = f.clone();
    'peel: loop {
        let deg = current.degree().unwrap_or(0);
        if deg >= 4 {
            for k in proper_divisors(deg) {
                if let Some(bd) = right_factor(&current, k)? {
                    inners.push(bd.inner);
                    current = bd.outer;
                    continue 'peel;
                }
            }
        }
        break;
    }
    let mut factors = vec![current];
    factors.extend(inners.into_iter().rev());
    Ok(DecompositionChain { factors })
}

pub fn is_indecomposable(f: &Poly) -> Result<bool> {
    let n = f.degree().unwrap_or(0);
    if n < 2 {
        return domain(format!("indecomposability needs degree >= 2, got {}", f.degree_i64()));
    }
    if is_prime(n) {
        return Ok(true);
    }
    for k in proper_divisors(n) {
        if right_factor(f, k)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(u, v)` with `u ≠ 0` and `f(x) = g(u x + v)`, if such exist.
pub fn linear_equivalence(f: &Poly, g: &Poly) -> Option<(Rational, Rational)> {
    let n = f.degree()?;
    if n == 0 || g.degree() != Some(n) {
        return None;
    }
    let ratio = f.lc() / g.lc();
    let n_rat = rat(n as i64);
    for u in rational_nth_roots(&ratio, n) {
        // Coefficient of x^{n−1} in g(ux+v) is u^{n−1}(n·g_n·v + g_{n−1}).
        let un1 = num_traits::pow(u.clone(), n - 1);
        let v = (f.coeff(n - 1) / &un1 - g.coeff(n - 1)) / (&n_rat * g.lc());
        if g.compose_linear(&u, &v) == *f {
            return Some((u, v));
        }
    }
    None
}
