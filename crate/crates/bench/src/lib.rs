//! Shared inputs for the criterion benchmarks.

use critval_core::{compose, dickson, generate, FamilySpec, Poly, Rational};

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// A dense degree-`n` polynomial with small, varied coefficients.
pub fn dense(n: usize) -> Poly {
    let c: Vec<i64> = (0..=n as i64).map(|i| (i * 7 + 3) % 11 - 5).map(|c| if c == 0 { 1 } else { c }).collect();
    Poly::from_ints(&c)
}

/// `P(2n, n)`, a truncated binomial of degree `n`.
pub fn trunc_binomial(n: usize) -> Poly {
    generate(&FamilySpec::TruncBinomial(2 * n, n)).expect("valid parameters")
}

pub fn dickson_poly(n: i64) -> Poly {
    dickson(n, &rat(1)).expect("nonnegative index")
}

/// `g ∘ h` with `deg g = r`, `deg h = k`.
pub fn composite(r: usize, k: usize) -> Poly {
    compose(&dense(r), &dense(k))
}
