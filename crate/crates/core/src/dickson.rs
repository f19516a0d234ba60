//! Dickson polynomials `Dₙ(x, a)` and detection of polynomials linearly
//! related to them.

use num_traits::Zero;

use crate::error::{domain, Result};
use crate::ratpoly::{rat, Poly, Rational};

/// Witness of `f(x) = scale · Dₙ(x + gamma, beta) + e0`.
///
/// Any relation `f = e₁·Dₙ(c₁x + c₀, α) + e₀` rescales to this form with
/// `gamma = c₀/c₁`, `beta = α/c₁²`, `scale = e₁c₁ⁿ`, so the reduced
/// coordinates are rational whenever `f` is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DicksonForm {
    pub n: usize,
    pub gamma: Rational,
    pub beta: Rational,
    pub e0: Rational,
    pub scale: Rational,
}

impl DicksonForm {
    /// `beta = 0`: linearly related to `xⁿ`.
    pub fn is_pure_power(&self) -> bool {
        self.beta.is_zero()
    }

    pub fn expand(&self) -> Poly {
        let d = dickson_poly(self.n, &self.beta).shift(&self.gamma);
        &d.scale(&self.scale) + &Poly::constant(self.e0.clone())
    }
}

/// `Dₙ(x, a)` from `D₀ = 2`, `D₁ = x`, `Dₙ = x·Dₙ₋₁ − a·Dₙ₋₂`.
pub fn dickson(n: i64, a: &Rational) -> Result<Poly> {
    if n < 0 {
        return domain(format!("Dickson index must be >= 0, got {n}"));
    }
    Ok(dickson_poly(n as usize, a))
}

pub(crate) fn dickson_poly(n: usize, a: &Rational) -> Poly {
    let mut prev = Poly::constant(rat(2));
    if n == 0 {
        return prev;
    }
    let mut cur = Poly::x();
    let x = Poly::x();
    for _ in 1..n {
        let next = &(&x * &cur) - &prev.scale(a);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Decides whether `f` is linearly related to a Dickson polynomial.
pub fn dickson_detect(f: &Poly) -> Result<Option<DicksonForm>> {
    let n = match f.degree() {
        Some(n) if n >= 3 => n,
        _ => return domain(format!("Dickson detection needs degree >= 3, got {}", f.degree_i64())),
    };
    let lead = f.lc();
    let n_rat = rat(n as i64);
    let gamma = f.coeff(n - 1) / (&n_rat * &lead);
    let binom = rat((n * (n - 1) / 2) as i64);
    let beta = (&binom * &gamma * &gamma - f.coeff(n - 2) / &lead) / &n_rat;
    let e0 = f.coeff(0) - &lead * dickson_poly(n, &beta).eval(&gamma);
    let form = DicksonForm { n, gamma, beta, e0, scale: lead };
    Ok((form.expand() == *f).then_some(form))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::ratio;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn small_dickson_polynomials() {
        let one = rat(1);
        assert_eq!(dickson(0, &one).unwrap(), p(&[2]));
        assert_eq!(dickson(3, &one).unwrap(), p(&[0, -3, 0, 1]));
        assert_eq!(dickson(4, &one).unwrap(), p(&[2, 0, -4, 0, 1]));
        assert_eq!(dickson(5, &one).unwrap(), p(&[0, 5, 0, -5, 0, 1]));
        assert!(dickson(-1, &one).is_err());
    }

    #[test]
    fn detect_scaled_cubic() {
        let form = dickson_detect(&p(&[1, -6, 0, 2])).unwrap().unwrap();
        assert_eq!(
            form,
            DicksonForm { n: 3, gamma: rat(0), beta: rat(1), e0: rat(1), scale: rat(2) }
        );
    }

    #[test]
    fn every_depressed_cubic_is_related() {
        let form = dickson_detect(&p(&[0, 1, 0, 1])).unwrap().unwrap();
        assert_eq!(form.beta, ratio(-1, 3));
        assert_eq!((form.gamma.clone(), form.e0.clone(), form.scale.clone()), (rat(0), rat(0), rat(1)));
    }

    #[test]
    fn x4_plus_x_is_not_related() {
        assert_eq!(dickson_detect(&p(&[0, 1, 0, 0, 1])).unwrap(), None);
    }

    #[test]
    fn pure_power_flag() {
        let f = p(&[1, 1]).pow(5).scale(&rat(3));
        let form = dickson_detect(&f).unwrap().unwrap();
        assert!(form.is_pure_power());
        assert_eq!(form.gamma, rat(1));
    }
}
