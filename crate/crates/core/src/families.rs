//! Generators for classical polynomial families and their predicted
//! critical-value behaviour.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::critical::{critical_report, CollisionClass, CriticalReport};
use crate::dickson::dickson_poly;
use crate::error::{domain, Result};
use crate::ratpoly::{rat, Poly, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// `1 + x + ⋯ + xⁿ`.
    Geometric(usize),
    /// `Σ xⁱ/i!` for `i ≤ n`.
    TaylorExp(usize),
    /// `P(n, k) = Σ C(n, j) xʲ` for `j ≤ k`.
    TruncBinomial(usize, usize),
    /// `(1 + x)ⁿ − xⁿ`.
    PowerDiff(usize),
    /// `x(x + d)⋯(x + (m − 1)d)`.
    RisingFactorial(usize, Rational),
    /// `a₁xⁿ¹ + a₂xⁿ² + a₃`.
    Trinomial { a1: Rational, n1: usize, a2: Rational, n2: usize, a3: Rational },
    Dickson(usize, Rational),
    /// Chebyshev polynomials of the second kind, `U₀ = 1`, `U₁ = 2x`.
    ChebyshevU(usize),
    /// `G₀ = 0`, `G₁ = 1`, `Gₙ₊₁ = x·Gₙ + B·Gₙ₋₁`.
    LucasG(usize, Rational),
    Bernoulli(usize),
    Euler(usize),
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Geometric(_) => "geometric",
            FamilySpec::TaylorExp(_) => "taylor-exp",
            FamilySpec::TruncBinomial(..) => "trunc-binomial",
            FamilySpec::PowerDiff(_) => "power-diff",
            FamilySpec::RisingFactorial(..) => "rising-factorial",
            FamilySpec::Trinomial { .. } => "trinomial",
            FamilySpec::Dickson(..) => "dickson",
            FamilySpec::ChebyshevU(_) => "chebyshev-u",
            FamilySpec::LucasG(..) => "lucas-g",
            FamilySpec::Bernoulli(_) => "bernoulli",
            FamilySpec::Euler(_) => "euler",
        }
    }

    pub fn params(&self) -> Vec<Rational> {
        let r = |n: &usize| rat(*n as i64);
        match self {
            FamilySpec::Geometric(n)
            | FamilySpec::TaylorExp(n)
            | FamilySpec::PowerDiff(n)
            | FamilySpec::ChebyshevU(n)
            | FamilySpec::Bernoulli(n)
            | FamilySpec::Euler(n) => vec![r(n)],
            FamilySpec::TruncBinomial(n, k) => vec![r(n), r(k)],
            FamilySpec::RisingFactorial(m, d) => vec![r(m), d.clone()],
            FamilySpec::Trinomial { a1, n1, a2, n2, a3 } => {
                vec![a1.clone(), r(n1), a2.clone(), r(n2), a3.clone()]
            }
            FamilySpec::Dickson(n, a) | FamilySpec::LucasG(n, a) => vec![r(n), a.clone()],
        }
    }

    /// Builds a spec from a family name and its parameters in declaration
    /// order; integer parameters must be nonnegative integers.
    pub fn parse(name: &str, params: &[Rational]) -> Result<FamilySpec> {
        let arity = match name {
            "geometric" | "taylor-exp" | "power-diff" | "chebyshev-u" | "bernoulli" | "euler" => 1,
            "trunc-binomial" | "rising-factorial" | "dickson" | "lucas-g" => 2,
            "trinomial" => 5,
            _ => return domain(format!("unknown family '{name}'")),
        };
        if params.len() != arity {
            return domain(format!("{name} takes {arity} parameters, got {}", params.len()));
        }
        let int = |i: usize| -> Result<usize> {
            let q = &params[i];
            match q.is_integer().then(|| q.to_integer().to_usize()).flatten() {
                Some(v) => Ok(v),
                None => domain(format!("{name}: parameter {} must be a nonnegative integer, got {q}", i + 1)),
            }
        };
        let spec = match name {
            "geometric" => FamilySpec::Geometric(int(0)?),
            "taylor-exp" => FamilySpec::TaylorExp(int(0)?),
            "power-diff" => FamilySpec::PowerDiff(int(0)?),
            "chebyshev-u" => FamilySpec::ChebyshevU(int(0)?),
            "bernoulli" => FamilySpec::Bernoulli(int(0)?),
            "euler" => FamilySpec::Euler(int(0)?),
            "trunc-binomial" => FamilySpec::TruncBinomial(int(0)?, int(1)?),
            "rising-factorial" => FamilySpec::RisingFactorial(int(0)?, params[1].clone()),
            "dickson" => FamilySpec::Dickson(int(0)?, params[1].clone()),
            "lucas-g" => FamilySpec::LucasG(int(0)?, params[1].clone()),
            _ => FamilySpec::Trinomial {
                a1: params[0].clone(),
                n1: int(1)?,
                a2: params[2].clone(),
                n2: int(3)?,
                a3: params[4].clone(),
            },
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        let ok = match self {
            FamilySpec::Geometric(n) | FamilySpec::TaylorExp(n) => *n >= 1,
            FamilySpec::TruncBinomial(n, k) => 1 <= *k && k < n,
            FamilySpec::PowerDiff(n) => *n >= 2,
            FamilySpec::RisingFactorial(m, d) => *m >= 1 && !d.is_zero(),
            FamilySpec::Trinomial { a1, n1, a2, n2, .. } => {
                !a1.is_zero() && !a2.is_zero() && n1 > n2 && *n2 >= 1
            }
            FamilySpec::Dickson(..) | FamilySpec::ChebyshevU(_) => true,
            FamilySpec::LucasG(n, _) => *n >= 1,
            FamilySpec::Bernoulli(_) | FamilySpec::Euler(_) => true,
        };
        if ok {
            Ok(())
        } else {
            domain(format!("invalid parameters for {self}"))
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(|p| p.to_string()).collect();
        write!(f, "{}({})", self.name(), params.join(", "))
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `B_n(x) = Σ C(n, k) B_k x^(n−k)` with `B_1 = −1/2`.
fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        if m == 0 {
            b.push(Rational::one());
            continue;
        }
        let s: Rational = (0..m).map(|k| Rational::from(binomial(m + 1, k)) * &b[k]).sum();
        b.push(-s / Rational::from(BigInt::from(m + 1)));
    }
    b
}

pub fn generate(spec: &FamilySpec) -> Result<Poly> {
    spec.validate()?;
    let poly = match spec {
        FamilySpec::Geometric(n) => Poly::from_coeffs(vec![Rational::one(); n + 1]),
        FamilySpec::TaylorExp(n) => Poly::from_coeffs(
            (0..=*n).map(|i| Rational::new(BigInt::one(), factorial(i))).collect(),
        ),
        FamilySpec::TruncBinomial(n, k) => {
            Poly::from_coeffs((0..=*k).map(|j| Rational::from(binomial(*n, j))).collect())
        }
        FamilySpec::PowerDiff(n) => {
            &Poly::from_ints(&[1, 1]).pow(*n as u32) - &Poly::monomial(Rational::one(), *n)
        }
        FamilySpec::RisingFactorial(m, d) => (0..*m).fold(Poly::one(), |acc, i| {
            &acc * &Poly::linear(Rational::one(), d * rat(i as i64))
        }),
        FamilySpec::Trinomial { a1, n1, a2, n2, a3 } => {
            &(&Poly::monomial(a1.clone(), *n1) + &Poly::monomial(a2.clone(), *n2))
                + &Poly::constant(a3.clone())
        }
        FamilySpec::Dickson(n, a) => dickson_poly(*n, a),
        FamilySpec::ChebyshevU(n) => {
            let two_x = Poly::monomial(rat(2), 1);
            let (mut prev, mut cur) = (Poly::one(), two_x.clone());
            if *n == 0 {
                return Ok(prev);
            }
            for _ in 1..*n {
                let next = &(&two_x * &cur) - &prev;
                prev = std::mem::replace(&mut cur, next);
            }
            cur
        }
        FamilySpec::LucasG(n, b) => {
            let (mut prev, mut cur) = (Poly::zero(), Poly::one());
            for _ in 1..*n {
                let next = &(&Poly::x() * &cur) + &prev.scale(b);
                prev = std::mem::replace(&mut cur, next);
            }
            cur
        }
        FamilySpec::Bernoulli(n) => {
            let b = bernoulli_numbers(*n);
            Poly::from_coeffs(
                (0..=*n).map(|i| Rational::from(binomial(*n, i)) * &b[n - i]).collect(),
            )
        }
        FamilySpec::Euler(n) => {
            // E_m = x^m − ½ Σ_{k<m} C(m, k) E_k
            let mut e: Vec<Poly> = Vec::with_capacity(n + 1);
            let half = Rational::new(BigInt::one(), BigInt::from(2));
            for m in 0..=*n {
                let mut acc = Poly::monomial(Rational::one(), m);
                for (k, ek) in e.iter().enumerate() {
                    acc = &acc - &ek.scale(&(Rational::from(binomial(m, k)) * &half));
                }
                e.push(acc);
            }
            e.pop().expect("n + 1 terms")
        }
    };
    Ok(poly)
}

/// A class bound predicted for a family member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prediction {
    pub bound: CollisionClass,
    /// The class is predicted to equal `bound`, not merely not exceed it.
    pub exact: bool,
    pub source: &'static str,
}

impl Prediction {
    fn at_most(bound: CollisionClass, source: &'static str) -> Option<Prediction> {
        Some(Prediction { bound, exact: false, source })
    }

    fn exactly(bound: CollisionClass, source: &'static str) -> Option<Prediction> {
        Some(Prediction { bound, exact: true, source })
    }

    pub fn matches(&self, class: CollisionClass) -> bool {
        if self.exact {
            class == self.bound
        } else {
            class <= self.bound
        }
    }
}

fn predict(spec: &FamilySpec) -> Option<Prediction> {
    use CollisionClass::*;
    const DIFF_EQ: &str = "second-order differential equation with nonvanishing sigma' - 2 tau";
    match spec {
        FamilySpec::Geometric(n) if *n >= 2 => {
            Prediction::at_most(AllDistinct, "f + (x - 1) f' = (n + 1) x^n")
        }
        FamilySpec::TaylorExp(n) if *n >= 2 => {
            Prediction::at_most(AllDistinct, "f - f' = x^n / n!")
        }
        FamilySpec::TruncBinomial(n, k) if k + 1 == *n && *k >= 2 => {
            Prediction::at_most(AtMostTwoEqual, "P(n, n-1) = (1 + x)^n - x^n")
        }
        FamilySpec::TruncBinomial(_, k) if *k >= 2 => {
            Prediction::at_most(AllDistinct, "computations on P(n, k) for n <= 100")
        }
        FamilySpec::PowerDiff(n) if *n >= 3 => {
            Prediction::at_most(AtMostTwoEqual, "symmetry x -> -1 - x of (1 + x)^n - x^n")
        }
        FamilySpec::RisingFactorial(m, _) if *m >= 3 => {
            Prediction::at_most(AtMostTwoEqual, "critical values of x(x + d)...(x + (m - 1)d)")
        }
        FamilySpec::Trinomial { n1, n2, .. } if *n1 >= 2 => match n1.gcd(n2) {
            1 => Prediction::at_most(AllDistinct, "x f' = n1 (f - a3) + a2 (n1 - n2) x^n2"),
            2 => Prediction::at_most(AtMostTwoEqual, "x f' = n1 (f - a3) + a2 (n1 - n2) x^n2"),
            _ => None,
        },
        FamilySpec::Dickson(n, a) if *n >= 2 => {
            let src = "critical values of D_n(x, a) are +-2 a^(n/2)";
            if a.is_zero() || *n <= 3 {
                Prediction::exactly(AllDistinct, src)
            } else if *n <= 5 {
                Prediction::exactly(AtMostTwoEqual, src)
            } else {
                Prediction::exactly(ThreeOrMoreEqual, src)
            }
        }
        FamilySpec::ChebyshevU(n) if *n >= 2 => Prediction::at_most(AtMostTwoEqual, DIFF_EQ),
        FamilySpec::LucasG(n, b) if *n >= 3 && !b.is_zero() => {
            Prediction::at_most(AtMostTwoEqual, "linearly related to U_(n-1)")
        }
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    pub spec: FamilySpec,
    pub poly: Poly,
    pub report: CriticalReport,
    pub prediction: Option<Prediction>,
    /// Whether the computed class agrees with the prediction.
    pub matched: Option<bool>,
}

pub fn family_report(spec: &FamilySpec) -> Result<FamilyReport> {
    let poly = generate(spec)?;
    let report = critical_report(&poly)?;
    let prediction = predict(spec);
    let matched = prediction.as_ref().map(|p| p.matches(report.collision_class));
    Ok(FamilyReport { spec: spec.clone(), poly, report, prediction, matched })
}
