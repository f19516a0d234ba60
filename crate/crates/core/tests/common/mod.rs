//! Independent oracles and generators shared by the integration tests.
//! Nothing here calls the algorithms under test except plain polynomial
//! arithmetic.

#![allow(dead_code)]

use critval_core::{CollisionClass, Poly, Rational};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn qq(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn p(c: &[i64]) -> Poly {
    Poly::from_ints(c)
}

pub fn random_poly<R: Rng>(rng: &mut R, degree: usize, lo: i64, hi: i64) -> Poly {
    let mut c: Vec<i64> = (0..=degree).map(|_| rng.gen_range(lo..=hi)).collect();
    while c[degree] == 0 {
        c[degree] = rng.gen_range(lo..=hi);
    }
    Poly::from_ints(&c)
}

pub fn random_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    qq(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

pub fn random_nonzero_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    loop {
        let r = random_rational(rng, bound);
        if !r.is_zero() {
            return r;
        }
    }
}

// ---------------------------------------------------------------------------
// Resultants by Sylvester determinant.

pub fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det *= &pv;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pv;
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

pub fn sylvester_resultant(a: &Poly, b: &Poly) -> Rational {
    let m = a.degree().expect("nonzero");
    let n = b.degree().expect("nonzero");
    if m + n == 0 {
        return Rational::one();
    }
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    let desc = |f: &Poly| -> Vec<Rational> { f.coeffs().iter().rev().cloned().collect() };
    let (da, db) = (desc(a), desc(b));
    for i in 0..n {
        let mut row = vec![Rational::zero(); size];
        for (j, c) in da.iter().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![Rational::zero(); size];
        for (j, c) in db.iter().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    determinant(rows)
}

// ---------------------------------------------------------------------------
// Numerical critical-value clustering.

fn to_complex(f: &Poly) -> Vec<Complex64> {
    f.coeffs().iter().map(|c| Complex64::new(c.to_f64().unwrap(), 0.0)).collect()
}

fn horner(c: &[Complex64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, a| acc * z + a)
}

/// All complex roots with multiplicity, by Durand–Kerner iteration followed
/// by Newton polishing.
pub fn complex_roots(f: &Poly) -> Vec<Complex64> {
    let c = to_complex(f);
    let n = c.len() - 1;
    let lc = c[n];
    let monic: Vec<Complex64> = c.iter().map(|a| a / lc).collect();
    let radius = 1.0 + monic[..n].iter().map(|a| a.norm()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32 + 1) * radius / 1.5).collect();
    for _ in 0..5000 {
        let mut delta: f64 = 0.0;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    denom *= z[i] - z[j];
                }
            }
            if denom.norm() == 0.0 {
                denom = Complex64::new(1e-12, 0.0);
            }
            let step = horner(&monic, z[i]) / denom;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    let d: Vec<Complex64> = (1..=n).map(|k| monic[k] * k as f64).collect();
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let dv = horner(&d, *zi);
            if dv.norm() < 1e-8 {
                break;
            }
            let step = horner(&monic, *zi) / dv;
            if step.norm() < 1e-3 {
                *zi -= step;
            }
        }
    }
    z
}

/// `(distinct critical points, collision class)` from floating-point roots
/// of `f′`, clustering near-equal roots and near-equal values.
pub fn numeric_collision_class(f: &Poly) -> (usize, CollisionClass) {
    let roots = complex_roots(&f.derivative());
    let mut clusters: Vec<Vec<Complex64>> = Vec::new();
    for r in roots {
        match clusters.iter_mut().find(|cl| (cl[0] - r).norm() <= 1e-4 * (1.0 + r.norm())) {
            Some(cl) => cl.push(r),
            None => clusters.push(vec![r]),
        }
    }
    let fc = to_complex(f);
    let values: Vec<Complex64> = clusters
        .iter()
        .map(|cl| horner(&fc, cl.iter().sum::<Complex64>() / cl.len() as f64))
        .collect();
    let scale = 1.0 + values.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let mut max_group = 0;
    for v in &values {
        let group = values.iter().filter(|w| (*v - **w).norm() <= 1e-7 * scale).count();
        max_group = max_group.max(group);
    }
    let class = match max_group {
        0 | 1 => CollisionClass::AllDistinct,
        2 => CollisionClass::AtMostTwoEqual,
        _ => CollisionClass::ThreeOrMoreEqual,
    };
    (clusters.len(), class)
}

// ---------------------------------------------------------------------------
// Rational roots and brute-force decomposition.

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let small = n.to_u64().expect("small integer");
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= small {
        if small % d == 0 {
            out.push(BigInt::from(d));
            if d * d != small {
                out.push(BigInt::from(small / d));
            }
        }
        d += 1;
    }
    out
}

fn eval_coeffs(c: &[Rational], at: &Rational) -> Rational {
    c.iter().rev().fold(Rational::zero(), |acc, a| acc * at + a)
}

/// Rational roots by the rational root theorem.
pub fn rational_roots(c: &[Rational]) -> Vec<Rational> {
    let mut c: Vec<Rational> = c.to_vec();
    while c.last().is_some_and(|a| a.is_zero()) {
        c.pop();
    }
    if c.len() <= 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    while c[0].is_zero() {
        c.remove(0);
        if !out.contains(&Rational::zero()) {
            out.push(Rational::zero());
        }
    }
    if c.len() == 1 {
        return out;
    }
    let lcm = c.iter().fold(BigInt::one(), |acc, a| num_integer::Integer::lcm(&acc, a.denom()));
    let ints: Vec<BigInt> = c.iter().map(|a| (a * Rational::from_integer(lcm.clone())).to_integer()).collect();
    for num in divisors(&ints[0]) {
        for den in divisors(ints.last().unwrap()) {
            for sign in [1, -1] {
                let cand = Rational::new(&num * sign, den.clone());
                if eval_coeffs(&c, &cand).is_zero() && !out.contains(&cand) {
                    out.push(cand);
                }
            }
        }
    }
    out
}

fn binomial(n: usize, k: usize) -> Rational {
    let mut r = Rational::one();
    for i in 0..k {
        r = r * q((n - i) as i64) / q((i + 1) as i64);
    }
    r
}

/// `f(s − x) = f(x)` for some rational `s`, i.e. `f` is a polynomial in a
/// quadratic. Checked at `deg f + 1` points.
pub fn has_reflection_symmetry(f: &Poly) -> bool {
    let n = f.degree().unwrap();
    if n % 2 == 1 {
        return false;
    }
    let s = -q(2) * f.coeff(n - 1) / (q(n as i64) * f.lc());
    (0..=n as i64).all(|x| f.eval(&(s.clone() - q(x))) == f.eval(&q(x)))
}

/// `f = a·h² + c` for a polynomial `h`: `f` is a quadratic in `h`.
pub fn is_square_plus_constant(f: &Poly) -> bool {
    let n = f.degree().unwrap();
    if n % 2 == 1 {
        return false;
    }
    let m = n / 2;
    let lc = f.lc();
    let big: Vec<Rational> = f.coeffs().iter().map(|c| c / &lc).collect();
    let mut h = vec![Rational::zero(); m + 1];
    h[m] = Rational::one();
    for j in 1..=m {
        let mut rest = big[n - j].clone();
        for i in 1..j {
            rest -= &h[m - i] * &h[m - j + i];
        }
        h[m - j] = rest / q(2);
    }
    let mut sq = vec![Rational::zero(); n + 1];
    for (i, a) in h.iter().enumerate() {
        for (j, b) in h.iter().enumerate() {
            sq[i + j] += a * b;
        }
    }
    (1..=n).all(|k| sq[k] == big[k])
}

/// Decomposability for degrees 4 and 6 by undetermined coefficients.
pub fn brute_decomposable(f: &Poly) -> bool {
    match f.degree() {
        Some(4) => is_square_plus_constant(f),
        Some(6) => is_square_plus_constant(f) || has_reflection_symmetry(f),
        other => panic!("oracle covers degrees 4 and 6, got {other:?}"),
    }
}

// ---------------------------------------------------------------------------
// Factors of φ(x, y) = (f(x) − f(y))/(x − y).

/// `phi[i][j]` is the coefficient of `xⁱ yʲ`.
pub fn phi_coeffs(f: &Poly) -> Vec<Vec<Rational>> {
    let n = f.degree().unwrap();
    let mut phi = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        for i in 0..k {
            phi[i][k - 1 - i] += f.coeff(k);
        }
    }
    phi
}

/// A rational line `y = αx + β` on which `φ` vanishes identically, i.e. a
/// linear factor of `φ` over `Q`. `φ` has no vertical linear factor since
/// its `y^{n−1}` coefficient is `lc f`.
pub fn phi_linear_factor(f: &Poly) -> Option<(Rational, Rational)> {
    let phi = phi_coeffs(f);
    let d = phi.len() - 1;
    let top: Vec<Rational> = (0..=d).map(|j| phi[d - j][j].clone()).collect();
    for alpha in rational_roots(&top) {
        // coefficient of x^k β^e in φ(x, αx + β)
        let mut sub = vec![vec![Rational::zero(); d + 1]; d + 1];
        for (i, row) in phi.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for l in 0..=j {
                    let term = c * binomial(j, l) * num_traits::pow(alpha.clone(), l);
                    sub[i + l][j - l] += term;
                }
            }
        }
        let Some(first) = sub.iter().find(|row| row.iter().skip(1).any(|c| !c.is_zero())) else {
            continue;
        };
        for beta in rational_roots(first) {
            if sub.iter().all(|row| eval_coeffs(row, &beta).is_zero()) {
                return Some((alpha.clone(), beta));
            }
        }
    }
    None
}

/// `a + bω` with `ω² = 1 − ω`, enough for `2cos(2πj/n)` with `n ≤ 6`.
#[derive(Clone, Debug, PartialEq)]
pub struct Q5(pub Rational, pub Rational);

impl Q5 {
    pub fn rational(a: Rational) -> Self {
        Q5(a, Rational::zero())
    }
    fn add(&self, o: &Q5) -> Q5 {
        Q5(&self.0 + &o.0, &self.1 + &o.1)
    }
    fn sub(&self, o: &Q5) -> Q5 {
        Q5(&self.0 - &o.0, &self.1 - &o.1)
    }
    fn mul(&self, o: &Q5) -> Q5 {
        let bd = &self.1 * &o.1;
        Q5(&self.0 * &o.0 + &bd, &self.0 * &o.1 + &self.1 * &o.0 - bd)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero() && self.1.is_zero()
    }
}

/// The values `2cos(2πj/n)` for `1 ≤ j ≤ (n−1)/2`.
pub fn dickson_alphas(n: usize) -> Vec<Q5> {
    let r = |v: i64| Q5::rational(q(v));
    match n {
        3 => vec![r(-1)],
        4 => vec![r(0)],
        5 => vec![Q5(q(0), q(1)), Q5(q(-1), q(-1))],
        6 => vec![r(1), r(-1)],
        _ => panic!("oracle covers 3 <= n <= 6"),
    }
}

/// Checks that the factors `X² − αXY + Y² + (α² − 4)β` of
/// `Dₙ(X, β) − Dₙ(Y, β)`, and `X + Y` for even `n`, divide
/// `φ(x, y₀)` where `f = s·Dₙ(x + γ, β) + e₀` and `X = x + γ`.
pub fn dickson_factors_divide(f: &Poly, gamma: &Rational, beta: &Rational, y0: &Rational) -> bool {
    let n = f.degree().unwrap();
    let lin = Poly::linear(Rational::one(), -y0.clone());
    let (psi, r) = (f - &Poly::constant(f.eval(y0))).div_rem(&lin);
    assert!(r.is_zero());
    // ψ as a polynomial in X = x + γ
    let psi_x = psi.compose_linear(&Rational::one(), &-gamma.clone());
    let yy = y0 + gamma;
    if n % 2 == 0 && !psi_x.eval(&-yy.clone()).is_zero() {
        return false;
    }
    dickson_alphas(n).iter().all(|alpha| {
        let b = alpha.mul(&Q5::rational(yy.clone()));
        let c = alpha
            .mul(alpha)
            .sub(&Q5::rational(q(4)))
            .mul(&Q5::rational(beta.clone()))
            .add(&Q5::rational(&yy * &yy));
        // divide by the monic X² − bX + c
        let mut rem: Vec<Q5> = psi_x.coeffs().iter().map(|a| Q5::rational(a.clone())).collect();
        while rem.len() > 2 {
            let top = rem.pop().unwrap();
            let k = rem.len();
            rem[k - 1] = rem[k - 1].add(&top.mul(&b));
            rem[k - 2] = rem[k - 2].sub(&top.mul(&c));
        }
        rem.iter().all(Q5::is_zero)
    })
}
