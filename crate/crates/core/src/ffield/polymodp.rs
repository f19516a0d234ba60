use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{domain, Result};
use crate::ratpoly::Poly;

/// Polynomial over the prime field `F_p`, ascending residues in `[0, p)`.
///
/// `p` must stay below `2^32` so that products of residues fit in a `u64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyModP {
    p: u64,
    coeffs: Vec<u64>,
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

impl PolyModP {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut q = PolyModP { p, coeffs: coeffs.into_iter().map(|c| c % p).collect() };
        q.trim();
        q
    }

    /// Reduces a rational polynomial; fails when `p` divides a denominator
    /// or is not prime.
    pub fn from_poly(f: &Poly, p: u64) -> Result<Self> {
        if !is_prime_u64(p) || p >= 1 << 32 {
            return domain(format!("{p} is not a supported prime"));
        }
        let pb = num_bigint::BigInt::from(p);
        let mut coeffs = Vec::with_capacity(f.coeffs().len());
        for c in f.coeffs() {
            let den = c.denom().mod_floor(&pb).to_u64().unwrap();
            if den == 0 {
                return domain(format!("{p} divides the denominator of coefficient {c}"));
            }
            let num = c.numer().mod_floor(&pb).to_u64().unwrap();
            coeffs.push(num * inv_mod(den, p) % p);
        }
        Ok(PolyModP::new(p, coeffs))
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn zero(p: u64) -> Self {
        PolyModP { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        PolyModP::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        PolyModP::new(p, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None | Some(1) => self.clone(),
            Some(&l) => self.scale(inv_mod(l, self.p)),
        }
    }

    pub fn scale(&self, by: u64) -> Self {
        PolyModP::new(self.p, self.coeffs.iter().map(|c| c * (by % self.p) % self.p).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|i| {
                (self.coeffs.get(i).copied().unwrap_or(0) + o.coeffs.get(i).copied().unwrap_or(0))
                    % self.p
            })
            .collect();
        PolyModP::new(self.p, c)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|i| {
                (self.coeffs.get(i).copied().unwrap_or(0) + self.p
                    - o.coeffs.get(i).copied().unwrap_or(0))
                    % self.p
            })
            .collect();
        PolyModP::new(self.p, c)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return PolyModP::zero(self.p);
        }
        let mut c = vec![0u64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] = (c[i + j] + a * b) % self.p;
            }
        }
        PolyModP::new(self.p, c)
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial mod p");
        let p = self.p;
        let Some(nd) = self.degree() else {
            return (PolyModP::zero(p), PolyModP::zero(p));
        };
        if nd < dd {
            return (PolyModP::zero(p), self.clone());
        }
        let inv = inv_mod(d.lc(), p);
        let mut r = self.coeffs.clone();
        let mut q = vec![0u64; nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = r[k + dd] * inv % p;
            if c == 0 {
                continue;
            }
            q[k] = c;
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = (r[k + j] + p - c * dc % p) % p;
            }
        }
        r.truncate(dd);
        (PolyModP::new(p, q), PolyModP::new(p, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        PolyModP::new(
            p,
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| (i as u64 % p) * c % p).collect(),
        )
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn mul_mod(&self, o: &Self, m: &Self) -> Self {
        self.mul(o).rem(m)
    }

    /// `self^e mod m` for a machine-word exponent.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = PolyModP::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mod(&base, m);
            }
        }
        acc
    }

    pub fn pow_mod_big(&self, e: &BigUint, m: &Self) -> Self {
        let mut acc = PolyModP::one(self.p).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul_mod(&acc, m);
            if e.bit(i) {
                acc = acc.mul_mod(&base, m);
            }
        }
        acc
    }

    pub fn eval(&self, at: u64) -> u64 {
        self.coeffs.iter().rev().fold(0, |acc, c| (acc * (at % self.p) + c) % self.p)
    }
}

impl fmt::Debug for PolyModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyModP(p={}, {:?})", self.p, self.coeffs)
    }
}

impl fmt::Display for PolyModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (k, c) {
                (0, _) => write!(f, "{c}")?,
                (_, 1) => f.write_str("x")?,
                _ => write!(f, "{c}*x")?,
            }
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        write!(f, " (mod {})", self.p)
    }
}
