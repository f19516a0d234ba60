//! Cycle-type sampling at random good primes and specializations.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::factor::factor_degrees;
use super::polymodp::{is_prime_u64, PolyModP};
use crate::error::{domain, Result};
use crate::ratpoly::{Poly, Rational};

/// Primes for [`evidence`] are drawn below this bound.
const PRIME_BOUND: u64 = 10_000;

/// Minimum number of trials for the rank flag to be reported.
const FLAG_TRIALS: usize = 2000;
const FLAG_TOLERANCE: f64 = 0.15;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleTypeSample {
    pub p: u64,
    pub c: u64,
    /// Ascending factor degrees of `f - c` mod `p`.
    pub partition: Vec<usize>,
    pub accepted: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EvidenceReport {
    pub degree: usize,
    pub trials: usize,
    pub seed: u64,
    pub accepted: usize,
    pub rejected: usize,
    /// Partition → number of accepted samples showing it.
    pub cycle_types: BTreeMap<Vec<usize>, usize>,
    /// Mean number of distinct roots of `f - c` in `F_p`, over all trials.
    pub mean_r: f64,
    pub mean_r2: f64,
    /// Estimate of `E[r^2]` (the permutation rank) with the exact identity
    /// `E_c[r] = 1` used as a control variate.
    pub rank_estimate: f64,
    pub saw_n_cycle: bool,
    pub saw_transposition: bool,
    /// `|rank_estimate - 2| <= 0.15`; absent below 2000 trials.
    pub two_transitive_consistent: Option<bool>,
}

fn check_prime(f: &Poly, p: u64) -> Result<()> {
    let n = f.degree().unwrap_or(0);
    if !is_prime_u64(p) || p >= 1 << 32 {
        return domain(format!("{p} is not a supported prime"));
    }
    if p <= n as u64 {
        return domain(format!("prime {p} does not exceed the degree {n}"));
    }
    if !is_good_prime(f, p) {
        return domain(format!("{p} divides the leading coefficient or a denominator"));
    }
    Ok(())
}

fn is_good_prime(f: &Poly, p: u64) -> bool {
    let pb = BigInt::from(p);
    let lc: Rational = f.lc();
    !lc.numer().mod_floor(&pb).is_zero()
        && f.coeffs().iter().all(|c| !c.denom().mod_floor(&pb).is_zero())
}

/// Factor degrees of `f - c` mod `p`; `None` when `f - c` is not squarefree
/// there.
pub fn cycle_type(f: &Poly, p: u64, c: u64) -> Result<Option<CycleTypeSample>> {
    if f.degree().unwrap_or(0) < 1 {
        return domain("cycle type of a constant polynomial");
    }
    check_prime(f, p)?;
    let g = PolyModP::from_poly(f, p)?.sub(&PolyModP::new(p, vec![c % p]));
    Ok(sample(&g.monic(), c % p, None))
}

/// `g` monic; `xp` optionally `x^p mod g`.
fn sample(g: &PolyModP, c: u64, xp: Option<&PolyModP>) -> Option<CycleTypeSample> {
    if !g.gcd(&g.derivative()).is_one() {
        return None;
    }
    Some(CycleTypeSample { p: g.p(), c, partition: factor_degrees(g, xp), accepted: true })
}

struct Trial {
    r: usize,
    sample: Option<CycleTypeSample>,
}

/// Chebotarev-style statistics from `trials` random specializations `f - c`
/// at random good primes. Trial `i` draws from stream `i` of a ChaCha8
/// generator seeded with `seed`, so the report does not depend on thread
/// scheduling.
pub fn evidence(f: &Poly, trials: usize, seed: u64) -> Result<EvidenceReport> {
    let n = f.degree().unwrap_or(0);
    if n < 1 {
        return domain("evidence for a constant polynomial");
    }
    if trials == 0 {
        return domain("at least one trial is required");
    }
    let primes: Vec<u64> = ((n as u64 + 1)..PRIME_BOUND)
        .filter(|&p| is_prime_u64(p) && is_good_prime(f, p))
        .collect();
    if primes.is_empty() {
        return domain("no good primes below the sampling bound");
    }
    let reductions: BTreeMap<u64, PolyModP> =
        primes.iter().map(|&p| (p, PolyModP::from_poly(f, p).unwrap())).collect();

    let results: Vec<Trial> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            let p = primes[rng.gen_range(0..primes.len())];
            let c = rng.gen_range(0..p);
            let g = reductions[&p].sub(&PolyModP::new(p, vec![c])).monic();
            let x = PolyModP::x(p);
            let xp = x.pow_mod(p, &g);
            let r = g.gcd(&xp.sub(&x)).degree().unwrap_or(0);
            Trial { r, sample: sample(&g, c, Some(&xp)) }
        })
        .collect();

    let mut cycle_types = BTreeMap::new();
    let mut accepted = 0;
    for s in results.iter().filter_map(|t| t.sample.as_ref()) {
        accepted += 1;
        *cycle_types.entry(s.partition.clone()).or_insert(0) += 1;
    }
    let rs: Vec<f64> = results.iter().map(|t| t.r as f64).collect();
    let r2s: Vec<f64> = rs.iter().map(|r| r * r).collect();
    let mean_r = mean(&rs);
    let mean_r2 = mean(&r2s);
    let rank_estimate = control_variate(&r2s, &rs, 1.0);
    let saw_n_cycle = cycle_types.contains_key(&vec![n]);
    let saw_transposition = n >= 2 && cycle_types.keys().any(|k| is_transposition(k, n));
    let two_transitive_consistent =
        (trials >= FLAG_TRIALS).then(|| (rank_estimate - 2.0).abs() <= FLAG_TOLERANCE);

    Ok(EvidenceReport {
        degree: n,
        trials,
        seed,
        accepted,
        rejected: trials - accepted,
        cycle_types,
        mean_r,
        mean_r2,
        rank_estimate,
        saw_n_cycle,
        saw_transposition,
        two_transitive_consistent,
    })
}

fn is_transposition(partition: &[usize], n: usize) -> bool {
    partition.len() == n - 1 && partition.iter().filter(|&&k| k == 2).count() == 1
}

fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Regression estimator of `E[y]` given the known mean `mu` of `x`.
fn control_variate(ys: &[f64], xs: &[f64], mu: f64) -> f64 {
    let (my, mx) = (mean(ys), mean(xs));
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        return my;
    }
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    my - sxy / sxx * (mx - mu)
}

impl EvidenceReport {
    /// Fraction of accepted samples with the given partition.
    pub fn frequency(&self, partition: &[usize]) -> f64 {
        if self.accepted == 0 {
            return 0.0;
        }
        let k = self.cycle_types.get(partition).copied().unwrap_or(0);
        k.to_f64().unwrap() / self.accepted as f64
    }
}
