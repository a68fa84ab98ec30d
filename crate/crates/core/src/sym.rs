//! Sylow ranks of symmetric groups through Kalužnin's digit formula, the sum
//! `δ(Sym(n))`, and the sweeps that bound it.
//!
//! For a prime `p` with `n = a_ℓ p^ℓ + … + a_1 p + a_0`, the Sylow
//! `p`-subgroup of `Sym(n)` needs exactly `Σ_{i≥1} i·a_i` generators.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use libm::{log, sqrt};

use crate::arith;
use crate::primes::{le_guarded, smallest_prime_factors, BoundReport, PrimeSieve};
use crate::{Error, Result};

/// Base-`p` digits of `n`, least significant first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicExpansion {
    pub n: u64,
    pub p: u64,
    pub digits: Vec<u64>,
}

impl PadicExpansion {
    /// `ℓ(p, n)`, the index of the leading digit.
    pub fn length_index(&self) -> usize {
        self.digits.len().saturating_sub(1)
    }

    pub fn value(&self) -> u128 {
        self.digits
            .iter()
            .rev()
            .fold(0u128, |acc, &a| acc * self.p as u128 + a as u128)
    }

    /// `Σ i·a_i`.
    pub fn weighted_digit_sum(&self) -> u64 {
        self.digits
            .iter()
            .enumerate()
            .map(|(i, &a)| i as u64 * a)
            .sum()
    }
}

pub fn padic_digits(n: u64, p: u64) -> Result<PadicExpansion> {
    if n < 1 {
        return Err(Error::InvalidInput("p-adic expansion needs n >= 1".into()));
    }
    if !arith::is_prime(p as u128) {
        return Err(Error::InvalidInput(alloc::format!("{p} is not prime")));
    }
    let mut digits = Vec::new();
    let mut m = n;
    while m > 0 {
        digits.push(m % p);
        m /= p;
    }
    Ok(PadicExpansion { n, p, digits })
}

/// `d_p(Sym(n))`; zero when `p > n`.
pub fn d_p_sym(n: u64, p: u64) -> u64 {
    let mut m = n;
    let mut weight = 0u64;
    let mut total = 0u64;
    while m > 0 {
        total += weight * (m % p);
        m /= p;
        weight += 1;
    }
    total
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymDeltaRecord {
    pub n: u64,
    /// `d_p(Sym(n))` for every prime `p ≤ n`.
    pub contributions: BTreeMap<u64, u64>,
    pub delta: u64,
    /// `δ(Sym(n)) − (n − 1)`.
    pub offset: i64,
}

pub fn delta_sym(n: u64) -> Result<SymDeltaRecord> {
    let sieve = PrimeSieve::new(n.max(1) as usize)?;
    delta_sym_with(n, &sieve)
}

pub fn delta_sym_with(n: u64, sieve: &PrimeSieve) -> Result<SymDeltaRecord> {
    if n < 1 {
        return Err(Error::InvalidInput("delta_sym needs n >= 1".into()));
    }
    if n as usize > sieve.limit() {
        return Err(Error::OutOfRange {
            what: "delta_sym n",
            value: n as u128,
            limit: sieve.limit() as u128,
        });
    }
    let contributions: BTreeMap<u64, u64> = sieve
        .primes()
        .iter()
        .map(|&p| p as u64)
        .take_while(|&p| p <= n)
        .map(|p| (p, d_p_sym(n, p)))
        .collect();
    let delta = contributions.values().sum::<u64>();
    Ok(SymDeltaRecord {
        n,
        contributions,
        delta,
        offset: delta as i64 - (n as i64 - 1),
    })
}

/// Yields `(n, δ(Sym(n)))` for `n = 1, 2, …, n_max` in `O(log n)` per step.
///
/// Going from `n − 1` to `n` in base `p` clears the `v = v_p(n)` trailing
/// digits equal to `p − 1` and increments digit `v`, so
/// `d_p(n) − d_p(n−1) = v − (p−1)v(v−1)/2`.
#[derive(Debug, Clone)]
pub struct DeltaSweep {
    spf: Vec<u32>,
    next: u64,
    current: i64,
}

impl DeltaSweep {
    pub fn new(n_max: u64) -> Self {
        DeltaSweep {
            spf: smallest_prime_factors(n_max as usize),
            next: 1,
            current: 0,
        }
    }
}

impl Iterator for DeltaSweep {
    type Item = (u64, u64);

    fn next(&mut self) -> Option<(u64, u64)> {
        let n = self.next;
        if n as usize >= self.spf.len() {
            return None;
        }
        if n >= 2 {
            let mut m = n as usize;
            while m > 1 {
                let p = self.spf[m] as usize;
                let mut v = 0i64;
                while m.is_multiple_of(p) {
                    m /= p;
                    v += 1;
                }
                self.current += v - (p as i64 - 1) * v * (v - 1) / 2;
            }
        }
        self.next += 1;
        Some((n, self.current as u64))
    }
}

/// Values of `n` grouped by `δ(Sym(n)) − (n − 1)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Classification {
    pub n_max: u64,
    /// `lists[k]` holds every `n ≤ n_max` with offset exactly `k`.
    pub lists: [Vec<u64>; 4],
    /// Count of `n` with negative offset.
    pub residual_count: u64,
    /// Any `n` with offset above 3. Must be empty.
    pub anomalies: Vec<(u64, i64)>,
}

pub fn classify_range(n_max: u64) -> Result<Classification> {
    if n_max < 1 {
        return Err(Error::InvalidInput("classify_range needs n_max >= 1".into()));
    }
    let mut out = Classification {
        n_max,
        ..Default::default()
    };
    for (n, delta) in DeltaSweep::new(n_max) {
        let offset = delta as i64 - (n as i64 - 1);
        match offset {
            o if o < 0 => out.residual_count += 1,
            0..=3 => out.lists[offset as usize].push(n),
            _ => out.anomalies.push((n, offset)),
        }
    }
    Ok(out)
}

/// `(d'(n), d''(n))`: contributions of primes `p ≤ √n` and of `√n < p ≤ n`.
pub fn split_d(n: u64, sieve: &PrimeSieve) -> Result<(u64, u64)> {
    if n < 2 {
        return Err(Error::InvalidInput("split_d needs n >= 2".into()));
    }
    let record = delta_sym_with(n, sieve)?;
    let (mut small, mut large) = (0, 0);
    for (&p, &d) in &record.contributions {
        if p * p <= n {
            small += d;
        } else {
            large += d;
        }
    }
    Ok((small, large))
}

/// Both sides of the exact identity
/// `d''(n) = Σ_{i=1}^{⌊√n⌋} π(⌊n/i⌋) − ⌊√n⌋·π(⌊√n⌋)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dm2Identity {
    pub n: u64,
    pub from_digits: u64,
    pub closed_form: i64,
}

impl Dm2Identity {
    pub fn holds(&self) -> bool {
        self.from_digits as i64 == self.closed_form
    }
}

pub fn verify_dm2_identity(n: u64, sieve: &PrimeSieve) -> Result<Dm2Identity> {
    let (_, from_digits) = split_d(n, sieve)?;
    let r = n.isqrt();
    let mut closed_form = 0i64;
    for i in 1..=r {
        closed_form += sieve.pi((n / i) as usize)? as i64;
    }
    closed_form -= r as i64 * sieve.pi(r as usize)? as i64;
    Ok(Dm2Identity {
        n,
        from_digits,
        closed_form,
    })
}

/// `δ(Sym(n))` against the explicit two-sided bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StopBoundRecord {
    pub n: u64,
    pub delta: u64,
    pub lower: f64,
    pub upper_tight: f64,
    pub upper_loose: f64,
    pub lower_ok: bool,
    pub upper_tight_ok: bool,
    pub chain_ok: bool,
}

impl StopBoundRecord {
    pub fn new(n: u64, delta: u64) -> Self {
        let nf = n as f64;
        let l = log(nf);
        let base = nf * core::f64::consts::LN_2;
        let lower = base - 12.0 * nf / l;
        let upper_tight = base
            + 19.0 * nf / (2.0 * l)
            + 137.0 * nf / (2.0 * l * l)
            + 4.0 * sqrt(nf) / l
            + 1.5 * sqrt(nf) * l;
        let upper_loose = base + 112.0 * nf / l;
        let d = delta as f64;
        StopBoundRecord {
            n,
            delta,
            lower,
            upper_tight,
            upper_loose,
            lower_ok: le_guarded(lower, d),
            upper_tight_ok: le_guarded(d, upper_tight),
            chain_ok: le_guarded(upper_tight, upper_loose),
        }
    }

    pub fn passed(&self) -> bool {
        self.lower_ok && self.upper_tight_ok && self.chain_ok
    }
}

/// Checks `lower ≤ δ(Sym(n)) ≤ upper_tight ≤ upper_loose` for every `n` in
/// `n_from..=n_to`.
pub fn verify_stop_bounds(n_from: u64, n_to: u64, sieve: &PrimeSieve) -> Result<BoundReport> {
    if n_from < 2 || n_from > n_to {
        return Err(Error::InvalidInput("need 2 <= n_from <= n_to".into()));
    }
    if n_to as usize > sieve.limit() {
        return Err(Error::OutOfRange {
            what: "n_to",
            value: n_to as u128,
            limit: sieve.limit() as u128,
        });
    }
    let mut report = BoundReport::new((n_from, n_to));
    for (n, delta) in DeltaSweep::new(n_to).skip_while(|&(n, _)| n < n_from) {
        let r = StopBoundRecord::new(n, delta);
        report.check_le("stop_lower", n, r.lower, delta as f64);
        report.check_le("stop_upper_tight", n, delta as f64, r.upper_tight);
        report.check_le("stop_upper_chain", n, r.upper_tight, r.upper_loose);
    }
    Ok(report)
}
