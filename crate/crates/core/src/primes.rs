//! Sieve of Eratosthenes, the prime counting function and numeric sweeps of
//! the explicit prime-counting and `k`-th prime inequalities.

use alloc::vec::Vec;

use fixedbitset::FixedBitSet;
use libm::{floor, log, pow};

use crate::{Error, Result};

/// Largest sieve built unless the caller raises it.
pub const DEFAULT_SIEVE_BUDGET: usize = 100_000_000;

/// Relative slack allowed when a transcendental right-hand side is compared
/// against a computed left-hand side.
pub const RELATIVE_GUARD: f64 = 1e-9;

/// All primes up to `limit`, with `π(x)` tabulated for every integer `x`.
#[derive(Debug, Clone)]
pub struct PrimeSieve {
    limit: usize,
    is_prime: FixedBitSet,
    primes: Vec<u32>,
    cumulative_count: Vec<u32>,
}

impl PrimeSieve {
    pub fn new(limit: usize) -> Result<Self> {
        Self::with_budget(limit, DEFAULT_SIEVE_BUDGET)
    }

    pub fn with_budget(limit: usize, budget: usize) -> Result<Self> {
        if limit == 0 {
            return Err(Error::InvalidInput("sieve limit must be at least 1".into()));
        }
        if limit > budget {
            return Err(Error::Budget {
                what: "sieve limit",
                requested: limit as u128,
                limit: budget as u128,
            });
        }
        if limit > u32::MAX as usize {
            return Err(Error::OutOfRange {
                what: "sieve limit",
                value: limit as u128,
                limit: u32::MAX as u128,
            });
        }

        let mut is_prime = FixedBitSet::with_capacity(limit + 1);
        if limit >= 2 {
            is_prime.insert_range(2..limit + 1);
        }
        let mut p = 2usize;
        while p * p <= limit {
            if is_prime.contains(p) {
                let mut q = p * p;
                while q <= limit {
                    is_prime.set(q, false);
                    q += p;
                }
            }
            p += 1;
        }

        let primes: Vec<u32> = is_prime.ones().map(|x| x as u32).collect();
        let mut cumulative_count = Vec::with_capacity(limit + 1);
        let mut running = 0u32;
        for x in 0..=limit {
            if is_prime.contains(x) {
                running += 1;
            }
            cumulative_count.push(running);
        }

        Ok(PrimeSieve {
            limit,
            is_prime,
            primes,
            cumulative_count,
        })
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn primes(&self) -> &[u32] {
        &self.primes
    }

    pub fn is_prime(&self, x: usize) -> Result<bool> {
        self.check_range(x)?;
        Ok(self.is_prime.contains(x))
    }

    /// `π(n)` for an integer argument.
    pub fn pi(&self, n: usize) -> Result<u32> {
        self.check_range(n)?;
        Ok(self.cumulative_count[n])
    }

    /// `π(x) = π(⌊x⌋)` for a real argument; zero below 2.
    pub fn prime_count(&self, x: f64) -> Result<u32> {
        if x.is_nan() || x < 0.0 {
            return Err(Error::InvalidInput("prime_count needs a nonnegative argument".into()));
        }
        if x < 2.0 {
            return Ok(0);
        }
        let n = floor(x);
        if n > self.limit as f64 {
            return Err(Error::OutOfRange {
                what: "prime_count argument",
                value: n as u128,
                limit: self.limit as u128,
            });
        }
        self.pi(n as usize)
    }

    /// The `k`-th prime, counting `p_1 = 2`.
    pub fn nth_prime(&self, k: usize) -> Result<u32> {
        if k == 0 {
            return Err(Error::InvalidInput("primes are indexed from 1".into()));
        }
        self.primes.get(k - 1).copied().ok_or(Error::OutOfRange {
            what: "prime index",
            value: k as u128,
            limit: self.primes.len() as u128,
        })
    }

    fn check_range(&self, x: usize) -> Result<()> {
        if x > self.limit {
            Err(Error::OutOfRange {
                what: "sieve lookup",
                value: x as u128,
                limit: self.limit as u128,
            })
        } else {
            Ok(())
        }
    }
}

/// One failed instance of an inequality `lhs ≤ rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub check: &'static str,
    pub x: u64,
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    /// Inclusive interval of arguments that were examined.
    pub range_checked: (u64, u64),
    pub violations: Vec<Violation>,
    pub passed: bool,
}

impl BoundReport {
    pub fn new(range_checked: (u64, u64)) -> Self {
        BoundReport {
            range_checked,
            violations: Vec::new(),
            passed: true,
        }
    }

    /// Records `lhs ≤ rhs`, with [`RELATIVE_GUARD`] slack.
    pub fn check_le(&mut self, check: &'static str, x: u64, lhs: f64, rhs: f64) {
        if !le_guarded(lhs, rhs) {
            self.violations.push(Violation { check, x, lhs, rhs });
            self.passed = false;
        }
    }

    pub fn merge(&mut self, other: BoundReport) {
        self.range_checked.0 = self.range_checked.0.min(other.range_checked.0);
        self.range_checked.1 = self.range_checked.1.max(other.range_checked.1);
        self.passed &= other.passed;
        self.violations.extend(other.violations);
    }
}

#[inline]
pub(crate) fn le_guarded(lhs: f64, rhs: f64) -> bool {
    lhs <= rhs + RELATIVE_GUARD * rhs.abs()
}

/// `(x / log x)(1 + 3 / (2 log x))`, valid upper bound for `π(x)`, `x > 1`.
pub fn rs_upper(x: f64) -> f64 {
    let l = log(x);
    x / l * (1.0 + 3.0 / (2.0 * l))
}

/// `x / (log x − 1/2)`, valid lower bound for `π(x)`, `x ≥ 67`.
pub fn rs_lower(x: f64) -> f64 {
    x / (log(x) - 0.5)
}

/// Checks both prime-counting bounds at every integer in their ranges up to
/// `x_max`: the upper bound from 2, the lower bound from 67.
pub fn verify_rs_bounds(x_max: u64, sieve: &PrimeSieve) -> Result<BoundReport> {
    if x_max > sieve.limit() as u64 {
        return Err(Error::OutOfRange {
            what: "x_max",
            value: x_max as u128,
            limit: sieve.limit() as u128,
        });
    }
    let mut report = BoundReport::new((2, x_max.max(2)));
    for x in 2..=x_max {
        let pi = sieve.pi(x as usize)? as f64;
        let xf = x as f64;
        report.check_le("pi_upper", x, pi, rs_upper(xf));
        if x >= 67 {
            report.check_le("pi_lower", x, rs_lower(xf), pi);
        }
    }
    Ok(report)
}

/// Checks, for `k ≤ k_max` (strict inequalities are compared under the same
/// relative guard as the others):
/// `k log k < p_k` (k ≥ 1), `p_k < k(log k + log log k)` (k ≥ 6),
/// `(p_k − 1)/log p_k ≤ k` (k ≥ 2) and
/// `(p_k − 1)/log² p_k ≤ k/(log k + log log k)` (k ≥ 2).
pub fn verify_pk_bounds(k_max: u64, sieve: &PrimeSieve) -> Result<BoundReport> {
    let mut report = BoundReport::new((1, k_max.max(1)));
    for k in 1..=k_max {
        let pk = sieve.nth_prime(k as usize)? as f64;
        let kf = k as f64;
        let lk = log(kf);
        report.check_le("pk_lower", k, kf * lk, pk);
        if k >= 6 {
            report.check_le("pk_upper", k, pk, kf * (lk + log(lk)));
        }
        if k >= 2 {
            let lp = log(pk);
            report.check_le("pk_ratio_log", k, (pk - 1.0) / lp, kf);
            report.check_le("pk_ratio_log2", k, (pk - 1.0) / (lp * lp), kf / (lk + log(lk)));
        }
    }
    Ok(report)
}

/// Largest value of `n / π(n)^eta` over `2 ≤ n ≤ n_max`, with the first `n`
/// attaining it.
pub fn stup_constant(eta: f64, n_max: u64, sieve: &PrimeSieve) -> Result<(f64, u64)> {
    if eta.is_nan() || eta <= 1.0 {
        return Err(Error::InvalidInput("eta must exceed 1".into()));
    }
    if n_max < 2 {
        return Err(Error::InvalidInput("n_max must be at least 2".into()));
    }
    let mut best = (f64::NEG_INFINITY, 0u64);
    for n in 2..=n_max {
        let pi = sieve.pi(n as usize)? as f64;
        let c = n as f64 / pow(pi, eta);
        if c > best.0 {
            best = (c, n);
        }
    }
    Ok(best)
}

/// Smallest-prime-factor table for `0..=limit` (entries 0 and 1 are 0).
pub fn smallest_prime_factors(limit: usize) -> Vec<u32> {
    let mut spf = alloc::vec![0u32; limit + 1];
    for i in 2..=limit {
        if spf[i] == 0 {
            let mut j = i;
            while j <= limit {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    spf
}
