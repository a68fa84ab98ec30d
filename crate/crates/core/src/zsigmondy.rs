//! Primitive prime divisors of `a^n − 1`, cyclotomic values and the
//! `π*(S)` prime sets of simple groups given by order data.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::{self, Factorizer};
use crate::{Error, Result};

/// The two families where `a^n − 1` has no primitive prime divisor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZsigmondyException {
    /// `n = 2` and `a = 2^s − 1` with `s ≥ 2`.
    Mersenne { s: u32 },
    /// `n = 6`, `a = 2`.
    BinarySix,
}

impl ZsigmondyException {
    pub fn classify(a: u128, n: u32) -> Option<Self> {
        if n == 2 {
            if let Some(next) = a.checked_add(1) {
                if next.is_power_of_two() && next >= 4 {
                    return Some(ZsigmondyException::Mersenne {
                        s: next.trailing_zeros(),
                    });
                }
            }
        }
        if n == 6 && a == 2 {
            return Some(ZsigmondyException::BinarySix);
        }
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PpdResult {
    pub a: u128,
    pub n: u32,
    /// `a^n − 1`.
    pub value: u128,
    pub primitive_primes: Vec<u128>,
    pub exception: Option<ZsigmondyException>,
}

impl PpdResult {
    /// Every primitive prime is `≡ 1 (mod n)`; vacuous when there are none.
    pub fn residues_ok(&self) -> bool {
        self.primitive_primes
            .iter()
            .all(|&p| p % self.n as u128 == 1)
    }

    /// Existence holds exactly outside the exception families.
    pub fn consistent_with_zsigmondy(&self) -> bool {
        self.primitive_primes.is_empty() == self.exception.is_some()
    }
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn power_minus_one(q: u128, m: u32) -> Result<u128> {
    q.checked_pow(m).map(|v| v - 1).ok_or(Error::Budget {
        what: "q^m must stay below 2^128",
        requested: m as u128,
        limit: 128,
    })
}

/// `Φ_m(q)` by the divisor recursion `Φ_m(q) = (q^m − 1) / Π_{d|m, d<m} Φ_d(q)`.
pub fn cyclotomic_eval(m: u32, q: u128) -> Result<u128> {
    if m == 0 {
        return Err(Error::InvalidInput("cyclotomic index must be positive".into()));
    }
    if q < 2 {
        return Err(Error::InvalidInput("cyclotomic evaluation needs q >= 2".into()));
    }
    Ok(*cyclotomic_values(m, q)?.last().expect("m is a divisor of itself"))
}

/// `Φ_d(q)` for every divisor `d` of `m`, in increasing order of `d`.
fn cyclotomic_values(m: u32, q: u128) -> Result<Vec<u128>> {
    let divs = divisors(m);
    let mut values: Vec<u128> = Vec::with_capacity(divs.len());
    for (i, &d) in divs.iter().enumerate() {
        let mut v = power_minus_one(q, d)?;
        for (j, &e) in divs[..i].iter().enumerate() {
            if d % e == 0 {
                v /= values[j];
            }
        }
        values.push(v);
    }
    Ok(values)
}

/// Factors `a^n − 1` through its cyclotomic pieces and keeps the primes at
/// which `a` has multiplicative order exactly `n`.
pub fn primitive_prime_divisors(a: u128, n: u32, factorizer: &Factorizer) -> Result<PpdResult> {
    if a < 2 || n < 2 {
        return Err(Error::InvalidInput("need a >= 2 and n >= 2".into()));
    }
    let value = power_minus_one(a, n)?;
    let mut primes = BTreeSet::new();
    for piece in cyclotomic_values(n, a)? {
        primes.extend(factorizer.prime_divisors(piece)?);
    }
    let mut primitive_primes = Vec::new();
    for p in primes {
        if arith::multiplicative_order(a % p, p, factorizer)? == n as u128 {
            primitive_primes.push(p);
        }
    }
    Ok(PpdResult {
        a,
        n,
        value,
        primitive_primes,
        exception: ZsigmondyException::classify(a, n),
    })
}

pub fn verify_residue(a: u128, n: u32, factorizer: &Factorizer) -> Result<bool> {
    Ok(primitive_prime_divisors(a, n, factorizer)?.residues_ok())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepFailure {
    pub a: u128,
    pub n: u32,
    pub reason: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ZsigmondySweep {
    pub cases: usize,
    pub exceptions_seen: Vec<(u128, u32)>,
    pub failures: Vec<SweepFailure>,
}

impl ZsigmondySweep {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Existence-except-exceptions and the residue property over
/// `2 ≤ a ≤ a_max`, `2 ≤ n ≤ n_max`.
pub fn zsigmondy_sweep(a_max: u128, n_max: u32, factorizer: &Factorizer) -> Result<ZsigmondySweep> {
    let mut out = ZsigmondySweep::default();
    for a in 2..=a_max {
        for n in 2..=n_max {
            let r = primitive_prime_divisors(a, n, factorizer)?;
            out.cases += 1;
            if r.exception.is_some() {
                out.exceptions_seen.push((a, n));
            }
            if !r.consistent_with_zsigmondy() {
                out.failures.push(SweepFailure {
                    a,
                    n,
                    reason: "existence",
                });
            }
            if !r.residues_ok() {
                out.failures.push(SweepFailure {
                    a,
                    n,
                    reason: "residue",
                });
            }
        }
    }
    Ok(out)
}

/// Order data of a finite simple group and the primes dividing `|S|` but
/// not `|Out(S)|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGroupDatum {
    pub label: String,
    pub order: u128,
    pub out_order: u64,
    pub pi: Vec<u128>,
    pub pi_star: Vec<u128>,
}

impl SimpleGroupDatum {
    /// At least two primes divide `|S|` and not `|Out(S)|`.
    pub fn has_two_pi_star_primes(&self) -> bool {
        self.pi_star.len() >= 2
    }
}

pub fn pi_star(
    label: &str,
    order: u128,
    out_order: u64,
    factorizer: &Factorizer,
) -> Result<SimpleGroupDatum> {
    if order < 2 || out_order < 1 {
        return Err(Error::InvalidInput("need |S| >= 2 and |Out(S)| >= 1".into()));
    }
    let pi = factorizer.prime_divisors(order)?;
    let pi_star = pi
        .iter()
        .copied()
        .filter(|&p| !(out_order as u128).is_multiple_of(p))
        .collect();
    Ok(SimpleGroupDatum {
        label: label.into(),
        order,
        out_order,
        pi,
        pi_star,
    })
}
