//! 128-bit modular arithmetic, Miller–Rabin and Pollard–Brent factoring.

use alloc::vec::Vec;

use crate::{Error, Result};

/// Trial division runs over all primes below this bound before any
/// probabilistic splitting is attempted.
pub const TRIAL_DIVISION_BOUND: u32 = 1_000_000;

/// Below this value the Miller–Rabin witness set used here is proven
/// deterministic. Larger inputs are strong probable primes to 24 prime bases.
pub const DETERMINISTIC_PRIMALITY_BOUND: u128 = 3_317_044_064_679_887_385_961_981;

const RHO_ITERATION_BUDGET: u64 = 1 << 26;

pub fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[inline]
fn add_mod(a: u128, b: u128, m: u128) -> u128 {
    // a, b < m; avoid overflowing u128
    if a >= m - b {
        a - (m - b)
    } else {
        a + b
    }
}

pub fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    debug_assert!(m > 0);
    if m <= u64::MAX as u128 {
        return (a % m) * (b % m) % m;
    }
    let (mut a, mut b) = (a % m, b % m);
    if a < b {
        core::mem::swap(&mut a, &mut b);
    }
    let mut acc = 0u128;
    while b > 0 {
        if b & 1 == 1 {
            acc = add_mod(acc, a, m);
        }
        a = add_mod(a, a, m);
        b >>= 1;
    }
    acc
}

pub fn pow_mod(mut base: u128, mut exp: u128, m: u128) -> u128 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u128;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

const SMALL_PRIMES: [u128; 24] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
];

fn strong_probable_prime(n: u128, a: u128) -> bool {
    let a = a % n;
    if a == 0 {
        return true;
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mut x = pow_mod(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Miller–Rabin primality; deterministic below
/// [`DETERMINISTIC_PRIMALITY_BOUND`].
pub fn is_prime(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for &p in SMALL_PRIMES.iter() {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    if n < 89 * 89 {
        return true;
    }
    let bases: &[u128] = if n < DETERMINISTIC_PRIMALITY_BOUND {
        &SMALL_PRIMES[..13]
    } else {
        &SMALL_PRIMES[..]
    };
    bases.iter().all(|&a| strong_probable_prime(n, a))
}

/// Prime factorisation by trial division up to [`TRIAL_DIVISION_BOUND`]
/// followed by Pollard–Brent splitting.
#[derive(Debug, Clone)]
pub struct Factorizer {
    small_primes: Vec<u32>,
}

impl Default for Factorizer {
    fn default() -> Self {
        Self::new()
    }
}

impl Factorizer {
    pub fn new() -> Self {
        Self::with_trial_bound(TRIAL_DIVISION_BOUND)
    }

    pub fn with_trial_bound(bound: u32) -> Self {
        let n = bound as usize;
        let mut composite = alloc::vec![false; n + 1];
        let mut small_primes = Vec::new();
        for i in 2..=n {
            if !composite[i] {
                small_primes.push(i as u32);
                let mut j = i * i;
                while j <= n {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        Factorizer { small_primes }
    }

    /// Sorted `(prime, exponent)` pairs. `factor(1)` is empty.
    pub fn factor(&self, n: u128) -> Result<Vec<(u128, u32)>> {
        if n == 0 {
            return Err(Error::InvalidInput("cannot factor 0".into()));
        }
        let mut out: Vec<(u128, u32)> = Vec::new();
        let mut rest = n;
        for &p in &self.small_primes {
            let p = p as u128;
            if p * p > rest {
                break;
            }
            if rest.is_multiple_of(p) {
                let mut e = 0;
                while rest.is_multiple_of(p) {
                    rest /= p;
                    e += 1;
                }
                out.push((p, e));
            }
        }
        if rest > 1 {
            let mut stack = alloc::vec![rest];
            while let Some(m) = stack.pop() {
                if m == 1 {
                    continue;
                }
                if is_prime(m) {
                    match out.iter_mut().find(|(p, _)| *p == m) {
                        Some(entry) => entry.1 += 1,
                        None => out.push((m, 1)),
                    }
                    continue;
                }
                let d = brent_split(m).ok_or(Error::Factorization(m))?;
                stack.push(d);
                stack.push(m / d);
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    pub fn prime_divisors(&self, n: u128) -> Result<Vec<u128>> {
        Ok(self.factor(n)?.into_iter().map(|(p, _)| p).collect())
    }
}

fn brent_split(n: u128) -> Option<u128> {
    if n.is_multiple_of(2) {
        return Some(2);
    }
    let mut spent = 0u64;
    for c in 1u128..64 {
        let f = |x: u128| add_mod(mul_mod(x, x, n), c % n, n);
        let (mut y, m) = (2u128, 128u64);
        let (mut g, mut r, mut q) = (1u128, 1u64, 1u128);
        let (mut x, mut ys) = (0u128, 0u128);
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    let diff = x.abs_diff(y);
                    q = mul_mod(q, diff, n);
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
            spent += r;
            if spent > RHO_ITERATION_BUDGET {
                return None;
            }
        }
        if g == n {
            loop {
                ys = f(ys);
                let diff = x.abs_diff(ys);
                g = gcd(diff, n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n && g != 1 {
            return Some(g);
        }
    }
    None
}

/// Multiplicative order of `a` modulo the prime `p`, given `p ∤ a`.
pub fn multiplicative_order(a: u128, p: u128, factorizer: &Factorizer) -> Result<u128> {
    if a.is_multiple_of(p) {
        return Err(Error::InvalidInput("element is not a unit".into()));
    }
    let mut order = p - 1;
    for (q, _) in factorizer.factor(p - 1)? {
        while order.is_multiple_of(q) && pow_mod(a, order / q, p) == 1 {
            order /= q;
        }
    }
    Ok(order)
}

/// Number of prime factors counted with multiplicity.
pub fn big_omega(mut n: u64) -> u32 {
    let mut count = 0;
    let mut d = 2u64;
    while d * d <= n {
        while n.is_multiple_of(d) {
            n /= d;
            count += 1;
        }
        d += 1;
    }
    if n > 1 {
        count += 1;
    }
    count
}

/// Distinct primes of a machine-sized integer, by trial division.
pub fn prime_divisors_u64(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// If `n = p^k` with `k ≥ 1`, returns `(p, k)`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    let ps = prime_divisors_u64(n);
    if ps.len() != 1 {
        return None;
    }
    let p = ps[0];
    let mut k = 0;
    let mut m = n;
    while m > 1 {
        m /= p;
        k += 1;
    }
    Some((p, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_mod_large_modulus() {
        let m = u128::MAX - 158; // arbitrary odd modulus above 2^64
        let a = m - 1;
        // (m-1)^2 ≡ 1
        assert_eq!(mul_mod(a, a, m), 1);
        assert_eq!(mul_mod(3, 5, 7), 1);
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(97));
        assert!(!is_prime(1));
        assert!(!is_prime(561));
        assert!(is_prime((1u128 << 61) - 1));
        assert!(is_prime((1u128 << 127) - 1));
        assert!(!is_prime(((1u128 << 61) - 1) * ((1u128 << 31) - 1)));
    }

    #[test]
    fn factor_examples() {
        let f = Factorizer::new();
        assert_eq!(f.factor(1).unwrap(), alloc::vec![]);
        assert_eq!(f.factor(2047).unwrap(), alloc::vec![(23, 1), (89, 1)]);
        assert_eq!(f.factor(60).unwrap(), alloc::vec![(2, 2), (3, 1), (5, 1)]);
        // two primes above the trial bound
        let (p, q) = (1_000_003u128, 998_244_353u128);
        assert_eq!(f.factor(p * q * q).unwrap(), alloc::vec![(p, 1), (q, 2)]);
        let m61 = (1u128 << 61) - 1;
        assert_eq!(f.factor(m61 * 1_000_000_007).unwrap(), alloc::vec![(1_000_000_007, 1), (m61, 1)]);
    }

    #[test]
    fn orders() {
        let f = Factorizer::new();
        assert_eq!(multiplicative_order(2, 23, &f).unwrap(), 11);
        assert_eq!(multiplicative_order(2, 89, &f).unwrap(), 11);
        assert_eq!(multiplicative_order(2, 7, &f).unwrap(), 3);
    }

    #[test]
    fn small_helpers() {
        assert_eq!(big_omega(24), 4);
        assert_eq!(big_omega(1), 0);
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_divisors_u64(360), alloc::vec![2, 3, 5]);
    }
}
