//! Small exact-arithmetic helpers shared across modules.

use num_integer::Integer;
use num_rational::Ratio;

use crate::{Error, Result};

/// Exact rational with a reduced `i128` numerator and denominator.
pub type Rational = Ratio<i128>;

pub fn rational(numer: i128, denom: i128) -> Rational {
    Ratio::new(numer, denom)
}

/// Returns the value of `r` if it is an integer, otherwise a
/// [`Error::NonIntegral`] naming `what`.
pub fn require_integer(r: Rational, what: &'static str) -> Result<i128> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::NonIntegral {
            what,
            numer: *r.numer(),
            denom: *r.denom(),
        })
    }
}

/// Trial-division primality test. Fine for the desk-scale inputs used here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Splits `q = p^k` with `p` prime, or returns `None`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Euler's totient by trial factorisation.
pub fn totient(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn checked_mul(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

/// Maps `f` over `lo..=hi`, splitting the range into `workers` contiguous
/// shards run on scoped threads. Results come back in range order.
pub fn shard_map<T, F>(lo: u64, hi: u64, workers: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync,
{
    if lo > hi {
        return Vec::new();
    }
    let span = hi - lo + 1;
    let workers = (workers.max(1) as u64).min(span);
    if workers == 1 {
        return (lo..=hi).filter_map(&f).collect();
    }
    let chunk = span.div_ceil(workers);
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let start = lo + w * chunk;
                let end = (start + chunk - 1).min(hi);
                let f = &f;
                scope.spawn(move || (start..=end).filter_map(f).collect::<Vec<T>>())
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("shard worker panicked"))
            .collect()
    })
}
