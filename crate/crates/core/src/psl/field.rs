//! Finite fields `GF(p^n)` for small `p^n`.
//!
//! An element `c_0 + c_1 x + ... + c_{n-1} x^{n-1}` is encoded as the integer
//! `sum c_i p^i`. The modulus is the monic irreducible of degree `n` with the
//! smallest such encoding. Multiplication goes through discrete log tables.

use crate::arith::is_prime;
use crate::{Error, Result};

/// Largest field order accepted.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

pub type Elem = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    n: u32,
    q: u32,
    /// Coefficients of the monic modulus, constant term first, length `n + 1`.
    modulus: Vec<u32>,
    /// `exp[i] = g^i` for a primitive element `g`, `i < q - 1`.
    exp: Vec<Elem>,
    /// `log[exp[i]] = i`; `log[0]` is unused.
    log: Vec<u32>,
}

/// Polynomial helpers over `GF(p)` on coefficient vectors, constant term first.
mod poly {
    pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn decode(mut v: u64, p: u32, len: usize) -> Vec<u32> {
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            out.push((v % p as u64) as u32);
            v /= p as u64;
        }
        out
    }

    pub fn encode(c: &[u32], p: u32) -> u64 {
        c.iter().rev().fold(0u64, |acc, &d| acc * p as u64 + d as u64)
    }

    /// Remainder of `a` modulo the monic `m`.
    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut r = trim(a.to_vec());
        let dm = m.len() - 1;
        while r.len() > dm {
            let lead = *r.last().unwrap();
            let shift = r.len() - 1 - dm;
            for (i, &mc) in m.iter().enumerate() {
                let sub = (lead as u64 * mc as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
            r = trim(r);
        }
        r
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        trim(out.into_iter().map(|c| c as u32).collect())
    }
}

fn is_irreducible(m: &[u32], p: u32) -> bool {
    let n = m.len() - 1;
    for d in 1..=n / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut divisor = poly::decode(low, p, d);
            divisor.push(1);
            if poly::rem(m, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// Builds `GF(p^n)`.
    pub fn new(p: u64, n: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::invalid("field degree must be at least 1"));
        }
        let q = p
            .checked_pow(n)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or_else(|| Error::OutOfRange(format!("{p}^{n} exceeds {MAX_FIELD_ORDER}")))?;
        let (p32, q32) = (p as u32, q as u32);
        let modulus = (0..q)
            .map(|low| {
                let mut m = poly::decode(low, p32, n as usize);
                m.push(1);
                m
            })
            .find(|m| is_irreducible(m, p32))
            .ok_or_else(|| Error::Internal(format!("no irreducible of degree {n} over GF({p})")))?;

        let mul_slow = |a: Elem, b: Elem| -> Elem {
            let prod = poly::mul(
                &poly::trim(poly::decode(a as u64, p32, n as usize)),
                &poly::trim(poly::decode(b as u64, p32, n as usize)),
                p32,
            );
            poly::encode(&poly::rem(&prod, &modulus, p32), p32) as Elem
        };
        let order = q32 - 1;
        let mut exp = Vec::with_capacity(order as usize);
        for g in 1..q32 {
            exp.clear();
            let mut x: Elem = 1;
            loop {
                exp.push(x);
                x = mul_slow(x, g);
                if x == 1 || exp.len() > order as usize {
                    break;
                }
            }
            if exp.len() == order as usize {
                break;
            }
        }
        if exp.len() != order as usize {
            return Err(Error::Internal(format!("no primitive element in GF({q})")));
        }
        let mut log = vec![0u32; q as usize];
        for (i, &e) in exp.iter().enumerate() {
            log[e as usize] = i as u32;
        }
        Ok(Self {
            p: p32,
            n,
            q: q32,
            modulus,
            exp,
            log,
        })
    }

    /// Builds the field of order `q`, which must be a prime power.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, n) = crate::arith::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, n)
    }

    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> u64 {
        self.q as u64
    }

    /// Modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return a ^ b;
        }
        self.digitwise(a, b, |x, y| (x + y) % self.p)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        self.digitwise(0, a, |_, y| (self.p - y) % self.p)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    fn digitwise(&self, mut a: Elem, mut b: Elem, f: impl Fn(u32, u32) -> u32) -> Elem {
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.n {
            out += f(a % self.p, b % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let order = self.q - 1;
        let i = (self.log[a as usize] + self.log[b as usize]) % order;
        self.exp[i as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        let order = self.q - 1;
        Some(self.exp[((order - self.log[a as usize]) % order) as usize])
    }

    /// A fixed half of the nonzero elements, one from each pair `{x, -x}`,
    /// used to pick representatives modulo `±1` when `p` is odd.
    pub fn in_half(&self, a: Elem) -> bool {
        a != 0 && a < self.neg(a)
    }
}

impl std::fmt::Display for FiniteField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF({}^{})", self.p, self.n)
    }
}
