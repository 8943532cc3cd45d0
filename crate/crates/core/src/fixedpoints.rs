//! Fixed-point counts of automorphisms and the Schoeneberg criterion.
//!
//! A group `G` acting on a surface with signature `(h; m_1, ..., m_r)` has
//! points with cyclic stabilisers of orders `m_i`. The number of fixed points
//! of an element depends only on its order `d` and on which periods it
//! divides. Counts are evaluated as exact rationals and must come out
//! integral.

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, prime_power, rational, require_integer, Rational};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupKind {
    Cyclic(u64),
    Psl2(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointQuery {
    pub group: GroupKind,
    pub periods: Vec<u64>,
    pub element_order: u64,
}

impl FixedPointQuery {
    pub fn evaluate(&self) -> Result<u64> {
        match self.group {
            GroupKind::Cyclic(n) => cyclic_fixed_points(n, &self.periods, self.element_order),
            GroupKind::Psl2(q) => psl2q_fixed_points(q, &self.periods, self.element_order),
        }
    }
}

fn check_periods(periods: &[u64]) -> Result<()> {
    match periods.iter().find(|&&m| m < 2) {
        Some(m) => Err(Error::invalid(format!("period {m} is below 2"))),
        None => Ok(()),
    }
}

/// `sum 1/m_i` over the periods divisible by `d`.
fn reciprocal_sum(periods: &[u64], d: u64) -> Rational {
    periods
        .iter()
        .filter(|&&m| m % d == 0)
        .fold(rational(0, 1), |acc, &m| acc + rational(1, m as i128))
}

fn to_count(value: Rational) -> Result<u64> {
    let n = require_integer(value, "fixed-point count")?;
    u64::try_from(n).map_err(|_| Error::Internal(format!("negative fixed-point count {n}")))
}

/// Fixed points of an element of order `d` in the cyclic group `C_n`:
/// `n * sum_{d | m_i} 1/m_i`.
pub fn cyclic_fixed_points(n: u64, periods: &[u64], d: u64) -> Result<u64> {
    check_periods(periods)?;
    if d < 2 || !n.is_multiple_of(d) {
        return Err(Error::invalid(format!(
            "element order {d} must be >= 2 and divide the group order {n}"
        )));
    }
    to_count(rational(n as i128, 1) * reciprocal_sum(periods, d))
}

/// Which torus (or unipotent class) of `PSL(2, q)` an element order lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ElementClass {
    /// `d` divides `(q - 1) / gcd(2, q - 1)`.
    Split,
    /// `d` divides `(q + 1) / gcd(2, q - 1)`.
    NonSplit,
    /// `d = p`.
    Unipotent,
}

/// Classifies `d >= 2` as an element order of `PSL(2, q)`, or reports it as
/// not realizable.
pub fn psl2_element_class(q: u64, d: u64) -> Result<ElementClass> {
    let (p, _) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if d < 2 {
        return Err(Error::invalid(format!("element order {d} is below 2")));
    }
    let g = gcd(2, q - 1);
    let split = ((q - 1) / g).is_multiple_of(d);
    let nonsplit = ((q + 1) / g).is_multiple_of(d);
    let unipotent = d == p;
    match (split, nonsplit, unipotent) {
        (true, false, false) => Ok(ElementClass::Split),
        (false, true, false) => Ok(ElementClass::NonSplit),
        (false, false, true) => Ok(ElementClass::Unipotent),
        (false, false, false) => Err(Error::OrderNotRealizable { q, order: d }),
        _ => Err(Error::Internal(format!(
            "element order {d} matches two classes in PSL(2,{q})"
        ))),
    }
}

pub fn is_psl2_element_order(q: u64, d: u64) -> bool {
    d == 1 || psl2_element_class(q, d).is_ok()
}

/// Fixed points of an element of order `d` in `PSL(2, q)`, `q = p^k`.
///
/// Odd `q`: `(q - 1) S` on the split torus, `(q + 1) S` on the non-split
/// torus, `(gcd(k, 2) / 2) p^(k-1) (p - 1) #{m_i = p}` for `d = p`, where
/// `S = sum_{d | m_i} 1/m_i`. Even `q`: `2(q - 1) S`, `2(q + 1) S` and
/// `2^(k-1) #{m_i = 2}`.
///
/// Every period must itself be an element order of `PSL(2, q)`.
pub fn psl2q_fixed_points(q: u64, periods: &[u64], d: u64) -> Result<u64> {
    check_periods(periods)?;
    let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let class = psl2_element_class(q, d)?;
    if let Some(&bad) = periods.iter().find(|&&m| !is_psl2_element_order(q, m)) {
        return Err(Error::invalid(format!(
            "period {bad} is not an element order of PSL(2,{q})"
        )));
    }
    let s = reciprocal_sum(periods, d);
    let even = p == 2;
    let scale = if even { 2 } else { 1 };
    let value = match class {
        ElementClass::Split => rational(scale * (q as i128 - 1), 1) * s,
        ElementClass::NonSplit => rational(scale * (q as i128 + 1), 1) * s,
        ElementClass::Unipotent => {
            let hits = periods.iter().filter(|&&m| m == p).count() as i128;
            let pk1 = (p as i128).pow(k - 1);
            if even {
                rational(pk1 * hits, 1)
            } else {
                rational(gcd(k as u64, 2) as i128, 2) * rational(pk1 * (p as i128 - 1) * hits, 1)
            }
        }
    };
    to_count(value)
}

/// An automorphism fixing more than four points forces those points to be
/// Weierstrass points.
pub fn schoeneberg_is_weierstrass(fixed_count: u64) -> bool {
    fixed_count > 4
}
