//! `PSL(2, q)` as an explicit permutation group on the projective line.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::field::{Elem, FiniteField};
use crate::arith::{lcm, shard_map};
use crate::{Error, Result};

/// Largest `q` accepted by the brute-force enumeration.
pub const CENSUS_MAX_Q: u64 = 32;

/// A point of `P^1(GF(q))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProjectivePoint {
    Finite(Elem),
    Infinity,
}

/// A matrix `[[a, b], [c, d]]` of determinant 1, stored in canonical form
/// modulo `±I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub entries: [Elem; 4],
}

pub struct Psl2 {
    field: FiniteField,
}

impl Psl2 {
    pub fn new(q: u64) -> Result<Self> {
        Ok(Self {
            field: FiniteField::of_order(q)?,
        })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn points(&self) -> impl Iterator<Item = ProjectivePoint> {
        self.field
            .elements()
            .map(ProjectivePoint::Finite)
            .chain(std::iter::once(ProjectivePoint::Infinity))
    }

    fn index(&self, pt: ProjectivePoint) -> usize {
        match pt {
            ProjectivePoint::Finite(x) => x as usize,
            ProjectivePoint::Infinity => self.field.order() as usize,
        }
    }

    /// Canonical representative of `±m`, or `None` if `det m != 1`.
    pub fn element(&self, m: [Elem; 4]) -> Option<GroupElement> {
        let f = &self.field;
        let det = f.sub(f.mul(m[0], m[3]), f.mul(m[1], m[2]));
        if det != 1 {
            return None;
        }
        Some(GroupElement {
            entries: self.canonical(m),
        })
    }

    fn canonical(&self, m: [Elem; 4]) -> [Elem; 4] {
        let f = &self.field;
        if f.characteristic() == 2 {
            return m;
        }
        let first = *m.iter().find(|&&x| x != 0).expect("zero matrix");
        if f.in_half(first) {
            m
        } else {
            m.map(|x| f.neg(x))
        }
    }

    /// `z -> (a z + b) / (c z + d)`.
    pub fn act(&self, g: &GroupElement, pt: ProjectivePoint) -> ProjectivePoint {
        let f = &self.field;
        let [a, b, c, d] = g.entries;
        match pt {
            ProjectivePoint::Infinity => match f.inv(c) {
                Some(ci) => ProjectivePoint::Finite(f.mul(a, ci)),
                None => ProjectivePoint::Infinity,
            },
            ProjectivePoint::Finite(z) => {
                let num = f.add(f.mul(a, z), b);
                let den = f.add(f.mul(c, z), d);
                match f.inv(den) {
                    Some(di) => ProjectivePoint::Finite(f.mul(num, di)),
                    None => ProjectivePoint::Infinity,
                }
            }
        }
    }

    /// The permutation of the `q + 1` points, indexed with infinity last.
    pub fn permutation(&self, g: &GroupElement) -> Vec<usize> {
        self.points().map(|pt| self.index(self.act(g, pt))).collect()
    }

    /// Every element with leading entry `a`.
    fn elements_with_a(&self, a: Elem) -> Vec<GroupElement> {
        let f = &self.field;
        let mut out = Vec::new();
        for b in f.elements() {
            for c in f.elements() {
                for d in f.elements() {
                    let m = [a, b, c, d];
                    if let Some(g) = self.element(m) {
                        if g.entries == m {
                            out.push(g);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn elements(&self) -> Vec<GroupElement> {
        self.field.elements().flat_map(|a| self.elements_with_a(a)).collect()
    }
}

/// Order of a permutation: the lcm of its cycle lengths.
pub fn permutation_order(perm: &[usize]) -> u64 {
    let mut seen = vec![false; perm.len()];
    let mut order = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        order = lcm(order, len);
    }
    order
}

pub fn fixed_point_count(perm: &[usize]) -> u64 {
    perm.iter().enumerate().filter(|&(i, &j)| i == j).count() as u64
}

/// Element orders of `PSL(2, q)` with their multiplicities, computed by
/// enumerating the group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderCensus {
    pub q: u64,
    pub group_order: u64,
    pub counts: BTreeMap<u64, u64>,
    /// For each element order, the numbers of points of the projective line
    /// fixed by elements of that order.
    pub fixed_points: BTreeMap<u64, BTreeSet<u64>>,
}

impl OrderCensus {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn count(&self, order: u64) -> u64 {
        self.counts.get(&order).copied().unwrap_or(0)
    }
}

#[derive(Default)]
struct Partial {
    counts: BTreeMap<u64, u64>,
    fixed: BTreeMap<u64, BTreeSet<u64>>,
}

pub fn order_census(q: u64) -> Result<OrderCensus> {
    order_census_sharded(q, 1)
}

/// As [`order_census`], splitting the enumeration by the top-left entry.
pub fn order_census_sharded(q: u64, workers: usize) -> Result<OrderCensus> {
    if q > CENSUS_MAX_Q {
        return Err(Error::OutOfRange(format!(
            "census enumerates PSL(2,q) only for q <= {CENSUS_MAX_Q}; use the arithmetic element-order test for q = {q}"
        )));
    }
    let group = Psl2::new(q)?;
    let partials = shard_map(0, q - 1, workers, |a| {
        let mut part = Partial::default();
        for g in group.elements_with_a(a as Elem) {
            let perm = group.permutation(&g);
            let order = permutation_order(&perm);
            *part.counts.entry(order).or_default() += 1;
            part.fixed.entry(order).or_default().insert(fixed_point_count(&perm));
        }
        Some(part)
    });
    let mut counts = BTreeMap::new();
    let mut fixed_points: BTreeMap<u64, BTreeSet<u64>> = BTreeMap::new();
    for part in partials {
        for (k, v) in part.counts {
            *counts.entry(k).or_default() += v;
        }
        for (k, v) in part.fixed {
            fixed_points.entry(k).or_default().extend(v);
        }
    }
    let group_order = super::psl2_order(q)?;
    let census = OrderCensus {
        q,
        group_order,
        counts,
        fixed_points,
    };
    if census.total() != group_order || census.count(1) != 1 {
        return Err(Error::Internal(format!(
            "census of PSL(2,{q}) totals {} with {} identities, expected {group_order} and 1",
            census.total(),
            census.count(1)
        )));
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_q7() {
        let c = order_census(7).unwrap();
        assert_eq!(c.total(), 168);
        let expected: BTreeMap<u64, u64> = [(1, 1), (2, 21), (3, 56), (4, 42), (7, 48)].into();
        assert_eq!(c.counts, expected);
        assert_eq!(c.fixed_points[&7], BTreeSet::from([1]));
    }

    #[test]
    fn census_small() {
        assert_eq!(order_census(5).unwrap().total(), 60);
        assert_eq!(order_census(2).unwrap().total(), 6);
        let c8 = order_census(8).unwrap();
        let expected: BTreeMap<u64, u64> = [(1, 1), (2, 63), (3, 56), (7, 216), (9, 168)].into();
        assert_eq!(c8.counts, expected);
    }

    #[test]
    fn census_bound() {
        assert!(matches!(order_census(37), Err(Error::OutOfRange(_))));
        assert!(matches!(order_census(12), Err(Error::NotPrimePower(12))));
    }

    #[test]
    fn action_is_faithful_on_identity() {
        let g = Psl2::new(5).unwrap();
        let id = g.element([1, 0, 0, 1]).unwrap();
        assert_eq!(permutation_order(&g.permutation(&id)), 1);
        assert_eq!(g.element([4, 0, 0, 4]), Some(id));
        assert_eq!(g.element([2, 0, 0, 2]), None);
    }

    #[test]
    fn sharded_census_matches() {
        assert_eq!(order_census(9).unwrap(), order_census_sharded(9, 3).unwrap());
    }
}
