//! The Fermat curves `x^n + y^n + z^n = 0`.
//!
//! Points are handled symbolically. Write `eta = exp(i pi / n)`. A trivial
//! point has one zero coordinate and the other two differ by an odd power of
//! `eta`. A Leopoldt point has one coordinate `gamma` with `gamma^n = 2` and
//! the other two of the form `eta^(1 + 2k)`. Automorphisms multiply
//! coordinates by `n`-th roots of unity and permute them, so they only move
//! exponents around.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::surface::{total_weight, Genus};
use crate::verdict::TransitivityVerdict;
use crate::{Error, Result};

fn require_n(n: u64, min: u64, what: &str) -> Result<()> {
    if n < min {
        Err(Error::invalid(format!("{what} needs n >= {min}, got {n}")))
    } else {
        Ok(())
    }
}

/// `(n - 1)(n - 2) / 2`.
pub fn fermat_genus(n: u64) -> Result<Genus> {
    require_n(n, 3, "the Fermat curve")?;
    let g = (n - 1)
        .checked_mul(n - 2)
        .ok_or(Error::Overflow("fermat_genus"))?;
    Ok(Genus::new(g / 2))
}

/// `|Aut F_n| = 6 n^2` for `n >= 4`.
pub fn automorphism_order(n: u64) -> Result<u64> {
    require_n(n, 4, "the automorphism group (Z_n + Z_n) x| S3")?;
    n.checked_mul(n)
        .and_then(|sq| sq.checked_mul(6))
        .ok_or(Error::Overflow("automorphism_order"))
}

/// Weight `(n - 1)(n - 2)(n - 3)(n + 4) / 24` of each trivial point.
pub fn trivial_point_weight(n: u64) -> Result<u64> {
    require_n(n, 3, "the trivial point weight")?;
    let n = n as u128;
    let numer = (n - 1) * (n - 2) * (n - 3) * (n + 4);
    if !numer.is_multiple_of(24) {
        return Err(Error::Internal(format!("trivial weight {numer}/24 is not integral")));
    }
    u64::try_from(numer / 24).map_err(|_| Error::Overflow("trivial_point_weight"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeopoldtBound {
    pub bound: u64,
    /// The weight equals the bound for `n <= 8`.
    pub exact: bool,
}

/// Lower bound on the weight of each Leopoldt point: `(n - 1)(n - 3)/8` for
/// odd `n`, `(n - 2)(n - 4)/8` for even `n`.
pub fn leopoldt_weight_bound(n: u64) -> Result<LeopoldtBound> {
    require_n(n, 5, "Leopoldt points")?;
    let numer = if n % 2 == 1 {
        (n - 1).checked_mul(n - 3)
    } else {
        (n - 2).checked_mul(n - 4)
    }
    .ok_or(Error::Overflow("leopoldt_weight_bound"))?;
    if numer % 8 != 0 {
        return Err(Error::Internal(format!("Leopoldt bound {numer}/8 is not integral")));
    }
    Ok(LeopoldtBound {
        bound: numer / 8,
        exact: n <= 8,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AccountingConclusion {
    /// Trivial and Leopoldt points carry the whole weight.
    AllLocated,
    /// Exact weights leave a positive residual.
    FurtherPointsExist,
    /// Leopoldt weights are only bounded below; the residual is an upper bound.
    LowerBoundOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AccountingReport {
    pub n: u64,
    pub genus: Genus,
    pub total: u64,
    pub trivial_points: u64,
    pub trivial_weight: u64,
    pub trivial_contribution: u64,
    pub leopoldt_points: u64,
    pub leopoldt_weight: Option<LeopoldtBound>,
    pub leopoldt_contribution: u64,
    pub residual: u64,
    pub conclusion: AccountingConclusion,
}

/// Splits `g^3 - g` into the trivial points, the Leopoldt points and the rest.
pub fn weight_accounting(n: u64) -> Result<AccountingReport> {
    require_n(n, 4, "weight accounting")?;
    let genus = fermat_genus(n)?;
    let total = total_weight(genus)?;
    let trivial_points = 3 * n;
    let trivial_weight = trivial_point_weight(n)?;
    let trivial_contribution = trivial_points
        .checked_mul(trivial_weight)
        .ok_or(Error::Overflow("weight_accounting"))?;
    let (leopoldt_points, leopoldt_weight) = if n >= 5 {
        (3 * n * n, Some(leopoldt_weight_bound(n)?))
    } else {
        (0, None)
    };
    let leopoldt_contribution = leopoldt_points * leopoldt_weight.map_or(0, |b| b.bound);
    let exact = leopoldt_weight.is_none_or(|b| b.exact);
    let residual = total
        .checked_sub(trivial_contribution + leopoldt_contribution)
        .ok_or_else(|| Error::Internal(format!("F_{n}: point weights exceed g^3 - g = {total}")))?;
    let conclusion = match (residual, exact) {
        (0, true) => AccountingConclusion::AllLocated,
        (_, true) => AccountingConclusion::FurtherPointsExist,
        (_, false) => AccountingConclusion::LowerBoundOnly,
    };
    Ok(AccountingReport {
        n,
        genus,
        total,
        trivial_points,
        trivial_weight,
        trivial_contribution,
        leopoldt_points,
        leopoldt_weight,
        leopoldt_contribution,
        residual,
        conclusion,
    })
}

/// A trivial or Leopoldt point, normalised so the distinguished coordinate
/// has exponent 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FermatPoint {
    /// Coordinate `zero` vanishes; coordinate `zero + 2` is `eta^s` times
    /// coordinate `zero + 1` (indices mod 3), `s` odd modulo `2n`.
    Trivial { zero: u8, s: u32 },
    /// Coordinate `gamma` is `gamma`; coordinate `j != gamma` is
    /// `eta^(1 + 2 exps[j])`, and `exps[gamma] = 0`.
    Leopoldt { gamma: u8, exps: [u32; 3] },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Coord {
    Zero,
    Unit(u32),
    Gamma(u32),
}

impl FermatPoint {
    /// Trivial point with `s = 2k + 1`.
    pub fn trivial(zero: u8, k: u32) -> Self {
        FermatPoint::Trivial { zero, s: 2 * k + 1 }
    }

    pub fn leopoldt(gamma: u8, k1: u32, k2: u32) -> Self {
        let mut exps = [0; 3];
        exps[(gamma as usize + 1) % 3] = k1;
        exps[(gamma as usize + 2) % 3] = k2;
        FermatPoint::Leopoldt { gamma, exps }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, FermatPoint::Trivial { .. })
    }

    pub fn validate(&self, n: u64) -> Result<()> {
        let n = n as u32;
        let ok = match *self {
            FermatPoint::Trivial { zero, s } => zero < 3 && s < 2 * n && s % 2 == 1,
            FermatPoint::Leopoldt { gamma, exps } => {
                gamma < 3 && exps[gamma as usize] == 0 && exps.iter().all(|&k| k < n)
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::invalid(format!("{self:?} is not a normalised point of F_{n}")))
        }
    }

    fn coords(&self) -> [Coord; 3] {
        match *self {
            FermatPoint::Trivial { zero, s } => {
                let z = zero as usize;
                let mut c = [Coord::Zero; 3];
                c[(z + 1) % 3] = Coord::Unit(0);
                c[(z + 2) % 3] = Coord::Unit(s);
                c
            }
            FermatPoint::Leopoldt { gamma, exps } => {
                let mut c = [Coord::Zero; 3];
                for j in 0..3 {
                    c[j] = if j == gamma as usize {
                        Coord::Gamma(0)
                    } else {
                        Coord::Unit(1 + 2 * exps[j])
                    };
                }
                c
            }
        }
    }

    fn from_coords(c: [Coord; 3], n: u32) -> Result<Self> {
        let m = 2 * n;
        let diff = |a: u32, b: u32| (a + m - b) % m;
        let zeros: Vec<usize> = (0..3).filter(|&j| c[j] == Coord::Zero).collect();
        let gammas: Vec<usize> = (0..3).filter(|&j| matches!(c[j], Coord::Gamma(_))).collect();
        match (zeros.as_slice(), gammas.as_slice()) {
            ([z], []) => {
                let (Coord::Unit(a), Coord::Unit(b)) = (c[(z + 1) % 3], c[(z + 2) % 3]) else {
                    unreachable!()
                };
                Ok(FermatPoint::Trivial {
                    zero: *z as u8,
                    s: diff(b, a),
                })
            }
            ([], [g]) => {
                let Coord::Gamma(base) = c[*g] else { unreachable!() };
                let mut exps = [0; 3];
                for j in (0..3).filter(|j| j != g) {
                    let Coord::Unit(e) = c[j] else { unreachable!() };
                    let d = diff(e, base);
                    if d % 2 == 0 {
                        return Err(Error::Internal("Leopoldt exponent lost its parity".into()));
                    }
                    exps[j] = (d - 1) / 2;
                }
                Ok(FermatPoint::Leopoldt { gamma: *g as u8, exps })
            }
            _ => Err(Error::Internal("coordinates match no point class".into())),
        }
    }
}

/// An element of `(Z_n + Z_n) x| S3`: multiply coordinate `j` by
/// `zeta^twist[j]` (`twist[2] = 0` after removing scalars), then move
/// coordinate `j` to position `perm[j]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FermatAutomorphism {
    pub twist: [u32; 2],
    pub perm: [u8; 3],
}

impl FermatAutomorphism {
    pub fn identity() -> Self {
        Self {
            twist: [0, 0],
            perm: [0, 1, 2],
        }
    }

    /// Twist by `zeta^a_j` on coordinate `j`, reduced modulo scalars.
    pub fn twist(a: [u32; 3], n: u64) -> Self {
        let n = n as u32;
        Self {
            twist: [(a[0] + n - a[2] % n) % n, (a[1] + n - a[2] % n) % n],
            perm: [0, 1, 2],
        }
    }

    pub fn permutation(perm: [u8; 3]) -> Result<Self> {
        let mut seen = [false; 3];
        for &p in &perm {
            if p > 2 || seen[p as usize] {
                return Err(Error::invalid(format!("{perm:?} is not a permutation of 0, 1, 2")));
            }
            seen[p as usize] = true;
        }
        Ok(Self {
            twist: [0, 0],
            perm,
        })
    }

    fn full_twist(&self) -> [u32; 3] {
        [self.twist[0], self.twist[1], 0]
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Self, n: u64) -> Self {
        let n32 = n as u32;
        let t1 = self.full_twist();
        let t2 = other.full_twist();
        let mut a = [0u32; 3];
        for j in 0..3 {
            a[j] = (t1[other.perm[j] as usize] + t2[j]) % n32;
        }
        let perm = other.perm.map(|k| self.perm[k as usize]);
        Self {
            perm,
            ..Self::twist(a, n)
        }
    }

    pub fn apply(&self, point: &FermatPoint, n: u64) -> Result<FermatPoint> {
        point.validate(n)?;
        let n32 = n as u32;
        let m = 2 * n32;
        let t = self.full_twist();
        let mut moved = [Coord::Zero; 3];
        for (j, c) in point.coords().into_iter().enumerate() {
            let shifted = match c {
                Coord::Zero => Coord::Zero,
                Coord::Unit(e) => Coord::Unit((e + 2 * t[j]) % m),
                Coord::Gamma(e) => Coord::Gamma((e + 2 * t[j]) % m),
            };
            moved[self.perm[j] as usize] = shifted;
        }
        FermatPoint::from_coords(moved, n32)
    }
}

/// Generators: the twists `(1, 0, 0)` and `(0, 1, 0)`, the transposition of
/// the first two coordinates and a 3-cycle.
pub fn generators(n: u64) -> [FermatAutomorphism; 4] {
    [
        FermatAutomorphism::twist([1, 0, 0], n),
        FermatAutomorphism::twist([0, 1, 0], n),
        FermatAutomorphism::permutation([1, 0, 2]).expect("transposition"),
        FermatAutomorphism::permutation([1, 2, 0]).expect("3-cycle"),
    ]
}

/// Every element of the automorphism group, by closure of the generators.
pub fn automorphism_group(n: u64) -> Result<BTreeSet<FermatAutomorphism>> {
    require_n(n, 4, "the automorphism group")?;
    let gens = generators(n);
    let mut seen = BTreeSet::from([FermatAutomorphism::identity()]);
    let mut queue = VecDeque::from([FermatAutomorphism::identity()]);
    while let Some(g) = queue.pop_front() {
        for h in &gens {
            let next = h.compose(&g, n);
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

/// The orbit of `seed` under the automorphism group.
pub fn orbit(n: u64, seed: FermatPoint) -> Result<BTreeSet<FermatPoint>> {
    require_n(n, if seed.is_trivial() { 4 } else { 5 }, "this point class")?;
    seed.validate(n)?;
    let gens = generators(n);
    let mut seen = BTreeSet::from([seed]);
    let mut queue = VecDeque::from([seed]);
    while let Some(p) = queue.pop_front() {
        for g in &gens {
            let next = g.apply(&p, n)?;
            if next.is_trivial() != seed.is_trivial() {
                return Err(Error::Internal("an automorphism changed the point class".into()));
            }
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen)
}

pub fn orbit_enumerate(n: u64, seed: FermatPoint) -> Result<u64> {
    Ok(orbit(n, seed)?.len() as u64)
}

/// The automorphism group is transitive on the Weierstrass points only for
/// `n = 4`.
pub fn fermat_transitivity(n: u64) -> Result<TransitivityVerdict> {
    if n == 3 {
        return Err(Error::GenusTooSmall {
            got: 1,
            min: 2,
            context: "F_3 is elliptic",
        });
    }
    require_n(n, 4, "transitivity")?;
    let acc = weight_accounting(n)?;
    if n == 4 {
        return Ok(TransitivityVerdict::transitive(
            "the 12 trivial points of weight 2 form one orbit and carry the total weight 24",
        )
        .with_reason("F_4 is the surface of the {8,3} map of genus 3 with group of order 96"));
    }
    let min = match acc.conclusion {
        AccountingConclusion::FurtherPointsExist => 3,
        _ => 2,
    };
    let max = acc
        .residual
        .checked_add(2)
        .ok_or(Error::Overflow("fermat_transitivity"))?;
    let mut v = TransitivityVerdict::not_transitive(
        (min, max),
        format!(
            "the {} trivial points and the {} Leopoldt points are Weierstrass points in two distinct orbits",
            acc.trivial_points, acc.leopoldt_points
        ),
    );
    v = v.with_reason(match acc.conclusion {
        AccountingConclusion::AllLocated => "these are all the Weierstrass points".to_string(),
        AccountingConclusion::FurtherPointsExist => {
            format!("a residual weight of {} lies on further Weierstrass points", acc.residual)
        }
        AccountingConclusion::LowerBoundOnly => format!(
            "Leopoldt weights are only bounded below; at most {} weight remains",
            acc.residual
        ),
    });
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Status;

    #[test]
    fn genus_and_weights() {
        assert_eq!(fermat_genus(4), Ok(Genus::new(3)));
        assert_eq!(fermat_genus(5), Ok(Genus::new(6)));
        assert_eq!(fermat_genus(3), Ok(Genus::new(1)));
        assert!(fermat_genus(2).is_err());
        assert_eq!(trivial_point_weight(4), Ok(2));
        assert_eq!(trivial_point_weight(5), Ok(9));
        assert_eq!(trivial_point_weight(3), Ok(0));
        assert_eq!(automorphism_order(5), Ok(150));
    }

    #[test]
    fn leopoldt() {
        let b = |n| leopoldt_weight_bound(n).unwrap();
        assert_eq!(b(5), LeopoldtBound { bound: 1, exact: true });
        assert_eq!(b(6), LeopoldtBound { bound: 1, exact: true });
        assert_eq!(b(7), LeopoldtBound { bound: 3, exact: true });
        assert_eq!(b(9), LeopoldtBound { bound: 6, exact: false });
        assert!(leopoldt_weight_bound(4).is_err());
    }

    #[test]
    fn accounting() {
        let a4 = weight_accounting(4).unwrap();
        assert_eq!((a4.total, a4.trivial_contribution, a4.residual), (24, 24, 0));
        assert_eq!(a4.conclusion, AccountingConclusion::AllLocated);
        let a5 = weight_accounting(5).unwrap();
        assert_eq!((a5.trivial_contribution, a5.leopoldt_contribution, a5.total), (135, 75, 210));
        assert_eq!(a5.residual, 0);
        let a6 = weight_accounting(6).unwrap();
        assert_eq!((a6.trivial_contribution, a6.leopoldt_contribution), (450, 108));
        assert_eq!((a6.total, a6.residual), (990, 432));
        assert_eq!(a6.conclusion, AccountingConclusion::FurtherPointsExist);
        assert_eq!(weight_accounting(7).unwrap().residual, 1764);
        assert_eq!(weight_accounting(8).unwrap().residual, 6144);
        assert_eq!(weight_accounting(9).unwrap().conclusion, AccountingConclusion::LowerBoundOnly);
    }

    #[test]
    fn orbits() {
        assert_eq!(orbit_enumerate(4, FermatPoint::trivial(0, 0)), Ok(12));
        assert_eq!(orbit_enumerate(5, FermatPoint::trivial(2, 3)), Ok(15));
        assert_eq!(orbit_enumerate(5, FermatPoint::leopoldt(1, 2, 4)), Ok(75));
        assert!(orbit_enumerate(4, FermatPoint::leopoldt(0, 0, 0)).is_err());
        assert!(orbit_enumerate(5, FermatPoint::Trivial { zero: 0, s: 2 }).is_err());
    }

    #[test]
    fn group() {
        assert_eq!(automorphism_group(4).unwrap().len(), 96);
        assert_eq!(automorphism_group(5).unwrap().len(), 150);
    }

    #[test]
    fn action_is_a_homomorphism() {
        let n = 5;
        let group: Vec<_> = automorphism_group(n).unwrap().into_iter().step_by(7).collect();
        let points = [FermatPoint::trivial(1, 2), FermatPoint::leopoldt(2, 1, 3)];
        for g in &group {
            for h in &group {
                let gh = g.compose(h, n);
                for p in &points {
                    assert_eq!(gh.apply(p, n), g.apply(&h.apply(p, n).unwrap(), n));
                }
            }
        }
    }

    #[test]
    fn verdicts() {
        assert!(fermat_transitivity(4).unwrap().is_transitive());
        let v5 = fermat_transitivity(5).unwrap();
        assert_eq!(v5.status, Status::NotTransitive);
        assert_eq!(v5.orbit_count_range, (2, 2));
        assert_eq!(fermat_transitivity(6).unwrap().orbit_count_range.0, 3);
        assert_eq!(fermat_transitivity(9).unwrap().status, Status::NotTransitive);
        assert!(matches!(fermat_transitivity(3), Err(Error::GenusTooSmall { .. })));
    }
}
