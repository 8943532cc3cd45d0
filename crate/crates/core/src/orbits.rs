//! Orbit counting for groups acting on Weierstrass points.
//!
//! If `G` acts on a surface through a regular map, every point lies in an
//! orbit of size `|G| / |G_p|`, where the stabiliser `G_p` is trivial or the
//! stabiliser of a vertex, face-centre or edge-centre. Weierstrass weights are
//! constant on orbits, so the weights `w_j` of the orbits of size `sigma_j`
//! satisfy `sum w_j sigma_j = g^3 - g`. Enumerating the nonnegative solutions
//! bounds how many orbits the Weierstrass points can form.

use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::shard_map;
use crate::surface::{total_weight, Genus};
use crate::verdict::TransitivityVerdict;
use crate::{Error, Result};

/// Orbit sizes of a group of order `group_order` acting through a map with
/// the given stabiliser orders. The free orbit comes last.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitProfile {
    pub group_order: u64,
    pub stabilizer_orders: Vec<u64>,
    pub orbit_sizes: Vec<u64>,
}

/// Orbits for the periods in descending order, then the free orbit:
/// `[|G|/m_max, ..., |G|/m_min, |G|]`.
pub fn orbit_profile(group_order: u64, periods: &[u64]) -> Result<OrbitProfile> {
    if group_order == 0 {
        return Err(Error::invalid("group order must be positive"));
    }
    let mut stabilizer_orders = periods.to_vec();
    if let Some(&bad) = stabilizer_orders
        .iter()
        .find(|&&m| m < 2 || !group_order.is_multiple_of(m))
    {
        return Err(Error::invalid(format!(
            "period {bad} must be >= 2 and divide the group order {group_order}"
        )));
    }
    stabilizer_orders.sort_unstable_by(|a, b| b.cmp(a));
    stabilizer_orders.push(1);
    let orbit_sizes = stabilizer_orders.iter().map(|m| group_order / m).collect();
    Ok(OrbitProfile {
        group_order,
        stabilizer_orders,
        orbit_sizes,
    })
}

/// All nonnegative solutions of `sum c_i w_i = target`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightEquationSolutionSet {
    pub coefficients: Vec<u64>,
    pub target: u64,
    /// Lexicographically sorted.
    pub solutions: Vec<Vec<u64>>,
    /// The orbit profile the coefficients came from, when known.
    pub profile: Option<OrbitProfile>,
}

impl WeightEquationSolutionSet {
    /// Solutions ordered by number of nonzero weights, then lexicographically.
    /// This groups one-orbit, two-orbit and three-orbit cases together.
    pub fn by_orbit_count(&self) -> Vec<Vec<u64>> {
        let mut out = self.solutions.clone();
        out.sort_by(|a, b| nonzero(a).cmp(&nonzero(b)).then_with(|| a.cmp(b)));
        out
    }

    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }
}

fn nonzero(v: &[u64]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

pub fn solve_weight_equation(coefficients: &[u64], target: u64) -> Result<WeightEquationSolutionSet> {
    solve_weight_equation_sharded(coefficients, target, 1)
}

/// As [`solve_weight_equation`], sharding on the first coordinate.
pub fn solve_weight_equation_sharded(
    coefficients: &[u64],
    target: u64,
    workers: usize,
) -> Result<WeightEquationSolutionSet> {
    if coefficients.contains(&0) {
        return Err(Error::invalid("coefficients must be positive"));
    }
    let solutions = match coefficients.split_first() {
        None => {
            if target == 0 {
                vec![Vec::new()]
            } else {
                Vec::new()
            }
        }
        Some((&first, rest)) => {
            let chunks = shard_map(0, target / first, workers, |w0| {
                let mut found = Vec::new();
                let mut prefix = vec![w0];
                extend(rest, target - w0 * first, &mut prefix, &mut found);
                (!found.is_empty()).then_some(found)
            });
            chunks.into_iter().flatten().collect()
        }
    };
    for s in &solutions {
        let sum: u128 = s
            .iter()
            .zip(coefficients)
            .map(|(&w, &c)| w as u128 * c as u128)
            .sum();
        if sum != target as u128 {
            return Err(Error::Internal(format!("solver produced a non-solution {s:?}")));
        }
    }
    Ok(WeightEquationSolutionSet {
        coefficients: coefficients.to_vec(),
        target,
        solutions,
        profile: None,
    })
}

fn extend(coefficients: &[u64], remaining: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    match coefficients.split_first() {
        None => {
            if remaining == 0 {
                out.push(prefix.clone());
            }
        }
        Some((&c, rest)) => {
            for w in 0..=remaining / c {
                prefix.push(w);
                extend(rest, remaining - w * c, prefix, out);
                prefix.pop();
            }
        }
    }
}

/// Solves `sum w_j sigma_j = g^3 - g` for the orbit sizes of a map with the
/// given periods, where `g` is the genus of the surface.
pub fn solve_for_profile(profile: &OrbitProfile, g: Genus) -> Result<WeightEquationSolutionSet> {
    let mut set = solve_weight_equation(&profile.orbit_sizes, total_weight(g)?)?;
    set.profile = Some(profile.clone());
    Ok(set)
}

/// Weights forced to zero, 1-based (`w1 = 0` is index 1).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroMask(pub BTreeSet<usize>);

impl ZeroMask {
    pub fn new(indices: impl IntoIterator<Item = usize>) -> Self {
        ZeroMask(indices.into_iter().collect())
    }

    fn admits(&self, solution: &[u64]) -> bool {
        self.0.iter().all(|&i| solution[i - 1] == 0)
    }
}

impl FromStr for ZeroMask {
    type Err = Error;

    /// Parses `w1=0,w2=0`.
    fn from_str(s: &str) -> Result<Self> {
        let mut out = BTreeSet::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (var, value) = part
                .split_once('=')
                .ok_or_else(|| Error::invalid(format!("mask entry `{part}` is not of the form wN=0")))?;
            let index = var
                .trim()
                .strip_prefix('w')
                .and_then(|n| n.parse::<usize>().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| Error::invalid(format!("bad mask variable `{var}`")))?;
            if value.trim() != "0" {
                return Err(Error::invalid(format!("mask entry `{part}` must force zero")));
            }
            out.insert(index);
        }
        Ok(ZeroMask(out))
    }
}

impl std::fmt::Display for ZeroMask {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| format!("w{i}=0")).collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub verdict: TransitivityVerdict,
    /// Solutions that survive the mask, in lexicographic order.
    pub surviving: Vec<Vec<u64>>,
    /// 1-based coordinates nonzero in every surviving solution: orbits that
    /// certainly consist of Weierstrass points.
    pub guaranteed: Vec<usize>,
}

/// Classifies a solution set after applying an optional zero mask.
///
/// One surviving solution with a single nonzero weight is transitive. If
/// every solution has at least two nonzero weights the action is not
/// transitive. Anything else is undecided, with the orbit count bounded by
/// the fewest and most nonzero weights.
pub fn classify(set: &WeightEquationSolutionSet, mask: Option<&ZeroMask>) -> Result<Classification> {
    let width = set.coefficients.len();
    if let Some(m) = mask {
        if let Some(&bad) = m.0.iter().find(|&&i| i > width) {
            return Err(Error::invalid(format!(
                "mask refers to w{bad} but there are only {width} weights"
            )));
        }
    }
    let surviving: Vec<Vec<u64>> = set
        .solutions
        .iter()
        .filter(|s| mask.is_none_or(|m| m.admits(s)))
        .cloned()
        .collect();
    if surviving.is_empty() {
        return Err(Error::InconsistentConstraints(match mask {
            Some(m) if !set.solutions.is_empty() => format!("no solution satisfies {m}"),
            _ => format!("the weight equation has no solution for target {}", set.target),
        }));
    }
    let guaranteed: Vec<usize> = (0..width)
        .filter(|&i| surviving.iter().all(|s| s[i] != 0))
        .map(|i| i + 1)
        .collect();
    let counts: Vec<u64> = surviving.iter().map(|s| nonzero(s) as u64).collect();
    let min = *counts.iter().min().unwrap();
    let max = *counts.iter().max().unwrap();

    let mut verdict = if surviving.len() == 1 && min == 1 {
        let i = guaranteed[0];
        let weight = surviving[0][i - 1];
        let mut v = TransitivityVerdict::transitive(format!(
            "the only solution puts weight {weight} on orbit {i} of size {}",
            set.coefficients[i - 1]
        ));
        if let Some(p) = &set.profile {
            if p.stabilizer_orders[i - 1] == 1 {
                v = v.with_reason("the Weierstrass orbit would be a free orbit, with no geometric point");
            }
        }
        v
    } else if min >= 2 {
        TransitivityVerdict::not_transitive(
            (min, max),
            "every solution has at least two nonzero orbit weights",
        )
    } else {
        TransitivityVerdict::undecided(
            (min, max),
            format!(
                "{} solutions with between {min} and {max} Weierstrass orbits",
                surviving.len()
            ),
        )
    };
    if let Some(m) = mask {
        verdict = verdict.with_reason(format!("constraints applied: {m}"));
    }
    for &i in &guaranteed {
        verdict = verdict.with_reason(format!("orbit {i} consists of Weierstrass points in every case"));
    }
    Ok(Classification {
        verdict,
        surviving,
        guaranteed,
    })
}

/// Result of the necessary condition for a transitive action.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NecessaryWeight {
    /// Every Weierstrass point would have this weight.
    Weight(u64),
    /// `|G_p| (g^3 - g) / |G|` is not an integer, so no transitive action with
    /// this stabiliser exists.
    Impossible { numer: u64, denom: u64 },
}

impl NecessaryWeight {
    pub fn weight(self) -> Option<u64> {
        match self {
            NecessaryWeight::Weight(w) => Some(w),
            NecessaryWeight::Impossible { .. } => None,
        }
    }
}

/// If `G` is transitive on the Weierstrass points, with stabiliser of order
/// `stabilizer_order`, each point has weight `|G_p| (g^3 - g) / |G|`.
pub fn necessary_weight(group_order: u64, stabilizer_order: u64, g: Genus) -> Result<NecessaryWeight> {
    if group_order == 0 || stabilizer_order == 0 {
        return Err(Error::invalid("group and stabiliser orders must be positive"));
    }
    g.require_at_least(2, "Weierstrass points need g >= 2")?;
    let numer = stabilizer_order
        .checked_mul(total_weight(g)?)
        .ok_or(Error::Overflow("necessary_weight"))?;
    Ok(if numer % group_order == 0 {
        NecessaryWeight::Weight(numer / group_order)
    } else {
        NecessaryWeight::Impossible {
            numer,
            denom: group_order,
        }
    })
}

/// Stabiliser orders `m` in `{7, 3, 2}` for which a Hurwitz group of genus
/// `g` could be transitive: `m g (g + 1) = 0 mod 84`.
pub fn hurwitz_divisibility(g: Genus) -> Result<BTreeSet<u64>> {
    g.require_at_least(2, "Hurwitz groups need g >= 2")?;
    let n = g.get() as u128 * (g.get() as u128 + 1);
    Ok([7u64, 3, 2]
        .into_iter()
        .filter(|&m| (m as u128 * n).is_multiple_of(84))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SimplePointKind {
    /// Outside the hypothesis `g > 2`.
    Excluded,
    /// No transitive action with simple Weierstrass points.
    Rejected,
    /// A known surface with simple Weierstrass points forming one orbit.
    Survives,
    /// Not ruled out, not known to occur.
    Possible,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplePointOutcome {
    pub genus: Genus,
    pub kind: SimplePointKind,
    pub surface: Option<String>,
    pub reason: String,
}

/// Largest automorphism group in genus 7 other than Macbeath's, a quotient of
/// the `(2,3,8)` triangle group.
pub const GENUS7_SECOND_ORDER: u64 = 288;

/// Platonic candidates with `|G| = (g^3 - g) |G_p|` from the census of regular
/// maps in genera 3 to 5: (genus, surface, group order, stabiliser order).
const SIMPLE_CANDIDATES: [(u64, &str, u64, u64); 3] = [
    (5, "icosahedron vertex cover, type {3,10}", 120, 10),
    (4, "Bring's surface, type {4,5}", 120, 2),
    (3, "Klein's surface, type {3,7}", 168, 7),
];

/// Runs the elimination for surfaces of genus `g > 2` with a group transitive
/// on simple Weierstrass points, given the maximal automorphism group orders
/// `M(g)` for `g = 2..=8`.
///
/// Such a surface has `g^3 - g <= 84(g - 1)`, hence `g <= 8`. Table entries
/// above 8 come back as rejected.
pub fn simple_point_analysis(m_table: &BTreeMap<u64, u64>) -> Result<Vec<SimplePointOutcome>> {
    if let Some(g) = (2..=8).find(|g| !m_table.contains_key(g)) {
        return Err(Error::invalid(format!("M({g}) is missing from the table")));
    }
    let mut out = Vec::new();
    let outcome = |g: u64, kind, surface: Option<&str>, reason: String| SimplePointOutcome {
        genus: Genus::new(g),
        kind,
        surface: surface.map(str::to_owned),
        reason,
    };
    for (&g, &m) in m_table {
        if g < 2 {
            continue;
        }
        let total = total_weight(Genus::new(g))?;
        if g == 2 {
            out.push(outcome(g, SimplePointKind::Excluded, None, "genus 2 is below the hypothesis g > 2".into()));
            continue;
        }
        if g * (g + 1) > 84 {
            out.push(outcome(
                g,
                SimplePointKind::Rejected,
                None,
                format!("out of range: g(g+1) = {} > 84", g * (g + 1)),
            ));
            continue;
        }
        if total > m {
            out.push(outcome(
                g,
                SimplePointKind::Rejected,
                None,
                format!("{g}^3-{g} = {total} > M({g}) = {m}"),
            ));
            continue;
        }
        if g == 7 {
            let w = necessary_weight(m, 3, Genus::new(g))?;
            out.push(outcome(
                g,
                SimplePointKind::Rejected,
                None,
                format!(
                    "Macbeath's surface (order {m}) has Weierstrass weight {}; the next order {GENUS7_SECOND_ORDER} < {total}",
                    w.weight().map_or("non-integral".to_string(), |w| w.to_string())
                ),
            ));
            continue;
        }
        for &(cg, name, order, stab) in SIMPLE_CANDIDATES.iter().filter(|c| c.0 == g) {
            let kind;
            let reason = match necessary_weight(order, stab, Genus::new(g))? {
                NecessaryWeight::Weight(1) => {
                    kind = SimplePointKind::Survives;
                    format!("order {order}, stabiliser {stab}: {total} simple Weierstrass points in one orbit")
                }
                NecessaryWeight::Weight(w) => {
                    kind = SimplePointKind::Rejected;
                    format!("the only candidate has Weierstrass weight {w}")
                }
                NecessaryWeight::Impossible { numer, denom } => {
                    kind = SimplePointKind::Rejected;
                    format!("weight {numer}/{denom} is not an integer")
                }
            };
            out.push(outcome(cg, kind, Some(name), reason));
        }
        if g == 3 {
            let w = necessary_weight(24, 1, Genus::new(3))?;
            if w != NecessaryWeight::Weight(1) {
                return Err(Error::Internal("S4 free action weight".into()));
            }
            out.push(outcome(
                3,
                SimplePointKind::Possible,
                Some("S4 acting with signature (0; 2, 2, 2, 3)"),
                "a free orbit of 24 simple points is numerically possible; no such surface is known".into(),
            ));
        }
    }
    Ok(out)
}

/// `M(g)` for `g = 2..=8`.
pub fn standard_m_table() -> BTreeMap<u64, u64> {
    [(2, 48), (3, 168), (4, 120), (5, 192), (6, 150), (7, 504), (8, 336)]
        .into_iter()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profiles() {
        let p = orbit_profile(168, &[2, 3, 7]).unwrap();
        assert_eq!(p.orbit_sizes, vec![24, 56, 84, 168]);
        assert_eq!(p.stabilizer_orders, vec![7, 3, 2, 1]);
        assert_eq!(orbit_profile(504, &[2, 3, 7]).unwrap().orbit_sizes, vec![72, 168, 252, 504]);
        assert_eq!(
            orbit_profile(1092, &[7, 2, 3]).unwrap().orbit_sizes,
            vec![156, 364, 546, 1092]
        );
        assert!(orbit_profile(100, &[2, 3, 7]).is_err());
    }

    #[test]
    fn klein_and_macbeath() {
        let k = solve_weight_equation(&[24, 56, 84, 168], 24).unwrap();
        assert_eq!(k.solutions, vec![vec![1, 0, 0, 0]]);
        let c = classify(&k, None).unwrap();
        assert!(c.verdict.is_transitive());
        let m = solve_weight_equation(&[72, 168, 252, 504], 336).unwrap();
        assert_eq!(m.solutions, vec![vec![0, 2, 0, 0]]);
    }

    #[test]
    fn psl13() {
        let set = solve_weight_equation(&[156, 364, 546, 1092], 2730).unwrap();
        assert_eq!(set.len(), 10);
        let c = classify(&set, None).unwrap();
        assert_eq!(c.verdict.orbit_count_range, (1, 3));
        assert_eq!(c.guaranteed, vec![3]);
        let mask: ZeroMask = "w1=0,w2=0".parse().unwrap();
        let c = classify(&set, Some(&mask)).unwrap();
        assert_eq!(c.surviving.len(), 3);
        assert_eq!(c.verdict.orbit_count_range, (1, 2));
        assert_eq!(c.verdict.status, crate::Status::Undecided);
    }

    #[test]
    fn edge_cases() {
        assert!(solve_weight_equation(&[2], 1).unwrap().is_empty());
        assert_eq!(solve_weight_equation(&[3, 5], 0).unwrap().solutions, vec![vec![0, 0]]);
        assert!(solve_weight_equation(&[0, 1], 3).is_err());
        let empty = solve_weight_equation(&[2], 1).unwrap();
        assert!(matches!(classify(&empty, None), Err(Error::InconsistentConstraints(_))));
        let set = solve_weight_equation(&[1, 1], 2).unwrap();
        let all = ZeroMask::new([1, 2]);
        assert!(matches!(classify(&set, Some(&all)), Err(Error::InconsistentConstraints(_))));
        assert!(classify(&set, Some(&ZeroMask::new([3]))).is_err());
        let c = classify(&solve_weight_equation(&[2, 3], 5).unwrap(), None).unwrap();
        assert_eq!(c.verdict.status, crate::Status::NotTransitive);
    }

    #[test]
    fn mask_parsing() {
        assert_eq!("w1=0, w3=0".parse::<ZeroMask>().unwrap(), ZeroMask::new([1, 3]));
        assert!("w1=1".parse::<ZeroMask>().is_err());
        assert!("x1=0".parse::<ZeroMask>().is_err());
        assert!("w0=0".parse::<ZeroMask>().is_err());
        assert_eq!(ZeroMask::new([1, 2]).to_string(), "w1=0,w2=0");
    }

    #[test]
    fn sharded_matches_serial() {
        let a = solve_weight_equation(&[156, 364, 546, 1092], 2730).unwrap();
        let b = solve_weight_equation_sharded(&[156, 364, 546, 1092], 2730, 4).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn paper_list_order() {
        let set = solve_weight_equation(&[156, 364, 546, 1092], 2730).unwrap();
        let expected: Vec<Vec<u64>> = vec![
            vec![0, 0, 5, 0],
            vec![0, 0, 1, 2],
            vec![0, 0, 3, 1],
            vec![0, 3, 3, 0],
            vec![0, 6, 1, 0],
            vec![7, 0, 3, 0],
            vec![14, 0, 1, 0],
            vec![0, 3, 1, 1],
            vec![7, 0, 1, 1],
            vec![7, 3, 1, 0],
        ];
        assert_eq!(set.by_orbit_count(), expected);
    }

    #[test]
    fn necessary_condition() {
        assert_eq!(necessary_weight(168, 7, Genus::new(3)), Ok(NecessaryWeight::Weight(1)));
        assert_eq!(necessary_weight(504, 3, Genus::new(7)), Ok(NecessaryWeight::Weight(2)));
        for m in [2, 3, 7] {
            assert!(necessary_weight(1344, m, Genus::new(17)).unwrap().weight().is_none());
        }
        assert!(necessary_weight(168, 7, Genus::new(1)).is_err());
    }

    #[test]
    fn hurwitz_sets() {
        assert!(hurwitz_divisibility(Genus::new(17)).unwrap().is_empty());
        assert_eq!(hurwitz_divisibility(Genus::new(14)).unwrap(), BTreeSet::from([2]));
        assert_eq!(hurwitz_divisibility(Genus::new(3)).unwrap(), BTreeSet::from([7]));
    }

    #[test]
    fn simple_points() {
        let out = simple_point_analysis(&standard_m_table()).unwrap();
        let survivors: Vec<(u64, SimplePointKind)> = out
            .iter()
            .filter(|o| matches!(o.kind, SimplePointKind::Survives | SimplePointKind::Possible))
            .map(|o| (o.genus.get(), o.kind))
            .collect();
        assert_eq!(
            survivors,
            vec![
                (3, SimplePointKind::Survives),
                (3, SimplePointKind::Possible),
                (4, SimplePointKind::Survives)
            ]
        );
        let g6 = out.iter().find(|o| o.genus.get() == 6).unwrap();
        assert_eq!(g6.kind, SimplePointKind::Rejected);
        assert!(g6.reason.contains("210 > M(6) = 150"));
        let g5 = out.iter().find(|o| o.genus.get() == 5).unwrap();
        assert!(g5.reason.contains("weight 10"));

        let mut extended = standard_m_table();
        extended.insert(9, 320);
        let g9 = simple_point_analysis(&extended).unwrap();
        assert!(g9.iter().any(|o| o.genus.get() == 9 && o.reason.contains("out of range")));

        let mut missing = standard_m_table();
        missing.remove(&5);
        assert!(simple_point_analysis(&missing).is_err());
    }
}
