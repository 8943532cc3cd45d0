//! Genus arithmetic, Weierstrass weight totals, Riemann–Hurwitz bookkeeping
//! and structural checks on regular-map descriptors.
//!
//! Everything here is integer or exact-rational arithmetic.

use serde::{Deserialize, Serialize};

use crate::arith::{rational, Rational};
use crate::{Error, Result};

/// Topological genus of a compact orientable surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Genus(u64);

impl Genus {
    pub const fn new(value: u64) -> Self {
        Genus(value)
    }

    pub const fn get(self) -> u64 {
        self.0
    }

    /// Genus 0 and 1 carry no Weierstrass points.
    pub const fn below_weierstrass_threshold(self) -> bool {
        self.0 < 2
    }

    /// Euler characteristic `2 - 2g`.
    pub fn euler_characteristic(self) -> i128 {
        2 - 2 * self.0 as i128
    }

    pub(crate) fn require_at_least(self, min: u64, context: &'static str) -> Result<()> {
        if self.0 < min {
            Err(Error::GenusTooSmall {
                got: self.0,
                min,
                context,
            })
        } else {
            Ok(())
        }
    }
}

impl std::fmt::Display for Genus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u64> for Genus {
    fn from(value: u64) -> Self {
        Genus(value)
    }
}

/// Total weight `g^3 - g` of the Weierstrass points on a genus-`g` surface.
///
/// Genus 1 is accepted and returns 0 (the torus has no Weierstrass points).
pub fn total_weight(g: Genus) -> Result<u64> {
    g.require_at_least(1, "no Weierstrass theory on the sphere")?;
    let g = g.get();
    g.checked_mul(g)
        .and_then(|sq| sq.checked_mul(g))
        .map(|cube| cube - g)
        .ok_or(Error::Overflow("total_weight"))
}

/// [`total_weight`] without the `u64` range limit.
pub fn total_weight_wide(g: Genus) -> Result<u128> {
    g.require_at_least(1, "no Weierstrass theory on the sphere")?;
    let g = g.get() as u128;
    g.checked_mul(g)
        .and_then(|sq| sq.checked_mul(g))
        .map(|cube| cube - g)
        .ok_or(Error::Overflow("total_weight"))
}

/// Bounds on the number of Weierstrass points, `2g + 2 <= |W| <= g^3 - g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeierstrassBounds {
    pub min: u64,
    pub max: u64,
}

impl WeierstrassBounds {
    pub const MIN_ATTAINED: &'static str =
        "the minimum 2g+2 is attained exactly by hyperelliptic surfaces";
}

pub fn weierstrass_count_bounds(g: Genus) -> Result<WeierstrassBounds> {
    g.require_at_least(2, "Weierstrass point bounds need g >= 2")?;
    Ok(WeierstrassBounds {
        min: 2 * g.get() + 2,
        max: total_weight(g)?,
    })
}

/// Genus of a double cover of the sphere branched over `branch_points` points.
pub fn double_cover_genus(branch_points: u64) -> Result<Genus> {
    if branch_points < 2 || !branch_points.is_multiple_of(2) {
        return Err(Error::invalid(format!(
            "a double cover of the sphere has an even number (>= 2) of branch points, got {branch_points}"
        )));
    }
    Ok(Genus((branch_points - 2) / 2))
}

/// Weight `sum (gap_i - i)` of a point with the given gap sequence.
///
/// The gaps must satisfy `1 = gap_1 < gap_2 < ... < gap_g < 2g`.
pub fn gap_weight(gaps: &[u64]) -> Result<u64> {
    let g = gaps.len() as u64;
    if g == 0 {
        return Ok(0);
    }
    if gaps[0] != 1 {
        return Err(Error::invalid("first gap must be 1"));
    }
    if gaps.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid("gaps must be strictly increasing"));
    }
    if *gaps.last().unwrap() >= 2 * g {
        return Err(Error::invalid(format!("gaps must be below 2g = {}", 2 * g)));
    }
    Ok(gaps
        .iter()
        .zip(1u64..)
        .map(|(&gap, i)| gap - i)
        .sum())
}

/// Whether a signature's orbifold is spherical, Euclidean or hyperbolic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Geometry {
    Spherical,
    Euclidean,
    Hyperbolic,
}

/// Signature `(h; m_1, ..., m_r)` of a group acting on a surface: the orbit
/// genus `h` and the branching periods.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FuchsianSignature {
    pub orbit_genus: u64,
    pub periods: Vec<u64>,
}

impl FuchsianSignature {
    pub fn new(orbit_genus: u64, periods: impl Into<Vec<u64>>) -> Result<Self> {
        let periods = periods.into();
        if let Some(&bad) = periods.iter().find(|&&m| m < 2) {
            return Err(Error::invalid(format!("period {bad} is below 2")));
        }
        Ok(Self {
            orbit_genus,
            periods,
        })
    }

    /// Triangle signature `(0; a, b, c)`.
    pub fn triangle(a: u64, b: u64, c: u64) -> Result<Self> {
        Self::new(0, vec![a, b, c])
    }

    /// `(0; 2^(2g+2))`, the signature whose index-2 surface subgroups give the
    /// hyperelliptic surfaces of genus `g`.
    pub fn hyperelliptic(g: Genus) -> Self {
        Self {
            orbit_genus: 0,
            periods: vec![2; (2 * g.get() + 2) as usize],
        }
    }

    /// Normalised area `2h - 2 + sum (1 - 1/m_i)`.
    pub fn area(&self) -> Rational {
        let base = rational(2 * self.orbit_genus as i128 - 2, 1);
        self.periods
            .iter()
            .fold(base, |acc, &m| acc + rational(m as i128 - 1, m as i128))
    }

    pub fn geometry(&self) -> Geometry {
        let area = self.area();
        if area > rational(0, 1) {
            Geometry::Hyperbolic
        } else if area == rational(0, 1) {
            Geometry::Euclidean
        } else {
            Geometry::Spherical
        }
    }
}

impl std::fmt::Display for FuchsianSignature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({};", self.orbit_genus)?;
        for (i, m) in self.periods.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{m}")?;
        }
        f.write_str(")")
    }
}

/// True iff a surface group of genus `surface_genus` can sit at `index` in a
/// group with signature `sig`, i.e. `index * area(sig) = 2g - 2`.
///
/// Euclidean signatures (area 0) are accepted and can only match genus 1.
/// Spherical signatures are rejected.
pub fn rh_area_consistency(sig: &FuchsianSignature, index: u64, surface_genus: Genus) -> Result<bool> {
    if index == 0 {
        return Err(Error::invalid("index must be positive"));
    }
    if sig.geometry() == Geometry::Spherical {
        return Err(Error::invalid(format!(
            "signature {sig} has negative area and acts on the sphere"
        )));
    }
    let lhs = sig.area() * rational(index as i128, 1);
    let rhs = rational(2 * surface_genus.get() as i128 - 2, 1);
    Ok(lhs == rhs)
}

/// A regular map of type `{n, m}`: faces are `n`-gons, vertices have valency
/// `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RegularMapDescriptor {
    pub face_valency: u64,
    pub vertex_valency: u64,
    pub vertices: u64,
    pub edges: u64,
    pub faces: u64,
    pub genus: Genus,
}

impl RegularMapDescriptor {
    /// Type pair `{n, m}` as printed, face valency first.
    pub fn type_pair(&self) -> (u64, u64) {
        (self.face_valency, self.vertex_valency)
    }

    fn swapped(&self) -> Self {
        Self {
            face_valency: self.vertex_valency,
            vertex_valency: self.face_valency,
            ..*self
        }
    }

    fn identity_failures(&self) -> Vec<String> {
        let mut failures = Vec::new();
        let two_e = 2 * self.edges as u128;
        if self.vertex_valency as u128 * self.vertices as u128 != two_e {
            failures.push(format!(
                "vertex darts: {}*{} != 2*{}",
                self.vertex_valency, self.vertices, self.edges
            ));
        }
        if self.face_valency as u128 * self.faces as u128 != two_e {
            failures.push(format!(
                "face darts: {}*{} != 2*{}",
                self.face_valency, self.faces, self.edges
            ));
        }
        let euler = self.vertices as i128 - self.edges as i128 + self.faces as i128;
        if euler != self.genus.euler_characteristic() {
            failures.push(format!(
                "Euler: {} - {} + {} = {euler} != 2 - 2*{}",
                self.vertices, self.edges, self.faces, self.genus
            ));
        }
        failures
    }
}

impl std::fmt::Display for RegularMapDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{{{},{}}} g={} V={} E={} F={}",
            self.face_valency, self.vertex_valency, self.genus, self.vertices, self.edges, self.faces
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapStatus {
    Valid,
    /// The stated `{n, m}` failed but `{m, n}` satisfies every identity.
    Normalized,
    Invalid,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub status: MapStatus,
    /// The descriptor in face-valency-first orientation when the status is
    /// valid or normalized; the input unchanged otherwise.
    pub map: RegularMapDescriptor,
    pub failures: Vec<String>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.status != MapStatus::Invalid
    }
}

/// Checks `m V = 2E`, `n F = 2E` and `V - E + F = 2 - 2g`.
///
/// Tables in the literature sometimes list `{m, n}` with vertex valency first,
/// so a descriptor that only passes with the pair swapped is reported as
/// [`MapStatus::Normalized`] and returned in the corrected orientation.
pub fn validate_map(d: &RegularMapDescriptor) -> Result<ValidationReport> {
    let fields = [d.face_valency, d.vertex_valency, d.vertices, d.edges, d.faces];
    if fields.contains(&0) {
        return Err(Error::invalid(format!("map descriptor has a zero field: {d}")));
    }
    let failures = d.identity_failures();
    if failures.is_empty() {
        return Ok(ValidationReport {
            status: MapStatus::Valid,
            map: *d,
            failures,
        });
    }
    let swapped = d.swapped();
    if swapped.identity_failures().is_empty() {
        return Ok(ValidationReport {
            status: MapStatus::Normalized,
            map: swapped,
            failures,
        });
    }
    Ok(ValidationReport {
        status: MapStatus::Invalid,
        map: *d,
        failures,
    })
}

/// One class of points with a common weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightEntry {
    pub label: String,
    pub count: u64,
    pub weight: u64,
}

/// Weights carried by classes of points on a surface.
///
/// The weighted sum never exceeds `g^3 - g`; it equals it exactly when the
/// distribution is declared complete.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistribution {
    pub genus: Genus,
    pub entries: Vec<WeightEntry>,
    pub complete: bool,
}

impl WeightDistribution {
    pub fn weighted_sum(&self) -> Result<u64> {
        self.entries.iter().try_fold(0u64, |acc, e| {
            e.count
                .checked_mul(e.weight)
                .and_then(|w| acc.checked_add(w))
                .ok_or(Error::Overflow("weighted_sum"))
        })
    }

    /// Checks the weighted sum against the total weight of the genus.
    pub fn check(&self) -> Result<u64> {
        if self.entries.iter().any(|e| e.count == 0) {
            return Err(Error::invalid("weight entry with zero count"));
        }
        let sum = self.weighted_sum()?;
        let total = total_weight(self.genus)?;
        if sum > total {
            return Err(Error::InconsistentConstraints(format!(
                "weights sum to {sum}, above the total {total} for genus {}",
                self.genus
            )));
        }
        if self.complete && sum != total {
            return Err(Error::InconsistentConstraints(format!(
                "complete distribution sums to {sum}, expected {total}"
            )));
        }
        Ok(sum)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(n: u64, m: u64, v: u64, e: u64, f: u64, g: u64) -> RegularMapDescriptor {
        RegularMapDescriptor {
            face_valency: n,
            vertex_valency: m,
            vertices: v,
            edges: e,
            faces: f,
            genus: Genus::new(g),
        }
    }

    #[test]
    fn total_weight_examples() {
        assert_eq!(total_weight(Genus::new(3)), Ok(24));
        assert_eq!(total_weight(Genus::new(1)), Ok(0));
        assert_eq!(total_weight(Genus::new(7)), Ok(336));
        assert_eq!(total_weight(Genus::new(1_000_000)), Ok(999_999_999_999_000_000));
        assert!(matches!(
            total_weight(Genus::new(0)),
            Err(Error::GenusTooSmall { got: 0, .. })
        ));
        assert_eq!(total_weight(Genus::new(u64::MAX)), Err(Error::Overflow("total_weight")));
        assert_eq!(total_weight_wide(Genus::new(3_000_000)), Ok(26_999_999_999_997_000_000));
    }

    #[test]
    fn count_bounds() {
        let b = weierstrass_count_bounds(Genus::new(2)).unwrap();
        assert_eq!((b.min, b.max), (6, 6));
        let b = weierstrass_count_bounds(Genus::new(3)).unwrap();
        assert_eq!((b.min, b.max), (8, 24));
        let b = weierstrass_count_bounds(Genus::new(14)).unwrap();
        assert_eq!((b.min, b.max), (30, 2730));
        assert!(weierstrass_count_bounds(Genus::new(1)).is_err());
    }

    #[test]
    fn double_covers() {
        assert_eq!(double_cover_genus(8), Ok(Genus::new(3)));
        assert_eq!(double_cover_genus(12), Ok(Genus::new(5)));
        assert_eq!(double_cover_genus(2), Ok(Genus::new(0)));
        assert!(double_cover_genus(7).is_err());
        assert!(double_cover_genus(0).is_err());
    }

    #[test]
    fn gap_weights() {
        assert_eq!(gap_weight(&[1, 2, 3]), Ok(0));
        // hyperelliptic Weierstrass point of genus 3: gaps 1, 3, 5
        assert_eq!(gap_weight(&[1, 3, 5]), Ok(3));
        assert!(gap_weight(&[1, 3, 6]).is_err());
        assert!(gap_weight(&[2, 3]).is_err());
        assert!(gap_weight(&[1, 1]).is_err());
    }

    #[test]
    fn map_validation() {
        let cube_cover = map(4, 6, 8, 24, 12, 3);
        assert_eq!(validate_map(&cube_cover).unwrap().status, MapStatus::Valid);

        let printed = map(3, 10, 40, 60, 12, 5);
        let report = validate_map(&printed).unwrap();
        assert_eq!(report.status, MapStatus::Normalized);
        assert_eq!(report.map.type_pair(), (10, 3));

        let bring = map(5, 4, 30, 60, 24, 4);
        assert_eq!(validate_map(&bring).unwrap().status, MapStatus::Valid);

        let broken = map(5, 4, 30, 60, 24, 5);
        let report = validate_map(&broken).unwrap();
        assert_eq!(report.status, MapStatus::Invalid);
        assert!(!report.failures.is_empty());

        assert!(validate_map(&map(0, 4, 30, 60, 24, 4)).is_err());
    }

    #[test]
    fn area_consistency() {
        let hyp2 = FuchsianSignature::hyperelliptic(Genus::new(2));
        assert_eq!(hyp2.periods.len(), 6);
        assert_eq!(hyp2.area(), rational(1, 1));
        assert_eq!(rh_area_consistency(&hyp2, 2, Genus::new(2)), Ok(true));

        let hurwitz = FuchsianSignature::triangle(2, 3, 7).unwrap();
        assert_eq!(hurwitz.area(), rational(1, 42));
        assert_eq!(rh_area_consistency(&hurwitz, 168, Genus::new(3)), Ok(true));
        assert_eq!(rh_area_consistency(&hurwitz, 100, Genus::new(3)), Ok(false));

        let spherical = FuchsianSignature::triangle(2, 3, 5).unwrap();
        assert_eq!(spherical.geometry(), Geometry::Spherical);
        assert!(rh_area_consistency(&spherical, 60, Genus::new(0)).is_err());

        let torus = FuchsianSignature::triangle(3, 3, 3).unwrap();
        assert_eq!(torus.geometry(), Geometry::Euclidean);
        assert_eq!(rh_area_consistency(&torus, 9, Genus::new(1)), Ok(true));

        assert!(FuchsianSignature::new(0, vec![2, 1]).is_err());
        assert_eq!(hurwitz.to_string(), "(0; 2, 3, 7)");
    }

    #[test]
    fn weight_distribution() {
        let klein = WeightDistribution {
            genus: Genus::new(3),
            entries: vec![WeightEntry {
                label: "face-centres".into(),
                count: 24,
                weight: 1,
            }],
            complete: true,
        };
        assert_eq!(klein.check(), Ok(24));

        let partial = WeightDistribution {
            complete: false,
            entries: vec![WeightEntry {
                label: "x".into(),
                count: 10,
                weight: 1,
            }],
            ..klein.clone()
        };
        assert_eq!(partial.check(), Ok(10));

        let incomplete = WeightDistribution {
            complete: true,
            ..partial.clone()
        };
        assert!(incomplete.check().is_err());

        let excess = WeightDistribution {
            entries: vec![WeightEntry {
                label: "x".into(),
                count: 25,
                weight: 1,
            }],
            ..partial
        };
        assert!(excess.check().is_err());
    }
}
