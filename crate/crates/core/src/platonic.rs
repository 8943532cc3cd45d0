//! Regular maps on the sphere and their branched double covers.
//!
//! A hyperelliptic surface whose automorphism group is transitive on its
//! `2g + 2` Weierstrass points projects them to an orbit of a finite rotation
//! group of the sphere. Those orbits are the vertices, face-centres or
//! edge-centres of the spherical maps catalogued here, so the double covers
//! branched over them give every such surface.

use serde::{Deserialize, Serialize};

use crate::groups::{GroupDescriptor, GroupFamily};
use crate::surface::{
    double_cover_genus, rh_area_consistency, validate_map, FuchsianSignature, Genus,
    RegularMapDescriptor,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapFamily {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
    /// `n` vertices on the equator, `n` edges, two hemispherical faces.
    Dihedron(u64),
    /// Two polar vertices joined by `n` meridians.
    Hosohedron(u64),
    /// One vertex with `e` free edges and a single face.
    StarMap(u64),
}

impl std::fmt::Display for MapFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MapFamily::Tetrahedron => f.write_str("tetrahedron"),
            MapFamily::Cube => f.write_str("cube"),
            MapFamily::Octahedron => f.write_str("octahedron"),
            MapFamily::Dodecahedron => f.write_str("dodecahedron"),
            MapFamily::Icosahedron => f.write_str("icosahedron"),
            MapFamily::Dihedron(n) => write!(f, "dihedron({n})"),
            MapFamily::Hosohedron(n) => write!(f, "hosohedron({n})"),
            MapFamily::StarMap(e) => write!(f, "star map S_{e}"),
        }
    }
}

/// A regular map on the sphere.
///
/// Free edges of a star map end in a point that is not a vertex; those
/// `free_ends` are added to the vertex side of the Euler and dart counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SphericalMap {
    pub family: MapFamily,
    pub face_valency: u64,
    pub vertex_valency: u64,
    pub vertices: u64,
    pub edges: u64,
    pub faces: u64,
    pub free_ends: u64,
}

impl SphericalMap {
    pub fn new(family: MapFamily) -> Result<Self> {
        let (n, m, v, e, f, free) = match family {
            MapFamily::Tetrahedron => (3, 3, 4, 6, 4, 0),
            MapFamily::Cube => (4, 3, 8, 12, 6, 0),
            MapFamily::Octahedron => (3, 4, 6, 12, 8, 0),
            MapFamily::Dodecahedron => (5, 3, 20, 30, 12, 0),
            MapFamily::Icosahedron => (3, 5, 12, 30, 20, 0),
            MapFamily::Dihedron(n) | MapFamily::Hosohedron(n) | MapFamily::StarMap(n) if n < 2 => {
                return Err(Error::invalid(format!("{family} needs parameter >= 2")));
            }
            MapFamily::Dihedron(n) => (n, 2, n, n, 2, 0),
            MapFamily::Hosohedron(n) => (2, n, 2, n, n, 0),
            MapFamily::StarMap(e) => (2 * e, e, 1, e, 1, e),
        };
        let map = Self {
            family,
            face_valency: n,
            vertex_valency: m,
            vertices: v,
            edges: e,
            faces: f,
            free_ends: free,
        };
        map.check()?;
        Ok(map)
    }

    pub fn type_pair(&self) -> (u64, u64) {
        (self.face_valency, self.vertex_valency)
    }

    fn check(&self) -> Result<()> {
        let euler = (self.vertices + self.free_ends) as i128 - self.edges as i128 + self.faces as i128;
        let vertex_darts = self.vertex_valency * self.vertices + self.free_ends;
        let face_darts = self.face_valency * self.faces;
        if euler != 2 || vertex_darts != 2 * self.edges || face_darts != 2 * self.edges {
            return Err(Error::Internal(format!(
                "spherical map {} fails Euler or dart identities",
                self.family
            )));
        }
        Ok(())
    }

    /// Orientation-preserving symmetry group.
    pub fn rotation_group(&self) -> GroupDescriptor {
        match self.family {
            MapFamily::Tetrahedron => GroupDescriptor::new("A4", 12, GroupFamily::Polyhedral),
            MapFamily::Cube | MapFamily::Octahedron => {
                GroupDescriptor::new("S4", 24, GroupFamily::Polyhedral)
            }
            MapFamily::Dodecahedron | MapFamily::Icosahedron => {
                GroupDescriptor::new("A5", 60, GroupFamily::Polyhedral)
            }
            MapFamily::Dihedron(n) | MapFamily::Hosohedron(n) => GroupDescriptor::dihedral(n),
            MapFamily::StarMap(e) => GroupDescriptor::cyclic(e),
        }
    }

    pub fn dual(&self) -> Result<SphericalMap> {
        let family = match self.family {
            MapFamily::Tetrahedron => MapFamily::Tetrahedron,
            MapFamily::Cube => MapFamily::Octahedron,
            MapFamily::Octahedron => MapFamily::Cube,
            MapFamily::Dodecahedron => MapFamily::Icosahedron,
            MapFamily::Icosahedron => MapFamily::Dodecahedron,
            MapFamily::Dihedron(n) => MapFamily::Hosohedron(n),
            MapFamily::Hosohedron(n) => MapFamily::Dihedron(n),
            MapFamily::StarMap(_) => {
                return Err(Error::Unsupported("the dual of a star map is not catalogued".into()))
            }
        };
        SphericalMap::new(family)
    }

    /// Signature `(0; 2, m, n)` of the rotation group's action on the sphere.
    fn base_periods(&self) -> (u64, u64, u64) {
        (2, self.vertex_valency, self.face_valency)
    }
}

/// The five Platonic solids followed by the dihedron, hosohedron and star map
/// with parameter `param`.
pub fn catalog(param: u64) -> Result<Vec<SphericalMap>> {
    [
        MapFamily::Tetrahedron,
        MapFamily::Cube,
        MapFamily::Octahedron,
        MapFamily::Dodecahedron,
        MapFamily::Icosahedron,
        MapFamily::Dihedron(param),
        MapFamily::Hosohedron(param),
        MapFamily::StarMap(param),
    ]
    .into_iter()
    .map(SphericalMap::new)
    .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BranchLocus {
    Vertices,
    FaceCentres,
    EdgeCentres,
}

impl std::fmt::Display for BranchLocus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            BranchLocus::Vertices => "vertices",
            BranchLocus::FaceCentres => "face-centres",
            BranchLocus::EdgeCentres => "edge-centres",
        })
    }
}

/// A double cover of a spherical map branched over one orbit of geometric
/// points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverResult {
    pub base: SphericalMap,
    pub locus: BranchLocus,
    pub branch_points: u64,
    pub genus: Genus,
    /// The lifted regular map, present for vertex (and face-centre) covers.
    /// Edge-centre branch points have cyclic stabilisers of order 4, so the
    /// lift is a hypermap rather than a regular map.
    pub map: Option<RegularMapDescriptor>,
    pub aut_group: GroupDescriptor,
    /// Signature of the lifted group acting on the cover.
    pub lifted_signature: FuchsianSignature,
    /// The automorphism group permutes the branch points, which are the
    /// Weierstrass points once `g >= 2`, transitively.
    pub transitive_on_wp: bool,
    pub notes: Vec<String>,
}

impl CoverResult {
    pub fn aut_order(&self) -> u64 {
        self.aut_group.order
    }

    pub fn below_weierstrass_threshold(&self) -> bool {
        self.genus.below_weierstrass_threshold()
    }
}

/// Group carried by the double cover of the star map `S_e` branched over its
/// edge-centres: `C2 × C_e` for odd `e`, `D_e` for even `e`. Either way the
/// order is `2e`.
pub fn star_cover_group(e: u64) -> GroupDescriptor {
    if e % 2 == 1 {
        GroupDescriptor::cyclic(e).times_c2()
    } else {
        GroupDescriptor::dihedral(e)
    }
}

fn vertex_cover_group(base: &SphericalMap, genus: Genus) -> GroupDescriptor {
    let rotations = base.rotation_group();
    match base.family {
        MapFamily::Octahedron => GroupDescriptor::new("GL(2,3)", 48, GroupFamily::Linear),
        MapFamily::Dihedron(_) => GroupDescriptor::accola_maclachlan(genus.get()),
        MapFamily::Hosohedron(n) if n % 2 == 0 => GroupDescriptor::dihedral(2 * n),
        _ if base.vertex_valency % 2 == 1 => rotations.times_c2(),
        _ => rotations.extension_by_c2(),
    }
}

/// Double cover of `base` branched over `locus`.
///
/// Face-centre covers are computed as the vertex cover of the dual map. Edge
/// covers of dihedra and hosohedra branch over a regular polygon on the
/// equator and coincide with the dihedron vertex cover.
pub fn double_cover(base: &SphericalMap, locus: BranchLocus) -> Result<CoverResult> {
    match (locus, base.family) {
        (BranchLocus::Vertices, MapFamily::StarMap(_)) => Err(Error::Unsupported(
            "star maps are only branched over their edge-centres".into(),
        )),
        (BranchLocus::Vertices, _) => vertex_cover(base),
        (BranchLocus::FaceCentres, _) => {
            let mut cover = vertex_cover(&base.dual()?)?;
            cover.notes.push(format!(
                "computed as the vertex cover of the dual {}",
                cover.base.family
            ));
            cover.base = *base;
            cover.locus = BranchLocus::FaceCentres;
            Ok(cover)
        }
        (BranchLocus::EdgeCentres, MapFamily::Dihedron(n) | MapFamily::Hosohedron(n)) => {
            let mut cover = vertex_cover(&SphericalMap::new(MapFamily::Dihedron(n))?)?;
            cover.notes.push(format!(
                "the {n} edge-centres form a regular {n}-gon on the equator, as the dihedron vertices do"
            ));
            cover.base = *base;
            cover.locus = BranchLocus::EdgeCentres;
            Ok(cover)
        }
        (BranchLocus::EdgeCentres, _) => edge_cover(base),
    }
}

fn vertex_cover(base: &SphericalMap) -> Result<CoverResult> {
    let genus = double_cover_genus(base.vertices)?;
    let (n, m) = base.type_pair();
    let map = RegularMapDescriptor {
        face_valency: n,
        vertex_valency: 2 * m,
        vertices: base.vertices,
        edges: 2 * base.edges,
        faces: 2 * base.faces,
        genus,
    };
    let aut_group = vertex_cover_group(base, genus);
    let (edge, vertex, face) = base.base_periods();
    let lifted_signature = FuchsianSignature::new(0, vec![edge, 2 * vertex, face])?;
    let mut notes = Vec::new();
    match base.family {
        MapFamily::Octahedron => notes.push(
            "GL(2,3) is the only automorphism group of order 48 of a genus-2 surface".into(),
        ),
        MapFamily::Dihedron(_) => notes.push("Accola–Maclachlan surface".into()),
        _ if base.vertex_valency % 2 == 1 => {
            notes.push("odd vertex valency: the automorphism group is C2 × G".into())
        }
        _ => {}
    }
    finish(CoverResult {
        base: *base,
        locus: BranchLocus::Vertices,
        branch_points: base.vertices,
        genus,
        map: Some(map),
        aut_group,
        lifted_signature,
        transitive_on_wp: false,
        notes,
    })
}

fn edge_cover(base: &SphericalMap) -> Result<CoverResult> {
    let genus = double_cover_genus(base.edges)?;
    let (aut_group, lifted_signature, mut notes) = match base.family {
        MapFamily::StarMap(e) => (
            star_cover_group(e),
            FuchsianSignature::triangle(2, e, e)?,
            vec![format!(
                "lifted group of order 2e = {}; the full group is the Accola–Maclachlan group of twice that order",
                2 * e
            )],
        ),
        _ => {
            let (_, vertex, face) = base.base_periods();
            (
                base.rotation_group().extension_by_c2(),
                FuchsianSignature::triangle(4, vertex, face)?,
                vec!["edge half-turns lift to elements of order 4 fixing the branch points".into()],
            )
        }
    };
    if base.family == MapFamily::Tetrahedron {
        notes.push(
            "the six tetrahedron edge-centres are the octahedron vertices; the full group is GL(2,3) of order 48"
                .into(),
        );
    }
    finish(CoverResult {
        base: *base,
        locus: BranchLocus::EdgeCentres,
        branch_points: base.edges,
        genus,
        map: None,
        aut_group,
        lifted_signature,
        transitive_on_wp: false,
        notes,
    })
}

/// Sets the transitivity flag and verifies the invariants every cover must
/// satisfy.
fn finish(mut cover: CoverResult) -> Result<CoverResult> {
    if let Some(map) = &cover.map {
        let report = validate_map(map)?;
        if report.status != crate::surface::MapStatus::Valid {
            return Err(Error::Internal(format!(
                "lifted map {map} fails validation: {:?}",
                report.failures
            )));
        }
        if map.genus != cover.genus {
            return Err(Error::Internal("lifted map genus mismatch".into()));
        }
    }
    if cover.aut_group.order != 2 * cover.base.rotation_group().order {
        return Err(Error::Internal(format!(
            "cover group {} is not a double of the base rotation group",
            cover.aut_group
        )));
    }
    if cover.genus.get() >= 1 {
        let consistent =
            rh_area_consistency(&cover.lifted_signature, cover.aut_group.order, cover.genus)?;
        if !consistent {
            return Err(Error::Internal(format!(
                "signature {} at index {} does not give genus {}",
                cover.lifted_signature, cover.aut_group.order, cover.genus
            )));
        }
        let hyperelliptic = FuchsianSignature::hyperelliptic(cover.genus);
        if !rh_area_consistency(&hyperelliptic, 2, cover.genus)? {
            return Err(Error::Internal("hyperelliptic signature area mismatch".into()));
        }
    }
    match cover.genus.get() {
        0 => cover
            .notes
            .push("genus 0: below the Weierstrass threshold, excluded from transitivity claims".into()),
        1 => {
            cover.transitive_on_wp = true;
            cover.notes.push(
                "genus 1: Weierstrass theory degenerate; the group is transitive on the four branch points"
                    .into(),
            );
        }
        _ => cover.transitive_on_wp = true,
    }
    Ok(cover)
}

/// The Accola–Maclachlan surface of genus `g`: the dihedron vertex cover with
/// `n = 2g + 2`, automorphism group of order `8(g + 1)`.
pub fn accola_maclachlan(g: Genus) -> Result<CoverResult> {
    g.require_at_least(1, "Accola–Maclachlan surfaces start at genus 1")?;
    double_cover(
        &SphericalMap::new(MapFamily::Dihedron(2 * g.get() + 2))?,
        BranchLocus::Vertices,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceKind {
    AccolaMaclachlan,
    Sporadic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifiedCover {
    pub kind: SurfaceKind,
    pub cover: CoverResult,
    pub annotations: Vec<String>,
}

/// The sporadic covers: five Platonic vertex covers and two edge-centre covers.
pub const SPORADIC_COVERS: [(MapFamily, BranchLocus); 7] = [
    (MapFamily::Tetrahedron, BranchLocus::Vertices),
    (MapFamily::Octahedron, BranchLocus::Vertices),
    (MapFamily::Cube, BranchLocus::Vertices),
    (MapFamily::Icosahedron, BranchLocus::Vertices),
    (MapFamily::Cube, BranchLocus::EdgeCentres),
    (MapFamily::Dodecahedron, BranchLocus::Vertices),
    (MapFamily::Icosahedron, BranchLocus::EdgeCentres),
];

/// Every hyperelliptic surface of genus `<= g_max` whose automorphism group
/// is transitive on the Weierstrass points: one Accola–Maclachlan surface per
/// genus and the sporadic covers, sorted by genus.
///
/// Star-map covers give the Accola–Maclachlan surfaces again and are folded
/// into those entries as annotations.
pub fn enumerate_transitive_hyperelliptic(g_max: Genus) -> Result<Vec<ClassifiedCover>> {
    g_max.require_at_least(1, "the classification starts at genus 1")?;
    let mut out = Vec::new();
    for g in 1..=g_max.get() {
        let cover = accola_maclachlan(Genus::new(g))?;
        let e = 2 * g + 2;
        let star = double_cover(&SphericalMap::new(MapFamily::StarMap(e))?, BranchLocus::EdgeCentres)?;
        if star.genus != cover.genus || star.branch_points != cover.branch_points {
            return Err(Error::Internal(format!("star map S_{e} does not match AM genus {g}")));
        }
        out.push(ClassifiedCover {
            kind: SurfaceKind::AccolaMaclachlan,
            annotations: vec![format!(
                "same surface as the star map S_{e} edge-centre cover (lifted group {})",
                star.aut_group
            )],
            cover,
        });
    }
    for (family, locus) in SPORADIC_COVERS {
        let cover = double_cover(&SphericalMap::new(family)?, locus)?;
        if cover.genus > g_max {
            continue;
        }
        let mut annotations = vec!["unique: a cover of a regular solid branched over one orbit".into()];
        if cover.genus.get() == 5 {
            annotations.push(
                "one of two distinct genus-5 surfaces (icosahedron vertices, cube edge-centres)".into(),
            );
        }
        out.push(ClassifiedCover {
            kind: SurfaceKind::Sporadic,
            cover,
            annotations,
        });
    }
    out.sort_by_key(|c| (c.cover.genus, c.kind == SurfaceKind::Sporadic));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solid(f: MapFamily) -> SphericalMap {
        SphericalMap::new(f).unwrap()
    }

    #[test]
    fn catalog_counts() {
        let cube = solid(MapFamily::Cube);
        assert_eq!((cube.vertices, cube.edges, cube.faces), (8, 12, 6));
        assert_eq!(cube.type_pair(), (4, 3));

        let di = solid(MapFamily::Dihedron(5));
        assert_eq!((di.vertices, di.edges, di.faces), (5, 5, 2));
        assert_eq!(di.type_pair(), (5, 2));

        let ho = solid(MapFamily::Hosohedron(3));
        assert_eq!((ho.vertices, ho.edges, ho.faces), (2, 3, 3));

        let star = solid(MapFamily::StarMap(6));
        assert_eq!((star.vertices, star.edges, star.faces), (1, 6, 1));

        assert_eq!(catalog(4).unwrap().len(), 8);
        assert!(catalog(1).is_err());
        assert!(SphericalMap::new(MapFamily::StarMap(0)).is_err());
    }

    #[test]
    fn octahedron_vertex_cover() {
        let c = double_cover(&solid(MapFamily::Octahedron), BranchLocus::Vertices).unwrap();
        let map = c.map.unwrap();
        assert_eq!(map.type_pair(), (3, 8));
        assert_eq!((map.vertices, map.faces, map.edges), (6, 16, 24));
        assert_eq!(c.genus, Genus::new(2));
        assert_eq!(c.aut_group.name, "GL(2,3)");
        assert_eq!(c.aut_order(), 48);
    }

    #[test]
    fn dodecahedron_vertex_cover() {
        let c = double_cover(&solid(MapFamily::Dodecahedron), BranchLocus::Vertices).unwrap();
        assert_eq!(c.map.unwrap().type_pair(), (5, 6));
        assert_eq!(c.genus, Genus::new(9));
        assert_eq!(c.aut_group.name, "C2×A5");
        assert_eq!(c.aut_order(), 120);
    }

    #[test]
    fn edge_covers() {
        let ico = double_cover(&solid(MapFamily::Icosahedron), BranchLocus::EdgeCentres).unwrap();
        assert_eq!(ico.genus, Genus::new(14));
        assert!(ico.map.is_none());
        let tet = double_cover(&solid(MapFamily::Tetrahedron), BranchLocus::EdgeCentres).unwrap();
        assert_eq!(tet.genus, Genus::new(2));
        let cube = double_cover(&solid(MapFamily::Cube), BranchLocus::EdgeCentres).unwrap();
        assert_eq!(cube.genus, Genus::new(5));
        assert_eq!(cube.aut_order(), 48);
    }

    #[test]
    fn star_maps() {
        let star = solid(MapFamily::StarMap(6));
        assert!(double_cover(&star, BranchLocus::Vertices).is_err());
        let c = double_cover(&star, BranchLocus::EdgeCentres).unwrap();
        assert_eq!(c.genus, Genus::new(2));
        assert_eq!(c.aut_group.name, "D6");
        assert_eq!(c.aut_order(), 12);
        // odd e has no double cover branched over e points
        assert!(double_cover(&solid(MapFamily::StarMap(5)), BranchLocus::EdgeCentres).is_err());
        assert_eq!(star_cover_group(5).name, "C2×C5");
        assert_eq!(star_cover_group(5).order, 10);
        assert_eq!(star_cover_group(6).order, 12);
    }

    #[test]
    fn hosohedron_covers_are_genus_zero() {
        for n in 2..10 {
            let c = double_cover(&solid(MapFamily::Hosohedron(n)), BranchLocus::Vertices).unwrap();
            assert_eq!(c.genus, Genus::new(0));
            assert!(!c.transitive_on_wp);
            assert_eq!(c.aut_order(), 4 * n);
            let expected = if n % 2 == 0 {
                format!("D{}", 2 * n)
            } else {
                format!("C2×D{n}")
            };
            assert_eq!(c.aut_group.name, expected);
        }
    }

    #[test]
    fn odd_dihedron_has_no_vertex_cover() {
        assert!(double_cover(&solid(MapFamily::Dihedron(5)), BranchLocus::Vertices).is_err());
    }

    #[test]
    fn accola_maclachlan_examples() {
        let am2 = accola_maclachlan(Genus::new(2)).unwrap();
        assert_eq!(am2.base.family, MapFamily::Dihedron(6));
        assert_eq!(am2.aut_order(), 24);
        assert_eq!(am2.map.unwrap().type_pair(), (6, 4));
        assert!(am2.aut_group.presentation.as_deref().unwrap().contains("s^6"));
        assert_eq!(accola_maclachlan(Genus::new(3)).unwrap().aut_order(), 32);
        let am1 = accola_maclachlan(Genus::new(1)).unwrap();
        assert_eq!(am1.aut_order(), 16);
        assert!(am1.notes.iter().any(|n| n.contains("degenerate")));
        assert!(accola_maclachlan(Genus::new(0)).is_err());
    }

    #[test]
    fn small_enumerations() {
        let sporadic = |g: u64| -> Vec<u64> {
            enumerate_transitive_hyperelliptic(Genus::new(g))
                .unwrap()
                .iter()
                .filter(|c| c.kind == SurfaceKind::Sporadic)
                .map(|c| c.cover.genus.get())
                .collect()
        };
        assert_eq!(sporadic(4), vec![1, 2, 3]);
        assert_eq!(sporadic(1), vec![1]);
        assert_eq!(sporadic(14), vec![1, 2, 3, 5, 5, 9, 14]);
        assert!(enumerate_transitive_hyperelliptic(Genus::new(0)).is_err());
    }
}
