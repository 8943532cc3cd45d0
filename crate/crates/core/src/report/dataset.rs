//! Regular maps of genus 2 to 5 whose automorphism group is transitive on the
//! Weierstrass points.
//!
//! One row per line: `row|type|genus|V|F|E|group|order`. A cell `c^w` means
//! `c` geometric points of that kind, each a Weierstrass point of weight `w`.
//! Types are stored as printed; row 10 lists vertex valency first and is
//! normalised on load.

use serde::{Deserialize, Serialize};

use crate::orbits::necessary_weight;
use crate::surface::{
    total_weight, validate_map, Genus, MapStatus, RegularMapDescriptor, WeightDistribution, WeightEntry,
};
use crate::{Error, Result};

pub const DATASET: &str = "\
1|{6,4}|2|6^1|4|12|AM|24
2|{8,3}|2|16|6^1|24|GL(2,3)|48
3|{8,4}|3|8^3|4|16|AM|32
4|{6,4}|3|12|8^3|24|S4×C2|48
5|{8,3}|3|32|12^2|48|(2,3,8;3)|96
6|{7,3}|3|56|24^1|84|PSL(2,7)|168
7|{10,4}|4|10^6|4|20|AM|40
8|{5,4}|4|30|24|60^1|S5|120
9|{12,4}|5|12^10|4|24|AM|48
10|{3,10}|5|40|12^10|60|C2×A5|120
11|{8,3}|5|64|24^5|96|SL(2,Z/8)|192
12|{5,4}|5|40^3|32|80|***|160
";

/// Presentation of the group in row 12.
pub const ROW12_PRESENTATION: &str = "<r,s | r^5 = s^4 = (rs)^2 = (rs^-1)^4 = 1>";

/// Row 11's group is printed as `SL(2,Z/8)` with order 192, but that group has
/// order 384. The order column is what validation uses.
pub const ROW11_NOTE: &str = "SL(2,Z/8) has order 384; the printed order 192 is used";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub count: u64,
    pub weight: Option<u64>,
}

impl std::str::FromStr for Cell {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::invalid(format!("bad cell `{s}`")))
        };
        match s.split_once('^') {
            Some((c, w)) => Ok(Cell {
                count: parse(c)?,
                weight: Some(parse(w)?),
            }),
            None => Ok(Cell {
                count: parse(s)?,
                weight: None,
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapTableRow {
    pub row: u32,
    /// `{n, m}` as printed.
    pub type_pair: (u64, u64),
    pub genus: Genus,
    pub vertices: Cell,
    pub faces: Cell,
    pub edges: Cell,
    pub group: String,
    pub order: u64,
}

impl MapTableRow {
    pub fn descriptor(&self) -> RegularMapDescriptor {
        RegularMapDescriptor {
            face_valency: self.type_pair.0,
            vertex_valency: self.type_pair.1,
            vertices: self.vertices.count,
            edges: self.edges.count,
            faces: self.faces.count,
            genus: self.genus,
        }
    }

    pub fn is_accola_maclachlan(&self) -> bool {
        self.group == "AM"
    }

    pub fn presentation(&self) -> Option<&'static str> {
        (self.row == 12).then_some(ROW12_PRESENTATION)
    }

    pub fn note(&self) -> Option<&'static str> {
        (self.row == 11).then_some(ROW11_NOTE)
    }
}

fn parse_type(s: &str) -> Result<(u64, u64)> {
    let inner = s
        .trim()
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| Error::invalid(format!("bad map type `{s}`")))?;
    let (n, m) = inner
        .split_once(',')
        .ok_or_else(|| Error::invalid(format!("bad map type `{s}`")))?;
    let num = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|_| Error::invalid(format!("bad map type `{s}`")))
    };
    Ok((num(n)?, num(m)?))
}

pub fn parse_dataset(text: &str) -> Result<Vec<MapTableRow>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|line| {
            let f: Vec<&str> = line.split('|').collect();
            if f.len() != 8 {
                return Err(Error::invalid(format!("expected 8 fields in `{line}`")));
            }
            let int = |t: &str| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::invalid(format!("bad integer `{t}` in `{line}`")))
            };
            Ok(MapTableRow {
                row: int(f[0])? as u32,
                type_pair: parse_type(f[1])?,
                genus: Genus::new(int(f[2])?),
                vertices: f[3].parse()?,
                faces: f[4].parse()?,
                edges: f[5].parse()?,
                group: f[6].trim().to_string(),
                order: int(f[7])?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowReport {
    pub row: u32,
    pub status: MapStatus,
    pub map: RegularMapDescriptor,
    pub weighted_sum: u64,
    pub total_weight: u64,
    /// Weight forced on a single orbit by `|G_p| (g^3 - g) / |G|`.
    pub necessary_weight: u64,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetReport {
    pub rows: Vec<RowReport>,
}

impl DatasetReport {
    pub fn passed(&self) -> usize {
        self.rows.len()
    }
}

/// Checks every row:
///
/// - dart and Euler identities, after normalising the type pair;
/// - the weighted point counts sum to exactly `g^3 - g`;
/// - `|G| = 2E`, so the group acts regularly on darts up to orientation;
/// - `|G| = 8(g + 1)` on Accola–Maclachlan rows;
/// - the tabulated weight equals `|G_p| (g^3 - g) / |G|` for the stabiliser
///   of the weighted kind of point.
///
/// Stops at the first failing row.
pub fn validate_rows(rows: &[MapTableRow]) -> Result<DatasetReport> {
    let mut out = Vec::new();
    for r in rows {
        let fail = |msg: String| Error::InconsistentConstraints(format!("row ({}): {msg}", r.row));
        let check = validate_map(&r.descriptor())?;
        if !check.is_ok() {
            return Err(fail(check.failures.join("; ")));
        }
        let map = check.map;
        let mut notes = Vec::new();
        if check.status == MapStatus::Normalized {
            notes.push(format!(
                "type printed as {{{},{}}}, normalised to {{{},{}}}",
                r.type_pair.0, r.type_pair.1, map.face_valency, map.vertex_valency
            ));
        }
        let kinds = [
            ("vertices", r.vertices, map.vertex_valency),
            ("faces", r.faces, map.face_valency),
            ("edges", r.edges, 2),
        ];
        let weighted: Vec<_> = kinds.iter().filter(|k| k.1.weight.is_some()).collect();
        let dist = WeightDistribution {
            genus: r.genus,
            entries: weighted
                .iter()
                .map(|(label, cell, _)| WeightEntry {
                    label: label.to_string(),
                    count: cell.count,
                    weight: cell.weight.unwrap(),
                })
                .collect(),
            complete: true,
        };
        let weighted_sum = dist.check().map_err(|e| fail(e.to_string()))?;
        let &[&(label, cell, stabilizer)] = weighted.as_slice() else {
            return Err(fail(format!("expected one weighted kind of point, found {}", weighted.len())));
        };
        if r.order != 2 * map.edges {
            return Err(fail(format!("|G| = {} but 2E = {}", r.order, 2 * map.edges)));
        }
        if r.is_accola_maclachlan() && r.order != 8 * (r.genus.get() + 1) {
            return Err(fail(format!("AM order {} != 8(g+1)", r.order)));
        }
        let nw = necessary_weight(r.order, stabilizer, r.genus)?
            .weight()
            .ok_or_else(|| fail("transitivity weight is not integral".into()))?;
        if Some(nw) != cell.weight {
            return Err(fail(format!(
                "{label} carry weight {:?} but a transitive action forces {nw}",
                cell.weight
            )));
        }
        if let Some(note) = r.note() {
            notes.push(note.to_string());
        }
        if let Some(p) = r.presentation() {
            notes.push(format!("group presentation {p}"));
        }
        out.push(RowReport {
            row: r.row,
            status: check.status,
            map,
            weighted_sum,
            total_weight: total_weight(r.genus)?,
            necessary_weight: nw,
            notes,
        });
    }
    Ok(DatasetReport { rows: out })
}

/// Validates the embedded table.
pub fn validate_map_dataset() -> Result<DatasetReport> {
    let report = validate_rows(&parse_dataset(DATASET)?)?;
    if report.rows.len() != 12 {
        return Err(Error::Internal(format!("expected 12 rows, found {}", report.rows.len())));
    }
    Ok(report)
}
