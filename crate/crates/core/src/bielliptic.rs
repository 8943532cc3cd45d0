//! Weierstrass weights on non-hyperelliptic and bi-elliptic surfaces.
//!
//! Kato bounds the largest Weierstrass weight on a non-hyperelliptic surface.
//! For `g >= 11` a surface is bi-elliptic exactly when some point has weight
//! in `[(g^2 - 5g + 6)/2, (g^2 - g)/2)`, and then the weight is one of two
//! values. A transitive group would give every Weierstrass point that weight,
//! so the weight must divide `g^3 - g`.

use serde::{Deserialize, Serialize};

use crate::arith::{rational, shard_map, Rational};
use crate::surface::{total_weight, Genus};
use crate::verdict::TransitivityVerdict;
use crate::{Error, Result};

const KATO_SPECIAL: [u64; 6] = [3, 4, 6, 7, 9, 10];

/// Largest weight of a Weierstrass point on a non-hyperelliptic surface of
/// genus `g`.
pub fn kato_max_weight(g: Genus) -> Result<u64> {
    g.require_at_least(3, "non-hyperelliptic surfaces have g >= 3")?;
    let g = g.get();
    let (numer, denom) = if KATO_SPECIAL.contains(&g) {
        (g * (g - 1), 3)
    } else {
        (g * g - 5 * g + 10, 2)
    };
    if numer % denom != 0 {
        return Err(Error::Internal(format!("Kato bound {numer}/{denom} is not integral")));
    }
    Ok(numer / denom)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightWindow {
    pub genus: Genus,
    pub low: u64,
    pub high_exclusive: u64,
    /// `(g^2 - 5g + 6)/2` and `(g^2 - 5g + 10)/2`.
    pub candidate_weights: (u64, u64),
}

/// The bi-elliptic weight window for `g >= 11`.
pub fn bielliptic_window(g: Genus) -> Result<WeightWindow> {
    g.require_at_least(11, "below the hypothesis g >= 11 of the bi-elliptic criterion")?;
    let n = g.get();
    let sq = n.checked_mul(n).ok_or(Error::Overflow("bielliptic_window"))?;
    let base = sq - 5 * n;
    if !base.is_multiple_of(2) {
        return Err(Error::Internal(format!("g^2 - 5g is odd at g = {n}")));
    }
    Ok(WeightWindow {
        genus: g,
        low: (base + 6) / 2,
        high_exclusive: (sq - n) / 2,
        candidate_weights: ((base + 6) / 2, (base + 10) / 2),
    })
}

/// `nu(g) = (28g - 100) / (g^2 - 5g + 10)`.
pub fn nu(g: Genus) -> Rational {
    let g = g.get() as i128;
    rational(28 * g - 100, g * g - 5 * g + 10)
}

/// Tests whether either candidate weight divides `g^3 - g`. If neither does,
/// no group can be transitive on the Weierstrass points of a bi-elliptic
/// surface of genus `g`.
pub fn garcia_transitivity_test(g: Genus) -> Result<TransitivityVerdict> {
    let window = bielliptic_window(g)?;
    let total = total_weight(g)?;
    let (low, high) = window.candidate_weights;
    let divides: Vec<u64> = [high, low].into_iter().filter(|w| total % w == 0).collect();
    if divides.is_empty() {
        return Ok(TransitivityVerdict::not_transitive(
            (2, total),
            format!("neither {low} nor {high} divides g^3 - g = {total}"),
        ));
    }
    let mut verdict = TransitivityVerdict::undecided(
        (1, total),
        format!("{total} / {} = {} points of equal weight is numerically possible", divides[0], total / divides[0]),
    );
    if divides.contains(&high) {
        let count = total / high;
        let identity = rational(2 * g.get() as i128 + 10, 1) + nu(g);
        if identity != rational(count as i128, 1) {
            return Err(Error::Internal(format!("|W| = 2g + 10 + nu(g) fails at g = {g}")));
        }
        verdict = verdict.with_reason(format!("|W| = 2g + 10 + nu(g) = {count}"));
    }
    Ok(verdict)
}

/// Genera in `[from, to]` where [`garcia_transitivity_test`] does not rule out
/// transitivity.
pub fn scan_nontransitive(from: Genus, to: Genus, workers: usize) -> Result<Vec<Genus>> {
    from.require_at_least(11, "scan starts at g >= 11")?;
    if from > to {
        return Err(Error::invalid(format!("empty scan range {from}..={to}")));
    }
    total_weight(to)?;
    let hits = shard_map(from.get(), to.get(), workers, |g| {
        let g = Genus::new(g);
        match garcia_transitivity_test(g) {
            Ok(v) if v.status == crate::Status::NotTransitive => None,
            other => Some(other.map(|_| g)),
        }
    });
    hits.into_iter().collect()
}

/// Transitivity on 2-hyperelliptic surfaces is not handled: no weight
/// formulas are available.
pub fn two_hyperelliptic_transitivity(_g: Genus) -> Result<TransitivityVerdict> {
    Err(Error::Unsupported(
        "2-hyperelliptic surfaces: no weight formulas available".into(),
    ))
}
