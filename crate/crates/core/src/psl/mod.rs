//! The groups `PSL(2, q)`: orders, Hurwitz classification, and transitivity
//! verdicts for the surfaces they act on.
//!
//! [`field`] and [`group`] build the groups explicitly for small `q` and serve
//! as an oracle for the arithmetic element-order test in
//! [`crate::fixedpoints`].
//!
//! The verdicts assume the caller knows that `PSL(2, q)` is a quotient of the
//! `(2, 3, t)` triangle group (true for `t = 7` and every Hurwitz `q`, and for
//! `t = q = p` with `p` prime). No epimorphism search is done.

pub mod field;
pub mod group;

use serde::{Deserialize, Serialize};

pub use field::FiniteField;
pub use group::{order_census, order_census_sharded, OrderCensus, Psl2, CENSUS_MAX_Q};

use crate::arith::{gcd, is_prime, prime_power, rational, require_integer};
use crate::fixedpoints::{is_psl2_element_order, psl2q_fixed_points, schoeneberg_is_weierstrass};
use crate::orbits::{classify, orbit_profile, solve_for_profile, ZeroMask};
use crate::surface::{total_weight_wide, Genus};
use crate::verdict::{Status, TransitivityVerdict};
use crate::{Error, Result};

/// `|PSL(2, q)| = q (q^2 - 1) / gcd(2, q - 1)`.
pub fn psl2_order(q: u64) -> Result<u64> {
    prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let full = (q as u128) * (q as u128 * q as u128 - 1);
    u64::try_from(full / gcd(2, q - 1) as u128).map_err(|_| Error::Overflow("psl2_order"))
}

/// `PSL(2, q)` is simple for every prime power `q >= 4`; `q = 2, 3` give
/// `S3` and `A4`.
pub fn psl2_is_simple(q: u64) -> Result<bool> {
    prime_power(q).ok_or(Error::NotPrimePower(q))?;
    Ok(q >= 4)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HurwitzClause {
    /// `q = 7`.
    Seven,
    /// `q = p` prime with `p = ±1 mod 7`.
    PrimeUnitResidue,
    /// `q = p^3` with `p = ±2, ±3 mod 7`.
    PrimeCube,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HurwitzCheck {
    pub q: u64,
    pub is_hurwitz: bool,
    pub clause: Option<HurwitzClause>,
    pub reason: String,
}

/// Whether `PSL(2, q)` is a Hurwitz group, by Macbeath's classification.
pub fn is_hurwitz_psl2q(q: u64) -> Result<HurwitzCheck> {
    let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let r = p % 7;
    let (clause, reason) = if q == 7 {
        (Some(HurwitzClause::Seven), "q = 7".to_string())
    } else if k == 1 && (r == 1 || r == 6) {
        (
            Some(HurwitzClause::PrimeUnitResidue),
            format!("q = {p} is prime and {p} = {} mod 7", if r == 1 { "1" } else { "-1" }),
        )
    } else if k == 3 && matches!(r, 2..=5) {
        (
            Some(HurwitzClause::PrimeCube),
            format!("q = {p}^3 with {p} = {r} mod 7"),
        )
    } else {
        (
            None,
            format!("q = {p}^{k} with {p} = {r} mod 7 fits none of the three cases"),
        )
    };
    Ok(HurwitzCheck {
        q,
        is_hurwitz: clause.is_some(),
        clause,
        reason,
    })
}

/// Genus `1 + |G| / 84` of a surface whose automorphism group attains the
/// Hurwitz bound.
pub fn hurwitz_genus(group_order: u64) -> Result<Genus> {
    if group_order == 0 || !group_order.is_multiple_of(84) {
        return Err(Error::invalid(format!("{group_order} is not a Hurwitz order")));
    }
    Ok(Genus::new(1 + group_order / 84))
}

/// Genus of the surface `X_{t,q}` on which `PSL(2, q)` acts with signature
/// `(0; 2, 3, t)`: `1 + |G| (t - 6) / (12 t)`.
pub fn xtq_genus(q: u64, t: u64) -> Result<Genus> {
    if t < 7 {
        return Err(Error::invalid(format!("t = {t}: (2,3,t) is not hyperbolic below 7")));
    }
    let order = psl2_order(q)? as i128;
    let value = rational(order * (t as i128 - 6), 12 * t as i128) + rational(1, 1);
    let g = require_integer(value, "genus of X_{t,q}")
        .map_err(|_| Error::InconsistentConstraints(format!("PSL(2,{q}) is not a (2,3,{t}) quotient")))?;
    Ok(Genus::new(g as u64))
}

/// Genus of the modular curve `X(p)`: `1 + (p^2 - 1)(p - 6) / 24`.
pub fn modular_genus(p: u64) -> Result<Genus> {
    if !is_prime(p) || p < 5 {
        return Err(Error::invalid(format!("X(p) needs a prime p >= 5, got {p}")));
    }
    let p = p as i128;
    let g = require_integer(rational((p * p - 1) * (p - 6), 24) + rational(1, 1), "genus of X(p)")?;
    Ok(Genus::new(g as u64))
}

const OUTSIDE_SCOPE: &str = "outside the cases covered by the known case analysis";

/// Runs the orbit-weight equation for a `(2, 3, 7)` action of `PSL(2, q)` and
/// checks it against the expected status.
fn hurwitz_weight_verdict(q: u64, mask: Option<&ZeroMask>, expect: Status) -> Result<TransitivityVerdict> {
    let order = psl2_order(q)?;
    let g = hurwitz_genus(order)?;
    let profile = orbit_profile(order, &[2, 3, 7])?;
    let set = solve_for_profile(&profile, g)?;
    let c = classify(&set, mask)?;
    if c.verdict.status != expect {
        return Err(Error::Internal(format!(
            "weight equation for PSL(2,{q}) gives {}, expected {expect}",
            c.verdict.status
        )));
    }
    Ok(c.verdict)
}

/// Decides whether `PSL(2, q)`, acting with signature `(0; 2, 3, t)`, is
/// transitive on the Weierstrass points of `X_{t,q}`.
pub fn psl2q_transitivity_verdict(q: u64, t: u64) -> Result<TransitivityVerdict> {
    prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if !is_psl2_element_order(q, t) {
        return Err(Error::OrderNotRealizable { q, order: t });
    }
    let g = xtq_genus(q, t)?;
    let total = total_weight_wide(g)?;
    let genus_note = format!("X_{{{t},{q}}} has genus {g} and total weight {total}");
    // Each orbit has at least |G| / max(3, t) points of weight >= 1.
    let w = u64::try_from(total * t.max(3) as u128 / psl2_order(q)? as u128)
        .map_err(|_| Error::Overflow("orbit count bound"))?;
    let verdict = match (q, t) {
        (7, 7) => hurwitz_weight_verdict(7, None, Status::Transitive)?
            .with_reason("Klein's quartic: 24 face-centres of weight 1 are all the Weierstrass points"),
        (8, 7) => hurwitz_weight_verdict(8, None, Status::Transitive)?
            .with_reason("Macbeath's surface: 168 vertices of weight 2 are all the Weierstrass points"),
        (13, 7) => {
            let mask = ZeroMask::new([1, 2]);
            hurwitz_weight_verdict(13, Some(&mask), Status::Undecided)?
                .with_reason("vertices and face-centres are not Weierstrass points (Streit)")
                .with_reason("the edge-centres fix 6 points under an involution and are Weierstrass points")
        }
        (11, _) => TransitivityVerdict::not_transitive(
            (2, w),
            "PSL(2,11): elements of order 2 and 5 fix more than 4 points, giving two distinct orbits of Weierstrass points",
        )
        .with_reason(format!(
            "the fixed-point formula with signature (2,3,{t}) gives {} for order 2; the published value for this case is 5",
            psl2q_fixed_points(q, &[2, 3, t], 2)?
        )),
        (13, 13) => TransitivityVerdict::not_transitive(
            (2, w),
            "PSL(2,13) on X(13): the element of order 13 fixes 6 points and the involutions fix 6, in different orbits",
        ),
        _ if q > 15 => {
            let f2 = psl2q_fixed_points(q, &[2, 3, t], 2)?;
            let f3 = psl2q_fixed_points(q, &[2, 3, t], 3)?;
            if schoeneberg_is_weierstrass(f2) && schoeneberg_is_weierstrass(f3) {
                TransitivityVerdict::not_transitive(
                    (2, w),
                    format!(
                        "involutions fix {f2} points and elements of order 3 fix {f3}; by Schoeneberg both edge-centres and vertices are Weierstrass points"
                    ),
                )
                .with_reason("map automorphisms never send vertices to edge-centres, and (2,3,7) is a maximal triangle group")
            } else {
                TransitivityVerdict::undecided((1, w), format!("fixed-point counts {f2}, {f3} too small: {OUTSIDE_SCOPE}"))
            }
        }
        _ => TransitivityVerdict::undecided((1, w), OUTSIDE_SCOPE),
    };
    Ok(verdict.with_reason(genus_note))
}

/// Transitivity of `PSL(2, p)` on the Weierstrass points of the modular curve
/// `X(p)`, which is `X_{p,p}`.
pub fn modular_surface_verdict(p: u64) -> Result<TransitivityVerdict> {
    let g = modular_genus(p)?;
    if g.below_weierstrass_threshold() {
        return Ok(TransitivityVerdict::undecided(
            (0, 0),
            format!("X({p}) has genus {g} and no Weierstrass points"),
        ));
    }
    psl2q_transitivity_verdict(p, p)
}
