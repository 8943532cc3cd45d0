//! Exact computations around automorphism groups acting on the Weierstrass
//! points of compact Riemann surfaces.
//!
//! Every quantity here is an exact integer or rational. The modules are:
//!
//! - [`surface`]: genera, total Weierstrass weight, Riemann–Hurwitz areas,
//!   regular-map descriptors.
//! - [`platonic`]: branched double covers of spherical maps and the
//!   classification of hyperelliptic surfaces with a transitive action.
//! - [`fixedpoints`]: fixed-point counts of cyclic and `PSL(2,q)` actions and
//!   the Schoeneberg criterion.
//! - [`psl`]: finite fields, `PSL(2,q)` on the projective line, Hurwitz
//!   classification and transitivity verdicts.
//! - [`orbits`]: orbit sizes, the orbit-weight equation and its
//!   classification, necessary weight conditions, simple points.
//! - [`bielliptic`]: Kato weight bounds and the Garcia divisibility test.
//! - [`fermat`]: Fermat curve weights, symbolic orbits and accounting.
//! - [`report`]: the embedded low-genus map table, report documents and the
//!   CLI dispatcher.

pub mod arith;
pub mod bielliptic;
mod error;
pub mod fermat;
pub mod fixedpoints;
pub mod groups;
pub mod orbits;
pub mod platonic;
pub mod psl;
pub mod report;
pub mod surface;
pub mod verdict;

pub use error::{Error, Result};
pub use surface::Genus;
pub use verdict::{Status, TransitivityVerdict};
