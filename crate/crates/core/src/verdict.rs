//! Transitivity verdicts shared by every module that decides whether a group
//! can act transitively on the Weierstrass points.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Transitive,
    NotTransitive,
    Undecided,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Transitive => "transitive",
            Status::NotTransitive => "not transitive",
            Status::Undecided => "undecided",
        })
    }
}

/// Outcome of a transitivity analysis.
///
/// `orbit_count_range` bounds the number of orbits of Weierstrass points.
/// A transitive verdict always has range `(1, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitivityVerdict {
    pub status: Status,
    pub orbit_count_range: (u64, u64),
    pub reasons: Vec<String>,
}

impl TransitivityVerdict {
    pub fn transitive(reason: impl Into<String>) -> Self {
        Self {
            status: Status::Transitive,
            orbit_count_range: (1, 1),
            reasons: vec![reason.into()],
        }
    }

    pub fn not_transitive(range: (u64, u64), reason: impl Into<String>) -> Self {
        Self {
            status: Status::NotTransitive,
            orbit_count_range: range,
            reasons: vec![reason.into()],
        }
    }

    pub fn undecided(range: (u64, u64), reason: impl Into<String>) -> Self {
        Self {
            status: Status::Undecided,
            orbit_count_range: range,
            reasons: vec![reason.into()],
        }
    }

    pub fn with_reason(mut self, reason: impl Into<String>) -> Self {
        self.reasons.push(reason.into());
        self
    }

    pub fn is_transitive(&self) -> bool {
        self.status == Status::Transitive
    }
}
