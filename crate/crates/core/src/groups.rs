//! Symbolic descriptors for the finite groups that appear in reports.
//!
//! These are labels with an order attached, not group objects; only
//! [`crate::psl`] materialises actual group elements.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupFamily {
    Cyclic,
    Dihedral,
    Polyhedral,
    /// Direct product with a central `C2`.
    CentralProduct,
    /// Central extension by `C2` whose splitting type is not recorded.
    CentralExtension,
    Linear,
    AccolaMaclachlan,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub name: String,
    pub order: u64,
    pub family: GroupFamily,
    pub presentation: Option<String>,
}

impl GroupDescriptor {
    pub fn new(name: impl Into<String>, order: u64, family: GroupFamily) -> Self {
        Self {
            name: name.into(),
            order,
            family,
            presentation: None,
        }
    }

    pub fn with_presentation(mut self, presentation: impl Into<String>) -> Self {
        self.presentation = Some(presentation.into());
        self
    }

    pub fn cyclic(n: u64) -> Self {
        Self::new(format!("C{n}"), n, GroupFamily::Cyclic)
    }

    /// Dihedral group of order `2n`, written `D_n`.
    pub fn dihedral(n: u64) -> Self {
        Self::new(format!("D{n}"), 2 * n, GroupFamily::Dihedral)
    }

    /// `C2 × G`.
    pub fn times_c2(&self) -> Self {
        Self::new(
            format!("C2×{}", self.name),
            2 * self.order,
            GroupFamily::CentralProduct,
        )
    }

    /// A central extension `C2·G` of unspecified type.
    pub fn extension_by_c2(&self) -> Self {
        Self::new(
            format!("C2·{}", self.name),
            2 * self.order,
            GroupFamily::CentralExtension,
        )
    }

    /// Automorphism group of the Accola–Maclachlan surface of genus `g`, of
    /// order `8(g + 1)`.
    pub fn accola_maclachlan(g: u64) -> Self {
        let n = 2 * g + 2;
        Self::new("AM", 8 * (g + 1), GroupFamily::AccolaMaclachlan).with_presentation(format!(
            "<r,s | r^4 = s^{n} = (rs)^2 = (r^-1 s)^2 = 1>"
        ))
    }
}

impl std::fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (order {})", self.name, self.order)
    }
}
