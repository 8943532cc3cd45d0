//! Structured reports rendered as text or JSON.
//!
//! Integers above `2^53` are written to JSON as decimal strings so that
//! consumers using double-precision numbers read them exactly.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::verdict::TransitivityVerdict;

const SAFE_INTEGER: i128 = 1 << 53;

/// An integer that serialises as a JSON number when it is at most `2^53` in
/// absolute value and as a decimal string otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Num(pub i128);

impl From<u64> for Num {
    fn from(v: u64) -> Self {
        Num(v as i128)
    }
}

impl From<i128> for Num {
    fn from(v: i128) -> Self {
        Num(v)
    }
}

impl std::fmt::Display for Num {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.abs() <= SAFE_INTEGER {
            s.serialize_i64(self.0 as i64)
        } else {
            s.serialize_str(&self.0.to_string())
        }
    }
}

impl<'de> Deserialize<'de> for Num {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct NumVisitor;

        impl Visitor<'_> for NumVisitor {
            type Value = Num;

            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("an integer or a decimal string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Num, E> {
                Ok(Num(v as i128))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Num, E> {
                Ok(Num(v as i128))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Num, E> {
                v.parse().map(Num).map_err(E::custom)
            }
        }

        d.deserialize_any(NumVisitor)
    }
}

/// Where a claimed value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// A published value carried as data.
    Published,
    /// Computed by this library.
    Computed,
    /// Computed and checked against an independent oracle.
    OracleVerified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Value {
    Integer(Num),
    Integers(Vec<Num>),
    Vectors(Vec<Vec<Num>>),
    Text(String),
    Flag(bool),
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |v: &[Num]| v.iter().map(Num::to_string).collect::<Vec<_>>().join(", ");
        match self {
            Value::Integer(n) => write!(f, "{n}"),
            Value::Integers(v) => write!(f, "[{}]", join(v)),
            Value::Vectors(vs) => {
                let parts: Vec<String> = vs.iter().map(|v| format!("({})", join(v))).collect();
                write!(f, "{}", parts.join(" "))
            }
            Value::Text(s) => f.write_str(s),
            Value::Flag(b) => write!(f, "{b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub label: String,
    pub value: Value,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    pub title: String,
    pub claims: Vec<Claim>,
}

impl Section {
    pub fn new(title: impl Into<String>) -> Self {
        Self {
            title: title.into(),
            claims: Vec::new(),
        }
    }

    pub fn claim(mut self, label: impl Into<String>, value: Value, provenance: Provenance) -> Self {
        self.claims.push(Claim {
            label: label.into(),
            value,
            provenance,
        });
        self
    }

    pub fn int(self, label: impl Into<String>, v: impl Into<Num>, p: Provenance) -> Self {
        self.claim(label, Value::Integer(v.into()), p)
    }

    pub fn text(self, label: impl Into<String>, v: impl Into<String>, p: Provenance) -> Self {
        self.claim(label, Value::Text(v.into()), p)
    }

    pub fn flag(self, label: impl Into<String>, v: bool, p: Provenance) -> Self {
        self.claim(label, Value::Flag(v), p)
    }

    pub fn ints(self, label: impl Into<String>, v: &[u64], p: Provenance) -> Self {
        self.claim(label, Value::Integers(v.iter().map(|&x| Num::from(x)).collect()), p)
    }

    /// Status, orbit range and reasons of a verdict.
    pub fn verdict(mut self, v: &TransitivityVerdict, p: Provenance) -> Self {
        self = self
            .text("status", v.status.to_string(), p)
            .ints("orbit count range", &[v.orbit_count_range.0, v.orbit_count_range.1], p);
        for r in &v.reasons {
            self = self.text("reason", r.clone(), p);
        }
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    /// Results the report relies on, by name.
    pub citations: Vec<String>,
    pub sections: Vec<Section>,
}

impl ReportDocument {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            parameters: BTreeMap::new(),
            citations: Vec::new(),
            sections: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn cite(mut self, citation: impl Into<String>) -> Self {
        self.citations.push(citation.into());
        self
    }

    pub fn section(mut self, s: Section) -> Self {
        self.sections.push(s);
        self
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.command);
        for (k, v) in &self.parameters {
            let _ = writeln!(out, "  {k} = {v}");
        }
        for s in &self.sections {
            let _ = writeln!(out, "\n[{}]", s.title);
            for c in &s.claims {
                let tag = match c.provenance {
                    Provenance::Published => "published",
                    Provenance::Computed => "computed",
                    Provenance::OracleVerified => "verified",
                };
                let _ = writeln!(out, "  {}: {}  ({tag})", c.label, c.value);
            }
        }
        if !self.citations.is_empty() {
            let _ = writeln!(out, "\nreferences:");
            for c in &self.citations {
                let _ = writeln!(out, "  - {c}");
            }
        }
        out
    }
}
