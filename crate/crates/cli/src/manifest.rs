//! Bundled claim manifest: claim id, descriptive anchor, expected value.

use glattice::{Error, Result};
use serde::Deserialize;
use serde_json::Value;

const BUNDLED: &str = include_str!("../data/claims.json");

#[derive(Debug, Clone, PartialEq)]
pub enum Expected {
    /// Fixed value stored in the manifest.
    Literal(Value),
    /// Computed alongside the row by an independent route.
    Rule(String),
}

#[derive(Debug, Clone)]
pub struct Claim {
    pub id: String,
    pub anchor: String,
    pub expected: Expected,
    pub gate: bool,
}

#[derive(Deserialize)]
struct RawClaim {
    id: String,
    anchor: String,
    expected: Value,
    #[serde(default)]
    gate: bool,
}

#[derive(Deserialize)]
struct RawManifest {
    claims: Vec<RawClaim>,
}

#[derive(Debug, Clone)]
pub struct Manifest {
    pub claims: Vec<Claim>,
}

impl Manifest {
    pub fn bundled() -> Result<Self> {
        Self::parse(BUNDLED)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawManifest = serde_json::from_str(text)?;
        let mut claims = Vec::with_capacity(raw.claims.len());
        for c in raw.claims {
            let expected = match c.expected {
                Value::String(s) if s.starts_with("rule:") => Expected::Rule(s["rule:".len()..].to_string()),
                v => Expected::Literal(v),
            };
            if claims.iter().any(|d: &Claim| d.id == c.id) {
                return Err(Error::Parse(format!("duplicate claim id {}", c.id)));
            }
            claims.push(Claim { id: c.id, anchor: c.anchor, expected, gate: c.gate });
        }
        Ok(Manifest { claims })
    }

    /// Exact id, else the longest claim id that is a dotted prefix of `id`.
    pub fn lookup(&self, id: &str) -> Option<&Claim> {
        self.claims
            .iter()
            .filter(|c| c.id == id || id.strip_prefix(c.id.as_str()).is_some_and(|rest| rest.starts_with('.')))
            .max_by_key(|c| c.id.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_parses() {
        let m = Manifest::bundled().unwrap();
        assert!(m.claims.len() > 30);
        assert_eq!(m.lookup("h1-transitive.n4").unwrap().expected, Expected::Literal(serde_json::json!([4])));
        assert_eq!(m.lookup("h1-orbit-gcd.S4.c03").unwrap().id, "h1-orbit-gcd");
        assert!(m.lookup("h1-orbit").is_none());
        assert!(m.lookup("gate.sha1-fast.A4").unwrap().gate);
    }

    #[test]
    fn duplicates_rejected() {
        let t = r#"{"claims": [{"id": "x", "anchor": "", "expected": 1}, {"id": "x", "anchor": "", "expected": 2}]}"#;
        assert!(Manifest::parse(t).is_err());
    }
}
