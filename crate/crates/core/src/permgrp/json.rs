use serde::{Deserialize, Serialize};

use super::group::{GroupKind, PermGroup};
use super::special::{alpha_beta, even_pairs, sigma_pi, sylow2_alt};
use crate::error::{Error, Result};

/// `{"degree": n, "generators": [[cycle, ...], ...], "name": str}` with
/// 1-based cycles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub degree: usize,
    pub generators: Vec<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl GroupSpec {
    pub fn of(g: &PermGroup) -> Self {
        GroupSpec {
            degree: g.degree(),
            generators: g.generators().iter().map(|p| p.cycles_1based()).collect(),
            name: g.name().map(str::to_string),
        }
    }

    pub fn build(&self) -> Result<PermGroup> {
        PermGroup::from_cycles_1based(self.degree, &self.generators, self.name.clone())
    }
}

fn args(s: &str, head: &str) -> Option<Vec<usize>> {
    let rest = s.strip_prefix(head)?.strip_prefix('(')?.strip_suffix(')')?;
    rest.split(',').map(|a| a.trim().parse().ok()).collect()
}

/// Parses a group given either as JSON or by name: `S4`, `A5`, `C3`,
/// `trivial(n)`, `alpha_beta(n,p)`, `sigma_pi(p)`, `even_pairs(n)`,
/// `sylow2_alt(n)`.
pub fn parse_group(s: &str) -> Result<PermGroup> {
    let s = s.trim();
    if s.starts_with('{') {
        let spec: GroupSpec = serde_json::from_str(s)?;
        return spec.build();
    }
    let bad = || Error::Parse(format!("unknown group '{s}'"));
    if let Some(a) = args(s, "alpha_beta") {
        return match a[..] {
            [n, p] => alpha_beta(n, p),
            _ => Err(bad()),
        };
    }
    for (head, f) in [
        ("sigma_pi", sigma_pi as fn(usize) -> Result<PermGroup>),
        ("even_pairs", even_pairs),
        ("sylow2_alt", sylow2_alt),
        ("trivial", |n| Ok(PermGroup::trivial(n))),
    ] {
        if let Some(a) = args(s, head) {
            return match a[..] {
                [n] => f(n),
                _ => Err(bad()),
            };
        }
    }
    let (head, num) = s.split_at(1.min(s.len()));
    let n: usize = num.parse().map_err(|_| bad())?;
    if n == 0 {
        return Err(bad());
    }
    match head {
        "S" => Ok(PermGroup::symmetric(n)),
        "A" => Ok(PermGroup::alternating(n)),
        "C" => Ok(PermGroup::cyclic(n)),
        _ => Err(bad()),
    }
}

/// Short machine-readable reference used inside other JSON documents.
pub fn group_ref(g: &PermGroup) -> serde_json::Value {
    match (g.kind(), g.name()) {
        (GroupKind::Symmetric | GroupKind::Alternating, Some(n)) => serde_json::Value::String(n.to_string()),
        _ => serde_json::to_value(GroupSpec::of(g)).expect("serializable"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        let g = parse_group(r#"{"degree": 4, "generators": [[[1,2]], [[1,2,3,4]]], "name": "S4copy"}"#).unwrap();
        assert_eq!(g.order().unwrap(), 24);
        let spec = GroupSpec::of(&g);
        assert_eq!(spec.generators[1], vec![vec![1, 2, 3, 4]]);
        assert_eq!(spec.build().unwrap().order().unwrap(), 24);
        assert_eq!(parse_group("A5").unwrap().order().unwrap(), 60);
        assert_eq!(parse_group("alpha_beta(6, 2)").unwrap().order().unwrap(), 4);
        assert_eq!(parse_group("sylow2_alt(8)").unwrap().order().unwrap(), 64);
        assert!(parse_group("Q8").is_err());
    }
}
