use serde_json::{json, Value};

use super::lattice::GLattice;
use crate::error::{Error, Result};
use crate::intlin::{matrix_from_json, matrix_to_json};
use crate::permgrp::{group_ref, PermGroup};

/// `{"group": ref, "rank": r, "generators": [matrix, ...], "labels": [...]}`.
pub fn lattice_to_json(m: &GLattice) -> Value {
    json!({
        "name": m.name(),
        "group": group_ref(m.group()),
        "rank": m.rank(),
        "generators": m.generator_matrices().iter().map(matrix_to_json).collect::<Vec<_>>(),
        "labels": m.labels_or_default(),
    })
}

/// Reads a lattice over a known group; the generator matrices must match
/// the group's generators one to one.
pub fn lattice_from_json(v: &Value, group: &PermGroup) -> Result<GLattice> {
    let rank = v["rank"].as_u64().ok_or_else(|| Error::Parse("lattice json: rank".into()))? as usize;
    let gens = v["generators"]
        .as_array()
        .ok_or_else(|| Error::Parse("lattice json: generators".into()))?
        .iter()
        .map(matrix_from_json)
        .collect::<Result<Vec<_>>>()?;
    let mut l = GLattice::with_rank(group, rank, gens)?;
    if let Some(labels) = v["labels"].as_array() {
        let labels: Vec<String> = labels.iter().filter_map(|x| x.as_str().map(str::to_string)).collect();
        if labels.len() == rank {
            l = l.with_labels(labels);
        }
    }
    if let Some(name) = v["name"].as_str() {
        l = l.with_name(name);
    }
    Ok(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glat::parse_fixture;

    #[test]
    fn round_trip() {
        let a = parse_fixture("Sym2A(4)").unwrap();
        let v = lattice_to_json(&a);
        let b = lattice_from_json(&v, a.group()).unwrap();
        assert_eq!(a.generator_matrices(), b.generator_matrices());
        assert_eq!(b.labels(), a.labels());
    }
}
