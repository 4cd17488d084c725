use serde_json::{json, Value};

use super::hbar::{CohomGroup, Path};
use super::sha::ShaGroup;
use crate::intlin::AbelianInvariants;
use crate::permgrp::{group_ref, PermGroup};

/// Invariant factors with one `0` per free summand.
pub fn invariants_list(a: &AbelianInvariants) -> Vec<Value> {
    let mut v: Vec<Value> = a.torsion.iter().map(|d| json!(d.to_string().parse::<u64>().map(Value::from).unwrap_or_else(|_| json!(d.to_string())))).collect();
    v.extend(std::iter::repeat_n(json!(0), a.free_rank));
    v
}

pub fn invariants_json(group: &PermGroup, coefficients: &str, degree: i64, inv: &AbelianInvariants, path: Path) -> Value {
    json!({
        "group": group_ref(group),
        "coefficients": coefficients,
        "degree": degree,
        "invariants": invariants_list(inv),
        "path": path.as_str(),
    })
}

pub fn cohom_json(c: &CohomGroup) -> Value {
    invariants_json(&c.group, &c.coefficients.name(), c.degree as i64, &c.invariants, c.path)
}

pub fn sha_json(s: &ShaGroup) -> Value {
    let mut v = invariants_json(&s.group, &s.coefficients, s.degree as i64, &s.invariants, s.path);
    v["kind"] = json!("sha");
    v["cyclic_subgroups"] = json!(s.cyclic_checked);
    v
}
