use serde_json::{json, Value};

use super::cert::EquivCertificate;
use super::seq::{ExactSeq, Term};
use crate::glat::lattice_to_json;
use crate::intlin::matrix_to_json;

fn term_json(t: &Term) -> Value {
    match t {
        Term::Lattice(m) => lattice_to_json(m),
        Term::Finite(m) => {
            let mut v = lattice_to_json(m.lift());
            v["modulus"] = json!(m.modulus().to_string());
            v
        }
    }
}

/// `{"name", "terms": [...], "maps": [...], "verified": bool}`.
pub fn seq_to_json(s: &ExactSeq) -> Value {
    json!({
        "name": s.name,
        "terms": s.terms().iter().map(term_json).collect::<Vec<_>>(),
        "maps": s.maps().iter().map(matrix_to_json).collect::<Vec<_>>(),
        "verified": s.is_verified(),
    })
}

pub fn cert_to_json(c: &EquivCertificate) -> Value {
    json!({
        "m": c.m.name(),
        "n": c.n.name(),
        "middle": c.middle.name(),
        "seq_m": seq_to_json(&c.seq_m),
        "seq_n": seq_to_json(&c.seq_n),
    })
}
