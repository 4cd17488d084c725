use num_bigint::BigInt;
use serde_json::{json, Value};

use super::IntMat;
use crate::error::{Error, Result};

fn entry(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(x) => json!(x),
        Err(_) => json!(v.to_string()),
    }
}

/// `{"rows": r, "cols": c, "entries": [[...], ...]}`; entries beyond 64 bits
/// are decimal strings.
pub fn matrix_to_json(m: &IntMat) -> Value {
    let entries: Vec<Vec<Value>> = (0..m.rows()).map(|i| m.row(i).iter().map(entry).collect()).collect();
    json!({"rows": m.rows(), "cols": m.cols(), "entries": entries})
}

pub fn matrix_from_json(v: &Value) -> Result<IntMat> {
    let bad = |what: &str| Error::Parse(format!("matrix json: {what}"));
    let rows = v["rows"].as_u64().ok_or_else(|| bad("rows"))? as usize;
    let cols = v["cols"].as_u64().ok_or_else(|| bad("cols"))? as usize;
    let entries = v["entries"].as_array().ok_or_else(|| bad("entries"))?;
    if entries.len() != rows {
        return Err(bad("row count"));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for r in entries {
        let r = r.as_array().ok_or_else(|| bad("row"))?;
        if r.len() != cols {
            return Err(bad("column count"));
        }
        for x in r {
            let val = match x {
                Value::Number(n) => BigInt::from(n.as_i64().ok_or_else(|| bad("integer"))?),
                Value::String(s) => s.parse::<BigInt>().map_err(|_| bad("integer string"))?,
                _ => return Err(bad("entry")),
            };
            data.push(val);
        }
    }
    Ok(IntMat::from_vec(rows, cols, data))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_with_big_entries() {
        let big: BigInt = BigInt::from(1u64 << 63) * 5;
        let m = IntMat::from_vec(1, 2, vec![BigInt::from(-3), big.clone()]);
        let v = matrix_to_json(&m);
        assert_eq!(v["entries"][0][1], json!(big.to_string()));
        assert_eq!(matrix_from_json(&v).unwrap(), m);
    }
}
