//! JSON exchange format for group-algebra elements.
//!
//! An element is a list of `{"lattice": [ints], "coeff": [[halfExp, int], ...]}`
//! objects. Integers that fit in 64 bits are written as JSON numbers; larger
//! ones as decimal strings. Both forms are accepted on input.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::AlgebraError;
use crate::group_algebra::OrbitPolynomial;
use crate::laurent::HalfPowerLaurent;

fn int_to_json(c: &BigInt) -> Value {
    match i64::try_from(c) {
        Ok(v) => json!(v),
        Err(_) => json!(c.to_string()),
    }
}

fn int_from_json(v: &Value) -> Result<BigInt, AlgebraError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| AlgebraError::Json(format!("not an integer: {n}"))),
        Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|e| AlgebraError::Json(format!("bad integer {s:?}: {e}"))),
        other => Err(AlgebraError::Json(format!("expected integer, got {other}"))),
    }
}

/// Serializes an element to the JSON exchange format.
pub fn orbit_to_json(f: &OrbitPolynomial) -> Value {
    Value::Array(
        f.terms()
            .map(|(l, c)| {
                let coeff: Vec<Value> = c.terms().map(|(h, v)| json!([h, int_to_json(v)])).collect();
                json!({ "lattice": l, "coeff": coeff })
            })
            .collect(),
    )
}

/// Parses an element from the JSON exchange format.
pub fn orbit_from_json(v: &Value) -> Result<OrbitPolynomial, AlgebraError> {
    let items = v
        .as_array()
        .ok_or_else(|| AlgebraError::Json("expected a list of terms".into()))?;
    let mut out = OrbitPolynomial::zero();
    for item in items {
        let lattice = item
            .get("lattice")
            .and_then(Value::as_array)
            .ok_or_else(|| AlgebraError::Json("term without lattice".into()))?
            .iter()
            .map(|x| {
                x.as_i64()
                    .ok_or_else(|| AlgebraError::Json(format!("bad coordinate {x}")))
            })
            .collect::<Result<Vec<i64>, _>>()?;
        let pairs = item
            .get("coeff")
            .and_then(Value::as_array)
            .ok_or_else(|| AlgebraError::Json("term without coeff".into()))?;
        let mut c = HalfPowerLaurent::zero();
        for p in pairs {
            let pair = p
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| AlgebraError::Json(format!("bad coefficient pair {p}")))?;
            let h = pair[0]
                .as_i64()
                .ok_or_else(|| AlgebraError::Json(format!("bad half-exponent {}", pair[0])))?;
            c += &HalfPowerLaurent::monomial(h, int_from_json(&pair[1])?);
        }
        out.add_term(lattice, &c);
    }
    Ok(out)
}
