//! JSON rendering: `{"terms":[{"coeff":"p/q","shape":…}]}` in canonical term order.

use configpair::{LinearCombo, Scalar, TensorCombo};
use serde::Serialize;
use serde_json::{json, Value};

/// A coefficient as `"p/q"`, always with an explicit positive denominator.
pub fn coeff(c: &Scalar) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

pub fn combo<B: Ord + Clone + Serialize>(c: &LinearCombo<B>) -> Value {
    let terms: Vec<Value> = c.iter().map(|(s, k)| json!({"coeff": coeff(k), "shape": s})).collect();
    json!({ "terms": terms })
}

pub fn tensor<B: Ord + Clone + Serialize>(c: &TensorCombo<B>) -> Value {
    let terms: Vec<Value> = c
        .iter()
        .map(|((l, r), k)| json!({"coeff": coeff(k), "shape": {"left": l, "right": r}}))
        .collect();
    json!({ "terms": terms })
}

pub fn value(c: &Scalar) -> Value {
    json!({ "value": coeff(c) })
}
