//! JSON encodings of algebra elements, matrices and the bundled matrix fixtures.
//!
//! Scalars are always strings in the field's text form (`"-3/4"`, `"2"`).

use serde_json::{json, Value};

use crate::chevalley::{AlgElement, ChevalleyAlgebra};
use crate::error::{Error, Result};
use crate::freelie::{parse, LiePoly};
use crate::linalg::Matrix;
use crate::matrixrep::{MatrixElement, RealizationKind};
use crate::scalar::Field;

pub fn scalars_to_json<F: Field>(field: &F, xs: &[F::Elem]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(field.format(x))).collect())
}

fn scalar_from_json<F: Field>(field: &F, v: &Value) -> Result<F::Elem> {
    match v {
        Value::String(s) => field.parse(s),
        Value::Number(n) => field.parse(&n.to_string()),
        other => Err(Error::BadScalar(other.to_string())),
    }
}

pub fn element_to_json<F: Field>(field: &F, x: &[F::Elem]) -> Value {
    json!({ "basis": "chevalley", "coeffs": scalars_to_json(field, x) })
}

pub fn element_from_json<F: Field>(alg: &ChevalleyAlgebra<F>, v: &Value) -> Result<AlgElement<F::Elem>> {
    if v.get("basis").and_then(Value::as_str) != Some("chevalley") {
        return Err(Error::Invalid("expected an object with \"basis\": \"chevalley\"".into()));
    }
    let coeffs = v.get("coeffs").and_then(Value::as_array).ok_or_else(|| Error::Invalid("missing \"coeffs\" array".into()))?;
    let x = coeffs.iter().map(|c| scalar_from_json(alg.field(), c)).collect::<Result<Vec<_>>>()?;
    alg.check_shape(&x)?;
    Ok(x)
}

pub fn matrix_to_json<F: Field>(field: &F, m: &MatrixElement<F::Elem>) -> Value {
    let rows: Vec<Value> = m.matrix.to_rows().iter().map(|r| scalars_to_json(field, r)).collect();
    json!({ "basis": "matrix", "realization": m.realization.to_string(), "rows": rows })
}

pub fn matrix_from_json<F: Field>(field: &F, v: &Value) -> Result<MatrixElement<F::Elem>> {
    if v.get("basis").and_then(Value::as_str) != Some("matrix") {
        return Err(Error::Invalid("expected an object with \"basis\": \"matrix\"".into()));
    }
    let kind: RealizationKind = v
        .get("realization")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Invalid("missing \"realization\"".into()))?
        .parse()?;
    let rows = v.get("rows").and_then(Value::as_array).ok_or_else(|| Error::Invalid("missing \"rows\" array".into()))?;
    let rows = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Error::Invalid("rows must be arrays".into()))?
                .iter()
                .map(|c| scalar_from_json(field, c))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    MatrixElement::new(field, kind, Matrix::from_rows(rows)?)
}

/// Two triples of matrices and the polynomial to evaluate on them.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixFixture<E> {
    pub name: String,
    pub realization: RealizationKind,
    pub polynomial: LiePoly,
    pub triple1: Vec<MatrixElement<E>>,
    pub triple2: Vec<MatrixElement<E>>,
}

pub const BUNDLED_FIXTURES: [&str; 2] = ["paper-a2", "paper-b2"];

pub fn bundled_fixture_text(name: &str) -> Option<&'static str> {
    match name {
        "paper-a2" => Some(include_str!("../fixtures/paper-a2.json")),
        "paper-b2" => Some(include_str!("../fixtures/paper-b2.json")),
        _ => None,
    }
}

pub fn parse_fixture<F: Field>(field: &F, text: &str) -> Result<MatrixFixture<F::Elem>> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Invalid(format!("fixture is not valid JSON: {e}")))?;
    let s = |k: &str| v.get(k).and_then(Value::as_str).ok_or_else(|| Error::Invalid(format!("fixture is missing \"{k}\"")));
    let triple = |k: &str| -> Result<Vec<MatrixElement<F::Elem>>> {
        v.get(k)
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Invalid(format!("fixture is missing \"{k}\"")))?
            .iter()
            .map(|m| matrix_from_json(field, m))
            .collect()
    };
    let realization: RealizationKind = s("realization")?.parse()?;
    let fixture = MatrixFixture {
        name: s("name")?.to_string(),
        realization,
        polynomial: parse(s("polynomial")?)?,
        triple1: triple("triple1")?,
        triple2: triple("triple2")?,
    };
    if fixture.triple1.iter().chain(&fixture.triple2).any(|m| m.realization != realization) {
        return Err(Error::Invalid("fixture matrices disagree with its realization".into()));
    }
    Ok(fixture)
}

pub fn load_fixture<F: Field>(field: &F, name: &str) -> Result<MatrixFixture<F::Elem>> {
    let text = bundled_fixture_text(name).ok_or_else(|| Error::Invalid(format!("unknown fixture `{name}`")))?;
    parse_fixture(field, text)
}
