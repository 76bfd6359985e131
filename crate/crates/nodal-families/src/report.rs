//! JSON wire formats for censuses and reports, plus a small structural
//! validator for the checked-in schemas.

use crate::scalar::Scalar;
use crate::singular::{NodeClass, PointCoords, Provenance, SingularPointRecord};
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PointJson {
    Exact(Vec<String>),
    Numeric(Vec<f64>),
    Complex(Vec<[f64; 2]>),
}

#[derive(Clone, Debug, Serialize)]
pub struct RecordJson {
    pub point: PointJson,
    pub gradient_residual: f64,
    pub hessian_rank: usize,
    pub classification: NodeClass,
    pub conjugate_pair: bool,
    pub provenance: Provenance,
    pub exact: bool,
}

impl From<&SingularPointRecord> for RecordJson {
    fn from(r: &SingularPointRecord) -> Self {
        let point = match &r.point {
            PointCoords::Exact(v) => PointJson::Exact(v.iter().map(Scalar::to_string).collect()),
            PointCoords::Numeric(v) => PointJson::Numeric(v.clone()),
            PointCoords::Complex(v) => PointJson::Complex(v.iter().map(|&(a, b)| [a, b]).collect()),
        };
        RecordJson {
            point,
            gradient_residual: r.gradient_residual,
            hessian_rank: r.hessian_rank,
            classification: r.classification,
            conjugate_pair: r.conjugate_pair,
            provenance: r.provenance,
            exact: r.point.is_exact(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NodeCensusJson {
    pub family: String,
    pub seed: u64,
    pub tolerance: f64,
    pub structural_count: usize,
    pub distinct_points: usize,
    pub a1_count: usize,
    pub numeric_count: usize,
    pub agreement: bool,
    pub structural: Vec<RecordJson>,
    pub numeric: Vec<RecordJson>,
}

pub fn census_json(
    family: &str,
    seed: u64,
    tol: f64,
    structural: &[SingularPointRecord],
    numeric: &[SingularPointRecord],
    agreement: bool,
) -> NodeCensusJson {
    NodeCensusJson {
        family: family.to_string(),
        seed,
        tolerance: tol,
        structural_count: structural.len(),
        distinct_points: crate::singular::distinct_points(structural, tol),
        a1_count: structural
            .iter()
            .filter(|r| r.classification == NodeClass::A1Node)
            .count(),
        numeric_count: numeric.len(),
        agreement,
        structural: structural.iter().map(RecordJson::from).collect(),
        numeric: numeric.iter().map(RecordJson::from).collect(),
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SchemaError {
    #[error("schema violation at {path}: {message}")]
    Violation { path: String, message: String },
}

/// Structural JSON-schema check covering the subset used by the checked-in
/// schemas: type, properties/required, items, enum.
pub fn validate(value: &Value, schema: &Value) -> Result<(), SchemaError> {
    validate_at(value, schema, "$")
}

fn violation(path: &str, message: impl Into<String>) -> SchemaError {
    SchemaError::Violation {
        path: path.to_string(),
        message: message.into(),
    }
}

fn validate_at(value: &Value, schema: &Value, path: &str) -> Result<(), SchemaError> {
    if let Some(options) = schema.get("oneOf").and_then(Value::as_array) {
        if options.iter().any(|s| validate_at(value, s, path).is_ok()) {
            return Ok(());
        }
        return Err(violation(path, "no oneOf branch matched"));
    }
    if let Some(allowed) = schema.get("enum").and_then(Value::as_array) {
        if !allowed.contains(value) {
            return Err(violation(path, format!("{value} not in enum")));
        }
        return Ok(());
    }
    let Some(ty) = schema.get("type").and_then(Value::as_str) else {
        return Ok(());
    };
    match ty {
        "object" => {
            let Value::Object(map) = value else {
                return Err(violation(path, "expected object"));
            };
            if let Some(req) = schema.get("required").and_then(Value::as_array) {
                for r in req {
                    let key = r.as_str().unwrap_or_default();
                    if !map.contains_key(key) {
                        return Err(violation(path, format!("missing required key `{key}`")));
                    }
                }
            }
            if let Some(props) = schema.get("properties").and_then(Value::as_object) {
                for (k, sub) in props {
                    if let Some(v) = map.get(k) {
                        validate_at(v, sub, &format!("{path}.{k}"))?;
                    }
                }
            }
            Ok(())
        }
        "array" => {
            let Value::Array(items) = value else {
                return Err(violation(path, "expected array"));
            };
            if let Some(sub) = schema.get("items") {
                for (i, v) in items.iter().enumerate() {
                    validate_at(v, sub, &format!("{path}[{i}]"))?;
                }
            }
            Ok(())
        }
        "string" => value
            .is_string()
            .then_some(())
            .ok_or_else(|| violation(path, "expected string")),
        "number" => value
            .is_number()
            .then_some(())
            .ok_or_else(|| violation(path, "expected number")),
        "integer" => value
            .is_i64()
            .then(|| ())
            .or_else(|| value.is_u64().then(|| ()))
            .ok_or_else(|| violation(path, "expected integer")),
        "boolean" => value
            .is_boolean()
            .then_some(())
            .ok_or_else(|| violation(path, "expected boolean")),
        other => Err(violation(path, format!("unknown type `{other}`"))),
    }
}

pub const VERIFY_SCHEMA: &str = include_str!("../schema/verify_report.schema.json");
pub const CENSUS_SCHEMA: &str = include_str!("../schema/node_census.schema.json");
pub const INVARIANTS_SCHEMA: &str = include_str!("../schema/invariants.schema.json");
pub const TORUS_SCHEMA: &str = include_str!("../schema/torus_report.schema.json");
