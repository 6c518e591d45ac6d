//! Verification reports: named checks with expected and actual values in the
//! JSON scalar schema.

use crate::linalg::{LinMap, SparseVec};
use crate::scalars::Scalar;
use serde::Serialize;
use serde_json::{json, Value};

/// Values that can appear in a report.
pub trait ToJson {
    fn to_json(&self) -> Value;
}

impl ToJson for Scalar {
    fn to_json(&self) -> Value {
        Scalar::to_json(self)
    }
}

impl ToJson for LinMap {
    fn to_json(&self) -> Value {
        Value::Array(self.to_dense().iter().map(|r| Value::Array(r.iter().map(Scalar::to_json).collect())).collect())
    }
}

impl ToJson for SparseVec {
    fn to_json(&self) -> Value {
        Value::Array(self.iter().map(|(i, c)| json!([i, c.to_json()])).collect())
    }
}

impl ToJson for bool {
    fn to_json(&self) -> Value {
        json!(self)
    }
}

impl ToJson for usize {
    fn to_json(&self) -> Value {
        json!(self)
    }
}

impl ToJson for String {
    fn to_json(&self) -> Value {
        json!(self)
    }
}

impl ToJson for &str {
    fn to_json(&self) -> Value {
        json!(self)
    }
}

impl<T: ToJson> ToJson for Vec<T> {
    fn to_json(&self) -> Value {
        Value::Array(self.iter().map(ToJson::to_json).collect())
    }
}

impl<A: ToJson, B: ToJson> ToJson for (A, B) {
    fn to_json(&self) -> Value {
        json!([self.0.to_json(), self.1.to_json()])
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    pub pass: bool,
    pub expected: Value,
    pub actual: Value,
}

impl Check {
    /// Passes when `expected == actual`.
    pub fn compare<T: PartialEq + ToJson>(id: impl Into<String>, expected: &T, actual: &T) -> Check {
        Check { id: id.into(), pass: expected == actual, expected: expected.to_json(), actual: actual.to_json() }
    }

    /// A boolean property; `detail` describes what was observed.
    pub fn holds(id: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
        Check { id: id.into(), pass, expected: json!(true), actual: json!(detail.into()) }
    }

    /// A failed check carrying an error message.
    pub fn error(id: impl Into<String>, err: impl std::fmt::Display) -> Check {
        Check { id: id.into(), pass: false, expected: json!(true), actual: json!(format!("error: {err}")) }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub pass: bool,
    pub ms: u64,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, checks: Vec<Check>, ms: u64) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        SuiteReport { suite: suite.into(), checks, pass, ms }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }
}
