//! Named verification suites over the shipped examples.
//!
//! Each suite rebuilds its example from scratch and returns one [`Check`] per
//! printed fact or structural identity. Construction failures are reported as
//! [`SuiteError::Construction`], never as failed checks.

mod general;
mod planes;
mod s3;
mod sl2;

use crate::report::{Check, SuiteReport};
use crate::scalars::FieldCtx;
use std::fmt::Display;
use std::time::Instant;
use thiserror::Error;

pub use general::quotient_well_defined;
pub use sl2::killing_in_rescaled_basis;

/// Every suite name accepted by [`run`], in report order.
pub const SUITES: [&str; 13] = [
    "braided-factorials",
    "nichols-dims",
    "s3-hodge",
    "s3-maxwell",
    "s3-structure",
    "sl2-calculus",
    "sl2-hodge",
    "sl2-blie",
    "sl2-laplacian",
    "qplane",
    "fermionic-fourier",
    "anyonic-fourier",
    "fourier-identities",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("unknown suite '{0}'")]
    UnknownSuite(String),
    #[error("{suite}: construction failed: {msg}")]
    Construction { suite: String, msg: String },
}

/// Field, degree and window overrides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    /// `None` picks each example's own field.
    pub field: Option<FieldCtx>,
    pub max_degree: usize,
    pub window: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { field: None, max_degree: 6, window: 6 }
    }
}

impl SuiteConfig {
    pub(crate) fn field_or(&self, default: FieldCtx) -> FieldCtx {
        self.field.clone().unwrap_or(default)
    }
}

/// Runs one suite, or all of them for `"all"`.
pub fn run(name: &str, cfg: &SuiteConfig) -> Result<Vec<SuiteReport>, SuiteError> {
    if name == "all" {
        return SUITES.iter().map(|s| run_one(s, cfg)).collect();
    }
    Ok(vec![run_one(name, cfg)?])
}

pub fn run_one(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    let start = Instant::now();
    let checks = match name {
        "braided-factorials" => general::braided_factorials(cfg),
        "nichols-dims" => general::nichols_dims(cfg),
        "fourier-identities" => general::fourier_identities(cfg),
        "s3-hodge" => s3::hodge(cfg),
        "s3-maxwell" => s3::maxwell(cfg),
        "s3-structure" => s3::structure(cfg),
        "sl2-calculus" => sl2::calculus(cfg),
        "sl2-hodge" => sl2::hodge(cfg),
        "sl2-blie" => sl2::blie(cfg),
        "sl2-laplacian" => sl2::laplacian(cfg),
        "qplane" => planes::qplane(cfg),
        "fermionic-fourier" => planes::fermionic(cfg),
        "anyonic-fourier" => planes::anyonic(cfg),
        _ => return Err(SuiteError::UnknownSuite(name.to_string())),
    }
    .map_err(|msg| SuiteError::Construction { suite: name.to_string(), msg })?;
    Ok(SuiteReport::new(name, checks, start.elapsed().as_millis() as u64))
}

/// Construction-stage result inside a suite body.
type Built<T> = Result<T, String>;

fn built<T, E: Display>(r: Result<T, E>) -> Built<T> {
    r.map_err(|e| e.to_string())
}

/// A check that records any error raised while computing it.
fn guarded(id: &str, f: impl FnOnce() -> Result<Check, String>) -> Check {
    f().unwrap_or_else(|e| Check::error(id, e))
}

fn holds(id: impl Into<String>, pass: bool) -> Check {
    Check::holds(id, pass, if pass { "holds" } else { "violated" })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert_eq!(run("nope", &SuiteConfig::default()).unwrap_err(), SuiteError::UnknownSuite("nope".into()));
    }

    #[test]
    fn s3_suites_reject_other_fields() {
        let cfg = SuiteConfig { field: Some(FieldCtx::RatFun), ..Default::default() };
        assert!(matches!(run_one("s3-hodge", &cfg), Err(SuiteError::Construction { .. })));
    }
}
