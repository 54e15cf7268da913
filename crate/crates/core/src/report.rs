//! JSON report records shared by the verification suites and the CLI.

use serde::Serialize;
use serde_json::Value;

/// One sampled or exact comparison.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub point: String,
    pub lhs: String,
    pub rhs: String,
    pub abs_err: f64,
    pub rel_err: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckRecord {
    /// A numeric comparison |lhs - rhs| <= tol * max(|rhs|, floor).
    pub fn numeric(name: &str, point: String, lhs: num_complex::Complex64, rhs: num_complex::Complex64, tol: f64) -> Self {
        let abs_err = (lhs - rhs).norm();
        // against an exact zero the absolute error is the only meaningful one
        let scale = rhs.norm();
        let rel_err = if scale > 0.0 { abs_err / scale } else { abs_err };
        CheckRecord {
            name: name.into(),
            point,
            lhs: format!("{lhs}"),
            rhs: format!("{rhs}"),
            abs_err,
            rel_err,
            tolerance: tol,
            pass: rel_err <= tol,
        }
    }

    /// An exact comparison; errors are 0 or 1.
    pub fn exact(name: &str, point: String, lhs: String, rhs: String, equal: bool) -> Self {
        let e = if equal { 0.0 } else { 1.0 };
        CheckRecord { name: name.into(), point, lhs, rhs, abs_err: e, rel_err: e, tolerance: 0.0, pass: equal }
    }

    /// A boolean property with an attached measurement.
    pub fn flag(name: &str, point: String, value: f64, tol: f64, pass: bool) -> Self {
        CheckRecord {
            name: name.into(),
            point,
            lhs: format!("{value:e}"),
            rhs: format!("<= {tol:e}"),
            abs_err: value,
            rel_err: value,
            tolerance: tol,
            pass,
        }
    }
}

/// Result of one verification suite.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub pass: bool,
    pub checks: Vec<CheckRecord>,
    /// Suite-specific payload (eigenform reports, fitted norms, ...).
    pub details: Value,
}

impl SuiteReport {
    pub fn new(suite: &str, checks: Vec<CheckRecord>, details: Value) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        SuiteReport { suite: suite.into(), pass, checks, details }
    }

    pub fn max_rel_err(&self) -> f64 {
        self.checks.iter().map(|c| c.rel_err).fold(0.0, f64::max)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.pass)
    }
}
