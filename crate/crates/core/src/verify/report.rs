//! Verification reports.

use serde::Serialize;

/// Slack allowed on every checked inequality.
pub const INEQUALITY_TOL: f64 = 1e-9;

/// One inequality `lhs <= rhs` that failed beyond tolerance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FailureRecord {
    /// `None` for suite-level checks (extremals and controls).
    pub sample_id: Option<u64>,
    pub check: String,
    pub r: f64,
    pub lhs: f64,
    pub rhs: f64,
    /// `lhs - rhs`.
    pub slack: f64,
}

/// Comparison at an extremal function where equality is expected.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EqualityCase {
    pub name: String,
    pub r: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_diff: f64,
    /// Whether `abs_diff <= tol` is enforced (otherwise recorded only).
    pub asserted: bool,
    pub tol: f64,
}

/// A check that is expected to fail, confirming a radius is not slack.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ControlCheck {
    pub name: String,
    pub r: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub violated: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: serde_json::Value,
    pub samples: usize,
    pub seed: u64,
    pub order: usize,
    /// Number of inequalities evaluated over all samples.
    pub checks: usize,
    pub failures: Vec<FailureRecord>,
    /// Largest `lhs - rhs` over all sampled inequalities.
    pub max_slack: f64,
    pub equality_cases: Vec<EqualityCase>,
    pub controls: Vec<ControlCheck>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(suite: &str, params: serde_json::Value, samples: usize, seed: u64, order: usize) -> Self {
        Self {
            suite: suite.into(),
            params,
            samples,
            seed,
            order,
            checks: 0,
            failures: Vec::new(),
            max_slack: f64::NEG_INFINITY,
            equality_cases: Vec::new(),
            controls: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records an equality case; asserted cases outside `tol` become failures.
    pub fn add_equality(&mut self, name: &str, r: f64, lhs: f64, rhs: f64, asserted: bool, tol: f64) {
        let abs_diff = (lhs - rhs).abs();
        if asserted && !(abs_diff <= tol) {
            self.failures.push(FailureRecord {
                sample_id: None,
                check: format!("equality:{name}"),
                r,
                lhs,
                rhs,
                slack: abs_diff,
            });
        }
        self.equality_cases.push(EqualityCase {
            name: name.into(),
            r,
            lhs,
            rhs,
            abs_diff,
            asserted,
            tol,
        });
    }

    /// Records an expected violation `lhs > rhs`; if it does not occur the
    /// control becomes a failure.
    pub fn add_control(&mut self, name: &str, r: f64, lhs: f64, rhs: f64) {
        let violated = lhs > rhs + INEQUALITY_TOL;
        if !violated {
            self.failures.push(FailureRecord {
                sample_id: None,
                check: format!("control:{name}"),
                r,
                lhs,
                rhs,
                slack: lhs - rhs,
            });
        }
        self.controls.push(ControlCheck {
            name: name.into(),
            r,
            lhs,
            rhs,
            violated,
        });
    }

    pub(crate) fn absorb(&mut self, outcome: SampleOutcome) {
        self.checks += outcome.checks;
        if outcome.max_slack > self.max_slack {
            self.max_slack = outcome.max_slack;
        }
        self.failures.extend(outcome.failures);
    }
}

/// Checks of one sample, merged into the report in sample order.
#[derive(Debug, Clone, Default)]
pub(crate) struct SampleOutcome {
    pub checks: usize,
    pub max_slack: f64,
    pub failures: Vec<FailureRecord>,
}

impl SampleOutcome {
    pub fn new() -> Self {
        Self {
            checks: 0,
            max_slack: f64::NEG_INFINITY,
            failures: Vec::new(),
        }
    }

    /// Checks `lhs <= rhs + tol`.
    pub fn check_le(&mut self, id: u64, check: &str, r: f64, lhs: f64, rhs: f64) -> bool {
        self.checks += 1;
        let slack = lhs - rhs;
        if slack > self.max_slack || slack.is_nan() {
            self.max_slack = if slack.is_nan() { f64::INFINITY } else { slack };
        }
        if slack <= INEQUALITY_TOL {
            return true;
        }
        self.failures.push(FailureRecord {
            sample_id: Some(id),
            check: check.into(),
            r,
            lhs,
            rhs,
            slack,
        });
        false
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}
