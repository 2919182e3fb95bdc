//! Structured pass/fail reports.

use num_bigint::BigInt;
use serde::Serialize;

use crate::qseries::{Mismatch, PuiseuxSeries};
use crate::rational::{format_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<Mismatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckReport {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckReport { name: name.into(), status: Status::Pass, first_mismatch: None, detail: None }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckReport { name: name.into(), status: Status::Fail, first_mismatch: None, detail: Some(detail.into()) }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, detail)
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

/// All checks of one suite run, in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub pass: bool,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, checks: Vec<CheckReport>) -> Self {
        let pass = checks.iter().all(CheckReport::passed);
        SuiteReport { suite: suite.into(), pass, checks }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckReport> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

pub fn all_pass(checks: &[CheckReport]) -> bool {
    checks.iter().all(CheckReport::passed)
}

/// Compares two series below `q^order`; both must be known at least that far.
pub fn compare_series(name: impl Into<String>, lhs: &PuiseuxSeries, rhs: &PuiseuxSeries, order: &Rational) -> CheckReport {
    let name = name.into();
    for (side, s) in [("lhs", lhs), ("rhs", rhs)] {
        if s.precision() < order {
            return CheckReport::fail(
                name,
                format!("{side} known only to O(q^{}), need O(q^{})", format_rational(s.precision()), format_rational(order)),
            );
        }
    }
    let l = lhs.truncate_to_precision(order);
    let r = rhs.truncate_to_precision(order);
    match l.first_mismatch(&r) {
        None => CheckReport::pass(name).with_detail(format!("agree to O(q^{})", format_rational(order))),
        Some(m) => CheckReport { name, status: Status::Fail, first_mismatch: Some(m), detail: None },
    }
}

/// `order` as an absolute exponent `offset + coefficients`.
pub fn order_after(offset: &Rational, coefficients: usize) -> Rational {
    offset + Rational::from_integer(BigInt::from(coefficients))
}
