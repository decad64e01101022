//! Outcome of a grid verification.

use std::fmt;

use serde::Serialize;

use crate::format::{serialize_num, serialize_num_opt};
use crate::special_fn::EvalResult;

/// Where a check was evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Location {
    X {
        #[serde(serialize_with = "serialize_num")]
        x: f64,
    },
    Point {
        #[serde(serialize_with = "serialize_num")]
        a: f64,
        n: u64,
    },
    Term {
        k: usize,
    },
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::X { x } => write!(f, "x={}", crate::format::fmt_num(*x)),
            Location::Point { a, n } => write!(f, "a={};n={n}", crate::format::fmt_num(*a)),
            Location::Term { k } => write!(f, "k={k}"),
        }
    }
}

/// A violated check. `gap = lhs − rhs` under the convention that the claim
/// reads `lhs ≤ rhs` (or `lhs < rhs`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    #[serde(rename = "where")]
    pub location: Location,
    pub check: String,
    #[serde(serialize_with = "serialize_num")]
    pub lhs: f64,
    #[serde(serialize_with = "serialize_num")]
    pub rhs: f64,
    #[serde(serialize_with = "serialize_num")]
    pub gap: f64,
}

/// A named quantity measured during a scan (final gaps, attainment index).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Observation {
    pub name: String,
    #[serde(serialize_with = "serialize_num")]
    pub value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    /// `lhs ≤ rhs`
    Le,
    /// `lhs < rhs`
    Lt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    /// The violation lies inside the numerical error band.
    Inconclusive,
    Fails,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanReport {
    pub suite: String,
    pub grid: String,
    pub points_checked: usize,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub checks: usize,
    #[serde(skip)]
    pub inconclusive: usize,
    /// Largest `lhs − rhs` among conclusive checks; `-inf` when none.
    #[serde(serialize_with = "serialize_num_opt_inf")]
    pub max_violation: f64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub observations: Vec<Observation>,
}

fn serialize_num_opt_inf<S: serde::Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
    let value = v.is_finite().then_some(*v);
    serialize_num_opt(&value, s)
}

impl ScanReport {
    pub fn new(suite: impl Into<String>, grid: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            grid: grid.into(),
            points_checked: 0,
            failures: Vec::new(),
            checks: 0,
            inconclusive: 0,
            max_violation: f64::NEG_INFINITY,
            passed: true,
            observations: Vec::new(),
        }
    }

    pub fn add_points(&mut self, count: usize) {
        self.points_checked += count;
    }

    pub fn observe(&mut self, name: impl Into<String>, value: f64) {
        self.observations.push(Observation {
            name: name.into(),
            value,
        });
    }

    /// Records the claim `lhs ≤ rhs` (or `<`). `violation` is `lhs − rhs`
    /// evaluated with its error bound, which sets the inconclusive band.
    pub fn record(
        &mut self,
        location: Location,
        check: &str,
        lhs: f64,
        rhs: f64,
        violation: EvalResult,
        claim: Claim,
    ) -> Outcome {
        self.checks += 1;
        let v = violation.value;
        let band = violation.abs_error_bound;
        let outcome = if v.is_nan() || v > band {
            Outcome::Fails
        } else if v < -band {
            Outcome::Holds
        } else if band == 0.0 {
            match claim {
                Claim::Le => Outcome::Holds,
                Claim::Lt => Outcome::Fails,
            }
        } else {
            Outcome::Inconclusive
        };
        match outcome {
            Outcome::Inconclusive => self.inconclusive += 1,
            _ => {
                if v > self.max_violation || v.is_nan() {
                    self.max_violation = v;
                }
            }
        }
        if outcome == Outcome::Fails {
            self.passed = false;
            self.failures.push(Failure {
                location,
                check: check.to_string(),
                lhs,
                rhs,
                gap: v,
            });
        }
        outcome
    }

    /// Shorthand for claims whose violation is just `lhs − rhs` with a fixed band.
    pub fn record_plain(
        &mut self,
        location: Location,
        check: &str,
        lhs: f64,
        rhs: f64,
        band: f64,
        claim: Claim,
    ) -> Outcome {
        self.record(
            location,
            check,
            lhs,
            rhs,
            EvalResult::new(lhs - rhs, band),
            claim,
        )
    }

    pub fn merge(&mut self, other: ScanReport) {
        self.points_checked += other.points_checked;
        self.checks += other.checks;
        self.inconclusive += other.inconclusive;
        if other.max_violation > self.max_violation || other.max_violation.is_nan() {
            self.max_violation = other.max_violation;
        }
        self.passed &= other.passed;
        self.failures.extend(other.failures);
        self.observations.extend(other.observations);
    }
}
