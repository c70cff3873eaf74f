//! Independent checkers for every step of the construction, and the rounding
//! experiment for random point sets.
//!
//! Checks are collected into a [`VerificationReport`] that prints one
//! `check=<name> status=<pass|fail|report> measured=<v> bound=<v>` line per
//! check.

mod distinct;
mod frame;
mod qp;
mod rounding;
mod stats;

use std::fmt;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::chirotope::{ChirotopeError, DegeneracyWitness};
use crate::construction::ConstructionError;
use crate::geom::Rational;

pub use distinct::{find_frame_witness, find_order_type_witness, verify_distinct, verify_point_set, Witness};
pub use frame::{region_vertices, verify_frame, verify_frame_with};
pub use qp::verify_qp;
pub use rounding::{grid_extent, rounding_experiment, RoundingOutcome, RoundingParams, DEFAULT_FRAC_BITS};
pub use stats::{kill_stats, line_lattice_in_box, region_stats, KillSummary, RegionSummary};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error("set {index} is degenerate: labels {witness} are collinear")]
    Degenerate { index: usize, witness: DegeneracyWitness },
    #[error("point sets have different sizes: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("chirotopes are identical")]
    Identical,
    #[error(transparent)]
    Chirotope(#[from] ChirotopeError),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// Measured and printed, never fails the report.
    Report,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Report => "report",
        })
    }
}

/// An exact measured or bound value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Measure {
    Int(i128),
    Ratio(BigRational),
}

impl From<i128> for Measure {
    fn from(v: i128) -> Self {
        Measure::Int(v)
    }
}

impl From<usize> for Measure {
    fn from(v: usize) -> Self {
        Measure::Int(v as i128)
    }
}

impl From<u64> for Measure {
    fn from(v: u64) -> Self {
        Measure::Int(v as i128)
    }
}

impl From<i64> for Measure {
    fn from(v: i64) -> Self {
        Measure::Int(v as i128)
    }
}

impl From<Rational> for Measure {
    fn from(v: Rational) -> Self {
        if v.is_integer() {
            Measure::Int(v.to_integer())
        } else {
            Measure::Ratio(BigRational::new((*v.numer()).into(), (*v.denom()).into()))
        }
    }
}

impl From<BigRational> for Measure {
    fn from(v: BigRational) -> Self {
        match v.is_integer().then(|| v.to_integer().to_i128()).flatten() {
            Some(i) => Measure::Int(i),
            None => Measure::Ratio(v),
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Measure::Int(v) => write!(f, "{v}"),
            Measure::Ratio(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub measured: Measure,
    pub bound: Measure,
    pub detail: Option<String>,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "check={} status={} measured={} bound={}", self.name, self.status, self.measured, self.bound)?;
        if let Some(d) = &self.detail {
            write!(f, " {d}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(
        &mut self,
        name: &str,
        status: Status,
        measured: impl Into<Measure>,
        bound: impl Into<Measure>,
    ) -> &mut Check {
        debug_assert!(self.get(name).is_none(), "duplicate check {name}");
        self.checks.push(Check {
            name: name.to_string(),
            status,
            measured: measured.into(),
            bound: bound.into(),
            detail: None,
        });
        self.checks.last_mut().unwrap()
    }

    /// A hard check that passes when `ok`.
    pub fn hard(&mut self, name: &str, ok: bool, measured: impl Into<Measure>, bound: impl Into<Measure>) -> &mut Check {
        self.push(name, if ok { Status::Pass } else { Status::Fail }, measured, bound)
    }

    /// Violation-count check: passes when `violations == 0`.
    pub fn count(&mut self, name: &str, violations: usize) -> &mut Check {
        self.hard(name, violations == 0, violations, 0usize)
    }

    pub fn report(&mut self, name: &str, measured: impl Into<Measure>, bound: impl Into<Measure>) -> &mut Check {
        self.push(name, Status::Report, measured, bound)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// True iff no hard check failed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }
}

impl Check {
    pub fn with_detail(&mut self, detail: impl Into<String>) -> &mut Self {
        self.detail = Some(detail.into());
        self
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}
