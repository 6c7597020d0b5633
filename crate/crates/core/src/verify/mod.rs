//! Cross-checks of closed forms, bounds and identities against the dense
//! oracle, emitted as flat [`VerificationReport`] records.

mod chain;
mod checks;
mod instance;
mod scan;

use std::fmt;

use crate::closedforms::Family;
use crate::error::Result;

pub use chain::ChainEvaluation;
pub use instance::Instance;
pub use scan::{scan, ScanReport};

/// Tolerance used where a check takes none.
pub const DEFAULT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckKind {
    Spectrum,
    Energy,
    Bounds,
    Identity,
    Chain,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Spectrum => "spectrum",
            CheckKind::Energy => "energy",
            CheckKind::Bounds => "bounds",
            CheckKind::Identity => "identity",
            CheckKind::Chain => "chain",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
    /// A known discrepancy in a stated result; does not fail a run.
    Caveat,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not-applicable",
            Status::Caveat => "caveat",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One check at one `n`. `family` names the spectral family, or the identity
/// for [`CheckKind::Identity`] records.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub family: String,
    pub n: u64,
    pub kind: CheckKind,
    pub status: Status,
    pub max_deviation: f64,
    pub details: String,
}

impl VerificationReport {
    pub(crate) fn not_applicable(family: &str, n: u64, kind: CheckKind, details: impl Into<String>) -> Self {
        Self {
            family: family.to_owned(),
            n,
            kind,
            status: Status::NotApplicable,
            max_deviation: 0.0,
            details: details.into(),
        }
    }

    /// Pass iff `deviation <= tol`.
    pub(crate) fn graded(
        family: &str,
        n: u64,
        kind: CheckKind,
        deviation: f64,
        tol: f64,
        details: impl Into<String>,
    ) -> Self {
        Self {
            family: family.to_owned(),
            n,
            kind,
            status: if deviation <= tol { Status::Pass } else { Status::Fail },
            max_deviation: deviation,
            details: details.into(),
        }
    }

    pub fn is_failure(&self) -> bool {
        self.status == Status::Fail
    }
}

pub fn verify_spectrum(family: Family, n: u64, tol: f64) -> Result<VerificationReport> {
    Instance::new(n)?.check_spectrum(family, tol)
}

pub fn verify_bounds(family: Family, n: u64, tol: f64) -> Result<VerificationReport> {
    Instance::new(n)?.check_bounds(family, tol)
}

pub fn verify_energy(family: Family, n: u64, tol: f64) -> Result<VerificationReport> {
    Instance::new(n)?.check_energy(family, tol)
}

pub fn verify_identities(n: u64) -> Result<Vec<VerificationReport>> {
    Instance::new(n)?.check_identities(DEFAULT_TOL)
}

/// Always `pass`; violations are recorded in the details.
pub fn conclusion_chain_report(n: u64) -> Result<VerificationReport> {
    Instance::new(n)?.chain_report()
}
