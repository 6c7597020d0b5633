use std::ops::RangeInclusive;

use rayon::prelude::*;

use super::instance::Instance;
use super::{Status, VerificationReport};
use crate::closedforms::Family;
use crate::error::{Error, Result};

/// Reports of a scan, ordered by `(n, family, kind)`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ScanReport {
    pub reports: Vec<VerificationReport>,
}

impl ScanReport {
    pub fn count(&self, status: Status) -> usize {
        self.reports.iter().filter(|r| r.status == status).count()
    }

    pub fn has_failures(&self) -> bool {
        self.reports.iter().any(VerificationReport::is_failure)
    }
}

fn scan_one(n: u64, families: &[Family], tol: f64) -> Result<Vec<VerificationReport>> {
    let mut inst = Instance::new(n)?;
    let mut out = Vec::new();
    for &family in families {
        out.push(inst.check_spectrum(family, tol)?);
        out.push(inst.check_energy(family, tol)?);
        if family.has_bounds() && n % 2 == 1 {
            out.push(inst.check_bounds(family, tol)?);
        }
    }
    if n >= 3 {
        out.extend(inst.check_identities(tol)?);
        out.push(inst.chain_report()?);
    }
    Ok(out)
}

/// Runs every applicable check for each `n` in `range`. `jobs` caps the
/// worker count; `None` uses the rayon default.
pub fn scan(range: RangeInclusive<u64>, families: &[Family], tol: f64, jobs: Option<usize>) -> Result<ScanReport> {
    if range.is_empty() {
        return Err(Error::OutOfRange {
            what: "n-from",
            value: *range.start() as i64,
            expected: "n-from <= n-to",
        });
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Inconsistent(format!("thread pool: {e}")))?;
    let per_n: Vec<Vec<VerificationReport>> = pool.install(|| {
        range
            .into_par_iter()
            .map(|n| scan_one(n, families, tol))
            .collect::<Result<_>>()
    })?;
    let mut reports: Vec<_> = per_n.into_iter().flatten().collect();
    reports.sort_by(|a, b| (a.n, &a.family, a.kind).cmp(&(b.n, &b.family, b.kind)));
    Ok(ScanReport { reports })
}
