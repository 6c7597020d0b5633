use super::instance::Instance;
use super::{CheckKind, Status, VerificationReport};
use crate::closedforms::Family;
use crate::error::Result;

/// The eigenvalue chain `2λ_k^D < μ_k^+ < ∂_k^Q < ∂_k^L` over non-principal
/// ranks, and `∂_0^L < μ_0^+ < λ_0^D < ∂_0^Q` at the principal index.
///
/// The principal eigenvalue is the largest one, except for the distance
/// Laplacian where it is the zero. Remaining eigenvalues are ranked
/// largest first.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainEvaluation {
    pub n: u64,
    /// `[∂_0^L, μ_0^+, λ_0^D, ∂_0^Q]`.
    pub principal: [f64; 4],
    pub principal_holds: bool,
    /// Per non-principal rank: `[2λ_k^D, μ_k^+, ∂_k^Q, ∂_k^L]`.
    pub ranks: Vec<[f64; 4]>,
    /// 1-based ranks where the chain fails.
    pub violations: Vec<usize>,
    pub sources: [&'static str; 4],
}

fn increasing(v: &[f64]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

/// Splits off the principal eigenvalue; the rest come back largest first.
fn split(values: Vec<f64>, principal_is_min: bool) -> (f64, Vec<f64>) {
    let mut desc = values;
    desc.sort_unstable_by(|a, b| b.total_cmp(a));
    if principal_is_min {
        let p = desc.pop().unwrap_or(0.0);
        (p, desc)
    } else {
        let p = desc.remove(0);
        (p, desc)
    }
}

impl Instance {
    pub fn evaluate_chain(&mut self) -> Result<ChainEvaluation> {
        let (distance, s0) = self.best_spectrum(Family::Distance)?;
        let (signless, s1) = self.best_spectrum(Family::Signless)?;
        let (dq, s2) = self.best_spectrum(Family::DistanceSignless)?;
        let (dl, s3) = self.best_spectrum(Family::DistanceLaplacian)?;

        let (d0, d) = split(distance.values(), false);
        let (m0, m) = split(signless.values(), false);
        let (q0, q) = split(dq.values(), false);
        let (l0, l) = split(dl.values(), true);

        let principal = [l0, m0, d0, q0];
        let ranks: Vec<[f64; 4]> = (0..d.len()).map(|k| [2.0 * d[k], m[k], q[k], l[k]]).collect();
        let violations = ranks
            .iter()
            .enumerate()
            .filter(|(_, r)| !increasing(&r[..]))
            .map(|(k, _)| k + 1)
            .collect();
        Ok(ChainEvaluation {
            n: self.n(),
            principal,
            principal_holds: increasing(&principal),
            ranks,
            violations,
            sources: [s0, s1, s2, s3],
        })
    }

    pub fn chain_report(&mut self) -> Result<VerificationReport> {
        let c = self.evaluate_chain()?;
        let [l0, m0, d0, q0] = c.principal;
        let principal = if c.principal_holds { "principal holds" } else { "principal violated" };
        let ranks = if c.violations.is_empty() {
            format!("all {} non-principal ranks hold", c.ranks.len())
        } else {
            format!(
                "non-principal ranks violated: {:?} of {}",
                c.violations,
                c.ranks.len()
            )
        };
        Ok(VerificationReport {
            family: "conclusion-chain".into(),
            n: c.n,
            kind: CheckKind::Chain,
            status: Status::Pass,
            max_deviation: 0.0,
            details: format!(
                "{principal} ({l0:.6}, {m0:.6}, {d0:.6}, {q0:.6}); {ranks}; spectra from {}",
                c.sources.join("/")
            ),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine() {
        let c = Instance::new(9).unwrap().evaluate_chain().unwrap();
        assert!(!c.principal_holds);
        assert!((c.principal[1] - (13.0 + 73f64.sqrt()) / 2.0).abs() < 1e-12);
        assert!((c.principal[2] - (12.0 + 88f64.sqrt()) / 2.0).abs() < 1e-12);
        assert!(c.violations.is_empty(), "{:?}", c.violations);
        let top = c.ranks[0];
        assert!((top[0] - (12.0 - 88f64.sqrt())).abs() < 1e-12);
        assert_eq!((top[1], top[3]), (7.0, 15.0));
    }

    #[test]
    fn even_uses_closed_forms() {
        let c = Instance::new(8).unwrap().evaluate_chain().unwrap();
        assert_eq!(c.sources, ["closed form"; 4]);
        assert_eq!(c.ranks.len(), 7);
    }
}
