//! Odd-n eigenvalue and energy bounds.
//!
//! Each bounded matrix splits as a left circulant (eigenvalues from
//! Ramanujan sums) plus a two-valued diagonal. Weyl's inequality with
//! `j = 0` pins the i-th largest eigenvalue to
//! `[λ_i(circulant) + d_min, λ_i(circulant) + d_max]`, so the intervals are
//! paired with eigenvalues by rank, not by circulant index.

use super::applicability::NumberProfile;
use super::Family;
use crate::error::{Error, Result};
use crate::numtheory::ramanujan_row;
use crate::scalar::Real;

/// One closed interval per eigenvalue rank, largest first.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundSet<T> {
    pub family: Family,
    pub intervals: Vec<(T, T)>,
}

impl<T: Real> BoundSet<T> {
    /// Common interval width (`d_max - d_min`).
    pub fn width(&self) -> Option<T> {
        self.intervals.first().map(|&(lo, hi)| hi - lo)
    }

    /// Largest violation of rank-wise containment for `eigenvalues` sorted
    /// descending; zero when every value lies inside its interval.
    pub fn max_violation(&self, eigenvalues_desc: &[T]) -> T {
        self.intervals
            .iter()
            .zip(eigenvalues_desc)
            .fold(T::zero(), |acc, (&(lo, hi), &x)| acc.max(lo - x).max(x - hi))
    }
}

fn require_odd(profile: &NumberProfile) -> Result<()> {
    if profile.is_even() {
        return Err(Error::OutOfRange {
            what: "n",
            value: profile.n as i64,
            expected: "odd n >= 3",
        });
    }
    Ok(())
}

/// `(principal circulant eigenvalue, d_min, d_max)` for the split of each family.
fn split(family: Family, profile: &NumberProfile) -> Result<(i64, i64, i64)> {
    let (n, phi) = (profile.n as i64, profile.phi as i64);
    Ok(match family {
        Family::Signless => (phi, phi - 2, phi),
        Family::SignlessComplement => (n - phi, n - phi - 2, n - phi),
        Family::Distance => (2 * n - phi, -2, -1),
        Family::DistanceSignless => (2 * n - phi, 2 * n - phi - 4, 2 * n - phi - 2),
        _ => {
            return Err(Error::NoClosedForm {
                family: family.name(),
                n: profile.n,
            })
        }
    })
}

/// Rank-ordered eigenvalue intervals for odd `n`.
pub fn cf_bounds<T: Real>(family: Family, n: u64) -> Result<BoundSet<T>> {
    let profile = NumberProfile::new(n)?;
    require_odd(&profile)?;
    let (principal, d_min, d_max) = split(family, &profile)?;
    let c = ramanujan_row(n)?;
    // Left-circulant rule: λ_0, then ±|λ_k| for k = 1..(n-1)/2. For all four
    // rows here the non-principal λ_k are ±c(k, n).
    let mut centers: Vec<i64> = std::iter::once(principal)
        .chain(c[1..=(n as usize - 1) / 2].iter().flat_map(|&ck| [ck.abs(), -ck.abs()]))
        .collect();
    centers.sort_unstable_by(|a, b| b.cmp(a));
    Ok(BoundSet {
        family,
        intervals: centers
            .into_iter()
            .map(|x| (T::from_int(x + d_min), T::from_int(x + d_max)))
            .collect(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyBounds<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: Real> EnergyBounds<T> {
    pub fn violation(&self, x: T) -> T {
        T::zero().max(self.lo - x).max(x - self.hi)
    }
}

/// Energy bounds for odd `n`: signless and complement split by
/// squarefreeness, distance uniform.
pub fn cf_energy_bounds<T: Real>(family: Family, n: u64) -> Result<EnergyBounds<T>> {
    let profile = NumberProfile::new(n)?;
    require_odd(&profile)?;
    let (ni, phi, s) = (n as i64, profile.phi as i64, profile.s as i64);
    let two_r = 2i64.pow(profile.r as u32);
    let int = |v: i64| T::from_int(v);
    let phi_t = int(phi);
    let frac = |num: i64| T::ratio(num, ni);
    let (lo, hi) = match (family, profile.is_squarefree()) {
        (Family::Signless, true) => (
            phi_t * (int(two_r + 1) + frac(1)) - int(ni + 1) - frac(phi * phi),
            phi_t * (int(two_r) + frac(1)) + int(ni - 1),
        ),
        (Family::Signless, false) => (
            phi_t * frac(ni * (two_r + 1) - s + 1) - int(s + 1),
            phi_t * frac(ni * (two_r - 1) + s + 1) + int(2 * ni - s - 1),
        ),
        (Family::SignlessComplement, true) => {
            let base = phi_t * (int(two_r - 2) - frac(1));
            (base + frac(phi * phi), base + int(2 * ni))
        }
        (Family::SignlessComplement, false) => (
            phi_t * frac(ni * (two_r - 3) + s - 1) + int(2 * ni - 2 * s),
            phi_t * frac(ni * (two_r - 1) - s - 1) + int(2 * ni),
        ),
        (Family::Distance, _) => {
            let base = int((two_r - 2) * phi);
            (base + T::ratio(4 * ni - s - 3, 2), base + T::ratio(6 * ni - s - 3, 2))
        }
        _ => {
            return Err(Error::NoClosedForm {
                family: family.name(),
                n,
            })
        }
    };
    Ok(EnergyBounds { lo, hi })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn principal_intervals() {
        let b = cf_bounds::<f64>(Family::Signless, 15).unwrap();
        assert_eq!(b.intervals[0], (14.0, 16.0));
        assert_eq!(b.intervals.len(), 15);
        let d = cf_bounds::<f64>(Family::Distance, 9).unwrap();
        assert_eq!(d.intervals[0], (10.0, 11.0));
        assert_eq!(d.width(), Some(1.0));
        let c = cf_bounds::<f64>(Family::SignlessComplement, 9).unwrap();
        assert_eq!(c.intervals[0], (4.0, 6.0));
        let q = cf_bounds::<f64>(Family::DistanceSignless, 9).unwrap();
        assert_eq!(q.intervals[0], (20.0, 22.0));
    }

    #[test]
    fn rejects_even_and_unbounded() {
        assert!(cf_bounds::<f64>(Family::Signless, 10).is_err());
        assert!(cf_bounds::<f64>(Family::Laplacian, 9).is_err());
        assert!(cf_energy_bounds::<f64>(Family::Distance, 12).is_err());
        assert!(cf_energy_bounds::<f64>(Family::DistanceSignless, 9).is_err());
    }

    #[test]
    fn distance_energy_fifteen() {
        let e = cf_energy_bounds::<f64>(Family::Distance, 15).unwrap();
        assert_eq!((e.lo, e.hi), (37.0, 52.0));
    }

    #[test]
    fn signless_energy_bounds() {
        // Squarefree, r = 2, φ = 8.
        let e = cf_energy_bounds::<f64>(Family::Signless, 15).unwrap();
        assert!((e.lo - (8.0 * (5.0 + 1.0 / 15.0) - 16.0 - 64.0 / 15.0)).abs() < 1e-12);
        assert!((e.hi - (8.0 * (4.0 + 1.0 / 15.0) + 14.0)).abs() < 1e-12);
        // Non-squarefree 45: s = 15, r = 2, φ = 24.
        let e = cf_energy_bounds::<f64>(Family::Signless, 45).unwrap();
        assert!((e.lo - (24.0 * (45.0 * 5.0 - 14.0) / 45.0 - 16.0)).abs() < 1e-12);
        assert!((e.hi - (24.0 * (45.0 * 3.0 + 16.0) / 45.0 + 74.0)).abs() < 1e-12);
    }

    #[test]
    fn prime_power_spectrum_inside_bounds() {
        use crate::closedforms::cf_spectrum;
        for n in [3, 5, 7, 9, 25, 27] {
            for family in Family::BOUNDED {
                let b = cf_bounds::<f64>(family, n).unwrap();
                let s = cf_spectrum::<f64>(family, n).unwrap();
                assert!(b.max_violation(&s.descending()) < 1e-9, "{family} n={n}");
            }
        }
    }
}
