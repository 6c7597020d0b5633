//! Dispatch over the case split (parity, prime power, squarefree) that
//! decides which closed form applies to a given `(family, n)`.

use super::Family;
use crate::error::{Error, Result};
use crate::numtheory::{euler_phi, factorize, Factorization};

/// Arithmetic class of `n` as used by the case split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NumberClass {
    Two,
    /// `2^m`, `m >= 2`.
    PowerOfTwo { m: u32 },
    EvenWithOddPrime,
    OddPrimePower { p: u64, m: u32 },
    /// Odd with at least two distinct primes.
    OddComposite,
}

/// Number-theoretic data of `n` shared by every formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberProfile {
    pub n: u64,
    pub phi: u64,
    /// Largest squarefree divisor.
    pub s: u64,
    /// Number of distinct primes.
    pub r: usize,
    pub factorization: Factorization,
    pub class: NumberClass,
}

impl NumberProfile {
    pub fn new(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfRange {
                what: "n",
                value: n as i64,
                expected: "n >= 2",
            });
        }
        if n > u32::MAX as u64 {
            return Err(Error::OutOfRange {
                what: "n",
                value: n as i64,
                expected: "n < 2^32",
            });
        }
        let factorization = factorize(n)?;
        let class = match factorization.as_prime_power() {
            Some((2, 1)) => NumberClass::Two,
            Some((2, m)) => NumberClass::PowerOfTwo { m },
            Some((p, m)) => NumberClass::OddPrimePower { p, m },
            None if n.is_multiple_of(2) => NumberClass::EvenWithOddPrime,
            None => NumberClass::OddComposite,
        };
        Ok(Self {
            n,
            phi: euler_phi(n)?,
            s: factorization.radical(),
            r: factorization.distinct_primes(),
            factorization,
            class,
        })
    }

    pub fn is_even(&self) -> bool {
        self.n.is_multiple_of(2)
    }

    pub fn is_squarefree(&self) -> bool {
        self.s == self.n
    }

    pub fn prime_power(&self) -> Option<(u64, u32)> {
        match self.class {
            NumberClass::OddPrimePower { p, m } => Some((p, m)),
            _ => None,
        }
    }

    /// `2m/n` of G_n as an exact fraction `(numerator, n)`.
    pub fn average_degree(&self) -> (i64, i64) {
        let (n, phi) = (self.n as i64, self.phi as i64);
        if self.is_even() {
            (n * phi, n)
        } else {
            (n * phi - phi, n)
        }
    }
}

/// Which closed-form branch a family selects for a given class of `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// Exact spectrum (and possibly energy) available.
    Exact,
    /// Only eigenvalue and energy bounds.
    BoundsOnly,
    /// Nothing stated for this `(family, n)`.
    None,
}

/// Summary of what is known for `(family, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaApplicability {
    pub family: Family,
    pub n: u64,
    pub even: bool,
    pub prime_power: bool,
    pub squarefree: bool,
    pub spectrum: Branch,
    pub energy_exact: bool,
    pub eigenvalue_bounds: bool,
    pub energy_bounds: bool,
    pub caveats: Vec<&'static str>,
}

pub(crate) fn exact_spectrum_exists(family: Family, profile: &NumberProfile) -> bool {
    use NumberClass::*;
    match family {
        Family::Signless | Family::SignlessComplement => !matches!(profile.class, OddComposite),
        Family::Laplacian => true,
        Family::Distance | Family::DistanceSignless => {
            profile.n > 2 && !matches!(profile.class, OddComposite)
        }
        Family::DistanceLaplacian => profile.n > 2,
    }
}

pub(crate) fn exact_energy_exists(family: Family, profile: &NumberProfile) -> bool {
    match family {
        Family::Laplacian | Family::DistanceSignless => false,
        Family::DistanceLaplacian => profile.n > 2,
        _ => exact_spectrum_exists(family, profile),
    }
}

pub fn applicability(family: Family, n: u64) -> Result<FormulaApplicability> {
    let profile = NumberProfile::new(n)?;
    let odd = !profile.is_even() && n >= 3;
    let exact = exact_spectrum_exists(family, &profile);
    let eigenvalue_bounds = odd && family.has_bounds();
    let energy_bounds = odd && matches!(family, Family::Signless | Family::SignlessComplement | Family::Distance);
    let mut caveats = Vec::new();
    if family == Family::Distance && matches!(profile.class, NumberClass::OddPrimePower { m: 1, .. }) {
        caveats.push("distance-energy corollary does not hold for m = 1; energy taken from the spectrum");
    }
    if family == Family::Distance && odd && !profile.is_squarefree() {
        caveats.push("distance-energy upper bound can be exceeded for odd non-squarefree n");
    }
    Ok(FormulaApplicability {
        family,
        n,
        even: profile.is_even(),
        prime_power: profile.factorization.as_prime_power().is_some(),
        squarefree: profile.is_squarefree(),
        spectrum: match (exact, eigenvalue_bounds) {
            (true, _) => Branch::Exact,
            (false, true) => Branch::BoundsOnly,
            (false, false) => Branch::None,
        },
        energy_exact: exact_energy_exists(family, &profile),
        eigenvalue_bounds,
        energy_bounds,
        caveats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes() {
        assert_eq!(NumberProfile::new(2).unwrap().class, NumberClass::Two);
        assert_eq!(NumberProfile::new(16).unwrap().class, NumberClass::PowerOfTwo { m: 4 });
        assert_eq!(NumberProfile::new(12).unwrap().class, NumberClass::EvenWithOddPrime);
        assert_eq!(NumberProfile::new(27).unwrap().class, NumberClass::OddPrimePower { p: 3, m: 3 });
        assert_eq!(NumberProfile::new(45).unwrap().class, NumberClass::OddComposite);
        assert!(NumberProfile::new(1).is_err());
    }

    #[test]
    fn dispatch() {
        let a = applicability(Family::Signless, 15).unwrap();
        assert_eq!(a.spectrum, Branch::BoundsOnly);
        assert!(a.energy_bounds && !a.energy_exact);
        let b = applicability(Family::DistanceLaplacian, 15).unwrap();
        assert_eq!(b.spectrum, Branch::Exact);
        assert!(b.energy_exact);
        let c = applicability(Family::Distance, 5).unwrap();
        assert_eq!(c.caveats.len(), 1);
        assert_eq!(applicability(Family::Distance, 2).unwrap().spectrum, Branch::None);
        assert_eq!(applicability(Family::Laplacian, 15).unwrap().spectrum, Branch::Exact);
        assert!(!applicability(Family::Laplacian, 15).unwrap().energy_exact);
    }

    #[test]
    fn average_degree_counts_semiregular() {
        assert_eq!(NumberProfile::new(9).unwrap().average_degree(), (48, 9));
        assert_eq!(NumberProfile::new(6).unwrap().average_degree(), (12, 6));
    }
}
