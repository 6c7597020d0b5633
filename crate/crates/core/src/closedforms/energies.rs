use super::applicability::{exact_energy_exists, NumberClass, NumberProfile};
use super::spectra::cf_spectrum;
use super::Family;
use crate::error::{Error, Result};
use crate::linalg::{energy, EnergyValue};
use crate::scalar::Real;

/// Set when the stated closed form is known not to match the spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyCaveat<T> {
    /// What the stated formula evaluates to.
    pub formula_value: T,
    pub note: &'static str,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormEnergy<T> {
    pub energy: EnergyValue<T>,
    pub caveat: Option<EnergyCaveat<T>>,
}

/// Mean transmission of G_n, `n > 2`.
pub fn mean_transmission<T: Real>(n: u64) -> Result<T> {
    let profile = NumberProfile::new(n)?;
    mean_transmission_of(&profile)
}

fn mean_transmission_of<T: Real>(profile: &NumberProfile) -> Result<T> {
    let (n, phi) = (profile.n as i64, profile.phi as i64);
    match profile.class {
        NumberClass::Two => Err(Error::OutOfRange {
            what: "n",
            value: 2,
            expected: "n > 2",
        }),
        NumberClass::PowerOfTwo { .. } => Ok(T::from_int(2 * n - 2 - phi)),
        NumberClass::EvenWithOddPrime => Ok(T::from_int(5 * n / 2 - 2 - 2 * phi)),
        _ => Ok(T::from_int(2 * n - 2 - phi) + T::ratio(phi, n)),
    }
}

/// Energy of `family` on G_n from its closed form, with the centering
/// constant that family uses.
pub fn cf_energy<T: Real>(family: Family, n: u64) -> Result<ClosedFormEnergy<T>> {
    let profile = NumberProfile::new(n)?;
    if !exact_energy_exists(family, &profile) {
        return Err(Error::NoClosedForm {
            family: family.name(),
            n,
        });
    }
    let ni = n as i64;
    let phi = profile.phi as i64;
    let r = profile.r as u32;
    let s = profile.s as i64;
    let int = |v: i64| T::from_int(v);
    let (deg_num, deg_den) = profile.average_degree();

    let exact = |value: T, shift: T| ClosedFormEnergy {
        energy: EnergyValue { value, shift },
        caveat: None,
    };

    Ok(match family {
        Family::Signless => {
            let shift = T::ratio(deg_num, deg_den);
            let value = match profile.class {
                NumberClass::OddPrimePower { p, m } => {
                    let (p, pm) = (p as i64, p.pow(m) as i64);
                    let radical = int((pm - 2) * (pm - 2) + 8 * pm / p).sqrt();
                    if m == 1 {
                        int(p - 2) - T::ratio(2, p) + radical
                    } else {
                        int(2 * pm - pm / p - 2 * pm / (p * p) - p - 2) + T::ratio(1, p) + radical
                    }
                }
                _ => int(2i64.pow(r) * phi),
            };
            exact(value, shift)
        }
        Family::SignlessComplement => {
            let shift = int(ni - 1) - T::ratio(deg_num, deg_den);
            let value = match profile.class {
                NumberClass::OddPrimePower { p, m } => {
                    let (p, pm) = (p as i64, p.pow(m) as i64);
                    if m == 1 {
                        int(p) - T::ratio(1, p)
                    } else {
                        int(pm + 3 * pm / p - 2 * pm / (p * p) - 5) + T::ratio(3, p)
                    }
                }
                _ => {
                    let prod: i64 = profile.factorization.primes().map(|q| 2 - q as i64).product();
                    int(2 * ni - 2 + (2i64.pow(r) - 2) * phi - s + prod)
                }
            };
            exact(value, shift)
        }
        Family::Distance => distance_energy(&profile)?,
        Family::DistanceLaplacian => {
            let shift = mean_transmission_of::<T>(&profile)?;
            if profile.is_even() {
                // Transmission regular: the distance Laplacian energy is the distance energy.
                let de = distance_energy::<T>(&profile)?;
                exact(de.energy.value, shift)
            } else {
                let tail = int(2 * ni - 2) - T::ratio((ni - 1) * phi, ni);
                let two_minus = int(2) - T::ratio(phi, ni);
                let value = if profile.is_squarefree() {
                    int(phi) * two_minus + int((2i64.pow(r) - 2) * phi) + tail
                } else {
                    int(ni - s) * two_minus + int((2i64.pow(r) - 1) * phi) + tail
                };
                exact(value, shift)
            }
        }
        Family::Laplacian | Family::DistanceSignless => unreachable!("filtered by exact_energy_exists"),
    })
}

fn distance_energy<T: Real>(profile: &NumberProfile) -> Result<ClosedFormEnergy<T>> {
    let (ni, phi, s, r) = (profile.n as i64, profile.phi as i64, profile.s as i64, profile.r as u32);
    let int = |v: i64| T::from_int(v);
    let value = match profile.class {
        NumberClass::PowerOfTwo { .. } => int(4 * ni - 8),
        NumberClass::EvenWithOddPrime => {
            T::ratio(9 * ni - 4 * s - 4, 2)
                + int(phi * (2i64.pow(r + 1) - 6))
                + (int(2 * phi - 2) - T::ratio(ni, 2)).abs()
        }
        NumberClass::OddPrimePower { p, m } => {
            let (p, pm) = (p as i64, p.pow(m) as i64);
            let formula = int(3 * pm + pm / p - p - 3);
            if m == 1 {
                let spectrum = cf_spectrum::<T>(Family::Distance, profile.n)?;
                return Ok(ClosedFormEnergy {
                    energy: energy(&spectrum, T::zero()),
                    caveat: Some(EnergyCaveat {
                        formula_value: formula,
                        note: "corollary 3p^m + p^(m-1) - p - 3 assumes (x2 - y2)/2 >= 0, false for m = 1",
                    }),
                });
            }
            formula
        }
        _ => {
            return Err(Error::NoClosedForm {
                family: Family::Distance.name(),
                n: profile.n,
            })
        }
    };
    Ok(ClosedFormEnergy {
        energy: EnergyValue {
            value,
            shift: T::zero(),
        },
        caveat: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn value(family: Family, n: u64) -> f64 {
        cf_energy::<f64>(family, n).unwrap().energy.value
    }

    #[test]
    fn examples() {
        assert_eq!(value(Family::Signless, 6), 8.0);
        assert!((value(Family::Signless, 5) - (2.6 + 17f64.sqrt())).abs() < 1e-12);
        assert!((value(Family::DistanceLaplacian, 9) - 74.0 / 3.0).abs() < 1e-12);
        assert!((value(Family::DistanceLaplacian, 15) - (44.0 + 64.0 / 15.0)).abs() < 1e-12);
        assert_eq!(value(Family::Distance, 9), 24.0);
        assert_eq!(value(Family::Distance, 25), 72.0);
        assert!((value(Family::SignlessComplement, 5) - 4.8).abs() < 1e-12);
        assert!((value(Family::SignlessComplement, 9) - 12.0).abs() < 1e-12);
        assert_eq!(value(Family::Distance, 8), 24.0);
        assert_eq!(value(Family::DistanceLaplacian, 8), 24.0);
    }

    #[test]
    fn m_one_distance_caveat() {
        let e = cf_energy::<f64>(Family::Distance, 5).unwrap();
        let caveat = e.caveat.expect("caveat flagged");
        assert_eq!(caveat.formula_value, 8.0);
        assert!((e.energy.value - (4.0 + 4.0 * 2f64.sqrt())).abs() < 1e-12);
        assert!(cf_energy::<f64>(Family::Distance, 25).unwrap().caveat.is_none());
    }

    #[test]
    fn shifts() {
        assert_eq!(cf_energy::<f64>(Family::Signless, 6).unwrap().energy.shift, 2.0);
        assert_eq!(cf_energy::<f64>(Family::Signless, 5).unwrap().energy.shift, 16.0 / 5.0);
        assert_eq!(mean_transmission::<f64>(9).unwrap(), 96.0 / 9.0);
        assert_eq!(mean_transmission::<f64>(12).unwrap(), 20.0);
        assert_eq!(mean_transmission::<f64>(8).unwrap(), 10.0);
        assert!(mean_transmission::<f64>(2).is_err());
    }

    #[test]
    fn unavailable() {
        assert!(matches!(
            cf_energy::<f64>(Family::Signless, 15),
            Err(Error::NoClosedForm { .. })
        ));
        assert!(cf_energy::<f64>(Family::Laplacian, 9).is_err());
        assert!(cf_energy::<f64>(Family::DistanceSignless, 9).is_err());
        assert!(cf_energy::<f64>(Family::Distance, 45).is_err());
    }
}
