use super::spectrum::Spectrum;
use crate::scalar::Real;

/// Energy of a spectrum about a centering constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyValue<T> {
    pub value: T,
    pub shift: T,
}

/// `Σ multiplicity · |λ - shift|`.
pub fn energy<T: Real>(s: &Spectrum<T>, shift: T) -> EnergyValue<T> {
    let value = s
        .entries()
        .iter()
        .fold(T::zero(), |acc, &(v, m)| acc + (v - shift).abs() * T::from_int(m as i64));
    EnergyValue { value, shift }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signless_uacg_six() {
        let s = Spectrum::from_multiplicities([(0.0, 1), (1.0, 2), (3.0, 2), (4.0, 1)]);
        assert_eq!(energy(&s, 2.0).value, 8.0);
    }

    #[test]
    fn zero_shift_is_absolute_sum() {
        let s = Spectrum::from_values(vec![-3.0, 1.0, 2.0]);
        assert_eq!(energy(&s, 0.0), EnergyValue { value: 6.0, shift: 0.0 });
    }

    #[test]
    fn distance_laplacian_uacg_nine() {
        let s = Spectrum::<f64>::from_multiplicities([(0.0, 1), (9.0, 1), (12.0, 6), (15.0, 1)]);
        let e = energy(&s, 96.0 / 9.0);
        assert!((e.value - 74.0 / 3.0).abs() < 1e-12);
    }
}
