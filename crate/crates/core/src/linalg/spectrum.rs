use std::cmp::Ordering;

use crate::scalar::{unit_scale, Real};

/// Eigenvalues closer than `CLUSTER_TOL * max(1, |λ|)` are merged.
pub const CLUSTER_TOL: f64 = 1e-7;

/// Eigenvalue multiset: ascending distinct values with multiplicities.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T> {
    entries: Vec<(T, usize)>,
}

impl<T: Real> Spectrum<T> {
    /// Clusters raw eigenvalues; each cluster is represented by its mean.
    pub fn from_values(mut values: Vec<T>) -> Self {
        values.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
        let tol = T::from_real(CLUSTER_TOL);
        let mut entries: Vec<(T, usize)> = Vec::new();
        let mut sum = T::zero();
        let mut last = T::zero();
        for v in values {
            match entries.last_mut() {
                Some((rep, mult)) if (v - last).abs() < tol * unit_scale(last) => {
                    *mult += 1;
                    sum = sum + v;
                    *rep = sum / T::from_int(*mult as i64);
                }
                _ => {
                    entries.push((v, 1));
                    sum = v;
                }
            }
            last = v;
        }
        Self { entries }
    }

    /// Builds from `(value, multiplicity)` pairs; zero multiplicities are dropped.
    pub fn from_multiplicities(pairs: impl IntoIterator<Item = (T, usize)>) -> Self {
        Self::from_values(
            pairs
                .into_iter()
                .flat_map(|(v, m)| std::iter::repeat_n(v, m))
                .collect(),
        )
    }

    pub fn entries(&self) -> &[(T, usize)] {
        &self.entries
    }

    /// Total multiplicity.
    pub fn order(&self) -> usize {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    /// All eigenvalues, ascending, with repetition.
    pub fn values(&self) -> Vec<T> {
        self.entries
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat_n(v, m))
            .collect()
    }

    pub fn descending(&self) -> Vec<T> {
        let mut v = self.values();
        v.reverse();
        v
    }

    pub fn sum(&self) -> T {
        self.entries
            .iter()
            .fold(T::zero(), |acc, &(v, m)| acc + v * T::from_int(m as i64))
    }

    pub fn min(&self) -> Option<T> {
        self.entries.first().map(|&(v, _)| v)
    }

    pub fn max(&self) -> Option<T> {
        self.entries.last().map(|&(v, _)| v)
    }

    /// Multiplicity of the cluster containing `value`, zero when absent.
    pub fn multiplicity_of(&self, value: T) -> usize {
        let tol = T::from_real(CLUSTER_TOL);
        self.entries
            .iter()
            .find(|&&(v, _)| (v - value).abs() < tol * unit_scale(value))
            .map_or(0, |&(_, m)| m)
    }

    pub fn map(&self, mut f: impl FnMut(T) -> T) -> Self {
        Self::from_values(self.values().into_iter().map(&mut f).collect())
    }
}

/// Outcome of an index-wise spectrum comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Comparison<T> {
    /// Every pair agrees; the deviation is scaled by `max(1, |value|)`.
    Equal { max_deviation: T },
    ValueMismatch { max_deviation: T, index: usize },
    OrderMismatch { left: usize, right: usize },
}

impl<T: Real> Comparison<T> {
    pub fn is_equal(&self) -> bool {
        matches!(self, Comparison::Equal { .. })
    }

    pub fn max_deviation(&self) -> Option<T> {
        match *self {
            Comparison::Equal { max_deviation } | Comparison::ValueMismatch { max_deviation, .. } => {
                Some(max_deviation)
            }
            Comparison::OrderMismatch { .. } => None,
        }
    }
}

/// Compares two spectra after expanding both to sorted value lists.
pub fn spectrum_equal<T: Real>(a: &Spectrum<T>, b: &Spectrum<T>, tol: T) -> Comparison<T> {
    let (left, right) = (a.values(), b.values());
    if left.len() != right.len() {
        return Comparison::OrderMismatch {
            left: left.len(),
            right: right.len(),
        };
    }
    let mut worst = T::zero();
    let mut worst_index = 0;
    for (i, (&x, &y)) in left.iter().zip(&right).enumerate() {
        let dev = (x - y).abs() / unit_scale(x).max(unit_scale(y));
        if dev > worst || dev.is_nan() {
            worst = dev;
            worst_index = i;
        }
    }
    if worst <= tol {
        Comparison::Equal { max_deviation: worst }
    } else {
        Comparison::ValueMismatch {
            max_deviation: worst,
            index: worst_index,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clustering_merges_close_values() {
        let s = Spectrum::from_values(vec![3.0, 1.0, 1.0 + 1e-10, 3.0 - 1e-9, 2.0]);
        assert_eq!(s.entries().len(), 3);
        assert_eq!(s.order(), 5);
        assert_eq!(s.multiplicity_of(1.0), 2);
        assert_eq!(s.multiplicity_of(3.0), 2);
        assert_eq!(s.multiplicity_of(7.0), 0);
    }

    #[test]
    fn zero_multiplicities_dropped() {
        let s = Spectrum::from_multiplicities([(2.0, 0), (1.0, 3)]);
        assert_eq!(s.entries(), &[(1.0, 3)]);
    }

    #[test]
    fn equal_examples() {
        let a = Spectrum::from_values(vec![0.0, 1.0]);
        assert_eq!(spectrum_equal(&a, &a, 1e-9), Comparison::Equal { max_deviation: 0.0 });
        let b = Spectrum::from_values(vec![0.0, 1.0 + 5e-10]);
        assert!(spectrum_equal(&a, &b, 1e-9).is_equal());
        let c = Spectrum::from_values(vec![0.0, 2.0]);
        assert!(matches!(
            spectrum_equal(&a, &c, 1e-9),
            Comparison::ValueMismatch { index: 1, .. }
        ));
        let d = Spectrum::from_values(vec![0.0, 1.0, 2.0]);
        assert_eq!(
            spectrum_equal(&a, &d, 1e-9),
            Comparison::OrderMismatch { left: 2, right: 3 }
        );
    }
}
