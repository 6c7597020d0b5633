use std::ops::{Index, Mul};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Largest order accepted by the dense routines.
pub const MAX_DENSE_ORDER: usize = 3000;

pub(crate) fn check_order(order: usize) -> Result<()> {
    if order > MAX_DENSE_ORDER {
        return Err(Error::TooLarge {
            order,
            limit: MAX_DENSE_ORDER,
        });
    }
    Ok(())
}

/// Row-major dense square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Real> Matrix<T> {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.n + j]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn max_abs_diff(&self, other: &Matrix<T>) -> T {
        self.data
            .iter()
            .zip(&other.data)
            .fold(T::zero(), |acc, (&a, &b)| acc.max((a - b).abs()))
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.n + j]
    }
}

impl<T: Real> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.n, rhs.n, "order mismatch");
        let n = self.n;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == T::zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] = out.data[i * n + j] + a * rhs.get(k, j);
                }
            }
        }
        out
    }
}

/// Real symmetric matrix with finite entries.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix<T> {
    inner: Matrix<T>,
}

impl<T: Real> SymMatrix<T> {
    /// Builds from the lower triangle and its mirror; `f(i, j)` is called for `j <= i`.
    pub fn from_lower(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Result<Self> {
        check_order(n)?;
        let mut inner = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                let v = f(i, j);
                inner.data[i * n + j] = v;
                inner.data[j * n + i] = v;
            }
        }
        Self::try_from(inner)
    }

    pub fn identity(n: usize) -> Self {
        Self {
            inner: Matrix::from_fn(n, |i, j| if i == j { T::one() } else { T::zero() }),
        }
    }

    pub fn order(&self) -> usize {
        self.inner.n
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.inner.get(i, j)
    }

    pub fn as_matrix(&self) -> &Matrix<T> {
        &self.inner
    }

    pub(crate) fn into_data(self) -> Vec<T> {
        self.inner.data
    }

    pub fn trace(&self) -> T {
        (0..self.order()).fold(T::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn frobenius_norm_sq(&self) -> T {
        self.inner.data.iter().fold(T::zero(), |acc, &x| acc + x * x)
    }

    pub fn row_sum(&self, i: usize) -> T {
        self.inner.data[i * self.order()..(i + 1) * self.order()]
            .iter()
            .fold(T::zero(), |acc, &x| acc + x)
    }
}

impl<T: Real> TryFrom<Matrix<T>> for SymMatrix<T> {
    type Error = Error;

    fn try_from(m: Matrix<T>) -> Result<Self> {
        check_order(m.n)?;
        if m.data.iter().any(|x| !x.is_finite()) {
            return Err(Error::Inconsistent("matrix has non-finite entries".into()));
        }
        if !m.is_symmetric() {
            return Err(Error::Inconsistent("matrix is not symmetric".into()));
        }
        Ok(Self { inner: m })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_asymmetric() {
        let m = Matrix::from_fn(2, |i, j| (i * 2 + j) as f64);
        assert!(SymMatrix::try_from(m).is_err());
    }

    #[test]
    fn guard_on_order() {
        assert!(matches!(
            SymMatrix::<f64>::from_lower(MAX_DENSE_ORDER + 1, |_, _| 0.0),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn product_with_identity() {
        let a = Matrix::from_fn(3, |i, j| (i + 3 * j) as f64);
        let id = SymMatrix::<f64>::identity(3);
        assert_eq!(&a * id.as_matrix(), a);
    }
}
