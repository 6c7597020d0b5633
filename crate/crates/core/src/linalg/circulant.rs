//! Right and left circulant matrices.
//!
//! The right circulant of `(c_0, ..., c_{n-1})` has entry `c_{(j - i) mod n}`
//! at `(i, j)`; the left circulant has `c_{(i + j) mod n}` and equals `Π`
//! times the right circulant, where `Π` fixes index 0 and reverses the rest.

use super::matrix::{Matrix, SymMatrix};
use super::spectrum::Spectrum;
use crate::error::Result;
use crate::scalar::Real;

pub fn right_circulant<T: Real>(row: &[T]) -> Matrix<T> {
    let n = row.len();
    Matrix::from_fn(n, |i, j| row[(j + n - i) % n])
}

/// Always symmetric.
pub fn left_circulant<T: Real>(row: &[T]) -> Result<SymMatrix<T>> {
    let n = row.len();
    SymMatrix::from_lower(n, |i, j| row[(i + j) % n])
}

/// Orthogonal permutation `Π` with `Π e_0 = e_0` and `Π e_i = e_{n-i}`.
pub fn shift_permutation<T: Real>(n: usize) -> SymMatrix<T> {
    SymMatrix::from_lower(n, |i, j| if (i + j) % n == 0 { T::one() } else { T::zero() })
        .expect("permutation is symmetric")
}

/// DFT eigenvalues `λ_k = Σ_j c_j ω^{jk}`, `ω = exp(2πi/n)`, as `(re, im)` pairs.
pub fn right_circulant_eigenvalues<T: Real>(row: &[T]) -> Vec<(T, T)> {
    let n = row.len();
    let two_pi = T::TAU();
    (0..n)
        .map(|k| {
            row.iter().enumerate().fold((T::zero(), T::zero()), |(re, im), (j, &c)| {
                // Reduce jk mod n before the trig call to keep the angle small.
                let angle = two_pi * T::from_int(((j * k) % n) as i64) / T::from_int(n as i64);
                (re + c * angle.cos(), im + c * angle.sin())
            })
        })
        .collect()
}

/// Eigenvalues of the left circulant of `row`: `λ_0`, `λ_{n/2}` for even `n`,
/// and `±|λ_k|` for the remaining conjugate pairs.
pub fn left_circulant_spectrum<T: Real>(row: &[T]) -> Spectrum<T> {
    let n = row.len();
    let lambda = right_circulant_eigenvalues(row);
    let mut values = Vec::with_capacity(n);
    if n == 0 {
        return Spectrum::from_values(values);
    }
    values.push(lambda[0].0);
    let pairs = if n.is_multiple_of(2) {
        values.push(lambda[n / 2].0);
        (n - 2) / 2
    } else {
        (n - 1) / 2
    };
    for &(re, im) in &lambda[1..=pairs] {
        let modulus = re.hypot(im);
        values.push(modulus);
        values.push(-modulus);
    }
    Spectrum::from_values(values)
}
