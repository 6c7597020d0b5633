//! Cyclic Jacobi eigenvalue iteration for dense symmetric matrices.
//!
//! Each rotation annihilates one off-diagonal pair; sweeps repeat over all
//! pairs `(p, q)`, `p < q`, until the off-diagonal Frobenius norm falls below
//! `tol * ||M||_F`. This is the independent oracle: it shares nothing with
//! the closed-form code path beyond the matrix entries.

use super::matrix::{check_order, SymMatrix};
use super::spectrum::Spectrum;
use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy)]
pub struct JacobiOptions<T> {
    /// Relative off-diagonal threshold.
    pub tol: T,
    pub max_sweeps: usize,
}

impl<T: Real> Default for JacobiOptions<T> {
    fn default() -> Self {
        // 1e-12 is below f32 resolution; never ask for less than a few ulps.
        let floor = T::epsilon() * T::from_int(16);
        Self {
            tol: T::from_real(1e-12).max(floor),
            max_sweeps: 100,
        }
    }
}

fn off_diagonal_sq<T: Real>(a: &[T], n: usize) -> T {
    let mut s = T::zero();
    for i in 0..n {
        for j in (i + 1)..n {
            let x = a[i * n + j];
            s = s + x * x;
        }
    }
    s + s
}

/// Unsorted eigenvalues of `m`.
pub fn jacobi_eigenvalues<T: Real>(m: &SymMatrix<T>, opts: JacobiOptions<T>) -> Result<Vec<T>> {
    let n = m.order();
    check_order(n)?;
    let norm_sq = m.frobenius_norm_sq();
    let target_sq = opts.tol * opts.tol * norm_sq;
    let mut a = m.clone().into_data();
    let two = T::from_int(2);
    let hundred = T::from_int(100);

    let mut off_sq = off_diagonal_sq(&a, n);
    let mut sweep = 0;
    while off_sq >= target_sq && off_sq > T::zero() {
        if sweep == opts.max_sweeps {
            return Err(Error::NoConvergence {
                sweeps: sweep,
                off_norm: off_sq.sqrt().to_f64_lossy(),
            });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == T::zero() {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let g = hundred * apq.abs();
                // Underflow guard after the first few sweeps.
                if sweep > 4 && app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
                    a[p * n + q] = T::zero();
                    a[q * n + p] = T::zero();
                    continue;
                }
                let theta = (aqq - app) / (two * apq);
                let t = {
                    let t = T::one() / (theta.abs() + (theta * theta + T::one()).sqrt());
                    if theta < T::zero() {
                        -t
                    } else {
                        t
                    }
                };
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let new_kp = c * akp - s * akq;
                    let new_kq = s * akp + c * akq;
                    a[k * n + p] = new_kp;
                    a[p * n + k] = new_kp;
                    a[k * n + q] = new_kq;
                    a[q * n + k] = new_kq;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = T::zero();
                a[q * n + p] = T::zero();
            }
        }
        sweep += 1;
        off_sq = off_diagonal_sq(&a, n);
    }
    Ok((0..n).map(|i| a[i * n + i]).collect())
}

/// Eigenvalues of `m` clustered into a [`Spectrum`].
pub fn jacobi_spectrum<T: Real>(m: &SymMatrix<T>, opts: JacobiOptions<T>) -> Result<Spectrum<T>> {
    Ok(Spectrum::from_values(jacobi_eigenvalues(m, opts)?))
}
