//! Dense symmetric matrices, circulant constructions, the Jacobi eigenvalue
//! oracle, spectra as multisets and energies.

mod circulant;
mod energy;
mod families;
mod jacobi;
mod matrix;
mod spectrum;

pub use circulant::{
    left_circulant, left_circulant_spectrum, right_circulant, right_circulant_eigenvalues,
    shift_permutation,
};
pub use energy::{energy, EnergyValue};
pub use families::{build_distance_family, build_matrix, MatrixFamily};
pub use jacobi::{jacobi_eigenvalues, jacobi_spectrum, JacobiOptions};
pub(crate) use matrix::check_order;
pub use matrix::{Matrix, SymMatrix, MAX_DENSE_ORDER};
pub use spectrum::{spectrum_equal, Comparison, Spectrum, CLUSTER_TOL};
