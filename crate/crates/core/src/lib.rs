//! Spectra and energies of unitary addition Cayley graphs.
//!
//! The crate builds G_n (`a ~ b` iff `a + b` is a unit of Z_n), the unitary
//! Cayley graph X_n and their complements, forms their six spectral matrices,
//! evaluates the known closed-form spectra, energies and bounds from
//! Ramanujan sums, and checks each one against a dense Jacobi eigensolver.
//!
//! Numeric code is generic over [`Real`] (`f32` or `f64`); the aliases below
//! fix the scalar to `f64`, which the verification layer uses throughout.

pub mod closedforms;
mod error;
pub mod graphs;
pub mod linalg;
pub mod numtheory;
mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{unit_scale, Real};

pub use closedforms::Family;
pub use graphs::{Graph, GraphKind};
pub use linalg::MatrixFamily;

pub type Spectrum64 = linalg::Spectrum<f64>;
pub type Spectrum32 = linalg::Spectrum<f32>;
pub type SymMatrix64 = linalg::SymMatrix<f64>;
pub type SymMatrix32 = linalg::SymMatrix<f32>;
pub type EnergyValue64 = linalg::EnergyValue<f64>;
pub type BoundSet64 = closedforms::BoundSet<f64>;
