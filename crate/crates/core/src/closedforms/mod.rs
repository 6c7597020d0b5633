//! Closed-form spectra, energies and eigenvalue/energy bounds for G_n and
//! its complement, evaluated from number-theoretic data.

mod applicability;
mod bounds;
mod energies;
mod spectra;

use std::fmt;
use std::str::FromStr;

pub use applicability::{applicability, Branch, FormulaApplicability, NumberClass, NumberProfile};
pub use bounds::{cf_bounds, cf_energy_bounds, BoundSet, EnergyBounds};
pub use energies::{cf_energy, mean_transmission, ClosedFormEnergy, EnergyCaveat};
pub use spectra::{
    cf_spectrum, dl_from_laplacian, mn_matrix_eigenvalues, prime_power_distance_spectrum, DistanceRadical,
    GcdMatrix,
};

use crate::graphs::GraphKind;
use crate::linalg::MatrixFamily;

/// Spectral families with closed-form results for G_n (or its complement).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Signless,
    SignlessComplement,
    Laplacian,
    Distance,
    DistanceLaplacian,
    DistanceSignless,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Signless,
        Family::SignlessComplement,
        Family::Laplacian,
        Family::Distance,
        Family::DistanceLaplacian,
        Family::DistanceSignless,
    ];

    /// Families with odd-n eigenvalue bounds.
    pub const BOUNDED: [Family; 4] = [
        Family::Signless,
        Family::SignlessComplement,
        Family::Distance,
        Family::DistanceSignless,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Signless => "signless",
            Family::SignlessComplement => "signless-complement",
            Family::Laplacian => "laplacian",
            Family::Distance => "distance",
            Family::DistanceLaplacian => "distance-laplacian",
            Family::DistanceSignless => "distance-signless",
        }
    }

    pub fn graph_kind(self) -> GraphKind {
        match self {
            Family::SignlessComplement => GraphKind::UacgComplement,
            _ => GraphKind::Uacg,
        }
    }

    pub fn matrix_family(self) -> MatrixFamily {
        match self {
            Family::Signless | Family::SignlessComplement => MatrixFamily::SignlessLaplacian,
            Family::Laplacian => MatrixFamily::Laplacian,
            Family::Distance => MatrixFamily::Distance,
            Family::DistanceLaplacian => MatrixFamily::DistanceLaplacian,
            Family::DistanceSignless => MatrixFamily::DistanceSignlessLaplacian,
        }
    }

    /// Inverse of (`graph_kind`, `matrix_family`).
    pub fn from_graph(kind: GraphKind, family: MatrixFamily) -> Option<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.graph_kind() == kind && f.matrix_family() == family)
    }

    pub fn is_distance(self) -> bool {
        self.matrix_family().needs_distances()
    }

    pub fn has_bounds(self) -> bool {
        Family::BOUNDED.contains(&self)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| crate::Error::Inconsistent(format!("unknown family `{s}`")))
    }
}
