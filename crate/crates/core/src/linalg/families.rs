use std::fmt;
use std::str::FromStr;

use super::matrix::SymMatrix;
use crate::error::{Error, Result};
use crate::graphs::{DistanceMatrix, Graph};
use crate::scalar::Real;

/// The six graph matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatrixFamily {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
    Distance,
    DistanceLaplacian,
    DistanceSignlessLaplacian,
}

impl MatrixFamily {
    pub const ALL: [MatrixFamily; 6] = [
        MatrixFamily::Adjacency,
        MatrixFamily::Laplacian,
        MatrixFamily::SignlessLaplacian,
        MatrixFamily::Distance,
        MatrixFamily::DistanceLaplacian,
        MatrixFamily::DistanceSignlessLaplacian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MatrixFamily::Adjacency => "adjacency",
            MatrixFamily::Laplacian => "laplacian",
            MatrixFamily::SignlessLaplacian => "signless-laplacian",
            MatrixFamily::Distance => "distance",
            MatrixFamily::DistanceLaplacian => "distance-laplacian",
            MatrixFamily::DistanceSignlessLaplacian => "distance-signless-laplacian",
        }
    }

    pub fn needs_distances(self) -> bool {
        matches!(
            self,
            MatrixFamily::Distance | MatrixFamily::DistanceLaplacian | MatrixFamily::DistanceSignlessLaplacian
        )
    }
}

impl fmt::Display for MatrixFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MatrixFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MatrixFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Inconsistent(format!("unknown matrix family `{s}`")))
    }
}

/// Builds the named matrix of `g`, running BFS for the distance families.
pub fn build_matrix<T: Real>(family: MatrixFamily, g: &Graph) -> Result<SymMatrix<T>> {
    if family.needs_distances() {
        return build_distance_family(family, &g.distance_matrix()?);
    }
    let degree: Vec<T> = g.degree_sequence().into_iter().map(|d| T::from_int(d as i64)).collect();
    let adj = |i: usize, j: usize| if g.adjacent(i, j) { T::one() } else { T::zero() };
    SymMatrix::from_lower(g.order(), |i, j| match (family, i == j) {
        (MatrixFamily::Adjacency, _) => adj(i, j),
        (MatrixFamily::Laplacian, true) | (MatrixFamily::SignlessLaplacian, true) => degree[i],
        (MatrixFamily::Laplacian, false) => -adj(i, j),
        (MatrixFamily::SignlessLaplacian, false) => adj(i, j),
        _ => unreachable!("distance families handled above"),
    })
}

/// Distance-based families from a precomputed distance matrix.
pub fn build_distance_family<T: Real>(family: MatrixFamily, d: &DistanceMatrix) -> Result<SymMatrix<T>> {
    if !family.needs_distances() {
        return Err(Error::Inconsistent(format!("{family} is not a distance family")));
    }
    let tr: Vec<T> = d
        .transmissions()
        .values()
        .iter()
        .map(|&t| T::from_int(t as i64))
        .collect();
    let dist = |i: usize, j: usize| T::from_int(d.get(i, j) as i64);
    SymMatrix::from_lower(d.order(), |i, j| match (family, i == j) {
        (MatrixFamily::Distance, _) => dist(i, j),
        (MatrixFamily::DistanceLaplacian, true) | (MatrixFamily::DistanceSignlessLaplacian, true) => tr[i],
        (MatrixFamily::DistanceLaplacian, false) => -dist(i, j),
        (MatrixFamily::DistanceSignlessLaplacian, false) => dist(i, j),
        _ => unreachable!("checked above"),
    })
}
