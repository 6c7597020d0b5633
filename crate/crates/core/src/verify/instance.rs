use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graphs::{DistanceMatrix, Graph, GraphKind};
use crate::linalg::{
    build_distance_family, build_matrix, check_order, jacobi_spectrum, JacobiOptions, MatrixFamily, Spectrum,
};

/// Graphs, BFS distances and oracle spectra for one `n`, built on first use.
#[derive(Debug)]
pub struct Instance {
    n: u64,
    graphs: HashMap<GraphKind, Graph>,
    distances: HashMap<GraphKind, Result<DistanceMatrix>>,
    spectra: HashMap<(GraphKind, MatrixFamily), Spectrum<f64>>,
}

impl Instance {
    pub fn new(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfRange {
                what: "n",
                value: n as i64,
                expected: "n >= 2",
            });
        }
        check_order(usize::try_from(n).unwrap_or(usize::MAX))?;
        Ok(Self {
            n,
            graphs: HashMap::new(),
            distances: HashMap::new(),
            spectra: HashMap::new(),
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn graph(&mut self, kind: GraphKind) -> Result<&Graph> {
        if !self.graphs.contains_key(&kind) {
            let g = Graph::build(kind, self.n as usize)?;
            self.graphs.insert(kind, g);
        }
        Ok(&self.graphs[&kind])
    }

    pub fn distances(&mut self, kind: GraphKind) -> Result<&DistanceMatrix> {
        if !self.distances.contains_key(&kind) {
            let d = self.graph(kind)?.distance_matrix();
            self.distances.insert(kind, d);
        }
        self.distances[&kind].as_ref().map_err(Clone::clone)
    }

    /// Jacobi spectrum of `family` on the graph `kind`.
    pub fn oracle(&mut self, kind: GraphKind, family: MatrixFamily) -> Result<Spectrum<f64>> {
        let key = (kind, family);
        if let Some(s) = self.spectra.get(&key) {
            return Ok(s.clone());
        }
        let m = if family.needs_distances() {
            build_distance_family(family, self.distances(kind)?)?
        } else {
            build_matrix(family, self.graph(kind)?)?
        };
        let s = jacobi_spectrum(&m, JacobiOptions::default())?;
        self.spectra.insert(key, s.clone());
        Ok(s)
    }

    /// Energy centering for `family` read off the graph itself: average
    /// degree, mean transmission, or zero.
    pub fn oracle_shift(&mut self, kind: GraphKind, family: MatrixFamily) -> Result<f64> {
        let n = self.n as f64;
        Ok(match family {
            MatrixFamily::Adjacency | MatrixFamily::Distance => 0.0,
            MatrixFamily::Laplacian | MatrixFamily::SignlessLaplacian => {
                2.0 * self.graph(kind)?.edge_count() as f64 / n
            }
            MatrixFamily::DistanceLaplacian | MatrixFamily::DistanceSignlessLaplacian => {
                self.distances(kind)?.transmissions().total() as f64 / n
            }
        })
    }
}
