//! Unitary (addition) Cayley graphs on Z_n, their complements, and BFS
//! distance data.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::numtheory::{euler_phi, factorize, is_unit};

/// Which graph on Z_n to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphKind {
    /// `a ~ b` iff `a != b` and `a + b` is a unit.
    Uacg,
    /// `a ~ b` iff `a - b` is a unit.
    Ucg,
    UacgComplement,
    UcgComplement,
}

impl GraphKind {
    pub const ALL: [GraphKind; 4] = [
        GraphKind::Uacg,
        GraphKind::Ucg,
        GraphKind::UacgComplement,
        GraphKind::UcgComplement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Uacg => "uacg",
            GraphKind::Ucg => "ucg",
            GraphKind::UacgComplement => "uacg-complement",
            GraphKind::UcgComplement => "ucg-complement",
        }
    }

    pub fn complement(self) -> GraphKind {
        match self {
            GraphKind::Uacg => GraphKind::UacgComplement,
            GraphKind::Ucg => GraphKind::UcgComplement,
            GraphKind::UacgComplement => GraphKind::Uacg,
            GraphKind::UcgComplement => GraphKind::Ucg,
        }
    }

    fn base_adjacent(self, a: u64, b: u64, n: u64) -> bool {
        match self {
            GraphKind::Uacg | GraphKind::UacgComplement => is_unit((a + b) % n, n),
            GraphKind::Ucg | GraphKind::UcgComplement => is_unit((a + n - b) % n, n),
        }
    }

    fn is_complement(self) -> bool {
        matches!(self, GraphKind::UacgComplement | GraphKind::UcgComplement)
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GraphKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Inconsistent(format!("unknown graph kind `{s}`")))
    }
}

/// Simple undirected graph on the residues `0..n`, adjacency stored as dense
/// bit rows.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    kind: GraphKind,
    words: usize,
    bits: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("kind", &self.kind)
            .field("edges", &self.edge_count())
            .finish()
    }
}

impl Graph {
    pub fn build(kind: GraphKind, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfRange {
                what: "n",
                value: n as i64,
                expected: "n >= 2",
            });
        }
        let words = n.div_ceil(64);
        let mut g = Graph {
            n,
            kind,
            words,
            bits: vec![0; n * words],
        };
        let nn = n as u64;
        for a in 0..n {
            for b in (a + 1)..n {
                if kind.base_adjacent(a as u64, b as u64, nn) != kind.is_complement() {
                    g.set(a, b);
                    g.set(b, a);
                }
            }
        }
        Ok(g)
    }

    fn set(&mut self, a: usize, b: usize) {
        self.bits[a * self.words + b / 64] |= 1 << (b % 64);
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let bit = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + bit)
            })
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.degree_sequence().iter().sum::<usize>() / 2
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph {
            n: self.n,
            kind: self.kind.complement(),
            words: self.words,
            bits: vec![0; self.bits.len()],
        };
        for a in 0..self.n {
            for b in 0..self.n {
                if a != b && !self.adjacent(a, b) {
                    g.set(a, b);
                }
            }
        }
        g
    }

    fn bfs(&self, source: usize, dist: &mut [u32]) {
        dist.fill(u32::MAX);
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let next = dist[v] + 1;
            for w in self.neighbors(v) {
                if dist[w] == u32::MAX {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
    }

    pub fn is_connected(&self) -> bool {
        let mut dist = vec![0; self.n];
        self.bfs(0, &mut dist);
        dist.iter().all(|&d| d != u32::MAX)
    }

    /// All-pairs shortest path lengths by one BFS per vertex.
    pub fn distance_matrix(&self) -> Result<DistanceMatrix> {
        let n = self.n;
        let mut entries = vec![0u32; n * n];
        for (s, row) in entries.chunks_mut(n).enumerate() {
            self.bfs(s, row);
            if let Some(t) = row.iter().position(|&d| d == u32::MAX) {
                return Err(Error::DisconnectedGraph { n, from: s, to: t });
            }
        }
        Ok(DistanceMatrix { n, entries })
    }

    pub fn transmissions(&self) -> Result<TransmissionProfile> {
        Ok(self.distance_matrix()?.transmissions())
    }
}

/// Dense matrix of BFS distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    pub fn transmissions(&self) -> TransmissionProfile {
        TransmissionProfile(
            (0..self.n)
                .map(|i| self.row(i).iter().map(|&d| d as u64).sum())
                .collect(),
        )
    }
}

/// Per-vertex transmission (row sums of the distance matrix).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransmissionProfile(pub Vec<u64>);

impl TransmissionProfile {
    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_regular(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }
}

/// Diameter of the unitary addition Cayley graph for `n > 2`.
pub fn diameter_formula(n: u64) -> Result<u32> {
    if n <= 2 {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
            expected: "n > 2",
        });
    }
    if n.is_multiple_of(2) && !n.is_power_of_two() {
        Ok(3)
    } else {
        Ok(2)
    }
}

/// Vertex classes with distinct closed-form transmissions in G_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexClass {
    /// `n = 2^m`, `m >= 2`; every vertex.
    EvenPowerOfTwo,
    /// `n` even with an odd prime divisor; every vertex.
    EvenWithOddPrime,
    /// `n` odd, vertex of degree `φ(n)` (`2v` not a unit).
    OddFullDegree,
    /// `n` odd, vertex of degree `φ(n) - 1` (`2v` a unit).
    OddReducedDegree,
}

impl VertexClass {
    /// Class of vertex `v` in G_n.
    pub fn of_vertex(n: u64, v: u64) -> Result<Self> {
        if n <= 2 {
            return Err(Error::OutOfRange {
                what: "n",
                value: n as i64,
                expected: "n > 2",
            });
        }
        Ok(match (n.is_multiple_of(2), n.is_power_of_two()) {
            (true, true) => VertexClass::EvenPowerOfTwo,
            (true, false) => VertexClass::EvenWithOddPrime,
            _ if is_unit(2 * v, n) => VertexClass::OddReducedDegree,
            _ => VertexClass::OddFullDegree,
        })
    }
}

/// Closed-form transmission of a vertex of the given class in G_n.
pub fn transmission_formula(n: u64, class: VertexClass) -> Result<u64> {
    if n <= 2 {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
            expected: "n > 2",
        });
    }
    let phi = euler_phi(n)?;
    let odd_prime_divisor = factorize(n)?.primes().any(|p| p != 2);
    let mismatch = || Error::Inconsistent(format!("vertex class {class:?} does not apply to n = {n}"));
    match class {
        VertexClass::EvenPowerOfTwo if n.is_power_of_two() => Ok(2 * n - 2 - phi),
        VertexClass::EvenWithOddPrime if n.is_multiple_of(2) && odd_prime_divisor => Ok(5 * n / 2 - 2 - 2 * phi),
        VertexClass::OddFullDegree if n % 2 == 1 => Ok(2 * n - phi - 2),
        VertexClass::OddReducedDegree if n % 2 == 1 => Ok(2 * n - phi - 1),
        _ => Err(mismatch()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_desc(mut v: Vec<usize>) -> Vec<usize> {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    #[test]
    fn uacg_five() {
        let g = Graph::build(GraphKind::Uacg, 5).unwrap();
        assert_eq!(sorted_desc(g.degree_sequence()), vec![4, 3, 3, 3, 3]);
        let d = g.distance_matrix().unwrap();
        for i in 0..5 {
            for j in 0..5 {
                let expected = match (i.min(j), i.max(j)) {
                    _ if i == j => 0,
                    (1, 4) | (2, 3) => 2,
                    _ => 1,
                };
                assert_eq!(d.get(i, j), expected, "d({i},{j})");
            }
        }
    }

    #[test]
    fn complement_five_edges() {
        let g = Graph::build(GraphKind::UacgComplement, 5).unwrap();
        let edges: Vec<_> = (0..5)
            .flat_map(|a| ((a + 1)..5).map(move |b| (a, b)))
            .filter(|&(a, b)| g.adjacent(a, b))
            .collect();
        assert_eq!(edges, vec![(1, 4), (2, 3)]);
        assert!(matches!(
            g.distance_matrix(),
            Err(Error::DisconnectedGraph { n: 5, .. })
        ));
        assert_eq!(g, Graph::build(GraphKind::Uacg, 5).unwrap().complement());
    }

    #[test]
    fn degree_examples() {
        let g6 = Graph::build(GraphKind::Uacg, 6).unwrap();
        assert!(g6.degree_sequence().iter().all(|&d| d == 2));
        let g8 = Graph::build(GraphKind::Uacg, 8).unwrap();
        assert!(g8.degree_sequence().iter().all(|&d| d == 4));
        let k7 = Graph::build(GraphKind::Ucg, 7).unwrap();
        assert!(k7.degree_sequence().iter().all(|&d| d == 6));
        let g9 = Graph::build(GraphKind::Uacg, 9).unwrap();
        let degs = g9.degree_sequence();
        assert_eq!(degs.iter().filter(|&&d| d == 5).count(), 6);
        assert_eq!(degs.iter().filter(|&&d| d == 6).count(), 3);
    }

    #[test]
    fn rejects_small_n() {
        assert!(Graph::build(GraphKind::Uacg, 1).is_err());
        assert!(diameter_formula(2).is_err());
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(diameter_formula(8).unwrap(), 2);
        assert_eq!(diameter_formula(12).unwrap(), 3);
        assert_eq!(diameter_formula(15).unwrap(), 2);
        assert_eq!(diameter_formula(7).unwrap(), 2);
        let d4 = Graph::build(GraphKind::Uacg, 4).unwrap().distance_matrix().unwrap();
        assert_eq!(d4.diameter(), 2);
    }

    #[test]
    fn transmission_examples() {
        let t9 = Graph::build(GraphKind::Uacg, 9).unwrap().transmissions().unwrap();
        let g9 = Graph::build(GraphKind::Uacg, 9).unwrap();
        for (v, &t) in t9.values().iter().enumerate() {
            let expected = if g9.degree(v) == 6 { 10 } else { 11 };
            assert_eq!(t, expected);
        }
        let t8 = Graph::build(GraphKind::Uacg, 8).unwrap().transmissions().unwrap();
        assert!(t8.values().iter().all(|&t| t == 10));
        let t12 = Graph::build(GraphKind::Uacg, 12).unwrap().transmissions().unwrap();
        assert!(t12.values().iter().all(|&t| t == 20));
    }

    #[test]
    fn transmission_formula_examples() {
        assert_eq!(transmission_formula(16, VertexClass::EvenPowerOfTwo).unwrap(), 22);
        assert_eq!(transmission_formula(9, VertexClass::OddFullDegree).unwrap(), 10);
        assert_eq!(transmission_formula(9, VertexClass::OddReducedDegree).unwrap(), 11);
        assert_eq!(transmission_formula(12, VertexClass::EvenWithOddPrime).unwrap(), 20);
        assert!(transmission_formula(12, VertexClass::EvenPowerOfTwo).is_err());
        assert!(transmission_formula(9, VertexClass::EvenWithOddPrime).is_err());
        assert!(transmission_formula(8, VertexClass::OddFullDegree).is_err());
    }

    #[test]
    fn neighbors_agree_with_adjacency() {
        let g = Graph::build(GraphKind::Ucg, 130).unwrap();
        for v in [0, 63, 64, 129] {
            let listed: Vec<_> = g.neighbors(v).collect();
            let direct: Vec<_> = (0..130).filter(|&w| g.adjacent(v, w)).collect();
            assert_eq!(listed, direct);
        }
    }
}
