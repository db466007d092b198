//! Simple undirected graphs and their graph-state stabilizers.

use alloc::vec::Vec;

use rand::Rng;

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliString};
use crate::stabilizer::StabilizerTableau;

/// Simple undirected graph on vertices `0..n` (labels `1..=n` in text).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    adj: Vec<BitVec>,
}

impl Graph {
    pub fn edgeless(n: usize) -> Self {
        Graph { adj: (0..n).map(|_| BitVec::zeros(n)).collect() }
    }

    /// Builds a graph from 0-based edges. Repeated edges are merged.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::edgeless(n);
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::SiteOutOfRange { site: v + 1, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a + 1));
            }
            g.adj[a].set(b, true);
            g.adj[b].set(a, true);
        }
        Ok(g)
    }

    /// Circulant graph where vertex `i` is joined to `i + N/2 - 1`,
    /// `i + N/2` and `i + N/2 + 1`.
    pub fn g1(n: usize) -> Result<Self> {
        if n % 2 == 1 {
            return Err(Error::OddN(n));
        }
        if n < 8 {
            return Err(Error::TooSmall { n, min: 8 });
        }
        let h = n / 2;
        Self::from_edges(n, (0..n).flat_map(|i| [(i, (i + h - 1) % n), (i, (i + h) % n)]))
    }

    /// Star-shaped cluster graph: vertex `i` joined to `i + (N-1)/2`.
    pub fn g2(n: usize) -> Result<Self> {
        if n.is_multiple_of(2) {
            return Err(Error::EvenN(n));
        }
        if n < 5 {
            return Err(Error::TooSmall { n, min: 5 });
        }
        let h = (n - 1) / 2;
        Self::from_edges(n, (0..n).map(|i| (i, (i + h) % n)))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooSmall { n, min: 3 });
        }
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Erdős–Rényi graph with edge probability `p`.
    pub fn random<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Self {
        let mut g = Self::edgeless(n);
        for a in 0..n {
            for b in a + 1..n {
                if rng.random::<f64>() < p {
                    g.adj[a].set(b, true);
                    g.adj[b].set(a, true);
                }
            }
        }
        g
    }

    #[inline]
    pub fn n_vertices(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].get(b)
    }

    /// Adjacency row of `v` as a bit vector.
    #[inline]
    pub fn neighbor_bits(&self, v: usize) -> &BitVec {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n_vertices()).flat_map(|a| self.adj[a].ones().filter(move |&b| b > a).map(move |b| (a, b))).collect()
    }

    /// Vertex `v` becomes `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        let n = self.n_vertices();
        assert_eq!(perm.len(), n);
        Self::from_edges(n, self.edges().into_iter().map(|(a, b)| (perm[a], perm[b]))).expect("permutation keeps edges valid")
    }

    /// True iff the adjacency is invariant under `v → v + 1 (mod N)`.
    pub fn is_circulant(&self) -> bool {
        let n = self.n_vertices();
        let shift: Vec<usize> = (0..n).map(|v| (v + 1) % n).collect();
        self.relabeled(&shift) == *self
    }

    /// Generator `K^{(v)} = X_v ∏_{u ~ v} Z_u`.
    pub fn stabilizer_generator(&self, v: usize) -> PauliString {
        let n = self.n_vertices();
        PauliString::from_sparse(n, core::iter::once((v, Pauli::X)).chain(self.neighbors(v).map(|u| (u, Pauli::Z))))
    }

    /// The graph-state stabilizer group generated by the `K^{(v)}`.
    pub fn to_stabilizer(&self) -> StabilizerTableau {
        let gens: Vec<_> = (0..self.n_vertices()).map(|v| self.stabilizer_generator(v)).collect();
        StabilizerTableau::from_generators(&gens).expect("graph-state generators are always a valid maximal group")
    }
}

/// The relabeling `c → c·(N-1)/2 (mod N)` that maps the N-cycle onto the
/// star-shaped cluster graph for odd N.
pub fn cycle_to_star_permutation(n: usize) -> Vec<usize> {
    let h = (n - 1) / 2;
    (0..n).map(|c| (c * h) % n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn one_based_neighbors(g: &Graph, v1: usize) -> Vec<usize> {
        g.neighbors(v1 - 1).map(|u| u + 1).collect()
    }

    #[test]
    fn g1_neighborhoods() {
        assert_eq!(one_based_neighbors(&Graph::g1(12).unwrap(), 1), vec![6, 7, 8]);
        assert_eq!(one_based_neighbors(&Graph::g1(8).unwrap(), 1), vec![4, 5, 6]);
        assert_eq!(Graph::g1(7), Err(Error::OddN(7)));
        assert_eq!(Graph::g1(6), Err(Error::TooSmall { n: 6, min: 8 }));
        let g = Graph::g1(12).unwrap();
        assert!((0..12).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn g2_neighborhoods() {
        assert_eq!(one_based_neighbors(&Graph::g2(9).unwrap(), 1), vec![5, 6]);
        assert_eq!(one_based_neighbors(&Graph::g2(5).unwrap(), 1), vec![3, 4]);
        assert_eq!(Graph::g2(6), Err(Error::EvenN(6)));
        assert_eq!(Graph::g2(3), Err(Error::TooSmall { n: 3, min: 5 }));
    }

    #[test]
    fn cycles() {
        assert_eq!(Graph::cycle(5).unwrap().edges(), vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(Graph::cycle(3).unwrap().edges().len(), 3);
        assert!(Graph::cycle(2).is_err());
    }

    #[test]
    fn circulant_families() {
        assert!(Graph::g1(10).unwrap().is_circulant());
        assert!(Graph::g2(9).unwrap().is_circulant());
        assert!(!Graph::from_edges(4, [(0, 1)]).unwrap().is_circulant());
    }

    #[test]
    fn cycle_relabels_to_star_cluster() {
        for n in [5, 7, 9, 11] {
            let perm = cycle_to_star_permutation(n);
            assert_eq!(Graph::cycle(n).unwrap().relabeled(&perm), Graph::g2(n).unwrap());
        }
    }

    #[test]
    fn cycle_to_star_by_search_at_nine() {
        // Search all affine relabelings c -> a·c + b (mod 9) with a a unit.
        let cyc = Graph::cycle(9).unwrap();
        let star = Graph::g2(9).unwrap();
        let hits: Vec<(usize, usize)> = (1..9)
            .filter(|a| num_integer::gcd(*a, 9) == 1)
            .flat_map(|a| (0..9).map(move |b| (a, b)))
            .filter(|&(a, b)| {
                let perm: Vec<usize> = (0..9).map(|c| (a * c + b) % 9).collect();
                cyc.relabeled(&perm) == star
            })
            .collect();
        assert!(hits.contains(&(4, 0)));
        assert!(hits.iter().all(|&(a, _)| a == 4 || a == 5));
    }

    #[test]
    fn stabilizer_generators() {
        let g = Graph::g1(12).unwrap();
        for i in 0..12 {
            let expected =
                PauliString::from_sparse(12, [(i, Pauli::X), ((i + 5) % 12, Pauli::Z), ((i + 6) % 12, Pauli::Z), ((i + 7) % 12, Pauli::Z)]);
            assert_eq!(g.stabilizer_generator(i), expected);
        }
        let e = Graph::edgeless(3);
        assert_eq!(e.stabilizer_generator(1), PauliString::single(3, 1, Pauli::X));
        let g2 = Graph::g2(9).unwrap();
        assert_eq!(g2.stabilizer_generator(0), PauliString::parse("X1 Z5 Z6", 9).unwrap());
    }

    #[test]
    fn bad_edges() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(2)));
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }
}
