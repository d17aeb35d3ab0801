//! Packed boolean adjacency matrix.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

const WORD: usize = u64::BITS as usize;

/// Row-major `n × n` bit matrix, one bit per vertex pair.
///
/// Bits may be cleared (symmetrically) to model edge removal without
/// touching the adjacency arrays of the source graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl AdjacencyMatrix {
    /// Builds the matrix of `g` in `O(n²/64 + m)`.
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.n();
        let words_per_row = n.div_ceil(WORD);
        let total = words_per_row
            .checked_mul(n)
            .ok_or_else(|| Error::Capacity(format!("{n}x{n} adjacency matrix")))?;
        let mut bits = Vec::new();
        bits.try_reserve_exact(total)
            .map_err(|_| Error::Capacity(format!("{n}x{n} adjacency matrix")))?;
        bits.resize(total, 0);
        let mut a = AdjacencyMatrix { n, words_per_row, bits };
        for (u, v) in g.edges() {
            a.set(u, v);
        }
        Ok(a)
    }

    /// Bytes a matrix for `n` vertices would occupy.
    pub fn bytes_for(n: usize) -> u128 {
        (n.div_ceil(WORD) as u128) * (n as u128) * 8
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: VertexId, v: VertexId) -> bool {
        let (u, v) = (u as usize, v as usize);
        self.bits[u * self.words_per_row + v / WORD] >> (v % WORD) & 1 == 1
    }

    fn set(&mut self, u: VertexId, v: VertexId) {
        for (x, y) in [(u as usize, v as usize), (v as usize, u as usize)] {
            self.bits[x * self.words_per_row + y / WORD] |= 1 << (y % WORD);
        }
    }

    /// Removes the edge `{u, v}` by zeroing both mirrored bits.
    #[inline]
    pub fn clear(&mut self, u: VertexId, v: VertexId) {
        for (x, y) in [(u as usize, v as usize), (v as usize, u as usize)] {
            self.bits[x * self.words_per_row + y / WORD] &= !(1 << (y % WORD));
        }
    }

    #[inline]
    pub fn row(&self, u: VertexId) -> &[u64] {
        let start = u as usize * self.words_per_row;
        &self.bits[start..start + self.words_per_row]
    }

    /// `|N(u) ∩ N(v)|`, i.e. the entry `(A²)_{uv}`.
    #[inline]
    pub fn common_neighbors(&self, u: VertexId, v: VertexId) -> u64 {
        self.row(u).iter().zip(self.row(v)).map(|(x, y)| (x & y).count_ones() as u64).sum()
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }
}

/// Shorthand for [`AdjacencyMatrix::new`].
pub fn build_matrix(g: &Graph) -> Result<AdjacencyMatrix> {
    AdjacencyMatrix::new(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use proptest::prelude::*;

    fn set_bits(a: &AdjacencyMatrix) -> Vec<(u32, u32)> {
        let n = a.n() as u32;
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| a.get(i, j)).collect()
    }

    #[test]
    fn triangle_matrix_is_full_off_diagonal() {
        let a = build_matrix(&triangle()).unwrap();
        assert_eq!(set_bits(&a), vec![(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]);
    }

    #[test]
    fn path_matrix() {
        let a = build_matrix(&path(4)).unwrap();
        assert_eq!(set_bits(&a), vec![(0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2)]);
    }

    #[test]
    fn empty_graph_matrix_is_zero() {
        let a = build_matrix(&Graph::empty(5)).unwrap();
        assert_eq!(a.n(), 5);
        assert!(set_bits(&a).is_empty());
    }

    #[test]
    fn clear_is_symmetric() {
        let mut a = build_matrix(&clique(4)).unwrap();
        a.clear(3, 1);
        assert!(!a.get(1, 3) && !a.get(3, 1));
        assert_eq!(a.edge_count(), 5);
    }

    #[test]
    fn rows_span_word_boundaries() {
        let g = graph(130, &[(0, 129), (64, 65), (63, 64)]);
        let a = build_matrix(&g).unwrap();
        assert!(a.get(129, 0) && a.get(65, 64) && a.get(63, 64));
        assert_eq!(a.common_neighbors(63, 65), 1);
    }

    proptest! {
        #[test]
        fn matrix_agrees_with_binary_search(
            n in 1usize..=64,
            edges in prop::collection::vec((0u32..64, 0u32..64), 0..200),
        ) {
            let edges: Vec<_> = edges.into_iter().map(|(u, v)| (u % n as u32, v % n as u32)).collect();
            let g = Graph::from_edges(n, edges).0;
            let a = build_matrix(&g).unwrap();
            for u in 0..n as u32 {
                prop_assert!(!a.get(u, u));
                for v in 0..n as u32 {
                    prop_assert_eq!(a.get(u, v), g.has_edge(u, v));
                }
            }
        }
    }
}
