//! Elementary listers: direct triple testing, vertex-iterator and
//! edge-iterator, with their single-vertex and single-edge building blocks.
//!
//! All of them run in constant auxiliary space. [`list_direct`] tests every
//! triple and serves as the oracle the faster listers are checked against.

use crate::graph::{Graph, VertexId};
use crate::matrix::AdjacencyMatrix;
use crate::merge::Intersection;
use crate::triangle::Triangle;

/// Tests every triple `a < b < c` against the matrix. `Θ(n³)` time.
pub fn list_direct(a: &AdjacencyMatrix) -> DirectTriples<'_> {
    DirectTriples { a, i: 0, j: 1, k: 2 }
}

#[derive(Debug, Clone)]
pub struct DirectTriples<'a> {
    a: &'a AdjacencyMatrix,
    i: usize,
    j: usize,
    k: usize,
}

impl Iterator for DirectTriples<'_> {
    type Item = Triangle;

    fn next(&mut self) -> Option<Triangle> {
        let n = self.a.n();
        while self.i + 2 < n {
            while self.j + 1 < n {
                let (i, j) = (self.i as VertexId, self.j as VertexId);
                // No third vertex can complete a missing (i, j).
                if !self.a.get(i, j) {
                    self.k = n;
                }
                while self.k < n {
                    let k = self.k as VertexId;
                    self.k += 1;
                    if self.a.get(i, k) && self.a.get(j, k) {
                        return Some(Triangle::new(i, j, k));
                    }
                }
                self.j += 1;
                self.k = self.j + 1;
            }
            self.i += 1;
            self.j = self.i + 1;
            self.k = self.j + 1;
        }
        None
    }
}

/// Every triangle containing `v`, one per adjacent pair of neighbors.
/// `Θ(d(v)²)` time.
pub fn list_vertex_triangles<'a>(
    g: &'a Graph,
    a: &'a AdjacencyMatrix,
    v: VertexId,
) -> impl Iterator<Item = Triangle> + 'a {
    let nbrs = g.neighbors(v);
    nbrs.iter().enumerate().flat_map(move |(i, &u)| {
        nbrs[i + 1..].iter().filter(move |&&w| a.get(u, w)).map(move |&w| Triangle::new(u, v, w))
    })
}

/// Vertex-iterator. From each `v` only the pairs `u < v < w` are kept, so
/// every triangle is reported by its middle vertex exactly once.
pub fn vertex_iterator<'a>(
    g: &'a Graph,
    a: &'a AdjacencyMatrix,
) -> impl Iterator<Item = Triangle> + 'a {
    g.vertices().flat_map(move |v| {
        let nbrs = g.neighbors(v);
        let split = nbrs.partition_point(|&x| x < v);
        let (lower, upper) = nbrs.split_at(split);
        lower.iter().flat_map(move |&u| {
            upper.iter().filter(move |&&w| a.get(u, w)).map(move |&w| Triangle::new(u, v, w))
        })
    })
}

/// Every triangle containing the edge `(u, v)`, from the merge of `N(u)`
/// and `N(v)`. `Θ(d(u) + d(v))` time.
pub fn list_edge_triangles(g: &Graph, u: VertexId, v: VertexId) -> EdgeTriangles<'_> {
    EdgeTriangles { common: Intersection::new(g.neighbors(u), g.neighbors(v)), u, v }
}

#[derive(Debug, Clone)]
pub struct EdgeTriangles<'a> {
    common: Intersection<'a>,
    u: VertexId,
    v: VertexId,
}

impl Iterator for EdgeTriangles<'_> {
    type Item = Triangle;

    #[inline]
    fn next(&mut self) -> Option<Triangle> {
        let w = self.common.next()?;
        Some(Triangle::new(self.u, self.v, w))
    }
}

/// Edge-iterator: each edge `u < v` merges the full lists `N(u)` and
/// `N(v)` and keeps the common neighbors `w > v`, so every triangle comes
/// from its two smallest vertices. `Θ(Σ_{uv} d(u) + d(v))` time.
pub fn edge_iterator(g: &Graph) -> impl Iterator<Item = Triangle> + '_ {
    g.edges().flat_map(move |(u, v)| {
        Intersection::new(g.neighbors(u), g.neighbors(v))
            .filter(move |&w| w > v)
            .map(move |w| Triangle::new(u, v, w))
    })
}
