use super::edge_scan::EdgeScan;
use crate::graph::{induced_high_degree_subgraph, Graph, VertexId};
use crate::matrix::AdjacencyMatrix;
use crate::triangle::Triangle;

/// Degree-split listing.
///
/// Triangles touching a vertex of degree at most `k` come from vertex
/// listing on that vertex (reported only by its smallest low-degree
/// member). The rest lie in the subgraph induced by `{v : d(v) > k}` and
/// are listed there by edge-iterator.
pub fn ayz_listing<'a>(g: &'a Graph, a: &'a AdjacencyMatrix, k: usize) -> AyzListing<'a> {
    AyzListing { g, a, k, v: 0, i: 0, j: 1, high: None, scan: EdgeScan::default() }
}

#[derive(Debug)]
pub struct AyzListing<'a> {
    g: &'a Graph,
    a: &'a AdjacencyMatrix,
    k: usize,
    v: usize,
    i: usize,
    j: usize,
    high: Option<(Graph, Vec<VertexId>)>,
    scan: EdgeScan,
}

impl AyzListing<'_> {
    fn low_degree_next(&mut self) -> Option<Triangle> {
        let (g, a, k) = (self.g, self.a, self.k);
        let reports = |x: VertexId, v: VertexId| g.degree(x) > k || x > v;
        while self.v < g.n() {
            let v = self.v as VertexId;
            if g.degree(v) <= k {
                let nbrs = g.neighbors(v);
                while self.i < nbrs.len() {
                    let u = nbrs[self.i];
                    while self.j < nbrs.len() {
                        let w = nbrs[self.j];
                        self.j += 1;
                        if a.get(u, w) && reports(u, v) && reports(w, v) {
                            return Some(Triangle::new(u, v, w));
                        }
                    }
                    self.i += 1;
                    self.j = self.i + 1;
                }
            }
            self.v += 1;
            self.i = 0;
            self.j = 1;
        }
        None
    }
}

impl Iterator for AyzListing<'_> {
    type Item = Triangle;

    fn next(&mut self) -> Option<Triangle> {
        if self.high.is_none() {
            if let Some(t) = self.low_degree_next() {
                return Some(t);
            }
            self.high = Some(induced_high_degree_subgraph(self.g, self.k));
        }
        let (sub, map) = self.high.as_ref().unwrap();
        let (x, y, z) = self.scan.next(sub)?;
        Some(Triangle::new(map[x as usize], map[y as usize], map[z as usize]))
    }
}
