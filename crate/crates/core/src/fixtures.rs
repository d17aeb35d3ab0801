//! Small named graphs and a brute-force oracle shared by unit tests.

use std::collections::BTreeSet;

use crate::{Graph, Triangle, VertexId};

pub fn graph(n: usize, edges: &[(VertexId, VertexId)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).0
}

pub fn triangle() -> Graph {
    graph(3, &[(0, 1), (1, 2), (0, 2)])
}

pub fn clique(k: usize) -> Graph {
    let k = k as VertexId;
    let edges: Vec<_> = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).collect();
    graph(k as usize, &edges)
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n as VertexId).map(|v| (v - 1, v)).collect();
    graph(n, &edges)
}

pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n as VertexId).map(|v| (v - 1, v)).collect();
    edges.push((n as VertexId - 1, 0));
    graph(n, &edges)
}

/// Star whose center is `center`; the leaves are the other ids in `0..=leaves`.
pub fn star_with_center(center: VertexId, leaves: usize) -> Graph {
    let edges: Vec<_> =
        (0..=leaves as VertexId).filter(|&v| v != center).map(|v| (center, v)).collect();
    graph(leaves + 1, &edges)
}

/// Triangles {0,1,2} and {2,3,4} sharing vertex 2.
pub fn bowtie() -> Graph {
    graph(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
}

/// K4 without the edge (2,3).
pub fn diamond() -> Graph {
    graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
}

pub fn er(n: usize, p: f64, seed: u64) -> Graph {
    crate::generator::GenSpec::er(n, p, seed).generate().unwrap()
}

pub fn powerlaw(n: usize, alpha: f64, seed: u64) -> Graph {
    crate::generator::GenSpec::powerlaw(n, alpha, seed).generate().unwrap()
}

/// Every triple tested through binary search on the adjacency arrays.
pub fn brute_force(g: &Graph) -> BTreeSet<Triangle> {
    let n = g.n() as VertexId;
    let mut out = BTreeSet::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    out.insert(Triangle::new(a, b, c));
                }
            }
        }
    }
    out
}

/// Collects a stream, asserting it carries no duplicate.
pub fn collect_unique<I: IntoIterator<Item = Triangle>>(stream: I) -> BTreeSet<Triangle> {
    let all: Vec<Triangle> = stream.into_iter().collect();
    let set: BTreeSet<Triangle> = all.iter().copied().collect();
    assert_eq!(set.len(), all.len(), "stream emitted duplicates");
    set
}

pub fn set_of(triples: &[(VertexId, VertexId, VertexId)]) -> BTreeSet<Triangle> {
    triples.iter().map(|&(a, b, c)| Triangle::new(a, b, c)).collect()
}

/// Graphs covering the degenerate and hand-checked cases.
pub fn small_zoo() -> Vec<Graph> {
    let mut zoo = vec![
        Graph::empty(0),
        Graph::empty(1),
        Graph::empty(5),
        graph(2, &[(0, 1)]),
        triangle(),
        path(4),
        cycle(5),
        star_with_center(0, 6),
        bowtie(),
        diamond(),
        graph(7, &[(0, 1), (1, 2), (1, 3), (3, 4), (5, 6)]),
    ];
    zoo.extend((3..=8).map(clique));
    zoo
}
