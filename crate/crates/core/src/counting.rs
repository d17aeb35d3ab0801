//! Finding, counting and pseudo-listing.

use serde::{Deserialize, Serialize};

use crate::graph::{induced_high_degree_subgraph, Graph, VertexId};
use crate::matrix::AdjacencyMatrix;
use crate::sparse::compact_forward;
use crate::triangle::Triangle;

/// Total triangle count, optionally with the count `T[v]` of triangles
/// containing each vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleReport {
    pub total: u64,
    pub per_vertex: Option<Vec<u64>>,
}

impl TriangleReport {
    pub fn total_only(total: u64) -> Self {
        TriangleReport { total, per_vertex: None }
    }

    /// Builds a report from per-vertex counts, deriving the total.
    pub fn from_per_vertex(per_vertex: Vec<u64>) -> Self {
        let sum: u64 = per_vertex.iter().sum();
        debug_assert_eq!(sum % 3, 0);
        TriangleReport { total: sum / 3, per_vertex: Some(per_vertex) }
    }

    /// `Σ T[v] = 3·total` and `T[v] ≤ C(d(v), 2)`.
    pub fn is_consistent_with(&self, g: &Graph) -> bool {
        let Some(t) = &self.per_vertex else { return true };
        t.len() == g.n()
            && t.iter().sum::<u64>() == 3 * self.total
            && g.vertices().all(|v| {
                let d = g.degree(v) as u64;
                t[v as usize] <= d * d.saturating_sub(1) / 2
            })
    }
}

/// Diagonal of `A³`: `(A³)_vv = Σ_{u ∈ N(v)} (A²)_uv`, each `(A²)_uv`
/// being a popcount over the AND of rows `u` and `v`.
pub fn cube_diagonal(a: &AdjacencyMatrix) -> Vec<u64> {
    let n = a.n() as VertexId;
    (0..n)
        .map(|v| {
            let mut acc = 0u64;
            for (word_idx, &word) in a.row(v).iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let u = (word_idx * 64) as VertexId + bits.trailing_zeros();
                    bits &= bits - 1;
                    acc += a.common_neighbors(u, v);
                }
            }
            acc
        })
        .collect()
}

/// Counts through the matrix cube: `T[v] = (A³)_vv / 2`.
pub fn matrix_count(a: &AdjacencyMatrix) -> TriangleReport {
    let per_vertex: Vec<u64> = cube_diagonal(a).into_iter().map(|d| d / 2).collect();
    TriangleReport::from_per_vertex(per_vertex)
}

/// Degree-split pseudo-listing.
///
/// Each vertex `v` of degree at most `k` examines its neighbor pairs. A
/// triangle found there is credited to `v`, and to its high-degree corners
/// exactly once: both of them when two corners are high, otherwise the
/// single high corner only from the smaller of the two low corners. The
/// all-high triangles are counted on the induced subgraph of degree
/// above `k` with the matrix cube.
pub fn ayz_pseudo_listing(g: &Graph, a: &AdjacencyMatrix, k: usize) -> TriangleReport {
    let mut t = vec![0u64; g.n()];
    let high = |x: VertexId| g.degree(x) > k;
    for v in g.vertices().filter(|&v| !high(v)) {
        let nbrs = g.neighbors(v);
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                if !a.get(u, w) {
                    continue;
                }
                t[v as usize] += 1;
                match (high(u), high(w)) {
                    (true, true) => {
                        t[u as usize] += 1;
                        t[w as usize] += 1;
                    }
                    (true, false) if w > v => t[u as usize] += 1,
                    (false, true) if u > v => t[w as usize] += 1,
                    _ => {}
                }
            }
        }
    }
    let (sub, map) = induced_high_degree_subgraph(g, k);
    let sub_matrix = AdjacencyMatrix::new(&sub).expect("induced subgraph is no larger than the input matrix");
    for (i, d) in cube_diagonal(&sub_matrix).into_iter().enumerate() {
        t[map[i] as usize] += d / 2;
    }
    TriangleReport::from_per_vertex(t)
}

/// Folds a stream that emits each triangle once into a full report.
pub fn count_from_stream<I: IntoIterator<Item = Triangle>>(stream: I, n: usize) -> TriangleReport {
    let mut per_vertex = vec![0u64; n];
    let mut total = 0;
    for t in stream {
        total += 1;
        for x in t.vertices() {
            per_vertex[x as usize] += 1;
        }
    }
    TriangleReport { total, per_vertex: Some(per_vertex) }
}

/// Some triangle of `g`, if any: the first one compact-forward reaches.
pub fn find_any(g: &Graph) -> Option<Triangle> {
    compact_forward(g).next()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::matrix::build_matrix;

    fn report(per_vertex: &[u64]) -> TriangleReport {
        TriangleReport::from_per_vertex(per_vertex.to_vec())
    }

    #[test]
    fn matrix_examples() {
        let count = |g: &Graph| matrix_count(&build_matrix(g).unwrap());
        assert_eq!(count(&triangle()), report(&[1, 1, 1]));
        assert_eq!(count(&clique(4)), report(&[3, 3, 3, 3]));
        assert_eq!(count(&bowtie()), report(&[1, 1, 2, 1, 1]));
        assert_eq!(count(&bowtie()).total, 2);
    }

    #[test]
    fn cube_diagonal_is_even_and_trace_divisible_by_six() {
        for g in small_zoo().into_iter().chain((0..10).map(|s| er(40, 0.4, s))) {
            let d = cube_diagonal(&build_matrix(&g).unwrap());
            assert!(d.iter().all(|x| x % 2 == 0));
            let trace: u64 = d.iter().sum();
            assert_eq!(trace, 6 * brute_force(&g).len() as u64);
        }
    }

    #[test]
    fn pseudo_listing_examples() {
        let run = |g: &Graph, k| ayz_pseudo_listing(g, &build_matrix(g).unwrap(), k);
        assert_eq!(run(&bowtie(), 2), report(&[1, 1, 2, 1, 1]));
        assert_eq!(run(&clique(4), 0), report(&[3, 3, 3, 3]));
        assert_eq!(run(&clique(4), 5), report(&[3, 3, 3, 3]));
    }

    #[test]
    fn pseudo_listing_matches_matrix_for_every_threshold() {
        let mut graphs = small_zoo();
        graphs.extend((0..8).map(|s| er(30, 0.35, s)));
        graphs.extend((0..4).map(|s| powerlaw(120, 2.1, s)));
        for g in graphs {
            let a = build_matrix(&g).unwrap();
            let expected = matrix_count(&a);
            assert!(expected.is_consistent_with(&g));
            for k in 0..=g.max_degree() + 1 {
                assert_eq!(ayz_pseudo_listing(&g, &a, k), expected, "k = {k}");
            }
        }
    }

    #[test]
    fn stream_fold_examples() {
        let r = count_from_stream([Triangle::new(0, 1, 2)], 3);
        assert_eq!(r, report(&[1, 1, 1]));
        assert_eq!(count_from_stream(std::iter::empty(), 5), report(&[0; 5]));
        let g = bowtie();
        assert_eq!(count_from_stream(compact_forward(&g), g.n()), matrix_count(&build_matrix(&g).unwrap()));
    }

    #[test]
    fn find_any_examples() {
        assert_eq!(find_any(&path(5)), None);
        let k4 = clique(4);
        let t = find_any(&k4).unwrap();
        assert!(brute_force(&k4).contains(&t));
        assert_eq!(find_any(&triangle()), Some(Triangle::new(0, 1, 2)));
    }

    #[test]
    fn find_any_is_none_iff_no_triangle() {
        for g in small_zoo().into_iter().chain((0..20).map(|s| er(12, 0.2, s))) {
            let total = matrix_count(&build_matrix(&g).unwrap()).total;
            assert_eq!(find_any(&g).is_none(), total == 0);
        }
    }
}
