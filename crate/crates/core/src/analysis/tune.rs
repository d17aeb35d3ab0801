use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::algo::Algorithm;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::AdjacencyMatrix;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KSweepRow {
    pub k: usize,
    /// Vertices of degree above `k` in the graph.
    pub high_degree_vertices: usize,
    /// Fastest of the repeated runs.
    pub millis: f64,
    pub total: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KSweepResult {
    pub algorithm: Algorithm,
    pub repeat: usize,
    pub rows: Vec<KSweepRow>,
    pub best_k: usize,
}

impl KSweepResult {
    pub fn best(&self) -> &KSweepRow {
        self.rows.iter().find(|r| r.k == self.best_k).expect("best K is one of the rows")
    }

    /// `K<TAB>n_K<TAB>millis` rows, one per candidate.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            writeln!(out, "{}\t{}\t{:.3}", r.k, r.high_degree_vertices, r.millis).unwrap();
        }
        out
    }
}

/// Powers of two below `d_max + 1`, preceded by 0 and followed by
/// `d_max + 1` (the pure low-degree regime).
pub fn default_k_ladder(g: &Graph) -> Vec<usize> {
    let top = g.max_degree() + 1;
    let mut ks = vec![0];
    ks.extend(std::iter::successors(Some(1usize), |k| k.checked_mul(2)).take_while(|&k| k < top));
    ks.push(top);
    ks
}

/// Runs `algorithm` once per candidate threshold (best of `repeat` runs,
/// interleaved across candidates) and records wall time and the number of
/// high-degree vertices. Every run must report the same triangle total.
pub fn tune_k(g: &Graph, algorithm: Algorithm, candidates: &[usize], repeat: usize) -> Result<KSweepResult> {
    if !algorithm.takes_k() {
        return Err(Error::Usage(format!("{algorithm} has no degree threshold to tune")));
    }
    if candidates.is_empty() {
        return Err(Error::Usage("no candidate thresholds".into()));
    }
    let repeat = repeat.max(1);
    let mut ks = candidates.to_vec();
    ks.sort_unstable();
    ks.dedup();

    let matrix = if algorithm.needs_matrix() { Some(AdjacencyMatrix::new(g)?) } else { None };
    let mut degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    degrees.sort_unstable();

    // Repeats go round-robin over the candidates, so a slow stretch of the
    // machine does not land on a single K.
    let mut best = vec![f64::INFINITY; ks.len()];
    let mut totals: Vec<Option<u64>> = vec![None; ks.len()];
    for _ in 0..repeat {
        for (i, &k) in ks.iter().enumerate() {
            let mut copy = matrix.clone();
            let start = Instant::now();
            let count = match algorithm {
                Algorithm::AyzPseudoListing => algorithm.report(g, matrix.as_ref(), k)?.total,
                _ => algorithm.list(g, copy.as_mut(), k)?.count() as u64,
            };
            best[i] = best[i].min(start.elapsed().as_secs_f64() * 1e3);
            if *totals[i].get_or_insert(count) != count {
                return Err(Error::Consistency(format!("{algorithm} at K = {k} is not deterministic")));
            }
        }
    }

    let mut rows = Vec::with_capacity(ks.len());
    for (i, k) in ks.into_iter().enumerate() {
        let total = totals[i].unwrap();
        let high_degree_vertices = degrees.len() - degrees.partition_point(|&d| d <= k);
        log::debug!("{algorithm} K={k}: {total} triangles in {:.3} ms", best[i]);
        rows.push(KSweepRow { k, high_degree_vertices, millis: best[i], total });
    }

    if let Some(bad) = rows.iter().find(|r| r.total != rows[0].total) {
        return Err(Error::Consistency(format!(
            "{algorithm} found {} triangles at K = {} but {} at K = {}",
            rows[0].total, rows[0].k, bad.total, bad.k
        )));
    }
    let best_k = rows.iter().min_by(|a, b| a.millis.total_cmp(&b.millis)).unwrap().k;
    Ok(KSweepResult { algorithm, repeat, rows, best_k })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;

    #[test]
    fn k4_sweep() {
        let r = tune_k(&clique(4), Algorithm::NewListing, &[4, 0, 2], 1).unwrap();
        assert_eq!(r.rows.iter().map(|r| r.k).collect::<Vec<_>>(), vec![0, 2, 4]);
        assert!(r.rows.iter().all(|r| r.total == 4));
        assert_eq!(r.rows.iter().map(|r| r.high_degree_vertices).collect::<Vec<_>>(), vec![4, 4, 0]);
        let best = r.best().millis;
        assert!(r.rows.iter().all(|row| row.millis >= best));
    }

    #[test]
    fn every_threshold_algorithm_sweeps() {
        let g = er(40, 0.3, 2);
        for algo in Algorithm::ALL.into_iter().filter(|a| a.takes_k()) {
            let r = tune_k(&g, algo, &default_k_ladder(&g), 2).unwrap();
            assert_eq!(r.rows.len(), default_k_ladder(&g).len());
        }
    }

    #[test]
    fn rejects_bad_requests() {
        assert!(matches!(tune_k(&clique(4), Algorithm::NewListing, &[], 1), Err(Error::Usage(_))));
        assert!(matches!(tune_k(&clique(4), Algorithm::Forward, &[1], 1), Err(Error::Usage(_))));
    }

    #[test]
    fn ladder_ends_in_pure_low_degree_regime() {
        let g = star_with_center(0, 20);
        assert_eq!(default_k_ladder(&g), vec![0, 1, 2, 4, 8, 16, 21]);
        assert_eq!(default_k_ladder(&Graph::empty(3)), vec![0, 1]);
    }

    #[test]
    fn tsv_layout() {
        let r = KSweepResult {
            algorithm: Algorithm::NewListing,
            repeat: 1,
            rows: vec![KSweepRow { k: 3, high_degree_vertices: 7, millis: 1.5, total: 2 }],
            best_k: 3,
        };
        assert_eq!(r.to_tsv(), "3\t7\t1.500\n");
    }
}
