use serde::{Deserialize, Serialize};

use crate::counting::TriangleReport;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClusteringReport {
    /// `None` for vertices of degree below 2.
    pub per_vertex: Vec<Option<f64>>,
    /// Mean over vertices of degree at least 2; `None` if there are none.
    pub average: Option<f64>,
}

fn pairs(d: usize) -> u64 {
    let d = d as u64;
    d * d.saturating_sub(1) / 2
}

/// `cc(v) = T[v] / C(d(v), 2)` for every vertex of degree at least 2.
pub fn clustering_coefficients(g: &Graph, r: &TriangleReport) -> Result<ClusteringReport> {
    let t = r
        .per_vertex
        .as_ref()
        .ok_or_else(|| Error::Usage("clustering needs per-vertex triangle counts".into()))?;
    if t.len() != g.n() {
        return Err(Error::Usage(format!("report covers {} vertices, graph has {}", t.len(), g.n())));
    }
    let per_vertex: Vec<Option<f64>> = g
        .vertices()
        .map(|v| {
            let d = g.degree(v);
            (d >= 2).then(|| t[v as usize] as f64 / pairs(d) as f64)
        })
        .collect();
    let defined: Vec<f64> = per_vertex.iter().flatten().copied().collect();
    let average = (!defined.is_empty()).then(|| defined.iter().sum::<f64>() / defined.len() as f64);
    Ok(ClusteringReport { per_vertex, average })
}

/// `3·N_Δ / N_∨` with `N_∨ = Σ_v C(d(v), 2)`.
pub fn transitivity(g: &Graph, total: u64) -> Result<f64> {
    let wedges: u64 = g.vertices().map(|v| pairs(g.degree(v))).sum();
    if wedges == 0 {
        return Err(Error::UndefinedStatistic("transitivity"));
    }
    Ok(3.0 * total as f64 / wedges as f64)
}

/// Number of vertices of each degree; index `k` holds the count for degree `k`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct DegreeHistogram {
    counts: Vec<u64>,
}

impl DegreeHistogram {
    pub fn from_counts(mut counts: Vec<u64>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        DegreeHistogram { counts }
    }

    pub fn count(&self, k: usize) -> u64 {
        self.counts.get(k).copied().unwrap_or(0)
    }

    /// `(k, count)` for every degree that occurs.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts.iter().enumerate().filter(|(_, &c)| c > 0).map(|(k, &c)| (k, c))
    }

    pub fn vertex_count(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `Σ_k k·count(k)`, which is `2m` for a histogram of a graph.
    pub fn degree_sum(&self) -> u64 {
        self.iter().map(|(k, c)| k as u64 * c).sum()
    }
}

pub fn degree_distribution(g: &Graph) -> DegreeHistogram {
    let mut counts = vec![0u64; g.max_degree() + 1];
    for v in g.vertices() {
        counts[g.degree(v)] += 1;
    }
    DegreeHistogram::from_counts(counts)
}

/// Power-law exponent from an ordinary least-squares line through
/// `(ln k, ln P(d ≥ k))` over the degrees `k ≥ 1` that occur. The model
/// has `P(d ≥ k) = k^{1-α}`, so `α = 1 + |slope|`.
///
/// Points whose tail holds fewer than `√N` vertices are left out (at least
/// two points are always kept): a finite histogram loses the mass beyond
/// its largest degree, which bends the far end of the CCDF downward.
pub fn fit_alpha(h: &DegreeHistogram) -> Result<f64> {
    let observed: Vec<(usize, u64)> = h.iter().filter(|&(k, _)| k >= 1).collect();
    if observed.len() < 2 {
        return Err(Error::UndefinedFit("needs at least two distinct positive degrees"));
    }
    let total: u64 = observed.iter().map(|&(_, c)| c).sum();
    let mut at_least = total;
    let mut points = Vec::with_capacity(observed.len());
    let floor = (total as f64).sqrt();
    for &(k, c) in &observed {
        if points.len() >= 2 && (at_least as f64) < floor {
            break;
        }
        points.push(((k as f64).ln(), (at_least as f64 / total as f64).ln()));
        at_least -= c;
    }
    let len = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / len;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / len;
    let sxy: f64 = points.iter().map(|(x, y)| (x - mean_x) * (y - mean_y)).sum();
    let sxx: f64 = points.iter().map(|(x, _)| (x - mean_x).powi(2)).sum();
    Ok(1.0 + (sxy / sxx).abs())
}
