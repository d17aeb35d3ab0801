//! Graphs shared by the benchmarks.

use trilist::generator::GenSpec;
use trilist::Graph;

/// Power-law graphs of growing size, all with α = 2.5.
pub fn powerlaw_ladder() -> Vec<(usize, Graph)> {
    [10_000, 30_000, 100_000]
        .into_iter()
        .map(|n| (n, GenSpec::powerlaw(n, 2.5, 1).generate().expect("valid spec")))
        .collect()
}

/// Small dense graph the matrix-based methods can afford.
pub fn dense_er() -> Graph {
    GenSpec::er(1_000, 0.05, 1).generate().expect("valid spec")
}

/// Power-law graph with a hub of degree at least 500, the setting of the
/// K sweep.
pub fn hub_graph() -> Graph {
    (1..)
        .map(|seed| GenSpec::powerlaw(100_000, 2.5, seed).generate().expect("valid spec"))
        .find(|g| g.max_degree() >= 500)
        .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hub_graph_has_a_hub() {
        assert!(hub_graph().max_degree() >= 500);
    }
}
