//! Name-addressable registry of every algorithm, used by the CLI and by
//! the threshold sweep.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::analysis::{k_formula, KRule};
use crate::counting::{ayz_pseudo_listing, count_from_stream, matrix_count, TriangleReport};
use crate::dense::{edge_iterator, list_direct, vertex_iterator};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::AdjacencyMatrix;
use crate::sparse::{
    ayz_listing, compact_forward, compact_forward_in_place, forward, new_listing,
    new_listing_constant_space, tree_listing,
};
use crate::TriangleStream;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Direct,
    VertexIterator,
    EdgeIterator,
    TreeListing,
    AyzListing,
    Forward,
    CompactForward,
    NewListing,
    NewListingConstantSpace,
    /// Counting only: diagonal of the matrix cube.
    Matrix,
    /// Counting only: degree-split pseudo-listing.
    AyzPseudoListing,
}

impl Algorithm {
    pub const ALL: [Algorithm; 11] = [
        Algorithm::Direct,
        Algorithm::VertexIterator,
        Algorithm::EdgeIterator,
        Algorithm::TreeListing,
        Algorithm::AyzListing,
        Algorithm::Forward,
        Algorithm::CompactForward,
        Algorithm::NewListing,
        Algorithm::NewListingConstantSpace,
        Algorithm::Matrix,
        Algorithm::AyzPseudoListing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Direct => "direct",
            Algorithm::VertexIterator => "vertex-iterator",
            Algorithm::EdgeIterator => "edge-iterator",
            Algorithm::TreeListing => "tree-listing",
            Algorithm::AyzListing => "ayz-listing",
            Algorithm::Forward => "forward",
            Algorithm::CompactForward => "compact-forward",
            Algorithm::NewListing => "new-listing",
            Algorithm::NewListingConstantSpace => "new-listing-constant-space",
            Algorithm::Matrix => "matrix",
            Algorithm::AyzPseudoListing => "ayz-pseudo-listing",
        }
    }

    /// Takes a degree threshold `K`.
    pub fn takes_k(self) -> bool {
        matches!(
            self,
            Algorithm::AyzListing
                | Algorithm::NewListing
                | Algorithm::NewListingConstantSpace
                | Algorithm::AyzPseudoListing
        )
    }

    /// Reads the adjacency matrix.
    pub fn needs_matrix(self) -> bool {
        matches!(
            self,
            Algorithm::Direct
                | Algorithm::VertexIterator
                | Algorithm::TreeListing
                | Algorithm::AyzListing
                | Algorithm::Matrix
                | Algorithm::AyzPseudoListing
        )
    }

    /// Produces a triangle stream (as opposed to counts only).
    pub fn lists(self) -> bool {
        !matches!(self, Algorithm::Matrix | Algorithm::AyzPseudoListing)
    }

    /// Triangle stream over `g`. Tree-listing clears the bits of `matrix`.
    pub fn list<'a>(
        self,
        g: &'a Graph,
        matrix: Option<&'a mut AdjacencyMatrix>,
        k: usize,
    ) -> Result<TriangleStream<'a>> {
        if self == Algorithm::CompactForward {
            return Ok(Box::new(compact_forward(g)));
        }
        self.stream(g, matrix, k)
    }

    /// As [`list`](Self::list), but compact-forward sorts `g` in place
    /// (restored when the stream is dropped) instead of copying it.
    pub fn list_in_place<'a>(
        self,
        g: &'a mut Graph,
        matrix: Option<&'a mut AdjacencyMatrix>,
        k: usize,
    ) -> Result<TriangleStream<'a>> {
        if self == Algorithm::CompactForward {
            return Ok(Box::new(compact_forward_in_place(g)));
        }
        self.stream(g, matrix, k)
    }

    fn stream<'a>(
        self,
        g: &'a Graph,
        matrix: Option<&'a mut AdjacencyMatrix>,
        k: usize,
    ) -> Result<TriangleStream<'a>> {
        if !self.lists() {
            return Err(Error::Usage(format!("{self} counts triangles but does not list them")));
        }
        let missing = || Error::Usage(format!("{self} needs the adjacency matrix"));
        Ok(match self {
            Algorithm::EdgeIterator => Box::new(edge_iterator(g)),
            Algorithm::Forward => Box::new(forward(g)),
            Algorithm::CompactForward => Box::new(compact_forward(g)),
            Algorithm::NewListing => Box::new(new_listing(g, k)),
            Algorithm::NewListingConstantSpace => Box::new(new_listing_constant_space(g, k)),
            Algorithm::TreeListing => Box::new(tree_listing(g, matrix.ok_or_else(missing)?)),
            _ => {
                let a: &'a AdjacencyMatrix = matrix.ok_or_else(missing)?;
                match self {
                    Algorithm::Direct => Box::new(list_direct(a)),
                    Algorithm::VertexIterator => Box::new(vertex_iterator(g, a)),
                    Algorithm::AyzListing => Box::new(ayz_listing(g, a, k)),
                    _ => unreachable!("{self} handled above"),
                }
            }
        })
    }

    /// Full report (total and per-vertex counts). Listers are folded through
    /// [`count_from_stream`]; tree-listing works on a copy of `matrix`.
    pub fn report(self, g: &Graph, matrix: Option<&AdjacencyMatrix>, k: usize) -> Result<TriangleReport> {
        let missing = || Error::Usage(format!("{self} needs the adjacency matrix"));
        match self {
            Algorithm::Matrix => Ok(matrix_count(matrix.ok_or_else(missing)?)),
            Algorithm::AyzPseudoListing => Ok(ayz_pseudo_listing(g, matrix.ok_or_else(missing)?, k)),
            Algorithm::TreeListing => {
                let mut copy = matrix.ok_or_else(missing)?.clone();
                Ok(count_from_stream(tree_listing(g, &mut copy), g.n()))
            }
            _ => {
                let mut copy = matrix.cloned();
                let stream = self.list(g, copy.as_mut(), k)?;
                Ok(count_from_stream(stream, g.n()))
            }
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL.into_iter().find(|a| a.name() == s).ok_or_else(|| {
            let names: Vec<_> = Algorithm::ALL.iter().map(|a| a.name()).collect();
            Error::Usage(format!("unknown algorithm {s:?} (expected one of {})", names.join(", ")))
        })
    }
}

/// How the degree threshold `K` is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KPolicy {
    Fixed(usize),
    Auto(KRule),
}

impl Default for KPolicy {
    fn default() -> Self {
        KPolicy::Auto(KRule::SqrtM)
    }
}

impl KPolicy {
    pub fn resolve(self, g: &Graph, alpha: Option<f64>, omega: f64) -> Result<usize> {
        match self {
            KPolicy::Fixed(k) => Ok(k),
            KPolicy::Auto(rule) => k_formula(rule, g.n(), g.m(), alpha, omega),
        }
    }
}

/// `INT` or `auto:RULE`.
impl FromStr for KPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(rule) = s.strip_prefix("auto:") {
            return Ok(KPolicy::Auto(rule.parse()?));
        }
        if s == "auto" {
            return Ok(KPolicy::default());
        }
        s.parse()
            .map(KPolicy::Fixed)
            .map_err(|_| Error::Usage(format!("--k expects an integer or auto:RULE, got {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::matrix::build_matrix;

    #[test]
    fn names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
        assert!("quick".parse::<Algorithm>().is_err());
    }

    #[test]
    fn every_algorithm_reports_the_same() {
        let g = er(30, 0.3, 5);
        let a = build_matrix(&g).unwrap();
        let expected = matrix_count(&a);
        for algo in Algorithm::ALL {
            assert_eq!(algo.report(&g, Some(&a), 3).unwrap(), expected, "{algo}");
        }
    }

    #[test]
    fn in_place_listing_restores_graph() {
        let g = er(30, 0.3, 5);
        let mut h = g.clone();
        let n = Algorithm::CompactForward.list_in_place(&mut h, None, 0).unwrap().count();
        assert_eq!(n as u64, matrix_count(&build_matrix(&g).unwrap()).total);
        assert_eq!(h, g);
    }

    #[test]
    fn matrix_algorithms_require_matrix() {
        let g = triangle();
        assert!(Algorithm::Direct.list(&g, None, 0).is_err());
        assert!(Algorithm::Matrix.list(&g, None, 0).is_err());
        assert!(Algorithm::Matrix.report(&g, None, 0).is_err());
    }

    #[test]
    fn k_policy_parsing() {
        assert_eq!("12".parse::<KPolicy>().unwrap(), KPolicy::Fixed(12));
        assert_eq!("auto:powerlaw".parse::<KPolicy>().unwrap(), KPolicy::Auto(KRule::PowerLaw));
        assert_eq!("auto".parse::<KPolicy>().unwrap(), KPolicy::Auto(KRule::SqrtM));
        assert!("auto:nope".parse::<KPolicy>().is_err());
        assert!("-3".parse::<KPolicy>().is_err());
    }
}
