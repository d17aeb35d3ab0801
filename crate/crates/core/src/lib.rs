//! Triangle finding, counting, pseudo-listing and listing for undirected
//! simple graphs stored as sorted adjacency arrays.
//!
//! The crate is organised by problem:
//!
//! - [`graph`] and [`matrix`]: the two input encodings (sorted adjacency
//!   arrays and a packed boolean adjacency matrix), loaders and reordering.
//! - [`dense`]: direct triple testing, vertex-iterator and edge-iterator.
//! - [`sparse`]: the `O(m^{3/2})` listers (tree-listing, AYZ listing,
//!   forward, compact-forward, new-listing and its constant-space variant).
//! - [`counting`]: matrix-cube counting, AYZ pseudo-listing and stream folds.
//! - [`analysis`]: clustering, transitivity, degree statistics, the
//!   continuous power-law model, threshold formulas and the threshold sweep.
//! - [`generator`]: seeded test graphs.
//!
//! Every lister returns a pull-based iterator of canonical [`Triangle`]s
//! that emits each triangle of the graph exactly once.

pub mod algo;
pub mod alloc;
pub mod analysis;
pub mod counting;
pub mod dense;
mod error;
pub mod generator;
pub mod graph;
mod merge;
pub mod matrix;
pub mod sparse;
mod triangle;

pub use algo::Algorithm;
pub use counting::TriangleReport;
pub use error::{Error, Result};
pub use graph::{DegreeOrdering, Graph, VertexId};
pub use matrix::AdjacencyMatrix;
pub use triangle::Triangle;

/// A boxed triangle stream, as returned by [`Algorithm::list`].
pub type TriangleStream<'a> = Box<dyn Iterator<Item = Triangle> + 'a>;

#[cfg(test)]
pub(crate) mod fixtures;
