use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::VertexId;

/// Three pairwise adjacent vertices, stored in canonical order `a < b < c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Triangle {
    pub a: VertexId,
    pub b: VertexId,
    pub c: VertexId,
}

impl Triangle {
    /// Builds the canonical triangle on `{x, y, z}`. The three ids must be distinct.
    #[inline]
    pub fn new(x: VertexId, y: VertexId, z: VertexId) -> Self {
        debug_assert!(x != y && y != z && x != z, "degenerate triangle {x} {y} {z}");
        let (x, y) = if x < y { (x, y) } else { (y, x) };
        let (y, z) = if y < z { (y, z) } else { (z, y) };
        let (x, y) = if x < y { (x, y) } else { (y, x) };
        Triangle { a: x, b: y, c: z }
    }

    pub fn vertices(&self) -> [VertexId; 3] {
        [self.a, self.b, self.c]
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.a == v || self.b == v || self.c == v
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.a, self.b, self.c)
    }
}
