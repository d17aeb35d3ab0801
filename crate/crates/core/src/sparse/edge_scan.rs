use crate::graph::{Graph, VertexId};
use crate::merge::above;

/// Resumable edge-iterator over a graph the cursor does not borrow.
///
/// Yields `(u, v, w)` with `u < v < w` for every triangle of the graph it
/// is stepped with, so it can walk a graph owned by the same struct.
#[derive(Debug, Clone, Default)]
pub(crate) struct EdgeScan {
    u: usize,
    pos: usize,
    merge: Option<(usize, usize)>,
}

impl EdgeScan {
    pub(crate) fn next(&mut self, g: &Graph) -> Option<(VertexId, VertexId, VertexId)> {
        while self.u < g.n() {
            let u = self.u as VertexId;
            let nu = g.neighbors(u);
            if let Some((mut i, mut j)) = self.merge {
                let v = nu[self.pos];
                let nv = g.neighbors(v);
                while i < nu.len() && j < nv.len() {
                    let (x, y) = (nu[i], nv[j]);
                    if x < y {
                        i += 1;
                    } else if x > y {
                        j += 1;
                    } else {
                        self.merge = Some((i + 1, j + 1));
                        return Some((u, v, x));
                    }
                }
                self.merge = None;
                self.pos += 1;
                continue;
            }
            if self.pos == 0 {
                self.pos = nu.partition_point(|&x| x <= u);
            }
            if self.pos < nu.len() {
                let v = nu[self.pos];
                let i = nu.len() - above(nu, v).len();
                let nv = g.neighbors(v);
                let j = nv.len() - above(nv, v).len();
                self.merge = Some((i, j));
            } else {
                self.u += 1;
                self.pos = 0;
            }
        }
        None
    }
}
