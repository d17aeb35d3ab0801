use crate::graph::{DegreeOrdering, Graph, VertexId};
use crate::triangle::Triangle;

/// Forward listing.
///
/// Vertices are visited by increasing rank in the degree ordering. For
/// each edge `(v, u)` with `u` ranked after `v`, the common members of
/// `A[u]` and `A[v]` close a triangle, then `v` joins `A[u]`. Sets hold
/// ranks and stay sorted because ranks are appended in increasing order.
///
/// Auxiliary space is `Θ(m)`: one set entry per edge.
pub fn forward(g: &Graph) -> Forward<'_> {
    let ord = DegreeOrdering::new(g);
    let n = g.n();
    Forward {
        g,
        bound: super::ceil_sqrt(2 * g.m()),
        ord,
        sets: vec![Vec::new(); n],
        largest_set: 0,
        v: 0,
        pos: 0,
        current: None,
    }
}

#[derive(Debug)]
pub struct Forward<'a> {
    g: &'a Graph,
    ord: DegreeOrdering,
    sets: Vec<Vec<VertexId>>,
    bound: usize,
    largest_set: usize,
    v: VertexId,
    pos: usize,
    current: Option<(VertexId, usize, usize)>,
}

impl Forward<'_> {
    /// Largest `|A[x]|` reached so far.
    pub fn max_set_len(&self) -> usize {
        self.largest_set
    }
}

impl Iterator for Forward<'_> {
    type Item = Triangle;

    fn next(&mut self) -> Option<Triangle> {
        let n = self.g.n() as VertexId;
        loop {
            if let Some((u, mut i, mut j)) = self.current {
                let (au, av) = (&self.sets[u as usize], &self.sets[self.v as usize]);
                while i < au.len() && j < av.len() {
                    let (x, y) = (au[i], av[j]);
                    if x < y {
                        i += 1;
                    } else if x > y {
                        j += 1;
                    } else {
                        self.current = Some((u, i + 1, j + 1));
                        let ord = &self.ord;
                        return Some(Triangle::new(ord.vertex(u), ord.vertex(self.v), ord.vertex(x)));
                    }
                }
                let set = &mut self.sets[u as usize];
                set.push(self.v);
                self.largest_set = self.largest_set.max(set.len());
                debug_assert!(set.len() <= self.bound, "|A[x]| exceeds ceil(sqrt(2m))");
                self.current = None;
            }
            if self.v >= n {
                return None;
            }
            let nbrs = self.g.neighbors(self.ord.vertex(self.v));
            while self.pos < nbrs.len() {
                let u = self.ord.eta(nbrs[self.pos]);
                self.pos += 1;
                if u > self.v {
                    self.current = Some((u, 0, 0));
                    break;
                }
            }
            if self.current.is_none() {
                self.v += 1;
                self.pos = 0;
            }
        }
    }
}
