use crate::graph::{Graph, VertexId};
use crate::triangle::Triangle;

/// Resumable walk over the paths `v - u - w` with `u ∈ N(v)`, `w ∈ N(u)`.
#[derive(Debug, Clone, Copy, Default)]
struct PathScan {
    ui: usize,
    wi: usize,
}

impl PathScan {
    #[inline]
    fn next(
        &mut self,
        g: &Graph,
        v: VertexId,
        mut closes: impl FnMut(VertexId) -> bool,
    ) -> Option<(VertexId, VertexId)> {
        let nv = g.neighbors(v);
        while self.ui < nv.len() {
            let u = nv[self.ui];
            let nu = g.neighbors(u);
            while self.wi < nu.len() {
                let w = nu[self.wi];
                self.wi += 1;
                if closes(w) {
                    return Some((u, w));
                }
            }
            self.ui += 1;
            self.wi = 0;
        }
        None
    }
}

/// Every triangle containing `v`, using `marks` as row `v` of the
/// adjacency matrix. `Θ(Σ_{u ∈ N(v)} d(u)) ⊆ O(m)` time.
///
/// Each triangle `{v, u, w}` is found from both `u` and `w`, so it is
/// emitted twice. `marks` must be all false on entry; it is all false
/// again once the iterator is dropped.
pub fn new_vertex_listing<'a>(
    g: &'a Graph,
    v: VertexId,
    marks: &'a mut [bool],
) -> NewVertexListing<'a> {
    for &u in g.neighbors(v) {
        marks[u as usize] = true;
    }
    NewVertexListing { g, v, marks, scan: PathScan::default() }
}

#[derive(Debug)]
pub struct NewVertexListing<'a> {
    g: &'a Graph,
    v: VertexId,
    marks: &'a mut [bool],
    scan: PathScan,
}

impl Iterator for NewVertexListing<'_> {
    type Item = Triangle;

    fn next(&mut self) -> Option<Triangle> {
        let marks = &*self.marks;
        let (u, w) = self.scan.next(self.g, self.v, |w| marks[w as usize])?;
        Some(Triangle::new(self.v, u, w))
    }
}

impl Drop for NewVertexListing<'_> {
    fn drop(&mut self) {
        for &u in self.g.neighbors(self.v) {
            self.marks[u as usize] = false;
        }
    }
}

/// Split listing with `Θ(n)` auxiliary space.
///
/// Vertices of degree above `k` list their triangles through marked
/// neighborhoods. A triangle is kept there only from its largest
/// high-degree vertex `v`, in the orientation whose middle vertex `u` is
/// high-degree when two or three corners are high. Triangles with at most
/// one high-degree corner come from the edge between low-degree corners,
/// and an all-low triangle only from its two smallest corners.
pub fn new_listing(g: &Graph, k: usize) -> NewListing<'_> {
    NewListing::start(g, k, Some(vec![false; g.n()]))
}

/// [`new_listing`] with the mark array replaced by binary search in `N(v)`,
/// using constant auxiliary space.
pub fn new_listing_constant_space(g: &Graph, k: usize) -> NewListing<'_> {
    NewListing::start(g, k, None)
}

#[derive(Debug)]
pub struct NewListing<'a> {
    g: &'a Graph,
    k: usize,
    marks: Option<Vec<bool>>,
    v: usize,
    high_done: bool,
    marked: bool,
    scan: PathScan,
    pos: usize,
    merge: Option<(usize, usize)>,
}

impl<'a> NewListing<'a> {
    fn start(g: &'a Graph, k: usize, marks: Option<Vec<bool>>) -> Self {
        NewListing {
            g,
            k,
            marks,
            v: 0,
            high_done: false,
            marked: false,
            scan: PathScan::default(),
            pos: 0,
            merge: None,
        }
    }

    #[inline]
    fn high(&self, x: VertexId) -> bool {
        self.g.degree(x) > self.k
    }

    fn set_marks(&mut self, v: VertexId, value: bool) {
        if let Some(marks) = self.marks.as_mut() {
            for &u in self.g.neighbors(v) {
                marks[u as usize] = value;
            }
        }
    }

    fn high_degree_next(&mut self) -> Option<Triangle> {
        let g = self.g;
        while self.v < g.n() {
            let v = self.v as VertexId;
            if self.high(v) {
                if !self.marked {
                    self.set_marks(v, true);
                    self.marked = true;
                    self.scan = PathScan::default();
                }
                let marks = self.marks.as_deref();
                let closes = |w: VertexId| match marks {
                    Some(marks) => marks[w as usize],
                    None => g.has_edge(v, w),
                };
                let k = self.k;
                let high = |x: VertexId| g.degree(x) > k;
                while let Some((u, w)) = self.scan.next(g, v, closes) {
                    let keep = match (high(u), high(w)) {
                        (true, true) => v > u && u > w,
                        (true, false) => v > u,
                        // Mirror of (true, false), or left to the edge pass.
                        (false, _) => false,
                    };
                    if keep {
                        return Some(Triangle::new(v, u, w));
                    }
                }
                self.set_marks(v, false);
                self.marked = false;
            }
            self.v += 1;
        }
        None
    }

    fn low_degree_next(&mut self) -> Option<Triangle> {
        let g = self.g;
        while self.v < g.n() {
            let v = self.v as VertexId;
            if !self.high(v) {
                let nv = g.neighbors(v);
                loop {
                    if let Some((mut i, mut j)) = self.merge {
                        let u = nv[self.pos];
                        let nu = g.neighbors(u);
                        while i < nu.len() && j < nv.len() {
                            let (x, y) = (nu[i], nv[j]);
                            if x < y {
                                i += 1;
                            } else if x > y {
                                j += 1;
                            } else {
                                i += 1;
                                j += 1;
                                if self.high(x) || x > v {
                                    self.merge = Some((i, j));
                                    return Some(Triangle::new(u, v, x));
                                }
                            }
                        }
                        self.merge = None;
                        self.pos += 1;
                    }
                    // Neighbors below v, both endpoints of low degree.
                    while self.pos < nv.len() && nv[self.pos] < v && self.high(nv[self.pos]) {
                        self.pos += 1;
                    }
                    if self.pos < nv.len() && nv[self.pos] < v {
                        self.merge = Some((0, 0));
                    } else {
                        break;
                    }
                }
            }
            self.v += 1;
            self.pos = 0;
        }
        None
    }
}

impl Iterator for NewListing<'_> {
    type Item = Triangle;

    fn next(&mut self) -> Option<Triangle> {
        if !self.high_done {
            if let Some(t) = self.high_degree_next() {
                return Some(t);
            }
            self.high_done = true;
            self.v = 0;
            self.pos = 0;
        }
        self.low_degree_next()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::sparse::compact_forward;

    #[test]
    fn vertex_listing_examples() {
        let mut marks = vec![false; 8];
        let g = bowtie();
        let set: std::collections::BTreeSet<_> = new_vertex_listing(&g, 2, &mut marks).collect();
        assert_eq!(set, set_of(&[(0, 1, 2), (2, 3, 4)]));
        assert!(marks.iter().all(|&m| !m));

        let star = star_with_center(0, 5);
        assert_eq!(new_vertex_listing(&star, 0, &mut marks).count(), 0);

        let k4 = clique(4);
        let set: std::collections::BTreeSet<_> = new_vertex_listing(&k4, 0, &mut marks).collect();
        assert_eq!(set, set_of(&[(0, 1, 2), (0, 1, 3), (0, 2, 3)]));
        assert!(marks.iter().all(|&m| !m));
    }

    #[test]
    fn marks_are_reset_after_every_call() {
        let g = er(40, 0.3, 11);
        let mut marks = vec![false; g.n()];
        for v in g.vertices() {
            let found = new_vertex_listing(&g, v, &mut marks).count();
            assert_eq!(found % 2, 0);
            assert!(marks.iter().all(|&m| !m), "marks left set after v = {v}");
        }
    }

    #[test]
    fn threshold_examples() {
        let both = set_of(&[(0, 1, 2), (2, 3, 4)]);
        assert_eq!(collect_unique(new_listing(&bowtie(), 2)), both);
        assert_eq!(collect_unique(new_listing(&bowtie(), 10)), both);
        let k4 = brute_force(&clique(4));
        for k in [0, 2, 3] {
            assert_eq!(collect_unique(new_listing(&clique(4), k)), k4);
        }
        for k in [0, 1, 3, 9] {
            assert_eq!(collect_unique(new_listing_constant_space(&clique(4), k)), k4);
        }
        assert_eq!(
            collect_unique(new_listing_constant_space(&diamond(), 2)),
            set_of(&[(0, 1, 2), (0, 1, 3)])
        );
    }

    #[test]
    fn every_threshold_matches_oracle() {
        let mut graphs = small_zoo();
        graphs.extend((0..8).map(|s| er(30, 0.3, s)));
        graphs.extend((0..4).map(|s| powerlaw(90, 2.2, s)));
        for g in graphs {
            let oracle = brute_force(&g);
            for k in 0..=g.max_degree() + 1 {
                assert_eq!(collect_unique(new_listing(&g, k)), oracle, "k = {k}");
                assert_eq!(collect_unique(new_listing_constant_space(&g, k)), oracle, "k = {k}");
            }
        }
    }

    #[test]
    fn constant_space_matches_compact_forward_on_powerlaw() {
        let g = powerlaw(512, 2.5, 1);
        let expected = collect_unique(compact_forward(&g));
        for k in [0, 1, 4, 16, g.max_degree() + 1] {
            assert_eq!(collect_unique(new_listing_constant_space(&g, k)), expected);
        }
    }
}
