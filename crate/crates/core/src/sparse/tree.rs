use crate::graph::{Graph, VertexId};
use crate::matrix::AdjacencyMatrix;
use crate::triangle::Triangle;

const NO_FATHER: VertexId = VertexId::MAX;

/// Covering-tree listing.
///
/// Each round builds a BFS covering forest of the remaining edges, tests
/// every non-tree edge `(u, v)` against `father(u)` and `father(v)`, then
/// removes the tree edges by clearing their bits in `a`. The adjacency
/// arrays are never modified; an edge is present iff its bit is still set.
///
/// `a` must match `g` on entry and is left with every bit cleared.
pub fn tree_listing<'a>(g: &'a Graph, a: &'a mut AdjacencyMatrix) -> TreeListing<'a> {
    let n = g.n();
    TreeListing {
        g,
        a,
        father: vec![NO_FATHER; n],
        seen: vec![false; n],
        queue: Vec::with_capacity(n),
        remaining: g.m(),
        rounds: 0,
        u: 0,
        pos: 0,
        scanning: false,
        pending: None,
    }
}

#[derive(Debug)]
pub struct TreeListing<'a> {
    g: &'a Graph,
    a: &'a mut AdjacencyMatrix,
    father: Vec<VertexId>,
    seen: Vec<bool>,
    queue: Vec<VertexId>,
    remaining: usize,
    rounds: usize,
    u: usize,
    pos: usize,
    scanning: bool,
    pending: Option<Triangle>,
}

impl TreeListing<'_> {
    /// Outer-loop iterations started so far.
    pub fn rounds(&self) -> usize {
        self.rounds
    }

    /// Covering forest of the edges still present.
    pub fn father(&self, v: VertexId) -> Option<VertexId> {
        Some(self.father[v as usize]).filter(|&f| f != NO_FATHER)
    }

    fn build_forest(&mut self) {
        self.father.fill(NO_FATHER);
        self.seen.fill(false);
        for root in 0..self.g.n() as VertexId {
            if self.seen[root as usize] {
                continue;
            }
            self.seen[root as usize] = true;
            self.queue.clear();
            self.queue.push(root);
            let mut head = 0;
            while head < self.queue.len() {
                let x = self.queue[head];
                head += 1;
                for &y in self.g.neighbors(x) {
                    if !self.seen[y as usize] && self.a.get(x, y) {
                        self.seen[y as usize] = true;
                        self.father[y as usize] = x;
                        self.queue.push(y);
                    }
                }
            }
        }
    }

    fn remove_forest(&mut self) {
        for v in 0..self.g.n() as VertexId {
            let f = self.father[v as usize];
            if f != NO_FATHER {
                self.a.clear(v, f);
                self.remaining -= 1;
            }
        }
    }
}

impl Iterator for TreeListing<'_> {
    type Item = Triangle;

    fn next(&mut self) -> Option<Triangle> {
        if let Some(t) = self.pending.take() {
            return Some(t);
        }
        loop {
            if !self.scanning {
                if self.remaining == 0 {
                    return None;
                }
                self.rounds += 1;
                self.build_forest();
                self.scanning = true;
                self.u = 0;
                self.pos = 0;
            }
            while self.u < self.g.n() {
                let u = self.u as VertexId;
                let nbrs = self.g.neighbors(u);
                while self.pos < nbrs.len() {
                    let v = nbrs[self.pos];
                    self.pos += 1;
                    if v < u || !self.a.get(u, v) {
                        continue;
                    }
                    let (fu, fv) = (self.father[u as usize], self.father[v as usize]);
                    if fu == v || fv == u {
                        continue;
                    }
                    let via_u = fu != NO_FATHER && self.a.get(fu, v);
                    // Siblings share a father: both tests would name one triangle.
                    let via_v = fv != NO_FATHER && fv != fu && self.a.get(fv, u);
                    match (via_u, via_v) {
                        (true, true) => {
                            self.pending = Some(Triangle::new(u, v, fv));
                            return Some(Triangle::new(u, v, fu));
                        }
                        (true, false) => return Some(Triangle::new(u, v, fu)),
                        (false, true) => return Some(Triangle::new(u, v, fv)),
                        (false, false) => {}
                    }
                }
                self.u += 1;
                self.pos = 0;
            }
            self.remove_forest();
            self.scanning = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::matrix::build_matrix;

    fn run(g: &Graph) -> (std::collections::BTreeSet<Triangle>, usize, AdjacencyMatrix) {
        let mut a = build_matrix(g).unwrap();
        let mut it = tree_listing(g, &mut a);
        let set = collect_unique(it.by_ref());
        let rounds = it.rounds();
        (set, rounds, a)
    }

    #[test]
    fn triangle_in_one_round() {
        let g = triangle();
        let mut a = build_matrix(&g).unwrap();
        let mut it = tree_listing(&g, &mut a);
        assert_eq!(it.next(), Some(Triangle::new(0, 1, 2)));
        assert_eq!(it.rounds(), 1);
        // The leftover non-tree edge takes one more, empty round.
        assert_eq!(it.next(), None);
        assert_eq!(it.rounds(), 2);
    }

    #[test]
    fn k4_matches_oracle() {
        let (set, _, _) = run(&clique(4));
        assert_eq!(set, brute_force(&clique(4)));
    }

    #[test]
    fn forest_needs_one_round() {
        let g = graph(7, &[(0, 1), (1, 2), (1, 3), (3, 4), (5, 6)]);
        let (set, rounds, a) = run(&g);
        assert!(set.is_empty());
        assert_eq!(rounds, 1);
        assert_eq!(a.edge_count(), 0);
    }

    #[test]
    fn empty_graph_has_no_rounds() {
        let (set, rounds, _) = run(&Graph::empty(3));
        assert!(set.is_empty());
        assert_eq!(rounds, 0);
    }

    #[test]
    fn matches_oracle_and_round_bound_on_random_graphs() {
        for seed in 0..30 {
            let g = er(30, 0.25 + 0.02 * seed as f64, seed);
            let (set, rounds, a) = run(&g);
            assert_eq!(set, brute_force(&g));
            assert!(rounds <= 2 * crate::sparse::ceil_sqrt(g.m()) + 1);
            assert_eq!(a.edge_count(), 0);
        }
    }

    #[test]
    fn adjacency_arrays_untouched() {
        let g = clique(6);
        let before = g.clone();
        run(&g);
        assert_eq!(g, before);
    }
}
