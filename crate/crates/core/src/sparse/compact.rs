use crate::graph::{DegreeOrdering, Graph, VertexId};
use crate::triangle::Triangle;

/// Compact-forward on a private copy of `g`.
///
/// Convenient when the caller only holds a shared reference; the copy
/// costs `Θ(m)` extra space. Use [`compact_forward_in_place`] for the
/// `Θ(n)` bound.
pub fn compact_forward(g: &Graph) -> CompactForward<'static> {
    CompactForward::start(Slot::Owned(g.clone()))
}

/// Compact-forward, sorting the adjacency arrays of `g` by degree rank in
/// place.
///
/// The only auxiliary storage is the ordering and its inverse (`Θ(n)`).
/// Each `A[v]` of forward is the prefix of `N(v)` below `v`'s own rank, so
/// the set intersection becomes a bounded merge of two list prefixes.
/// Output uses original ids. `g` is restored when the iterator is dropped.
pub fn compact_forward_in_place(g: &mut Graph) -> CompactForward<'_> {
    CompactForward::start(Slot::Borrowed(g))
}

#[derive(Debug)]
enum Slot<'a> {
    Borrowed(&'a mut Graph),
    Owned(Graph),
}

impl Slot<'_> {
    fn graph(&self) -> &Graph {
        match self {
            Slot::Borrowed(g) => g,
            Slot::Owned(g) => g,
        }
    }

    fn graph_mut(&mut self) -> &mut Graph {
        match self {
            Slot::Borrowed(g) => g,
            Slot::Owned(g) => g,
        }
    }
}

#[derive(Debug)]
pub struct CompactForward<'a> {
    slot: Slot<'a>,
    ord: DegreeOrdering,
    v: VertexId,
    pos: usize,
    current: Option<(VertexId, usize, usize)>,
}

impl CompactForward<'_> {
    fn start(mut slot: Slot<'_>) -> CompactForward<'_> {
        let ord = DegreeOrdering::new(slot.graph());
        ord.relabel_in_place(slot.graph_mut());
        CompactForward { slot, ord, v: 0, pos: usize::MAX, current: None }
    }

}

#[inline]
fn ranked_neighbors<'s>(slot: &'s Slot<'_>, ord: &DegreeOrdering, rank: VertexId) -> &'s [VertexId] {
    slot.graph().neighbors(ord.vertex(rank))
}

impl Iterator for CompactForward<'_> {
    type Item = Triangle;

    fn next(&mut self) -> Option<Triangle> {
        let n = self.ord.len() as VertexId;
        loop {
            let v = self.v;
            if let Some((u, mut i, mut j)) = self.current {
                let nu = ranked_neighbors(&self.slot, &self.ord, u);
                let nv = ranked_neighbors(&self.slot, &self.ord, v);
                while i < nu.len() && j < nv.len() && nu[i] < v && nv[j] < v {
                    let (x, y) = (nu[i], nv[j]);
                    if x < y {
                        i += 1;
                    } else if x > y {
                        j += 1;
                    } else {
                        self.current = Some((u, i + 1, j + 1));
                        let ord = &self.ord;
                        return Some(Triangle::new(ord.vertex(u), ord.vertex(v), ord.vertex(x)));
                    }
                }
                self.current = None;
            }
            if v >= n {
                return None;
            }
            let nv = ranked_neighbors(&self.slot, &self.ord, v);
            if self.pos == usize::MAX {
                self.pos = nv.partition_point(|&x| x <= v);
            }
            if self.pos < nv.len() {
                self.current = Some((nv[self.pos], 0, 0));
                self.pos += 1;
            } else {
                self.v += 1;
                self.pos = usize::MAX;
            }
        }
    }
}

impl Drop for CompactForward<'_> {
    fn drop(&mut self) {
        if let Slot::Borrowed(g) = &mut self.slot {
            self.ord.restore_in_place(g);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::sparse::forward;

    #[test]
    fn examples() {
        assert_eq!(collect_unique(compact_forward(&clique(4))).len(), 4);
        assert_eq!(collect_unique(compact_forward(&diamond())), set_of(&[(0, 1, 2), (0, 1, 3)]));
    }

    #[test]
    fn matches_forward_on_random_graphs() {
        for seed in 0..40 {
            let g = er(1 + (seed as usize * 7) % 64, 0.35, seed);
            assert_eq!(collect_unique(compact_forward(&g)), collect_unique(forward(&g)));
        }
    }

    #[test]
    fn in_place_restores_graph_even_when_stopped_early() {
        let g = powerlaw(200, 2.3, 3);
        let mut h = g.clone();
        let full = collect_unique(compact_forward_in_place(&mut h));
        assert_eq!(h, g);
        assert_eq!(full, brute_force(&g));
        let first = compact_forward_in_place(&mut h).next();
        assert!(first.is_some_and(|t| full.contains(&t)));
        assert_eq!(h, g);
    }
}
