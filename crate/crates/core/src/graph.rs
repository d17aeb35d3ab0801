//! Sorted adjacency-array storage for undirected simple graphs.
//!
//! A [`Graph`] keeps one offset per vertex into a single neighbor buffer:
//!
//! ```text
//! offsets[0] = 0
//! offsets[v + 1] = offsets[v] + d(v)
//! N(v) = neighbors[offsets[v] .. offsets[v + 1]]   (strictly increasing)
//! offsets[n] = 2m
//! ```
//!
//! Vertex ids are dense `u32`s in `[0, n)`.

use std::io::{BufRead, Read, Write};

use crate::error::{Error, Result};

pub type VertexId = u32;

const BINARY_MAGIC: &[u8; 4] = b"TRIG";
const BINARY_VERSION: u8 = 0x01;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<VertexId>,
}

/// What normalization removed from an input edge list.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Cleanup {
    pub self_loops: u64,
    pub duplicates: u64,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { offsets: vec![0; n + 1], neighbors: Vec::new() }
    }

    /// Builds a simple graph from arbitrary undirected edges.
    ///
    /// Self-loops are dropped and repeated edges (in either direction)
    /// merged. The vertex count is the larger of `min_n` and the largest id
    /// plus one.
    pub fn from_edges<I>(min_n: usize, edges: I) -> (Graph, Cleanup)
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut n = min_n;
        let mut cleanup = Cleanup::default();
        let mut arcs = Vec::new();
        let mut kept = 0u64;
        for (u, v) in edges {
            n = n.max(u as usize + 1).max(v as usize + 1);
            if u == v {
                cleanup.self_loops += 1;
                continue;
            }
            kept += 1;
            arcs.push((u, v));
            arcs.push((v, u));
        }
        arcs.sort_unstable();
        arcs.dedup();
        cleanup.duplicates = kept - (arcs.len() / 2) as u64;

        let mut offsets = vec![0usize; n + 1];
        for &(u, _) in &arcs {
            offsets[u as usize + 1] += 1;
        }
        for v in 0..n {
            offsets[v + 1] += offsets[v];
        }
        let neighbors = arcs.into_iter().map(|(_, v)| v).collect();
        (Graph { offsets, neighbors }, cleanup)
    }

    /// Wraps raw adjacency arrays, checking every invariant.
    pub fn from_parts(offsets: Vec<usize>, neighbors: Vec<VertexId>) -> Result<Graph> {
        let g = Graph { offsets, neighbors };
        g.validate()?;
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.neighbors.len() / 2
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        let v = v as usize;
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n() as VertexId).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.n() as VertexId
    }

    /// Binary search for `v` in `N(u)`.
    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Every undirected edge once, as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| {
            let nbrs = self.neighbors(u);
            let start = nbrs.partition_point(|&x| x <= u);
            nbrs[start..].iter().map(move |&v| (u, v))
        })
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn neighbor_buffer(&self) -> &[VertexId] {
        &self.neighbors
    }

    /// Mutable neighbor buffer. Callers must leave the graph valid again
    /// before handing it to anyone else.
    pub(crate) fn neighbor_buffer_mut(&mut self) -> (&[usize], &mut [VertexId]) {
        (&self.offsets, &mut self.neighbors)
    }

    /// Checks sortedness, symmetry, simplicity and offset consistency.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidGraph(msg));
        if self.offsets.is_empty() || self.offsets[0] != 0 {
            return bad("offsets must start at 0".into());
        }
        if *self.offsets.last().unwrap() != self.neighbors.len() {
            return bad("last offset must equal the neighbor count".into());
        }
        if !self.neighbors.len().is_multiple_of(2) {
            return bad("odd number of adjacency entries".into());
        }
        if self.offsets.windows(2).any(|w| w[0] > w[1]) {
            return bad("offsets are not monotone".into());
        }
        let n = self.n();
        for v in self.vertices() {
            let nbrs = self.neighbors(v);
            if nbrs.windows(2).any(|w| w[0] >= w[1]) {
                return bad(format!("N({v}) is not strictly increasing"));
            }
            for &u in nbrs {
                if u as usize >= n {
                    return bad(format!("N({v}) holds out-of-range id {u}"));
                }
                if u == v {
                    return bad(format!("self-loop at {v}"));
                }
                if !self.has_edge(u, v) {
                    return bad(format!("edge ({v},{u}) has no mirror"));
                }
            }
        }
        Ok(())
    }

    pub fn write_binary<W: Write>(&self, mut w: W) -> Result<()> {
        w.write_all(BINARY_MAGIC)?;
        w.write_all(&[BINARY_VERSION])?;
        w.write_all(&(self.n() as u64).to_le_bytes())?;
        w.write_all(&(self.m() as u64).to_le_bytes())?;
        for &o in &self.offsets {
            w.write_all(&(o as u64).to_le_bytes())?;
        }
        for &v in &self.neighbors {
            w.write_all(&v.to_le_bytes())?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn read_binary<R: Read>(mut r: R) -> Result<Graph> {
        let mut header = [0u8; 5];
        r.read_exact(&mut header)?;
        if &header[..4] != BINARY_MAGIC {
            return Err(Error::Format("bad magic".into()));
        }
        if header[4] != BINARY_VERSION {
            return Err(Error::Format(format!("unsupported version {:#04x}", header[4])));
        }
        let n = read_u64(&mut r)?;
        let m = read_u64(&mut r)?;
        let n = usize::try_from(n).map_err(|_| Error::Capacity(format!("n = {n}")))?;
        let arcs = m
            .checked_mul(2)
            .and_then(|a| usize::try_from(a).ok())
            .ok_or_else(|| Error::Capacity(format!("m = {m}")))?;
        let mut offsets = Vec::new();
        offsets
            .try_reserve_exact(n + 1)
            .map_err(|_| Error::Capacity(format!("offsets for n = {n}")))?;
        for _ in 0..=n {
            let o = read_u64(&mut r)?;
            offsets.push(usize::try_from(o).map_err(|_| Error::Format(format!("offset {o}")))?);
        }
        let mut neighbors = Vec::new();
        neighbors
            .try_reserve_exact(arcs)
            .map_err(|_| Error::Capacity(format!("neighbors for m = {m}")))?;
        let mut word = [0u8; 4];
        for _ in 0..arcs {
            r.read_exact(&mut word)?;
            neighbors.push(u32::from_le_bytes(word));
        }
        Graph::from_parts(offsets, neighbors).map_err(|e| Error::Format(e.to_string()))
    }
}

fn read_u64<R: Read>(r: &mut R) -> Result<u64> {
    let mut buf = [0u8; 8];
    r.read_exact(&mut buf)?;
    Ok(u64::from_le_bytes(buf))
}

/// Parses a whitespace-separated `u v` edge list. Lines starting with `#`
/// and blank lines are skipped.
pub fn load_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    let (g, cleanup) = load_edge_list_counted(reader)?;
    if cleanup.self_loops > 0 || cleanup.duplicates > 0 {
        log::warn!(
            "dropped {} self-loop(s) and {} duplicate edge(s)",
            cleanup.self_loops,
            cleanup.duplicates
        );
    }
    Ok(g)
}

pub fn load_edge_list_counted<R: BufRead>(reader: R) -> Result<(Graph, Cleanup)> {
    let mut edges = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let u = parse_id(tokens.next(), lineno)?;
        let v = parse_id(tokens.next(), lineno)?;
        if let Some(extra) = tokens.next() {
            return Err(Error::Parse { line: lineno, message: format!("unexpected token {extra:?}") });
        }
        edges.push((u, v));
    }
    Ok(Graph::from_edges(0, edges))
}

fn parse_id(token: Option<&str>, line: usize) -> Result<VertexId> {
    let token = token.ok_or_else(|| Error::Parse { line, message: "expected two vertex ids".into() })?;
    let id: u64 = token
        .parse()
        .map_err(|_| Error::Parse { line, message: format!("malformed vertex id {token:?}") })?;
    VertexId::try_from(id)
        .map_err(|_| Error::Capacity(format!("line {line}: vertex id {id} exceeds 32 bits")))
}

/// Injective numbering by non-increasing degree, ties broken by ascending id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeOrdering {
    eta: Vec<VertexId>,
    inv: Vec<VertexId>,
}

impl DegreeOrdering {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut inv: Vec<VertexId> = (0..n as VertexId).collect();
        // Keys are unique, so the unstable (in-place) sort is deterministic.
        inv.sort_unstable_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut eta = vec![0; n];
        for (rank, &v) in inv.iter().enumerate() {
            eta[v as usize] = rank as VertexId;
        }
        DegreeOrdering { eta, inv }
    }

    /// Rank of original vertex `v`.
    #[inline]
    pub fn eta(&self, v: VertexId) -> VertexId {
        self.eta[v as usize]
    }

    /// Original vertex holding rank `r`.
    #[inline]
    pub fn vertex(&self, r: VertexId) -> VertexId {
        self.inv[r as usize]
    }

    pub fn ranks(&self) -> &[VertexId] {
        &self.eta
    }

    pub fn len(&self) -> usize {
        self.eta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eta.is_empty()
    }

    /// Rewrites every neighbor id of `g` to its rank and re-sorts each list,
    /// without moving the per-vertex blocks. Uses no memory beyond `self`.
    pub(crate) fn relabel_in_place(&self, g: &mut Graph) {
        relabel_lists(g, &self.eta);
    }

    /// Inverse of [`relabel_in_place`](Self::relabel_in_place).
    pub(crate) fn restore_in_place(&self, g: &mut Graph) {
        relabel_lists(g, &self.inv);
    }
}

fn relabel_lists(g: &mut Graph, map: &[VertexId]) {
    let (offsets, nbrs) = g.neighbor_buffer_mut();
    for x in nbrs.iter_mut() {
        *x = map[*x as usize];
    }
    for w in offsets.windows(2) {
        nbrs[w[0]..w[1]].sort_unstable();
    }
}

/// Relabels `g` so that vertex `r` of the result is the vertex of rank `r`.
pub fn reorder_by_degree(g: &Graph) -> (Graph, DegreeOrdering) {
    let ord = DegreeOrdering::new(g);
    let n = g.n();
    let mut offsets = Vec::with_capacity(n + 1);
    let mut neighbors = Vec::with_capacity(g.neighbors.len());
    offsets.push(0);
    for r in 0..n as VertexId {
        let start = neighbors.len();
        neighbors.extend(g.neighbors(ord.vertex(r)).iter().map(|&x| ord.eta(x)));
        neighbors[start..].sort_unstable();
        offsets.push(neighbors.len());
    }
    (Graph { offsets, neighbors }, ord)
}

/// Subgraph induced by `{v : d(v) > k}`. The returned map sends new ids to
/// original ids and is increasing, so neighbor order is preserved.
pub fn induced_high_degree_subgraph(g: &Graph, k: usize) -> (Graph, Vec<VertexId>) {
    let map: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) > k).collect();
    let mut new_id = vec![VertexId::MAX; g.n()];
    for (i, &v) in map.iter().enumerate() {
        new_id[v as usize] = i as VertexId;
    }
    let mut offsets = Vec::with_capacity(map.len() + 1);
    let mut neighbors = Vec::new();
    offsets.push(0);
    for &v in &map {
        neighbors.extend(
            g.neighbors(v).iter().map(|&u| new_id[u as usize]).filter(|&u| u != VertexId::MAX),
        );
        offsets.push(neighbors.len());
    }
    (Graph { offsets, neighbors }, map)
}
