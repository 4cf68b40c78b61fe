//! Static sparse graph storage with implicit vertex removal.
//!
//! The graph is a CSR-style structure: adjacency is immutable after
//! construction, vertices are "removed" by flipping a per-vertex alive flag,
//! and [`StaticGraph::compact`] periodically rebuilds a dense copy of the
//! surviving subgraph. Neighborhood queries consult the alive mask, so a
//! removal is visible to every later query without touching the edge arrays.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

use thiserror::Error;

/// Vertex index type. 32-bit by default; the `wide-index` feature widens it.
#[cfg(not(feature = "wide-index"))]
pub type VertexId = u32;
#[cfg(feature = "wide-index")]
pub type VertexId = u64;

/// Subgraphs at or below this size get a bit-matrix adjacency
/// (1024 vertices -> 128 KiB of bits, small enough to stay cache resident).
pub const DEFAULT_DENSE_THRESHOLD: usize = 1024;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("vertex id {0} exceeds the configured index width ({1}-bit)")]
    IndexOverflow(u64, u32),
    #[error("edge ({0}, {1}) references vertex >= declared count {2}")]
    VertexOutOfRange(u64, u64, usize),
}

/// Compressed sparse undirected graph with an alive mask.
///
/// Invariants established by the constructors: adjacency is symmetric,
/// self-loop free, deduplicated, and every neighbor list is sorted ascending.
#[derive(Debug)]
pub struct StaticGraph {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
    alive: Vec<AtomicBool>,
    alive_count: AtomicUsize,
}

impl StaticGraph {
    /// Builds a graph from an arbitrary edge list. Vertex count is inferred
    /// as `max id + 1`. Duplicate edges, self-loops, and either orientation
    /// of the same pair collapse into one undirected edge.
    pub fn from_edges(edges: &[(u64, u64)]) -> Result<StaticGraph, GraphError> {
        let n = edges
            .iter()
            .map(|&(u, v)| u.max(v) + 1)
            .max()
            .unwrap_or(0) as usize;
        Self::with_vertices(n, edges)
    }

    /// Builds a graph over exactly `n` vertices (trailing ids may be isolated).
    pub fn with_vertices(n: usize, edges: &[(u64, u64)]) -> Result<StaticGraph, GraphError> {
        let max_id = VertexId::MAX as u64;
        let width = VertexId::BITS;
        if n > 0 && (n - 1) as u64 > max_id {
            return Err(GraphError::IndexOverflow((n - 1) as u64, width));
        }
        for &(u, v) in edges {
            if u > max_id || v > max_id {
                return Err(GraphError::IndexOverflow(u.max(v), width));
            }
            if u as usize >= n || v as usize >= n {
                return Err(GraphError::VertexOutOfRange(u, v, n));
            }
        }

        // Counting-sort both orientations into CSR rows, then sort + dedup rows.
        let mut degree = vec![0usize; n];
        for &(u, v) in edges {
            if u != v {
                degree[u as usize] += 1;
                degree[v as usize] += 1;
            }
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut targets = vec![0 as VertexId; *offsets.last().unwrap()];
        let mut cursor = offsets.clone();
        for &(u, v) in edges {
            if u == v {
                continue;
            }
            let (u, v) = (u as usize, v as usize);
            targets[cursor[u]] = v as VertexId;
            cursor[u] += 1;
            targets[cursor[v]] = u as VertexId;
            cursor[v] += 1;
        }
        let mut dedup_offsets = Vec::with_capacity(n + 1);
        dedup_offsets.push(0usize);
        let mut write = 0;
        for v in 0..n {
            let row = &mut targets[offsets[v]..offsets[v + 1]];
            row.sort_unstable();
            let mut prev: Option<VertexId> = None;
            let (start, end) = (offsets[v], offsets[v + 1]);
            for r in start..end {
                let t = targets[r];
                if prev != Some(t) {
                    targets[write] = t;
                    write += 1;
                    prev = Some(t);
                }
            }
            dedup_offsets.push(write);
        }
        targets.truncate(write);

        Ok(StaticGraph {
            offsets: dedup_offsets,
            targets,
            alive: (0..n).map(|_| AtomicBool::new(true)).collect(),
            alive_count: AtomicUsize::new(n),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.alive.len()
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    /// Full adjacency degree, ignoring the alive mask.
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Sorted neighbor row, ignoring the alive mask.
    pub fn neighbors(&self, v: usize) -> &[VertexId] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn is_alive(&self, v: usize) -> bool {
        self.alive[v].load(Ordering::Relaxed)
    }

    pub fn alive_count(&self) -> usize {
        self.alive_count.load(Ordering::Relaxed)
    }

    pub fn alive_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_count()).filter(move |&v| self.is_alive(v))
    }

    pub fn alive_neighbors(&self, v: usize) -> impl Iterator<Item = VertexId> + '_ {
        self.neighbors(v)
            .iter()
            .copied()
            .filter(move |&u| self.is_alive(u as usize))
    }

    /// Adjacency test by binary search; independent of the alive mask.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&(v as VertexId)).is_ok()
    }

    /// Marks `v` as removed. Idempotent; returns whether this call removed it.
    /// Adjacency rows are untouched, so concurrent readers stay valid.
    pub fn remove_implicit(&self, v: usize) -> bool {
        let was_alive = self.alive[v].swap(false, Ordering::Relaxed);
        if was_alive {
            self.alive_count.fetch_sub(1, Ordering::Relaxed);
        }
        was_alive
    }

    /// All edges `(u, v)` with `u < v`, ignoring the alive mask.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| (u as VertexId) < v)
                .map(move |v| (u as VertexId, v))
        })
    }

    /// True iff every pair in `members` is adjacent (duplicates rejected).
    pub fn is_clique(&self, members: &[VertexId]) -> bool {
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if u == v || !self.has_edge(u as usize, v as usize) {
                    return false;
                }
            }
        }
        true
    }

    /// Rebuilds a dense graph over the alive vertices. Returns the new graph
    /// and a map from new ids to the ids used by `self`. Callers must ensure
    /// no query is in flight on `self` (quiescent point).
    pub fn compact(&self) -> (StaticGraph, Vec<VertexId>) {
        let n = self.vertex_count();
        let mut to_old = Vec::with_capacity(self.alive_count());
        let mut to_new = vec![VertexId::MAX; n];
        for (v, slot) in to_new.iter_mut().enumerate() {
            if self.is_alive(v) {
                *slot = to_old.len() as VertexId;
                to_old.push(v as VertexId);
            }
        }
        let mut offsets = Vec::with_capacity(to_old.len() + 1);
        offsets.push(0usize);
        let mut targets = Vec::new();
        for &old in &to_old {
            let start = targets.len();
            for &w in self.neighbors(old as usize) {
                let mapped = to_new[w as usize];
                if mapped != VertexId::MAX {
                    targets.push(mapped);
                }
            }
            // Source rows are sorted by old id; renumbering is monotone.
            debug_assert!(targets[start..].windows(2).all(|w| w[0] < w[1]));
            offsets.push(targets.len());
        }
        let count = to_old.len();
        let graph = StaticGraph {
            offsets,
            targets,
            alive: (0..count).map(|_| AtomicBool::new(true)).collect(),
            alive_count: AtomicUsize::new(count),
        };
        (graph, to_old)
    }

    /// Induced subgraph on `{v} ∪ {u : (u,v) ∈ E, core(u) >= min_core, u ∉ removed, u alive}`.
    ///
    /// `cores` is indexed by vertex id; pass `None` to skip the core filter.
    /// A `DenseAdjacency` is attached when the subgraph has at most
    /// `dense_threshold` vertices.
    pub fn reduced_neighbors(
        &self,
        v: usize,
        min_core: u32,
        cores: Option<&[u32]>,
        removed: Option<&[bool]>,
        dense_threshold: usize,
    ) -> NeighborhoodSubgraph {
        let keep = |u: usize| -> bool {
            self.is_alive(u)
                && removed.is_none_or(|r| !r[u])
                && cores.is_none_or(|c| c[u] >= min_core)
        };
        let mut verts: Vec<VertexId> = Vec::with_capacity(self.degree(v) + 1);
        verts.push(v as VertexId);
        for &u in self.neighbors(v) {
            if keep(u as usize) {
                verts.push(u);
            }
        }
        verts.sort_unstable();
        NeighborhoodSubgraph::induced(self, verts, dense_threshold)
    }
}

/// Bit-matrix adjacency over local indices of a small subgraph.
#[derive(Clone)]
pub struct DenseAdjacency {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl DenseAdjacency {
    pub fn new(n: usize) -> DenseAdjacency {
        let words = n.div_ceil(64);
        DenseAdjacency {
            n,
            words,
            bits: vec![0; words * n],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn set_symmetric(&mut self, i: usize, j: usize) {
        debug_assert_ne!(i, j);
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
        self.bits[j * self.words + i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 != 0
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }
}

/// Induced subgraph handed to the bound and branch machinery.
///
/// Local indices are positions in `vertices` (sorted by original id).
pub struct NeighborhoodSubgraph {
    vertices: Vec<VertexId>,
    adj: Vec<Vec<u32>>,
    edge_count: usize,
    dense: Option<DenseAdjacency>,
}

impl NeighborhoodSubgraph {
    /// Induced subgraph of `parent` on `verts` (must be sorted, deduplicated,
    /// and alive-filtered by the caller).
    fn induced(parent: &StaticGraph, verts: Vec<VertexId>, dense_threshold: usize) -> Self {
        let k = verts.len();
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); k];
        let mut edge_count = 0;
        let mut dense = (k <= dense_threshold && k > 0).then(|| DenseAdjacency::new(k));
        for (li, &g) in verts.iter().enumerate() {
            // Sorted-merge intersection of the parent's row with `verts`.
            let row = parent.neighbors(g as usize);
            let (mut a, mut b) = (0usize, 0usize);
            while a < row.len() && b < k {
                match row[a].cmp(&verts[b]) {
                    std::cmp::Ordering::Less => a += 1,
                    std::cmp::Ordering::Greater => b += 1,
                    std::cmp::Ordering::Equal => {
                        if b > li {
                            adj[li].push(b as u32);
                            adj[b].push(li as u32);
                            edge_count += 1;
                            if let Some(d) = dense.as_mut() {
                                d.set_symmetric(li, b);
                            }
                        }
                        a += 1;
                        b += 1;
                    }
                }
            }
        }
        // Rows received the lower half in order and the upper half in order of
        // the opposite endpoint; a final sort keeps the sorted-row invariant.
        for row in &mut adj {
            row.sort_unstable();
        }
        NeighborhoodSubgraph {
            vertices: verts,
            adj,
            edge_count,
            dense,
        }
    }

    /// Build directly from local edges (used by bound computations on
    /// candidate sets that are not a single vertex's neighborhood).
    pub fn from_local_edges(
        vertices: Vec<VertexId>,
        edges: &[(u32, u32)],
        dense_threshold: usize,
    ) -> Self {
        let k = vertices.len();
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); k];
        let mut dense = (k <= dense_threshold && k > 0).then(|| DenseAdjacency::new(k));
        let mut edge_count = 0;
        for &(a, b) in edges {
            debug_assert_ne!(a, b);
            adj[a as usize].push(b);
            adj[b as usize].push(a);
            edge_count += 1;
            if let Some(d) = dense.as_mut() {
                d.set_symmetric(a as usize, b as usize);
            }
        }
        for row in &mut adj {
            row.sort_unstable();
            debug_assert!(row.windows(2).all(|w| w[0] < w[1]), "duplicate local edge");
        }
        NeighborhoodSubgraph {
            vertices,
            adj,
            edge_count,
            dense,
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Original ids, ascending; local index = position.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn global_id(&self, local: usize) -> VertexId {
        self.vertices[local]
    }

    pub fn local_id(&self, global: VertexId) -> Option<usize> {
        self.vertices.binary_search(&global).ok()
    }

    pub fn degree(&self, local: usize) -> usize {
        self.adj[local].len()
    }

    pub fn neighbors(&self, local: usize) -> &[u32] {
        &self.adj[local]
    }

    pub fn dense(&self) -> Option<&DenseAdjacency> {
        self.dense.as_ref()
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        match &self.dense {
            Some(d) => d.contains(i, j),
            None => self.adj[i].binary_search(&(j as u32)).is_ok(),
        }
    }
}
