//! Temporal networks, strong reachability, and the largest temporal strong
//! component.
//!
//! A temporal path must traverse edges in increasing time order, so pairwise
//! "u reaches w" relations form a directed reachability graph. Two vertices
//! are strongly connected when both directions exist; the largest set of
//! pairwise strongly connected vertices is exactly the maximum clique of the
//! reciprocal reachability graph, which is where the clique solver comes in.
//!
//! Reachability is built backwards in time: processing edges latest-first,
//! the tail of each edge inherits the (already final) reachable set of its
//! head. Sets are grow-only bitmaps, flattened to sorted lists at the end.

use thiserror::Error;

use crate::graph::StaticGraph;
use crate::parallel::max_clique_parallel;
use crate::search::{SearchConfig, SearchOutcome};

/// Equal-timestamp handling. Real data has ties; the model wants a strict
/// total order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieMode {
    /// Ties become a strict order by stable input position: an edge can
    /// follow an equal-time edge only if it appeared later in the input.
    #[default]
    Strict,
    /// Non-decreasing times chain freely.
    AllowEqual,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TemporalEdge {
    pub u: u32,
    pub v: u32,
    pub t: f64,
}

/// Timestamped directed edge list. Self-loops are dropped at construction;
/// repeated contacts are kept (each may extend different paths).
#[derive(Debug, Clone)]
pub struct TemporalNetwork {
    n: usize,
    edges: Vec<TemporalEdge>,
}

impl TemporalNetwork {
    /// Builds a network, dropping self-loops. Returns the drop count.
    pub fn new(n: usize, raw: impl IntoIterator<Item = (u32, u32, f64)>) -> (TemporalNetwork, usize) {
        let mut edges = Vec::new();
        let mut dropped = 0;
        for (u, v, t) in raw {
            debug_assert!((u as usize) < n && (v as usize) < n);
            if u == v {
                dropped += 1;
            } else {
                edges.push(TemporalEdge { u, v, t });
            }
        }
        (TemporalNetwork { n, edges }, dropped)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[TemporalEdge] {
        &self.edges
    }

    /// The temporal subgraph induced by `members` (original vertex ids kept).
    pub fn induced(&self, members: &[u32]) -> TemporalNetwork {
        let mut keep = vec![false; self.n];
        for &m in members {
            keep[m as usize] = true;
        }
        TemporalNetwork {
            n: self.n,
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|e| keep[e.u as usize] && keep[e.v as usize])
                .collect(),
        }
    }

    /// Edge indices sorted ascending by (time, input position) — the strict
    /// total order used everywhere ties matter.
    fn ascending_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.edges.len()).collect();
        order.sort_by(|&a, &b| {
            self.edges[a]
                .t
                .partial_cmp(&self.edges[b].t)
                .expect("timestamps must not be NaN")
                .then(a.cmp(&b))
        });
        order
    }
}

#[derive(Debug, Error)]
pub enum ReachError {
    #[error(
        "reachability density cap exceeded: {so_far} edges after {processed}/{total} temporal \
         edges (projected ≈ {projected}, cap {cap})"
    )]
    DensityCap {
        so_far: u64,
        cap: u64,
        processed: usize,
        total: usize,
        projected: u64,
    },
}

/// Options for [`reach`]: tie handling plus a memory guard. Reachability
/// graphs can be dense (quadratic in the vertex count), so construction
/// aborts once more than `max_edges` entries have materialized.
#[derive(Debug, Clone, Copy)]
pub struct ReachOptions {
    pub tie_mode: TieMode,
    pub max_edges: Option<u64>,
}

impl Default for ReachOptions {
    fn default() -> Self {
        ReachOptions {
            tie_mode: TieMode::Strict,
            max_edges: Some(200_000_000),
        }
    }
}

/// Directed strong-reachability edge set: `sets[u]` holds every vertex with a
/// temporal path from `u`, including `u` itself (the self-loop seed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachabilityGraph {
    n: usize,
    sets: Vec<Vec<u32>>,
}

impl ReachabilityGraph {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Sorted reachable set per source, self included.
    pub fn sets(&self) -> &[Vec<u32>] {
        &self.sets
    }

    pub fn reaches(&self, u: u32, w: u32) -> bool {
        self.sets[u as usize].binary_search(&w).is_ok()
    }

    /// Directed reach edges, self-loops excluded.
    pub fn directed_edge_count(&self) -> u64 {
        self.sets
            .iter()
            .enumerate()
            .map(|(u, s)| (s.len() - usize::from(s.binary_search(&(u as u32)).is_ok())) as u64)
            .sum()
    }

    /// Undirected view keeping `(u, w)` iff both directions exist, u ≠ w.
    /// Self-loops are dropped here; a clique needs none.
    pub fn reciprocal_reduced(&self) -> Vec<(u64, u64)> {
        let mut edges = Vec::new();
        for (u, set) in self.sets.iter().enumerate() {
            for &w in set {
                if (w as usize) > u && self.reaches(w, u as u32) {
                    edges.push((u as u64, w as u64));
                }
            }
        }
        edges
    }
}

/// Builds the strong-reachability graph by the reverse-time recurrence: with
/// edges processed latest-first, every reachable set on the right-hand side
/// is already complete, so one pass suffices (equal-time groups are replayed
/// to a fixpoint under [`TieMode::AllowEqual`]).
pub fn reach(net: &TemporalNetwork, opts: ReachOptions) -> Result<ReachabilityGraph, ReachError> {
    let n = net.vertex_count();
    let words = n.div_ceil(64);
    let mut maps: Vec<Option<Box<[u64]>>> = vec![None; n];
    let mut added: u64 = 0;
    let cap = opts.max_edges.unwrap_or(u64::MAX);

    let order = net.ascending_order();
    let total = order.len();
    let mut processed = 0usize;

    // Seeds {v} materialize lazily; only touched vertices allocate a bitmap.
    fn seed(maps: &mut [Option<Box<[u64]>>], v: usize, words: usize) {
        if maps[v].is_none() {
            let mut row = vec![0u64; words].into_boxed_slice();
            row[v / 64] |= 1 << (v % 64);
            maps[v] = Some(row);
        }
    }

    let absorb = |maps: &mut Vec<Option<Box<[u64]>>>, i: usize, j: usize| -> u64 {
        seed(maps, i, words);
        seed(maps, j, words);
        if i == j {
            return 0;
        }
        let (src, dst) = if i < j {
            let (a, b) = maps.split_at_mut(j);
            (b[0].as_ref().unwrap(), a[i].as_mut().unwrap())
        } else {
            let (a, b) = maps.split_at_mut(i);
            (a[j].as_ref().unwrap(), b[0].as_mut().unwrap())
        };
        let mut new_bits = 0u64;
        for (d, s) in dst.iter_mut().zip(src.iter()) {
            let fresh = s & !*d;
            new_bits += u64::from(fresh.count_ones());
            *d |= fresh;
        }
        new_bits
    };

    let mut pos = total;
    while pos > 0 {
        // Find the equal-time group ending at `pos` (in ascending order).
        let group_end = pos;
        let t = net.edges[order[pos - 1]].t;
        let mut group_start = pos;
        while group_start > 0 && net.edges[order[group_start - 1]].t == t {
            group_start -= 1;
        }
        pos = group_start;

        match opts.tie_mode {
            TieMode::Strict => {
                // Reverse processing: within the group, later input order
                // first, so an edge sees exactly the strictly-later state.
                for idx in (group_start..group_end).rev() {
                    let e = net.edges[order[idx]];
                    added += absorb(&mut maps, e.u as usize, e.v as usize);
                    processed += 1;
                    check_cap(added, cap, processed, total)?;
                }
            }
            TieMode::AllowEqual => {
                // Equal times chain in any order: replay to a fixpoint.
                loop {
                    let mut changed = false;
                    for idx in (group_start..group_end).rev() {
                        let e = net.edges[order[idx]];
                        if absorb(&mut maps, e.u as usize, e.v as usize) > 0 {
                            changed = true;
                        }
                    }
                    if !changed {
                        break;
                    }
                    check_cap(added, cap, group_end, total)?;
                }
                // Count once per group to keep the guard cheap.
                added = maps
                    .iter()
                    .flatten()
                    .map(|m| m.iter().map(|w| u64::from(w.count_ones())).sum::<u64>())
                    .sum();
                processed = group_end;
                check_cap(added, cap, processed.max(1), total)?;
            }
        }
    }

    let sets: Vec<Vec<u32>> = (0..n)
        .map(|v| match &maps[v] {
            None => vec![v as u32],
            Some(row) => {
                let mut out = Vec::new();
                for (w, word) in row.iter().enumerate() {
                    let mut bits = *word;
                    while bits != 0 {
                        out.push((w * 64) as u32 + bits.trailing_zeros());
                        bits &= bits - 1;
                    }
                }
                out
            }
        })
        .collect();
    Ok(ReachabilityGraph { n, sets })
}

fn check_cap(added: u64, cap: u64, processed: usize, total: usize) -> Result<(), ReachError> {
    if added > cap {
        let projected = added.saturating_mul(total as u64) / processed.max(1) as u64;
        return Err(ReachError::DensityCap {
            so_far: added,
            cap,
            processed,
            total,
            projected,
        });
    }
    Ok(())
}

/// Largest temporal strong component: result of the clique search on the
/// reciprocal reachability graph, plus the reachability statistics.
#[derive(Debug, Clone)]
pub struct TsccResult {
    /// Component members, ascending vertex ids.
    pub component: Vec<u32>,
    /// Vertices with at least one reciprocal reach partner.
    pub reach_vertices: usize,
    /// Undirected edges of the reciprocal-reduced reachability graph.
    pub reduced_edges: u64,
    /// Directed reach edges before reduction (self-loops excluded).
    pub directed_edges: u64,
    pub solver: SearchOutcome,
}

/// Computes the largest temporal strong component: build reachability,
/// drop non-reciprocal edges, and find the maximum clique of what remains.
pub fn max_tscc(
    net: &TemporalNetwork,
    cfg: &SearchConfig,
    opts: ReachOptions,
) -> Result<TsccResult, ReachError> {
    let reachability = reach(net, opts)?;
    let reduced = reachability.reciprocal_reduced();
    let mut seen = vec![false; net.vertex_count()];
    for &(u, w) in &reduced {
        seen[u as usize] = true;
        seen[w as usize] = true;
    }
    let graph = StaticGraph::with_vertices(net.vertex_count(), &reduced)
        .expect("reduced reach edges are in range");
    let solver = max_clique_parallel(&graph, cfg);
    #[allow(clippy::unnecessary_cast)] // VertexId widens under wide-index
    let component: Vec<u32> = solver.clique.members().iter().map(|&v| v as u32).collect();
    Ok(TsccResult {
        component,
        reach_vertices: seen.iter().filter(|&&s| s).count(),
        reduced_edges: reduced.len() as u64,
        directed_edges: reachability.directed_edge_count(),
        solver,
    })
}

/// True iff every ordered pair in `members` is connected by a temporal path.
/// Runs an independent forward earliest-arrival scan per member — the
/// verification route shares nothing with the reverse-time construction.
pub fn verify_component(net: &TemporalNetwork, members: &[u32], tie_mode: TieMode) -> bool {
    if members.len() <= 1 {
        return true;
    }
    let order = net.ascending_order();
    for &s in members {
        let reached = forward_reachable(net, &order, s, tie_mode);
        if members.iter().any(|&m| !reached[m as usize]) {
            return false;
        }
    }
    true
}

fn forward_reachable(
    net: &TemporalNetwork,
    ascending: &[usize],
    source: u32,
    tie_mode: TieMode,
) -> Vec<bool> {
    let n = net.vertex_count();
    match tie_mode {
        TieMode::Strict => {
            // arrival[v] = smallest rank whose edge reaches v; the source is
            // usable before rank 1. Earliest arrival dominates, so one
            // ascending pass settles everything.
            let mut arrival = vec![usize::MAX; n];
            arrival[source as usize] = 0;
            for (pos, &e) in ascending.iter().enumerate() {
                let edge = net.edges[e];
                let rank = pos + 1;
                if arrival[edge.u as usize] < rank && arrival[edge.v as usize] > rank {
                    arrival[edge.v as usize] = rank;
                }
            }
            arrival.into_iter().map(|a| a != usize::MAX).collect()
        }
        TieMode::AllowEqual => {
            let mut reached = vec![false; n];
            let mut arrive_t = vec![f64::INFINITY; n];
            reached[source as usize] = true;
            arrive_t[source as usize] = f64::NEG_INFINITY;
            let mut i = 0;
            while i < ascending.len() {
                let t = net.edges[ascending[i]].t;
                let mut j = i;
                while j < ascending.len() && net.edges[ascending[j]].t == t {
                    j += 1;
                }
                loop {
                    let mut changed = false;
                    for &e in &ascending[i..j] {
                        let edge = net.edges[e];
                        if reached[edge.u as usize]
                            && arrive_t[edge.u as usize] <= t
                            && !reached[edge.v as usize]
                        {
                            reached[edge.v as usize] = true;
                            arrive_t[edge.v as usize] = t;
                            changed = true;
                        }
                    }
                    if !changed {
                        break;
                    }
                }
                i = j;
            }
            reached
        }
    }
}
