//! Exact branch-and-bound maximum clique search.
//!
//! The pipeline: core numbers, greedy heuristic clique, explicit removal of
//! every vertex whose core number is below the heuristic size, then a main
//! loop that explores remaining vertices in order of smallest reduced degree.
//! Each vertex's reduced neighborhood is bounded by neighborhood core
//! numbers and a greedy coloring before the recursive branch runs. Removals
//! stay implicit (alive-mask flips) between periodic compactions.
//!
//! Everything here is serial; `parallel` drives the same per-vertex task
//! machinery from multiple workers against the shared bound.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::bounds::{core_numbers, greedy_color, CoreDecomposition};
use crate::graph::{NeighborhoodSubgraph, StaticGraph, VertexId, DEFAULT_DENSE_THRESHOLD};
use crate::heuristic::{heuristic_clique, Clique};
use crate::parallel::SharedBound;

/// Knobs for the solver. `workers` is honored by
/// [`crate::parallel::max_clique_parallel`]; [`max_clique`] is always serial.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Neighborhood core-number pruning and degeneracy-order coloring in
    /// InitialBranch. Off = the ablation variant (degree-first coloring only).
    pub use_neighborhood_cores: bool,
    /// Wall-clock period between graph compactions.
    pub rebuild_interval: Duration,
    /// Subgraphs at or below this size get a bit-matrix adjacency.
    pub dense_threshold: usize,
    pub workers: usize,
    /// Optional schedule perturbation for parallel runs: shuffles task claim
    /// order and injects yields. Exists for determinism audits.
    pub schedule_seed: Option<u64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            use_neighborhood_cores: true,
            rebuild_interval: Duration::from_secs(4),
            dense_threshold: DEFAULT_DENSE_THRESHOLD,
            workers: 1,
            schedule_seed: None,
        }
    }
}

/// Compact a snapshot once this fraction of its vertices is dead, even if
/// the rebuild timer has not fired yet.
const COMPACT_DEAD_FRACTION: f64 = 0.75;

/// Counters and timings accumulated over a run.
#[derive(Debug, Clone, Default)]
pub struct SearchStats {
    pub initial_branches: u64,
    pub branches: u64,
    pub pruned_by_size: u64,
    pub pruned_by_neighborhood_core: u64,
    pub pruned_by_color: u64,
    /// Vertices implicitly removed because their core number fell below the
    /// published bound.
    pub core_rule_removals: u64,
    pub compactions: u64,
    pub tasks: u64,
    /// Sizes installed into the shared bound, in install order.
    pub bound_trace: Vec<usize>,
    /// K(G) of the input graph.
    pub graph_core_number: u32,
    /// L(G): colors used by the degeneracy-order coloring of the input graph.
    pub coloring_bound: u32,
    pub heuristic_size: usize,
    pub cores_time: Duration,
    pub heuristic_time: Duration,
    pub search_time: Duration,
}

impl SearchStats {
    pub(crate) fn absorb(&mut self, local: &LocalStats) {
        self.initial_branches += local.initial_branches;
        self.branches += local.branches;
        self.pruned_by_size += local.pruned_by_size;
        self.pruned_by_neighborhood_core += local.pruned_by_neighborhood_core;
        self.pruned_by_color += local.pruned_by_color;
        self.core_rule_removals += local.core_rule_removals;
        self.tasks += local.tasks;
    }
}

#[derive(Debug, Default, Clone)]
pub(crate) struct LocalStats {
    pub initial_branches: u64,
    pub branches: u64,
    pub pruned_by_size: u64,
    pub pruned_by_neighborhood_core: u64,
    pub pruned_by_color: u64,
    pub core_rule_removals: u64,
    pub tasks: u64,
}

/// Result of a solve: the maximum clique in original vertex ids, plus stats.
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub clique: Clique,
    pub stats: SearchStats,
}

/// A compacted working copy of the graph plus the state derived from it.
/// Shared read-mostly by workers; all mutation is monotone (alive flags fall,
/// reduced degrees fall, the core-rule cursor advances).
pub(crate) struct Snapshot {
    pub graph: StaticGraph,
    pub to_orig: Vec<VertexId>,
    pub cores: CoreDecomposition,
    pub kmax: u32,
    alive_deg: Vec<AtomicU32>,
    /// Vertex ids sorted by (core asc, id asc); the prefix below `cursor`
    /// has been removed by the core rule.
    by_core: Vec<u32>,
    cursor: Mutex<usize>,
}

impl Snapshot {
    /// Compacts `source` (dropping dead vertices), recomputes cores, and
    /// applies the core rule against `bound`.
    pub(crate) fn build(
        source: &StaticGraph,
        source_to_orig: Option<&[VertexId]>,
        bound: usize,
    ) -> Snapshot {
        let (graph, map) = source.compact();
        let to_orig: Vec<VertexId> = match source_to_orig {
            Some(prev) => map.iter().map(|&m| prev[m as usize]).collect(),
            None => map,
        };
        let cores = core_numbers(&graph);
        let kmax = cores.max_core();
        let n = graph.vertex_count();
        let alive_deg: Vec<AtomicU32> = (0..n)
            .map(|v| AtomicU32::new(graph.degree(v) as u32))
            .collect();
        let mut by_core: Vec<u32> = (0..n as u32).collect();
        by_core.sort_unstable_by_key(|&v| (cores.core(v as usize), v));
        let snap = Snapshot {
            graph,
            to_orig,
            cores,
            kmax,
            alive_deg,
            by_core,
            cursor: Mutex::new(0),
        };
        snap.apply_core_rule(bound);
        snap
    }

    pub(crate) fn reduced_degree(&self, v: usize) -> u32 {
        self.alive_deg[v].load(Ordering::Relaxed)
    }

    /// Implicit removal: flips the alive flag and decrements the reduced
    /// degree of every neighbor. Idempotent.
    pub(crate) fn remove_vertex(&self, v: usize) -> bool {
        if !self.graph.remove_implicit(v) {
            return false;
        }
        for &w in self.graph.neighbors(v) {
            self.alive_deg[w as usize].fetch_sub(1, Ordering::Relaxed);
        }
        true
    }

    /// Removes every vertex whose snapshot core number is strictly below
    /// `bound`. Core numbers only shrink as the graph shrinks, so a stale
    /// (larger) value can only keep a vertex alive too long, never remove a
    /// vertex that still fits in a bigger clique. Returns the removal count.
    pub(crate) fn apply_core_rule(&self, bound: usize) -> u64 {
        if bound == 0 {
            return 0;
        }
        let mut cursor = self.cursor.lock().unwrap();
        let mut removed = 0;
        while *cursor < self.by_core.len() {
            let v = self.by_core[*cursor];
            if self.cores.core(v as usize) as usize >= bound {
                break;
            }
            if self.remove_vertex(v as usize) {
                removed += 1;
            }
            *cursor += 1;
        }
        removed
    }

    pub(crate) fn dead_fraction(&self) -> f64 {
        let n = self.graph.vertex_count();
        if n == 0 {
            return 0.0;
        }
        (n - self.graph.alive_count()) as f64 / n as f64
    }

    pub(crate) fn translate_to_orig(&self, locals: &[u32]) -> Vec<VertexId> {
        locals
            .iter()
            .map(|&v| self.to_orig[v as usize])
            .collect()
    }
}

/// Per-worker view of a search epoch: one snapshot, the shared bound, the
/// original graph for clique certification, and private counters.
pub(crate) struct TaskCtx<'a> {
    pub snap: &'a Snapshot,
    pub bound: &'a SharedBound,
    pub orig: &'a StaticGraph,
    pub cfg: &'a SearchConfig,
    pub stats: LocalStats,
}

impl TaskCtx<'_> {
    /// Bound checks and the first branching level for vertex `u`: builds the
    /// reduced neighborhood, gates it on size, neighborhood cores, and a
    /// greedy coloring, then hands the surviving candidate set to `branch`.
    pub(crate) fn initial_branch(&mut self, u: usize) {
        self.stats.initial_branches += 1;
        let sub = self.snap.graph.reduced_neighbors(
            u,
            self.bound.size() as u32,
            Some(self.snap.cores.values()),
            None,
            self.cfg.dense_threshold,
        );
        if sub.len() <= self.bound.size() {
            self.stats.pruned_by_size += 1;
            return;
        }

        let candidates: Vec<u32> = if self.cfg.use_neighborhood_cores {
            let kn = core_numbers(&sub);
            if (kn.max_core() + 1) as usize <= self.bound.size() {
                self.stats.pruned_by_neighborhood_core += 1;
                return;
            }
            // Drop vertices whose neighborhood core rules out membership in
            // any clique larger than the bound: a clique of size |H|+1 in P
            // forces K_N(v) >= |H| for each member, so K_N(v) < |H| is the
            // sharpest removal that cannot discard an improving clique.
            let floor = self.bound.size() as u32;
            let survivors: Vec<VertexId> = kn
                .coloring_order()
                .into_iter()
                .filter(|&v| kn.core(v as usize) >= floor)
                .collect();
            let coloring = greedy_color(&sub, &survivors);
            if coloring.num_colors() as usize <= self.bound.size() {
                self.stats.pruned_by_color += 1;
                return;
            }
            #[allow(clippy::unnecessary_cast)] // VertexId widens under wide-index
            sort_by_color(
                survivors.iter().map(|&v| v as u32),
                coloring.values(),
            )
        } else {
            // Ablation variant: no neighborhood cores; largest degree-first
            // coloring order, ties toward the lower id.
            let mut order: Vec<VertexId> = (0..sub.len() as VertexId).collect();
            order.sort_unstable_by_key(|&v| (Reverse(sub.degree(v as usize)), v));
            let coloring = greedy_color(&sub, &order);
            if coloring.num_colors() as usize <= self.bound.size() {
                self.stats.pruned_by_color += 1;
                return;
            }
            sort_by_color(0..sub.len() as u32, coloring.values())
        };

        let depth_limit = self.snap.kmax as usize + 1;
        let mut clique_stack = Vec::new();
        self.branch(&sub, &mut clique_stack, candidates, depth_limit);
    }

    /// Recursive exploration. `p` arrives sorted by ascending color, so
    /// popping from the back always selects the vertex with the largest
    /// color. The invariant: every member of `p` is adjacent to all of `c`.
    fn branch(
        &mut self,
        sub: &NeighborhoodSubgraph,
        c: &mut Vec<u32>,
        mut p: Vec<u32>,
        depth_limit: usize,
    ) {
        self.stats.branches += 1;
        while !p.is_empty() && p.len() + c.len() > self.bound.size() {
            let u = p.pop().unwrap();
            c.push(u);
            assert!(
                c.len() <= depth_limit,
                "branch depth {} exceeded the degeneracy bound {}; \
                 the candidate-set invariant is broken",
                c.len(),
                depth_limit
            );
            let p_next: Vec<u32> = p
                .iter()
                .copied()
                .filter(|&w| sub.has_edge(u as usize, w as usize))
                .collect();
            if !p_next.is_empty() {
                let (recolored, colors_used) = recolor(sub, p_next);
                if c.len() + colors_used as usize > self.bound.size() {
                    self.branch(sub, c, recolored, depth_limit);
                }
            } else if c.len() > self.bound.size() {
                self.record_new_best(sub, c);
            }
            c.pop();
        }
    }

    /// Publishes `c` (local ids) as the new incumbent and applies the core
    /// rule at the improved bound.
    fn record_new_best(&mut self, sub: &NeighborhoodSubgraph, c: &[u32]) {
        #[allow(clippy::unnecessary_cast)] // VertexId widens under wide-index
        let snapshot_ids: Vec<u32> = c.iter().map(|&v| sub.global_id(v as usize) as u32).collect();
        let members = self.snap.translate_to_orig(&snapshot_ids);
        if self.bound.publish(members, self.orig) {
            self.stats.core_rule_removals += self.snap.apply_core_rule(self.bound.size());
        }
    }
}

/// Sorts candidates ascending by (color, id); `branch` pops from the back.
fn sort_by_color(candidates: impl Iterator<Item = u32>, colors: &[u32]) -> Vec<u32> {
    let mut p: Vec<u32> = candidates.collect();
    p.sort_unstable_by_key(|&v| (colors[v as usize], v));
    p
}

/// Greedy coloring of the candidate set `p` inside `sub`, in descending
/// degree-within-`p` order (not degeneracy order). Returns `p` re-sorted
/// ascending by the new colors, and the number of colors used.
fn recolor(sub: &NeighborhoodSubgraph, p: Vec<u32>) -> (Vec<u32>, u32) {
    let k = sub.len();
    let mut in_p = vec![false; k];
    for &v in &p {
        in_p[v as usize] = true;
    }
    let mut deg_in_p = vec![0u32; k];
    for &v in &p {
        let d = sub
            .neighbors(v as usize)
            .iter()
            .filter(|&&w| in_p[w as usize])
            .count() as u32;
        deg_in_p[v as usize] = d;
    }
    let mut order = p;
    order.sort_unstable_by_key(|&v| (Reverse(deg_in_p[v as usize]), v));

    let mut color = vec![0u32; k];
    let mut used: Vec<bool> = Vec::new();
    let mut num_colors = 0u32;
    for &v in &order {
        for flag in used.iter_mut() {
            *flag = false;
        }
        for &w in sub.neighbors(v as usize) {
            let cw = color[w as usize];
            if cw != 0 {
                let idx = (cw - 1) as usize;
                if idx >= used.len() {
                    used.resize(idx + 1, false);
                }
                used[idx] = true;
            }
        }
        let mut pick = 1u32;
        while (pick as usize - 1) < used.len() && used[pick as usize - 1] {
            pick += 1;
        }
        color[v as usize] = pick;
        num_colors = num_colors.max(pick);
    }
    order.sort_unstable_by_key(|&v| (color[v as usize], v));
    (order, num_colors)
}

/// Shared pre-search work: copy the input, compute cores and the heuristic
/// clique, publish it, and build the explicitly pruned first snapshot.
/// Returns `None` when the bound already matches the global upper bound.
pub(crate) fn prepare(
    g: &StaticGraph,
    bound: &SharedBound,
    stats: &mut SearchStats,
    heuristic: impl FnOnce(&StaticGraph, &CoreDecomposition) -> Clique,
) -> Option<Snapshot> {
    let (work, map0) = g.compact();

    let t = Instant::now();
    let cores = core_numbers(&work);
    stats.cores_time = t.elapsed();
    stats.graph_core_number = cores.max_core();

    let t = Instant::now();
    let h = heuristic(&work, &cores);
    stats.heuristic_time = t.elapsed();
    stats.heuristic_size = h.size();
    if h.size() > 0 {
        let members: Vec<VertexId> = h.members().iter().map(|&v| map0[v as usize]).collect();
        bound.publish(members, g);
    }

    // L(G) from the degeneracy-order coloring; with K(G)+1 this is the
    // global upper bound that can certify the heuristic immediately.
    let coloring = greedy_color(&work, &cores.coloring_order());
    stats.coloring_bound = coloring.num_colors();
    let upper = coloring.num_colors().min(cores.max_core() + 1) as usize;
    if bound.size() >= upper {
        return None;
    }

    // Explicit removal of vertices that cannot join a clique beating the
    // heuristic, then a physical rebuild (the one explicit prune).
    let floor = bound.size() as u32;
    if floor > 0 {
        for v in 0..work.vertex_count() {
            if (cores.core(v)) < floor {
                work.remove_implicit(v);
            }
        }
    }
    stats.compactions += 1;
    Some(Snapshot::build(&work, Some(&map0), bound.size()))
}

pub(crate) fn finish(
    g: &StaticGraph,
    bound: &SharedBound,
    mut stats: SearchStats,
) -> SearchOutcome {
    stats.bound_trace = bound.install_trace();
    let members = bound.best_members();
    let clique = Clique::certified(members, g).expect("published bound must be a clique");
    SearchOutcome { clique, stats }
}

/// Serial exact maximum clique solver.
pub fn max_clique(g: &StaticGraph, cfg: &SearchConfig) -> SearchOutcome {
    assert!(cfg.rebuild_interval > Duration::ZERO, "rebuild_interval must be positive");
    let bound = SharedBound::new();
    let mut stats = SearchStats::default();

    let started = Instant::now();
    let Some(mut snap) = prepare(g, &bound, &mut stats, heuristic_clique) else {
        stats.search_time = started.elapsed();
        return finish(g, &bound, stats);
    };

    let search_started = Instant::now();
    'epochs: loop {
        // Min-heap over (reduced degree, id) with lazy repair of stale entries.
        let mut heap: BinaryHeap<Reverse<(u32, u32)>> = snap
            .graph
            .alive_vertices()
            .map(|v| Reverse((snap.reduced_degree(v), v as u32)))
            .collect();
        let mut ctx = TaskCtx {
            snap: &snap,
            bound: &bound,
            orig: g,
            cfg,
            stats: LocalStats::default(),
        };
        let epoch_started = Instant::now();
        let mut processed = 0u64;
        let rebuild = loop {
            if snap.graph.alive_count() == 0 {
                break false;
            }
            if bound.size() > snap.kmax as usize {
                break false; // |H| has reached K(G)+1; nothing larger exists
            }
            let Some(Reverse((d, v))) = heap.pop() else {
                break false;
            };
            let v = v as usize;
            if !snap.graph.is_alive(v) {
                continue;
            }
            let current = snap.reduced_degree(v);
            if current != d {
                heap.push(Reverse((current, v as u32)));
                continue;
            }
            ctx.stats.tasks += 1;
            ctx.initial_branch(v);
            snap.remove_vertex(v);
            processed += 1;
            if processed > 0
                && (epoch_started.elapsed() >= cfg.rebuild_interval
                    || snap.dead_fraction() > COMPACT_DEAD_FRACTION)
                && snap.graph.alive_count() > 0
            {
                break true;
            }
        };
        stats.absorb(&ctx.stats);
        if !rebuild {
            break 'epochs;
        }
        snap = Snapshot::build(&snap.graph, Some(&snap.to_orig), bound.size());
        stats.compactions += 1;
    }
    stats.search_time = search_started.elapsed();
    finish(g, &bound, stats)
}
