//! Cooperative parallel search: a task queue over vertices plus a shared,
//! monotonically improving bound.
//!
//! Workers share a read-mostly graph snapshot, the alive mask, and one bound
//! cell. All shared writes are monotone (bound grows, alive flags fall), so a
//! stale read can only cause extra exploration, never a wrong prune. The
//! driver drains workers to a barrier before each compaction and hands out a
//! fresh snapshot afterwards.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use crate::graph::{StaticGraph, VertexId};
use crate::heuristic::heuristic_clique_parallel;
use crate::search::{
    self, LocalStats, SearchConfig, SearchOutcome, SearchStats, Snapshot, TaskCtx,
};

/// The shared incumbent: best clique size plus a members snapshot.
///
/// `best_size` only increases, and every increase installs a vertex set that
/// passed the pairwise adjacency check. Readers may lag behind the latest
/// install; that staleness is one-sided and only delays pruning.
pub struct SharedBound {
    size: AtomicUsize,
    generation: AtomicU64,
    inner: Mutex<BoundInner>,
    /// Fault-injection hook: when nonzero, `size()` reports the value from
    /// this many installs ago. Used by staleness tests; zero in production.
    read_lag: AtomicUsize,
}

#[derive(Default)]
struct BoundInner {
    members: Vec<VertexId>,
    trace: Vec<usize>,
}

impl SharedBound {
    pub fn new() -> SharedBound {
        SharedBound {
            size: AtomicUsize::new(0),
            generation: AtomicU64::new(0),
            inner: Mutex::new(BoundInner::default()),
            read_lag: AtomicUsize::new(0),
        }
    }

    /// Current best size. May trail the true best by one update under
    /// concurrency; never ahead of it.
    pub fn size(&self) -> usize {
        let lag = self.read_lag.load(Ordering::Relaxed);
        if lag == 0 {
            return self.size.load(Ordering::Acquire);
        }
        let inner = self.inner.lock().unwrap();
        if inner.trace.len() > lag {
            inner.trace[inner.trace.len() - 1 - lag]
        } else {
            0
        }
    }

    pub fn generation(&self) -> u64 {
        self.generation.load(Ordering::Acquire)
    }

    pub fn best_members(&self) -> Vec<VertexId> {
        self.inner.lock().unwrap().members.clone()
    }

    /// Sizes installed so far, in order; strictly increasing by construction.
    pub fn install_trace(&self) -> Vec<usize> {
        self.inner.lock().unwrap().trace.clone()
    }

    /// Atomically installs `members` iff strictly larger than the incumbent.
    /// The candidate must be a clique of `g`; violating that is a caller bug
    /// and aborts the run.
    pub fn publish(&self, mut members: Vec<VertexId>, g: &StaticGraph) -> bool {
        if members.len() <= self.size() {
            return false;
        }
        members.sort_unstable();
        assert!(
            g.is_clique(&members),
            "published candidate of size {} is not a clique",
            members.len()
        );
        let mut inner = self.inner.lock().unwrap();
        if members.len() <= inner.members.len() {
            return false;
        }
        inner.trace.push(members.len());
        self.size.store(members.len(), Ordering::Release);
        inner.members = members;
        self.generation.fetch_add(1, Ordering::AcqRel);
        true
    }

    #[doc(hidden)]
    pub fn set_read_lag(&self, lag: usize) {
        self.read_lag.store(lag, Ordering::Relaxed);
    }
}

impl Default for SharedBound {
    fn default() -> Self {
        Self::new()
    }
}

/// Frozen per-epoch work list: vertices ordered by reduced degree at queue
/// construction, claimed by a shared cursor. Dead vertices are skipped at
/// claim time, so a broadcast removal retires pending tasks for free.
pub struct TaskQueue {
    order: Vec<u32>,
    cursor: AtomicUsize,
}

impl TaskQueue {
    pub(crate) fn new(snap: &Snapshot, perturb: Option<u64>) -> TaskQueue {
        let mut order: Vec<u32> = snap
            .graph
            .alive_vertices()
            .map(|v| v as u32)
            .collect();
        match perturb {
            None => order.sort_unstable_by_key(|&v| (snap.reduced_degree(v as usize), v)),
            Some(seed) => {
                // Schedule audit mode: randomize the claim order entirely.
                let mut state = seed;
                for i in (1..order.len()).rev() {
                    let j = (splitmix64(&mut state) % (i as u64 + 1)) as usize;
                    order.swap(i, j);
                }
            }
        }
        TaskQueue {
            order,
            cursor: AtomicUsize::new(0),
        }
    }

    /// Claims the next alive vertex, or `None` once the queue is drained.
    /// Each vertex is handed out at most once.
    pub(crate) fn claim(&self, snap: &Snapshot) -> Option<u32> {
        loop {
            let i = self.cursor.fetch_add(1, Ordering::Relaxed);
            if i >= self.order.len() {
                return None;
            }
            let v = self.order[i];
            if snap.graph.is_alive(v as usize) {
                return Some(v);
            }
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Parallel exact maximum clique. Preprocessing (cores, heuristic, explicit
/// prune) runs up front, then workers claim vertices from the queue and run
/// the same per-vertex search as the serial solver against the shared bound.
/// One worker delegates to the serial path outright.
pub fn max_clique_parallel(g: &StaticGraph, cfg: &SearchConfig) -> SearchOutcome {
    if cfg.workers <= 1 {
        return search::max_clique(g, cfg);
    }
    assert!(
        cfg.rebuild_interval > std::time::Duration::ZERO,
        "rebuild_interval must be positive"
    );
    let workers = cfg.workers;
    let bound = SharedBound::new();
    let mut stats = SearchStats::default();

    let started = Instant::now();
    let prepared = search::prepare(g, &bound, &mut stats, |work, cores| {
        heuristic_clique_parallel(work, cores, workers)
    });
    let Some(mut snap) = prepared else {
        stats.search_time = started.elapsed();
        return search::finish(g, &bound, stats);
    };

    let search_started = Instant::now();
    let mut epoch = 0u64;
    loop {
        if snap.graph.alive_count() == 0 || bound.size() > snap.kmax as usize {
            break;
        }
        let queue = TaskQueue::new(&snap, cfg.schedule_seed.map(|s| s ^ epoch.wrapping_mul(0x9e37)));
        let stop = AtomicBool::new(false);
        let deadline = Instant::now().checked_add(cfg.rebuild_interval);

        let locals: Vec<LocalStats> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let snap = &snap;
                    let bound = &bound;
                    let queue = &queue;
                    let stop = &stop;
                    scope.spawn(move || {
                        let mut ctx = TaskCtx {
                            snap,
                            bound,
                            orig: g,
                            cfg,
                            stats: LocalStats::default(),
                        };
                        let mut jitter = cfg
                            .schedule_seed
                            .map(|s| s ^ (w as u64) << 32 ^ epoch);
                        while !stop.load(Ordering::Relaxed) {
                            let Some(v) = queue.claim(snap) else { break };
                            if let Some(state) = jitter.as_mut() {
                                if splitmix64(state).is_multiple_of(4) {
                                    std::thread::yield_now();
                                }
                            }
                            ctx.stats.tasks += 1;
                            ctx.initial_branch(v as usize);
                            // The searched-out vertex leaves the graph for
                            // every worker, not just this one.
                            broadcast_removals(snap, &[v]);
                            if bound.size() > snap.kmax as usize {
                                stop.store(true, Ordering::Relaxed);
                                break;
                            }
                            let timed_out =
                                deadline.is_some_and(|d| Instant::now() >= d);
                            if (timed_out || snap.dead_fraction() > 0.75)
                                && snap.graph.alive_count() > 0
                            {
                                stop.store(true, Ordering::Relaxed);
                                break;
                            }
                        }
                        ctx.stats
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("search worker panicked"))
                .collect()
        });
        for local in &locals {
            stats.absorb(local);
        }

        if snap.graph.alive_count() > 0 && bound.size() <= snap.kmax as usize {
            snap = Snapshot::build(&snap.graph, Some(&snap.to_orig), bound.size());
            stats.compactions += 1;
        }
        epoch += 1;
    }
    stats.search_time = search_started.elapsed();
    search::finish(g, &bound, stats)
}

/// Flips the alive flag for each vertex. The caller asserts the removals are
/// justified (core rule against the published bound); workers observe them at
/// the next claim or neighborhood build, in no particular order.
pub(crate) fn broadcast_removals(snap: &Snapshot, vertices: &[u32]) -> u64 {
    let mut removed = 0;
    for &v in vertices {
        if snap.remove_vertex(v as usize) {
            removed += 1;
        }
    }
    removed
}
