//! Greedy clique heuristic guided by core numbers.
//!
//! Seeds are visited in decreasing core-number order; each seed greedily
//! absorbs neighbors whose core numbers still allow a clique larger than the
//! best found. Core numbers lower-bound the largest clique a vertex can sit
//! in, so the scan stops as soon as no remaining seed can improve the result.

use thiserror::Error;

use crate::bounds::CoreDecomposition;
use crate::graph::{StaticGraph, VertexId};

#[derive(Debug, Error)]
#[error("vertex set is not a clique: {0} and {1} are not adjacent")]
pub struct NotAClique(pub VertexId, pub VertexId);

/// A vertex set certified pairwise adjacent at construction time.
/// Its size doubles as the global clique lower bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clique {
    members: Vec<VertexId>,
}

impl Clique {
    pub fn empty() -> Clique {
        Clique {
            members: Vec::new(),
        }
    }

    /// Validates pairwise adjacency against `g` and sorts the members.
    pub fn certified(mut members: Vec<VertexId>, g: &StaticGraph) -> Result<Clique, NotAClique> {
        members.sort_unstable();
        members.dedup();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if !g.has_edge(u as usize, v as usize) {
                    return Err(NotAClique(u, v));
                }
            }
        }
        Ok(Clique { members })
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Members in ascending id order.
    pub fn members(&self) -> &[VertexId] {
        &self.members
    }

    pub fn into_members(self) -> Vec<VertexId> {
        self.members
    }
}

/// Seed/scan priority: decreasing core, then decreasing degree, then
/// ascending id. Fixed so runs are reproducible.
fn scan_rank(g: &StaticGraph, cores: &CoreDecomposition, v: usize) -> (u32, usize, usize) {
    (cores.core(v), g.degree(v), usize::MAX - v)
}

/// Greedy clique search over all alive seeds. Exact on complete graphs, a
/// lower bound everywhere else.
pub fn heuristic_clique(g: &StaticGraph, cores: &CoreDecomposition) -> Clique {
    let mut seeds: Vec<usize> = g.alive_vertices().collect();
    seeds.sort_unstable_by_key(|&v| std::cmp::Reverse(scan_rank(g, cores, v)));
    best_over_seeds(g, cores, &seeds, 0)
}

/// Runs the greedy scan over `seeds` (already priority-sorted), starting from
/// an existing bound `floor`. Returns the best clique found (empty if none
/// beats the floor).
fn best_over_seeds(
    g: &StaticGraph,
    cores: &CoreDecomposition,
    seeds: &[usize],
    floor: usize,
) -> Clique {
    let mut best: Vec<VertexId> = Vec::new();
    let mut max = floor;
    let mut candidates: Vec<usize> = Vec::new();
    for &v in seeds {
        if (cores.core(v) as usize) < max {
            break; // no later seed can beat the bound
        }
        candidates.clear();
        candidates.extend(
            g.alive_neighbors(v)
                .map(|u| u as usize)
                .filter(|&u| cores.core(u) as usize > max),
        );
        candidates.sort_unstable_by_key(|&u| std::cmp::Reverse(scan_rank(g, cores, u)));
        let mut clique: Vec<usize> = vec![v];
        for &u in candidates.iter() {
            if clique.iter().all(|&c| g.has_edge(u, c)) {
                clique.push(u);
            }
        }
        if clique.len() > max {
            max = clique.len();
            best = clique.iter().map(|&u| u as VertexId).collect();
        }
    }
    best.sort_unstable();
    debug_assert!(g.is_clique(&best));
    Clique { members: best }
}

/// Parallel variant: seeds are strided across workers, each worker keeps a
/// private best, and results merge deterministically (largest size, then
/// lexicographically smallest member list).
pub fn heuristic_clique_parallel(
    g: &StaticGraph,
    cores: &CoreDecomposition,
    workers: usize,
) -> Clique {
    let workers = workers.max(1);
    if workers == 1 {
        return heuristic_clique(g, cores);
    }
    let mut seeds: Vec<usize> = g.alive_vertices().collect();
    seeds.sort_unstable_by_key(|&v| std::cmp::Reverse(scan_rank(g, cores, v)));

    let results: Vec<Clique> = std::thread::scope(|scope| {
        let seeds = &seeds;
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    let mine: Vec<usize> =
                        seeds.iter().copied().skip(w).step_by(workers).collect();
                    best_over_seeds(g, cores, &mine, 0)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });

    results
        .into_iter()
        .max_by(|a, b| {
            a.size()
                .cmp(&b.size())
                .then_with(|| b.members.cmp(&a.members))
        })
        .unwrap_or_else(Clique::empty)
}
