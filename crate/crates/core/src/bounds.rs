//! Clique upper bounds: k-core decomposition, degeneracy-order greedy
//! coloring, and their combination `min(L, K+1)`.
//!
//! Core numbers and colorings run over anything exposing [`Adjacency`]: the
//! full graph (alive vertices only) or an extracted neighborhood subgraph.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::graph::{NeighborhoodSubgraph, StaticGraph, VertexId};

/// Vertex universe the bound machinery walks over. `present` distinguishes
/// removed vertices; neighbor callbacks must yield present vertices only.
pub trait Adjacency {
    fn order(&self) -> usize;
    fn present(&self, v: usize) -> bool;
    fn for_neighbors(&self, v: usize, f: impl FnMut(usize));
}

impl Adjacency for StaticGraph {
    fn order(&self) -> usize {
        self.vertex_count()
    }

    fn present(&self, v: usize) -> bool {
        self.is_alive(v)
    }

    fn for_neighbors(&self, v: usize, mut f: impl FnMut(usize)) {
        for &u in self.neighbors(v) {
            if self.is_alive(u as usize) {
                f(u as usize);
            }
        }
    }
}

impl Adjacency for NeighborhoodSubgraph {
    fn order(&self) -> usize {
        self.len()
    }

    fn present(&self, _v: usize) -> bool {
        true
    }

    fn for_neighbors(&self, v: usize, mut f: impl FnMut(usize)) {
        for &u in self.neighbors(v) {
            f(u as usize);
        }
    }
}

/// Result of peeling: per-vertex core numbers, the peel sequence, and K(G).
#[derive(Debug, Clone)]
pub struct CoreDecomposition {
    core: Vec<u32>,
    order: Vec<VertexId>,
    max_core: u32,
}

impl CoreDecomposition {
    /// Core number per vertex id (0 for removed vertices).
    pub fn values(&self) -> &[u32] {
        &self.core
    }

    pub fn core(&self, v: usize) -> u32 {
        self.core[v]
    }

    /// Peel sequence: processing vertices in this order, each has at most
    /// `max_core` neighbors appearing later.
    pub fn order(&self) -> &[VertexId] {
        &self.order
    }

    /// Degeneracy order for coloring: decreasing core numbers, i.e. the peel
    /// sequence reversed. Coloring in this order uses at most K(G)+1 colors.
    pub fn coloring_order(&self) -> Vec<VertexId> {
        self.order.iter().rev().copied().collect()
    }

    /// K(G), the graph core number (degeneracy).
    pub fn max_core(&self) -> u32 {
        self.max_core
    }
}

/// Linear-space bucket peeling with a lazy min-heap so that ties are always
/// broken toward the lowest vertex id. Runs in O((n + m) log n); the heap
/// buys the exact, reproducible tie rule.
pub fn core_numbers(g: &impl Adjacency) -> CoreDecomposition {
    let n = g.order();
    let mut deg = vec![0usize; n];
    let mut present = vec![false; n];
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> = BinaryHeap::new();
    let mut participants = 0;
    for v in 0..n {
        if g.present(v) {
            present[v] = true;
            participants += 1;
            let mut d = 0;
            g.for_neighbors(v, |_| d += 1);
            deg[v] = d;
            heap.push(Reverse((d, v)));
        }
    }

    let mut core = vec![0u32; n];
    let mut order = Vec::with_capacity(participants);
    let mut peeled = vec![false; n];
    let mut threshold = 0usize;
    while let Some(Reverse((d, v))) = heap.pop() {
        if peeled[v] || deg[v] != d {
            continue; // stale entry
        }
        peeled[v] = true;
        threshold = threshold.max(d);
        core[v] = threshold as u32;
        order.push(v as VertexId);
        g.for_neighbors(v, |u| {
            if !peeled[u] {
                deg[u] -= 1;
                heap.push(Reverse((deg[u], u)));
            }
        });
    }
    let max_core = order
        .iter()
        .map(|&v| core[v as usize])
        .max()
        .unwrap_or(0);
    CoreDecomposition {
        core,
        order,
        max_core,
    }
}

/// Proper coloring with 1-based color labels; `num_colors` is the largest
/// label used, the L value serving as a clique upper bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    color: Vec<u32>,
    num_colors: u32,
}

impl Coloring {
    pub fn color(&self, v: usize) -> u32 {
        self.color[v]
    }

    pub fn values(&self) -> &[u32] {
        &self.color
    }

    pub fn num_colors(&self) -> u32 {
        self.num_colors
    }
}

/// Greedy coloring: each vertex of `order` gets the smallest color unused
/// among its already-colored neighbors. Vertices outside `order` stay 0.
pub fn greedy_color(g: &impl Adjacency, order: &[VertexId]) -> Coloring {
    let n = g.order();
    let mut color = vec![0u32; n];
    // stamp[c] == current vertex marker means color c+1 is taken.
    let mut stamp: Vec<u32> = Vec::new();
    let mut num_colors = 0;
    for (i, &v) in order.iter().enumerate() {
        let v = v as usize;
        let marker = i as u32 + 1;
        g.for_neighbors(v, |u| {
            let c = color[u];
            if c != 0 {
                let idx = (c - 1) as usize;
                if idx >= stamp.len() {
                    stamp.resize(idx + 1, 0);
                }
                stamp[idx] = marker;
            }
        });
        let mut pick = 1u32;
        while (pick as usize - 1) < stamp.len() && stamp[pick as usize - 1] == marker {
            pick += 1;
        }
        color[v] = pick;
        num_colors = num_colors.max(pick);
    }
    Coloring { color, num_colors }
}

/// The chain `ω(G) <= L(G) <= K(G)+1`, evaluated over the alive subgraph:
/// returns `min(L, K+1)` with L colored in degeneracy order.
pub fn clique_upper_bound(g: &StaticGraph) -> u32 {
    let cores = core_numbers(g);
    if cores.order().is_empty() {
        return 0;
    }
    let coloring = greedy_color(g, &cores.coloring_order());
    coloring.num_colors().min(cores.max_core() + 1)
}
