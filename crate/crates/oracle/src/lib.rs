//! Brute-force reference implementations used to validate the solver.
//!
//! Everything here trades speed for obviousness and shares no code with the
//! production crate: inputs are raw edge lists, not solver data structures.
//! Each oracle refuses inputs above its budget instead of approximating.

pub mod gen;

use std::fmt;

/// Hard ceilings for the exponential/quadratic reference algorithms.
#[derive(Debug, Clone, Copy)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_temporal_edges: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 40,
            max_temporal_edges: 100_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BudgetExceeded {
    pub what: &'static str,
    pub got: usize,
    pub budget: usize,
}

impl fmt::Display for BudgetExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "oracle refused: {} = {} exceeds budget {}",
            self.what, self.got, self.budget
        )
    }
}

impl std::error::Error for BudgetExceeded {}

fn adjacency_masks(n: usize, edges: &[(u64, u64)]) -> Vec<u64> {
    let mut adj = vec![0u64; n];
    for &(u, v) in edges {
        let (u, v) = (u as usize, v as usize);
        if u != v && u < n && v < n {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    adj
}

/// Exact maximum clique by Bron–Kerbosch maximal-clique enumeration with
/// pivoting, tracking the largest clique seen. Members returned ascending.
pub fn max_clique(n: usize, edges: &[(u64, u64)]) -> Result<Vec<u32>, BudgetExceeded> {
    max_clique_with_budget(n, edges, OracleBudget::default())
}

pub fn max_clique_with_budget(
    n: usize,
    edges: &[(u64, u64)],
    budget: OracleBudget,
) -> Result<Vec<u32>, BudgetExceeded> {
    let cap = budget.max_vertices.min(64);
    if n > cap {
        return Err(BudgetExceeded {
            what: "vertices",
            got: n,
            budget: cap,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let adj = adjacency_masks(n, edges);
    let mut best = 0u64;
    let all = if n == 64 { !0 } else { (1u64 << n) - 1 };
    bron_kerbosch(&adj, 0, all, 0, &mut best);
    Ok(mask_members(best))
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, best: &mut u64) {
    if p == 0 && x == 0 {
        if r.count_ones() > best.count_ones() {
            *best = r;
        }
        return;
    }
    // Tomita pivot: the vertex of P ∪ X covering most of P.
    let mut pivot = usize::MAX;
    let mut covered = u32::MAX;
    let mut scan = p | x;
    while scan != 0 {
        let u = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        let uncovered = (p & !adj[u]).count_ones();
        if pivot == usize::MAX || uncovered < covered {
            pivot = u;
            covered = uncovered;
        }
    }
    let mut cand = p & !adj[pivot];
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        let bit = 1u64 << v;
        cand &= cand - 1;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], best);
        p &= !bit;
        x |= bit;
    }
}

fn mask_members(mask: u64) -> Vec<u32> {
    let mut m = mask;
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros());
        m &= m - 1;
    }
    out
}

/// Second, independent clique reference: raw scan over all vertex subsets.
/// Exponential in `n`; refuses anything above 20 vertices.
pub fn max_clique_subset_scan(n: usize, edges: &[(u64, u64)]) -> Result<Vec<u32>, BudgetExceeded> {
    const SUBSET_CAP: usize = 20;
    if n > SUBSET_CAP {
        return Err(BudgetExceeded {
            what: "vertices (subset scan)",
            got: n,
            budget: SUBSET_CAP,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let adj = adjacency_masks(n, edges);
    let mut best = 0u64;
    for mask in 1u64..(1 << n) {
        if mask.count_ones() <= best.count_ones() {
            continue;
        }
        let mut ok = true;
        let mut scan = mask;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            if adj[v] & mask != mask ^ (1 << v) {
                ok = false;
                break;
            }
        }
        if ok {
            best = mask;
        }
    }
    Ok(mask_members(best))
}

/// Core numbers by repeated minimum-degree deletion (smallest id first among
/// ties), recording the highest threshold in force when each vertex leaves.
pub fn core_numbers(n: usize, edges: &[(u64, u64)]) -> Result<Vec<u32>, BudgetExceeded> {
    const PEEL_CAP: usize = 2_000;
    if n > PEEL_CAP {
        return Err(BudgetExceeded {
            what: "vertices (peeling)",
            got: n,
            budget: PEEL_CAP,
        });
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in edges {
        let (u, v) = (u as usize, v as usize);
        if u != v && !adj[u].contains(&v) {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut gone = vec![false; n];
    let mut core = vec![0u32; n];
    let mut threshold = 0usize;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !gone[v])
            .min_by_key(|&v| (deg[v], v))
            .unwrap();
        threshold = threshold.max(deg[v]);
        core[v] = threshold as u32;
        gone[v] = true;
        for &u in &adj[v] {
            if !gone[u] {
                deg[u] -= 1;
            }
        }
    }
    Ok(core)
}

/// Tie handling for equal timestamps, mirrored from the solver's contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieMode {
    /// Ties broken by input order into a strict total order (default).
    Strict,
    /// Paths may chain non-decreasing timestamps.
    AllowEqual,
}

/// Temporal reachability per the definition: forward extension of paths over
/// edges sorted ascending in time. Returns one sorted reachable set per
/// source, always including the source itself.
pub fn reach(
    n: usize,
    edges: &[(u32, u32, f64)],
    mode: TieMode,
) -> Result<Vec<Vec<u32>>, BudgetExceeded> {
    reach_with_budget(n, edges, mode, OracleBudget::default())
}

pub fn reach_with_budget(
    n: usize,
    edges: &[(u32, u32, f64)],
    mode: TieMode,
    budget: OracleBudget,
) -> Result<Vec<Vec<u32>>, BudgetExceeded> {
    if edges.len() > budget.max_temporal_edges {
        return Err(BudgetExceeded {
            what: "temporal edges",
            got: edges.len(),
            budget: budget.max_temporal_edges,
        });
    }
    // Ascending time, input order breaking ties.
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.sort_by(|&a, &b| edges[a].2.partial_cmp(&edges[b].2).unwrap().then(a.cmp(&b)));

    let mut sets = Vec::with_capacity(n);
    for s in 0..n as u32 {
        sets.push(match mode {
            TieMode::Strict => reach_from_strict(n, edges, &order, s),
            TieMode::AllowEqual => reach_from_allow_equal(n, edges, &order, s),
        });
    }
    Ok(sets)
}

/// Earliest-arrival scan: a later edge extends a path iff its rank is
/// strictly greater than the arrival rank at its tail.
fn reach_from_strict(n: usize, edges: &[(u32, u32, f64)], order: &[usize], s: u32) -> Vec<u32> {
    let mut arrival = vec![usize::MAX; n];
    arrival[s as usize] = 0; // source usable before any edge
    for (pos, &e) in order.iter().enumerate() {
        let (u, v, _) = edges[e];
        let rank = pos + 1;
        if arrival[u as usize] < rank && arrival[v as usize] > rank {
            arrival[v as usize] = rank;
        }
    }
    (0..n as u32).filter(|&v| arrival[v as usize] != usize::MAX).collect()
}

/// Same scan with non-decreasing times allowed: edges of one timestamp are
/// replayed until no new vertex is reached, since they may chain in any order.
fn reach_from_allow_equal(n: usize, edges: &[(u32, u32, f64)], order: &[usize], s: u32) -> Vec<u32> {
    let mut arrival = vec![f64::INFINITY; n];
    let mut reached = vec![false; n];
    reached[s as usize] = true;
    arrival[s as usize] = f64::NEG_INFINITY;
    let mut i = 0;
    while i < order.len() {
        let t = edges[order[i]].2;
        let mut j = i;
        while j < order.len() && edges[order[j]].2 == t {
            j += 1;
        }
        let group = &order[i..j];
        loop {
            let mut changed = false;
            for &e in group {
                let (u, v, _) = edges[e];
                if reached[u as usize] && arrival[u as usize] <= t && !reached[v as usize] {
                    reached[v as usize] = true;
                    arrival[v as usize] = t;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        i = j;
    }
    (0..n as u32).filter(|&v| reached[v as usize]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k6_clique() {
        let edges = gen::complete(6);
        assert_eq!(max_clique(6, &edges).unwrap().len(), 6);
    }

    #[test]
    fn five_cycle_is_triangle_free() {
        let edges = gen::cycle(5);
        assert_eq!(max_clique(5, &edges).unwrap().len(), 2);
    }

    #[test]
    fn budget_refusal_is_loud() {
        let err = max_clique(41, &[]).unwrap_err();
        assert_eq!(err.what, "vertices");
        assert!(max_clique_subset_scan(21, &[]).is_err());
    }

    #[test]
    fn dual_clique_oracles_agree() {
        for seed in 0..60 {
            let n = 4 + (seed as usize % 15);
            let p = 0.15 + 0.05 * (seed % 14) as f64;
            let edges = gen::gnp(n as u64, p, seed);
            let a = max_clique(n, &edges).unwrap();
            let b = max_clique_subset_scan(n, &edges).unwrap();
            assert_eq!(a.len(), b.len(), "seed {seed}");
        }
    }

    #[test]
    fn cores_of_k4_and_star() {
        assert_eq!(core_numbers(4, &gen::complete(4)).unwrap(), vec![3; 4]);
        let star = gen::star(5);
        assert_eq!(core_numbers(6, &star).unwrap(), vec![1; 6]);
    }

    #[test]
    fn reach_composes_increasing_times_only() {
        // (a,b,1),(b,c,2) composes; (a,b,2),(b,c,1) does not.
        let sets = reach(3, &[(0, 1, 1.0), (1, 2, 2.0)], TieMode::Strict).unwrap();
        assert_eq!(sets[0], vec![0, 1, 2]);
        let sets = reach(3, &[(0, 1, 2.0), (1, 2, 1.0)], TieMode::Strict).unwrap();
        assert_eq!(sets[0], vec![0, 1]);
    }

    #[test]
    fn reach_single_edge() {
        let sets = reach(2, &[(0, 1, 3.5)], TieMode::Strict).unwrap();
        assert_eq!(sets, vec![vec![0, 1], vec![1]]);
    }

    #[test]
    fn strict_ties_follow_input_order() {
        // Both edges at t=1: input order lets a→b→c chain, not c→b→a.
        let edges = [(0u32, 1u32, 1.0f64), (1, 2, 1.0)];
        let sets = reach(3, &edges, TieMode::Strict).unwrap();
        assert_eq!(sets[0], vec![0, 1, 2]);
        let edges = [(1u32, 2u32, 1.0f64), (0, 1, 1.0)];
        let sets = reach(3, &edges, TieMode::Strict).unwrap();
        assert_eq!(sets[0], vec![0, 1]);
        // allow-equal chains in either order.
        let sets = reach(3, &edges, TieMode::AllowEqual).unwrap();
        assert_eq!(sets[0], vec![0, 1, 2]);
    }
}
