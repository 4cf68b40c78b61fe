//! Property tests for the spec-level invariants that hold for *every* input,
//! driven by proptest-generated graphs and networks.

use std::collections::BTreeSet;

use maxclique::temporal::{ReachOptions, TemporalNetwork, TieMode};
use maxclique::{
    core_numbers, greedy_color, max_clique, max_clique_parallel, SearchConfig, StaticGraph,
};
use maxclique_oracle as oracle;
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = (usize, Vec<(u64, u64)>)> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs = proptest::collection::vec((0..n as u64, 0..n as u64), 0..n * 3);
        (Just(n), pairs).prop_map(|(n, raw)| {
            let edges: Vec<(u64, u64)> = raw.into_iter().filter(|(u, v)| u != v).collect();
            (n, edges)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// Reduced neighborhoods equal the set-algebra definition: `{v}` plus
    /// alive neighbors, with induced edges from sorted-merge intersection
    /// matching plain set intersection.
    #[test]
    fn reduced_neighbors_equal_set_intersection((n, edges) in arb_graph(24), kills in proptest::collection::vec(any::<bool>(), 24)) {
        let g = StaticGraph::with_vertices(n, &edges).unwrap();
        for (v, &kill) in kills.iter().enumerate().take(n) {
            if kill {
                g.remove_implicit(v);
            }
        }
        for v in 0..n {
            if !g.is_alive(v) {
                continue;
            }
            let sub = g.reduced_neighbors(v, 0, None, None, 8);
            let mut expect: BTreeSet<u64> = BTreeSet::new();
            expect.insert(v as u64);
            for &(a, b) in &edges {
                if a as usize == v && g.is_alive(b as usize) {
                    expect.insert(b);
                }
                if b as usize == v && g.is_alive(a as usize) {
                    expect.insert(a);
                }
            }
            let got: BTreeSet<u64> = sub.vertices().iter().map(|&x| x as u64).collect();
            prop_assert_eq!(&got, &expect);
            // Edges: intersection of the candidate set with each row.
            for i in 0..sub.len() {
                for j in i + 1..sub.len() {
                    let (a, b) = (sub.global_id(i) as u64, sub.global_id(j) as u64);
                    let in_graph = edges.iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a));
                    prop_assert_eq!(sub.has_edge(i, j), in_graph);
                }
            }
        }
    }

    /// Compaction preserves exactly the alive-induced edge set.
    #[test]
    fn compaction_preserves_alive_edges((n, edges) in arb_graph(30), kills in proptest::collection::vec(any::<bool>(), 30)) {
        let g = StaticGraph::with_vertices(n, &edges).unwrap();
        for (v, &kill) in kills.iter().enumerate().take(n) {
            if kill {
                g.remove_implicit(v);
            }
        }
        let expect: BTreeSet<(u64, u64)> = g
            .edges()
            .filter(|&(u, v)| g.is_alive(u as usize) && g.is_alive(v as usize))
            .map(|(u, v)| (u as u64, v as u64))
            .collect();
        let (c, map) = g.compact();
        let got: BTreeSet<(u64, u64)> = c
            .edges()
            .map(|(u, v)| {
                let (a, b) = (map[u as usize] as u64, map[v as usize] as u64);
                (a.min(b), a.max(b))
            })
            .collect();
        prop_assert_eq!(got, expect);
    }

    /// Greedy coloring is proper for any processing order, and the
    /// degeneracy order keeps it within K(G)+1 colors.
    #[test]
    fn coloring_proper_and_degeneracy_bounded((n, edges) in arb_graph(30)) {
        let g = StaticGraph::with_vertices(n, &edges).unwrap();
        let cores = core_numbers(&g);
        let coloring = greedy_color(&g, &cores.coloring_order());
        for (u, v) in g.edges() {
            prop_assert_ne!(coloring.color(u as usize), coloring.color(v as usize));
        }
        prop_assert!(coloring.num_colors() <= cores.max_core() + 1);
    }

    /// The solver is exact: equal to the subset-scan oracle (an independent
    /// second reference, not the Bron–Kerbosch one used elsewhere).
    #[test]
    fn solver_equals_subset_scan_oracle((n, edges) in arb_graph(16)) {
        let want = oracle::max_clique_subset_scan(n, &edges).unwrap().len();
        let g = StaticGraph::with_vertices(n, &edges).unwrap();
        for nc in [true, false] {
            let cfg = SearchConfig { use_neighborhood_cores: nc, ..SearchConfig::default() };
            let out = max_clique(&g, &cfg);
            prop_assert_eq!(out.clique.size(), want);
            prop_assert!(g.is_clique(out.clique.members()));
        }
        let cfg = SearchConfig { workers: 3, ..SearchConfig::default() };
        prop_assert_eq!(max_clique_parallel(&g, &cfg).clique.size(), want);
    }

    /// Temporal reachability agrees with the forward-scan oracle under both
    /// tie policies, whatever the edge multiset looks like.
    #[test]
    fn reach_equals_forward_oracle(
        n in 2usize..10,
        raw in proptest::collection::vec((0u32..10, 0u32..10, 0u8..6), 0..40),
    ) {
        let edges: Vec<(u32, u32, f64)> = raw
            .into_iter()
            .filter(|(u, v, _)| u != v && (*u as usize) < n && (*v as usize) < n)
            .map(|(u, v, t)| (u, v, t as f64))
            .collect();
        let (net, _) = TemporalNetwork::new(n, edges.iter().copied());
        for (mode, omode) in [
            (TieMode::Strict, oracle::TieMode::Strict),
            (TieMode::AllowEqual, oracle::TieMode::AllowEqual),
        ] {
            let got = maxclique::reach(&net, ReachOptions { tie_mode: mode, max_edges: None }).unwrap();
            let want = oracle::reach(n, &edges, omode).unwrap();
            prop_assert_eq!(got.sets(), want.as_slice());
        }
    }

    /// Every published incumbent is a clique and the trace is strictly
    /// increasing, ending at the final size.
    #[test]
    fn bound_trace_strictly_increases((n, edges) in arb_graph(24)) {
        let g = StaticGraph::with_vertices(n, &edges).unwrap();
        let out = max_clique(&g, &SearchConfig::default());
        let trace = &out.stats.bound_trace;
        prop_assert!(trace.windows(2).all(|w| w[0] < w[1]));
        if out.clique.size() > 0 {
            prop_assert_eq!(*trace.last().unwrap(), out.clique.size());
        }
    }
}
