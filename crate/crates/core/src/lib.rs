//! Exact maximum clique search for large sparse graphs, and the largest
//! temporal strong component computation built on top of it.
//!
//! The solver combines a core-number-guided greedy heuristic, aggressive
//! k-core and greedy-coloring bounds, implicit vertex removal with periodic
//! compaction, and a cooperative parallel search that broadcasts improved
//! bounds between workers.
//!
//! Typical use:
//!
//! ```
//! use maxclique::{max_clique_parallel, SearchConfig, StaticGraph};
//!
//! let g = StaticGraph::from_edges(&[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
//! let out = max_clique_parallel(&g, &SearchConfig::default());
//! assert_eq!(out.clique.size(), 3);
//! ```

pub mod bounds;
pub mod graph;
pub mod heuristic;
pub mod ingest;
pub mod parallel;
pub mod search;
pub mod temporal;

pub use bounds::{clique_upper_bound, core_numbers, greedy_color, Coloring, CoreDecomposition};
pub use graph::{NeighborhoodSubgraph, StaticGraph, VertexId};
pub use heuristic::{heuristic_clique, heuristic_clique_parallel, Clique};
pub use parallel::{max_clique_parallel, SharedBound};
pub use search::{max_clique, SearchConfig, SearchOutcome, SearchStats};
pub use temporal::{
    max_tscc, reach, verify_component, ReachError, ReachOptions, ReachabilityGraph, TemporalNetwork,
    TieMode, TsccResult,
};
