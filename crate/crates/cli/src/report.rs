//! JSON report types. Bump `SCHEMA_VERSION` on any breaking field change.

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub use_neighborhood_cores: bool,
    pub rebuild_interval_secs: f64,
    pub dense_threshold: usize,
    pub workers: usize,
    pub schedule_seed: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Timings {
    pub parse_secs: f64,
    pub preprocess_secs: f64,
    pub cores_secs: f64,
    pub heuristic_secs: f64,
    pub search_secs: f64,
    pub total_secs: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolverStatsReport {
    pub initial_branches: u64,
    pub branches: u64,
    pub pruned_by_size: u64,
    pub pruned_by_neighborhood_core: u64,
    pub pruned_by_color: u64,
    pub core_rule_removals: u64,
    pub compactions: u64,
    pub tasks: u64,
    pub bound_trace: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MaxCliqueReport {
    pub schema_version: u32,
    pub command: String,
    pub input: String,
    pub format: String,
    pub directed: bool,
    pub vertices: usize,
    pub edges: usize,
    pub original_vertices: usize,
    pub original_edges: usize,
    pub graph_core_number: u32,
    pub coloring_bound: u32,
    pub heuristic_size: usize,
    pub clique_size: usize,
    pub clique_members: Vec<String>,
    pub workers: usize,
    pub config: ConfigEcho,
    pub timings: Timings,
    pub stats: SolverStatsReport,
    pub warnings: Vec<String>,
}

impl MaxCliqueReport {
    /// The chain each report must satisfy internally:
    /// heuristic ≤ clique ≤ min(L, K+1) (empty graphs trivially pass).
    pub fn check_invariants(&self) {
        assert!(
            self.heuristic_size <= self.clique_size,
            "report invariant violated: heuristic {} > clique {}",
            self.heuristic_size,
            self.clique_size
        );
        if self.vertices > 0 {
            let upper = self
                .coloring_bound
                .min(self.graph_core_number + 1) as usize;
            assert!(
                self.clique_size <= upper,
                "report invariant violated: clique {} > upper bound {}",
                self.clique_size,
                upper
            );
        }
    }

    pub fn human(&self) -> String {
        format!(
            "{}: n={} m={} K={} L={} heuristic={} omega={} workers={} search={:.3}s total={:.3}s\nmembers: {}",
            self.input,
            self.vertices,
            self.edges,
            self.graph_core_number,
            self.coloring_bound,
            self.heuristic_size,
            self.clique_size,
            self.workers,
            self.timings.search_secs,
            self.timings.total_secs,
            self.clique_members.join(" ")
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentReport {
    pub schema_version: u32,
    pub command: String,
    pub input: String,
    pub temporal_vertices: usize,
    pub temporal_edges: usize,
    /// Vertices with at least one reciprocal reachability partner.
    pub reach_vertices: usize,
    /// Undirected edges after reciprocal reduction.
    pub reduced_reach_edges: u64,
    pub directed_reach_edges: u64,
    pub component_size: usize,
    pub component_members: Vec<String>,
    /// Present when --verify ran.
    pub verified: Option<bool>,
    pub workers: usize,
    pub config: ConfigEcho,
    pub timings: Timings,
    pub stats: SolverStatsReport,
    pub warnings: Vec<String>,
}

impl ComponentReport {
    pub fn human(&self) -> String {
        format!(
            "{}: |E_T|={} |V_R|={} |E_R|={} component={}{} total={:.3}s\nmembers: {}",
            self.input,
            self.temporal_edges,
            self.reach_vertices,
            self.reduced_reach_edges,
            self.component_size,
            match self.verified {
                Some(true) => " verified",
                Some(false) => " VERIFICATION-FAILED",
                None => "",
            },
            self.timings.total_secs,
            self.component_members.join(" ")
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct KcoreReport {
    pub schema_version: u32,
    pub command: String,
    pub input: String,
    pub format: String,
    pub vertices: usize,
    pub edges: usize,
    pub graph_core_number: u32,
    pub clique_upper_bound: u32,
    pub timings: Timings,
    pub warnings: Vec<String>,
}

impl KcoreReport {
    pub fn human(&self) -> String {
        format!(
            "{}: n={} m={} K={} upper_bound={}",
            self.input, self.vertices, self.edges, self.graph_core_number, self.clique_upper_bound
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HeuristicReport {
    pub schema_version: u32,
    pub command: String,
    pub input: String,
    pub format: String,
    pub vertices: usize,
    pub edges: usize,
    pub graph_core_number: u32,
    pub heuristic_size: usize,
    pub heuristic_members: Vec<String>,
    pub workers: usize,
    pub timings: Timings,
    pub warnings: Vec<String>,
}

impl HeuristicReport {
    pub fn human(&self) -> String {
        format!(
            "{}: n={} m={} K={} heuristic={}\nmembers: {}",
            self.input,
            self.vertices,
            self.edges,
            self.graph_core_number,
            self.heuristic_size,
            self.heuristic_members.join(" ")
        )
    }
}
