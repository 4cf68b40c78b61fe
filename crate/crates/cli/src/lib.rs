//! Command implementations behind the `maxclique` binary: input handling,
//! JSON run reports, and performance-profile math.
//!
//! Every command emits a versioned report (see `report-schema.md` in the
//! repository root). Exit codes are part of the contract: 0 success, 2 for
//! unreadable or malformed input, 3 when a resource guard trips.

pub mod profile;
pub mod report;

use std::path::Path;
use std::time::{Duration, Instant};

use maxclique::ingest::{self, PreprocessedGraph};
use maxclique::temporal::{self, ReachOptions, TieMode};
use maxclique::{
    clique_upper_bound, core_numbers, heuristic_clique_parallel, max_clique_parallel, SearchConfig,
};

use report::{
    ComponentReport, ConfigEcho, HeuristicReport, KcoreReport, MaxCliqueReport, SolverStatsReport,
    Timings, SCHEMA_VERSION,
};

/// How the toplevel should exit. Mirrors the documented exit-code contract.
#[derive(Debug)]
pub enum CliError {
    /// Unreadable, unparseable, or inconsistent input -> exit 2.
    Input(String),
    /// A guard (reachability density cap, oracle budget) tripped -> exit 3.
    Guard(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "{m}"),
            CliError::Guard(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Guard(_) => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Auto,
    Edges,
    Dimacs,
    Temporal,
}

/// Options shared by the graph commands.
#[derive(Debug, Clone)]
pub struct RunOptions {
    pub format: InputFormat,
    /// Treat edge-list input as directed (largest SCC + reciprocation).
    pub directed: bool,
    pub config: SearchConfig,
    /// Verify the temporal component against the path definition.
    pub verify: bool,
    pub tie_mode: TieMode,
    /// Reachability density cap (directed reach edges).
    pub reach_cap: Option<u64>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            format: InputFormat::Auto,
            directed: false,
            config: SearchConfig::default(),
            verify: false,
            tie_mode: TieMode::Strict,
            reach_cap: ReachOptions::default().max_edges,
        }
    }
}

fn read_file(path: &Path) -> Result<Vec<u8>, CliError> {
    ingest::read_input(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Auto-detection: DIMACS when a `p edge`-style problem line appears before
/// any data; otherwise a plain edge list. Temporal input is never guessed —
/// the `tscc` command implies it, or pass `--format temporal`.
fn detect_format(path: &Path, bytes: &[u8]) -> InputFormat {
    if path.extension().is_some_and(|e| e == "clq" || e == "dimacs") {
        return InputFormat::Dimacs;
    }
    for line in bytes.split(|&b| b == b'\n').take(256) {
        let line = std::str::from_utf8(line).unwrap_or("").trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('#') || line.starts_with('%')
        {
            continue;
        }
        if line.starts_with("p ") {
            return InputFormat::Dimacs;
        }
        break;
    }
    InputFormat::Edges
}

fn load_graph(path: &Path, opts: &RunOptions) -> Result<(PreprocessedGraph, Duration, Duration, String), CliError> {
    let bytes = read_file(path)?;
    let format = match opts.format {
        InputFormat::Auto => detect_format(path, &bytes),
        f => f,
    };
    let parse_started = Instant::now();
    let raw = match format {
        InputFormat::Edges => ingest::parse_edge_list(&bytes, opts.directed),
        InputFormat::Dimacs => ingest::parse_dimacs(&bytes),
        InputFormat::Temporal => {
            return Err(CliError::Input(
                "temporal input is only valid for the tscc command".into(),
            ))
        }
        InputFormat::Auto => unreachable!(),
    }
    .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let parse_time = parse_started.elapsed();

    let pre_started = Instant::now();
    let pre = ingest::preprocess(&raw);
    let preprocess_time = pre_started.elapsed();
    let name = match format {
        InputFormat::Edges => "edges",
        InputFormat::Dimacs => "dimacs",
        _ => unreachable!(),
    };
    Ok((pre, parse_time, preprocess_time, name.to_string()))
}

fn echo_config(cfg: &SearchConfig) -> ConfigEcho {
    ConfigEcho {
        use_neighborhood_cores: cfg.use_neighborhood_cores,
        rebuild_interval_secs: cfg.rebuild_interval.as_secs_f64(),
        dense_threshold: cfg.dense_threshold,
        workers: cfg.workers,
        schedule_seed: cfg.schedule_seed,
    }
}

fn stats_report(stats: &maxclique::SearchStats) -> SolverStatsReport {
    SolverStatsReport {
        initial_branches: stats.initial_branches,
        branches: stats.branches,
        pruned_by_size: stats.pruned_by_size,
        pruned_by_neighborhood_core: stats.pruned_by_neighborhood_core,
        pruned_by_color: stats.pruned_by_color,
        core_rule_removals: stats.core_rule_removals,
        compactions: stats.compactions,
        tasks: stats.tasks,
        bound_trace: stats.bound_trace.clone(),
    }
}

/// Sort labels numerically when every label parses as an integer, otherwise
/// lexicographically. Keeps member listings diff-stable.
fn sort_labels(mut labels: Vec<String>) -> Vec<String> {
    if labels.iter().all(|l| l.parse::<i64>().is_ok()) {
        labels.sort_by_key(|l| l.parse::<i64>().unwrap());
    } else {
        labels.sort();
    }
    labels
}

/// `maxclique <input>`: solve exact maximum clique, report everything.
pub fn cmd_maxclique(path: &Path, opts: &RunOptions) -> Result<MaxCliqueReport, CliError> {
    let total = Instant::now();
    let (pre, parse_time, preprocess_time, format) = load_graph(path, opts)?;
    let outcome = max_clique_parallel(&pre.graph, &opts.config);
    let members = sort_labels(
        outcome
            .clique
            .members()
            .iter()
            .map(|&v| pre.labels[v as usize].clone())
            .collect(),
    );
    let report = MaxCliqueReport {
        schema_version: SCHEMA_VERSION,
        command: "maxclique".into(),
        input: path.display().to_string(),
        format,
        directed: opts.directed,
        vertices: pre.graph.vertex_count(),
        edges: pre.graph.edge_count(),
        original_vertices: pre.original_vertices,
        original_edges: pre.original_edges,
        graph_core_number: outcome.stats.graph_core_number,
        coloring_bound: outcome.stats.coloring_bound,
        heuristic_size: outcome.stats.heuristic_size,
        clique_size: outcome.clique.size(),
        clique_members: members,
        workers: opts.config.workers,
        config: echo_config(&opts.config),
        timings: Timings {
            parse_secs: parse_time.as_secs_f64(),
            preprocess_secs: preprocess_time.as_secs_f64(),
            cores_secs: outcome.stats.cores_time.as_secs_f64(),
            heuristic_secs: outcome.stats.heuristic_time.as_secs_f64(),
            search_secs: outcome.stats.search_time.as_secs_f64(),
            total_secs: total.elapsed().as_secs_f64(),
        },
        stats: stats_report(&outcome.stats),
        warnings: pre.warnings.clone(),
    };
    report.check_invariants();
    Ok(report)
}

/// `maxclique tscc <input>`: largest temporal strong component.
pub fn cmd_tscc(path: &Path, opts: &RunOptions) -> Result<ComponentReport, CliError> {
    let total = Instant::now();
    let bytes = read_file(path)?;
    let parse_started = Instant::now();
    let parsed = ingest::parse_temporal(&bytes)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let parse_time = parse_started.elapsed();

    let reach_started = Instant::now();
    let reach_opts = ReachOptions {
        tie_mode: opts.tie_mode,
        max_edges: opts.reach_cap,
    };
    let result = temporal::max_tscc(&parsed.network, &opts.config, reach_opts)
        .map_err(|e| CliError::Guard(e.to_string()))?;
    let reach_time = reach_started.elapsed();

    let verified = opts.verify.then(|| {
        temporal::verify_component(&parsed.network, &result.component, opts.tie_mode)
    });
    let members = sort_labels(
        result
            .component
            .iter()
            .map(|&v| parsed.labels[v as usize].clone())
            .collect(),
    );
    let report = ComponentReport {
        schema_version: SCHEMA_VERSION,
        command: "tscc".into(),
        input: path.display().to_string(),
        temporal_vertices: parsed.network.vertex_count(),
        temporal_edges: parsed.network.edge_count(),
        reach_vertices: result.reach_vertices,
        reduced_reach_edges: result.reduced_edges,
        directed_reach_edges: result.directed_edges,
        component_size: result.component.len(),
        component_members: members,
        verified,
        workers: opts.config.workers,
        config: echo_config(&opts.config),
        timings: Timings {
            parse_secs: parse_time.as_secs_f64(),
            preprocess_secs: reach_time.as_secs_f64(),
            cores_secs: result.solver.stats.cores_time.as_secs_f64(),
            heuristic_secs: result.solver.stats.heuristic_time.as_secs_f64(),
            search_secs: result.solver.stats.search_time.as_secs_f64(),
            total_secs: total.elapsed().as_secs_f64(),
        },
        stats: stats_report(&result.solver.stats),
        warnings: parsed.warnings.clone(),
    };
    if verified == Some(false) {
        return Err(CliError::Guard(
            "component verification failed: a pair lacks a mutual temporal path".into(),
        ));
    }
    Ok(report)
}

/// `maxclique kcore <input>`: core decomposition summary.
pub fn cmd_kcore(path: &Path, opts: &RunOptions) -> Result<KcoreReport, CliError> {
    let total = Instant::now();
    let (pre, parse_time, preprocess_time, format) = load_graph(path, opts)?;
    let started = Instant::now();
    let cores = core_numbers(&pre.graph);
    let cores_time = started.elapsed();
    let upper = clique_upper_bound(&pre.graph);
    Ok(KcoreReport {
        schema_version: SCHEMA_VERSION,
        command: "kcore".into(),
        input: path.display().to_string(),
        format,
        vertices: pre.graph.vertex_count(),
        edges: pre.graph.edge_count(),
        graph_core_number: cores.max_core(),
        clique_upper_bound: upper,
        timings: Timings {
            parse_secs: parse_time.as_secs_f64(),
            preprocess_secs: preprocess_time.as_secs_f64(),
            cores_secs: cores_time.as_secs_f64(),
            heuristic_secs: 0.0,
            search_secs: 0.0,
            total_secs: total.elapsed().as_secs_f64(),
        },
        warnings: pre.warnings.clone(),
    })
}

/// `maxclique heuristic <input>`: greedy clique only.
pub fn cmd_heuristic(path: &Path, opts: &RunOptions) -> Result<HeuristicReport, CliError> {
    let total = Instant::now();
    let (pre, parse_time, preprocess_time, format) = load_graph(path, opts)?;
    let started = Instant::now();
    let cores = core_numbers(&pre.graph);
    let cores_time = started.elapsed();
    let started = Instant::now();
    let clique = heuristic_clique_parallel(&pre.graph, &cores, opts.config.workers);
    let heuristic_time = started.elapsed();
    let members = sort_labels(
        clique
            .members()
            .iter()
            .map(|&v| pre.labels[v as usize].clone())
            .collect(),
    );
    Ok(HeuristicReport {
        schema_version: SCHEMA_VERSION,
        command: "heuristic".into(),
        input: path.display().to_string(),
        format,
        vertices: pre.graph.vertex_count(),
        edges: pre.graph.edge_count(),
        graph_core_number: cores.max_core(),
        heuristic_size: clique.size(),
        heuristic_members: members,
        workers: opts.config.workers,
        timings: Timings {
            parse_secs: parse_time.as_secs_f64(),
            preprocess_secs: preprocess_time.as_secs_f64(),
            cores_secs: cores_time.as_secs_f64(),
            heuristic_secs: heuristic_time.as_secs_f64(),
            search_secs: 0.0,
            total_secs: total.elapsed().as_secs_f64(),
        },
        warnings: pre.warnings.clone(),
    })
}
