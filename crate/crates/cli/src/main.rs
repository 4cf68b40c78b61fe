use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use maxclique::temporal::TieMode;
use maxclique::SearchConfig;
use maxclique_cli::{
    cmd_heuristic, cmd_kcore, cmd_maxclique, cmd_tscc, profile, CliError, InputFormat, RunOptions,
};

/// Exact maximum clique solver for sparse graphs, with temporal strong
/// component search, k-core / heuristic inspection, and benchmark profiling.
#[derive(Parser)]
#[command(name = "maxclique", version, args_conflicts_with_subcommands = true)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    /// Default command: solve maximum clique on INPUT.
    #[command(flatten)]
    solve: SolveArgs,
}

#[derive(Subcommand)]
enum Command {
    /// Exact maximum clique (the default when only an input is given).
    Solve(SolveArgs),
    /// Largest temporal strong component of a temporal edge list.
    Tscc(TsccArgs),
    /// k-core decomposition summary and the clique upper bound.
    Kcore(BasicArgs),
    /// Greedy heuristic clique only (the solver's lower bound).
    Heuristic(BasicArgs),
    /// Performance-profile curves from solver timing records.
    Profile(ProfileArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Auto,
    Edges,
    Dimacs,
    Temporal,
}

impl From<FormatArg> for InputFormat {
    fn from(f: FormatArg) -> InputFormat {
        match f {
            FormatArg::Auto => InputFormat::Auto,
            FormatArg::Edges => InputFormat::Edges,
            FormatArg::Dimacs => InputFormat::Dimacs,
            FormatArg::Temporal => InputFormat::Temporal,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TiesArg {
    /// Strict model: equal timestamps are ordered by input position.
    ForbidEqual,
    /// Paths may chain non-decreasing timestamps.
    AllowEqual,
}

#[derive(Args)]
struct CommonArgs {
    /// Input file (edge list, DIMACS, or temporal list; .gz accepted).
    input: Option<PathBuf>,

    /// Worker threads (default: hardware parallelism).
    #[arg(long, short = 't')]
    threads: Option<usize>,

    /// Input format (auto sniffs DIMACS vs edge list).
    #[arg(long, value_enum, default_value = "auto")]
    format: FormatArg,

    /// Treat edge-list input as directed: restrict to the largest strongly
    /// connected component, then keep only reciprocated pairs.
    #[arg(long)]
    directed: bool,

    /// Emit JSON (default).
    #[arg(long, conflicts_with = "human")]
    json: bool,

    /// Emit a short human-readable summary instead of JSON.
    #[arg(long)]
    human: bool,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Disable neighborhood-core pruning (degree-first coloring variant).
    #[arg(long)]
    no_neighborhood_cores: bool,

    /// Seconds between graph compactions.
    #[arg(long, default_value_t = 4.0)]
    rebuild_interval: f64,

    /// Max subgraph size that gets a bit-matrix adjacency.
    #[arg(long, default_value_t = 1024)]
    dense_threshold: usize,

    /// Schedule-perturbation seed for parallel determinism audits.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct TsccArgs {
    #[command(flatten)]
    solve: SolveArgs,

    /// Re-check every component pair against the temporal path definition.
    #[arg(long)]
    verify: bool,

    /// Equal-timestamp policy.
    #[arg(long, value_enum, default_value = "forbid-equal")]
    ties: TiesArg,

    /// Abort reachability construction beyond this many directed edges.
    #[arg(long, default_value_t = 200_000_000)]
    reach_cap: u64,
}

#[derive(Args)]
struct BasicArgs {
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct ProfileArgs {
    /// CSV of timing records: `problem,config,seconds` with DNF for
    /// unsolved entries.
    records: PathBuf,
}

fn build_options(args: &SolveArgs) -> RunOptions {
    let threads = args
        .common
        .threads
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    RunOptions {
        format: args.common.format.into(),
        directed: args.common.directed,
        config: SearchConfig {
            use_neighborhood_cores: !args.no_neighborhood_cores,
            rebuild_interval: Duration::from_secs_f64(args.rebuild_interval.max(1e-3)),
            dense_threshold: args.dense_threshold,
            workers: threads.max(1),
            schedule_seed: args.seed,
        },
        ..RunOptions::default()
    }
}

fn basic_options(args: &BasicArgs) -> RunOptions {
    let threads = args
        .common
        .threads
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    RunOptions {
        format: args.common.format.into(),
        directed: args.common.directed,
        config: SearchConfig {
            workers: threads.max(1),
            ..SearchConfig::default()
        },
        ..RunOptions::default()
    }
}

fn emit<T: serde::Serialize>(report: &T, human: String, want_human: bool) -> ExitCode {
    if want_human {
        println!("{human}");
    } else {
        println!(
            "{}",
            serde_json::to_string_pretty(report).expect("report serializes")
        );
    }
    ExitCode::SUCCESS
}

fn fail(err: &CliError) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(err.exit_code() as u8)
}

fn require_input(common: &CommonArgs) -> Result<&PathBuf, CliError> {
    common
        .input
        .as_ref()
        .ok_or_else(|| CliError::Input("missing input file (try `maxclique --help`)".into()))
}

fn run_solve(args: SolveArgs) -> ExitCode {
    let opts = build_options(&args);
    let input = match require_input(&args.common) {
        Ok(p) => p,
        Err(e) => return fail(&e),
    };
    match cmd_maxclique(input, &opts) {
        Ok(report) => {
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            let human = report.human();
            emit(&report, human, args.common.human)
        }
        Err(e) => fail(&e),
    }
}

fn run_tscc(args: TsccArgs) -> ExitCode {
    let mut opts = build_options(&args.solve);
    opts.verify = args.verify;
    opts.tie_mode = match args.ties {
        TiesArg::ForbidEqual => TieMode::Strict,
        TiesArg::AllowEqual => TieMode::AllowEqual,
    };
    opts.reach_cap = Some(args.reach_cap);
    let input = match require_input(&args.solve.common) {
        Ok(p) => p,
        Err(e) => return fail(&e),
    };
    match cmd_tscc(input, &opts) {
        Ok(report) => {
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            let human = report.human();
            emit(&report, human, args.solve.common.human)
        }
        Err(e) => fail(&e),
    }
}

fn run_kcore(args: BasicArgs) -> ExitCode {
    let opts = basic_options(&args);
    let input = match require_input(&args.common) {
        Ok(p) => p,
        Err(e) => return fail(&e),
    };
    match cmd_kcore(input, &opts) {
        Ok(report) => {
            let human = report.human();
            emit(&report, human, args.common.human)
        }
        Err(e) => fail(&e),
    }
}

fn run_heuristic(args: BasicArgs) -> ExitCode {
    let opts = basic_options(&args);
    let input = match require_input(&args.common) {
        Ok(p) => p,
        Err(e) => return fail(&e),
    };
    match cmd_heuristic(input, &opts) {
        Ok(report) => {
            let human = report.human();
            emit(&report, human, args.common.human)
        }
        Err(e) => fail(&e),
    }
}

fn run_profile(args: ProfileArgs) -> ExitCode {
    let text = match std::fs::read_to_string(&args.records) {
        Ok(t) => t,
        Err(e) => {
            return fail(&CliError::Input(format!(
                "{}: {e}",
                args.records.display()
            )))
        }
    };
    let records = match profile::parse_records(&text) {
        Ok(r) => r,
        Err(e) => return fail(&CliError::Input(e)),
    };
    match profile::compute_profile(&records) {
        Ok(curves) => {
            print!("{}", profile::to_csv(&curves));
            ExitCode::SUCCESS
        }
        Err(e) => fail(&CliError::Input(e.to_string())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Some(Command::Solve(args)) => run_solve(args),
        Some(Command::Tscc(args)) => run_tscc(args),
        Some(Command::Kcore(args)) => run_kcore(args),
        Some(Command::Heuristic(args)) => run_heuristic(args),
        Some(Command::Profile(args)) => run_profile(args),
        None => run_solve(cli.solve),
    }
}
