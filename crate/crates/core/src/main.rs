//! Command-line front end: check graph pairs, dump uniqueness trees,
//! generate experiment inputs, run benchmark sweeps, and probe the
//! known hard pair.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use unitree_core::bench::{
    loglog_fit, records_to_csv, run_sweep, run_sweep_parallel, PairKind, SweepConfig,
};
use unitree_core::compare::{match_graphs, CompareMode, Verdict};
use unitree_core::gen::{isomorphic_pair, perturbed_pair, random_graph, GenConfig, GENERATOR_ID};
use unitree_core::graph::Graph;
use unitree_core::oracle::{brute_force_isomorphic, OracleVerdict, DEFAULT_ORACLE_BUDGET};
use unitree_core::probe::run_probe;
use unitree_core::tree::build_uniqueness_tree;

const FORMAT_HELP: &str = "\
Edge-list file format:
  First line: \"n m\" (vertex count, edge count), then m lines \"u v\"
  with 0 <= u, v < n and u != v. Whitespace-separated, LF or CRLF
  endings. Blank lines and lines starting with '#' are ignored.
  Repeated or reversed edge lines collapse to one undirected edge.
  Serialization writes edges with u < v, sorted lexicographically.

Bench CSV schema:
  n,pair_kind,pairs,elapsed_ms,iso_verdicts,noniso_verdicts,seed,generator
  One row per graph size; elapsed_ms is wall-clock time spent matching
  all pairs of that size (generation excluded).

Tree dump format:
  \"height H\" line first, then one line per level with entries printed
  as vertex:child_count, space-separated.

Exit codes:
  0  isomorphic (or subcommand succeeded)
  1  non-isomorphic
  2  usage, parse, or I/O error";

#[derive(Parser)]
#[command(
    name = "unitree",
    about = "Graph isomorphism testing via per-vertex uniqueness trees",
    after_long_help = FORMAT_HELP,
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether two edge-list files describe isomorphic graphs
    Check(CheckArgs),
    /// Print the uniqueness tree and profile of one vertex
    Tree(TreeArgs),
    /// Generate random graphs and partner graphs as edge-list files
    Gen(GenArgs),
    /// Run an effectiveness/timing sweep and fit the scaling exponent
    Bench(BenchArgs),
    /// Run the comparison on the rook/Shrikhande hard pair and report
    Probe,
}

#[derive(Args)]
struct CheckArgs {
    /// First graph (edge-list file)
    path_g: PathBuf,
    /// Second graph (edge-list file)
    path_h: PathBuf,
    /// Tree signature to compare: summary profile or full canonical code
    #[arg(long, value_enum, default_value_t = ModeArg::Profile)]
    mode: ModeArg,
    /// Also run the exact brute-force oracle and flag disagreement
    #[arg(long)]
    oracle: bool,
    /// Search budget for --oracle, in visited assignment nodes
    #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
    oracle_budget: u64,
    /// Print the greedy vertex mapping as "v -> u" lines
    #[arg(long)]
    mapping: bool,
}

#[derive(Args)]
struct TreeArgs {
    /// Graph (edge-list file)
    path: PathBuf,
    /// Root vertex index
    root: usize,
    /// Cut the tree at this height (default: vertex count)
    #[arg(long)]
    height_cap: Option<usize>,
}

#[derive(Args)]
struct GenArgs {
    /// Vertex count
    #[arg(long)]
    n: usize,
    /// Edge probability for G(n, p)
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Seed for the random source
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Partner graph to emit alongside: a permuted isomorphic copy, a
    /// single-edge-replaced perturbation, or none
    #[arg(long, value_enum, default_value_t = KindArg::None)]
    kind: KindArg,
    /// Output path for the generated graph
    #[arg(long)]
    out: PathBuf,
    /// Output path for the partner graph (required unless --kind none)
    #[arg(long)]
    out_pair: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Pair kind to sweep
    #[arg(long, value_enum, default_value_t = SweepKindArg::Iso)]
    kind: SweepKindArg,
    #[arg(long, default_value_t = 1)]
    n_min: usize,
    #[arg(long, default_value_t = 100)]
    n_max: usize,
    /// Pairs per graph size
    #[arg(long, default_value_t = 100)]
    pairs: usize,
    /// Edge probability for G(n, p)
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the CSV here (defaults to stdout)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Smallest n included in the log-log fit
    #[arg(long, default_value_t = 21)]
    fit_min_n: usize,
    /// Spread sizes over worker threads. Verdict tallies are unchanged,
    /// but timings become contended: accuracy sweeps only
    #[arg(long)]
    parallel: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Profile,
    Canonical,
}

impl From<ModeArg> for CompareMode {
    fn from(m: ModeArg) -> CompareMode {
        match m {
            ModeArg::Profile => CompareMode::Profile,
            ModeArg::Canonical => CompareMode::Canonical,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum KindArg {
    Iso,
    Perturbed,
    None,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepKindArg {
    Iso,
    Perturbed,
}

impl From<SweepKindArg> for PairKind {
    fn from(k: SweepKindArg) -> PairKind {
        match k {
            SweepKindArg::Iso => PairKind::Iso,
            SweepKindArg::Perturbed => PairKind::Perturbed,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check(args) => cmd_check(args),
        Command::Tree(args) => cmd_tree(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Probe => cmd_probe(),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_graph(path: &PathBuf) -> Result<Graph, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    Graph::from_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn cmd_check(args: CheckArgs) -> Result<ExitCode, String> {
    let g = load_graph(&args.path_g)?;
    let h = load_graph(&args.path_h)?;
    let result = match_graphs(&g, &h, args.mode.into());

    match result.verdict {
        Verdict::Isomorphic => println!("isomorphic"),
        Verdict::NonIsomorphic => println!("non-isomorphic"),
    }
    if result.size_mismatch {
        eprintln!("note: sizes differ ({} vs {} vertices)", g.n(), h.n());
    }
    if args.mapping {
        for (v, u) in result.mapping.iter().enumerate() {
            match u {
                Some(u) => println!("{v} -> {u}"),
                None => println!("{v} -> unmapped"),
            }
        }
    }

    if args.oracle {
        let oracle = brute_force_isomorphic(&g, &h, args.oracle_budget);
        match oracle.verdict {
            OracleVerdict::Isomorphic => println!("oracle: isomorphic"),
            OracleVerdict::NonIsomorphic => println!("oracle: non-isomorphic"),
            OracleVerdict::Inconclusive => {
                println!("oracle: inconclusive (budget exhausted)")
            }
        }
        let agrees = matches!(
            (result.verdict, oracle.verdict),
            (Verdict::Isomorphic, OracleVerdict::Isomorphic)
                | (Verdict::NonIsomorphic, OracleVerdict::NonIsomorphic)
                | (_, OracleVerdict::Inconclusive)
        );
        if !agrees {
            println!("WARNING: oracle disagrees with the tree comparison verdict");
        }
    }

    Ok(match result.verdict {
        Verdict::Isomorphic => ExitCode::from(0),
        Verdict::NonIsomorphic => ExitCode::from(1),
    })
}

fn cmd_tree(args: TreeArgs) -> Result<ExitCode, String> {
    let g = load_graph(&args.path)?;
    let cap = args.height_cap.unwrap_or(g.n());
    let tree = build_uniqueness_tree(&g, args.root, cap).map_err(|e| e.to_string())?;
    print!("{}", tree.dump());

    let profile = tree.profile();
    let widths: Vec<String> = profile.widths.iter().map(usize::to_string).collect();
    println!("widths {}", widths.join(" "));
    for (level, hist) in profile.child_histograms.iter().enumerate() {
        let bins: Vec<String> = hist
            .iter()
            .map(|(children, count)| format!("{children}:{count}"))
            .collect();
        println!("level {level} children {}", bins.join(" "));
    }
    Ok(ExitCode::from(0))
}

fn cmd_gen(args: GenArgs) -> Result<ExitCode, String> {
    let cfg = GenConfig {
        n: args.n,
        edge_probability: args.p,
        seed: args.seed,
    };
    let g = random_graph(&cfg).map_err(|e| e.to_string())?;
    let provenance = format!(
        "# generator {} seed {} n {} p {}\n",
        GENERATOR_ID, args.seed, args.n, args.p
    );
    write_graph(&args.out, &g, &provenance)?;

    if args.kind != KindArg::None {
        let out_pair = args
            .out_pair
            .as_ref()
            .ok_or("--out-pair is required when --kind is not none")?;
        let pair_seed = args.seed.wrapping_add(1);
        let (partner, kind_name) = match args.kind {
            KindArg::Iso => (isomorphic_pair(&g, pair_seed).0, "iso"),
            KindArg::Perturbed => (
                perturbed_pair(&g, pair_seed).map_err(|e| e.to_string())?,
                "perturbed",
            ),
            KindArg::None => unreachable!(),
        };
        let provenance = format!(
            "# generator {} seed {} pair-seed {} kind {}\n",
            GENERATOR_ID, args.seed, pair_seed, kind_name
        );
        write_graph(out_pair, &partner, &provenance)?;
    } else if args.out_pair.is_some() {
        return Err("--out-pair given but --kind is none".into());
    }
    Ok(ExitCode::from(0))
}

fn write_graph(path: &PathBuf, g: &Graph, provenance: &str) -> Result<(), String> {
    let body = format!("{provenance}{}", g.to_edge_list());
    fs::write(path, body).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn cmd_bench(args: BenchArgs) -> Result<ExitCode, String> {
    let cfg = SweepConfig {
        kind: args.kind.into(),
        n_min: args.n_min,
        n_max: args.n_max,
        pairs_per_n: args.pairs,
        edge_probability: args.p,
        seed: args.seed,
    };
    let records = if args.parallel {
        let threads = std::thread::available_parallelism().map_or(1, |p| p.get());
        run_sweep_parallel(&cfg, threads)
    } else {
        run_sweep(&cfg)
    }
    .map_err(|e| e.to_string())?;

    let csv = records_to_csv(&records);
    match &args.out {
        Some(path) => fs::write(path, &csv)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        None => print!("{csv}"),
    }

    match loglog_fit(&records, args.fit_min_n) {
        Ok(fit) => {
            if fit.excluded_zero > 0 {
                eprintln!(
                    "warning: {} zero-time records excluded from the fit",
                    fit.excluded_zero
                );
            }
            println!(
                "fit: slope {:.6} intercept {:.6} r_squared {:.6} over n in [{}, {}] ({} points)",
                fit.slope, fit.intercept, fit.r_squared, fit.n_range.0, fit.n_range.1, fit.used_points
            );
        }
        Err(e) => eprintln!("fit skipped: {e}"),
    }
    Ok(ExitCode::from(0))
}

fn cmd_probe() -> Result<ExitCode, String> {
    print!("{}", run_probe().render());
    Ok(ExitCode::from(0))
}
