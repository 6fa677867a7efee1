use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use chromsym::homengine::{self, result_doc, BigradedSeries};
use chromsym::symfunc::Basis;
use chromsym::Multigraph;
use chromsym_cli::render::{render_checks, render_result};
use chromsym_cli::trees::trees_up_to_iso;
use chromsym_cli::{apply_guard, checks_map, chromatic_symmetric, parse_inline, run_checks};
use chromsym_cli::{CheckState, CliError, CliResult};

/// Chromatic symmetric homology of small multigraphs, over exact rationals.
#[derive(Parser)]
#[command(name = "chromsym", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the bigraded homology table and Frobenius series of a graph
    Homology(HomologyArgs),
    /// Compute the chromatic symmetric function X_G
    Xg(XgArgs),
    /// Run the verification suite on a graph
    Verify(VerifyArgs),
    /// Sweep all trees on n vertices and report Frobenius-series collisions
    Sweep(SweepArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Graph file: first line `n m`, then m lines `u v` (1-indexed)
    path: Option<PathBuf>,
    /// Inline edge list, e.g. `1-2,2-3,3-1`
    #[arg(long, value_name = "LIST", conflicts_with = "path")]
    edges: Option<String>,
    /// Vertex count for --edges (default: largest endpoint)
    #[arg(long, value_name = "N", requires = "edges")]
    vertices: Option<usize>,
}

impl InputArgs {
    fn load(&self) -> CliResult<Multigraph> {
        match (&self.path, &self.edges) {
            (Some(p), None) => {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| CliError::Parse(format!("{}: {e}", p.display())))?;
                Ok(Multigraph::parse(&text)?)
            }
            (None, Some(e)) => parse_inline(e, self.vertices),
            (None, None) => Err(CliError::Parse(
                "no input: pass a graph file or --edges".into(),
            )),
            (Some(_), Some(_)) => unreachable!("clap forbids both"),
        }
    }
}

#[derive(Args)]
struct GuardArgs {
    /// Largest admissible vertex count
    #[arg(long, default_value_t = 7)]
    max_n: usize,
    /// Largest admissible predicted total chain dimension
    #[arg(long, value_name = "N", default_value_t = 100_000)]
    max_dim: u128,
    /// Worker threads (0 = automatic)
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    P,
    S,
    M,
}

#[derive(Args)]
struct HomologyArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    guard: GuardArgs,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args)]
struct XgArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    guard: GuardArgs,
    /// Basis of the output expression
    #[arg(long, value_enum, default_value_t = BasisArg::S)]
    basis: BasisArg,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    guard: GuardArgs,
    /// Comma-separated subset of checks to run (default: all)
    #[arg(long, value_delimiter = ',', value_name = "LIST")]
    checks: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args)]
struct SweepArgs {
    /// Number of vertices for the built-in tree generator
    #[arg(long, value_name = "N", conflicts_with = "trees")]
    n: Option<usize>,
    /// File with one inline edge list per line (overrides the generator)
    #[arg(long, value_name = "FILE")]
    trees: Option<PathBuf>,
    #[command(flatten)]
    guard: GuardArgs,
}

fn cmd_homology(args: &HomologyArgs) -> CliResult<()> {
    let g = args.input.load()?;
    apply_guard(&g, args.guard.max_n, args.guard.max_dim)?;
    let (summary, series) = if g.has_loop() {
        // a loop forces vanishing homology; skip the computation
        let empty = homengine::HomologySummary {
            n: g.n(),
            max_i: g.m(),
            entries: BTreeMap::new(),
        };
        let series = BigradedSeries::zero(g.n());
        (empty, series)
    } else {
        let summary = homengine::graph_homology(&g);
        let series = homengine::frobenius_series(&summary);
        (summary, series)
    };
    let doc = result_doc(&g, &summary, &series, BTreeMap::new());
    match args.format {
        Format::Json => println!("{}", serde_json::to_string(&doc).unwrap()),
        Format::Table => print!("{}", render_result(&doc)),
    }
    Ok(())
}

fn cmd_xg(args: &XgArgs) -> CliResult<()> {
    let g = args.input.load()?;
    apply_guard(&g, args.guard.max_n, args.guard.max_dim)?;
    let basis = match args.basis {
        BasisArg::P => Basis::PowerSum,
        BasisArg::S => Basis::Schur,
        BasisArg::M => Basis::Monomial,
    };
    let x = chromatic_symmetric(&g, basis);
    match args.format {
        Format::Json => println!("{}", serde_json::to_string(&x).unwrap()),
        Format::Table => println!("X_G = {x}"),
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> CliResult<()> {
    let g = args.input.load()?;
    apply_guard(&g, args.guard.max_n, args.guard.max_dim)?;
    let outcome = run_checks(&g, &args.checks, args.guard.max_dim)?;
    match args.format {
        Format::Json => {
            let doc = result_doc(
                &g,
                &outcome.summary,
                &outcome.series,
                checks_map(&outcome.reports),
            );
            println!("{}", serde_json::to_string(&doc).unwrap());
        }
        Format::Table => print!("{}", render_checks(&outcome.reports)),
    }
    if outcome.reports.iter().any(|r| r.state == CheckState::Fail) {
        return Err(CliError::ChecksFailed);
    }
    Ok(())
}

fn cmd_sweep(args: &SweepArgs) -> CliResult<()> {
    let graphs: Vec<Multigraph> = match (&args.trees, args.n) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
            text.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(|l| parse_inline(l, None))
                .collect::<CliResult<_>>()?
        }
        (None, Some(n)) => {
            if n == 0 {
                return Err(CliError::Parse("need n >= 1".into()));
            }
            trees_up_to_iso(n)
        }
        (None, None) => return Err(CliError::Parse("pass --n or --trees".into())),
    };
    for g in &graphs {
        apply_guard(g, args.guard.max_n, args.guard.max_dim)?;
    }

    let mut all: Vec<(usize, BigradedSeries)> = Vec::new();
    for (k, g) in graphs.iter().enumerate() {
        let summary = homengine::graph_homology(g);
        let series = homengine::frobenius_series(&summary);
        let doc = result_doc(g, &summary, &series, BTreeMap::new());
        println!("{}", serde_json::to_string(&doc).unwrap());
        all.push((k, series));
    }
    let mut collisions = Vec::new();
    for a in 0..all.len() {
        for b in a + 1..all.len() {
            if all[a].1 == all[b].1 {
                collisions.push((all[a].0, all[b].0));
            }
        }
    }
    println!(
        "{}",
        serde_json::to_string(&serde_json::json!({
            "graphs": graphs.len(),
            "collisions": collisions,
        }))
        .unwrap()
    );
    Ok(())
}

fn run(cli: &Cli) -> CliResult<()> {
    match &cli.command {
        Command::Homology(a) => cmd_homology(a),
        Command::Xg(a) => cmd_xg(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Sweep(a) => cmd_sweep(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let workers = match &cli.command {
        Command::Homology(a) => a.guard.workers,
        Command::Xg(a) => a.guard.workers,
        Command::Verify(a) => a.guard.workers,
        Command::Sweep(a) => a.guard.workers,
    };
    if workers > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .ok();
    }
    let outcome = std::panic::catch_unwind(|| run(&cli));
    match outcome {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(CliError::ChecksFailed)) => ExitCode::from(1),
        Ok(Err(CliError::Parse(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Ok(Err(CliError::Guard(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(_) => {
            eprintln!("error: internal assertion failed");
            ExitCode::from(4)
        }
    }
}
