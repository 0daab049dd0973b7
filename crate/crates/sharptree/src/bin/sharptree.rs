//! Command-line front end: parse weighted-tree edge lists, compute group
//! inverses, and emit reports.
//!
//! Exit codes: 0 success, 1 input error, 2 property violation, 3 resource
//! limit.

use clap::{Args, Parser, Subcommand};
use sharptree::report::{self, CommandOptions, SharpFormat};
use sharptree::{matching, spectral};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "sharptree",
    about = "Exact group inverses of weighted trees",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Input edge-list files.
    #[arg(required = true)]
    paths: Vec<PathBuf>,

    /// Cap on the number of maximum matchings enumerated
    /// (overrides the SHARPTREE_MATCHING_CAP environment variable).
    #[arg(long)]
    cap: Option<usize>,

    /// Process multiple input files on this many threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the group-inverse graph and print it.
    Sharp {
        #[command(flatten)]
        common: CommonArgs,
        /// Plain `u v w` edge lines (default).
        #[arg(long, conflicts_with_all = ["dot", "json"])]
        edges: bool,
        /// Graphviz DOT with exact rational edge labels.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        /// JSON document.
        #[arg(long)]
        json: bool,
    },
    /// Cross-check the combinatorial, factorization, and bipartite block
    /// routes and the group-inverse identities.
    Verify {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Structure report; `--all` emits the full analysis document.
    Analyze {
        #[command(flatten)]
        common: CommonArgs,
        /// Full document: tree, matchings, sharp edges, structure,
        /// signature, spectral.
        #[arg(long)]
        all: bool,
        /// Tolerance for the spectral section.
        #[arg(long, default_value_t = spectral::DEFAULT_TOL)]
        tol: f64,
        /// Also run the exhaustive signature search.
        #[arg(long)]
        search: bool,
    },
    /// Enumerate maximum matchings and alternating paths.
    Matchings {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Signature similarity report; `--search` scans all sign vectors.
    Signature {
        #[command(flatten)]
        common: CommonArgs,
        /// Run the exhaustive sign-vector search.
        #[arg(long)]
        search: bool,
    },
    /// Floating-point spectral report.
    Spectral {
        #[command(flatten)]
        common: CommonArgs,
        /// Residual and simplicity tolerance.
        #[arg(long, default_value_t = spectral::DEFAULT_TOL)]
        tol: f64,
    },
}

fn effective_cap(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("SHARPTREE_MATCHING_CAP")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(matching::DEFAULT_MATCHING_CAP)
}

/// Per-file outcome: rendered output or an error with its exit code.
type FileResult = Result<String, (String, i32)>;

fn run_one(command: &Command, path: &std::path::Path) -> FileResult {
    let as_result = |r: sharptree::Result<String>| {
        r.map_err(|e| (format!("sharptree: {}: {e}", path.display()), e.exit_code()))
    };
    match command {
        Command::Sharp {
            common, dot, json, ..
        } => {
            let format = if *json {
                SharpFormat::Json
            } else if *dot {
                SharpFormat::Dot
            } else {
                SharpFormat::Edges
            };
            as_result(report::run_sharp(path, format, effective_cap(common.cap)))
        }
        Command::Verify { common } => match report::run_verify(path, effective_cap(common.cap)) {
            Ok(outcome) if outcome.ok => Ok(outcome.report),
            Ok(outcome) => Err((outcome.report.trim_end().to_string(), 2)),
            Err(e) => Err((format!("sharptree: {}: {e}", path.display()), e.exit_code())),
        },
        Command::Analyze {
            common,
            all,
            tol,
            search,
        } => {
            let opts = CommandOptions {
                cap: effective_cap(common.cap),
                tol: *tol,
                search: *search,
                all: *all,
            };
            as_result(report::run_analyze(path, &opts))
        }
        Command::Matchings { common } => {
            as_result(report::run_matchings(path, effective_cap(common.cap)))
        }
        Command::Signature { common, search } => as_result(report::run_signature(
            path,
            *search,
            effective_cap(common.cap),
        )),
        Command::Spectral { common: _, tol } => as_result(report::run_spectral(path, *tol)),
    }
}

fn common_args(command: &Command) -> &CommonArgs {
    match command {
        Command::Sharp { common, .. }
        | Command::Verify { common }
        | Command::Analyze { common, .. }
        | Command::Matchings { common }
        | Command::Signature { common, .. }
        | Command::Spectral { common, .. } => common,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = common_args(&cli.command);
    let paths = common.paths.clone();
    let jobs = common.jobs.max(1);
    let multiple = paths.len() > 1;

    let results: Vec<FileResult> = if jobs <= 1 || paths.len() <= 1 {
        paths.iter().map(|p| run_one(&cli.command, p)).collect()
    } else {
        // Fixed round-robin assignment keeps output order deterministic.
        std::thread::scope(|scope| {
            let command = &cli.command;
            let handles: Vec<_> = paths
                .chunks(paths.len().div_ceil(jobs))
                .map(|chunk| {
                    scope.spawn(move || {
                        chunk
                            .iter()
                            .map(|p| run_one(command, p))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("worker thread"))
                .collect()
        })
    };

    let mut worst = 0i32;
    for (path, result) in paths.iter().zip(results) {
        match result {
            Ok(output) => {
                if multiple {
                    println!("== {}", path.display());
                }
                print!("{output}");
            }
            Err((message, code)) => {
                eprintln!("{message}");
                worst = worst.max(code);
            }
        }
    }
    ExitCode::from(worst as u8)
}
