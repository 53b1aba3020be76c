use std::path::PathBuf;
use std::process::ExitCode;

use active_bijection::Limits;
use active_bijection_cli::commands::{
    cmd_alpha, cmd_table, cmd_tutte, cmd_verify, parse_edge_list, Method, Route,
};
use active_bijection_cli::corpus::random_multigraphs;
use active_bijection_cli::document::read_graph;
use active_bijection_cli::verify::VerifyOptions;
use active_bijection_cli::{CliError, Report};
use clap::{Parser, Subcommand, ValueEnum};

/// Edge bound of the graphs drawn by `verify --random`.
const RANDOM_EDGES: usize = 7;

#[derive(Parser)]
#[command(name = "active-bijection", version, about = "The active bijection of ordered graphs")]
struct Cli {
    /// Worker threads for batch verification (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest edge count for which all orientations are enumerated.
    #[arg(long, global = true)]
    max_edges: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Trees,
    Orientations,
    Filtrations,
    Convolution,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Decomposition,
    Dc,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Tutte polynomial and its coefficient table.
    Tutte {
        /// Graph document, or `-` for stdin.
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "trees")]
        method: MethodArg,
    },
    /// Active spanning tree of a reorientation of the stored orientation.
    Alpha {
        graph: PathBuf,
        /// Reversed edges, e.g. `2,3`.
        #[arg(long, default_value = "")]
        reorient: String,
        /// Also print the refined image of the reorientation set.
        #[arg(long)]
        refined: bool,
        #[arg(long, value_enum, default_value = "decomposition")]
        route: RouteArg,
    },
    /// One row per spanning tree: filtration, partition, class, tree.
    Table {
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Runs the invariant suite on a graph and/or a random batch.
    Verify {
        graph: Option<PathBuf>,
        /// Number of random multigraphs with at most 7 edges.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, hide = true)]
        corrupt_signs: bool,
    },
}

fn limits(max_edges: Option<usize>) -> Limits {
    let mut l = Limits::default();
    if let Some(n) = max_edges {
        l.max_orientation_edges = n;
        l.max_enum_edges = l.max_enum_edges.max(n);
    }
    l
}

fn run(cli: Cli) -> Result<Report, CliError> {
    let limits = limits(cli.max_edges);
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Input(e.to_string()))?;
    }
    match cli.command {
        Command::Tutte { graph, method } => {
            let (g, _) = read_graph(&graph, limits)?;
            let method = match method {
                MethodArg::Trees => Method::Trees,
                MethodArg::Orientations => Method::Orientations,
                MethodArg::Filtrations => Method::Filtrations,
                MethodArg::Convolution => Method::Convolution,
                MethodArg::All => Method::All,
            };
            cmd_tutte(&g, method)
        }
        Command::Alpha {
            graph,
            reorient,
            refined,
            route,
        } => {
            let (g, d) = read_graph(&graph, limits)?;
            let a = parse_edge_list(&reorient, &g)?;
            let route = match route {
                RouteArg::Decomposition => Route::Decomposition,
                RouteArg::Dc => Route::Dc,
                RouteArg::Both => Route::Both,
            };
            cmd_alpha(&d, a, refined, route)
        }
        Command::Table { graph, json } => {
            let (g, _) = read_graph(&graph, limits)?;
            cmd_table(&g, json)
        }
        Command::Verify {
            graph,
            random,
            seed,
            corrupt_signs,
        } => {
            let mut graphs = Vec::new();
            if let Some(path) = graph {
                graphs.push(read_graph(&path, limits)?.0);
            }
            if let Some(n) = random {
                graphs.extend(
                    random_multigraphs(n, seed, RANDOM_EDGES)
                        .into_iter()
                        .map(|g| g.relimited(limits)),
                );
            }
            if graphs.is_empty() {
                return Err(CliError::Input("give a graph file or --random N".into()));
            }
            let opts = VerifyOptions {
                corrupt_signs,
                ..VerifyOptions::default()
            };
            Ok(cmd_verify(&graphs, &opts))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(report) => {
            print!("{}", report.text);
            ExitCode::from(report.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
