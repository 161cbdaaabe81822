use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cyclint::catalog::tree_catalog;
use cyclint::dot::export_dot;
use cyclint::{
    check_cyclic, check_interval, check_proper, construct, exact_spectrum, oracle_report,
    spectrum_tree, Coloring, ConstructOutcome, ConstructionRequest, Graph, OracleError,
    DEFAULT_LIMIT_EDGES,
};

// exit codes shared by all subcommands
const EXIT_FAIL: u8 = 1;
const EXIT_LOAD: u8 = 2;
const EXIT_NOT_TREE: u8 = 3;
const EXIT_LIMIT: u8 = 4;
const EXIT_INFEASIBLE: u8 = 5;

#[derive(Parser)]
#[command(name = "cyclint", about = "Interval and cyclically-interval edge colorings of trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyMode {
    Proper,
    Interval,
    Cyclic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ColorMode {
    Interval,
    Cyclic,
}

#[derive(Subcommand)]
enum Command {
    /// Print the spectrum report of a graph (formula for trees, oracle
    /// with --exact)
    Analyze {
        graph: PathBuf,
        /// Compute the report by exhaustive enumeration instead of the
        /// tree formula
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        t_max: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_LIMIT_EDGES)]
        limit_edges: usize,
    },
    /// Construct a verified coloring of a tree for a given palette size
    Color {
        graph: PathBuf,
        #[arg(long)]
        t: u32,
        #[arg(long, value_enum, default_value_t = ColorMode::Interval)]
        mode: ColorMode,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a coloring file against a graph
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long, value_enum)]
        mode: VerifyMode,
    },
    /// Exact per-t coloring counts and spectra by exhaustive enumeration
    Spectrum {
        graph: PathBuf,
        #[arg(long)]
        t_max: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_LIMIT_EDGES)]
        limit_edges: usize,
    },
    /// Emit the graph as DOT, labeling edges with colors when given
    ExportDot {
        graph: PathBuf,
        coloring: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sweep all non-isomorphic trees up to a size, comparing formula and
    /// oracle spectra
    Catalog {
        #[arg(long)]
        max_edges: usize,
        #[arg(long, default_value_t = DEFAULT_LIMIT_EDGES)]
        limit_edges: usize,
    },
}

fn load_graph(path: &PathBuf) -> Result<Graph, u8> {
    let text = fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {}", path.display(), e);
        EXIT_LOAD
    })?;
    Graph::from_text(&text).map_err(|e| {
        eprintln!("error: {}: {}", path.display(), e);
        EXIT_LOAD
    })
}

fn load_coloring(path: &PathBuf) -> Result<Coloring, u8> {
    let text = fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {}", path.display(), e);
        EXIT_LOAD
    })?;
    Coloring::from_json(&text).map_err(|e| {
        eprintln!("error: {}: {}", path.display(), e);
        EXIT_LOAD
    })
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), u8> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| {
            eprintln!("error: cannot write {}: {}", path.display(), e);
            EXIT_LOAD
        }),
        None => {
            print!("{}", text);
            Ok(())
        }
    }
}

fn oracle_exit(e: OracleError) -> u8 {
    match e {
        OracleError::SizeLimit { .. } => {
            eprintln!("error: {}", e);
            EXIT_LIMIT
        }
        other => {
            eprintln!("error: {}", other);
            EXIT_LOAD
        }
    }
}

fn cmd_analyze(
    graph: PathBuf,
    exact: bool,
    t_max: Option<u32>,
    limit_edges: usize,
) -> Result<(), u8> {
    let g = load_graph(&graph)?;
    let report = if exact {
        oracle_report(&g, t_max, limit_edges).map_err(oracle_exit)?
    } else {
        spectrum_tree(&g).map_err(|e| {
            eprintln!("error: {} (use --exact for non-tree graphs)", e);
            EXIT_NOT_TREE
        })?
    };
    println!("{}", serde_json::to_string(&report).unwrap());
    Ok(())
}

fn cmd_color(graph: PathBuf, t: u32, mode: ColorMode, output: Option<PathBuf>) -> Result<(), u8> {
    let g = load_graph(&graph)?;
    let mode = match mode {
        ColorMode::Interval => cyclint::Mode::Interval,
        ColorMode::Cyclic => cyclint::Mode::Cyclic,
    };
    let outcome = construct(&ConstructionRequest { tree: &g, t, mode }).map_err(|e| {
        eprintln!("error: {}", e);
        EXIT_LOAD
    })?;
    match outcome {
        ConstructOutcome::Colored(c) => emit(&output, &format!("{}\n", c.to_json())),
        ConstructOutcome::Infeasible(i) => {
            eprintln!(
                "infeasible: t={} has no coloring; feasible range [{},{}]",
                i.t, i.feasible_min, i.feasible_max
            );
            Err(EXIT_INFEASIBLE)
        }
    }
}

fn cmd_verify(graph: PathBuf, coloring: PathBuf, mode: VerifyMode) -> Result<(), u8> {
    let g = load_graph(&graph)?;
    let c = load_coloring(&coloring)?;
    let checked = match mode {
        VerifyMode::Proper => check_proper(&g, &c),
        VerifyMode::Interval => check_interval(&g, &c),
        VerifyMode::Cyclic => check_cyclic(&g, &c),
    };
    match checked {
        Ok(Ok(())) => {
            println!("{}", serde_json::json!({ "pass": true }));
            Ok(())
        }
        Ok(Err(witness)) => {
            println!(
                "{}",
                serde_json::json!({ "pass": false, "witness": witness.to_string() })
            );
            Err(EXIT_FAIL)
        }
        Err(e) => {
            eprintln!("error: {}", e);
            Err(EXIT_LOAD)
        }
    }
}

fn cmd_spectrum(graph: PathBuf, t_max: Option<u32>, limit_edges: usize) -> Result<(), u8> {
    let g = load_graph(&graph)?;
    let result = exact_spectrum(&g, t_max, limit_edges).map_err(oracle_exit)?;
    println!("{}", serde_json::to_string(&result).unwrap());
    Ok(())
}

fn cmd_export_dot(
    graph: PathBuf,
    coloring: Option<PathBuf>,
    output: Option<PathBuf>,
) -> Result<(), u8> {
    let g = load_graph(&graph)?;
    let c = coloring.as_ref().map(load_coloring).transpose()?;
    let dot = export_dot(&g, c.as_ref()).map_err(|e| {
        eprintln!("error: {}", e);
        EXIT_LOAD
    })?;
    emit(&output, &dot)
}

fn cmd_catalog(max_edges: usize, limit_edges: usize) -> Result<(), u8> {
    if max_edges > limit_edges {
        eprintln!(
            "error: --max-edges {} exceeds the enumeration limit of {}",
            max_edges, limit_edges
        );
        return Err(EXIT_LIMIT);
    }
    let mut all_agree = true;
    for tree in tree_catalog(max_edges) {
        let formula = spectrum_tree(&tree).expect("catalog trees are nonempty trees");
        let theta_formula = formula.theta.as_ref().unwrap().members();
        let oracle = exact_spectrum(&tree, None, limit_edges).map_err(oracle_exit)?;
        let agree =
            oracle.theta_exact == theta_formula && oracle.theta_cyc_exact == theta_formula;
        all_agree &= agree;
        println!(
            "{}",
            serde_json::json!({
                "graph": oracle.graph,
                "n": tree.n(),
                "edges": tree.edge_count(),
                "theta_formula": theta_formula,
                "theta_oracle": oracle.theta_exact,
                "theta_cyc_oracle": oracle.theta_cyc_exact,
                "agree": agree,
            })
        );
    }
    if all_agree {
        Ok(())
    } else {
        Err(EXIT_FAIL)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { graph, exact, t_max, limit_edges } => {
            cmd_analyze(graph, exact, t_max, limit_edges)
        }
        Command::Color { graph, t, mode, output } => cmd_color(graph, t, mode, output),
        Command::Verify { graph, coloring, mode } => cmd_verify(graph, coloring, mode),
        Command::Spectrum { graph, t_max, limit_edges } => cmd_spectrum(graph, t_max, limit_edges),
        Command::ExportDot { graph, coloring, output } => cmd_export_dot(graph, coloring, output),
        Command::Catalog { max_edges, limit_edges } => cmd_catalog(max_edges, limit_edges),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => ExitCode::from(code),
    }
}
