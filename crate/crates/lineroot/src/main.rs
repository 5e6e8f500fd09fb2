//! Command-line front end: reconstruct roots, build line graphs, check the
//! restricted-root property, collapse to canonical form, generate test
//! graphs, and run the embedded self-checks.
//!
//! Graph output goes to standard output, diagnostics to standard error, and
//! standard output stays empty whenever the exit code is nonzero. Codes:
//! 0 success, 1 negative answer (not a line graph, no qualifying root, or
//! generation failed), 2 malformed input or usage, 3 empty or disconnected
//! input where a connected graph is required, 4 a `--verify` check failed.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read as _};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lineroot::selftest::{self, Scale};
use lineroot::{
    collapse_by_rewriting, delta0_collapse, emit_multigraph, emit_root, emit_root_labeled,
    emit_simple_graph, geq1_line_graph, is_generalized_line_graph, l1_line_graph,
    parse_multigraph, parse_simple_graph, random_multigraph, reconstruct_root, verify,
    InvalidInput, LineMode, MalformedInput, MultiGraph, RandomConstraints, ReconstructError,
    SimpleGraph,
};

/// Decide whether a graph is the line graph of a multigraph and rebuild the
/// canonical root with its vertex-to-edge correspondence.
#[derive(Parser)]
#[command(name = "lineroot", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Which line-graph adjacency the input uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Edges adjacent when they share exactly one endpoint.
    L1,
    /// Edges adjacent when they share at least one endpoint.
    Ge1,
}

impl From<ModeArg> for LineMode {
    fn from(mode: ModeArg) -> Self {
        match mode {
            ModeArg::L1 => LineMode::L1,
            ModeArg::Ge1 => LineMode::Geq1,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Reconstruct the canonical root multigraph of a line graph.
    Root {
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Re-derive the line graph from the result and compare it against
        /// the input before printing.
        #[arg(long)]
        verify: bool,
        /// Reconstruct each connected component separately, one root block
        /// per component in order of smallest contained input vertex.
        #[arg(long)]
        components: bool,
        /// A `graph` file, or `-` for standard input.
        input: String,
    },
    /// Build the line graph of a multigraph (the forward direction).
    Linegraph {
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// An `mgraph` (or `graph`) file, or `-` for standard input.
        input: String,
    },
    /// Find a root whose parallel classes have size at most two and whose
    /// doubled edges each have an endpoint on no other edges, if one exists.
    CheckGlg {
        /// A `graph` file, or `-` for standard input.
        input: String,
    },
    /// Collapse a multigraph to the canonical form sharing its at-least-one
    /// line graph, tracing each local move as a comment.
    Delta0 {
        /// An `mgraph` (or `graph`) file, or `-` for standard input.
        input: String,
    },
    /// Emit a reproducible random multigraph.
    Gen {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        edges: usize,
        #[arg(long)]
        seed: u64,
        /// Keep sampling until the graph is connected.
        #[arg(long)]
        connected: bool,
        /// Keep sampling until the graph has no collapsible triple.
        #[arg(long = "delta0-free")]
        delta0_free: bool,
    },
    /// Run the embedded desk-scale self-checks (report on standard error).
    Selftest,
}

/// A diagnostic plus the process exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

fn parse_failure(e: MalformedInput) -> Failure {
    Failure::new(2, e.to_string())
}

fn reconstruct_failure(e: ReconstructError) -> Failure {
    let code = match &e {
        ReconstructError::NotLineGraph(_) => 1,
        ReconstructError::InvalidInput(_) => 3,
    };
    Failure::new(code, e.to_string())
}

fn read_input(path: &str) -> Result<String, Failure> {
    let text = if path == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).map(|_| buf)
    } else {
        fs::read_to_string(path)
    };
    text.map_err(|e| Failure::new(2, format!("cannot read {path}: {e}")))
}

/// Accept either header keyword where a multigraph is wanted: a simple
/// `graph` block is a multigraph without parallel edges.
fn parse_any_multigraph(input: &str) -> Result<MultiGraph, Failure> {
    let keyword = input
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .and_then(|l| l.split_whitespace().next());
    if keyword == Some("graph") {
        let g = parse_simple_graph(input).map_err(parse_failure)?;
        Ok(to_multigraph(&g))
    } else {
        parse_multigraph(input).map_err(parse_failure)
    }
}

fn to_multigraph(g: &SimpleGraph) -> MultiGraph {
    let pairs: Vec<(usize, usize)> = g.edges().map(|(u, v)| (u.index(), v.index())).collect();
    MultiGraph::from_edges(g.vertex_count(), &pairs).expect("simple edges are loop free")
}

fn run_root(
    mode: LineMode,
    check: bool,
    per_component: bool,
    input: &str,
) -> Result<String, Failure> {
    let gamma = parse_simple_graph(input).map_err(parse_failure)?;
    if !per_component {
        let result = reconstruct_root(&gamma, mode).map_err(reconstruct_failure)?;
        if check && !verify(&gamma, &result) {
            return Err(Failure::new(4, "verification failed: certificate does not reproduce the input"));
        }
        return Ok(emit_root(&result));
    }
    if gamma.vertex_count() == 0 {
        return Err(reconstruct_failure(InvalidInput::Empty.into()));
    }
    let mut out = String::new();
    for (i, component) in gamma.components().iter().enumerate() {
        let piece = gamma.induced_subgraph(component);
        let result = reconstruct_root(&piece, mode).map_err(reconstruct_failure)?;
        if check && !verify(&piece, &result) {
            return Err(Failure::new(4, "verification failed: certificate does not reproduce the input"));
        }
        if i > 0 {
            out.push('\n');
        }
        let labels: Vec<usize> = component.iter().map(|v| v.index()).collect();
        out.push_str(&emit_root_labeled(&result, &labels));
    }
    Ok(out)
}

fn run_linegraph(mode: LineMode, input: &str) -> Result<String, Failure> {
    let g = parse_any_multigraph(input)?;
    let gamma = match mode {
        LineMode::L1 => l1_line_graph(&g),
        LineMode::Geq1 => geq1_line_graph(&g),
    };
    Ok(emit_simple_graph(&gamma))
}

fn run_check_glg(input: &str) -> Result<String, Failure> {
    let gamma = parse_simple_graph(input).map_err(parse_failure)?;
    if gamma.vertex_count() == 0 {
        return Err(reconstruct_failure(InvalidInput::Empty.into()));
    }
    if !gamma.is_connected() {
        return Err(reconstruct_failure(InvalidInput::Disconnected.into()));
    }
    match is_generalized_line_graph(&gamma) {
        Some(root) => Ok(emit_multigraph(&root)),
        None => Err(Failure::new(1, "not-glg")),
    }
}

fn run_delta0(input: &str) -> Result<String, Failure> {
    let g = parse_any_multigraph(input)?;
    let (_, steps) = collapse_by_rewriting(&g).map_err(reconstruct_failure)?;
    let collapsed = delta0_collapse(&g).map_err(reconstruct_failure)?;
    let mut out = String::new();
    if steps.is_empty() {
        writeln!(out, "# already canonical: no collapsible triple").unwrap();
    } else {
        writeln!(
            out,
            "# {} collapse move(s); indices refer to the working graph at each step",
            steps.len()
        )
        .unwrap();
    }
    for (i, step) in steps.iter().enumerate() {
        let w = &step.witness;
        let action = if step.rehung_edges == 0 {
            "merged the outer pair".to_string()
        } else {
            format!(
                "merged the outer pair, rehung {} edge(s) onto a fresh vertex",
                step.rehung_edges
            )
        };
        writeln!(
            out,
            "# move {}: witness x={} z={} y={}; {}",
            i + 1,
            w.x.index(),
            w.z.index(),
            w.y.index(),
            action
        )
        .unwrap();
    }
    out.push_str(&emit_multigraph(&collapsed));
    Ok(out)
}

fn run_gen(
    vertices: usize,
    edges: usize,
    seed: u64,
    connected: bool,
    delta0_free: bool,
) -> Result<String, Failure> {
    let constraints = RandomConstraints { connected, delta0_free };
    let g = random_multigraph(vertices, edges, seed, constraints)
        .map_err(|e| Failure::new(1, e.to_string()))?;
    Ok(emit_multigraph(&g))
}

fn run_selftest() -> Result<String, Failure> {
    let mut err = io::stderr();
    if selftest::run(Scale::Desk, &mut err) {
        Ok(String::new())
    } else {
        Err(Failure::new(1, "self-checks failed"))
    }
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Root { mode, verify: check, components, input } => {
            let text = read_input(&input)?;
            run_root(mode.into(), check, components, &text)
        }
        Command::Linegraph { mode, input } => {
            let text = read_input(&input)?;
            run_linegraph(mode.into(), &text)
        }
        Command::CheckGlg { input } => {
            let text = read_input(&input)?;
            run_check_glg(&text)
        }
        Command::Delta0 { input } => {
            let text = read_input(&input)?;
            run_delta0(&text)
        }
        Command::Gen { vertices, edges, seed, connected, delta0_free } => {
            run_gen(vertices, edges, seed, connected, delta0_free)
        }
        Command::Selftest => run_selftest(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("lineroot: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
