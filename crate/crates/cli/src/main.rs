mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Parser, Subcommand};
use mvcut::approx::ApproxError;
use mvcut::error::ExactError;
use mvcut::exact::{exact_min_matching_vertex_cutset_with_budget, DEFAULT_BUDGET};
use mvcut::generators::{make_named, random_connected_graph, random_connected_graph_with_edges, NamedGraph};
use mvcut::io::{self, Format, LabeledGraph};
use mvcut::planar::{random_connected_planar, random_maximal_planar, run_planar_suite, SuiteConfig};
use mvcut::reduction::{build_reduction, verify_equivalence};
use mvcut::{approx_min_matching_vertex_cutset, check_cutset, ExactAnswer, Graph};
use serde_json::json;

use input::{parse_matching, parse_vertex_list, FormatArg, GraphInput};
use report::{cutset_fields, InputSummary, ResultDocument, Status};

/// Matching vertex-cutsets: solve, verify, reduce, generate.
///
/// Every command writes one JSON document to stdout (except `gen` without
/// `-o`, which writes the graph itself). Exit codes: 0 success, 1 input
/// error, 2 no cutset exists, 3 verification negative.
#[derive(Parser, Debug)]
#[command(name = "mvcut", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Matching vertex-cutset of at most κ edges via the 2-approximation
    Approx {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Minimum matching vertex-cutset by exhaustive search
    Exact {
        #[command(flatten)]
        input: GraphInput,
        /// Cap on search nodes before giving up
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Check whether a given matching is a vertex-cutset
    Verify {
        #[command(flatten)]
        input: GraphInput,
        /// Edges as `u-v,u-v,...` using the input's vertex labels
        #[arg(long)]
        matching: String,
    },
    /// Build the reduction gadget from a bipartite graph
    Reduce {
        #[command(flatten)]
        input: GraphInput,
        /// Vertices of side X; defaults to the 2-colouring class of vertex 0
        #[arg(long)]
        x: Option<String>,
        /// Vertices of side Y; defaults to the complement of X
        #[arg(long)]
        y: Option<String>,
        #[arg(short = 'k', default_value_t = 1)]
        k: usize,
        /// Compare both sides of the equivalence for every k
        #[arg(long)]
        check: bool,
        /// Write the gadget edge list here instead of into the document
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Run the planar bound suite
    PlanarSuite {
        /// Graphs per random corpus
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Smallest maximal planar graph; also floors the connected corpus
        #[arg(long, default_value_t = 5)]
        n_min: usize,
        /// Largest maximal planar graph; the connected corpus stops at 10
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Per-graph JSON lines report
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Generate a graph file
    #[command(group(ArgGroup::new("kind").required(true).args(["named", "random", "random_planar"])))]
    Gen {
        /// Built-in family; -n and -m are its size parameters
        #[arg(long)]
        named: Option<String>,
        /// Random connected graph on -n vertices with -m edges or density -p
        #[arg(long)]
        random: bool,
        /// Random planar graph on -n vertices: maximal, or connected with -m edges
        #[arg(long)]
        random_planar: bool,
        #[arg(short = 'n')]
        n: Option<usize>,
        #[arg(short = 'm')]
        m: Option<usize>,
        #[arg(short = 'p')]
        p: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: FormatArg,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
}

/// What a command produces: a result document, or raw graph text.
enum Output {
    Document(ResultDocument),
    Text(String),
}

fn connected_input(input: &GraphInput) -> Result<(LabeledGraph, InputSummary)> {
    let lg = input.load()?;
    if lg.graph.vertex_count() > 0 && !lg.graph.is_connected() {
        bail!("input graph is disconnected");
    }
    let summary = InputSummary::new(input.describe(), &lg.graph);
    Ok((lg, summary))
}

fn no_solution(summary: InputSummary, reason: String) -> Output {
    eprintln!("no matching vertex-cutset: {reason}");
    Output::Document(ResultDocument::new(Some(summary), json!({ "no_solution": reason }), Status::NoSolution))
}

fn cmd_approx(input: &GraphInput) -> Result<Output> {
    let (lg, summary) = connected_input(input)?;
    let r = match approx_min_matching_vertex_cutset(&lg.graph) {
        Ok(r) => r,
        Err(e @ (ApproxError::NoSolution(_) | ApproxError::TooSmall)) => return Ok(no_solution(summary, e.to_string())),
        Err(e) => return Err(e.into()),
    };
    eprintln!("cutset of {} edges (kappa {}, path {})", r.matching.len(), r.kappa, r.case_trace);
    let mut result = cutset_fields(&lg, &r.matching, &r.certificate);
    result["kappa"] = json!(r.kappa);
    result["case_trace"] = json!(r.case_trace);
    Ok(Output::Document(ResultDocument::new(Some(summary), result, Status::Ok)))
}

fn cmd_exact(input: &GraphInput, budget: u64) -> Result<Output> {
    let (lg, summary) = connected_input(input)?;
    let answer = match exact_min_matching_vertex_cutset_with_budget(&lg.graph, budget) {
        Ok(a) => a,
        Err(ExactError::Edgeless) => return Ok(no_solution(summary, "graph has no edges".into())),
        Err(e) => return Err(e.into()),
    };
    match answer {
        ExactAnswer::Found { size, witness } => {
            eprintln!("kappa_M = {size}");
            let cert = check_cutset(&lg.graph, &witness)?;
            let result = cutset_fields(&lg, &witness, &cert);
            Ok(Output::Document(ResultDocument::new(Some(summary), result, Status::Ok)))
        }
        ExactAnswer::NoSolution => {
            let reason = format!("{} has no matching vertex-cutset", summary.class);
            Ok(no_solution(summary, reason))
        }
    }
}

fn cmd_verify(input: &GraphInput, spec: &str) -> Result<Output> {
    let lg = input.load()?;
    let summary = InputSummary::new(input.describe(), &lg.graph);
    let m = parse_matching(&lg, spec)?;
    let cert = check_cutset(&lg.graph, &m)?;
    let status = if cert.is_cutset() { Status::Ok } else { Status::NotACutset };
    eprintln!("verdict: {:?}", cert.verdict);
    Ok(Output::Document(ResultDocument::new(Some(summary), cutset_fields(&lg, &m, &cert), status)))
}

fn sides(lg: &LabeledGraph, x: Option<&str>, y: Option<&str>) -> Result<(Vec<usize>, Vec<usize>)> {
    let g = &lg.graph;
    let complement = |s: &[usize]| g.vertices().filter(|v| !s.contains(v)).collect::<Vec<_>>();
    Ok(match (x, y) {
        (Some(x), Some(y)) => (parse_vertex_list(lg, x)?, parse_vertex_list(lg, y)?),
        (Some(x), None) => {
            let x = parse_vertex_list(lg, x)?;
            let y = complement(&x);
            (x, y)
        }
        (None, Some(y)) => {
            let y = parse_vertex_list(lg, y)?;
            (complement(&y), y)
        }
        (None, None) => {
            let Some(colour) = g.two_coloring() else {
                bail!("input graph is not bipartite");
            };
            // vertex 0 always lands in X
            let x = g.vertices().filter(|&v| colour[v] == colour[0]).collect();
            let y = g.vertices().filter(|&v| colour[v] != colour[0]).collect();
            (x, y)
        }
    })
}

fn cmd_reduce(
    input: &GraphInput,
    x: Option<&str>,
    y: Option<&str>,
    k: usize,
    check: bool,
    output: Option<&PathBuf>,
) -> Result<Output> {
    let lg = input.load()?;
    let summary = InputSummary::new(input.describe(), &lg.graph);
    let (x, y) = sides(&lg, x, y)?;
    let inst = build_reduction(&lg.graph, &x, &y, k)?;
    let text = inst.to_edge_list();
    let mut result = json!({
        "x": inst.x,
        "y": inst.y,
        "x_mirror": inst.x_mirror,
        "y_mirror": inst.y_mirror,
        "k": k,
        "gadget_n": inst.gadget.vertex_count(),
        "gadget_m": inst.gadget.edge_count(),
    });
    match output {
        Some(path) => {
            std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
            result["gadget_file"] = json!(path.display().to_string());
        }
        None => result["gadget_edge_list"] = json!(text),
    }
    let mut status = Status::Ok;
    if check {
        let report = verify_equivalence(&lg.graph, &x, &y, x.len().min(y.len()))?;
        eprintln!("k  min-IEDS<=k  gadget<=k");
        for row in &report.rows {
            eprintln!("{:<2} {:<11} {}", row.k, row.source_side, row.gadget_side);
        }
        eprintln!("{} discrepancies", report.discrepancies());
        if !report.holds() {
            status = Status::NotACutset;
        }
        result["equivalence"] = json!({
            "discrepancies": report.discrepancies(),
            "report": report,
        });
    }
    Ok(Output::Document(ResultDocument::new(Some(summary), result, status)))
}

fn cmd_planar_suite(count: usize, n_min: usize, n_max: usize, seed: u64, output: Option<&PathBuf>) -> Result<Output> {
    if n_min > n_max {
        bail!("--n-min {n_min} exceeds --n-max {n_max}");
    }
    let connected_n = n_min.max(3)..=n_max.min(10);
    if count > 0 && connected_n.is_empty() {
        bail!("connected corpus needs some n in 3..=10 within --n-min..--n-max");
    }
    let config = SuiteConfig {
        maximal_count: count,
        maximal_n: n_min..=n_max,
        connected_count: count,
        connected_n,
        seed,
    };
    let report = run_planar_suite(&config)?;
    eprint!("{}", report.human_summary());
    if let Some(path) = output {
        std::fs::write(path, report.to_jsonl()).with_context(|| format!("writing {}", path.display()))?;
    }
    let status = if report.passed() { Status::Ok } else { Status::NotACutset };
    let result = json!({
        "config": report.config,
        "summary": report.summary,
        "violations": report.violations,
        "tight_examples": report.tight_examples,
        "report_file": output.map(|p| p.display().to_string()),
    });
    Ok(Output::Document(ResultDocument::new(None, result, status)))
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    named: Option<&str>,
    random: bool,
    n: Option<usize>,
    m: Option<usize>,
    p: Option<f64>,
    seed: u64,
    format: FormatArg,
    output: Option<&PathBuf>,
) -> Result<Output> {
    let need_n = || n.context("-n is required");
    let (g, comment): (Graph, String) = if let Some(name) = named {
        let which = NamedGraph::from_name(name, n, m)?;
        (make_named(which)?, which.to_string())
    } else if random {
        let n = need_n()?;
        match m {
            Some(m) => (random_connected_graph_with_edges(n, m, seed)?, format!("random n={n} m={m} seed={seed}")),
            None => {
                let p = p.unwrap_or(0.3);
                (random_connected_graph(n, p, seed)?, format!("random n={n} p={p} seed={seed}"))
            }
        }
    } else {
        let n = need_n()?;
        match m {
            Some(m) => (random_connected_planar(n, m, seed)?, format!("random planar n={n} m={m} seed={seed}")),
            None => (random_maximal_planar(n, seed)?.graph, format!("random maximal planar n={n} seed={seed}")),
        }
    };
    let text = match Format::from(format) {
        Format::EdgeList => io::write_edge_list(&g, std::slice::from_ref(&comment)),
        Format::Dimacs => format!("c {comment}\n{}", io::write_dimacs(&g)),
    };
    let Some(path) = output else {
        return Ok(Output::Text(text));
    };
    std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
    let summary = InputSummary::new(comment, &g);
    let result = json!({ "graph_file": path.display().to_string() });
    Ok(Output::Document(ResultDocument::new(Some(summary), result, Status::Ok)))
}

fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Approx { input } => cmd_approx(input),
        Command::Exact { input, budget } => cmd_exact(input, *budget),
        Command::Verify { input, matching } => cmd_verify(input, matching),
        Command::Reduce { input, x, y, k, check, output } => {
            cmd_reduce(input, x.as_deref(), y.as_deref(), *k, *check, output.as_ref())
        }
        Command::PlanarSuite { count, n_min, n_max, seed, output } => {
            cmd_planar_suite(*count, *n_min, *n_max, *seed, output.as_ref())
        }
        Command::Gen { named, random, random_planar: _, n, m, p, seed, format, output } => {
            cmd_gen(named.as_deref(), *random, *n, *m, *p, *seed, *format, output.as_ref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(Status::InputError.code());
        }
    };
    let doc = match run(&cli) {
        Ok(Output::Text(text)) => {
            print!("{text}");
            return ExitCode::SUCCESS;
        }
        Ok(Output::Document(doc)) => doc,
        Err(e) => {
            eprintln!("error: {e:#}");
            ResultDocument::error(format!("{e:#}"))
        }
    };
    println!("{}", serde_json::to_string_pretty(&doc).expect("document serializes"));
    ExitCode::from(doc.exit_code)
}
