use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use log::info;
use serde_json::{json, Value};

use conndim::solver::{cdim_decompose_with, cdim_exact_with, mdim_exact_with};
use conndim::{
    block_cut_tree, build_reduction, cdim_greedy, decide_sat, is_resolving, kappa_matrix, lower_bounds, parse_dimacs,
    parse_edge_list, parse_graph6, parse_graph_auto, representation, standard_graph, threshold_cdim_any,
    threshold_graph, to_graph6, triangle_chain, triangle_chain_cdim, CnfFormula, DimensionResult, Error, Graph,
    SolverConfig, ThresholdSequence,
};

#[derive(Parser, Debug)]
#[command(name = "conndim", version, about = "Connectivity dimension of graphs")]
struct Cli {
    /// Worker threads for parallel sections (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    /// Input format; graphs are auto-detected when omitted.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
    Dimacs,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SolveMethod {
    Exact,
    Greedy,
    Decompose,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the local-connectivity matrix.
    Kappa { input: Option<PathBuf> },
    /// Check whether a vertex set is resolving.
    Check {
        /// Comma-separated landmark vertices, e.g. 0,3,7.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        set: Vec<usize>,
        input: Option<PathBuf>,
    },
    /// Compute the connectivity dimension.
    Cdim {
        #[arg(long, value_enum, default_value = "exact")]
        method: SolveMethod,
        /// Search-node budget for the exact solver.
        #[arg(long)]
        budget: Option<u64>,
        input: Option<PathBuf>,
    },
    /// Compute the metric dimension.
    Mdim {
        #[arg(long)]
        budget: Option<u64>,
        input: Option<PathBuf>,
    },
    /// Report lower bounds and the greedy upper bound.
    Bounds { input: Option<PathBuf> },
    /// Print blocks and cut vertices.
    Blocks { input: Option<PathBuf> },
    /// Generate a graph family member as graph6.
    Gen {
        /// One of threshold, triangles, house, figure1, figure5, path, cycle, complete, star.
        family: String,
        /// Family parameter: a 0/1 sequence for threshold, a count otherwise.
        arg: Option<String>,
        /// Print a JSON object instead of the bare graph6 line.
        #[arg(long)]
        json: bool,
        /// Also write a JSON file with the predicted dimension.
        #[arg(long)]
        sidecar: Option<PathBuf>,
    },
    /// Build the gadget graph of a 3-CNF formula.
    Reduce { input: Option<PathBuf> },
    /// Decide a 3-CNF formula through the dimension criterion.
    Sat { input: Option<PathBuf> },
}

enum Failure {
    Input(String),
    Inconclusive,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<Value, (Value, Failure)>;

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

fn read_graph(path: &Option<PathBuf>, format: Option<Format>) -> Result<Graph, Failure> {
    let text = read_input(path)?;
    let graph = match format {
        None => parse_graph_auto(&text)?,
        Some(Format::Graph6) => parse_graph6(&text)?,
        Some(Format::Edgelist) => parse_edge_list(&text)?,
        Some(Format::Dimacs) => {
            return Err(Failure::Input("dimacs input is only accepted by reduce and sat".into()));
        }
    };
    info!("read graph with {} vertices and {} edges", graph.order(), graph.size());
    Ok(graph)
}

fn read_formula(path: &Option<PathBuf>, format: Option<Format>) -> Result<CnfFormula, Failure> {
    if matches!(format, Some(Format::Graph6 | Format::Edgelist)) {
        return Err(Failure::Input("reduce and sat expect dimacs input".into()));
    }
    Ok(parse_dimacs(&read_input(path)?)?)
}

fn dimension_json(g: &Graph, result: &DimensionResult) -> Value {
    let mut bounds = json!({ "lower": result.bounds.lower, "upper": result.bounds.upper });
    if g.order() >= 2 && g.is_connected() {
        if let Ok(report) = lower_bounds(g) {
            if let (Value::Object(b), Value::Object(r)) = (&mut bounds, json!(report)) {
                b.extend(r);
            }
        }
    }
    json!({
        "value": result.value,
        "basis": result.basis,
        "method": result.method,
        "bounds": bounds,
        "conclusive": result.conclusive,
        "verified": result.verified,
    })
}

fn finish_dimension(value: Value, conclusive: bool) -> Outcome {
    if conclusive {
        Ok(value)
    } else {
        Err((value, Failure::Inconclusive))
    }
}

fn config(budget: Option<u64>) -> SolverConfig {
    let mut cfg = SolverConfig::default();
    if let Some(b) = budget {
        cfg.node_budget = b;
    }
    cfg
}

fn generate(family: &str, arg: Option<&str>) -> Result<(Graph, Option<usize>), Failure> {
    let count = || -> Result<usize, Failure> {
        let raw = arg.ok_or_else(|| Failure::Input(format!("{family} needs a numeric argument")))?;
        raw.parse().map_err(|_| Failure::Input(format!("{family}: expected a number, got {raw:?}")))
    };
    Ok(match family {
        "threshold" => {
            let raw = arg.ok_or_else(|| Failure::Input("threshold needs a 0/1 sequence such as 1,1,0,1,1".into()))?;
            let seq: ThresholdSequence = raw.parse()?;
            (threshold_graph(&seq), Some(threshold_cdim_any(&seq)))
        }
        "triangles" => {
            let b = count()?;
            (triangle_chain(b)?, Some(triangle_chain_cdim(b)?))
        }
        "house" => (standard_graph("house", 5)?, Some(2)),
        "figure1" => (standard_graph("figure1", 8)?, Some(2)),
        "figure5" => (standard_graph("figure5", 9)?, Some(7)),
        "path" | "cycle" | "complete" | "star" => {
            let n = count()?;
            (standard_graph(family, n)?, Some(n.saturating_sub(1)))
        }
        other => return Err(Failure::Input(format!("unknown family {other:?}"))),
    })
}

fn run(cli: &Cli) -> Outcome {
    let fail = |f: Failure| (Value::Null, f);
    match &cli.command {
        Command::Kappa { input } => {
            let g = read_graph(input, cli.format).map_err(fail)?;
            Ok(json!(kappa_matrix(&g)))
        }
        Command::Check { set, input } => {
            let g = read_graph(input, cli.format).map_err(fail)?;
            let km = kappa_matrix(&g);
            let verdict = is_resolving(&km, set).map_err(|e| fail(e.into()))?;
            let reps: Vec<Value> = (0..g.order())
                .map(|v| {
                    let r = representation(&km, v, set).expect("validated above");
                    json!({ "vertex": v, "values": r.values })
                })
                .collect();
            let mut out = json!(verdict);
            out["set"] = json!(set);
            out["representations"] = Value::Array(reps);
            Ok(out)
        }
        Command::Cdim { method, budget, input } => {
            let g = read_graph(input, cli.format).map_err(fail)?;
            let cfg = config(*budget);
            let result = match method {
                SolveMethod::Exact => cdim_exact_with(&g, &cfg),
                SolveMethod::Greedy => cdim_greedy(&g),
                SolveMethod::Decompose => cdim_decompose_with(&g, &cfg),
            }
            .map_err(|e| fail(e.into()))?;
            finish_dimension(dimension_json(&g, &result), result.conclusive)
        }
        Command::Mdim { budget, input } => {
            let g = read_graph(input, cli.format).map_err(fail)?;
            let result = mdim_exact_with(&g, &config(*budget)).map_err(|e| fail(e.into()))?;
            let value = json!({
                "value": result.value,
                "basis": result.basis,
                "method": result.method,
                "bounds": result.bounds,
                "conclusive": result.conclusive,
                "verified": result.verified,
            });
            finish_dimension(value, result.conclusive)
        }
        Command::Bounds { input } => {
            let g = read_graph(input, cli.format).map_err(fail)?;
            Ok(json!(lower_bounds(&g).map_err(|e| fail(e.into()))?))
        }
        Command::Blocks { input } => {
            let g = read_graph(input, cli.format).map_err(fail)?;
            let tree = block_cut_tree(&g).map_err(|e| fail(e.into()))?;
            let mut out = json!(tree);
            out["bridges"] = json!(tree.bridges());
            Ok(out)
        }
        Command::Gen { family, arg, json: as_json, sidecar } => {
            let (g, predicted) = generate(family, arg.as_deref()).map_err(fail)?;
            let info = json!({
                "family": family,
                "argument": arg,
                "graph6": to_graph6(&g),
                "vertices": g.order(),
                "edges": g.size(),
                "predicted_cdim": predicted,
            });
            if let Some(path) = sidecar {
                let text = serde_json::to_string_pretty(&info).expect("serializable");
                fs::write(path, text + "\n").map_err(|e| fail(e.into()))?;
            }
            if *as_json {
                Ok(info)
            } else {
                Ok(Value::String(to_graph6(&g)))
            }
        }
        Command::Reduce { input } => {
            let f = read_formula(input, cli.format).map_err(fail)?;
            let (g, map) = build_reduction(&f).map_err(|e| fail(e.into()))?;
            Ok(json!({
                "graph6": to_graph6(&g),
                "vertices": g.order(),
                "edges": g.size(),
                "target_dimension": 2 * (map.m + map.n),
                "gadgets": map.layout(),
            }))
        }
        Command::Sat { input } => {
            let f = read_formula(input, cli.format).map_err(fail)?;
            Ok(json!(decide_sat(&f).map_err(|e| fail(e.into()))?))
        }
    }
}

/// Plain `key: value` lines; nested arrays of arrays become aligned rows.
fn render_pretty(value: &Value) -> String {
    let scalar = |v: &Value| match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    match value {
        Value::Object(map) => {
            let mut out = String::new();
            for (key, v) in map {
                match v {
                    Value::Array(rows) if rows.iter().all(Value::is_array) && !rows.is_empty() => {
                        out.push_str(&format!("{key}:\n"));
                        for row in rows {
                            let cells: Vec<String> =
                                row.as_array().into_iter().flatten().map(|c| format!("{:>4}", scalar(c))).collect();
                            out.push_str(&format!("  {}\n", cells.join("")));
                        }
                    }
                    Value::Array(items) => {
                        let parts: Vec<String> = items.iter().map(scalar).collect();
                        out.push_str(&format!("{key}: {}\n", parts.join(" ")));
                    }
                    Value::Object(_) => {
                        out.push_str(&format!("{key}:\n"));
                        for line in render_pretty(v).lines() {
                            out.push_str(&format!("  {line}\n"));
                        }
                    }
                    other => out.push_str(&format!("{key}: {}\n", scalar(other))),
                }
            }
            out
        }
        other => format!("{}\n", scalar(other)),
    }
}

fn emit(cli: &Cli, value: &Value) -> io::Result<()> {
    let mut out = io::stdout().lock();
    match value {
        Value::Null => Ok(()),
        Value::String(line) if matches!(cli.command, Command::Gen { .. }) => writeln!(out, "{line}"),
        v if cli.pretty => write!(out, "{}", render_pretty(v)),
        v => writeln!(out, "{v}"),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let (value, code) = match run(&cli) {
        Ok(value) => (value, ExitCode::SUCCESS),
        Err((value, Failure::Inconclusive)) => {
            eprintln!("warning: search budget exhausted; result is an upper bound only");
            (value, ExitCode::from(2))
        }
        Err((_, Failure::Input(message))) => {
            eprintln!("error: {message}");
            return ExitCode::from(1);
        }
    };
    if let Err(e) = emit(&cli, &value) {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    code
}
