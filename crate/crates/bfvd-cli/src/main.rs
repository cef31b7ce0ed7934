use std::process::ExitCode;
use std::sync::mpsc;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};

use bfvd::biclique::enumerate_smaller_sides;
use bfvd::error::Error as CoreError;
use bfvd::harness::{run_bench, BenchConfig, Family};
use bfvd::instance::{BddInstance, ParsedInstance};
use bfvd::params::{degeneracy, feedback_edge_data, minimum_fvs};
use bfvd::parse::{parse_instance, write_bdd, write_bfvd};
use bfvd::reduce::{bdd_as_bfvd, hardness_gadget};
use bfvd::solvers::{solve, SolveOptions, Strategy};
use bfvd::wbdd::table::PathAction;
use bfvd::wbdd::{build_replacement_table, kernelize_bdd};
use bfvd::VertexId;

mod selftest;

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 2;
const EXIT_CONTRACT: u8 = 3;
const EXIT_TIMEOUT: u8 = 4;

#[derive(Parser)]
#[command(
    name = "bfvd",
    about = "Biclique-free vertex deletion: solvers, kernels, and reductions",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an instance and print the verdict with a witness.
    Solve(SolveArgs),
    /// Reduce an instance to an answer-equivalent kernel.
    Kernelize(KernelizeArgs),
    /// List the smaller sides of all K_{i,j} subgraphs.
    Enumerate(EnumerateArgs),
    /// Structural parameters of the instance graph.
    Stats(StatsArgs),
    /// Dump the path replacement table for a given r.
    CharmTable(CharmArgs),
    /// Rewrite a bounded-degree instance as a biclique-free instance.
    ReduceBdd(ReduceArgs),
    /// Run a seeded benchmark family and print reports plus a summary.
    Bench(BenchArgs),
    /// Run the built-in cross-check suites; nonzero exit on any violation.
    Selftest,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    input: String,
    /// auto | oracle | vc | branch | degen | fvn
    #[arg(long, default_value = "auto")]
    algo: String,
    /// File with feedback vertex ids (whitespace separated) for fvn.
    #[arg(long)]
    fvs_file: Option<String>,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    timeout_ms: Option<u64>,
    /// Lift the oracle's 16-vertex guard to this many vertices.
    #[arg(long)]
    oracle_limit: Option<usize>,
    /// Budget for the exact feedback vertex search in auto/fvn mode.
    #[arg(long, default_value_t = 8)]
    fvs_cap: usize,
}

#[derive(Args)]
struct KernelizeArgs {
    #[arg(long)]
    input: String,
    /// bdd | bfvd
    #[arg(long)]
    mode: String,
    /// Override the degree bound from the header (bdd mode).
    #[arg(long)]
    r: Option<u32>,
    /// Override the budget from the header (bdd mode).
    #[arg(long)]
    k: Option<i64>,
    #[arg(long)]
    timeout_ms: Option<u64>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    input: String,
    /// Override i from the instance file.
    #[arg(long)]
    i: Option<usize>,
    /// Override j from the instance file.
    #[arg(long)]
    j: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct StatsArgs {
    #[arg(long)]
    input: String,
    #[arg(long)]
    json: bool,
    /// Budget for the exact feedback vertex search.
    #[arg(long, default_value_t = 10)]
    fvs_cap: usize,
}

#[derive(Args)]
struct CharmArgs {
    #[arg(long, default_value_t = 2)]
    r: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long)]
    input: String,
    /// Smaller-side size of the produced instance (1 = direct wrapper).
    #[arg(long)]
    i: usize,
}

#[derive(Args)]
struct BenchArgs {
    /// fen-sweep | degen-sweep | fvn-sweep | gadget
    #[arg(long)]
    family: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Instances per configuration cell.
    #[arg(long, default_value_t = 10)]
    seeds: u64,
    #[arg(long, default_value_t = 10)]
    fen_max: usize,
    #[arg(long, default_value_t = 300)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    r: u32,
    #[arg(long, default_value_t = 2)]
    k: i64,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    timeout_ms: Option<u64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(classify(&err))
        }
    }
}

fn classify(err: &CoreError) -> u8 {
    match err {
        CoreError::Parse { .. } | CoreError::Io(_) => EXIT_USAGE,
        _ => EXIT_CONTRACT,
    }
}

fn read_input(path: &str) -> Result<ParsedInstance, CoreError> {
    let text = std::fs::read_to_string(path)?;
    parse_instance(&text)
}

fn with_timeout<T: Send + 'static>(
    timeout_ms: Option<u64>,
    job: impl FnOnce() -> T + Send + 'static,
) -> Option<T> {
    match timeout_ms {
        None => Some(job()),
        Some(ms) => {
            let (tx, rx) = mpsc::channel();
            std::thread::spawn(move || {
                let _ = tx.send(job());
            });
            rx.recv_timeout(Duration::from_millis(ms)).ok()
        }
    }
}

fn dispatch(cmd: Command) -> Result<u8, CoreError> {
    match cmd {
        Command::Solve(args) => cmd_solve(args),
        Command::Kernelize(args) => cmd_kernelize(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Stats(args) => cmd_stats(args),
        Command::CharmTable(args) => cmd_charm(args),
        Command::ReduceBdd(args) => cmd_reduce(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Selftest => Ok(selftest::run()),
    }
}

fn cmd_solve(args: SolveArgs) -> Result<u8, CoreError> {
    let ParsedInstance::Bfvd(inst) = read_input(&args.input)? else {
        return Err(CoreError::UnsupportedParameter(
            "solve expects a bfvd instance file".into(),
        ));
    };
    let strategy: Strategy = args.algo.parse()?;
    let fvs_override = match &args.fvs_file {
        None => None,
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            let ids: Result<Vec<VertexId>, _> =
                text.split_whitespace().map(str::parse).collect();
            Some(ids.map_err(|e| CoreError::Parse {
                line: 1,
                message: format!("bad vertex id in {path}: {e}"),
            })?)
        }
    };
    let opts = SolveOptions {
        strategy,
        oracle_limit: args.oracle_limit.unwrap_or(16),
        fvs_cap: args.fvs_cap,
        fvs_override,
        ..SolveOptions::default()
    };

    let start = Instant::now();
    let outcome = with_timeout(args.timeout_ms, move || solve(&inst, &opts));
    let Some(result) = outcome else {
        if args.json {
            println!("{}", serde_json::json!({"status": "timeout"}));
        } else {
            println!("TIMEOUT (no verdict)");
        }
        return Ok(EXIT_TIMEOUT);
    };
    let verdict = result?;
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    if args.json {
        println!(
            "{}",
            serde_json::json!({
                "answer": if verdict.yes { "yes" } else { "no" },
                "witness": verdict.witness,
                "stats": {
                    "nodes": verdict.stats.nodes,
                    "reductions": verdict.stats.reductions,
                },
                "wall_ms": wall_ms,
            })
        );
    } else {
        if verdict.yes {
            let witness = verdict.witness.clone().unwrap_or_default();
            let ids: Vec<String> = witness.iter().map(|v| v.to_string()).collect();
            println!("YES witness: {} (size {})", ids.join(" "), witness.len());
        } else {
            println!("NO");
        }
        println!(
            "stats: nodes={} reductions={} wall_ms={:.2}",
            verdict.stats.nodes, verdict.stats.reductions, wall_ms
        );
    }
    Ok(EXIT_OK)
}

fn cmd_kernelize(args: KernelizeArgs) -> Result<u8, CoreError> {
    match args.mode.as_str() {
        "bfvd" => {
            let ParsedInstance::Bfvd(inst) = read_input(&args.input)? else {
                return Err(CoreError::UnsupportedParameter(
                    "kernelize --mode bfvd expects a bfvd instance file".into(),
                ));
            };
            let outcome = with_timeout(args.timeout_ms, move || {
                bfvd::bfvd_kernel::kernelize_bfvd(&inst)
            });
            let Some(result) = outcome else {
                println!("# TIMEOUT");
                return Ok(EXIT_TIMEOUT);
            };
            let (kernel, trace) = result?;
            print!("{}", write_bfvd(&kernel));
            println!(
                "# kernel: n={} m={} rules={}",
                kernel.graph.vertex_count(),
                kernel.graph.edge_count(),
                trace.len()
            );
            Ok(EXIT_OK)
        }
        "bdd" => {
            let ParsedInstance::Wbdd(inst) = read_input(&args.input)? else {
                return Err(CoreError::UnsupportedParameter(
                    "kernelize --mode bdd expects a wbdd instance file".into(),
                ));
            };
            if inst.weights.values().any(|&w| w > 0) {
                return Err(CoreError::UnsupportedParameter(
                    "kernelize --mode bdd starts from an unweighted instance; \
                     weights must be absent or zero"
                        .into(),
                ));
            }
            let r = args.r.unwrap_or(inst.r);
            let k = args.k.unwrap_or(inst.k);
            let graph = inst.graph.clone();
            let outcome = with_timeout(args.timeout_ms, move || kernelize_bdd(&graph, r, k));
            let Some(result) = outcome else {
                println!("# TIMEOUT");
                return Ok(EXIT_TIMEOUT);
            };
            let (kernel, trace) = result?;
            print!("{}", write_bdd(&kernel));
            let decided = match kernel.decided() {
                Some(true) => "yes",
                Some(false) => "no",
                None => "open",
            };
            println!(
                "# kernel: n={} m={} k={} decided={} rules={}",
                kernel.graph.vertex_count(),
                kernel.graph.edge_count(),
                kernel.k,
                decided,
                trace.len()
            );
            Ok(EXIT_OK)
        }
        other => Err(CoreError::UnsupportedParameter(format!(
            "unknown kernelize mode {other:?} (use bdd or bfvd)"
        ))),
    }
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<u8, CoreError> {
    let parsed = read_input(&args.input)?;
    let (graph, i0, j0) = match &parsed {
        ParsedInstance::Bfvd(inst) => (&inst.graph, Some(inst.i), Some(inst.j)),
        ParsedInstance::Wbdd(inst) => (&inst.graph, None, None),
    };
    let (Some(i), Some(j)) = (args.i.or(i0), args.j.or(j0)) else {
        return Err(CoreError::UnsupportedParameter(
            "enumerate needs --i and --j (or a bfvd instance with a param line)".into(),
        ));
    };
    if i < 1 || j < i {
        return Err(CoreError::Precondition(format!(
            "need 1 <= i <= j, got i={i}, j={j}"
        )));
    }
    let sides = enumerate_smaller_sides(graph, i, j);
    for side in sides.iter() {
        if args.json {
            println!(
                "{}",
                serde_json::json!({"side": side.vertices, "common": side.common.len()})
            );
        } else {
            let ids: Vec<String> = side.vertices.iter().map(|v| v.to_string()).collect();
            println!("{} | {}", ids.join(" "), side.common.len());
        }
    }
    if !args.json {
        println!("# sides={} ss={}", sides.len(), sides.ss());
    }
    Ok(EXIT_OK)
}

fn cmd_stats(args: StatsArgs) -> Result<u8, CoreError> {
    let parsed = read_input(&args.input)?;
    let graph = match &parsed {
        ParsedInstance::Bfvd(inst) => &inst.graph,
        ParsedInstance::Wbdd(inst) => &inst.graph,
    };
    let deg = degeneracy(graph);
    let fe = feedback_edge_data(graph);
    let fvs = minimum_fvs(graph, Some(args.fvs_cap));
    if args.json {
        println!(
            "{}",
            serde_json::json!({
                "n": graph.vertex_count(),
                "m": graph.edge_count(),
                "d": deg.d,
                "fen": fe.fen,
                "fvs": fvs.as_ref().ok().map(|f| f.len()),
            })
        );
    } else {
        println!("n={} m={}", graph.vertex_count(), graph.edge_count());
        println!("d={}", deg.d);
        println!("fen={}", fe.fen);
        match &fvs {
            Ok(f) => println!("fvs={}", f.len()),
            Err(_) => println!("fvs>{} (budget exhausted)", args.fvs_cap),
        }
    }
    Ok(EXIT_OK)
}

fn cmd_charm(args: CharmArgs) -> Result<u8, CoreError> {
    let table = build_replacement_table(args.r)?;
    for (pattern, entry) in table.entries() {
        let offsets: Vec<String> = std::iter::once(-1i8)
            .chain(pattern.iter().copied())
            .chain(std::iter::once(-1i8))
            .map(|o| o.to_string())
            .collect();
        let replacement = match &entry.action {
            PathAction::Replace {
                target_inner,
                k_delta,
            } => {
                let t: Vec<String> = std::iter::once(-1i8)
                    .chain(target_inner.iter().copied())
                    .chain(std::iter::once(-1i8))
                    .map(|o| o.to_string())
                    .collect();
                format!("{} dk={}", t.join(","), k_delta)
            }
            PathAction::Irreducible => "irreducible".to_string(),
        };
        if args.json {
            println!(
                "{}",
                serde_json::json!({
                    "pattern": offsets,
                    "matrix": entry.matrix.render(),
                    "replacement": replacement,
                })
            );
        } else {
            println!(
                "{}  {}  {}",
                offsets.join(","),
                entry.matrix.render(),
                replacement
            );
        }
    }
    println!(
        "# patterns={} reducible={} distinct_matrices={} distinct_profiles={} \
         matrix_matched_six={}",
        table.len(),
        table.reducible(),
        table.distinct_matrices(),
        table.distinct_profiles(),
        table.matrix_matched_six()
    );
    Ok(EXIT_OK)
}

fn cmd_reduce(args: ReduceArgs) -> Result<u8, CoreError> {
    let ParsedInstance::Wbdd(inst) = read_input(&args.input)? else {
        return Err(CoreError::UnsupportedParameter(
            "reduce-bdd expects a wbdd/bdd instance file".into(),
        ));
    };
    if inst.weights.values().any(|&w| w > 0) {
        return Err(CoreError::UnsupportedParameter(
            "reduce-bdd needs an unweighted instance; weights must be absent or zero".into(),
        ));
    }
    let bdd = BddInstance::new(inst.graph.clone(), inst.r, inst.k);
    let out = if args.i == 1 {
        bdd_as_bfvd(&bdd)?
    } else {
        hardness_gadget(&bdd, args.i)?
    };
    print!("{}", write_bfvd(&out));
    Ok(EXIT_OK)
}

fn cmd_bench(args: BenchArgs) -> Result<u8, CoreError> {
    let family = match args.family.as_str() {
        "fen-sweep" => Family::FenSweep {
            fen_max: args.fen_max,
            seeds: args.seeds,
            n: args.n,
            r: args.r,
            k: args.k,
        },
        "degen-sweep" => Family::DegenSweep {
            seeds: args.seeds,
            n: 13,
            cap: 12,
        },
        "fvn-sweep" => Family::FvnSweep {
            seeds: args.seeds,
            n: 13,
            cap: 12,
        },
        "gadget" => Family::Gadget { seeds: args.seeds },
        other => {
            return Err(CoreError::UnsupportedParameter(format!(
                "unknown bench family {other:?}"
            )))
        }
    };
    let cfg = BenchConfig {
        family,
        base_seed: args.seed,
        timeout: args.timeout_ms.map(Duration::from_millis),
    };
    let outcome = run_bench(&cfg)?;
    for report in &outcome.reports {
        if args.json {
            println!("{}", serde_json::to_string(report).expect("report serializes"));
        } else {
            println!("{}", report.render());
        }
    }
    for line in &outcome.summary {
        println!("{line}");
    }
    if outcome.disagreements > 0 {
        eprintln!("error: {} oracle disagreements", outcome.disagreements);
        return Ok(EXIT_CONTRACT);
    }
    if outcome.any_timeout {
        return Ok(EXIT_TIMEOUT);
    }
    Ok(EXIT_OK)
}
