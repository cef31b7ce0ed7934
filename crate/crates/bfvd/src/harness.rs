//! Seeded benchmark families backing the empirical checks: kernel-size
//! sweeps over the feedback edge number, solver timing sweeps over
//! (degeneracy, k) and (feedback vertex number, k), and gadget
//! equivalence runs. Instances run concurrently; reports are ordered by
//! instance index, and a rerun with the same configuration reproduces
//! everything except wall-clock times.

use std::sync::mpsc;
use std::time::{Duration, Instant};

use crate::error::Result;
use crate::gen;
use crate::graph::Graph;
use crate::instance::{BddInstance, BfvdInstance, WbddInstance};
use crate::params::{degeneracy, feedback_edge_data, minimum_fvs};
use crate::par;
use crate::reduce::hardness_gadget;
use crate::report::RunReport;
use crate::solvers::oracle::{bdd_decide, solve_oracle_with_limit};
use crate::solvers::{degenerate::solve_degenerate, fvn::solve_fvn};
use crate::wbdd::{expand_weights, reduce_to_fixpoint};
use crate::bfvd_kernel::kernelize_bfvd;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// Tree-plus-extra-edges kernels, `fen` from 1 to `fen_max`.
    FenSweep {
        fen_max: usize,
        seeds: u64,
        n: usize,
        r: u32,
        k: i64,
    },
    /// Degeneracy solver vs oracle over (d, k) with `d * k^2 <= cap`.
    DegenSweep { seeds: u64, n: usize, cap: usize },
    /// Feedback-vertex-number solver vs oracle over (fvn, k) with
    /// `fvn * k <= cap`.
    FvnSweep { seeds: u64, n: usize, cap: usize },
    /// Degree-blowup gadget equivalence on small seeded graphs.
    Gadget { seeds: u64 },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::FenSweep { .. } => "fen-sweep",
            Family::DegenSweep { .. } => "degen-sweep",
            Family::FvnSweep { .. } => "fvn-sweep",
            Family::Gadget { .. } => "gadget",
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub family: Family,
    pub base_seed: u64,
    pub timeout: Option<Duration>,
}

#[derive(Debug)]
pub struct BenchOutcome {
    pub reports: Vec<RunReport>,
    pub summary: Vec<String>,
    pub any_timeout: bool,
    pub disagreements: usize,
}

pub fn run_bench(cfg: &BenchConfig) -> Result<BenchOutcome> {
    let reports = match &cfg.family {
        Family::FenSweep {
            fen_max,
            seeds,
            n,
            r,
            k,
        } => fen_sweep(cfg, *fen_max, *seeds, *n, *r, *k)?,
        Family::DegenSweep { seeds, n, cap } => degen_sweep(cfg, *seeds, *n, *cap),
        Family::FvnSweep { seeds, n, cap } => fvn_sweep(cfg, *seeds, *n, *cap),
        Family::Gadget { seeds } => gadget_sweep(cfg, *seeds),
    };
    let summary = summarize(&cfg.family, &reports);
    let any_timeout = reports.iter().any(|r| r.timed_out);
    let disagreements = reports
        .iter()
        .filter(|r| r.oracle_agrees == Some(false))
        .count();
    Ok(BenchOutcome {
        reports,
        summary,
        any_timeout,
        disagreements,
    })
}

fn timed<T: Send + 'static>(
    timeout: Option<Duration>,
    job: impl FnOnce() -> T + Send + 'static,
) -> (Option<T>, f64) {
    let start = Instant::now();
    match timeout {
        None => {
            let out = job();
            (Some(out), start.elapsed().as_secs_f64() * 1e3)
        }
        Some(limit) => {
            let (tx, rx) = mpsc::channel();
            std::thread::spawn(move || {
                let _ = tx.send(job());
            });
            match rx.recv_timeout(limit) {
                Ok(out) => (Some(out), start.elapsed().as_secs_f64() * 1e3),
                Err(_) => (None, limit.as_secs_f64() * 1e3),
            }
        }
    }
}

fn fen_sweep(
    cfg: &BenchConfig,
    fen_max: usize,
    seeds: u64,
    n: usize,
    r: u32,
    k: i64,
) -> Result<Vec<RunReport>> {
    let mut jobs = Vec::new();
    for fen in 1..=fen_max {
        for s in 0..seeds {
            jobs.push((fen, s));
        }
    }
    let timeout = cfg.timeout;
    let base = cfg.base_seed;
    let reports = par::map_indices(jobs.len(), move |idx| {
        let (fen, s) = jobs[idx];
        let seed = base ^ ((fen as u64) << 32) ^ s;
        let mut rng = gen::rng_for(seed);
        let size = if n <= 20 {
            n
        } else {
            20 + (s as usize * 29) % (n - 20 + 1)
        };
        let g = gen::tree_plus_edges(size, fen, &mut rng);
        let mut rep = RunReport::new(idx, "fen-sweep", seed, g.vertex_count(), g.edge_count());
        rep.fen = Some(fen);
        rep.r = Some(r);
        rep.k = Some(k);
        let graph = g.clone();
        let (out, wall) = timed(timeout, move || {
            let lifted = WbddInstance::from_bdd(graph.clone(), r, k);
            let fixpoint = reduce_to_fixpoint(&lifted)?;
            let expanded = expand_weights(&fixpoint.0)?;
            let bf = BfvdInstance::new(graph, 2, 2, k.max(0) as usize)?;
            let bf_kernel = kernelize_bfvd(&bf)?;
            Ok::<_, crate::error::Error>((fixpoint, expanded, bf_kernel))
        });
        rep.wall_ms = wall;
        match out {
            None => rep.timed_out = true,
            Some(Err(_)) => rep.oracle_agrees = Some(false),
            Some(Ok(((fix, trace), (bdd, _), (bf_kernel, bf_trace)))) => {
                rep.kernel_vertices = Some(fix.graph.vertex_count());
                rep.kernel_edges = Some(fix.graph.edge_count());
                rep.expanded_vertices = Some(bdd.graph.vertex_count());
                rep.expanded_edges = Some(bdd.graph.edge_count());
                rep.rule_applications = Some((trace.len() + bf_trace.len()) as u64);
                rep.i = Some(2);
                rep.j = Some(2);
                rep.bfvd_kernel_size =
                    Some(bf_kernel.graph.vertex_count() + bf_kernel.graph.edge_count());
            }
        }
        rep
    });
    Ok(reports)
}

fn degen_sweep(cfg: &BenchConfig, seeds: u64, n: usize, cap: usize) -> Vec<RunReport> {
    let mut jobs = Vec::new();
    for d in 1..=3usize {
        for k in 1..=3usize {
            if d * k * k > cap {
                continue;
            }
            for s in 0..seeds {
                jobs.push((d, k, s));
            }
        }
    }
    let timeout = cfg.timeout;
    let base = cfg.base_seed;
    par::map_indices(jobs.len(), move |idx| {
        let (d, k, s) = jobs[idx];
        let seed = base ^ ((d as u64) << 40) ^ ((k as u64) << 32) ^ s;
        let mut rng = gen::rng_for(seed);
        let g = gen::random_degenerate(n, d, &mut rng);
        let mut rep = RunReport::new(idx, "degen-sweep", seed, g.vertex_count(), g.edge_count());
        rep.d = Some(degeneracy(&g).d);
        rep.i = Some(1);
        rep.j = Some(3);
        rep.k = Some(k as i64);
        let inst = BfvdInstance::new(g, 1, 3, k).unwrap();
        let solve_inst = inst.clone();
        let (out, wall) = timed(timeout, move || solve_degenerate(&solve_inst));
        rep.wall_ms = wall;
        match out {
            None => rep.timed_out = true,
            Some(Err(_)) => rep.oracle_agrees = Some(false),
            Some(Ok(verdict)) => {
                rep.verdict = Some(verdict.yes);
                rep.nodes = Some(verdict.stats.nodes);
                rep.rule_applications = Some(verdict.stats.reductions);
                if inst.graph.vertex_count() <= 14 {
                    let oracle = solve_oracle_with_limit(&inst, 14).unwrap();
                    rep.oracle_agrees = Some(oracle.yes == verdict.yes);
                }
            }
        }
        rep
    })
}

fn fvn_sweep(cfg: &BenchConfig, seeds: u64, n: usize, cap: usize) -> Vec<RunReport> {
    let mut jobs = Vec::new();
    for fen in 1..=4usize {
        for k in 1..=3usize {
            if fen * k > cap {
                continue;
            }
            for s in 0..seeds {
                jobs.push((fen, k, s));
            }
        }
    }
    let timeout = cfg.timeout;
    let base = cfg.base_seed;
    par::map_indices(jobs.len(), move |idx| {
        let (fen, k, s) = jobs[idx];
        let seed = base ^ ((fen as u64) << 40) ^ ((k as u64) << 32) ^ s;
        let mut rng = gen::rng_for(seed);
        let g = gen::tree_plus_edges(n, fen, &mut rng);
        let mut rep = RunReport::new(idx, "fvn-sweep", seed, g.vertex_count(), g.edge_count());
        let fvs = minimum_fvs(&g, Some(fen)).expect("fvn is at most fen");
        rep.fen = Some(feedback_edge_data(&g).fen);
        rep.fvs_size = Some(fvs.len());
        rep.i = Some(2);
        rep.j = Some(2 + (s as usize % 2));
        rep.k = Some(k as i64);
        let inst = BfvdInstance::new(g, 2, 2 + (s as usize % 2), k).unwrap();
        let solve_inst = inst.clone();
        let (out, wall) = timed(timeout, move || solve_fvn(&solve_inst, &fvs));
        rep.wall_ms = wall;
        match out {
            None => rep.timed_out = true,
            Some(Err(_)) => rep.oracle_agrees = Some(false),
            Some(Ok(verdict)) => {
                rep.verdict = Some(verdict.yes);
                rep.nodes = Some(verdict.stats.nodes);
                rep.rule_applications = Some(verdict.stats.reductions);
                if inst.graph.vertex_count() <= 14 {
                    let oracle = solve_oracle_with_limit(&inst, 14).unwrap();
                    rep.oracle_agrees = Some(oracle.yes == verdict.yes);
                }
            }
        }
        rep
    })
}

fn gadget_sweep(cfg: &BenchConfig, seeds: u64) -> Vec<RunReport> {
    let jobs: Vec<u64> = (0..seeds).collect();
    let timeout = cfg.timeout;
    let base = cfg.base_seed;
    par::map_indices(jobs.len(), move |idx| {
        let s = jobs[idx];
        let seed = base ^ s;
        let mut rng = gen::rng_for(seed);
        let n = 4 + (s as usize % 3); // 4..=6
        let g = gen::random_graph(n, 0.3 + 0.1 * ((s % 5) as f64), &mut rng);
        let i = 2 + (s as usize % 2).min(n.saturating_sub(3)); // keep n > i
        let r = (s % 3) as u32;
        let k = (s % 4) as i64;
        let bdd = BddInstance::new(g.clone(), r, k);
        let mut rep = RunReport::new(idx, "gadget", seed, g.vertex_count(), g.edge_count());
        rep.r = Some(r);
        rep.k = Some(k);
        rep.i = Some(i);
        let (out, wall) = timed(timeout, move || {
            let gadget = hardness_gadget(&bdd, i)?;
            let bf = solve_oracle_with_limit(&gadget, usize::MAX)?;
            Ok::<_, crate::error::Error>((gadget.j, bf.yes))
        });
        rep.wall_ms = wall;
        match out {
            None => rep.timed_out = true,
            Some(Err(_)) => rep.oracle_agrees = Some(false),
            Some(Ok((j, bf_yes))) => {
                rep.j = Some(j);
                let bdd_yes = bdd_decide(&g, r, k);
                rep.verdict = Some(bf_yes);
                rep.oracle_agrees = Some(bdd_yes == bf_yes);
            }
        }
        rep
    })
}

fn summarize(family: &Family, reports: &[RunReport]) -> Vec<String> {
    let mut lines = Vec::new();
    match family {
        Family::FenSweep { fen_max, r, k, .. } => {
            lines.push(format!(
                "fen-sweep summary (r={r}, k={k}): max kernel size per fen"
            ));
            let mut c_wbdd: f64 = 0.0;
            let mut c_bfvd: f64 = 0.0;
            let mut c_bdd: f64 = 0.0;
            for fen in 1..=*fen_max {
                let rows: Vec<&RunReport> = reports
                    .iter()
                    .filter(|r| r.fen == Some(fen) && !r.timed_out)
                    .collect();
                if rows.is_empty() {
                    continue;
                }
                let wbdd = rows
                    .iter()
                    .map(|r| r.kernel_vertices.unwrap_or(0) + r.kernel_edges.unwrap_or(0))
                    .max()
                    .unwrap();
                let bfvd = rows
                    .iter()
                    .map(|r| r.bfvd_kernel_size.unwrap_or(0))
                    .max()
                    .unwrap();
                let bdd = rows
                    .iter()
                    .map(|r| r.expanded_vertices.unwrap_or(0) + r.expanded_edges.unwrap_or(0))
                    .max()
                    .unwrap();
                c_wbdd = c_wbdd.max(wbdd as f64 / fen as f64);
                c_bfvd = c_bfvd.max(bfvd as f64 / fen as f64);
                c_bdd = c_bdd.max(bdd as f64 / (fen * fen) as f64);
                lines.push(format!(
                    "  fen={fen}: wbdd<={wbdd} bfvd<={bfvd} expanded-bdd<={bdd} ({} runs)",
                    rows.len()
                ));
            }
            lines.push(format!(
                "  fitted constants: wbdd/fen={c_wbdd:.1} bfvd/fen={c_bfvd:.1} bdd/fen^2={c_bdd:.1}"
            ));
        }
        Family::DegenSweep { .. } | Family::FvnSweep { .. } => {
            let (label, key): (&str, fn(&RunReport) -> Option<usize>) =
                if matches!(family, Family::DegenSweep { .. }) {
                    ("d", |r| r.d)
                } else {
                    ("fvn", |r| r.fvs_size)
                };
            lines.push(format!("{} summary: wall-time by ({label}, k)", family.name()));
            let mut cells: std::collections::BTreeMap<(usize, i64), (usize, f64, f64)> =
                Default::default();
            for r in reports {
                let (Some(p), Some(k)) = (key(r), r.k) else {
                    continue;
                };
                let cell = cells.entry((p, k)).or_insert((0, 0.0, 0.0));
                cell.0 += 1;
                cell.1 += r.wall_ms;
                cell.2 = cell.2.max(r.wall_ms);
            }
            for ((p, k), (count, total, max)) in cells {
                lines.push(format!(
                    "  {label}={p} k={k}: runs={count} mean_ms={:.2} max_ms={max:.2}",
                    total / count as f64
                ));
            }
            let disagreements = reports
                .iter()
                .filter(|r| r.oracle_agrees == Some(false))
                .count();
            lines.push(format!("  oracle disagreements: {disagreements}"));
        }
        Family::Gadget { .. } => {
            let checked = reports.iter().filter(|r| r.oracle_agrees.is_some()).count();
            let agree = reports
                .iter()
                .filter(|r| r.oracle_agrees == Some(true))
                .count();
            lines.push(format!("gadget summary: {agree}/{checked} equivalences hold"));
        }
    }
    let timeouts = reports.iter().filter(|r| r.timed_out).count();
    if timeouts > 0 {
        lines.push(format!("  timeouts: {timeouts}"));
    }
    lines
}

/// Double-checks determinism: two runs of the same configuration must
/// agree on everything but wall time.
pub fn reports_match_modulo_time(a: &[RunReport], b: &[RunReport]) -> bool {
    a.len() == b.len()
        && a.iter().zip(b).all(|(x, y)| {
            let mut x = x.clone();
            let mut y = y.clone();
            x.wall_ms = 0.0;
            y.wall_ms = 0.0;
            x == y
        })
}

/// A default graph sanity check used by self-test entry points.
pub fn graph_roundtrip_ok(g: &Graph) -> bool {
    let doc = crate::parse::write_bfvd(&BfvdInstance {
        graph: g.clone(),
        i: 1,
        j: 1,
        k: 0,
    });
    match crate::parse::parse_instance(&doc) {
        Ok(crate::instance::ParsedInstance::Bfvd(inst)) => {
            crate::parse::write_bfvd(&inst) == doc
        }
        _ => false,
    }
}
