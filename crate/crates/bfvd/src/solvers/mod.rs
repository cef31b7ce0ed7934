//! Exact decision/witness solvers, all cross-checked against the
//! brute-force oracle. Every yes-verdict is re-verified against the
//! original graph before it is returned.

pub mod branching;
pub mod degenerate;
pub mod fvn;
pub mod oracle;
pub mod vc;

use std::str::FromStr;

use crate::biclique::contains_biclique;
use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::instance::BfvdInstance;
use crate::params::minimum_fvs;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// search-tree nodes / guesses explored
    pub nodes: u64,
    /// reduction-rule applications along the way
    pub reductions: u64,
}

impl SolveStats {
    pub fn absorb(&mut self, other: SolveStats) {
        self.nodes += other.nodes;
        self.reductions += other.reductions;
    }
}

/// Decision plus witness. When the answer is yes, the witness has at most
/// `k` vertices and its deletion leaves the graph biclique-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub yes: bool,
    pub witness: Option<Vec<VertexId>>,
    pub stats: SolveStats,
}

impl Verdict {
    pub fn yes(mut witness: Vec<VertexId>, stats: SolveStats) -> Verdict {
        witness.sort_unstable();
        witness.dedup();
        Verdict {
            yes: true,
            witness: Some(witness),
            stats,
        }
    }

    pub fn no(stats: SolveStats) -> Verdict {
        Verdict {
            yes: false,
            witness: None,
            stats,
        }
    }
}

/// Checks a claimed witness against the original instance.
pub fn verify_witness(inst: &BfvdInstance, witness: &[VertexId]) -> Result<()> {
    if witness.len() > inst.k {
        return Err(Error::Integrity(format!(
            "witness of size {} exceeds k={}",
            witness.len(),
            inst.k
        )));
    }
    if let Some(v) = witness.iter().find(|v| !inst.graph.contains_vertex(**v)) {
        return Err(Error::Integrity(format!("witness vertex {v} not in graph")));
    }
    let rest = inst.graph.removing(witness);
    if contains_biclique(&rest, inst.i, inst.j).is_some() {
        return Err(Error::Integrity(
            "witness does not destroy every biclique".into(),
        ));
    }
    Ok(())
}

fn verified(inst: &BfvdInstance, verdict: Verdict) -> Result<Verdict> {
    if verdict.yes {
        verify_witness(inst, verdict.witness.as_deref().unwrap_or(&[]))?;
    }
    Ok(verdict)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Auto,
    Oracle,
    Vc,
    Branch,
    Degen,
    Fvn,
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Strategy> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "oracle" => Ok(Strategy::Oracle),
            "vc" => Ok(Strategy::Vc),
            "branch" => Ok(Strategy::Branch),
            "degen" => Ok(Strategy::Degen),
            "fvn" => Ok(Strategy::Fvn),
            other => Err(Error::UnsupportedParameter(format!(
                "unknown strategy {other:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub strategy: Strategy,
    /// Oracle refuses graphs above this many vertices.
    pub oracle_limit: usize,
    /// Auto dispatch hands instances this small to the oracle.
    pub oracle_auto_threshold: usize,
    /// Feedback-vertex-set search budget for the fvn strategy.
    pub fvs_cap: usize,
    /// Externally supplied feedback vertex set (skips the exact search;
    /// need not be minimum).
    pub fvs_override: Option<Vec<VertexId>>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            strategy: Strategy::Auto,
            oracle_limit: oracle::DEFAULT_ORACLE_LIMIT,
            oracle_auto_threshold: 14,
            fvs_cap: 8,
            fvs_override: None,
        }
    }
}

/// Front door: dispatches to a solver. All strategies return equal
/// answers; `auto` prefers the oracle on tiny inputs, then the
/// feedback-vertex-number algorithm when `i >= 2` and a small feedback
/// vertex set is found, then the degeneracy solver.
pub fn solve(inst: &BfvdInstance, opts: &SolveOptions) -> Result<Verdict> {
    match opts.strategy {
        Strategy::Oracle => {
            verified(inst, oracle::solve_oracle_with_limit(inst, opts.oracle_limit)?)
        }
        Strategy::Vc => {
            let cover = crate::params::vertex_cover(&inst.graph);
            vc::solve_vc(inst, &cover)
        }
        Strategy::Branch => branching::solve_branching(inst),
        Strategy::Degen => degenerate::solve_degenerate(inst),
        Strategy::Fvn => {
            let d_set = match &opts.fvs_override {
                Some(d) => d.clone(),
                None => minimum_fvs(&inst.graph, Some(opts.fvs_cap))?,
            };
            fvn::solve_fvn(inst, &d_set)
        }
        Strategy::Auto => {
            if inst.graph.vertex_count() <= opts.oracle_auto_threshold {
                return verified(
                    inst,
                    oracle::solve_oracle_with_limit(inst, opts.oracle_limit)?,
                );
            }
            if inst.i >= 2 {
                let d_set = match &opts.fvs_override {
                    Some(d) => Some(d.clone()),
                    None => minimum_fvs(&inst.graph, Some(opts.fvs_cap)).ok(),
                };
                if let Some(d_set) = d_set {
                    if d_set.len() <= opts.fvs_cap {
                        return fvn::solve_fvn(inst, &d_set);
                    }
                }
            }
            degenerate::solve_degenerate(inst)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn auto_uses_oracle_on_tiny_instances() {
        let g = Graph::from_edges([(1, 2), (2, 3), (3, 4), (4, 5)]);
        let inst = BfvdInstance::new(g, 1, 2, 1).unwrap();
        let auto = solve(&inst, &SolveOptions::default()).unwrap();
        let oracle = solve(
            &inst,
            &SolveOptions {
                strategy: Strategy::Oracle,
                ..SolveOptions::default()
            },
        )
        .unwrap();
        assert_eq!(auto.yes, oracle.yes);
        assert_eq!(auto.witness, oracle.witness);
    }

    #[test]
    fn fvn_rejects_i_one() {
        let g = Graph::from_edges([(1, 2), (2, 3)]);
        let inst = BfvdInstance::new(g, 1, 2, 1).unwrap();
        let res = solve(
            &inst,
            &SolveOptions {
                strategy: Strategy::Fvn,
                ..SolveOptions::default()
            },
        );
        assert!(matches!(res, Err(Error::UnsupportedParameter(_))));
    }
}
