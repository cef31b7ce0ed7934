//! The feedback-vertex-number algorithm (`i >= 2`).
//!
//! With a feedback vertex set `D` in hand: if `k >= |D|` the instance is
//! trivially yes (forests hold no `K_{i,j}` for `i >= 2`); if
//! `j <= |D| + 1` the hitting-set branching takes over. Otherwise every
//! smaller side meets the forest `F = G - D` in at most one vertex, which
//! yields two rejection tests: more than `3k` forest vertices whose closed
//! forest-neighborhood holds three side-union members, or more than `2k`
//! side-union members left in the forest, both force a no for the current
//! guess. What survives is handed to the cover solver.

use std::collections::BTreeSet;

use crate::biclique::{enumerate_smaller_sides, reduce_biclique_membership};
use crate::bits::for_each_combination;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::instance::BfvdInstance;
use crate::solvers::{vc::solve_vc, verify_witness, SolveStats, Verdict};

/// Guess-rejection event, exposed so tests can confirm that rejected
/// branches really hold no solution inside the stated universe.
#[derive(Debug, Clone)]
pub struct RejectEvent {
    pub graph: Graph,
    pub budget: usize,
    /// vertices a hypothetical remaining solution would be confined to
    pub universe: Vec<VertexId>,
    pub kind: RejectKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RejectKind {
    /// `|R| > 3k`
    ManyBranchVertices,
    /// `|V(F) ∩ ⋃S| > 2k`
    ManyForestSideVertices,
}

pub fn solve_fvn(inst: &BfvdInstance, d_set: &[VertexId]) -> Result<Verdict> {
    solve_fvn_observed(inst, d_set, &mut |_| {})
}

pub fn solve_fvn_observed(
    inst: &BfvdInstance,
    d_set: &[VertexId],
    observer: &mut dyn FnMut(RejectEvent),
) -> Result<Verdict> {
    if inst.i < 2 {
        return Err(Error::UnsupportedParameter(
            "the feedback-vertex-number solver needs i >= 2; use the degeneracy solver".into(),
        ));
    }
    if d_set.iter().any(|v| !inst.graph.contains_vertex(*v)) {
        return Err(Error::Precondition(
            "feedback vertex set mentions unknown vertices".into(),
        ));
    }
    if !inst.graph.removing(d_set).is_acyclic() {
        return Err(Error::NotFeedbackVertexSet);
    }
    let mut stats = SolveStats::default();

    // deleting all of D leaves a forest, which is K_{i,j}-free for i >= 2
    if inst.k >= d_set.len() {
        let verdict = Verdict::yes(d_set.to_vec(), stats);
        verify_witness(inst, verdict.witness.as_deref().unwrap())?;
        return Ok(verdict);
    }
    if inst.j <= d_set.len() + 1 {
        return crate::solvers::branching::solve_branching(inst);
    }

    let (g0, trace) = reduce_biclique_membership(&inst.graph, inst.i, inst.j);
    stats.reductions += trace.len() as u64;

    let d_sorted: Vec<VertexId> = {
        let mut d: Vec<VertexId> = d_set.to_vec();
        d.sort_unstable();
        d.dedup();
        d
    };

    for guess_size in 0..=inst.k.min(d_sorted.len()) {
        let mut result: Option<Vec<VertexId>> = None;
        let mut failure: Option<Error> = None;
        for_each_combination(d_sorted.len(), guess_size, |combo| {
            let d_guess: Vec<VertexId> = combo.iter().map(|&c| d_sorted[c]).collect();
            match try_guess(inst, &g0, &d_sorted, &d_guess, &mut stats, observer) {
                Ok(Some(w)) => {
                    result = Some(w);
                    false
                }
                Ok(None) => true,
                Err(e) => {
                    failure = Some(e);
                    false
                }
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        if let Some(witness) = result {
            let verdict = Verdict::yes(witness, stats);
            verify_witness(inst, verdict.witness.as_deref().unwrap())?;
            return Ok(verdict);
        }
    }
    Ok(Verdict::no(stats))
}

fn forest_vertices(g: &Graph, d_set: &[VertexId]) -> Vec<VertexId> {
    g.vertices().filter(|v| !d_set.contains(v)).collect()
}

fn try_guess(
    inst: &BfvdInstance,
    g0: &Graph,
    d_all: &[VertexId],
    d_guess: &[VertexId],
    stats: &mut SolveStats,
    observer: &mut dyn FnMut(RejectEvent),
) -> Result<Option<Vec<VertexId>>> {
    stats.nodes += 1;
    let k1 = inst.k - d_guess.len();
    let (g1, trace) = reduce_biclique_membership(&g0.removing(d_guess), inst.i, inst.j);
    stats.reductions += trace.len() as u64;
    let d_rest: Vec<VertexId> = d_all
        .iter()
        .copied()
        .filter(|v| !d_guess.contains(v) && g1.contains_vertex(*v))
        .collect();

    let sides = enumerate_smaller_sides(&g1, inst.i, inst.j);
    let side_union = sides.union();
    debug_assert!(
        sides
            .iter()
            .all(|s| s.vertices.iter().filter(|v| !d_rest.contains(v)).count() <= 1),
        "a smaller side holds two forest vertices although j > |D| + 1"
    );

    // R: forest vertices whose closed forest-neighborhood meets the side
    // union at least three times
    let forest = forest_vertices(&g1, &d_rest);
    let in_forest: BTreeSet<VertexId> = forest.iter().copied().collect();
    let r_set: Vec<VertexId> = forest
        .iter()
        .copied()
        .filter(|&v| {
            let mut hits = usize::from(side_union.contains(&v));
            hits += g1
                .neighbors(v)
                .filter(|u| in_forest.contains(u) && side_union.contains(u))
                .count();
            hits >= 3
        })
        .collect();
    if r_set.len() > 3 * k1 {
        observer(RejectEvent {
            graph: g1.clone(),
            budget: k1,
            universe: forest.clone(),
            kind: RejectKind::ManyBranchVertices,
        });
        return Ok(None);
    }

    for r_size in 0..=k1.min(r_set.len()) {
        let mut result: Option<Vec<VertexId>> = None;
        let mut failure: Option<Error> = None;
        for_each_combination(r_set.len(), r_size, |combo| {
            let r_guess: Vec<VertexId> = combo.iter().map(|&c| r_set[c]).collect();
            match finish_guess(inst, &g1, &d_rest, &r_set, &r_guess, k1, stats, observer) {
                Ok(Some(mut w)) => {
                    w.extend(d_guess.iter().copied());
                    result = Some(w);
                    false
                }
                Ok(None) => true,
                Err(e) => {
                    failure = Some(e);
                    false
                }
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        if result.is_some() {
            return Ok(result);
        }
    }
    Ok(None)
}

#[allow(clippy::too_many_arguments)]
fn finish_guess(
    inst: &BfvdInstance,
    g1: &Graph,
    d_rest: &[VertexId],
    r_set: &[VertexId],
    r_guess: &[VertexId],
    k1: usize,
    stats: &mut SolveStats,
    observer: &mut dyn FnMut(RejectEvent),
) -> Result<Option<Vec<VertexId>>> {
    stats.nodes += 1;
    let k2 = k1 - r_guess.len();
    let (g2, trace) = reduce_biclique_membership(&g1.removing(r_guess), inst.i, inst.j);
    stats.reductions += trace.len() as u64;
    let d_rest: Vec<VertexId> = d_rest
        .iter()
        .copied()
        .filter(|v| g2.contains_vertex(*v))
        .collect();

    let sides = enumerate_smaller_sides(&g2, inst.i, inst.j);
    let side_union = sides.union();
    let forest = forest_vertices(&g2, &d_rest);
    let in_side_forest = forest.iter().filter(|v| side_union.contains(v)).count();
    if in_side_forest > 2 * k2 {
        let universe: Vec<VertexId> = forest
            .iter()
            .copied()
            .filter(|v| !r_set.contains(v))
            .collect();
        observer(RejectEvent {
            graph: g2.clone(),
            budget: k2,
            universe,
            kind: RejectKind::ManyForestSideVertices,
        });
        return Ok(None);
    }

    let cover: Vec<VertexId> = side_union.into_iter().collect();
    let sub = BfvdInstance::new(g2.clone(), inst.i, inst.j, k2)?;
    let verdict = solve_vc(&sub, &cover)?;
    stats.absorb(verdict.stats);
    Ok(verdict.witness.map(|mut w| {
        w.extend(r_guess.iter().copied());
        w
    }))
}
