//! Vertex-cover-guessing solver.
//!
//! Given a vertex cover `X`, a hypothetical solution splits into its part
//! inside `X` and a part outside. Outside the cover the graph is an
//! independent set whose vertices only see `X`, so vertices with equal
//! neighborhoods are interchangeable: it suffices to guess, per
//! neighborhood class, *how many* of its members to delete (a multiset of
//! classes rather than a set of neighborhoods — several twins may be
//! deleted by one solution), taking lowest-id representatives.

use std::collections::BTreeMap;

use crate::biclique::contains_biclique;
use crate::bits::for_each_combination;
use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::instance::BfvdInstance;
use crate::solvers::{verify_witness, SolveStats, Verdict};

pub fn solve_vc(inst: &BfvdInstance, cover: &[VertexId]) -> Result<Verdict> {
    if let Some(&(u, v)) = inst
        .graph
        .edges()
        .iter()
        .find(|&&(u, v)| !cover.contains(&u) && !cover.contains(&v))
    {
        return Err(Error::NotVertexCover {
            context: "solve_vc",
            u,
            v,
        });
    }
    let mut stats = SolveStats::default();

    // deleting the whole cover leaves an edgeless graph
    if cover.len() <= inst.k {
        let verdict = Verdict::yes(cover.to_vec(), stats);
        verify_witness(inst, verdict.witness.as_deref().unwrap())?;
        return Ok(verdict);
    }

    // neighborhood classes of V \ X, keyed by their (sorted) neighborhood
    let mut classes: BTreeMap<Vec<VertexId>, Vec<VertexId>> = BTreeMap::new();
    for v in inst.graph.vertices() {
        if !cover.contains(&v) {
            let key: Vec<VertexId> = inst.graph.neighbors(v).collect();
            classes.entry(key).or_default().push(v);
        }
    }
    let class_members: Vec<&Vec<VertexId>> = classes.values().collect();

    for inside in 0..=inst.k.min(cover.len()) {
        let mut found: Option<Vec<VertexId>> = None;
        for_each_combination(cover.len(), inside, |combo| {
            let x_part: Vec<VertexId> = combo.iter().map(|&c| cover[c]).collect();
            let leftover = inst.k - x_part.len();
            let mut counts = vec![0usize; class_members.len()];
            if let Some(w) =
                try_outside(inst, &x_part, &class_members, &mut counts, 0, leftover, &mut stats)
            {
                found = Some(w);
                false
            } else {
                true
            }
        });
        if let Some(witness) = found {
            let verdict = Verdict::yes(witness, stats);
            verify_witness(inst, verdict.witness.as_deref().unwrap())?;
            return Ok(verdict);
        }
    }
    Ok(Verdict::no(stats))
}

/// Enumerates per-class deletion counts with total at most `budget`
/// (classes in key order, counts ascending) and tests each guess.
fn try_outside(
    inst: &BfvdInstance,
    x_part: &[VertexId],
    classes: &[&Vec<VertexId>],
    counts: &mut Vec<usize>,
    at: usize,
    budget: usize,
    stats: &mut SolveStats,
) -> Option<Vec<VertexId>> {
    if at == classes.len() {
        stats.nodes += 1;
        let mut picked: Vec<VertexId> = x_part.to_vec();
        for (members, &c) in classes.iter().zip(counts.iter()) {
            picked.extend(members.iter().take(c).copied());
        }
        let rest = inst.graph.removing(&picked);
        return if contains_biclique(&rest, inst.i, inst.j).is_none() {
            Some(picked)
        } else {
            None
        };
    }
    for c in 0..=budget.min(classes[at].len()) {
        counts[at] = c;
        if let Some(w) = try_outside(inst, x_part, classes, counts, at + 1, budget - c, stats) {
            return Some(w);
        }
    }
    counts[at] = 0;
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn k23_with_two_side_cover() {
        let k23 = Graph::from_edges([(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]);
        let inst = BfvdInstance::new(k23, 2, 3, 1).unwrap();
        let v = solve_vc(&inst, &[1, 2]).unwrap();
        assert!(v.yes);
        assert_eq!(v.witness.unwrap().len(), 1);
    }

    #[test]
    fn forest_is_k22_free_with_empty_budget() {
        let tree = Graph::from_edges([(1, 2), (2, 3), (2, 4)]);
        let inst = BfvdInstance::new(tree.clone(), 2, 2, 0).unwrap();
        let v = solve_vc(&inst, &[2]).unwrap();
        assert!(v.yes);
        assert_eq!(v.witness.unwrap(), Vec::<VertexId>::new());
    }

    #[test]
    fn c4_one_deletion_fails() {
        let c4 = Graph::from_edges([(1, 2), (2, 3), (3, 4), (1, 4)]);
        let inst = BfvdInstance::new(c4, 1, 2, 1).unwrap();
        let v = solve_vc(&inst, &[1, 3]).unwrap();
        assert!(!v.yes);
    }

    #[test]
    fn rejects_non_cover() {
        let c4 = Graph::from_edges([(1, 2), (2, 3), (3, 4), (1, 4)]);
        let inst = BfvdInstance::new(c4, 1, 2, 1).unwrap();
        assert!(matches!(
            solve_vc(&inst, &[1, 2]),
            Err(Error::NotVertexCover { u: 3, v: 4, .. })
        ));
    }
}
