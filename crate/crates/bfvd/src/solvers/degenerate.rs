//! The degeneracy-parameterized solver.
//!
//! Win-win split on `ss(G)` after the membership reduction: when few
//! vertices appear in smaller sides, their union is a vertex cover and
//! the cover solver finishes; otherwise a small set hitting every
//! solution exists and we branch on it.

use std::collections::BTreeSet;

use crate::biclique::{enumerate_smaller_sides, reduce_biclique_membership};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::instance::BfvdInstance;
use crate::params::degeneracy;
use crate::solvers::{vc::solve_vc, verify_witness, SolveStats, Verdict};

/// Threshold `(4d + 2) k` between the cover regime and the branching
/// regime.
pub fn ss_threshold(d: usize, k: usize) -> usize {
    (4 * d + 2) * k
}

/// A set of at most `(8d + 4)k + i` vertices intersecting every solution,
/// valid whenever `ss(G) > (4d + 2)k` and `k >= 1`.
///
/// Greedily (ascending canonical-tuple order) collect sides until their
/// union `X` reaches the threshold, prune the collection back to
/// inclusion-minimality, then add every vertex with at least `|X| / k`
/// neighbors in `X`. A solution avoiding `X` must contain such a vertex,
/// and there are at most `(4d + 2)k` of them.
pub fn find_branching_set(inst: &BfvdInstance, d: usize) -> Result<Vec<VertexId>> {
    let threshold = ss_threshold(d, inst.k);
    let sides = enumerate_smaller_sides(&inst.graph, inst.i, inst.j);
    if inst.k == 0 || sides.ss() <= threshold {
        return Err(Error::Precondition(format!(
            "find_branching_set needs ss(G) > (4d+2)k and k >= 1 (ss={}, threshold={}, k={})",
            sides.ss(),
            threshold,
            inst.k
        )));
    }

    // greedy prefix reaching the threshold
    let mut chosen: Vec<&[VertexId]> = Vec::new();
    let mut union: BTreeSet<VertexId> = BTreeSet::new();
    for side in sides.iter() {
        if union.len() >= threshold {
            break;
        }
        chosen.push(&side.vertices);
        union.extend(side.vertices.iter().copied());
    }
    // prune to inclusion-minimality, dropping earliest-added first
    let mut idx = 0;
    while idx < chosen.len() {
        let without: BTreeSet<VertexId> = chosen
            .iter()
            .enumerate()
            .filter(|&(q, _)| q != idx)
            .flat_map(|(_, s)| s.iter().copied())
            .collect();
        if without.len() >= threshold {
            chosen.remove(idx);
            union = without;
        } else {
            idx += 1;
        }
    }
    let x: Vec<VertexId> = union.iter().copied().collect();
    debug_assert!(x.len() >= threshold);
    debug_assert!(x.len() <= threshold + inst.i);

    // vertices adjacent to at least |X| / k members of X
    let heavy: Vec<VertexId> = inst
        .graph
        .vertices()
        .filter(|&v| {
            let hits = inst.graph.neighbors(v).filter(|u| union.contains(u)).count();
            hits * inst.k >= x.len()
        })
        .collect();
    if heavy.len() > threshold {
        return Err(Error::Integrity(format!(
            "heavy-vertex bound violated: {} > {}",
            heavy.len(),
            threshold
        )));
    }

    let mut w: BTreeSet<VertexId> = union;
    w.extend(heavy);
    let w: Vec<VertexId> = w.into_iter().collect();
    debug_assert!(w.len() <= 2 * threshold + inst.i);
    Ok(w)
}

pub fn solve_degenerate(inst: &BfvdInstance) -> Result<Verdict> {
    let mut stats = SolveStats::default();
    let witness = recurse(&inst.graph, inst.i, inst.j, inst.k, &mut stats)?;
    match witness {
        Some(w) => {
            let verdict = Verdict::yes(w, stats);
            verify_witness(inst, verdict.witness.as_deref().unwrap())?;
            Ok(verdict)
        }
        None => Ok(Verdict::no(stats)),
    }
}

fn recurse(
    g: &Graph,
    i: usize,
    j: usize,
    k: usize,
    stats: &mut SolveStats,
) -> Result<Option<Vec<VertexId>>> {
    stats.nodes += 1;
    let (g, trace) = reduce_biclique_membership(g, i, j);
    stats.reductions += trace.len() as u64;

    // after the reduction, the graph is empty iff it was biclique-free
    if g.is_empty() {
        return Ok(Some(Vec::new()));
    }
    let d = degeneracy(&g).d;
    if i > d {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    let sides = enumerate_smaller_sides(&g, i, j);
    if sides.ss() <= ss_threshold(d, k) {
        // the side union covers every edge here
        let cover: Vec<VertexId> = sides.union().into_iter().collect();
        let sub = BfvdInstance::new(g.clone(), i, j, k)?;
        let verdict = solve_vc(&sub, &cover)?;
        stats.absorb(verdict.stats);
        return Ok(verdict.witness);
    }
    let sub = BfvdInstance::new(g.clone(), i, j, k)?;
    let w = find_branching_set(&sub, d)?;
    for v in w {
        if let Some(mut rest) = recurse(&g.removing(&[v]), i, j, k - 1, stats)? {
            rest.push(v);
            return Ok(Some(rest));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::oracle::solve_oracle;

    fn stars(count: usize) -> Graph {
        // disjoint K_{1,3} stars: center 4t+1, leaves 4t+2..4t+4
        let mut g = Graph::new();
        for t in 0..count as u32 {
            let c = 4 * t + 1;
            for leaf in 1..=3 {
                g.add_edge(c, c + leaf);
            }
        }
        g
    }

    #[test]
    fn forest_trivially_yes() {
        let tree = Graph::from_edges([(1, 2), (2, 3), (3, 4)]);
        for k in 0..3 {
            let inst = BfvdInstance::new(tree.clone(), 2, 2, k).unwrap();
            let v = solve_degenerate(&inst).unwrap();
            assert!(v.yes);
            assert_eq!(v.witness.unwrap(), Vec::<VertexId>::new());
        }
    }

    #[test]
    fn k33_needs_two() {
        let k33 = Graph::from_edges(
            [(1, 4), (1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6)],
        );
        let inst = BfvdInstance::new(k33.clone(), 1, 3, 2).unwrap();
        assert!(solve_degenerate(&inst).unwrap().yes);
        let inst = BfvdInstance::new(k33, 1, 3, 1).unwrap();
        assert!(!solve_degenerate(&inst).unwrap().yes);
    }

    #[test]
    fn seven_disjoint_stars_exhaust_budget() {
        let inst = BfvdInstance::new(stars(7), 1, 3, 1).unwrap();
        assert!(!solve_degenerate(&inst).unwrap().yes);
        let inst = BfvdInstance::new(stars(2), 1, 3, 2).unwrap();
        assert!(solve_degenerate(&inst).unwrap().yes);
    }

    #[test]
    fn branching_set_on_eight_stars() {
        // d = 1, k = 1: threshold 6; eight stars give ss = 8 > 6
        let g = stars(8);
        let inst = BfvdInstance::new(g, 1, 3, 1).unwrap();
        let w = find_branching_set(&inst, 1).unwrap();
        assert_eq!(w.len(), 6, "six centers, no heavy vertices");
        assert!(w.len() <= (8 + 4) + 1);
        // every optimal witness must meet W: here each star center is the
        // only way to kill its star, so any yes-path intersects W
        let oracle = solve_oracle(&BfvdInstance::new(stars(2), 1, 3, 2).unwrap()).unwrap();
        assert!(oracle.yes);
    }

    #[test]
    fn branching_set_precondition_is_checked() {
        let g = stars(8);
        let inst = BfvdInstance::new(g, 1, 3, 2).unwrap(); // threshold 12 > ss = 8
        assert!(matches!(
            find_branching_set(&inst, 1),
            Err(Error::Precondition(_))
        ));
    }
}
