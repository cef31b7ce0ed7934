//! Hitting-set style branching: every biclique must lose one of its
//! `i + j` vertices, giving a depth-`k` search tree.

use crate::biclique::contains_biclique;
use crate::error::Result;
use crate::graph::{Graph, VertexId};
use crate::instance::BfvdInstance;
use crate::solvers::{verify_witness, SolveStats, Verdict};

pub fn solve_branching(inst: &BfvdInstance) -> Result<Verdict> {
    let mut stats = SolveStats::default();
    let witness = branch(&inst.graph, inst.i, inst.j, inst.k, &mut stats);
    match witness {
        Some(w) => {
            let verdict = Verdict::yes(w, stats);
            verify_witness(inst, verdict.witness.as_deref().unwrap())?;
            Ok(verdict)
        }
        None => Ok(Verdict::no(stats)),
    }
}

fn branch(
    g: &Graph,
    i: usize,
    j: usize,
    k: usize,
    stats: &mut SolveStats,
) -> Option<Vec<VertexId>> {
    stats.nodes += 1;
    let Some(found) = contains_biclique(g, i, j) else {
        return Some(Vec::new());
    };
    if k == 0 {
        return None;
    }
    let mut targets: Vec<VertexId> = found
        .side
        .iter()
        .chain(found.larger.iter())
        .copied()
        .collect();
    targets.sort_unstable();
    for v in targets {
        if let Some(mut rest) = branch(&g.removing(&[v]), i, j, k - 1, stats) {
            rest.push(v);
            return Some(rest);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k22_single_deletion() {
        let k22 = Graph::from_edges([(1, 3), (1, 4), (2, 3), (2, 4)]);
        let inst = BfvdInstance::new(k22, 2, 2, 1).unwrap();
        let v = solve_branching(&inst).unwrap();
        assert!(v.yes);
        assert_eq!(v.witness.unwrap().len(), 1);
    }

    #[test]
    fn two_disjoint_k22_need_two() {
        let g = Graph::from_edges([
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (5, 7),
            (5, 8),
            (6, 7),
            (6, 8),
        ]);
        let inst = BfvdInstance::new(g.clone(), 2, 2, 1).unwrap();
        assert!(!solve_branching(&inst).unwrap().yes);
        let inst = BfvdInstance::new(g, 2, 2, 2).unwrap();
        assert!(solve_branching(&inst).unwrap().yes);
    }

    #[test]
    fn biclique_free_input_is_immediate() {
        let tree = Graph::from_edges([(1, 2), (1, 3), (3, 4)]);
        let inst = BfvdInstance::new(tree, 2, 2, 0).unwrap();
        let v = solve_branching(&inst).unwrap();
        assert!(v.yes);
        assert_eq!(v.witness.unwrap(), Vec::<VertexId>::new());
        assert_eq!(v.stats.nodes, 1);
    }
}
