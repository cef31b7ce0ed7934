//! Brute-force oracles. These deliberately avoid the enumeration engine in
//! [`crate::biclique`]: side candidates come from all `i`-subsets of the
//! whole vertex set with direct common-neighborhood counting, so the
//! oracle stays an independent check on everything else.

use crate::bits::{combinations, for_each_combination, Bits};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::instance::BfvdInstance;
use crate::par;
use crate::solvers::{SolveStats, Verdict};

pub const DEFAULT_ORACLE_LIMIT: usize = 16;

/// All `i`-sets with at least `j` common neighbors, as (side, common)
/// bitmask pairs over positions in `ids`.
fn all_sides(g: &Graph, ids: &[VertexId], i: usize, j: usize) -> Vec<(Bits, Bits)> {
    let n = ids.len();
    let masks: Vec<Bits> = ids
        .iter()
        .map(|&v| {
            let mut m = Bits::zero(n);
            for u in g.neighbors(v) {
                m.set(ids.binary_search(&u).unwrap());
            }
            m
        })
        .collect();
    let mut out = Vec::new();
    let mut common = Bits::zero(n);
    for_each_combination(n, i, |combo| {
        common.clone_from(&masks[combo[0]]);
        for &c in &combo[1..] {
            common.and_assign(&masks[c]);
        }
        if common.count() >= j {
            let mut side = Bits::zero(n);
            for &c in combo {
                side.set(c);
            }
            out.push((side, common.clone()));
        }
        true
    });
    out
}

/// Deleting `picked` leaves the graph biclique-free iff no surviving side
/// keeps `j` common neighbors.
fn feasible(sides: &[(Bits, Bits)], picked: &Bits, j: usize) -> bool {
    !sides
        .iter()
        .any(|(side, common)| side.is_disjoint(picked) && common.minus_count(picked) >= j)
}

/// Exhaustive search over all vertex subsets of size at most `k`, by
/// ascending size and lexicographic order within a size. The first
/// feasible subset is returned, so a yes-verdict carries a minimum-size
/// witness. Refuses graphs above `limit` vertices.
pub fn solve_oracle_with_limit(inst: &BfvdInstance, limit: usize) -> Result<Verdict> {
    let n = inst.graph.vertex_count();
    if n > limit {
        return Err(Error::OracleRefused { vertices: n, limit });
    }
    let ids: Vec<VertexId> = inst.graph.vertices().collect();
    let sides = all_sides(&inst.graph, &ids, inst.i, inst.j);
    let mut stats = SolveStats::default();

    for size in 0..=inst.k.min(n) {
        let combos = combinations(n, size);
        stats.nodes += combos.len() as u64;
        let hits = par::map_slice(&combos, |combo| {
            let mut picked = Bits::zero(n);
            for &c in combo {
                picked.set(c);
            }
            feasible(&sides, &picked, inst.j)
        });
        if let Some(pos) = hits.iter().position(|&ok| ok) {
            let witness: Vec<VertexId> = combos[pos].iter().map(|&c| ids[c]).collect();
            return Ok(Verdict::yes(witness, stats));
        }
    }
    Ok(Verdict::no(stats))
}

pub fn solve_oracle(inst: &BfvdInstance) -> Result<Verdict> {
    solve_oracle_with_limit(inst, DEFAULT_ORACLE_LIMIT)
}

/// Sequential variant with early exit, for the benches.
pub fn solve_oracle_seq(inst: &BfvdInstance, limit: usize) -> Result<Verdict> {
    let n = inst.graph.vertex_count();
    if n > limit {
        return Err(Error::OracleRefused { vertices: n, limit });
    }
    let ids: Vec<VertexId> = inst.graph.vertices().collect();
    let sides = all_sides(&inst.graph, &ids, inst.i, inst.j);
    let mut stats = SolveStats::default();
    for size in 0..=inst.k.min(n) {
        let mut witness = None;
        for_each_combination(n, size, |combo| {
            stats.nodes += 1;
            let mut picked = Bits::zero(n);
            for &c in combo {
                picked.set(c);
            }
            if feasible(&sides, &picked, inst.j) {
                witness = Some(combo.iter().map(|&c| ids[c]).collect::<Vec<_>>());
                false
            } else {
                true
            }
        });
        if let Some(w) = witness {
            return Ok(Verdict::yes(w, stats));
        }
    }
    Ok(Verdict::no(stats))
}

/// Brute-force bounded-degree deletion: is there a subset of at most `k`
/// vertices whose removal brings every degree to at most `r`?
pub fn bdd_decide(g: &Graph, r: u32, k: i64) -> bool {
    if k < 0 {
        return false;
    }
    let ids: Vec<VertexId> = g.vertices().collect();
    let k = (k as usize).min(ids.len());
    for size in 0..=k {
        let mut ok = false;
        for_each_combination(ids.len(), size, |combo| {
            let picked: Vec<VertexId> = combo.iter().map(|&c| ids[c]).collect();
            let rest = g.removing(&picked);
            if rest.vertices().all(|v| rest.degree(v) as u32 <= r) {
                ok = true;
                false
            } else {
                true
            }
        });
        if ok {
            return true;
        }
    }
    false
}

/// Brute-force weighted bounded-degree deletion: kept vertices need
/// degree at most `r - w_v`.
pub fn wbdd_decide(g: &Graph, weights: &std::collections::BTreeMap<VertexId, u32>, r: u32, k: i64) -> bool {
    if k < 0 {
        return false;
    }
    let ids: Vec<VertexId> = g.vertices().collect();
    let k = (k as usize).min(ids.len());
    for size in 0..=k {
        let mut ok = false;
        for_each_combination(ids.len(), size, |combo| {
            let picked: Vec<VertexId> = combo.iter().map(|&c| ids[c]).collect();
            let rest = g.removing(&picked);
            let fits = rest.vertices().all(|v| {
                let w = *weights.get(&v).unwrap_or(&0);
                rest.degree(v) as i64 + i64::from(w) <= i64::from(r)
            });
            if fits {
                ok = true;
                false
            } else {
                true
            }
        });
        if ok {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edges([(1, 2), (2, 3), (3, 4), (1, 4)])
    }

    #[test]
    fn c4_examples() {
        // k=2: minimum is two deletions; the lexicographically first
        // feasible pair is {1,2} (the leftover edge has max degree 1)
        let inst = BfvdInstance::new(c4(), 1, 2, 2).unwrap();
        let v = solve_oracle(&inst).unwrap();
        assert!(v.yes);
        assert_eq!(v.witness.unwrap(), vec![1, 2]);
        // k=1: no single vertex works
        let inst = BfvdInstance::new(c4(), 1, 2, 1).unwrap();
        assert!(!solve_oracle(&inst).unwrap().yes);
    }

    #[test]
    fn k23_single_deletion() {
        let k23 = Graph::from_edges([(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]);
        let inst = BfvdInstance::new(k23, 2, 3, 1).unwrap();
        let v = solve_oracle(&inst).unwrap();
        assert!(v.yes);
        assert_eq!(v.witness.unwrap(), vec![1]);
    }

    #[test]
    fn refuses_large_graphs() {
        let big = Graph::with_vertices(1..=17);
        let inst = BfvdInstance::new(big, 1, 1, 0).unwrap();
        assert!(matches!(
            solve_oracle(&inst),
            Err(Error::OracleRefused { vertices: 17, limit: 16 })
        ));
        let big = Graph::with_vertices(1..=17);
        let inst = BfvdInstance::new(big, 1, 1, 0).unwrap();
        assert!(solve_oracle_with_limit(&inst, 32).unwrap().yes);
    }

    #[test]
    fn seq_matches_parallel() {
        let g = Graph::from_edges([(1, 2), (2, 3), (3, 4), (1, 4), (1, 3), (2, 5)]);
        for (i, j, k) in [(1, 2, 2), (2, 2, 1), (1, 3, 1)] {
            let inst = BfvdInstance::new(g.clone(), i, j, k).unwrap();
            let a = solve_oracle(&inst).unwrap();
            let b = solve_oracle_seq(&inst, 16).unwrap();
            assert_eq!(a.yes, b.yes);
            assert_eq!(a.witness, b.witness);
        }
    }

    #[test]
    fn bdd_brute_force() {
        assert!(bdd_decide(&c4(), 2, 0));
        assert!(!bdd_decide(&c4(), 1, 0));
        assert!(bdd_decide(&c4(), 1, 1000));
        assert!(!bdd_decide(&c4(), 0, 1));
        assert!(bdd_decide(&c4(), 0, 2));
    }
}
