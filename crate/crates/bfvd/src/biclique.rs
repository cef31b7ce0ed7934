//! Smaller-side enumeration and the biclique-membership reduction.
//!
//! A biclique here is a pair `(S, T)` of disjoint vertex sets with
//! `|S| = i <= j = |T|` and every `S`-`T` pair adjacent (not necessarily
//! induced). `S` is the smaller side; an `i`-set `S` is a smaller side iff
//! its common neighborhood has at least `j` vertices.

use std::collections::{BTreeMap, BTreeSet};

use crate::bits::{for_each_combination, Bits};
use crate::graph::{Graph, VertexId};
use crate::par;
use crate::params::degeneracy;
use crate::trace::{ReductionTrace, Rule, TraceOp};

/// The family of all smaller sides, each with its common neighborhood.
/// Sides are canonical sorted tuples, stored in ascending lexicographic
/// order; completeness is checked against brute force in tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallerSideCollection {
    pub i: usize,
    pub j: usize,
    sides: Vec<SmallerSide>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallerSide {
    pub vertices: Vec<VertexId>,
    pub common: Vec<VertexId>,
}

impl SmallerSideCollection {
    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &SmallerSide> {
        self.sides.iter()
    }

    pub fn common_of(&self, side: &[VertexId]) -> Option<&[VertexId]> {
        self.sides
            .binary_search_by(|s| s.vertices.as_slice().cmp(side))
            .ok()
            .map(|idx| self.sides[idx].common.as_slice())
    }

    /// Union of all sides.
    pub fn union(&self) -> BTreeSet<VertexId> {
        self.sides
            .iter()
            .flat_map(|s| s.vertices.iter().copied())
            .collect()
    }

    pub fn ss(&self) -> usize {
        self.union().len()
    }
}

/// Indexed bitset view of a graph; positions follow ascending vertex ids.
struct View {
    ids: Vec<VertexId>,
    masks: Vec<Bits>,
}

impl View {
    fn build(g: &Graph) -> View {
        let ids: Vec<VertexId> = g.vertices().collect();
        let index: BTreeMap<VertexId, usize> =
            ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let masks = ids
            .iter()
            .map(|&v| {
                let mut m = Bits::zero(ids.len());
                for u in g.neighbors(v) {
                    m.set(index[&u]);
                }
                m
            })
            .collect();
        View { ids, masks }
    }

    /// Smaller sides whose *smallest common neighbor* is position `t`;
    /// visiting every `t` yields each side exactly once.
    fn sides_anchored_at(&self, t: usize, i: usize, j: usize) -> Vec<SmallerSide> {
        let nbrs: Vec<usize> = self.masks[t].ones().collect();
        if nbrs.len() < i {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut common = Bits::zero(self.ids.len());
        for_each_combination(nbrs.len(), i, |combo| {
            common.clone_from(&self.masks[nbrs[combo[0]]]);
            for &c in &combo[1..] {
                common.and_assign(&self.masks[nbrs[c]]);
            }
            if common.count() >= j && common.ones().next() == Some(t) {
                out.push(SmallerSide {
                    vertices: combo.iter().map(|&c| self.ids[nbrs[c]]).collect(),
                    common: common.ones().map(|p| self.ids[p]).collect(),
                });
            }
            true
        });
        out
    }
}

fn finish(i: usize, j: usize, mut sides: Vec<SmallerSide>) -> SmallerSideCollection {
    sides.sort_unstable_by(|a, b| a.vertices.cmp(&b.vertices));
    debug_assert!(sides.windows(2).all(|w| w[0].vertices < w[1].vertices));
    SmallerSideCollection { i, j, sides }
}

/// Complete enumeration of the smaller sides of all `K_{i,j}` subgraphs.
///
/// Reference backend: any smaller side lies inside the neighborhood of
/// each of its common neighbors, so for every vertex `t`, every `i`-subset
/// of `N(t)` is a candidate; a candidate is kept when its common
/// neighborhood reaches `j`. Anchoring each side at its smallest common
/// neighbor deduplicates without a merge table.
pub fn enumerate_smaller_sides(g: &Graph, i: usize, j: usize) -> SmallerSideCollection {
    assert!(1 <= i && i <= j, "need 1 <= i <= j");
    let view = View::build(g);
    let per_anchor = par::map_indices(view.ids.len(), |t| view.sides_anchored_at(t, i, j));
    finish(i, j, per_anchor.into_iter().flatten().collect())
}

/// Sequential reference path (also the fallback without the `parallel`
/// feature); kept public so the benches can compare both.
pub fn enumerate_smaller_sides_seq(g: &Graph, i: usize, j: usize) -> SmallerSideCollection {
    assert!(1 <= i && i <= j, "need 1 <= i <= j");
    let view = View::build(g);
    let sides = (0..view.ids.len())
        .flat_map(|t| view.sides_anchored_at(t, i, j))
        .collect();
    finish(i, j, sides)
}

/// Alternative backend that routes through maximal bicliques.
///
/// Every maximal biclique has a side inside the later-neighborhood (at
/// most `d` vertices) of its peel-earliest vertex, so closing every subset
/// of every later-neighborhood enumerates all maximal bicliques; smaller
/// sides are then `i`-subsets of their sides. Must agree with the
/// reference backend wherever it is used.
pub fn enumerate_smaller_sides_degenerate(
    g: &Graph,
    i: usize,
    j: usize,
) -> SmallerSideCollection {
    assert!(1 <= i && i <= j, "need 1 <= i <= j");
    let view = View::build(g);
    let n = view.ids.len();
    let index: BTreeMap<VertexId, usize> =
        view.ids.iter().enumerate().map(|(p, &v)| (v, p)).collect();
    let order = degeneracy(g).ordering;
    let rank: BTreeMap<VertexId, usize> =
        order.iter().enumerate().map(|(r, &v)| (v, r)).collect();

    // closure pairs (A, B): A = common(B0), B = common(A)
    let mut maximal: BTreeSet<(Vec<usize>, Vec<usize>)> = BTreeSet::new();
    for &v in &order {
        let later: Vec<usize> = g
            .neighbors(v)
            .filter(|u| rank[u] > rank[&v])
            .map(|u| index[&u])
            .collect();
        for pick in 1u64..(1 << later.len()) {
            let chosen: Vec<usize> = later
                .iter()
                .enumerate()
                .filter(|(b, _)| pick >> b & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let mut a = view.masks[chosen[0]].clone();
            for &p in &chosen[1..] {
                a.and_assign(&view.masks[p]);
            }
            if a.count() == 0 {
                continue;
            }
            let mut b = Bits::zero(n);
            let mut first = true;
            for p in a.ones() {
                if first {
                    b.clone_from(&view.masks[p]);
                    first = false;
                } else {
                    b.and_assign(&view.masks[p]);
                }
            }
            let side_a: Vec<usize> = a.ones().collect();
            let side_b: Vec<usize> = b.ones().collect();
            let pair = if side_a <= side_b {
                (side_a, side_b)
            } else {
                (side_b, side_a)
            };
            maximal.insert(pair);
        }
    }

    let mut seen: BTreeSet<Vec<VertexId>> = BTreeSet::new();
    let mut sides = Vec::new();
    let mut common = Bits::zero(n);
    for (a, b) in &maximal {
        for source in [a, b] {
            if source.len() < i {
                continue;
            }
            for_each_combination(source.len(), i, |combo| {
                common.clone_from(&view.masks[source[combo[0]]]);
                for &c in &combo[1..] {
                    common.and_assign(&view.masks[source[c]]);
                }
                if common.count() >= j {
                    let vertices: Vec<VertexId> =
                        combo.iter().map(|&c| view.ids[source[c]]).collect();
                    if seen.insert(vertices.clone()) {
                        sides.push(SmallerSide {
                            vertices,
                            common: common.ones().map(|p| view.ids[p]).collect(),
                        });
                    }
                }
                true
            });
        }
    }
    finish(i, j, sides)
}

/// A biclique witness: the lexicographically first smaller side and the
/// first `j` of its common neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicliqueWitness {
    pub side: Vec<VertexId>,
    pub larger: Vec<VertexId>,
}

/// `Some(witness)` iff the graph contains a `K_{i,j}`.
pub fn contains_biclique(g: &Graph, i: usize, j: usize) -> Option<BicliqueWitness> {
    let sides = enumerate_smaller_sides(g, i, j);
    let first = sides.sides.into_iter().next()?;
    Some(BicliqueWitness {
        larger: first.common.into_iter().take(j).collect(),
        side: first.vertices,
    })
}

/// `|⋃ S|` over all smaller sides.
pub fn ss_value(g: &Graph, i: usize, j: usize) -> usize {
    enumerate_smaller_sides(g, i, j).ss()
}

/// Deletes vertices and edges that belong to no biclique until none
/// remain, recomputing the side family after each round. A vertex
/// survives iff it lies in some side or some side's common neighborhood;
/// an edge survives iff one endpoint sits in a side whose common
/// neighborhood holds the other. Within a round, vertices go before
/// edges, ascending.
pub fn reduce_biclique_membership(g: &Graph, i: usize, j: usize) -> (Graph, ReductionTrace) {
    let mut g = g.clone();
    let mut trace = ReductionTrace::default();
    loop {
        let sides = enumerate_smaller_sides(&g, i, j);
        let mut keep_v: BTreeSet<VertexId> = BTreeSet::new();
        let mut keep_e: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
        for s in sides.iter() {
            keep_v.extend(s.vertices.iter().copied());
            keep_v.extend(s.common.iter().copied());
            for &u in &s.vertices {
                for &v in &s.common {
                    keep_e.insert((u.min(v), u.max(v)));
                }
            }
        }
        let dead_v: Vec<VertexId> =
            g.vertices().filter(|v| !keep_v.contains(v)).collect();
        for &v in &dead_v {
            g.remove_vertex(v);
            trace.push(Rule::BicliqueVertex, vec![v], vec![TraceOp::DeleteVertex(v)]);
        }
        let dead_e: Vec<(VertexId, VertexId)> = g
            .edges()
            .into_iter()
            .filter(|e| !keep_e.contains(e))
            .collect();
        for &(u, v) in &dead_e {
            g.remove_edge(u, v);
            trace.push(
                Rule::BicliqueEdge,
                vec![u, v],
                vec![TraceOp::DeleteEdge(u, v)],
            );
        }
        if dead_v.is_empty() && dead_e.is_empty() {
            return (g, trace);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k23() -> Graph {
        Graph::from_edges([(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)])
    }

    #[test]
    fn enumerates_k23_sides() {
        let sides = enumerate_smaller_sides(&k23(), 2, 3);
        assert_eq!(sides.len(), 1);
        let s = sides.iter().next().unwrap();
        assert_eq!(s.vertices, vec![1, 2]);
        assert_eq!(s.common, vec![3, 4, 5]);
        assert_eq!(ss_value(&k23(), 2, 3), 2);
    }

    #[test]
    fn c4_singletons() {
        let c4 = Graph::from_edges([(1, 2), (2, 3), (3, 4), (1, 4)]);
        let sides = enumerate_smaller_sides(&c4, 1, 2);
        assert_eq!(sides.len(), 4);
        assert_eq!(ss_value(&c4, 1, 2), 4);
    }

    #[test]
    fn forests_have_no_k22() {
        let tree = Graph::from_edges([(1, 2), (2, 3), (2, 4), (4, 5), (4, 6)]);
        assert!(enumerate_smaller_sides(&tree, 2, 2).is_empty());
        assert_eq!(ss_value(&tree, 2, 2), 0);
        assert!(contains_biclique(&tree, 2, 2).is_none());
    }

    #[test]
    fn contains_examples() {
        let k33 = Graph::from_edges(
            [(1, 4), (1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6)],
        );
        let w = contains_biclique(&k33, 3, 3).unwrap();
        assert_eq!(w.side, vec![1, 2, 3]);
        assert_eq!(w.larger, vec![4, 5, 6]);
        assert!(contains_biclique(&k23(), 2, 4).is_none());
    }

    #[test]
    fn reduce_examples() {
        // P3 with i=1, j=2: the center forms a K_{1,2} covering everything
        let p3 = Graph::from_edges([(1, 2), (2, 3)]);
        let (kept, trace) = reduce_biclique_membership(&p3, 1, 2);
        assert_eq!(kept, p3);
        assert!(trace.is_empty());
        // P3 with i=1, j=3: no K_{1,3} exists at all
        let (kept, _) = reduce_biclique_membership(&p3, 1, 3);
        assert!(kept.is_empty());
        // pendant on the 2-side of K_{2,3} is shaved off
        let mut g = k23();
        g.add_edge(1, 6);
        let (kept, trace) = reduce_biclique_membership(&g, 2, 3);
        assert_eq!(kept, k23());
        assert_eq!(trace.len(), 1);
        assert_eq!(trace.entries[0].rule, Rule::BicliqueVertex);
        assert_eq!(trace.entries[0].affected, vec![6]);
    }

    #[test]
    fn reduce_is_idempotent() {
        let mut g = k23();
        g.add_edge(1, 6);
        g.add_edge(3, 4);
        let (once, _) = reduce_biclique_membership(&g, 2, 2);
        let (twice, trace) = reduce_biclique_membership(&once, 2, 2);
        assert_eq!(once, twice);
        assert!(trace.is_empty());
    }

    #[test]
    fn backends_agree_on_samples() {
        let graphs = [
            k23(),
            Graph::from_edges([(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]),
            Graph::from_edges([(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3)]),
        ];
        for g in &graphs {
            for i in 1..=3 {
                for j in i..=3 {
                    let a = enumerate_smaller_sides(g, i, j);
                    let b = enumerate_smaller_sides_degenerate(g, i, j);
                    let c = enumerate_smaller_sides_seq(g, i, j);
                    assert_eq!(a, b, "i={i} j={j} on {g:?}");
                    assert_eq!(a, c);
                }
            }
        }
    }
}
