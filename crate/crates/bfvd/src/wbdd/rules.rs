//! Reduction rules for weighted bounded-degree deletion and the full
//! kernelization pipeline down to an unweighted instance.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::instance::{BddInstance, WbddInstance};
use crate::trace::{ReductionTrace, Rule, TraceOp};
use crate::wbdd::table::{build_replacement_table, PathAction, ReplacementTable, SOURCE_INNER};

/// Degree/weight rules to fixpoint via a worklist (ascending ids,
/// neighbors of deleted vertices re-tested):
/// - slack weights are raised until `deg(v) + w_v >= r`;
/// - `w_v > r` forces `v` into the solution (`k` drops);
/// - an isolated vertex at `w_v = r` is dropped;
/// - a pendant at `w_v = r - 1` folds into its neighbor, and a pendant at
///   `w_v = r` sends its neighbor into the solution (`k` drops).
///
/// Afterwards every vertex satisfies `r - deg(v) <= w_v <= r` and has
/// degree at least two. `k` below zero marks the instance decided-no.
pub fn apply_basic_rules(inst: &WbddInstance) -> (WbddInstance, ReductionTrace) {
    let mut inst = inst.clone();
    let mut trace = ReductionTrace::default();
    let r = i64::from(inst.r);
    let mut queue: BTreeSet<VertexId> = inst.graph.vertices().collect();

    let delete = |inst: &mut WbddInstance, queue: &mut BTreeSet<VertexId>, v: VertexId| {
        let nbrs: Vec<VertexId> = inst.graph.neighbors(v).collect();
        inst.graph.remove_vertex(v);
        inst.weights.remove(&v);
        queue.extend(nbrs);
    };

    while let Some(&v) = queue.iter().next() {
        queue.remove(&v);
        if !inst.graph.contains_vertex(v) {
            continue;
        }
        while (inst.graph.degree(v) as i64) + i64::from(inst.weight(v)) < r {
            *inst.weights.get_mut(&v).unwrap() += 1;
            trace.push(
                Rule::WeightRaise,
                vec![v],
                vec![TraceOp::AdjustWeight { v, delta: 1 }],
            );
        }
        if i64::from(inst.weight(v)) > r {
            delete(&mut inst, &mut queue, v);
            inst.k -= 1;
            trace.push(
                Rule::HighWeightDelete,
                vec![v],
                vec![TraceOp::DeleteVertex(v), TraceOp::AdjustK { delta: -1 }],
            );
            continue;
        }
        match inst.graph.degree(v) {
            0 => {
                // post raise, an isolated vertex sits exactly at w_v = r
                delete(&mut inst, &mut queue, v);
                trace.push(Rule::IsolatedDelete, vec![v], vec![TraceOp::DeleteVertex(v)]);
            }
            1 => {
                let u = inst.graph.neighbors(v).next().unwrap();
                if i64::from(inst.weight(v)) + 1 == r {
                    delete(&mut inst, &mut queue, v);
                    *inst.weights.get_mut(&u).unwrap() += 1;
                    queue.insert(u);
                    trace.push(
                        Rule::PendantMerge,
                        vec![v, u],
                        vec![
                            TraceOp::DeleteVertex(v),
                            TraceOp::AdjustWeight { v: u, delta: 1 },
                        ],
                    );
                } else {
                    // w_v = r: the neighbor absorbs the deletion
                    delete(&mut inst, &mut queue, v);
                    delete(&mut inst, &mut queue, u);
                    inst.k -= 1;
                    trace.push(
                        Rule::PendantTake,
                        vec![v, u],
                        vec![
                            TraceOp::DeleteVertex(v),
                            TraceOp::DeleteVertex(u),
                            TraceOp::AdjustK { delta: -1 },
                        ],
                    );
                }
            }
            _ => {}
        }
    }
    debug_assert!(inst.graph.vertices().all(|v| {
        let w = i64::from(inst.weight(v));
        let deg = inst.graph.degree(v) as i64;
        inst.graph.degree(v) >= 2 && r - deg <= w && w <= r
    }));
    (inst, trace)
}

/// Visits seven-vertex windows whose five interior vertices have degree
/// two, ordered by (first endpoint, second vertex); the callback returns
/// true to accept. All seven vertices are distinct; a six-cycle therefore
/// never matches.
fn find_window(
    inst: &WbddInstance,
    mut accept: impl FnMut(&[VertexId; 7]) -> bool,
) -> Option<[VertexId; 7]> {
    for v1 in inst.graph.vertices() {
        for v2 in inst.graph.neighbors(v1) {
            let mut chain = vec![v1, v2];
            let mut ok = true;
            for _ in 0..SOURCE_INNER - 1 {
                let cur = *chain.last().unwrap();
                if inst.graph.degree(cur) != 2 {
                    ok = false;
                    break;
                }
                let prev = chain[chain.len() - 2];
                let next = inst.graph.neighbors(cur).find(|&u| u != prev).unwrap();
                if chain.contains(&next) {
                    ok = false;
                    break;
                }
                chain.push(next);
            }
            if !ok {
                continue;
            }
            let last = *chain.last().unwrap();
            if inst.graph.degree(last) != 2 {
                continue;
            }
            let prev = chain[chain.len() - 2];
            let tail = inst.graph.neighbors(last).find(|&u| u != prev).unwrap();
            if chain.contains(&tail) {
                continue;
            }
            chain.push(tail);
            let window: [VertexId; 7] = chain.try_into().unwrap();
            if accept(&window) {
                return Some(window);
            }
        }
    }
    None
}

/// Replaces every replaceable seven-vertex degree-two window by its
/// stand-in (two to four fresh interior vertices; endpoints and their
/// weights untouched), adjusting `k` by the optimum difference, until
/// only irreducible windows remain. Two consecutive windows can never
/// both carry the irreducible pattern, so fixpoint runs keep at most five
/// interior degree-two vertices. Requires the basic rules at fixpoint so
/// interior weights sit within two of `r`.
pub fn apply_path_rule(
    inst: &WbddInstance,
    table: &ReplacementTable,
) -> Result<(WbddInstance, ReductionTrace)> {
    if table.r() != inst.r {
        return Err(Error::Precondition(format!(
            "replacement table was built for r = {} but the instance has r = {}",
            table.r(),
            inst.r
        )));
    }
    let mut inst = inst.clone();
    let mut trace = ReductionTrace::default();
    loop {
        let mut bad_weight: Option<(VertexId, u32)> = None;
        let found = find_window(&inst, |window| {
            let mut offsets = [0i8; SOURCE_INNER];
            for (o, &v) in offsets.iter_mut().zip(&window[1..6]) {
                let off = i64::from(inst.weight(v)) - i64::from(inst.r);
                if !(-2..=0).contains(&off) {
                    bad_weight = Some((v, inst.weight(v)));
                    return true;
                }
                *o = off as i8;
            }
            matches!(table.lookup(&offsets).action, PathAction::Replace { .. })
        });
        if let Some((v, w)) = bad_weight {
            return Err(Error::Precondition(format!(
                "interior weight {w} of vertex {v} is outside [r-2, r]; \
                 basic rules must reach fixpoint first"
            )));
        }
        let Some(window) = found else { break };

        let inner = &window[1..6];
        let mut offsets = [0i8; SOURCE_INNER];
        for (o, &v) in offsets.iter_mut().zip(inner) {
            *o = (i64::from(inst.weight(v)) - i64::from(inst.r)) as i8;
        }
        let PathAction::Replace { target_inner, k_delta } =
            table.lookup(&offsets).action.clone()
        else {
            unreachable!("accepted windows are replaceable");
        };
        let base = inst.graph.max_vertex_id().unwrap_or(0);
        let fresh: Vec<VertexId> =
            (1..=target_inner.len() as u32).map(|q| base + q).collect();

        let mut ops = Vec::new();
        for &v in inner {
            ops.push(TraceOp::DeleteVertex(v));
        }
        for (&v, &off) in fresh.iter().zip(target_inner.iter()) {
            let weight = (i64::from(inst.r) + i64::from(off)) as u32;
            ops.push(TraceOp::AddVertex { v, weight });
        }
        ops.push(TraceOp::AddEdge(window[0], fresh[0]));
        for pair in fresh.windows(2) {
            ops.push(TraceOp::AddEdge(pair[0], pair[1]));
        }
        ops.push(TraceOp::AddEdge(fresh[fresh.len() - 1], window[6]));
        ops.push(TraceOp::AdjustK { delta: -k_delta });

        for &v in inner {
            inst.graph.remove_vertex(v);
            inst.weights.remove(&v);
        }
        for (&v, &off) in fresh.iter().zip(target_inner.iter()) {
            inst.graph.add_vertex(v);
            inst.weights
                .insert(v, (i64::from(inst.r) + i64::from(off)) as u32);
        }
        inst.graph.add_edge(window[0], fresh[0]);
        for pair in fresh.windows(2) {
            inst.graph.add_edge(pair[0], pair[1]);
        }
        inst.graph.add_edge(fresh[fresh.len() - 1], window[6]);
        inst.k -= k_delta;

        trace.push(Rule::PathReplace, window.to_vec(), ops);
    }
    Ok((inst, trace))
}

/// While every weight is positive, shift all weights and `r` down by one.
pub fn remove_weights(inst: &WbddInstance) -> (WbddInstance, ReductionTrace) {
    let mut inst = inst.clone();
    let mut trace = ReductionTrace::default();
    loop {
        if inst.graph.is_empty() || inst.weights.values().any(|&w| w == 0) {
            return (inst, trace);
        }
        let mut ops = vec![TraceOp::AdjustR { delta: -1 }];
        let vs: Vec<VertexId> = inst.graph.vertices().collect();
        for &v in &vs {
            *inst.weights.get_mut(&v).unwrap() -= 1;
            ops.push(TraceOp::AdjustWeight { v, delta: -1 });
        }
        inst.r -= 1;
        trace.push(Rule::WeightShift, vs, ops);
    }
}

/// Realizes weights as pendant gadgets: each vertex gains `w_v` fresh
/// degree-one neighbors, then weights are dropped. Sound because a
/// pendant under `r >= 1` never needs deleting; for `r = 0` all weights
/// are zero after the high-weight rule, so nothing is added.
pub fn expand_weights(inst: &WbddInstance) -> Result<(BddInstance, ReductionTrace)> {
    if inst.weights.values().any(|&w| w > inst.r) {
        return Err(Error::Precondition(
            "expand_weights needs w_v <= r everywhere; run the basic rules first".into(),
        ));
    }
    let mut g = inst.graph.clone();
    let mut trace = ReductionTrace::default();
    let mut next = g.max_vertex_id().unwrap_or(0) + 1;
    for v in inst.graph.vertices() {
        let w = inst.weight(v);
        if w == 0 {
            continue;
        }
        let mut ops = Vec::new();
        for _ in 0..w {
            g.add_vertex(next);
            g.add_edge(v, next);
            ops.push(TraceOp::AddVertex { v: next, weight: 0 });
            ops.push(TraceOp::AddEdge(v, next));
            next += 1;
        }
        ops.push(TraceOp::AdjustWeight {
            v,
            delta: -i64::from(w),
        });
        trace.push(Rule::WeightGadget, vec![v], ops);
    }
    Ok((BddInstance::new(g, inst.r, inst.k), trace))
}

/// Interleaves the degree/weight rules, the path rule (for `r >= 2`), and
/// the weight shift to a global fixpoint. The replacement table is
/// rebuilt whenever the shift lowers `r`.
pub fn reduce_to_fixpoint(inst: &WbddInstance) -> Result<(WbddInstance, ReductionTrace)> {
    let mut inst = inst.clone();
    let mut trace = ReductionTrace::default();
    let mut table: Option<ReplacementTable> = None;
    loop {
        let mut changed = false;
        let (next, t) = apply_basic_rules(&inst);
        changed |= !t.is_empty();
        inst = next;
        trace.extend(t);
        if inst.r >= 2 {
            if table.as_ref().is_none_or(|t| t.r() != inst.r) {
                table = Some(build_replacement_table(inst.r)?);
            }
            let (next, t) = apply_path_rule(&inst, table.as_ref().unwrap())?;
            changed |= !t.is_empty();
            inst = next;
            trace.extend(t);
        }
        let (next, t) = remove_weights(&inst);
        changed |= !t.is_empty();
        inst = next;
        trace.extend(t);
        if !changed {
            return Ok((inst, trace));
        }
    }
}

/// Outcome of the full pipeline: an answer-equivalent unweighted instance
/// plus the cumulative trace. `k < 0` encodes decided-no; an empty graph
/// with `k >= 0` encodes decided-yes.
pub fn kernelize_bdd(
    g: &crate::graph::Graph,
    r: u32,
    k: i64,
) -> Result<(BddInstance, ReductionTrace)> {
    let lifted = WbddInstance::from_bdd(g.clone(), r, k);
    let (inst, mut trace) = reduce_to_fixpoint(&lifted)?;
    let (bdd, t) = expand_weights(&inst)?;
    trace.extend(t);
    Ok((bdd, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Graph, VertexId};
    use crate::solvers::oracle::{bdd_decide, wbdd_decide};

    #[test]
    fn high_weight_forces_deletion() {
        let g = Graph::with_vertices([1]);
        let inst = WbddInstance::new(g, [(1, 3)].into(), 2, 1).unwrap();
        let (out, _) = apply_basic_rules(&inst);
        assert!(out.graph.is_empty());
        assert_eq!(out.k, 0);
    }

    #[test]
    fn pendant_pair_is_resolved() {
        // K2 with weights (r-1, r) at r=2: both vertices go, k drops once
        let g = Graph::from_edges([(1, 2)]);
        let inst = WbddInstance::new(g, [(1, 1), (2, 2)].into(), 2, 1).unwrap();
        let (out, _) = apply_basic_rules(&inst);
        assert!(out.graph.is_empty());
        assert_eq!(out.k, 0);
    }

    #[test]
    fn path_dissolves_without_touching_k() {
        // P3 at r=2, all weights zero: raises, folds, and the isolated
        // remainder at full weight disappears
        let g = Graph::from_edges([(1, 2), (2, 3)]);
        let inst = WbddInstance::from_bdd(g, 2, 5);
        let (out, trace) = apply_basic_rules(&inst);
        assert!(out.graph.is_empty());
        assert_eq!(out.k, 5);
        assert!(trace.counts_by_rule()[&Rule::WeightRaise] >= 1);
    }

    #[test]
    fn basic_rules_preserve_the_answer() {
        let g = Graph::from_edges([(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (2, 6)]);
        for r in 0..=3u32 {
            for k in 0..=3i64 {
                let inst = WbddInstance::from_bdd(g.clone(), r, k);
                let (out, _) = apply_basic_rules(&inst);
                assert_eq!(
                    wbdd_decide(&inst.graph, &inst.weights, r, k),
                    out.decided().unwrap_or_else(|| wbdd_decide(
                        &out.graph,
                        &out.weights,
                        out.r,
                        out.k
                    )),
                    "r={r} k={k}"
                );
            }
        }
    }

    #[test]
    fn weight_shift_examples() {
        let g = Graph::from_edges([(1, 2)]);
        let inst = WbddInstance::new(g.clone(), [(1, 1), (2, 1)].into(), 2, 0).unwrap();
        let (out, _) = remove_weights(&inst);
        assert_eq!(out.r, 1);
        assert_eq!(out.weights.values().copied().collect::<Vec<_>>(), vec![0, 0]);

        let untouched = WbddInstance::new(g.clone(), [(1, 1), (2, 0)].into(), 2, 0).unwrap();
        let (out, trace) = remove_weights(&untouched);
        assert_eq!(out, untouched);
        assert!(trace.is_empty());

        let two = WbddInstance::new(g, [(1, 3), (2, 2)].into(), 5, 0).unwrap();
        let (out, _) = remove_weights(&two);
        assert_eq!(out.r, 3);
        assert_eq!(out.weight(1), 1);
        assert_eq!(out.weight(2), 0);
    }

    #[test]
    fn pendant_gadgets_realize_weights() {
        let g = Graph::from_edges([(1, 2)]);
        let inst = WbddInstance::new(g, [(1, 2), (2, 0)].into(), 3, 1).unwrap();
        let (bdd, _) = expand_weights(&inst).unwrap();
        assert_eq!(bdd.graph.degree(1), 3);
        assert_eq!(bdd.graph.vertex_count(), 4);
        // equivalence on this instance
        assert_eq!(
            wbdd_decide(&Graph::from_edges([(1, 2)]), &[(1, 2), (2, 0)].into(), 3, 1),
            bdd_decide(&bdd.graph, bdd.r, bdd.k)
        );
    }

    #[test]
    fn zero_weights_expand_to_nothing() {
        let g = Graph::from_edges([(1, 2), (2, 3)]);
        let inst = WbddInstance::from_bdd(g.clone(), 1, 0);
        let (bdd, trace) = expand_weights(&inst).unwrap();
        assert_eq!(bdd.graph, g);
        assert!(trace.is_empty());
    }

    #[test]
    fn ten_cycle_shrinks_to_nine() {
        let edges: Vec<(VertexId, VertexId)> =
            (1..10).map(|v| (v, v + 1)).chain([(1, 10)]).collect();
        let inst = WbddInstance::from_bdd(Graph::from_edges(edges), 2, 3);
        let table = build_replacement_table(2).unwrap();
        let window = find_window(&inst, |_| true).unwrap();
        for &v in &window[1..6] {
            assert_eq!(inst.graph.degree(v), 2);
        }
        let (reduced, trace) = apply_path_rule(&inst, &table).unwrap();
        // every window of an all-zero-weight cycle at r=2 is already
        // satisfied, so k never moves and the cycle stops at six vertices
        assert_eq!(reduced.k, inst.k);
        assert_eq!(reduced.graph.vertex_count(), 6);
        assert!(trace.len() == 4);
        let first = &trace.entries[0];
        assert_eq!(first.rule, Rule::PathReplace);
        // first application alone: C10 -> C9
        let mut one = inst.clone();
        one = ReductionTrace {
            entries: vec![first.clone()],
        }
        .replay_wbdd(&one)
        .unwrap();
        assert_eq!(one.graph.vertex_count(), 9);
        assert!(one.graph.vertices().all(|v| one.graph.degree(v) == 2));
        assert_eq!(one.k, inst.k);
    }

    #[test]
    fn no_window_means_identity() {
        let g = Graph::from_edges([(1, 2), (2, 3), (3, 1)]);
        let inst = WbddInstance::from_bdd(g, 2, 1);
        let table = build_replacement_table(2).unwrap();
        let (out, trace) = apply_path_rule(&inst, &table).unwrap();
        assert_eq!(out, inst);
        assert!(trace.is_empty());
    }

    #[test]
    fn kernel_trace_replays_to_the_kernel() {
        let edges: Vec<(VertexId, VertexId)> = (1..12).map(|v| (v, v + 1)).chain([(1, 12)]).collect();
        let mut g = Graph::from_edges(edges);
        g.add_edge(1, 5);
        for v in 13..=16 {
            g.add_edge(3, v);
        }
        let (kernel, trace) = kernelize_bdd(&g, 2, 2).unwrap();
        let replayed = trace
            .replay_wbdd(&WbddInstance::from_bdd(g, 2, 2))
            .unwrap();
        assert_eq!(replayed.graph, kernel.graph);
        assert_eq!(replayed.k, kernel.k);
        assert_eq!(replayed.r, kernel.r);
        assert!(replayed.weights.values().all(|&w| w == 0));
    }
}
