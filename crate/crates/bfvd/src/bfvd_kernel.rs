//! The linear kernel for `i >= 2`: degree-at-most-one deletion plus
//! middle-of-five-path deletion, to fixpoint.
//!
//! Both rules delete vertices that cannot sit in any biclique when
//! `i >= 2` — every biclique vertex has degree at least two, and the
//! middle of a path whose three interior vertices have degree two would
//! force a smaller side of size one. `i`, `j`, `k` never change.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::instance::BfvdInstance;
use crate::trace::{ReductionTrace, Rule, TraceOp};

pub fn kernelize_bfvd(inst: &BfvdInstance) -> Result<(BfvdInstance, ReductionTrace)> {
    if inst.i < 2 {
        return Err(Error::UnsupportedParameter(
            "the linear kernel needs i >= 2; for i = 1 use the bounded-degree pipeline".into(),
        ));
    }
    let mut g = inst.graph.clone();
    let mut trace = ReductionTrace::default();
    loop {
        // low-degree vertices first (cheaper test)
        loop {
            let low = g.vertices().find(|&v| g.degree(v) <= 1);
            let Some(v) = low else { break };
            g.remove_vertex(v);
            trace.push(Rule::LeafDelete, vec![v], vec![TraceOp::DeleteVertex(v)]);
        }
        match find_path_middle(&g) {
            Some(v3) => {
                g.remove_vertex(v3);
                trace.push(
                    Rule::PathMiddleDelete,
                    vec![v3],
                    vec![TraceOp::DeleteVertex(v3)],
                );
            }
            None => break,
        }
    }
    Ok((
        BfvdInstance {
            graph: g,
            ..inst.clone()
        },
        trace,
    ))
}

/// Looks for five distinct vertices forming a path whose three interior
/// vertices have degree two, and returns the middle one. Candidates are
/// scanned ascending. Distinctness matters: on a four-cycle the outer
/// vertices coincide and the rule must not fire (a `C4` is a `K_{2,2}`).
fn find_path_middle(g: &Graph) -> Option<VertexId> {
    for v3 in g.vertices() {
        if g.degree(v3) != 2 {
            continue;
        }
        let nbrs: Vec<VertexId> = g.neighbors(v3).collect();
        let (v2, v4) = (nbrs[0], nbrs[1]);
        if g.degree(v2) != 2 || g.degree(v4) != 2 {
            continue;
        }
        let v1 = g.neighbors(v2).find(|&u| u != v3).unwrap();
        let v5 = g.neighbors(v4).find(|&u| u != v3).unwrap();
        let five = [v1, v2, v3, v4, v5];
        let distinct = (0..5).all(|a| (a + 1..5).all(|b| five[a] != five[b]));
        if distinct {
            return Some(v3);
        }
    }
    None
}
