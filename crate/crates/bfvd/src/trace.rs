//! Replayable logs of reduction-rule applications.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::instance::WbddInstance;

/// Which rule produced a trace entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rule {
    /// vertex in no biclique
    BicliqueVertex,
    /// edge in no biclique
    BicliqueEdge,
    /// slack weight raised to meet `deg(v) + w_v >= r`
    WeightRaise,
    /// weight above `r` forces the vertex into the solution
    HighWeightDelete,
    /// isolated vertex at full weight
    IsolatedDelete,
    /// pendant folded into its neighbor
    PendantMerge,
    /// pendant at full weight: neighbor taken into the solution
    PendantTake,
    /// degree-two path window replaced by a shorter equivalent
    PathReplace,
    /// all weights and `r` shifted down by one
    WeightShift,
    /// weights realized as pendant gadgets
    WeightGadget,
    /// degree <= 1 vertex (no biclique side for i >= 2)
    LeafDelete,
    /// middle of five-vertex path with degree-two interior
    PathMiddleDelete,
}

/// A primitive, mechanically replayable mutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceOp {
    DeleteVertex(VertexId),
    DeleteEdge(VertexId, VertexId),
    AddVertex { v: VertexId, weight: u32 },
    AddEdge(VertexId, VertexId),
    AdjustWeight { v: VertexId, delta: i64 },
    AdjustK { delta: i64 },
    AdjustR { delta: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub rule: Rule,
    /// Vertices the rule fired on, for reporting.
    pub affected: Vec<VertexId>,
    pub ops: Vec<TraceOp>,
}

/// Ordered log of rule applications. Replaying it onto the original
/// instance reproduces the reduced one exactly.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub entries: Vec<TraceEntry>,
}

impl ReductionTrace {
    pub fn push(&mut self, rule: Rule, affected: Vec<VertexId>, ops: Vec<TraceOp>) {
        self.entries.push(TraceEntry { rule, affected, ops });
    }

    pub fn extend(&mut self, other: ReductionTrace) {
        self.entries.extend(other.entries);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn counts_by_rule(&self) -> BTreeMap<Rule, usize> {
        let mut counts = BTreeMap::new();
        for e in &self.entries {
            *counts.entry(e.rule).or_insert(0) += 1;
        }
        counts
    }

    /// Replays graph-only traces (biclique membership, leaf/path kernels).
    pub fn replay_graph(&self, g: &Graph) -> Result<Graph> {
        let mut g = g.clone();
        for entry in &self.entries {
            for op in &entry.ops {
                match *op {
                    TraceOp::DeleteVertex(v) => {
                        if !g.remove_vertex(v) {
                            return Err(replay_err("delete of missing vertex"));
                        }
                    }
                    TraceOp::DeleteEdge(u, v) => {
                        if !g.remove_edge(u, v) {
                            return Err(replay_err("delete of missing edge"));
                        }
                    }
                    TraceOp::AddVertex { v, .. } => g.add_vertex(v),
                    TraceOp::AddEdge(u, v) => g.add_edge(u, v),
                    _ => return Err(replay_err("weight op in a graph-only trace")),
                }
            }
        }
        Ok(g)
    }

    /// Replays weighted traces, including pendant-gadget expansion.
    pub fn replay_wbdd(&self, inst: &WbddInstance) -> Result<WbddInstance> {
        let mut inst = inst.clone();
        for entry in &self.entries {
            for op in &entry.ops {
                match *op {
                    TraceOp::DeleteVertex(v) => {
                        if !inst.graph.remove_vertex(v) {
                            return Err(replay_err("delete of missing vertex"));
                        }
                        inst.weights.remove(&v);
                    }
                    TraceOp::DeleteEdge(u, v) => {
                        if !inst.graph.remove_edge(u, v) {
                            return Err(replay_err("delete of missing edge"));
                        }
                    }
                    TraceOp::AddVertex { v, weight } => {
                        inst.graph.add_vertex(v);
                        inst.weights.insert(v, weight);
                    }
                    TraceOp::AddEdge(u, v) => inst.graph.add_edge(u, v),
                    TraceOp::AdjustWeight { v, delta } => {
                        let w = inst.weights.get_mut(&v).ok_or_else(|| {
                            replay_err("weight adjust on missing vertex")
                        })?;
                        let next = i64::from(*w) + delta;
                        if next < 0 {
                            return Err(replay_err("weight driven negative"));
                        }
                        *w = next as u32;
                    }
                    TraceOp::AdjustK { delta } => inst.k += delta,
                    TraceOp::AdjustR { delta } => {
                        let next = i64::from(inst.r) + delta;
                        if next < 0 {
                            return Err(replay_err("r driven negative"));
                        }
                        inst.r = next as u32;
                    }
                }
            }
        }
        Ok(inst)
    }
}

fn replay_err(msg: &str) -> Error {
    Error::Integrity(format!("trace replay: {msg}"))
}
