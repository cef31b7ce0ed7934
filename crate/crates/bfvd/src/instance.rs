use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Biclique-free vertex deletion: may at most `k` vertices be deleted so
/// that no `K_{i,j}` subgraph remains?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfvdInstance {
    pub graph: Graph,
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl BfvdInstance {
    pub fn new(graph: Graph, i: usize, j: usize, k: usize) -> Result<Self> {
        if i < 1 || j < i {
            return Err(Error::Precondition(format!(
                "need 1 <= i <= j, got i={i}, j={j}"
            )));
        }
        Ok(BfvdInstance { graph, i, j, k })
    }
}

/// Weighted bounded-degree deletion: each kept vertex `v` must end with
/// degree at most `r - w_v`. `k` may go negative during reduction; a
/// negative `k` marks the instance as decided-no while keeping the trace
/// replayable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WbddInstance {
    pub graph: Graph,
    pub weights: BTreeMap<VertexId, u32>,
    pub r: u32,
    pub k: i64,
}

impl WbddInstance {
    /// Lifts an unweighted instance (all weights zero).
    pub fn from_bdd(graph: Graph, r: u32, k: i64) -> Self {
        let weights = graph.vertices().map(|v| (v, 0)).collect();
        WbddInstance {
            graph,
            weights,
            r,
            k,
        }
    }

    pub fn new(graph: Graph, weights: BTreeMap<VertexId, u32>, r: u32, k: i64) -> Result<Self> {
        let inst = WbddInstance {
            graph,
            weights,
            r,
            k,
        };
        inst.validate_weights()?;
        Ok(inst)
    }

    pub fn weight(&self, v: VertexId) -> u32 {
        *self.weights.get(&v).unwrap_or(&0)
    }

    /// Weights must be defined on exactly the vertex set.
    pub fn validate_weights(&self) -> Result<()> {
        let vs: Vec<VertexId> = self.graph.vertices().collect();
        let ws: Vec<VertexId> = self.weights.keys().copied().collect();
        if vs == ws {
            Ok(())
        } else {
            Err(Error::Integrity(
                "weight map does not match vertex set".into(),
            ))
        }
    }

    pub fn decided(&self) -> Option<bool> {
        if self.k < 0 {
            Some(false)
        } else if self.graph.is_empty() {
            Some(true)
        } else {
            None
        }
    }
}

/// Bounded-degree deletion: delete at most `k` vertices so every kept
/// vertex has degree at most `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BddInstance {
    pub graph: Graph,
    pub r: u32,
    pub k: i64,
}

impl BddInstance {
    pub fn new(graph: Graph, r: u32, k: i64) -> Self {
        BddInstance { graph, r, k }
    }

    /// Kernel outcome encoding: negative `k` is decided-no, an empty graph
    /// with `k >= 0` is decided-yes.
    pub fn decided(&self) -> Option<bool> {
        if self.k < 0 {
            Some(false)
        } else if self.graph.is_empty() {
            Some(true)
        } else {
            None
        }
    }
}

/// A parsed instance document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedInstance {
    Bfvd(BfvdInstance),
    Wbdd(WbddInstance),
}
