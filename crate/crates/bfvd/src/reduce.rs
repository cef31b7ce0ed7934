//! Wrappers between bounded-degree deletion and biclique-free deletion,
//! plus the treedepth-hardness gadget as an instance generator.

use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::instance::{BddInstance, BfvdInstance};

/// `(G, r, k)` is a yes-instance of bounded-degree deletion iff
/// `(G, 1, r + 1, k)` is one of biclique-free deletion: a vertex of degree
/// above `r` is exactly a `K_{1,r+1}` center. With `r = 0` this is Vertex
/// Cover.
pub fn bdd_as_bfvd(inst: &BddInstance) -> Result<BfvdInstance> {
    if inst.k < 0 {
        return Err(Error::Precondition("instance already decided-no (k < 0)".into()));
    }
    BfvdInstance::new(
        inst.graph.clone(),
        1,
        inst.r as usize + 1,
        inst.k as usize,
    )
}

/// The degree-blowup gadget, usable as an equivalence-tested instance
/// factory for any `i >= 2`.
///
/// The output copies `G` and, per original vertex `v`, attaches `i - 1`
/// fresh vertices `S_v` and `n` fresh vertices `T_v` so that
/// `S'_v = {v} ∪ S_v` and `T_v` form a `K_{i,n}`; per original edge `uv`,
/// both `u`–`S_v` and `v`–`S_u` edges are added (the construction treats
/// the endpoints symmetrically). With `j = n + r + 1`, a vertex of `G`
/// keeps degree above `r` iff its `S'_v` gathers `j` common neighbors.
/// Fresh ids are allocated in blocks per original vertex.
pub fn hardness_gadget(inst: &BddInstance, i: usize) -> Result<BfvdInstance> {
    if inst.k < 0 {
        return Err(Error::Precondition("instance already decided-no (k < 0)".into()));
    }
    if i < 2 {
        return Err(Error::UnsupportedParameter(
            "the gadget needs i >= 2; use the direct wrapper for i = 1".into(),
        ));
    }
    let n = inst.graph.vertex_count();
    if n <= i {
        return Err(Error::Precondition(format!(
            "the construction assumes n > i (n = {n}, i = {i})"
        )));
    }
    let j = n + inst.r as usize + 1;
    let block = (i - 1) + n;
    let base = inst.graph.max_vertex_id().unwrap_or(0);
    let originals: Vec<VertexId> = inst.graph.vertices().collect();

    let side_block = |pos: usize| -> (Vec<VertexId>, Vec<VertexId>) {
        let start = base + (pos * block) as VertexId + 1;
        let side: Vec<VertexId> = (0..i as VertexId - 1).map(|q| start + q).collect();
        let larger: Vec<VertexId> =
            (0..n as VertexId).map(|q| start + i as VertexId - 1 + q).collect();
        (side, larger)
    };

    let mut g = inst.graph.clone();
    for (pos, &v) in originals.iter().enumerate() {
        let (side, larger) = side_block(pos);
        for &t in &larger {
            g.add_edge(v, t);
            for &s in &side {
                g.add_edge(s, t);
            }
        }
    }
    for (pos, &v) in originals.iter().enumerate() {
        let (side_v, _) = side_block(pos);
        for u in inst.graph.neighbors(v) {
            for &s in &side_v {
                g.add_edge(u, s);
            }
        }
    }
    debug_assert_eq!(g.vertex_count(), n * i + n * n);
    BfvdInstance::new(g, i, j, inst.k as usize)
}
