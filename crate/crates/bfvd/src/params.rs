//! Structural graph parameters: degeneracy, feedback edge number, and an
//! exact minimum feedback vertex set search.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Degeneracy `d` together with a witnessing peel ordering: scanning the
/// ordering left to right, every vertex has at most `d` later neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyResult {
    pub d: usize,
    pub ordering: Vec<VertexId>,
}

/// Repeated minimum-degree removal, ties broken by smallest id. The
/// largest minimum degree seen over the peeling is the degeneracy.
pub fn degeneracy(g: &Graph) -> DegeneracyResult {
    let mut deg: BTreeMap<VertexId, usize> =
        g.vertices().map(|v| (v, g.degree(v))).collect();
    let mut alive: BTreeSet<VertexId> = g.vertices().collect();
    let mut ordering = Vec::with_capacity(alive.len());
    let mut d = 0;
    while !alive.is_empty() {
        let (&v, &dv) = deg
            .iter()
            .filter(|(v, _)| alive.contains(v))
            .min_by_key(|(&v, &dv)| (dv, v))
            .unwrap();
        d = d.max(dv);
        ordering.push(v);
        alive.remove(&v);
        for u in g.neighbors(v) {
            if alive.contains(&u) {
                *deg.get_mut(&u).unwrap() -= 1;
            }
        }
    }
    DegeneracyResult { d, ordering }
}

/// Feedback edge number and a witnessing set of non-tree edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeedbackEdges {
    pub fen: usize,
    pub edges: Vec<(VertexId, VertexId)>,
}

/// Non-tree edges of a deterministic spanning forest (BFS from the lowest
/// id of each component, neighbors scanned ascending). By counting,
/// `fen = m - n + c`.
pub fn feedback_edge_data(g: &Graph) -> FeedbackEdges {
    let mut tree: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    let mut seen: BTreeSet<VertexId> = BTreeSet::new();
    for root in g.vertices() {
        if seen.contains(&root) {
            continue;
        }
        seen.insert(root);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for u in g.neighbors(v) {
                if seen.insert(u) {
                    tree.insert((v.min(u), v.max(u)));
                    queue.push_back(u);
                }
            }
        }
    }
    let edges: Vec<(VertexId, VertexId)> = g
        .edges()
        .into_iter()
        .filter(|e| !tree.contains(e))
        .collect();
    let fen = g.edge_count() + g.component_count() - g.vertex_count();
    debug_assert_eq!(fen, edges.len());
    FeedbackEdges { fen, edges }
}

/// Exact minimum feedback vertex set by iterative deepening.
///
/// Each depth applies two answer-preserving reductions before branching on
/// the vertices of a shortest cycle (ascending id):
/// - a vertex of degree at most one lies on no cycle and is dropped;
/// - a degree-two vertex whose neighbors are non-adjacent is bypassed
///   (some optimum avoids it, since any cycle through it passes through
///   both neighbors).
///
/// `budget`, when present, caps the search; exceeding it is reported as
/// [`Error::FvsBudgetExhausted`] rather than silently returning a
/// non-minimum set.
pub fn minimum_fvs(g: &Graph, budget: Option<usize>) -> Result<Vec<VertexId>> {
    let cap = budget.unwrap_or(g.vertex_count());
    for b in 0..=cap {
        if let Some(mut fvs) = fvs_search(g.clone(), b) {
            fvs.sort_unstable();
            debug_assert!(g.removing(&fvs).is_acyclic());
            return Ok(fvs);
        }
    }
    Err(Error::FvsBudgetExhausted { budget: cap })
}

fn fvs_search(mut g: Graph, budget: usize) -> Option<Vec<VertexId>> {
    fvs_reduce(&mut g);
    if g.is_acyclic() {
        return Some(Vec::new());
    }
    if budget == 0 {
        return None;
    }
    let cycle = shortest_cycle(&g).expect("cyclic graph has a cycle");
    for &v in &cycle {
        if let Some(mut rest) = fvs_search(g.removing(&[v]), budget - 1) {
            rest.push(v);
            return Some(rest);
        }
    }
    None
}

fn fvs_reduce(g: &mut Graph) {
    loop {
        let low = g.vertices().find(|&v| g.degree(v) <= 1);
        if let Some(v) = low {
            g.remove_vertex(v);
            continue;
        }
        let bypass = g.vertices().find_map(|v| {
            if g.degree(v) != 2 {
                return None;
            }
            let nbrs: Vec<_> = g.neighbors(v).collect();
            (!g.has_edge(nbrs[0], nbrs[1])).then_some((v, nbrs[0], nbrs[1]))
        });
        match bypass {
            Some((v, a, b)) => {
                g.remove_vertex(v);
                g.add_edge(a, b);
            }
            None => return,
        }
    }
}

/// Some shortest cycle, as a sorted vertex list. BFS from every vertex in
/// ascending order; the first shortest reconstruction wins.
fn shortest_cycle(g: &Graph) -> Option<Vec<VertexId>> {
    let mut best: Option<Vec<VertexId>> = None;
    for root in g.vertices() {
        let mut dist: BTreeMap<VertexId, usize> = BTreeMap::from([(root, 0)]);
        let mut parent: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for u in g.neighbors(v) {
                if !dist.contains_key(&u) {
                    dist.insert(u, dist[&v] + 1);
                    parent.insert(u, v);
                    queue.push_back(u);
                } else if parent.get(&v) != Some(&u) && parent.get(&u) != Some(&v) {
                    // non-tree edge closes a cycle through the BFS tree
                    let cycle = close_cycle(&parent, v, u);
                    if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                        best = Some(cycle);
                    }
                }
            }
        }
        if best.as_ref().is_some_and(|b| b.len() == 3) {
            break;
        }
    }
    best.map(|mut c| {
        c.sort_unstable();
        c
    })
}

fn close_cycle(
    parent: &BTreeMap<VertexId, VertexId>,
    x: VertexId,
    y: VertexId,
) -> Vec<VertexId> {
    let path_to_root = |mut v: VertexId| {
        let mut path = vec![v];
        while let Some(&p) = parent.get(&v) {
            path.push(p);
            v = p;
        }
        path
    };
    let px = path_to_root(x);
    let py = path_to_root(y);
    let in_py: BTreeSet<_> = py.iter().copied().collect();
    let meet = *px.iter().find(|v| in_py.contains(v)).unwrap();
    let mut cycle: Vec<VertexId> = px.iter().copied().take_while(|&v| v != meet).collect();
    cycle.push(meet);
    cycle.extend(py.iter().copied().take_while(|&v| v != meet));
    cycle
}

/// A vertex cover: exact minimum (subsets by ascending size, lexicographic)
/// for small graphs, greedy maximal-matching double cover beyond that.
pub fn vertex_cover(g: &Graph) -> Vec<VertexId> {
    const EXACT_LIMIT: usize = 20;
    if g.vertex_count() <= EXACT_LIMIT {
        return minimum_vertex_cover(g);
    }
    let mut cover = BTreeSet::new();
    for (u, v) in g.edges() {
        if !cover.contains(&u) && !cover.contains(&v) {
            cover.insert(u);
            cover.insert(v);
        }
    }
    cover.into_iter().collect()
}

/// Exact minimum vertex cover by exhaustive search, smallest first.
pub fn minimum_vertex_cover(g: &Graph) -> Vec<VertexId> {
    let ids: Vec<VertexId> = g.vertices().collect();
    let edges = g.edges();
    for size in 0..=ids.len() {
        let mut found = None;
        crate::bits::for_each_combination(ids.len(), size, |combo| {
            let picked: BTreeSet<VertexId> = combo.iter().map(|&i| ids[i]).collect();
            if edges
                .iter()
                .all(|&(u, v)| picked.contains(&u) || picked.contains(&v))
            {
                found = Some(picked.into_iter().collect::<Vec<_>>());
                return false;
            }
            true
        });
        if let Some(cover) = found {
            return cover;
        }
    }
    ids
}

/// Bundle of feedback-set data for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeedbackSets {
    pub fen: usize,
    pub fen_edges: Vec<(VertexId, VertexId)>,
    pub fvs: Vec<VertexId>,
}

pub fn feedback_sets(g: &Graph, fvs_budget: Option<usize>) -> Result<FeedbackSets> {
    let fe = feedback_edge_data(g);
    let fvs = minimum_fvs(g, fvs_budget)?;
    Ok(FeedbackSets {
        fen: fe.fen,
        fen_edges: fe.edges,
        fvs,
    })
}
