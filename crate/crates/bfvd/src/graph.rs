use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

/// Vertex identifier. Ids are positive, unique, and stable: deleting a
/// vertex never renumbers the others.
pub type VertexId = u32;

/// Undirected simple graph with sorted adjacency.
///
/// All mutation goes through `add_*`/`remove_*`; derived subgraphs are
/// materialized copies so each solver branch owns its own view. Iteration
/// order is ascending everywhere, which keeps every downstream algorithm
/// trace deterministic.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

impl Graph {
    pub fn new() -> Self {
        Graph::default()
    }

    pub fn with_vertices(ids: impl IntoIterator<Item = VertexId>) -> Self {
        let mut g = Graph::new();
        for v in ids {
            g.add_vertex(v);
        }
        g
    }

    /// Builds a graph from an edge list, adding endpoints as needed.
    /// Panics on self-loops; duplicate edges collapse.
    pub fn from_edges(edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Self {
        let mut g = Graph::new();
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_vertex(&mut self, v: VertexId) {
        assert!(v > 0, "vertex ids are positive");
        self.adj.entry(v).or_default();
    }

    /// Inserts the edge `uv`, adding missing endpoints. Panics on `u == v`.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) {
        assert_ne!(u, v, "self-loops are not allowed");
        self.add_vertex(u);
        self.add_vertex(v);
        self.adj.get_mut(&u).unwrap().insert(v);
        self.adj.get_mut(&v).unwrap().insert(u);
    }

    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> bool {
        let a = self.adj.get_mut(&u).map(|s| s.remove(&v)).unwrap_or(false);
        let b = self.adj.get_mut(&v).map(|s| s.remove(&u)).unwrap_or(false);
        debug_assert_eq!(a, b, "adjacency must stay symmetric");
        a
    }

    pub fn remove_vertex(&mut self, v: VertexId) -> bool {
        match self.adj.remove(&v) {
            None => false,
            Some(nbrs) => {
                for u in nbrs {
                    self.adj.get_mut(&u).unwrap().remove(&v);
                }
                true
            }
        }
    }

    /// Copy of the graph with the given vertices deleted.
    pub fn removing(&self, vs: &[VertexId]) -> Graph {
        let mut g = self.clone();
        for &v in vs {
            g.remove_vertex(v);
        }
        g
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj.get(&v).map_or(0, |s| s.len())
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.get(&v).into_iter().flatten().copied()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn max_vertex_id(&self) -> Option<VertexId> {
        self.adj.keys().next_back().copied()
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (&u, nbrs) in &self.adj {
            for &v in nbrs.range(u + 1..) {
                out.push((u, v));
            }
        }
        out
    }

    /// Connected components, each sorted ascending, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = BTreeSet::new();
        let mut comps = Vec::new();
        for root in self.vertices() {
            if seen.contains(&root) {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([root]);
            seen.insert(root);
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for u in self.neighbors(v) {
                    if seen.insert(u) {
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_acyclic(&self) -> bool {
        self.edge_count() + self.component_count() == self.vertex_count()
    }

    #[cfg(test)]
    pub(crate) fn assert_symmetric(&self) {
        for (&v, nbrs) in &self.adj {
            for &u in nbrs {
                assert_ne!(u, v, "self-loop at {v}");
                assert!(
                    self.adj.get(&u).is_some_and(|s| s.contains(&v)),
                    "asymmetric edge {v}-{u}"
                );
            }
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.vertex_count(),
            self.edge_count(),
            self.edges()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deletion_is_stable_and_symmetric() {
        let mut g = Graph::from_edges([(1, 2), (2, 3), (3, 4), (4, 1)]);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        g.remove_vertex(2);
        g.assert_symmetric();
        assert!(g.contains_vertex(4));
        assert_eq!(g.vertices().collect::<Vec<_>>(), vec![1, 3, 4]);
        assert_eq!(g.edges(), vec![(1, 4), (3, 4)]);
    }

    #[test]
    fn acyclicity_by_counting() {
        let path = Graph::from_edges([(1, 2), (2, 3)]);
        assert!(path.is_acyclic());
        let cycle = Graph::from_edges([(1, 2), (2, 3), (1, 3)]);
        assert!(!cycle.is_acyclic());
        let two = Graph::from_edges([(1, 2), (2, 3), (1, 3), (5, 6)]);
        assert!(!two.is_acyclic());
        assert_eq!(two.component_count(), 2);
        assert!(Graph::new().is_acyclic());
    }
}
