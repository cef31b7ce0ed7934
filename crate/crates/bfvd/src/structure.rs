//! Structural measurements of reduced graphs: degree-two segments and
//! high-degree vertex counts, matching the combinatorial kernel bounds
//! (at most `2 fen - 2` vertices of degree three or more, at most
//! `3 fen - 3` maximal paths and cycles, on graphs of minimum degree two).

use std::collections::BTreeSet;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeTwoSummary {
    pub min_degree: usize,
    /// vertices of degree at least three
    pub high_degree_vertices: usize,
    /// maximal paths: both endpoints of degree >= 3, interior of degree 2
    pub maximal_paths: usize,
    /// maximal cycles: at most one vertex of degree >= 3
    pub maximal_cycles: usize,
    /// most vertices in any maximal path or cycle (anchors included)
    pub longest_segment_vertices: usize,
}

pub fn degree_two_summary(g: &Graph) -> DegreeTwoSummary {
    let min_degree = g.vertices().map(|v| g.degree(v)).min().unwrap_or(0);
    let high: BTreeSet<VertexId> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
    let deg2: BTreeSet<VertexId> = g.vertices().filter(|&v| g.degree(v) == 2).collect();

    let mut paths = 0usize;
    let mut cycles = 0usize;
    let mut longest = 0usize;

    // direct edges between high-degree vertices are inner-less maximal paths
    for (u, v) in g.edges() {
        if high.contains(&u) && high.contains(&v) {
            paths += 1;
            longest = longest.max(2);
        }
    }

    let mut seen: BTreeSet<VertexId> = BTreeSet::new();
    for &start in &deg2 {
        if seen.contains(&start) {
            continue;
        }
        // walk the run of degree-two vertices containing `start`
        let mut run = vec![start];
        seen.insert(start);
        let mut closed = false;
        'grow: loop {
            for end in [*run.last().unwrap(), run[0]] {
                for u in g.neighbors(end) {
                    if deg2.contains(&u) && !seen.contains(&u) {
                        seen.insert(u);
                        if end == *run.last().unwrap() {
                            run.push(u);
                        } else {
                            run.insert(0, u);
                        }
                        continue 'grow;
                    }
                }
            }
            break;
        }
        if run.len() >= 3 {
            // a component that is itself a cycle has no outside neighbors
            let first = run[0];
            let last = *run.last().unwrap();
            closed = g.has_edge(first, last)
                && run.iter().all(|&v| g.neighbors(v).all(|u| deg2.contains(&u)));
        }
        if closed {
            cycles += 1;
            longest = longest.max(run.len());
            continue;
        }
        // anchors: non-run neighbors of the run's end vertices
        let mut anchors = Vec::new();
        let ends = if run.len() == 1 {
            vec![run[0], run[0]]
        } else {
            vec![run[0], *run.last().unwrap()]
        };
        for (pos, &e) in ends.iter().enumerate() {
            for u in g.neighbors(e) {
                let interior = if run.len() == 1 {
                    false
                } else if pos == 0 {
                    u == run[1]
                } else {
                    u == run[run.len() - 2]
                };
                if !interior {
                    anchors.push(u);
                }
            }
        }
        anchors.sort_unstable();
        anchors.dedup();
        if anchors.len() == 1 {
            cycles += 1;
            longest = longest.max(run.len() + 1);
        } else {
            paths += 1;
            longest = longest.max(run.len() + anchors.len().min(2));
        }
    }

    DegreeTwoSummary {
        min_degree,
        high_degree_vertices: high.len(),
        maximal_paths: paths,
        maximal_cycles: cycles,
        longest_segment_vertices: longest,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pure_cycle() {
        let c6 = Graph::from_edges((1..6).map(|v| (v, v + 1)).chain([(1, 6)]));
        let s = degree_two_summary(&c6);
        assert_eq!(s.high_degree_vertices, 0);
        assert_eq!(s.maximal_cycles, 1);
        assert_eq!(s.maximal_paths, 0);
        assert_eq!(s.longest_segment_vertices, 6);
    }

    #[test]
    fn theta_graph() {
        // two degree-3 vertices joined by three paths: lengths 1, 2, 3 inner
        let mut g = Graph::from_edges([(1, 2)]);
        g.add_edge(1, 3);
        g.add_edge(3, 2);
        g.add_edge(1, 4);
        g.add_edge(4, 5);
        g.add_edge(5, 2);
        let s = degree_two_summary(&g);
        assert_eq!(s.min_degree, 2);
        assert_eq!(s.high_degree_vertices, 2);
        assert_eq!(s.maximal_paths, 3);
        assert_eq!(s.maximal_cycles, 0);
        assert_eq!(s.longest_segment_vertices, 4);
    }

    #[test]
    fn two_cycles_sharing_a_vertex() {
        // 1-2-3-1 and 1-4-5-1: both are maximal cycles anchored at 1
        let g = Graph::from_edges([(1, 2), (2, 3), (1, 3), (1, 4), (4, 5), (1, 5)]);
        let s = degree_two_summary(&g);
        assert_eq!(s.high_degree_vertices, 1);
        assert_eq!(s.maximal_paths, 0);
        assert_eq!(s.maximal_cycles, 2);
        assert_eq!(s.longest_segment_vertices, 3);
    }
}
