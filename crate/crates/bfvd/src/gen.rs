//! Deterministic instance generators.
//!
//! Seeded generation uses ChaCha8 keyed by the seed, so a (generator,
//! seed) pair pins the instance exactly:
//! - `random_graph(n, p)`: scan pairs `(u, v)`, `u < v`, ascending; keep
//!   each with probability `p`.
//! - `random_tree(n)`: vertex `v` in `2..=n` attaches to a uniform earlier
//!   vertex.
//! - `tree_plus_edges(n, extra)`: a random tree plus `extra` uniform picks
//!   from the absent pairs (the feedback edge number is exactly `extra`).
//! - `random_degenerate(n, d)`: vertex `v` attaches to `min(d, v - 1)`
//!   distinct earlier vertices, so the result is `d`-degenerate.
//!
//! `nonisomorphic_graphs(n)` enumerates canonical representatives of all
//! unlabeled graphs (n <= 7): an edge bitmask is kept iff no vertex
//! permutation maps it to a smaller mask.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexId};
use crate::par;

pub type SeededRng = ChaCha8Rng;

pub fn rng_for(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(n: usize, p: f64, rng: &mut SeededRng) -> Graph {
    let mut g = Graph::with_vertices(1..=n as VertexId);
    for u in 1..=n as VertexId {
        for v in u + 1..=n as VertexId {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn random_tree(n: usize, rng: &mut SeededRng) -> Graph {
    let mut g = Graph::with_vertices(1..=n as VertexId);
    for v in 2..=n as VertexId {
        let parent = rng.gen_range(1..v);
        g.add_edge(parent, v);
    }
    g
}

pub fn tree_plus_edges(n: usize, extra: usize, rng: &mut SeededRng) -> Graph {
    let mut g = random_tree(n, rng);
    for _ in 0..extra {
        let absent: Vec<(VertexId, VertexId)> = {
            let mut out = Vec::new();
            for u in 1..=n as VertexId {
                for v in u + 1..=n as VertexId {
                    if !g.has_edge(u, v) {
                        out.push((u, v));
                    }
                }
            }
            out
        };
        if absent.is_empty() {
            break;
        }
        let (u, v) = absent[rng.gen_range(0..absent.len())];
        g.add_edge(u, v);
    }
    g
}

pub fn random_degenerate(n: usize, d: usize, rng: &mut SeededRng) -> Graph {
    let mut g = Graph::with_vertices(1..=n as VertexId);
    for v in 2..=n as VertexId {
        let take = d.min(v as usize - 1);
        let mut earlier: Vec<VertexId> = (1..v).collect();
        for _ in 0..take {
            let pick = rng.gen_range(0..earlier.len());
            let u = earlier.swap_remove(pick);
            g.add_edge(u, v);
        }
    }
    g
}

/// Random weights in `0..=max` per vertex, ascending vertex order.
pub fn random_weights(
    g: &Graph,
    max: u32,
    rng: &mut SeededRng,
) -> std::collections::BTreeMap<VertexId, u32> {
    g.vertices().map(|v| (v, rng.gen_range(0..=max))).collect()
}

const PAIR_COUNT: [usize; 8] = [0, 0, 1, 3, 6, 10, 15, 21];

fn pair_index(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(PAIR_COUNT[n]);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = pair_index(n);
    let mut g = Graph::with_vertices(1..=n as VertexId);
    for (e, &(u, v)) in pairs.iter().enumerate() {
        if mask >> e & 1 == 1 {
            g.add_edge(u as VertexId + 1, v as VertexId + 1);
        }
    }
    g
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for q in 0..k {
            heap(k - 1, items, out);
            if k % 2 == 0 {
                items.swap(q, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut out);
    out
}

/// All non-isomorphic graphs on exactly `n` labeled-as-canonical vertices,
/// in ascending mask order. Counts for n = 1..=7 are 1, 2, 4, 11, 34,
/// 156, 1044.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n), "mask enumeration is sized for n <= 7");
    let pairs = pair_index(n);
    let bits = pairs.len();
    let perms = permutations(n);
    // bit-relabeling table per permutation; identity dropped
    let tables: Vec<Vec<usize>> = perms
        .iter()
        .filter(|p| p.iter().enumerate().any(|(a, &b)| a != b))
        .map(|p| {
            pairs
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                    pairs.iter().position(|&q| q == (a, b)).unwrap()
                })
                .collect()
        })
        .collect();

    let total = 1u64 << bits;
    let flags = par::map_indices(total as usize, |mask_usize| {
        let mask = mask_usize as u64;
        tables.iter().all(|tab| {
            let mut image = 0u64;
            let mut rest = mask;
            while rest != 0 {
                let e = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                image |= 1 << tab[e];
            }
            image >= mask
        })
    });
    flags
        .into_iter()
        .enumerate()
        .filter(|&(_, keep)| keep)
        .map(|(mask, _)| graph_from_mask(n, mask as u64))
        .collect()
}

/// Deterministic shuffle helper for sampling without replacement.
pub fn sample_distinct(upper: usize, count: usize, rng: &mut SeededRng) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..upper).collect();
    let mut out = Vec::with_capacity(count.min(upper));
    for _ in 0..count.min(upper) {
        let pick = rng.gen_range(0..pool.len());
        out.push(pool.swap_remove(pick));
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{degeneracy, feedback_edge_data};

    #[test]
    fn generators_are_seed_deterministic() {
        let a = random_graph(10, 0.4, &mut rng_for(7));
        let b = random_graph(10, 0.4, &mut rng_for(7));
        assert_eq!(a, b);
        let t = tree_plus_edges(30, 4, &mut rng_for(3));
        let t2 = tree_plus_edges(30, 4, &mut rng_for(3));
        assert_eq!(t, t2);
    }

    #[test]
    fn tree_plus_edges_pins_fen() {
        for seed in 0..20 {
            let extra = (seed as usize % 5) + 1;
            let g = tree_plus_edges(20, extra, &mut rng_for(seed));
            assert_eq!(feedback_edge_data(&g).fen, extra);
        }
    }

    #[test]
    fn attachment_respects_degeneracy() {
        for seed in 0..10 {
            let d = 1 + seed as usize % 3;
            let g = random_degenerate(15, d, &mut rng_for(seed));
            assert!(degeneracy(&g).d <= d);
        }
    }

    #[test]
    fn small_unlabeled_counts() {
        assert_eq!(nonisomorphic_graphs(1).len(), 1);
        assert_eq!(nonisomorphic_graphs(2).len(), 2);
        assert_eq!(nonisomorphic_graphs(3).len(), 4);
        assert_eq!(nonisomorphic_graphs(4).len(), 11);
        assert_eq!(nonisomorphic_graphs(5).len(), 34);
    }
}
