//! Seeded generators for experiment inputs: G(n, p) random graphs,
//! permuted isomorphic partners, and single-edge-replaced perturbed
//! partners.
//!
//! All randomness comes from ChaCha8 streams seeded with explicit
//! 64-bit values, so every output is reproducible across platforms.
//! The algorithm identifier recorded in benchmark output is
//! [`GENERATOR_ID`].

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, Permutation};

/// Identifier of the random source, recorded in benchmark CSV output.
pub const GENERATOR_ID: &str = "chacha8";

#[derive(Debug, Error, PartialEq)]
pub enum GenError {
    #[error("edge probability {0} is not in [0, 1]")]
    InvalidProbability(f64),
    #[error("graph with {edges} edges on {n} vertices has no replaceable edge")]
    NoReplaceableEdge { n: usize, edges: usize },
}

/// Parameters of one G(n, p) draw.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenConfig {
    pub n: usize,
    pub edge_probability: f64,
    pub seed: u64,
}

/// G(n, p): each unordered pair {u, v} of distinct vertices is an edge
/// independently with probability `edge_probability`.
pub fn random_graph(cfg: &GenConfig) -> Result<Graph, GenError> {
    if !(0.0..=1.0).contains(&cfg.edge_probability) {
        return Err(GenError::InvalidProbability(cfg.edge_probability));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut edges = Vec::new();
    for u in 0..cfg.n {
        for v in (u + 1)..cfg.n {
            if rng.gen_bool(cfg.edge_probability) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(cfg.n, edges).expect("generated edges are valid"))
}

/// Uniformly random permutation of {0, …, n−1} (Fisher–Yates).
pub fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut map: Vec<usize> = (0..n).collect();
    map.shuffle(rng);
    Permutation::new(map).expect("a shuffle is a bijection")
}

/// Relabel `g` by a seed-derived uniform permutation; returns the image
/// graph together with the permutation that produced it.
pub fn isomorphic_pair(g: &Graph, seed: u64) -> (Graph, Permutation) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = random_permutation(g.n(), &mut rng);
    let h = g.apply_permutation(&p).expect("lengths match");
    (h, p)
}

/// Permuted copy of `g` with one uniformly random existing edge removed
/// and one uniformly random absent edge added (never re-adding the edge
/// just removed). Preserves vertex and edge counts.
pub fn perturbed_pair(g: &Graph, seed: u64) -> Result<Graph, GenError> {
    let n = g.n();
    let total_pairs = n * n.saturating_sub(1) / 2;
    let m = g.edge_count();
    if m == 0 || m == total_pairs {
        return Err(GenError::NoReplaceableEdge { n, edges: m });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = random_permutation(n, &mut rng);
    let permuted = g.apply_permutation(&p).expect("lengths match");

    let edges = permuted.edges();
    let removed = edges[rng.gen_range(0..edges.len())];

    let mut non_edges = Vec::with_capacity(total_pairs - m);
    for u in 0..n {
        for v in (u + 1)..n {
            if !permuted.has_edge(u, v) {
                non_edges.push((u, v));
            }
        }
    }
    let added = non_edges[rng.gen_range(0..non_edges.len())];

    let new_edges = edges
        .into_iter()
        .filter(|&e| e != removed)
        .chain(std::iter::once(added));
    Ok(Graph::from_edges(n, new_edges).expect("replacement keeps the graph simple"))
}

/// Deterministic sub-seed for pair `pair` of size `n` in stream
/// `stream`, derived from `master` by chained SplitMix64 steps.
pub fn derive_seed(master: u64, n: u64, pair: u64, stream: u64) -> u64 {
    let mut s = splitmix64(master);
    s = splitmix64(s ^ n);
    s = splitmix64(s ^ pair);
    splitmix64(s ^ stream)
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E3779B97F4A7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::cube_q3;

    #[test]
    fn single_vertex_has_no_pairs() {
        let g = random_graph(&GenConfig {
            n: 1,
            edge_probability: 0.5,
            seed: 7,
        })
        .unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn probability_one_forces_complete_graph() {
        let g = random_graph(&GenConfig {
            n: 5,
            edge_probability: 1.0,
            seed: 7,
        })
        .unwrap();
        assert_eq!(g.edge_count(), 10);
    }

    #[test]
    fn probability_zero_forces_empty_graph() {
        let g = random_graph(&GenConfig {
            n: 5,
            edge_probability: 0.0,
            seed: 7,
        })
        .unwrap();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn rejects_probability_out_of_range() {
        let cfg = GenConfig {
            n: 3,
            edge_probability: 1.5,
            seed: 0,
        };
        assert_eq!(
            random_graph(&cfg).unwrap_err(),
            GenError::InvalidProbability(1.5)
        );
    }

    #[test]
    fn edge_count_stays_within_four_sigma_of_the_mean() {
        // n = 100, p = 0.5: mean 2475, four sigma ≈ 141
        let g = random_graph(&GenConfig {
            n: 100,
            edge_probability: 0.5,
            seed: 20260808,
        })
        .unwrap();
        let m = g.edge_count() as f64;
        assert!((m - 2475.0).abs() <= 141.0, "edge count {m}");
    }

    #[test]
    fn same_seed_reproduces_the_same_graph() {
        let cfg = GenConfig {
            n: 40,
            edge_probability: 0.3,
            seed: 99,
        };
        assert_eq!(random_graph(&cfg).unwrap(), random_graph(&cfg).unwrap());
        let g = random_graph(&cfg).unwrap();
        assert_eq!(isomorphic_pair(&g, 5), isomorphic_pair(&g, 5));
        assert_eq!(perturbed_pair(&g, 5), perturbed_pair(&g, 5));
    }

    #[test]
    fn isomorphic_pair_of_single_vertex_is_identity() {
        let g = Graph::empty(1);
        let (h, p) = isomorphic_pair(&g, 3);
        assert_eq!(h, g);
        assert_eq!(p, Permutation::identity(1));
    }

    #[test]
    fn isomorphic_pair_preserves_degree_sequence() {
        let g = cube_q3();
        let (h, p) = isomorphic_pair(&g, 41);
        assert_eq!(h.edge_count(), 12);
        assert_eq!(h.degree_sequence(), vec![3; 8]);
        assert_eq!(g.apply_permutation(&p).unwrap(), h);
    }

    #[test]
    fn perturbed_pair_with_forced_choices() {
        // path 0-1 plus isolated vertex 2: one edge, exactly two non-edges
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        for seed in 0..20 {
            let (permuted, _) = isomorphic_pair(&g, seed);
            let h = perturbed_pair(&g, seed).unwrap();
            assert_eq!(h.edge_count(), 1);
            assert_ne!(h.edges(), permuted.edges());
        }
    }

    #[test]
    fn perturbed_pair_swaps_exactly_one_edge_slot() {
        let g = cube_q3();
        for seed in 0..20 {
            let (permuted, _) = isomorphic_pair(&g, seed);
            let h = perturbed_pair(&g, seed).unwrap();
            assert_eq!(h.n(), g.n());
            assert_eq!(h.edge_count(), g.edge_count());
            let before: std::collections::BTreeSet<_> = permuted.edges().into_iter().collect();
            let after: std::collections::BTreeSet<_> = h.edges().into_iter().collect();
            assert_eq!(before.difference(&after).count(), 1);
            assert_eq!(after.difference(&before).count(), 1);
        }
    }

    #[test]
    fn perturbed_pair_rejects_empty_and_complete_graphs() {
        let empty = Graph::empty(4);
        assert!(matches!(
            perturbed_pair(&empty, 0),
            Err(GenError::NoReplaceableEdge { .. })
        ));
        let complete = random_graph(&GenConfig {
            n: 4,
            edge_probability: 1.0,
            seed: 0,
        })
        .unwrap();
        assert!(matches!(
            perturbed_pair(&complete, 0),
            Err(GenError::NoReplaceableEdge { .. })
        ));
    }

    #[test]
    fn derived_seeds_differ_across_streams() {
        let a = derive_seed(1, 10, 3, 0);
        let b = derive_seed(1, 10, 3, 1);
        let c = derive_seed(1, 10, 4, 0);
        assert_ne!(a, b);
        assert_ne!(a, c);
        assert_eq!(a, derive_seed(1, 10, 3, 0));
    }
}
