//! Invariant checks over seeded random inputs: permutation behavior,
//! tree structure bounds, label equivariance, and verdict stability.

use proptest::prelude::*;

use unitree_core::compare::{match_graphs, CompareMode, Verdict};
use unitree_core::gen::{isomorphic_pair, random_graph, random_permutation, GenConfig};
use unitree_core::graph::Graph;
use unitree_core::oracle::{brute_force_isomorphic, verify_witness, OracleVerdict, DEFAULT_ORACLE_BUDGET};
use unitree_core::tree::{build_all_trees, build_uniqueness_tree};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n, any::<u64>(), 0..=10u32).prop_map(|(n, seed, p_tenths)| {
        random_graph(&GenConfig {
            n,
            edge_probability: f64::from(p_tenths) / 10.0,
            seed,
        })
        .expect("valid probability")
    })
}

fn permutation_of(n: usize, seed: u64) -> unitree_core::graph::Permutation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_permutation(n, &mut rng)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn edge_list_round_trips(g in arb_graph(30)) {
        let parsed = Graph::from_edge_list(&g.to_edge_list()).unwrap();
        prop_assert_eq!(parsed, g);
    }

    #[test]
    fn permutation_inverse_round_trips(g in arb_graph(30), seed in any::<u64>()) {
        let p = permutation_of(g.n(), seed);
        let there = g.apply_permutation(&p).unwrap();
        let back = there.apply_permutation(&p.inverse()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn degree_sequence_is_permutation_invariant(g in arb_graph(30), seed in any::<u64>()) {
        let (h, _) = isomorphic_pair(&g, seed);
        prop_assert_eq!(g.degree_sequence(), h.degree_sequence());
    }

    #[test]
    fn tree_profiles_are_label_equivariant(g in arb_graph(20), seed in any::<u64>()) {
        let p = permutation_of(g.n(), seed);
        let h = g.apply_permutation(&p).unwrap();
        for v in 0..g.n() {
            let tg = build_uniqueness_tree(&g, v, g.n()).unwrap();
            let th = build_uniqueness_tree(&h, p.image(v), h.n()).unwrap();
            prop_assert_eq!(tg.profile(), th.profile());
        }
    }

    #[test]
    fn trees_respect_structural_bounds(g in arb_graph(25)) {
        let n = g.n();
        for t in build_all_trees(&g) {
            prop_assert!(t.height() <= n);
            prop_assert!(t.entry_count() <= n * n * (t.height() + 1));
            for level in t.levels() {
                if n >= 2 {
                    prop_assert!(level.len() <= n * (n - 1));
                }
                for entry in level {
                    prop_assert!((entry.child_count as usize) <= n.saturating_sub(1));
                    if entry.child_count > 0 {
                        let occurrences =
                            level.iter().filter(|e| e.vertex == entry.vertex).count();
                        prop_assert_eq!(occurrences, 1);
                    }
                }
            }
        }
    }

    #[test]
    fn tree_generation_is_deterministic(g in arb_graph(20)) {
        prop_assert_eq!(build_all_trees(&g), build_all_trees(&g));
    }

    #[test]
    fn permuted_copies_are_always_matched(g in arb_graph(16), seed in any::<u64>()) {
        let (h, _) = isomorphic_pair(&g, seed);
        for mode in [CompareMode::Profile, CompareMode::Canonical] {
            prop_assert_eq!(match_graphs(&g, &h, mode).verdict, Verdict::Isomorphic);
        }
    }

    #[test]
    fn verdict_is_invariant_under_relabeling(
        g in arb_graph(14),
        h_seed in any::<u64>(),
        p_seed in any::<u64>(),
        q_seed in any::<u64>(),
    ) {
        // compare g against an independent random graph of the same size
        let h = random_graph(&GenConfig {
            n: g.n(),
            edge_probability: 0.5,
            seed: h_seed,
        })
        .unwrap();
        let p = permutation_of(g.n(), p_seed);
        let q = permutation_of(h.n(), q_seed);
        let gp = g.apply_permutation(&p).unwrap();
        let hq = h.apply_permutation(&q).unwrap();
        let before = match_graphs(&g, &h, CompareMode::Profile).verdict;
        let after = match_graphs(&gp, &hq, CompareMode::Profile).verdict;
        prop_assert_eq!(before, after);
    }

    #[test]
    fn verdict_is_symmetric(g in arb_graph(14), h_seed in any::<u64>()) {
        let h = random_graph(&GenConfig {
            n: g.n(),
            edge_probability: 0.5,
            seed: h_seed,
        })
        .unwrap();
        prop_assert_eq!(
            match_graphs(&g, &h, CompareMode::Profile).verdict,
            match_graphs(&h, &g, CompareMode::Profile).verdict
        );
    }

    #[test]
    fn canonical_isomorphic_implies_profile_isomorphic(
        g in arb_graph(12),
        h_seed in any::<u64>(),
        iso in any::<bool>(),
    ) {
        // exercise both likely-isomorphic and likely-distinct pairs
        let h = if iso {
            isomorphic_pair(&g, h_seed).0
        } else {
            random_graph(&GenConfig { n: g.n(), edge_probability: 0.5, seed: h_seed }).unwrap()
        };
        let canonical = match_graphs(&g, &h, CompareMode::Canonical).verdict;
        let profile = match_graphs(&g, &h, CompareMode::Profile).verdict;
        if canonical == Verdict::Isomorphic {
            prop_assert_eq!(profile, Verdict::Isomorphic);
        }
    }

    #[test]
    fn oracle_witnesses_verify_and_agree_with_gen(g in arb_graph(8), seed in any::<u64>()) {
        let (h, p) = isomorphic_pair(&g, seed);
        prop_assert!(verify_witness(&g, &h, &p).unwrap());
        let result = brute_force_isomorphic(&g, &h, DEFAULT_ORACLE_BUDGET);
        prop_assert_eq!(result.verdict, OracleVerdict::Isomorphic);
        let witness = result.witness.unwrap();
        prop_assert!(verify_witness(&g, &h, &witness).unwrap());
    }

    #[test]
    fn oracle_verdict_is_relabel_invariant(
        g in arb_graph(7),
        h_seed in any::<u64>(),
        p_seed in any::<u64>(),
    ) {
        let h = random_graph(&GenConfig {
            n: g.n(),
            edge_probability: 0.5,
            seed: h_seed,
        })
        .unwrap();
        let p = permutation_of(g.n(), p_seed);
        let gp = g.apply_permutation(&p).unwrap();
        let before = brute_force_isomorphic(&g, &h, DEFAULT_ORACLE_BUDGET).verdict;
        let after = brute_force_isomorphic(&gp, &h, DEFAULT_ORACLE_BUDGET).verdict;
        prop_assert_eq!(before, after);
    }
}
