//! Isomorphism decision by uniqueness-tree comparison: equal-signature
//! greedy vertex matching, in either profile or canonical-code mode.

use crate::graph::Graph;
use crate::tree::{build_all_trees, TreeProfile, UniquenessTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Isomorphic,
    NonIsomorphic,
}

/// What counts as "the same tree" when matching vertices.
///
/// `Profile` compares height, per-level widths, and per-level
/// child-count histograms. `Canonical` compares full rooted-tree
/// canonical codes, a strictly finer relation: equal codes imply equal
/// profiles, never the reverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CompareMode {
    #[default]
    Profile,
    Canonical,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchResult {
    pub verdict: Verdict,
    /// mapping[v] = image of vertex v of the first graph in the second,
    /// None where no equal-signature partner was left. Empty on size
    /// mismatch.
    pub mapping: Vec<Option<usize>>,
    pub mode: CompareMode,
    /// Set when the graphs already differ in vertex count and tree
    /// comparison never ran.
    pub size_mismatch: bool,
}

impl MatchResult {
    pub fn is_isomorphic(&self) -> bool {
        self.verdict == Verdict::Isomorphic
    }
}

/// True iff heights, per-level widths, and per-level child-count
/// histograms all agree.
pub fn profiles_equal(a: &TreeProfile, b: &TreeProfile) -> bool {
    a == b
}

/// Decide isomorphism: build every uniqueness tree of both graphs, then
/// greedily map each vertex of `g` (ascending) onto the first unmapped
/// vertex of `h` (ascending) with an equal tree signature. Isomorphic
/// iff the mapping comes out total.
pub fn match_graphs(g: &Graph, h: &Graph, mode: CompareMode) -> MatchResult {
    if g.n() != h.n() {
        return MatchResult {
            verdict: Verdict::NonIsomorphic,
            mapping: Vec::new(),
            mode,
            size_mismatch: true,
        };
    }
    let trees_g = build_all_trees(g);
    let trees_h = build_all_trees(h);
    let mapping = match mode {
        CompareMode::Profile => {
            let sig_g: Vec<TreeProfile> = trees_g.iter().map(UniquenessTree::profile).collect();
            let sig_h: Vec<TreeProfile> = trees_h.iter().map(UniquenessTree::profile).collect();
            greedy_match(&sig_g, &sig_h)
        }
        CompareMode::Canonical => {
            let sig_g: Vec<String> = trees_g.iter().map(canonical_tree_code).collect();
            let sig_h: Vec<String> = trees_h.iter().map(canonical_tree_code).collect();
            greedy_match(&sig_g, &sig_h)
        }
    };
    let verdict = if mapping.iter().all(Option::is_some) {
        Verdict::Isomorphic
    } else {
        Verdict::NonIsomorphic
    };
    MatchResult {
        verdict,
        mapping,
        mode,
        size_mismatch: false,
    }
}

fn greedy_match<S: PartialEq>(sig_g: &[S], sig_h: &[S]) -> Vec<Option<usize>> {
    let n = sig_g.len();
    let mut mapped_h = vec![false; n];
    let mut mapping = vec![None; n];
    for v in 0..n {
        for u in 0..n {
            if !mapped_h[u] && sig_g[v] == sig_h[u] {
                mapped_h[u] = true;
                mapping[v] = Some(u);
                break;
            }
        }
    }
    mapping
}

/// Canonical string for the rooted tree over {0,1}: a leaf encodes as
/// "01", an internal node as '0' + its children's codes sorted + '1'.
/// Two rooted trees are isomorphic iff their codes are equal.
pub fn canonical_tree_code(t: &UniquenessTree) -> String {
    // Children of a level's entries occupy consecutive spans of the next
    // level, so codes roll up level by level from the deepest.
    let mut below: Vec<String> = Vec::new();
    for level in t.levels().iter().rev() {
        let mut codes = Vec::with_capacity(level.len());
        let mut offset = 0;
        for entry in level {
            let span = &mut below[offset..offset + entry.child_count as usize];
            span.sort_unstable();
            let mut code =
                String::with_capacity(2 + span.iter().map(String::len).sum::<usize>());
            code.push('0');
            for child in span.iter() {
                code.push_str(child);
            }
            code.push('1');
            codes.push(code);
            offset += entry.child_count as usize;
        }
        below = codes;
    }
    below.pop().expect("a tree always has a root level")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{cube_q3, wagner_v8};
    use crate::graph::{Graph, Permutation};
    use crate::tree::build_uniqueness_tree;

    #[test]
    fn cube_and_wagner_profiles_differ_at_a() {
        let pg = build_uniqueness_tree(&cube_q3(), 0, 8).unwrap().profile();
        let ph = build_uniqueness_tree(&wagner_v8(), 0, 8).unwrap().profile();
        assert!(!profiles_equal(&pg, &ph));
        assert_eq!(pg.height, 2);
        assert!(ph.height >= 4);
    }

    #[test]
    fn profile_equality_is_reflexive() {
        let p = build_uniqueness_tree(&cube_q3(), 3, 8).unwrap().profile();
        assert!(profiles_equal(&p, &p));
    }

    #[test]
    fn example_pair_is_non_isomorphic_in_both_modes() {
        let g = cube_q3();
        let h = wagner_v8();
        for mode in [CompareMode::Profile, CompareMode::Canonical] {
            let r = match_graphs(&g, &h, mode);
            assert_eq!(r.verdict, Verdict::NonIsomorphic);
            assert!(!r.size_mismatch);
        }
    }

    #[test]
    fn self_match_yields_identity_mapping() {
        let g = cube_q3();
        let r = match_graphs(&g, &g, CompareMode::Profile);
        assert_eq!(r.verdict, Verdict::Isomorphic);
        let expected: Vec<Option<usize>> = (0..8).map(Some).collect();
        assert_eq!(r.mapping, expected);
    }

    #[test]
    fn permuted_copy_is_matched() {
        let g = wagner_v8();
        let p = Permutation::new(vec![3, 1, 4, 0, 6, 2, 7, 5]).unwrap();
        let h = g.apply_permutation(&p).unwrap();
        for mode in [CompareMode::Profile, CompareMode::Canonical] {
            assert_eq!(match_graphs(&g, &h, mode).verdict, Verdict::Isomorphic);
        }
    }

    #[test]
    fn size_mismatch_short_circuits() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let h = Graph::empty(3);
        let r = match_graphs(&g, &h, CompareMode::Profile);
        assert_eq!(r.verdict, Verdict::NonIsomorphic);
        assert!(r.size_mismatch);
        assert!(r.mapping.is_empty());
    }

    #[test]
    fn empty_pair_is_isomorphic() {
        let r = match_graphs(&Graph::empty(0), &Graph::empty(0), CompareMode::Profile);
        assert_eq!(r.verdict, Verdict::Isomorphic);
        assert!(!r.size_mismatch);
    }

    #[test]
    fn leaf_only_tree_encodes_as_01() {
        let g = Graph::empty(1);
        let t = build_uniqueness_tree(&g, 0, 1).unwrap();
        assert_eq!(canonical_tree_code(&t), "01");
    }

    #[test]
    fn root_with_two_leaf_children_encodes_as_001011() {
        // path 0-1-2 rooted at the middle, cut below level 1
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let t = build_uniqueness_tree(&g, 1, 1).unwrap();
        assert_eq!(canonical_tree_code(&t), "001011");
    }

    #[test]
    fn example_pair_canonical_codes_differ_at_a() {
        let tg = build_uniqueness_tree(&cube_q3(), 0, 8).unwrap();
        let th = build_uniqueness_tree(&wagner_v8(), 0, 8).unwrap();
        assert_ne!(canonical_tree_code(&tg), canonical_tree_code(&th));
    }

    #[test]
    fn canonical_code_ignores_child_emission_order() {
        // star with asymmetric arms: code must not depend on which arm
        // was walked first
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (2, 3), (3, 4)]).unwrap();
        let p = Permutation::new(vec![0, 2, 1, 3, 4]).unwrap();
        let h = g.apply_permutation(&p).unwrap();
        let tg = build_uniqueness_tree(&g, 0, 5).unwrap();
        let th = build_uniqueness_tree(&h, 0, 5).unwrap();
        assert_eq!(canonical_tree_code(&tg), canonical_tree_code(&th));
    }
}
