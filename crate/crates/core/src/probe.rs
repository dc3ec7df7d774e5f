//! Hard-case probe: run the tree comparison on the rook/Shrikhande
//! strongly regular pair, whose non-isomorphism is certified here by a
//! local-structure check rather than assumed.
//!
//! The pair defeats every counting invariant the profile comparison
//! sees, so the algorithm's verdict on it is recorded verbatim, whatever
//! it is. The probe reports; it never fails.

use std::fmt::Write as _;

use crate::compare::{match_graphs, CompareMode, Verdict};
use crate::fixtures::{rook_4x4, shrikhande};
use crate::gen::isomorphic_pair;
use crate::graph::Graph;

const SELF_PAIR_SEED: u64 = 0xC0FFEE;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeReport {
    /// Triangles in the induced neighborhood of each rook vertex
    /// (sorted; all 2).
    pub rook_triangles: Vec<usize>,
    /// Same for the Shrikhande graph (all 0).
    pub shrikhande_triangles: Vec<usize>,
    /// True when the triangle-count multisets differ, certifying the
    /// pair non-isomorphic.
    pub local_check_distinguishes: bool,
    pub profile_verdict: Verdict,
    pub canonical_verdict: Verdict,
    /// Control: rook against a relabeled copy of itself.
    pub self_pair_verdict: Verdict,
}

/// Triangle count of the subgraph induced by each vertex's
/// neighborhood, sorted ascending.
pub fn neighborhood_triangle_counts(g: &Graph) -> Vec<usize> {
    let mut counts: Vec<usize> = (0..g.n())
        .map(|v| {
            let sub = g.induced_subgraph(g.neighbors(v).expect("in range"));
            triangle_count(&sub)
        })
        .collect();
    counts.sort_unstable();
    counts
}

fn triangle_count(g: &Graph) -> usize {
    let mut count = 0;
    for (u, v) in g.edges() {
        for w in (v + 1)..g.n() {
            if g.has_edge(u, w) && g.has_edge(v, w) {
                count += 1;
            }
        }
    }
    count
}

pub fn run_probe() -> ProbeReport {
    let rook = rook_4x4();
    let shri = shrikhande();

    let rook_triangles = neighborhood_triangle_counts(&rook);
    let shrikhande_triangles = neighborhood_triangle_counts(&shri);
    let local_check_distinguishes = rook_triangles != shrikhande_triangles;

    let (relabeled, _) = isomorphic_pair(&rook, SELF_PAIR_SEED);

    ProbeReport {
        local_check_distinguishes,
        rook_triangles,
        shrikhande_triangles,
        profile_verdict: match_graphs(&rook, &shri, CompareMode::Profile).verdict,
        canonical_verdict: match_graphs(&rook, &shri, CompareMode::Canonical).verdict,
        self_pair_verdict: match_graphs(&rook, &relabeled, CompareMode::Profile).verdict,
    }
}

impl ProbeReport {
    pub fn render(&self) -> String {
        let verdict = |v: Verdict| match v {
            Verdict::Isomorphic => "isomorphic",
            Verdict::NonIsomorphic => "non-isomorphic",
        };
        let mut out = String::new();
        let _ = writeln!(
            out,
            "probe pair: 4x4 rook's graph vs Shrikhande graph, both srg(16,6,2,2)"
        );
        let _ = writeln!(
            out,
            "local structure: neighborhood triangle counts {:?} vs {:?}",
            summarize(&self.rook_triangles),
            summarize(&self.shrikhande_triangles),
        );
        if self.local_check_distinguishes {
            let _ = writeln!(
                out,
                "local structure verdict: non-isomorphic (neighborhood structure differs)"
            );
        } else {
            let _ = writeln!(out, "local structure verdict: inconclusive");
        }
        let _ = writeln!(
            out,
            "tree comparison verdict (profile mode): {}",
            verdict(self.profile_verdict)
        );
        let _ = writeln!(
            out,
            "tree comparison verdict (canonical mode): {}",
            verdict(self.canonical_verdict)
        );
        if self.profile_verdict != self.canonical_verdict {
            let _ = writeln!(out, "note: comparison modes disagree on this pair");
        }
        if self.profile_verdict == Verdict::Isomorphic && self.local_check_distinguishes {
            let _ = writeln!(
                out,
                "note: the tree comparison verdict is a false positive on this pair"
            );
        }
        let _ = writeln!(
            out,
            "self-pair control (rook vs relabeled rook): {}",
            verdict(self.self_pair_verdict)
        );
        out
    }
}

// "16 x 2" style summary when all vertices agree, else the raw list
fn summarize(counts: &[usize]) -> String {
    match counts {
        [] => "none".to_string(),
        [first, rest @ ..] if rest.iter().all(|c| c == first) => {
            format!("{} x {}", counts.len(), first)
        }
        _ => format!("{counts:?}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn local_check_certifies_the_pair_non_isomorphic() {
        let report = run_probe();
        assert!(report.local_check_distinguishes);
        assert_eq!(report.rook_triangles, vec![2; 16]);
        assert_eq!(report.shrikhande_triangles, vec![0; 16]);
    }

    #[test]
    fn self_pair_control_is_isomorphic() {
        assert_eq!(run_probe().self_pair_verdict, Verdict::Isomorphic);
    }

    #[test]
    fn report_renders_all_verdicts() {
        let report = run_probe();
        let text = report.render();
        assert!(text.contains("local structure verdict: non-isomorphic"));
        assert!(text.contains("profile mode"));
        assert!(text.contains("canonical mode"));
        assert!(text.contains("self-pair control"));
    }
}
