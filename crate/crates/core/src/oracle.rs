//! Exact isomorphism decision for small graphs by backtracking search,
//! plus exhaustive enumeration of all labeled graphs up to n = 6.
//!
//! The search assigns images to vertices in descending-degree order,
//! pruning candidates on degree mismatch and on edge consistency with
//! everything assigned so far. It is complete: within budget, the
//! verdict is ground truth.

use thiserror::Error;

use crate::graph::{Graph, GraphError, Permutation};

/// Default search budget in visited assignment nodes.
pub const DEFAULT_ORACLE_BUDGET: u64 = 10_000_000;

/// Largest n accepted by [`enumerate_all_graphs`] (2^15 graphs at n = 6).
pub const MAX_ENUMERATION_N: usize = 6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("enumeration refused for n = {0}: limited to n ≤ {MAX_ENUMERATION_N}")]
    EnumerationTooLarge(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleVerdict {
    Isomorphic,
    NonIsomorphic,
    /// Budget exhausted before the search completed; no verdict.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub verdict: OracleVerdict,
    /// Present exactly when the verdict is isomorphic; applying it to
    /// the first graph yields a graph edge-set-equal to the second.
    pub witness: Option<Permutation>,
}

impl OracleResult {
    fn concluded(verdict: OracleVerdict) -> Self {
        OracleResult {
            verdict,
            witness: None,
        }
    }
}

/// True iff `p` maps `g` exactly onto `h`.
pub fn verify_witness(g: &Graph, h: &Graph, p: &Permutation) -> Result<bool, GraphError> {
    Ok(g.apply_permutation(p)? == *h)
}

/// Exact isomorphism test by backtracking, spending at most `budget`
/// search nodes.
pub fn brute_force_isomorphic(g: &Graph, h: &Graph, budget: u64) -> OracleResult {
    if g.n() != h.n() {
        return OracleResult::concluded(OracleVerdict::NonIsomorphic);
    }
    if g.degree_sequence() != h.degree_sequence() {
        return OracleResult::concluded(OracleVerdict::NonIsomorphic);
    }
    let n = g.n();
    if n == 0 {
        return OracleResult {
            verdict: OracleVerdict::Isomorphic,
            witness: Some(Permutation::identity(0)),
        };
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));

    let mut search = Search {
        g,
        h,
        order: &order,
        image: vec![usize::MAX; n],
        used: vec![false; n],
        nodes_left: budget,
    };
    match search.assign(0) {
        Outcome::Found => {
            let p = Permutation::new(search.image).expect("assignment is a bijection");
            debug_assert_eq!(verify_witness(g, h, &p), Ok(true));
            OracleResult {
                verdict: OracleVerdict::Isomorphic,
                witness: Some(p),
            }
        }
        Outcome::NotFound => OracleResult::concluded(OracleVerdict::NonIsomorphic),
        Outcome::Exhausted => OracleResult::concluded(OracleVerdict::Inconclusive),
    }
}

enum Outcome {
    Found,
    NotFound,
    Exhausted,
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: &'a [usize],
    /// image[v] = assigned vertex of h, usize::MAX while unassigned
    image: Vec<usize>,
    used: Vec<bool>,
    nodes_left: u64,
}

impl Search<'_> {
    fn assign(&mut self, depth: usize) -> Outcome {
        if depth == self.order.len() {
            return Outcome::Found;
        }
        let v = self.order[depth];
        for u in 0..self.h.n() {
            if self.used[u] || self.h.degree(u) != self.g.degree(v) {
                continue;
            }
            if self.nodes_left == 0 {
                return Outcome::Exhausted;
            }
            self.nodes_left -= 1;
            if !self.consistent(v, u) {
                continue;
            }
            self.image[v] = u;
            self.used[u] = true;
            match self.assign(depth + 1) {
                Outcome::NotFound => {}
                done => return done,
            }
            self.image[v] = usize::MAX;
            self.used[u] = false;
        }
        Outcome::NotFound
    }

    // edge(v, w) in g ⟺ edge(u, image(w)) in h, for every assigned w
    fn consistent(&self, v: usize, u: usize) -> bool {
        for (w, &iw) in self.image.iter().enumerate() {
            if iw == usize::MAX {
                continue;
            }
            if self.g.has_edge(v, w) != self.h.has_edge(u, iw) {
                return false;
            }
        }
        true
    }
}

/// Every labeled simple graph on `n` vertices, exactly once, in a fixed
/// order (edge masks ascending over lexicographic vertex pairs).
pub fn enumerate_all_graphs(n: usize) -> Result<GraphEnumeration, OracleError> {
    if n > MAX_ENUMERATION_N {
        return Err(OracleError::EnumerationTooLarge(n));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let end = 1u64 << pairs.len();
    Ok(GraphEnumeration {
        n,
        pairs,
        next_mask: 0,
        end,
    })
}

#[derive(Debug)]
pub struct GraphEnumeration {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next_mask: u64,
    end: u64,
}

impl Iterator for GraphEnumeration {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next_mask == self.end {
            return None;
        }
        let mask = self.next_mask;
        self.next_mask += 1;
        let edges = self
            .pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Some(Graph::from_edges(self.n, edges).expect("enumerated edges are valid"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next_mask) as usize;
        (left, Some(left))
    }
}
