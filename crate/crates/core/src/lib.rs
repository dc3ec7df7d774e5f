//! Graph isomorphism testing with per-vertex uniqueness trees.
//!
//! Every vertex of a graph gets a rooted tree grown from its
//! neighborhood structure: a tree node expands only while its vertex
//! value is unique within its level. Two graphs are declared isomorphic
//! when their tree collections can be matched one-to-one by equal tree
//! signatures. The positive direction is reliable — isomorphic graphs
//! always match — while the negative direction is heuristic, and the
//! [`probe`] module ships a strongly regular pair that defeats it.
//!
//! The crate also carries everything needed to measure the method:
//! seeded generators for isomorphic and near-isomorphic pairs
//! ([`gen`]), an exact small-graph oracle ([`oracle`]), and timing
//! sweeps with log-log degree estimation ([`bench`]).

pub mod bench;
pub mod compare;
pub mod fixtures;
pub mod gen;
pub mod graph;
pub mod oracle;
pub mod probe;
pub mod tree;

pub use compare::{match_graphs, CompareMode, MatchResult, Verdict};
pub use graph::{Graph, GraphError, Permutation};
pub use tree::{build_all_trees, build_uniqueness_tree, TreeProfile, UniquenessTree};
