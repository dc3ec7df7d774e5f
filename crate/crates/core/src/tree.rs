//! Uniqueness-tree generation and profile extraction.
//!
//! Each vertex v of a graph gets a rooted tree T(v): level 0 holds v
//! alone, and a level entry expands into one child per graph neighbor
//! exactly when its vertex value occurs exactly once within that level.
//! Entries whose value repeats within the level become leaves. The tree
//! self-terminates when a level has no unique entry, or is cut at a
//! height cap.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::graph::{Graph, GraphError};

/// One node of a uniqueness tree: the graph vertex it stands for and
/// how many children it produced (0 for leaves).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeEntry {
    pub vertex: u32,
    pub child_count: u32,
}

/// The leveled uniqueness tree of one root vertex.
///
/// Levels store entries in generation order: children of the level's
/// unique entries, each expanding its neighbors in ascending order.
/// Children of consecutive expanded entries occupy consecutive spans of
/// the next level, which is enough to reconstruct parent→child edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniquenessTree {
    root: usize,
    levels: Vec<Vec<TreeEntry>>,
}

impl UniquenessTree {
    pub fn root(&self) -> usize {
        self.root
    }

    /// Number of levels below the root.
    pub fn height(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn levels(&self) -> &[Vec<TreeEntry>] {
        &self.levels
    }

    pub fn entry_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    /// Comparison signature: height, per-level widths, per-level
    /// child-count histograms.
    pub fn profile(&self) -> TreeProfile {
        let widths = self.levels.iter().map(Vec::len).collect();
        let child_histograms = self
            .levels
            .iter()
            .map(|level| {
                let mut hist = BTreeMap::new();
                for entry in level {
                    *hist.entry(entry.child_count).or_insert(0usize) += 1;
                }
                hist
            })
            .collect();
        TreeProfile {
            height: self.height(),
            widths,
            child_histograms,
        }
    }

    /// Text dump: height line first, then one line per level with
    /// entries as "vertex:child_count".
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "height {}", self.height());
        for level in &self.levels {
            let line: Vec<String> = level
                .iter()
                .map(|e| format!("{}:{}", e.vertex, e.child_count))
                .collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }
}

/// Height, per-level widths, and per-level child-count histograms
/// (count value → number of entries with that count; zero-valued bins
/// are omitted, which preserves histogram equality).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeProfile {
    pub height: usize,
    pub widths: Vec<usize>,
    pub child_histograms: Vec<BTreeMap<u32, usize>>,
}

/// Grow the uniqueness tree rooted at `root`, stopping when a level has
/// no unique entries or the height reaches `height_cap`.
pub fn build_uniqueness_tree(
    g: &Graph,
    root: usize,
    height_cap: usize,
) -> Result<UniquenessTree, GraphError> {
    if root >= g.n() {
        return Err(GraphError::VertexOutOfRange {
            vertex: root,
            n: g.n(),
        });
    }
    let mut levels = vec![vec![TreeEntry {
        vertex: root as u32,
        child_count: 0,
    }]];

    while levels.len() - 1 < height_cap {
        let unique = unique_flags(levels.last().unwrap());
        let mut next = Vec::new();
        let current = levels.last_mut().unwrap();
        for (entry, is_unique) in current.iter_mut().zip(&unique) {
            if *is_unique {
                let neighbors = g.neighbors(entry.vertex as usize).expect("in range");
                entry.child_count = neighbors.len() as u32;
                for &w in neighbors {
                    next.push(TreeEntry {
                        vertex: w as u32,
                        child_count: 0,
                    });
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }

    Ok(UniquenessTree { root, levels })
}

/// One tree per vertex, each capped at height n.
pub fn build_all_trees(g: &Graph) -> Vec<UniquenessTree> {
    (0..g.n())
        .map(|v| build_uniqueness_tree(g, v, g.n()).expect("root in range"))
        .collect()
}

// An entry is unique iff its vertex value appears exactly once in the
// level, decided by a full pairwise scan of the level's entries. The
// scan is the dominant cost of generation and is what the measured
// scaling exponent of the bench sweeps reflects.
fn unique_flags(level: &[TreeEntry]) -> Vec<bool> {
    level
        .iter()
        .map(|entry| {
            level
                .iter()
                .filter(|other| other.vertex == entry.vertex)
                .count()
                == 1
        })
        .collect()
}
