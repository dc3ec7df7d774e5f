//! Simple undirected graphs as sorted adjacency lists, plus vertex
//! permutations and the edge-list text format.

use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {vertex} out of range for graph of size {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("permutation length {perm} does not match graph size {n}")]
    LengthMismatch { perm: usize, n: usize },
    #[error("permutation is not a bijection: {0}")]
    NotBijective(String),
}

/// A finite simple undirected graph over dense 0-indexed vertices.
///
/// Adjacency lists are kept sorted ascending and deduplicated, so two
/// graphs are equal exactly when their edge sets are equal.
/// Immutable after construction; all operations are pure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
        }
    }

    /// Build a graph from undirected edges. Duplicate pairs and both
    /// orientations of the same pair collapse to one edge.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> Result<&[usize], GraphError> {
        self.adj
            .get(v)
            .map(Vec::as_slice)
            .ok_or(GraphError::VertexOutOfRange { vertex: v, n: self.n })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Degrees sorted non-increasing.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        degs
    }

    /// Edges as (u, v) with u < v, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Image graph under `p`: the result has edge (p[u], p[v]) iff this
    /// graph has edge (u, v).
    pub fn apply_permutation(&self, p: &Permutation) -> Result<Graph, GraphError> {
        if p.len() != self.n {
            return Err(GraphError::LengthMismatch {
                perm: p.len(),
                n: self.n,
            });
        }
        let mut adj = vec![Vec::new(); self.n];
        for (u, list) in self.adj.iter().enumerate() {
            let pu = p.image(u);
            for &v in list {
                adj[pu].push(p.image(v));
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n: self.n, adj })
    }

    /// Parse the edge-list text format: a header line "n m", then m
    /// lines "u v". Blank lines and lines starting with '#' are ignored;
    /// CRLF endings are accepted. Repeated and reversed edge lines
    /// collapse to one undirected edge.
    pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .enumerate()
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_no, header) = lines.next().ok_or_else(|| GraphError::Parse {
            line: 0,
            msg: "empty document, expected header \"n m\"".into(),
        })?;
        let mut parts = header.split_whitespace();
        let n: usize = parse_field(parts.next(), header_no, "vertex count")?;
        let m: usize = parse_field(parts.next(), header_no, "edge count")?;
        if parts.next().is_some() {
            return Err(GraphError::Parse {
                line: header_no + 1,
                msg: format!("header has trailing fields: {header:?}"),
            });
        }

        let mut edges = Vec::with_capacity(m);
        for (no, line) in lines {
            let mut parts = line.split_whitespace();
            let u: usize = parse_field(parts.next(), no, "edge endpoint")?;
            let v: usize = parse_field(parts.next(), no, "edge endpoint")?;
            if parts.next().is_some() {
                return Err(GraphError::Parse {
                    line: no + 1,
                    msg: format!("edge line has trailing fields: {line:?}"),
                });
            }
            if u == v {
                return Err(GraphError::Parse {
                    line: no + 1,
                    msg: format!("self-loop {u} {v}"),
                });
            }
            if u >= n || v >= n {
                return Err(GraphError::Parse {
                    line: no + 1,
                    msg: format!("vertex index out of range in {line:?} (n = {n})"),
                });
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: header_no + 1,
                msg: format!("header declares {m} edge lines, found {}", edges.len()),
            });
        }
        Graph::from_edges(n, edges)
    }

    /// Serialize to the edge-list text format: "n m" header, then edges
    /// with u < v sorted lexicographically.
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, edges.len());
        for (u, v) in edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Subgraph induced on `vertices`, relabeled densely in the order
    /// given.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                if index[w] != usize::MAX {
                    adj[i].push(index[w]);
                }
            }
            adj[i].sort_unstable();
        }
        Graph {
            n: vertices.len(),
            adj,
        }
    }
}

fn parse_field(field: Option<&str>, line_no: usize, what: &str) -> Result<usize, GraphError> {
    let field = field.ok_or_else(|| GraphError::Parse {
        line: line_no + 1,
        msg: format!("missing {what}"),
    })?;
    field.parse().map_err(|_| GraphError::Parse {
        line: line_no + 1,
        msg: format!("invalid {what}: {field:?}"),
    })
}

/// A bijection on {0, …, n−1}; `map[i]` is the image of vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            map: (0..n).collect(),
        }
    }

    /// Validates that `map` is a bijection on {0, …, len−1}.
    pub fn new(map: Vec<usize>) -> Result<Self, GraphError> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &i in &map {
            if i >= n {
                return Err(GraphError::NotBijective(format!(
                    "image {i} out of range for length {n}"
                )));
            }
            if seen[i] {
                return Err(GraphError::NotBijective(format!("image {i} repeated")));
            }
            seen[i] = true;
        }
        Ok(Permutation { map })
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn image(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.map.len()];
        for (i, &pi) in self.map.iter().enumerate() {
            inv[pi] = i;
        }
        Permutation { map: inv }
    }
}
