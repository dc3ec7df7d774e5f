//! Python bindings for the uniqueness-tree isomorphism toolkit.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use unitree_core::bench;
use unitree_core::compare::{self, CompareMode, Verdict};
use unitree_core::fixtures;
use unitree_core::gen;
use unitree_core::graph::{Graph, Permutation};
use unitree_core::oracle::{self, OracleVerdict, DEFAULT_ORACLE_BUDGET};
use unitree_core::probe;
use unitree_core::tree::{self, UniquenessTree};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_mode(mode: &str) -> PyResult<CompareMode> {
    match mode {
        "profile" => Ok(CompareMode::Profile),
        "canonical" => Ok(CompareMode::Canonical),
        other => Err(value_err(format!(
            "unknown mode {other:?}, expected \"profile\" or \"canonical\""
        ))),
    }
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Isomorphic => "isomorphic",
        Verdict::NonIsomorphic => "non-isomorphic",
    }
}

#[pyclass(frozen, name = "Graph")]
#[derive(Clone)]
struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    /// Parse the edge-list text format ("n m" header, then edge lines).
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: Graph::from_edge_list(text).map_err(value_err)?,
        })
    }

    #[staticmethod]
    fn empty(n: usize) -> Self {
        PyGraph {
            inner: Graph::empty(n),
        }
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        Ok(self.inner.neighbors(v).map_err(value_err)?.to_vec())
    }

    fn degree_sequence(&self) -> Vec<usize> {
        self.inner.degree_sequence()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn to_edge_list(&self) -> String {
        self.inner.to_edge_list()
    }

    fn apply_permutation(&self, map: Vec<usize>) -> PyResult<Self> {
        let p = Permutation::new(map).map_err(value_err)?;
        Ok(PyGraph {
            inner: self.inner.apply_permutation(&p).map_err(value_err)?,
        })
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, edges={})", self.inner.n(), self.inner.edge_count())
    }
}

#[pyclass(frozen, name = "UniquenessTree")]
struct PyUniquenessTree {
    inner: UniquenessTree,
}

#[pymethods]
impl PyUniquenessTree {
    #[getter]
    fn root(&self) -> usize {
        self.inner.root()
    }

    #[getter]
    fn height(&self) -> usize {
        self.inner.height()
    }

    /// Levels as lists of (vertex, child_count) pairs.
    fn levels(&self) -> Vec<Vec<(u32, u32)>> {
        self.inner
            .levels()
            .iter()
            .map(|level| level.iter().map(|e| (e.vertex, e.child_count)).collect())
            .collect()
    }

    fn widths(&self) -> Vec<usize> {
        self.inner.profile().widths
    }

    /// Per-level histograms mapping child count to entry count.
    fn child_histograms(&self) -> Vec<std::collections::BTreeMap<u32, usize>> {
        self.inner.profile().child_histograms
    }

    fn dump(&self) -> String {
        self.inner.dump()
    }

    fn canonical_code(&self) -> String {
        compare::canonical_tree_code(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "UniquenessTree(root={}, height={})",
            self.inner.root(),
            self.inner.height()
        )
    }
}

#[pyclass(frozen, name = "MatchResult")]
struct PyMatchResult {
    #[pyo3(get)]
    verdict: String,
    #[pyo3(get)]
    mapping: Vec<Option<usize>>,
    #[pyo3(get)]
    mode: String,
    #[pyo3(get)]
    size_mismatch: bool,
}

#[pymethods]
impl PyMatchResult {
    fn is_isomorphic(&self) -> bool {
        self.verdict == "isomorphic"
    }

    fn __repr__(&self) -> String {
        format!(
            "MatchResult(verdict={:?}, mode={:?})",
            self.verdict, self.mode
        )
    }
}

#[pyclass(frozen, name = "OracleResult")]
struct PyOracleResult {
    #[pyo3(get)]
    verdict: String,
    #[pyo3(get)]
    witness: Option<Vec<usize>>,
}

#[pymethods]
impl PyOracleResult {
    fn __repr__(&self) -> String {
        format!("OracleResult(verdict={:?})", self.verdict)
    }
}

#[pyclass(frozen, name = "BenchRecord")]
#[derive(Clone)]
struct PyBenchRecord {
    inner: bench::BenchRecord,
}

#[pymethods]
impl PyBenchRecord {
    #[getter]
    fn n(&self) -> usize {
        self.inner.n
    }

    #[getter]
    fn pair_kind(&self) -> String {
        self.inner.pair_kind.to_string()
    }

    #[getter]
    fn pairs(&self) -> usize {
        self.inner.pairs
    }

    #[getter]
    fn elapsed_ms(&self) -> f64 {
        self.inner.elapsed_ms
    }

    #[getter]
    fn iso_verdicts(&self) -> usize {
        self.inner.iso_verdicts
    }

    #[getter]
    fn noniso_verdicts(&self) -> usize {
        self.inner.noniso_verdicts
    }

    #[getter]
    fn seed(&self) -> u64 {
        self.inner.seed
    }

    #[getter]
    fn generator(&self) -> String {
        self.inner.generator.clone()
    }

    fn __repr__(&self) -> String {
        format!(
            "BenchRecord(n={}, pairs={}, elapsed_ms={})",
            self.inner.n, self.inner.pairs, self.inner.elapsed_ms
        )
    }
}

#[pyclass(frozen, name = "FitResult")]
struct PyFitResult {
    #[pyo3(get)]
    slope: f64,
    #[pyo3(get)]
    intercept: f64,
    #[pyo3(get)]
    r_squared: f64,
    #[pyo3(get)]
    n_range: (usize, usize),
    #[pyo3(get)]
    used_points: usize,
    #[pyo3(get)]
    excluded_zero: usize,
}

#[pymethods]
impl PyFitResult {
    fn __repr__(&self) -> String {
        format!(
            "FitResult(slope={}, r_squared={})",
            self.slope, self.r_squared
        )
    }
}

/// Decide isomorphism by matching uniqueness-tree signatures.
#[pyfunction]
#[pyo3(signature = (g, h, mode = "profile"))]
fn match_graphs(g: &PyGraph, h: &PyGraph, mode: &str) -> PyResult<PyMatchResult> {
    let result = compare::match_graphs(&g.inner, &h.inner, parse_mode(mode)?);
    Ok(PyMatchResult {
        verdict: verdict_str(result.verdict).to_string(),
        mapping: result.mapping,
        mode: mode.to_string(),
        size_mismatch: result.size_mismatch,
    })
}

/// Uniqueness tree of one root vertex (height capped at n by default).
#[pyfunction]
#[pyo3(signature = (g, root, height_cap = None))]
fn build_tree(g: &PyGraph, root: usize, height_cap: Option<usize>) -> PyResult<PyUniquenessTree> {
    let cap = height_cap.unwrap_or(g.inner.n());
    Ok(PyUniquenessTree {
        inner: tree::build_uniqueness_tree(&g.inner, root, cap).map_err(value_err)?,
    })
}

/// G(n, p) random graph, deterministic given the seed.
#[pyfunction]
#[pyo3(signature = (n, edge_probability = 0.5, seed = 0))]
fn random_graph(n: usize, edge_probability: f64, seed: u64) -> PyResult<PyGraph> {
    let cfg = gen::GenConfig {
        n,
        edge_probability,
        seed,
    };
    Ok(PyGraph {
        inner: gen::random_graph(&cfg).map_err(value_err)?,
    })
}

/// Relabeled copy of g plus the permutation that produced it.
#[pyfunction]
fn isomorphic_pair(g: &PyGraph, seed: u64) -> (PyGraph, Vec<usize>) {
    let (h, p) = gen::isomorphic_pair(&g.inner, seed);
    (PyGraph { inner: h }, p.as_slice().to_vec())
}

/// Relabeled copy of g with one random edge replaced by a random
/// non-edge.
#[pyfunction]
fn perturbed_pair(g: &PyGraph, seed: u64) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: gen::perturbed_pair(&g.inner, seed).map_err(value_err)?,
    })
}

/// Exact isomorphism decision by backtracking search.
#[pyfunction]
#[pyo3(signature = (g, h, budget = DEFAULT_ORACLE_BUDGET))]
fn brute_force_isomorphic(g: &PyGraph, h: &PyGraph, budget: u64) -> PyOracleResult {
    let result = oracle::brute_force_isomorphic(&g.inner, &h.inner, budget);
    PyOracleResult {
        verdict: match result.verdict {
            OracleVerdict::Isomorphic => "isomorphic".to_string(),
            OracleVerdict::NonIsomorphic => "non-isomorphic".to_string(),
            OracleVerdict::Inconclusive => "inconclusive".to_string(),
        },
        witness: result.witness.map(|w| w.as_slice().to_vec()),
    }
}

/// True iff the permutation maps g exactly onto h.
#[pyfunction]
fn verify_witness(g: &PyGraph, h: &PyGraph, witness: Vec<usize>) -> PyResult<bool> {
    let p = Permutation::new(witness).map_err(value_err)?;
    oracle::verify_witness(&g.inner, &h.inner, &p).map_err(value_err)
}

/// Every labeled simple graph on n vertices (n <= 6).
#[pyfunction]
fn enumerate_all_graphs(n: usize) -> PyResult<Vec<PyGraph>> {
    Ok(oracle::enumerate_all_graphs(n)
        .map_err(value_err)?
        .map(|inner| PyGraph { inner })
        .collect())
}

/// Effectiveness/timing sweep; one record per graph size.
#[pyfunction]
#[pyo3(signature = (kind, n_min, n_max, pairs_per_n, edge_probability = 0.5, seed = 0))]
fn run_sweep(
    kind: &str,
    n_min: usize,
    n_max: usize,
    pairs_per_n: usize,
    edge_probability: f64,
    seed: u64,
) -> PyResult<Vec<PyBenchRecord>> {
    let cfg = bench::SweepConfig {
        kind: kind.parse().map_err(value_err)?,
        n_min,
        n_max,
        pairs_per_n,
        edge_probability,
        seed,
    };
    Ok(bench::run_sweep(&cfg)
        .map_err(value_err)?
        .into_iter()
        .map(|inner| PyBenchRecord { inner })
        .collect())
}

/// Least-squares slope of ln(elapsed_ms) against ln(n).
#[pyfunction]
#[pyo3(signature = (records, n_min_fit = 21))]
fn loglog_fit(records: Vec<PyBenchRecord>, n_min_fit: usize) -> PyResult<PyFitResult> {
    let inner: Vec<bench::BenchRecord> = records.into_iter().map(|r| r.inner).collect();
    let fit = bench::loglog_fit(&inner, n_min_fit).map_err(value_err)?;
    Ok(PyFitResult {
        slope: fit.slope,
        intercept: fit.intercept,
        r_squared: fit.r_squared,
        n_range: fit.n_range,
        used_points: fit.used_points,
        excluded_zero: fit.excluded_zero,
    })
}

/// Rendered report of the rook/Shrikhande hard-pair probe.
#[pyfunction]
fn run_probe() -> String {
    probe::run_probe().render()
}

#[pyfunction]
fn cube_q3() -> PyGraph {
    PyGraph {
        inner: fixtures::cube_q3(),
    }
}

#[pyfunction]
fn wagner_v8() -> PyGraph {
    PyGraph {
        inner: fixtures::wagner_v8(),
    }
}

#[pyfunction]
fn rook_4x4() -> PyGraph {
    PyGraph {
        inner: fixtures::rook_4x4(),
    }
}

#[pyfunction]
fn shrikhande() -> PyGraph {
    PyGraph {
        inner: fixtures::shrikhande(),
    }
}

#[pymodule]
fn unitree(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyUniquenessTree>()?;
    m.add_class::<PyMatchResult>()?;
    m.add_class::<PyOracleResult>()?;
    m.add_class::<PyBenchRecord>()?;
    m.add_class::<PyFitResult>()?;
    m.add_function(wrap_pyfunction!(match_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(build_tree, m)?)?;
    m.add_function(wrap_pyfunction!(random_graph, m)?)?;
    m.add_function(wrap_pyfunction!(isomorphic_pair, m)?)?;
    m.add_function(wrap_pyfunction!(perturbed_pair, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(verify_witness, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_all_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(run_sweep, m)?)?;
    m.add_function(wrap_pyfunction!(loglog_fit, m)?)?;
    m.add_function(wrap_pyfunction!(run_probe, m)?)?;
    m.add_function(wrap_pyfunction!(cube_q3, m)?)?;
    m.add_function(wrap_pyfunction!(wagner_v8, m)?)?;
    m.add_function(wrap_pyfunction!(rook_4x4, m)?)?;
    m.add_function(wrap_pyfunction!(shrikhande, m)?)?;
    m.add("DEFAULT_ORACLE_BUDGET", DEFAULT_ORACLE_BUDGET)?;
    m.add("GENERATOR_ID", gen::GENERATOR_ID)?;
    Ok(())
}
