//! Python bindings: graphs, families, games, the solver and the verify suites.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use satgame::analysis::{self, bound, classify_p4_saturated, classify_p5_saturated, Theorem};
use satgame::verify::{self, Suite, VerifyOptions};
use satgame::{by_name, ForbiddenFamily, GameRecord, Move, Player, SolveResult, Solver, SolverConfig, Variant};

fn value_error(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse<T: std::str::FromStr>(s: &str) -> PyResult<T>
where
    T::Err: ToString,
{
    s.parse().map_err(value_error)
}

#[pyclass(name = "Graph", module = "satgame", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: satgame::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = satgame::Graph::from_edges(n, &edges).map_err(value_error)?;
        Ok(PyGraph { inner })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        let inner = satgame::Graph::from_graph6(text).map_err(value_error)?;
        Ok(PyGraph { inner })
    }

    fn to_graph6(&self) -> String {
        self.inner.to_graph6()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.n() {
            return Err(value_error(format!("vertex {v} out of range")));
        }
        Ok(self.inner.degree(v))
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.n() && v < self.inner.n() && self.inner.has_edge(u, v)
    }

    fn add_edge(&self, u: usize, v: usize) -> PyResult<Self> {
        let inner = self.inner.add_edge(u, v).map_err(value_error)?;
        Ok(PyGraph { inner })
    }

    /// graph6 of the canonical relabelling; equal iff isomorphic.
    fn canonical_key(&self) -> String {
        self.inner.canonical_key().graph6().to_string()
    }

    fn component_labels(&self) -> Vec<String> {
        satgame::labels(&self.inner).iter().map(ToString::to_string).collect()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.inner.to_graph6().hash(&mut h);
        h.finish()
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph({}, {:?})", self.inner.n(), self.edges())
    }
}

#[pyclass(name = "Family", module = "satgame", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyFamily {
    inner: ForbiddenFamily,
}

#[pymethods]
impl PyFamily {
    /// `P4`, `Pk:7`, `Trees:5`, `Star:4` (forbids K_{1,4}) or `List:<graph6>,...`.
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        Ok(PyFamily { inner: parse(spec)? })
    }

    fn is_free(&self, g: &PyGraph) -> bool {
        self.inner.is_free(&g.inner)
    }

    fn is_saturated(&self, g: &PyGraph) -> bool {
        self.inner.is_saturated(&g.inner)
    }

    fn legal_moves(&self, g: &PyGraph) -> PyResult<Vec<(usize, usize)>> {
        if !self.inner.is_free(&g.inner) {
            return Err(value_error("graph is not free of the family"));
        }
        Ok(self.inner.legal_moves(&g.inner).into_iter().map(Move::ends).collect())
    }

    fn creates_forbidden(&self, g: &PyGraph, u: usize, v: usize) -> PyResult<bool> {
        self.inner.creates_forbidden(&g.inner, Move::new(u, v)).map_err(value_error)
    }

    fn max_edges(&self, n: usize) -> usize {
        self.inner.max_edges(n)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Family({:?})", self.inner.to_string())
    }
}

#[pyclass(name = "GameRecord", module = "satgame", frozen)]
struct PyRecord {
    inner: GameRecord,
}

#[pymethods]
impl PyRecord {
    #[getter]
    fn score(&self) -> usize {
        self.inner.score
    }

    #[getter]
    fn terminal(&self) -> PyGraph {
        PyGraph { inner: self.inner.terminal }
    }

    /// `(player, action)` pairs, e.g. `("P", "0-1")` or `("P", "pass")`.
    #[getter]
    fn turns(&self) -> Vec<(String, String)> {
        self.inner
            .turns
            .iter()
            .map(|t| (t.player.to_string(), t.action.to_string()))
            .collect()
    }

    fn graphs(&self) -> PyResult<Vec<PyGraph>> {
        let gs = self.inner.graphs().map_err(value_error)?;
        Ok(gs.into_iter().map(|inner| PyGraph { inner }).collect())
    }

    fn to_json(&self) -> String {
        self.inner.to_json_line()
    }

    #[staticmethod]
    fn from_json(line: &str) -> PyResult<Self> {
        let inner = GameRecord::from_json_line(line).map_err(value_error)?;
        inner.verify().map_err(value_error)?;
        Ok(PyRecord { inner })
    }

    fn __repr__(&self) -> String {
        format!("GameRecord(n={}, family={}, score={})", self.inner.n, self.inner.family, self.inner.score)
    }
}

fn solve_output(r: SolveResult) -> (usize, Vec<String>) {
    (r.score, r.principal_variation.iter().map(ToString::to_string).collect())
}

fn solver(n: usize, family: &PyFamily, variant: &str, node_cap: Option<u64>, time_cap: Option<f64>) -> PyResult<Solver> {
    let config = SolverConfig {
        node_limit: node_cap,
        time_limit: time_cap.map(std::time::Duration::from_secs_f64),
        ..SolverConfig::default()
    };
    Solver::new(n, family.inner.clone(), parse(variant)?, config).map_err(value_error)
}

/// Game value and one optimal line. Raises `RuntimeError` on a cap.
#[pyfunction]
#[pyo3(signature = (n, family, first = "P", variant = "standard", node_cap = None, time_cap = None))]
fn solve(
    py: Python<'_>,
    n: usize,
    family: &PyFamily,
    first: &str,
    variant: &str,
    node_cap: Option<u64>,
    time_cap: Option<f64>,
) -> PyResult<(usize, Vec<String>)> {
    let s = solver(n, family, variant, node_cap, time_cap)?;
    let first: Player = parse(first)?;
    let r = py.detach(|| s.solve(first));
    r.map(solve_output).map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

/// Best value the free side reaches against the named strategy on `side`.
#[pyfunction]
#[pyo3(signature = (n, family, strategy, side, first = "P", variant = "standard"))]
fn best_response(
    py: Python<'_>,
    n: usize,
    family: &PyFamily,
    strategy: &str,
    side: &str,
    first: &str,
    variant: &str,
) -> PyResult<(usize, Vec<String>)> {
    let s = solver(n, family, variant, None, None)?;
    let fixed = by_name(strategy).map_err(value_error)?;
    let (side, first): (Player, Player) = (parse(side)?, parse(first)?);
    let r = py.detach(|| s.best_response(&*fixed, side, first));
    r.map(solve_output).map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

#[pyfunction]
#[pyo3(signature = (n, family, prolonger, shortener, first = "P", variant = "standard"))]
fn play(
    n: usize,
    family: &PyFamily,
    prolonger: &str,
    shortener: &str,
    first: &str,
    variant: &str,
) -> PyResult<PyRecord> {
    let p = by_name(prolonger).map_err(value_error)?;
    let s = by_name(shortener).map_err(value_error)?;
    let variant: Variant = parse(variant)?;
    let inner = satgame::play(n, family.inner.clone(), variant, parse(first)?, &*p, &*s).map_err(value_error)?;
    Ok(PyRecord { inner })
}

/// Saturated graphs on `n` vertices up to isomorphism, as graph6.
#[pyfunction]
fn enumerate_saturated(n: usize, family: &PyFamily) -> PyResult<Vec<String>> {
    let keys = analysis::enumerate_saturated(n, &family.inner).map_err(value_error)?;
    Ok(keys.iter().map(|k| k.graph6().to_string()).collect())
}

/// Component labels if `g` is P4- (or P5-) saturated, else `None`.
#[pyfunction]
fn classify(g: &PyGraph, path: usize) -> PyResult<Option<Vec<String>>> {
    let result = match path {
        4 => classify_p4_saturated(&g.inner),
        5 => classify_p5_saturated(&g.inner),
        _ => return Err(value_error("classifiers exist for paths on 4 and 5 vertices")),
    };
    Ok(result.ok().map(|c| c.labels.iter().map(ToString::to_string).collect()))
}

/// `(lower, upper)` as `fractions.Fraction`.
#[pyfunction]
#[pyo3(signature = (theorem, n, k = None))]
fn theorem_bound<'py>(py: Python<'py>, theorem: &str, n: usize, k: Option<usize>) -> PyResult<(Bound<'py, PyAny>, Bound<'py, PyAny>)> {
    let t: Theorem = parse(theorem)?;
    let r = bound(t, n, k).map_err(value_error)?;
    let fraction = py.import("fractions")?.getattr("Fraction")?;
    let lower = fraction.call1((r.lower.to_string(),))?;
    let upper = fraction.call1((r.upper.to_string(),))?;
    Ok((lower, upper))
}

/// Rows of a verify suite as dicts.
#[pyfunction]
#[pyo3(signature = (suite, n_max = None, seed = 0, games = 1000))]
fn run_verify<'py>(py: Python<'py>, suite: &str, n_max: Option<usize>, seed: u64, games: usize) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let suite: Suite = parse(suite)?;
    let opts = VerifyOptions {
        n_max,
        seed,
        games,
        ..VerifyOptions::default()
    };
    let rows = py.detach(|| verify::run(suite, &opts));
    rows.into_iter()
        .map(|r| {
            let d = PyDict::new(py);
            d.set_item("suite", r.suite.name())?;
            d.set_item("check", r.check)?;
            d.set_item("params", r.params)?;
            d.set_item("verdict", r.verdict.to_string())?;
            d.set_item("detail", r.detail)?;
            Ok(d)
        })
        .collect()
}

#[pymodule(name = "satgame")]
fn satgame_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyFamily>()?;
    m.add_class::<PyRecord>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(best_response, m)?)?;
    m.add_function(wrap_pyfunction!(play, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_saturated, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_bound, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    Ok(())
}
