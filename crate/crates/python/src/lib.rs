//! Python bindings. Settings are chosen with `strict=True/False`
//! (non-strict by default); size guards raise `SizeGuardError`, every other
//! library error raises `ValueError`.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use tempspan::reductions::{self, CnfFormula, GadgetMeta, SetCoverInstance};
use tempspan::{Arrival, Error, Label, SearchLimits, Setting, Time, Vertex, Via};

create_exception!(tempspan_py, SizeGuardError, PyValueError);

fn err(e: Error) -> PyErr {
    match e {
        Error::SizeGuard { .. } => SizeGuardError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn setting(strict: bool) -> Setting {
    if strict {
        Setting::Strict
    } else {
        Setting::NonStrict
    }
}

fn limits(max_n: Option<usize>, max_edges: Option<usize>) -> SearchLimits {
    let mut l = SearchLimits::default();
    if let Some(n) = max_n {
        l.max_vertices = n;
    }
    if let Some(m) = max_edges {
        l.max_edges = m;
    }
    l
}

type EdgeTuple = (Vertex, Vertex, Vec<Label>);

#[pyclass(
    name = "TemporalGraph",
    module = "tempspan_py",
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
struct PyTemporalGraph {
    inner: tempspan::TemporalGraph,
}

impl From<tempspan::TemporalGraph> for PyTemporalGraph {
    fn from(inner: tempspan::TemporalGraph) -> Self {
        PyTemporalGraph { inner }
    }
}

#[pymethods]
impl PyTemporalGraph {
    /// `TemporalGraph(n, [(u, v, [labels...]), ...])`
    #[new]
    #[pyo3(signature = (n, edges=Vec::new()))]
    fn new(n: usize, edges: Vec<EdgeTuple>) -> PyResult<Self> {
        tempspan::TemporalGraph::new(n, edges)
            .map(Into::into)
            .map_err(err)
    }

    /// Reads the `.tg` text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        tempspan::parse_temporal_graph(text)
            .map(Into::into)
            .map_err(err)
    }

    fn serialize(&self) -> String {
        tempspan::serialize_temporal_graph(&self.inner)
    }

    #[pyo3(signature = (names=None))]
    fn to_dot(&self, names: Option<Vec<String>>) -> PyResult<String> {
        match names {
            None => Ok(tempspan::to_dot(&self.inner)),
            Some(ns) if ns.len() == self.inner.n() => {
                Ok(tempspan::to_dot_named(&self.inner, |v| ns[v].clone()))
            }
            Some(ns) => Err(PyValueError::new_err(format!(
                "{} names for {} vertices",
                ns.len(),
                self.inner.n()
            ))),
        }
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    /// Largest label (0 for an edgeless graph).
    #[getter]
    fn lifetime(&self) -> Label {
        self.inner.lifetime()
    }

    fn edges(&self) -> Vec<EdgeTuple> {
        self.inner
            .edges()
            .map(|(e, ls)| (e.u, e.v, ls.to_vec()))
            .collect()
    }

    fn labels(&self, u: Vertex, v: Vertex) -> Option<Vec<Label>> {
        self.inner.labels(u, v).map(<[Label]>::to_vec)
    }

    fn snapshot(&self, t: Label) -> Vec<(Vertex, Vertex)> {
        self.inner
            .snapshot(t)
            .into_iter()
            .map(|e| (e.u, e.v))
            .collect()
    }

    /// `{"simple": bool, "proper": bool, "happy": bool}`
    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let c = self.inner.classify();
        let d = PyDict::new(py);
        d.set_item("simple", c.simple)?;
        d.set_item("proper", c.proper)?;
        d.set_item("happy", c.happy)?;
        Ok(d)
    }

    fn __repr__(&self) -> String {
        format!(
            "TemporalGraph(n={}, edges={}, lifetime={})",
            self.inner.n(),
            self.inner.edge_count(),
            self.inner.lifetime()
        )
    }

    fn __len__(&self) -> usize {
        self.inner.edge_count()
    }
}

fn time(t: Time) -> Option<Label> {
    match t {
        Time::At(l) => Some(l),
        _ => None,
    }
}

type TripletTuple = (Option<Vertex>, Option<Label>, Option<Label>);
type BiPathTuple = (Vec<Vertex>, Vec<Label>, Vec<Label>);

fn bipath_tuple(p: tempspan::BiPath) -> BiPathTuple {
    (p.vertices, p.forward, p.backward)
}

/// Outcome of the triplet fixed point from one source.
#[pyclass(name = "BipathRun", module = "tempspan_py")]
struct PyBipathRun {
    inner: tempspan::BipathRun,
}

#[pymethods]
impl PyBipathRun {
    #[getter]
    fn source(&self) -> Vertex {
        self.inner.source()
    }

    /// `(via, arrive, depart)` triplets at `v`; the source's sentinel is
    /// `(None, None, None)`.
    fn triplets(&self, v: Vertex) -> PyResult<Vec<TripletTuple>> {
        self.check(v)?;
        Ok(self
            .inner
            .set(v)
            .iter()
            .map(|t| {
                let via = match t.via {
                    Via::Source => None,
                    Via::Vertex(u) => Some(u),
                };
                (via, time(t.arrive), time(t.depart))
            })
            .collect())
    }

    fn reaches(&self, v: Vertex) -> PyResult<bool> {
        self.check(v)?;
        Ok(self.inner.reaches(v))
    }

    fn reaches_all(&self) -> bool {
        self.inner.reaches_all()
    }

    /// `(vertices, forward_labels, backward_labels)` or `None`.
    fn reconstruct(&self, v: Vertex) -> PyResult<Option<BiPathTuple>> {
        self.check(v)?;
        Ok(self.inner.reconstruct(v).map(bipath_tuple))
    }
}

impl PyBipathRun {
    fn check(&self, v: Vertex) -> PyResult<()> {
        let n = self.inner.sets().len();
        if v < n {
            Ok(())
        } else {
            Err(err(Error::VertexOutOfRange { vertex: v, n }))
        }
    }
}

/// Earliest arrival times from `source`: `0` for the source itself, `None`
/// for unreachable vertices.
#[pyfunction]
#[pyo3(signature = (g, source, strict=false))]
fn earliest_arrival(
    g: &PyTemporalGraph,
    source: Vertex,
    strict: bool,
) -> PyResult<Vec<Option<Label>>> {
    let map = tempspan::earliest_arrival(&g.inner, source, setting(strict)).map_err(err)?;
    Ok(map
        .arrivals()
        .iter()
        .map(|a| match a {
            Arrival::Source => Some(0),
            Arrival::At(t) => Some(*t),
            Arrival::Unreachable => None,
        })
        .collect())
}

#[pyfunction]
#[pyo3(signature = (g, strict=false))]
fn is_temporally_connected(g: &PyTemporalGraph, strict: bool) -> bool {
    tempspan::is_temporally_connected(&g.inner, setting(strict))
}

/// `[(vertex, time), ...]`
#[pyfunction]
#[pyo3(signature = (g, strict=false))]
fn find_pivots(g: &PyTemporalGraph, strict: bool) -> Vec<(Vertex, Label)> {
    tempspan::find_pivots(&g.inner, setting(strict))
        .into_iter()
        .map(|p| (p.vertex, p.time))
        .collect()
}

#[pyfunction]
#[pyo3(signature = (g, source, strict=false))]
fn compute_bipaths(g: &PyTemporalGraph, source: Vertex, strict: bool) -> PyResult<PyBipathRun> {
    tempspan::compute_bipaths(&g.inner, source, setting(strict))
        .map(|inner| PyBipathRun { inner })
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, strict=false))]
fn is_bidirectionally_connected(g: &PyTemporalGraph, strict: bool) -> bool {
    tempspan::is_bidirectionally_connected(&g.inner, setting(strict))
}

#[pyfunction]
#[pyo3(signature = (g, strict=false))]
fn build_bispanner(g: &PyTemporalGraph, strict: bool) -> Option<PyTemporalGraph> {
    tempspan::build_bispanner(&g.inner, setting(strict)).map(Into::into)
}

/// A temporally connected spanning tree, or `None`. Simple graphs use the
/// snapshot characterisation, everything else exhaustive search.
#[pyfunction]
#[pyo3(signature = (g, strict=false, max_n=None))]
fn temporal_spanning_tree(
    g: &PyTemporalGraph,
    strict: bool,
    max_n: Option<usize>,
) -> PyResult<Option<PyTemporalGraph>> {
    let s = setting(strict);
    let r = if g.inner.classify().simple {
        tempspan::tst_simple(&g.inner, s)
    } else {
        tempspan::tst_bruteforce(&g.inner, s, &limits(max_n, None))
    }
    .map_err(err)?;
    Ok(r.witness().cloned().map(Into::into))
}

/// `(size, subgraph)` of a smallest bi-spanner, or `None`.
#[pyfunction]
#[pyo3(signature = (g, strict=false, max_edges=None))]
fn min_bispanner(
    g: &PyTemporalGraph,
    strict: bool,
    max_edges: Option<usize>,
) -> PyResult<Option<(usize, PyTemporalGraph)>> {
    let best =
        tempspan::min_bispanner_bruteforce(&g.inner, setting(strict), &limits(None, max_edges))
            .map_err(err)?;
    Ok(best.map(|b| (b.size, b.subgraph.into())))
}

#[pyfunction]
#[pyo3(signature = (g, strict=false))]
fn critical_edges(g: &PyTemporalGraph, strict: bool) -> PyResult<Vec<(Vertex, Vertex)>> {
    let es = tempspan::critical_bispanner_edges(&g.inner, setting(strict)).map_err(err)?;
    Ok(es.into_iter().map(|e| (e.u, e.v)).collect())
}

fn formula(nvars: usize, clauses: Vec<Vec<i64>>) -> PyResult<CnfFormula> {
    CnfFormula::new(nvars, &clauses).map_err(err)
}

fn instance(universe: usize, subsets: Vec<Vec<usize>>) -> PyResult<SetCoverInstance> {
    SetCoverInstance::new(universe, subsets).map_err(err)
}

/// `(nvars, clauses)` from DIMACS CNF text.
#[pyfunction]
fn parse_dimacs(text: &str) -> PyResult<(usize, Vec<Vec<i64>>)> {
    let phi = CnfFormula::parse_dimacs(text).map_err(err)?;
    let clauses = phi
        .clauses()
        .iter()
        .map(|c| c.iter().map(|l| l.to_dimacs()).collect())
        .collect();
    Ok((phi.nvars(), clauses))
}

type Gadget = (PyTemporalGraph, Vec<String>, String);

fn gadget((g, meta): (tempspan::TemporalGraph, GadgetMeta)) -> Gadget {
    let sidecar = meta.to_sidecar();
    (g.into(), meta.names, sidecar)
}

/// `(graph, vertex_names, sidecar_text)`; clauses use DIMACS literals.
#[pyfunction]
fn sat_to_tst_gadget(nvars: usize, clauses: Vec<Vec<i64>>) -> PyResult<Gadget> {
    Ok(gadget(reductions::sat_to_tst_gadget(&formula(
        nvars, clauses,
    )?)))
}

/// `(graph, vertex_names, sidecar_text)`; elements are `1..=universe`.
#[pyfunction]
fn setcover_to_kbs_gadget(universe: usize, subsets: Vec<Vec<usize>>) -> PyResult<Gadget> {
    Ok(gadget(reductions::setcover_to_kbs_gadget(&instance(
        universe, subsets,
    )?)))
}

#[pyfunction]
fn verify_sat_reduction<'py>(
    py: Python<'py>,
    nvars: usize,
    clauses: Vec<Vec<i64>>,
) -> PyResult<Bound<'py, PyDict>> {
    let r = reductions::verify_tst_reduction(&formula(nvars, clauses)?, &SearchLimits::default())
        .map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("satisfiable", r.satisfiable)?;
    d.set_item("tree_strict", r.tree_strict)?;
    d.set_item("tree_non_strict", r.tree_non_strict)?;
    d.set_item("holds", r.holds())?;
    Ok(d)
}

#[pyfunction]
fn verify_setcover_reduction<'py>(
    py: Python<'py>,
    universe: usize,
    subsets: Vec<Vec<usize>>,
) -> PyResult<Bound<'py, PyDict>> {
    let r =
        reductions::verify_kbs_reduction(&instance(universe, subsets)?, &SearchLimits::default())
            .map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("min_cover", r.min_cover)?;
    d.set_item("min_bispanner", r.min_bispanner)?;
    d.set_item("expected", r.expected)?;
    d.set_item("holds", r.holds())?;
    Ok(d)
}

#[pymodule]
fn tempspan_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("SizeGuardError", m.py().get_type::<SizeGuardError>())?;
    m.add_class::<PyTemporalGraph>()?;
    m.add_class::<PyBipathRun>()?;
    m.add_function(wrap_pyfunction!(earliest_arrival, m)?)?;
    m.add_function(wrap_pyfunction!(is_temporally_connected, m)?)?;
    m.add_function(wrap_pyfunction!(find_pivots, m)?)?;
    m.add_function(wrap_pyfunction!(compute_bipaths, m)?)?;
    m.add_function(wrap_pyfunction!(is_bidirectionally_connected, m)?)?;
    m.add_function(wrap_pyfunction!(build_bispanner, m)?)?;
    m.add_function(wrap_pyfunction!(temporal_spanning_tree, m)?)?;
    m.add_function(wrap_pyfunction!(min_bispanner, m)?)?;
    m.add_function(wrap_pyfunction!(critical_edges, m)?)?;
    m.add_function(wrap_pyfunction!(parse_dimacs, m)?)?;
    m.add_function(wrap_pyfunction!(sat_to_tst_gadget, m)?)?;
    m.add_function(wrap_pyfunction!(setcover_to_kbs_gadget, m)?)?;
    m.add_function(wrap_pyfunction!(verify_sat_reduction, m)?)?;
    m.add_function(wrap_pyfunction!(verify_setcover_reduction, m)?)?;
    Ok(())
}
