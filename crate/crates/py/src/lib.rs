//! Python bindings. Vertices are addressed by their labels on the Python side.

use std::collections::HashMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use trilist_core::gadgets::{self, WeightedGraph};
use trilist_core::graph::{self, Label};
use trilist_core::listing::{list_view_parallel, CollectSink, CountSink, ListingStats};
use trilist_core::oracle::{self, Objective};
use trilist_core::ordering::{self, MethodParams, NeighConfig};
use trilist_core::{Algorithm, Method, OrientedView};

type Triangles = Vec<(Label, Label, Label)>;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Simple undirected graph; loops and duplicate edges are dropped.
#[pyclass(name = "Graph", module = "trilist", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyGraph {
    inner: graph::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(edges: Vec<(Label, Label)>) -> Self {
        PyGraph {
            inner: graph::normalize(&edges).0,
        }
    }

    /// Reads a whitespace-separated edge list; `#` starts a comment.
    #[staticmethod]
    fn from_file(path: &str) -> PyResult<Self> {
        let f = std::fs::File::open(path).map_err(value_err)?;
        let (inner, _) = graph::load_edgelist(std::io::BufReader::new(f)).map_err(value_err)?;
        Ok(PyGraph { inner })
    }

    /// Uniform random graph with `n` vertices labelled `0..n` and `m` edges.
    #[staticmethod]
    #[pyo3(signature = (n, m, seed=0))]
    fn gnm(n: usize, m: u64, seed: u64) -> PyResult<Self> {
        Ok(PyGraph {
            inner: graph::gen_gnm(n, m, seed).map_err(value_err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> u64 {
        self.inner.m()
    }

    fn labels(&self) -> Vec<Label> {
        self.inner.labels().to_vec()
    }

    fn edges(&self) -> Vec<(Label, Label)> {
        let g = &self.inner;
        g.edges().map(|(u, v)| (g.label(u), g.label(v))).collect()
    }

    fn degree(&self, label: Label) -> PyResult<usize> {
        Ok(self.inner.degree(self.id(label)?))
    }

    fn has_edge(&self, a: Label, b: Label) -> PyResult<bool> {
        Ok(self.inner.has_edge(self.id(a)?, self.id(b)?))
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

impl PyGraph {
    fn id(&self, label: Label) -> PyResult<u32> {
        self.inner
            .id_of(label)
            .ok_or_else(|| value_err(format!("label {label} not in graph")))
    }
}

/// A ranking of a graph's vertices; rank 1 comes first.
#[pyclass(name = "Ordering", module = "trilist", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyOrdering {
    inner: graph::Ordering,
    labels: Vec<Label>,
}

#[pymethods]
impl PyOrdering {
    /// Builds an ordering from labels listed first to last.
    #[staticmethod]
    fn from_sequence(graph: &PyGraph, sequence: Vec<Label>) -> PyResult<Self> {
        let ids = sequence
            .iter()
            .map(|&l| graph.id(l))
            .collect::<PyResult<Vec<_>>>()?;
        if ids.len() != graph.inner.n() {
            return Err(value_err(format!(
                "sequence has {} vertices, graph has {}",
                ids.len(),
                graph.inner.n()
            )));
        }
        let inner = graph::Ordering::from_sequence(ids).map_err(value_err)?;
        Ok(PyOrdering::wrap(graph, inner))
    }

    /// Labels from first to last.
    fn sequence(&self) -> Vec<Label> {
        self.inner
            .sequence()
            .iter()
            .map(|&u| self.labels[u as usize])
            .collect()
    }

    /// `{label: rank}`.
    fn ranks(&self) -> HashMap<Label, u32> {
        self.labels
            .iter()
            .enumerate()
            .map(|(u, &l)| (l, self.inner.rank(u as u32)))
            .collect()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("Ordering(n={})", self.inner.len())
    }
}

impl PyOrdering {
    fn wrap(graph: &PyGraph, inner: graph::Ordering) -> Self {
        PyOrdering {
            inner,
            labels: graph.inner.labels().to_vec(),
        }
    }

    fn check(&self, graph: &PyGraph) -> PyResult<()> {
        if self.labels != graph.inner.labels() {
            return Err(value_err("ordering belongs to a different graph"));
        }
        Ok(())
    }
}

fn parse<T: std::str::FromStr<Err = String>>(s: &str) -> PyResult<T> {
    s.parse().map_err(PyValueError::new_err)
}

/// Computes one of identity, random, degree, core, split, check or neigh.
#[pyfunction]
#[pyo3(signature = (graph, method, seed=0, eps=0.01, max_sweeps=50))]
fn order(
    graph: &PyGraph,
    method: &str,
    seed: u64,
    eps: f64,
    max_sweeps: usize,
) -> PyResult<PyOrdering> {
    let method: Method = parse(method)?;
    let params = MethodParams {
        seed,
        neigh: NeighConfig {
            epsilon: eps,
            max_sweeps,
        },
    };
    Ok(PyOrdering::wrap(
        graph,
        ordering::compute_order(&graph.inner, method, &params),
    ))
}

/// Neigh from an arbitrary start; returns the ordering and C+- after each sweep.
#[pyfunction]
#[pyo3(signature = (graph, start, eps=0.01, max_sweeps=50))]
fn neigh(
    graph: &PyGraph,
    start: &PyOrdering,
    eps: f64,
    max_sweeps: usize,
) -> PyResult<(PyOrdering, Vec<u64>)> {
    start.check(graph)?;
    let config = NeighConfig {
        epsilon: eps,
        max_sweeps,
    };
    let (o, report) =
        ordering::neigh_order(&graph.inner, &start.inner, config).map_err(value_err)?;
    Ok((PyOrdering::wrap(graph, o), report.history))
}

/// `{"c_pp", "c_pm", "c_mm", "sum_deg_sq"}`.
#[pyfunction]
fn cost_report(graph: &PyGraph, ordering: &PyOrdering) -> PyResult<HashMap<&'static str, u64>> {
    ordering.check(graph)?;
    let r = ordering::cost_report(&graph.inner, &ordering.inner).map_err(value_err)?;
    Ok(HashMap::from([
        ("c_pp", r.c_pp),
        ("c_pm", r.c_pm),
        ("c_mm", r.c_mm),
        ("sum_deg_sq", r.sum_deg_sq),
    ]))
}

/// Largest coreness, found by min-degree peeling.
#[pyfunction]
fn degeneracy(graph: &PyGraph) -> u32 {
    ordering::core_decomposition(&graph.inner).degeneracy
}

#[pyclass(
    name = "ListingStats",
    module = "trilist",
    frozen,
    get_all,
    skip_from_py_object
)]
#[derive(Clone)]
pub struct PyStats {
    triangles: u64,
    inner_ops: u64,
    mark_ops: u64,
    list_ms: f64,
}

#[pymethods]
impl PyStats {
    fn __repr__(&self) -> String {
        format!(
            "ListingStats(triangles={}, inner_ops={}, mark_ops={}, list_ms={:.3})",
            self.triangles, self.inner_ops, self.mark_ops, self.list_ms
        )
    }
}

fn to_stats(s: &ListingStats) -> PyStats {
    PyStats {
        triangles: s.triangle_count,
        inner_ops: s.inner_ops,
        mark_ops: s.mark_ops,
        list_ms: s.wall_time.as_secs_f64() * 1e3,
    }
}

/// Lists every triangle as a label triple in rank order, plus run statistics.
#[pyfunction]
#[pyo3(signature = (graph, ordering, algo="apm", threads=1))]
fn list_triangles(
    py: Python<'_>,
    graph: &PyGraph,
    ordering: &PyOrdering,
    algo: &str,
    threads: usize,
) -> PyResult<(Triangles, PyStats)> {
    ordering.check(graph)?;
    let algo: Algorithm = parse(algo)?;
    let g = &graph.inner;
    let (stats, sink) = py.detach(|| {
        let view = OrientedView::new(g, &ordering.inner).expect("checked");
        let mut sink = CollectSink::default();
        let stats = list_view_parallel(&view, &ordering.inner, algo, threads.max(1), &mut sink);
        (stats, sink)
    });
    let tris = sink
        .triangles
        .iter()
        .map(|t| (g.label(t[0]), g.label(t[1]), g.label(t[2])))
        .collect();
    Ok((tris, to_stats(&stats)))
}

/// Counts triangles without materialising them.
#[pyfunction]
#[pyo3(signature = (graph, ordering, algo="apm", threads=1))]
fn count_triangles(
    py: Python<'_>,
    graph: &PyGraph,
    ordering: &PyOrdering,
    algo: &str,
    threads: usize,
) -> PyResult<PyStats> {
    ordering.check(graph)?;
    let algo: Algorithm = parse(algo)?;
    let stats = py.detach(|| {
        let view = OrientedView::new(&graph.inner, &ordering.inner).expect("checked");
        let mut sink = CountSink::default();
        list_view_parallel(&view, &ordering.inner, algo, threads.max(1), &mut sink)
    });
    Ok(to_stats(&stats))
}

/// Triangles by exhaustive triple scan, as sorted label triples.
#[pyfunction]
#[pyo3(signature = (graph, limit=oracle::DEFAULT_TRIANGLE_GUARD))]
fn brute_triangles(graph: &PyGraph, limit: usize) -> PyResult<Triangles> {
    let g = &graph.inner;
    let tris = oracle::brute_triangles(g, limit).map_err(value_err)?;
    Ok(tris
        .iter()
        .map(|t| (g.label(t[0]), g.label(t[1]), g.label(t[2])))
        .collect())
}

/// Exact minimum of `objective` ("pm", "pp") over all orderings; with
/// `weights` (one per vertex, in label order) the weighted C++.
#[pyfunction]
#[pyo3(signature = (graph, objective="pm", weights=None, limit=oracle::DEFAULT_ORDER_GUARD))]
fn min_cost(
    graph: &PyGraph,
    objective: &str,
    weights: Option<Vec<u64>>,
    limit: usize,
) -> PyResult<(u64, PyOrdering)> {
    let obj = match (objective, &weights) {
        ("pp", Some(w)) => Objective::WeightedPp(w),
        ("pp", None) => Objective::Pp,
        ("pm", None) => Objective::Pm,
        ("pm", Some(_)) => return Err(value_err("weights apply to the pp objective only")),
        _ => return Err(value_err(format!("unknown objective {objective:?}"))),
    };
    let (cost, o) = oracle::min_cost_exhaustive(&graph.inner, obj, limit).map_err(value_err)?;
    Ok((cost, PyOrdering::wrap(graph, o)))
}

fn formula(n_vars: usize, clauses: Vec<[u32; 3]>) -> PyResult<oracle::NaeFormula> {
    oracle::NaeFormula::new(n_vars, clauses).map_err(value_err)
}

fn cover_instance(n: usize, sets: Vec<Vec<u32>>, k: usize) -> PyResult<oracle::SetCoverInstance> {
    oracle::SetCoverInstance::new(n, sets, k).map_err(value_err)
}

/// Whether the positive NAE3SAT formula has a solution; variables count from 1.
#[pyfunction]
#[pyo3(signature = (n_vars, clauses, limit=oracle::DEFAULT_NAE_GUARD))]
fn nae_satisfiable(n_vars: usize, clauses: Vec<[u32; 3]>, limit: usize) -> PyResult<bool> {
    oracle::nae_satisfiable(&formula(n_vars, clauses)?, limit).map_err(value_err)
}

#[pyfunction]
#[pyo3(signature = (n, sets, limit=oracle::DEFAULT_SET_COVER_GUARD))]
fn min_set_cover(n: usize, sets: Vec<Vec<u32>>, limit: usize) -> PyResult<usize> {
    let k = sets.len();
    oracle::min_set_cover(&cover_instance(n, sets, k)?, limit).map_err(value_err)
}

/// `(graph, roles, 2m)` for a positive NAE3SAT formula.
#[pyfunction]
fn nae_graph(n_vars: usize, clauses: Vec<[u32; 3]>) -> PyResult<(PyGraph, Vec<String>, u64)> {
    let g = gadgets::nae_graph(&formula(n_vars, clauses)?);
    Ok((
        PyGraph {
            inner: g.gadget.weighted.graph,
        },
        g.gadget.roles,
        g.threshold,
    ))
}

/// `(graph, roles, C_d)` for the gadget L_d.
#[pyfunction]
fn ld_gadget(d: u64) -> PyResult<(PyGraph, Vec<String>, u64)> {
    if d == 0 {
        return Err(value_err("L_d needs d >= 1"));
    }
    let g = gadgets::ld_gadget(d);
    Ok((
        PyGraph {
            inner: g.gadget.weighted.graph,
        },
        g.gadget.roles,
        g.reference_cost,
    ))
}

/// `(graph, roles, weights, V)` for a Set Cover instance with budget `k`.
#[pyfunction]
fn setcover_graph(
    n: usize,
    sets: Vec<Vec<u32>>,
    k: usize,
) -> PyResult<(PyGraph, Vec<String>, Vec<u64>, u64)> {
    let sc = gadgets::setcover_graph(&cover_instance(n, sets, k)?).map_err(value_err)?;
    Ok((
        PyGraph {
            inner: sc.gadget.weighted.graph,
        },
        sc.gadget.roles,
        sc.gadget.weighted.weights,
        sc.bound,
    ))
}

/// `(graph, offset)`: weights replaced by attached L_d gadgets.
#[pyfunction]
#[pyo3(signature = (graph, weights, max_vertices=1_000_000))]
fn weighted_to_weightless(
    graph: &PyGraph,
    weights: Vec<u64>,
    max_vertices: usize,
) -> PyResult<(PyGraph, u64)> {
    let wg = WeightedGraph::new(graph.inner.clone(), weights).map_err(value_err)?;
    let red = gadgets::weighted_to_weightless(&wg, max_vertices).map_err(value_err)?;
    Ok((PyGraph { inner: red.graph }, red.offset))
}

#[pymodule]
fn trilist(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyOrdering>()?;
    m.add_class::<PyStats>()?;
    m.add("METHODS", Method::ALL.map(Method::name).to_vec())?;
    m.add_function(wrap_pyfunction!(order, m)?)?;
    m.add_function(wrap_pyfunction!(neigh, m)?)?;
    m.add_function(wrap_pyfunction!(cost_report, m)?)?;
    m.add_function(wrap_pyfunction!(degeneracy, m)?)?;
    m.add_function(wrap_pyfunction!(list_triangles, m)?)?;
    m.add_function(wrap_pyfunction!(count_triangles, m)?)?;
    m.add_function(wrap_pyfunction!(brute_triangles, m)?)?;
    m.add_function(wrap_pyfunction!(min_cost, m)?)?;
    m.add_function(wrap_pyfunction!(nae_satisfiable, m)?)?;
    m.add_function(wrap_pyfunction!(min_set_cover, m)?)?;
    m.add_function(wrap_pyfunction!(nae_graph, m)?)?;
    m.add_function(wrap_pyfunction!(ld_gadget, m)?)?;
    m.add_function(wrap_pyfunction!(setcover_graph, m)?)?;
    m.add_function(wrap_pyfunction!(weighted_to_weightless, m)?)?;
    Ok(())
}
