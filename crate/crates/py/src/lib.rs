use cdgraph::data::DataSet;
use cdgraph::enumeration::{enumerate_all, enumerate_connected};
use cdgraph::occurrence::{is_admissible, is_strongly_admissible, KnowledgeBase};
use cdgraph::pipeline::{classify_all, derive_facts, load_index, render_dot, verify_paper};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn py_err(e: cdgraph::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn dataset(data_dir: Option<&str>) -> PyResult<DataSet> {
    match data_dir {
        Some(dir) => DataSet::from_dir(dir),
        None => DataSet::embedded(),
    }
    .map_err(py_err)
}

/// Shipped facts plus those the recipes and lemma claims establish.
fn full_kb(data: &DataSet) -> PyResult<KnowledgeBase> {
    let (_, index) = load_index(data).map_err(py_err)?;
    Ok(derive_facts(data, &index).map_err(py_err)?.kb)
}

/// A simple graph on at most ten vertices.
#[pyclass(name = "Graph", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyGraph(cdgraph::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    fn new(order: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        cdgraph::Graph::from_edges(order, &edges)
            .map(PyGraph)
            .map_err(py_err)
    }

    #[staticmethod]
    fn from_graph6(code: &str) -> PyResult<Self> {
        cdgraph::Graph::from_graph6(code)
            .map(PyGraph)
            .map_err(py_err)
    }

    fn to_graph6(&self) -> String {
        self.0.to_graph6()
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges()
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn complement(&self) -> Self {
        PyGraph(self.0.complement())
    }

    fn canonical_form(&self) -> Self {
        PyGraph(self.0.canonical_form().graph())
    }

    fn is_isomorphic(&self, other: &PyGraph) -> bool {
        self.0.is_isomorphic(&other.0)
    }

    fn __repr__(&self) -> String {
        format!("Graph('{}')", self.0.to_graph6())
    }
}

/// Verdict and reason with the full derived knowledge base.
#[pyfunction]
#[pyo3(signature = (graph, data_dir=None))]
fn status(graph: &PyGraph, data_dir: Option<&str>) -> PyResult<(String, String)> {
    let kb = full_kb(&dataset(data_dir)?)?;
    let s = cdgraph::occurrence::status(&graph.0, &kb).map_err(py_err)?;
    Ok((format!("{:?}", s.verdict()), s.to_string()))
}

/// Whether `vertex` is admissible, plus the graph6 codes of blocking subgraphs.
#[pyfunction]
#[pyo3(signature = (graph, vertex, strong=false, data_dir=None))]
fn admissible(
    graph: &PyGraph,
    vertex: usize,
    strong: bool,
    data_dir: Option<&str>,
) -> PyResult<(bool, Vec<String>)> {
    let kb = full_kb(&dataset(data_dir)?)?;
    let report = if strong {
        is_strongly_admissible(&graph.0, vertex, &kb)
    } else {
        is_admissible(&graph.0, vertex, &kb)
    }
    .map_err(py_err)?;
    let blockers = report.blockers().map(|s| s.graph6.clone()).collect();
    Ok((report.holds, blockers))
}

#[pyfunction]
#[pyo3(signature = (order, connected=false))]
fn enumerate(order: usize, connected: bool) -> PyResult<Vec<PyGraph>> {
    let catalog = if connected {
        enumerate_connected(order)
    } else {
        enumerate_all(order)
    }
    .map_err(py_err)?;
    Ok(catalog.graphs.into_iter().map(PyGraph).collect())
}

/// The classification report as JSON text.
#[pyfunction]
#[pyo3(signature = (data_dir=None))]
fn classify_json(data_dir: Option<&str>) -> PyResult<String> {
    Ok(classify_all(&dataset(data_dir)?).map_err(py_err)?.to_json())
}

/// The checklist as JSON text.
#[pyfunction]
#[pyo3(signature = (data_dir=None))]
fn verify_json(data_dir: Option<&str>) -> PyResult<String> {
    let list = verify_paper(&dataset(data_dir)?);
    serde_json::to_string_pretty(&list).map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pyfunction]
fn dot(graph: &PyGraph) -> String {
    render_dot(&graph.0, None)
}

#[pymodule]
fn pycdgraph(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(status, m)?)?;
    m.add_function(wrap_pyfunction!(admissible, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(classify_json, m)?)?;
    m.add_function(wrap_pyfunction!(verify_json, m)?)?;
    m.add_function(wrap_pyfunction!(dot, m)?)?;
    Ok(())
}
