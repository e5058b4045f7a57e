use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ::knotcert as core;
use core::bracket::BracketOptions;
use core::error::{BracketError, CertifyError, DiagramError, PolyError, SiteError};

create_exception!(knotcert, CapExceededError, PyValueError, "Diagram has more crossings than the cap allows.");

fn bracket_err(e: BracketError) -> PyErr {
    match e {
        BracketError::CapExceeded { .. } => CapExceededError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn certify_err(e: CertifyError) -> PyErr {
    match e {
        CertifyError::Bracket(b) => bracket_err(b),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn diagram_err(e: DiagramError) -> PyErr {
    value_err(e)
}

fn site_err(e: SiteError) -> PyErr {
    value_err(e)
}

fn poly_err(e: PolyError) -> PyErr {
    value_err(e)
}

fn opts(cap: usize, threads: usize) -> BracketOptions {
    BracketOptions { cap, threads: threads.max(1) }
}

/// Laurent polynomial in `A` or `t` with exponents in quarter-units.
#[pyclass(name = "LaurentPoly", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyLaurentPoly(core::LaurentPoly);

#[pymethods]
impl PyLaurentPoly {
    /// `"A"` or `"t"`.
    #[getter]
    fn var(&self) -> &'static str {
        match self.0.var() {
            core::Var::A => "A",
            core::Var::T => "t",
        }
    }

    /// `[(coefficient, exponent_in_quarters), ...]`, ascending.
    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Vec<(Bound<'py, PyAny>, i64)>> {
        self.0
            .terms()
            .map(|(e, c)| Ok((c.clone().into_pyobject(py)?.into_any(), e)))
            .collect()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0.to_json_terms()).expect("plain data")
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("LaurentPoly('{}')", self.0)
    }
}

#[pyclass(name = "Diagram", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyDiagram(core::Diagram);

#[pymethods]
impl PyDiagram {
    /// Parses PD text (`X[a,b,c,d] ... O`) or diagram JSON.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        core::parse_diagram(text).map(PyDiagram).map_err(diagram_err)
    }

    #[staticmethod]
    fn unknot() -> Self {
        PyDiagram(core::Diagram::unknot())
    }

    fn crossings(&self) -> Vec<[u32; 4]> {
        self.0.crossings().to_vec()
    }

    #[getter]
    fn free_loops(&self) -> u32 {
        self.0.free_loops()
    }

    fn crossing_count(&self) -> usize {
        self.0.crossing_count()
    }

    fn component_count(&self) -> usize {
        self.0.component_count()
    }

    fn signs(&self) -> Vec<i32> {
        self.0.signs()
    }

    fn writhe(&self) -> i64 {
        self.0.writhe()
    }

    fn linking_number(&self, c1: usize, c2: usize) -> PyResult<i64> {
        self.0.linking_number(core::ComponentId(c1), core::ComponentId(c2)).map_err(diagram_err)
    }

    fn mirror(&self) -> Self {
        PyDiagram(self.0.mirror())
    }

    #[pyo3(signature = (cap = core::bracket::DEFAULT_CAP, threads = 1))]
    fn bracket(&self, py: Python<'_>, cap: usize, threads: usize) -> PyResult<PyLaurentPoly> {
        py.detach(|| core::bracket::kauffman_bracket_with(&self.0, opts(cap, threads)))
            .map(PyLaurentPoly)
            .map_err(bracket_err)
    }

    #[pyo3(signature = (cap = core::bracket::DEFAULT_CAP, threads = 1))]
    fn jones(&self, py: Python<'_>, cap: usize, threads: usize) -> PyResult<PyLaurentPoly> {
        py.detach(|| core::bracket::jones_with(&self.0, opts(cap, threads)))
            .map(PyLaurentPoly)
            .map_err(bracket_err)
    }

    fn connected_sum(&self, arc: u32, other: &PyDiagram, other_arc: u32) -> PyResult<Self> {
        core::diagram::connected_sum(&self.0, arc, &other.0, other_arc).map(PyDiagram).map_err(diagram_err)
    }

    fn to_pd(&self) -> String {
        self.0.to_pd_string()
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    fn __str__(&self) -> String {
        self.0.to_pd_string()
    }

    fn __repr__(&self) -> String {
        format!("Diagram('{}')", self.0.to_pd_string())
    }
}

/// A diagram with a marked anti-parallel two-strand site.
#[pyclass(name = "MarkedDiagram", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyMarkedDiagram(core::MarkedDiagram);

#[pymethods]
impl PyMarkedDiagram {
    /// `side` is `"A"` (the shared face is left of `s1`) or `"B"`.
    #[new]
    fn new(diagram: &PyDiagram, s1: u32, s2: u32, side: &str) -> PyResult<Self> {
        let side = match side {
            "A" => core::Side::A,
            "B" => core::Side::B,
            other => return Err(PyValueError::new_err(format!("side must be \"A\" or \"B\", got {other:?}"))),
        };
        core::MarkedDiagram::new(diagram.0.clone(), core::Site { s1, s2, side })
            .map(PyMarkedDiagram)
            .map_err(site_err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        core::MarkedDiagram::from_json_str(text).map(PyMarkedDiagram).map_err(site_err)
    }

    #[getter]
    fn diagram(&self) -> PyDiagram {
        PyDiagram(self.0.diagram.clone())
    }

    #[getter]
    fn site(&self) -> (u32, u32, &'static str) {
        let s = self.0.site;
        (s.s1, s.s2, if s.side == core::Side::A { "A" } else { "B" })
    }

    fn saddle(&self) -> PyResult<PyDiagram> {
        core::saddle_move(&self.0).map(PyDiagram).map_err(site_err)
    }

    fn crossing(&self) -> PyResult<PyDiagram> {
        core::crossing_move(&self.0).map(PyDiagram).map_err(site_err)
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }
}

#[pyclass(name = "Verdict", frozen)]
struct PyVerdict(core::Verdict);

#[pymethods]
impl PyVerdict {
    /// `"distinguished"` or `"inconclusive"`.
    #[getter]
    fn outcome(&self) -> &'static str {
        match self.0.outcome {
            core::Outcome::Distinguished => "distinguished",
            core::Outcome::Inconclusive => "inconclusive",
        }
    }

    #[getter]
    fn distinguished(&self) -> bool {
        self.0.outcome == core::Outcome::Distinguished
    }

    #[getter]
    fn lhs(&self) -> PyLaurentPoly {
        PyLaurentPoly(self.0.lhs.clone())
    }

    #[getter]
    fn rhs(&self) -> PyLaurentPoly {
        PyLaurentPoly(self.0.rhs.clone())
    }

    #[getter]
    fn delta_w(&self) -> i64 {
        self.0.delta_w
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    fn __repr__(&self) -> String {
        format!("Verdict({}, lhs='{}', rhs='{}')", self.outcome(), self.0.lhs, self.0.rhs)
    }
}

#[pyfunction]
fn torus_diagram(n: i64) -> PyResult<PyDiagram> {
    core::torus_diagram(n).map(PyDiagram).map_err(certify_err)
}

#[pyfunction]
fn jones_torus_knot_closed(k: i64) -> PyResult<PyLaurentPoly> {
    if k < 0 {
        return Err(PyValueError::new_err(format!("k must be nonnegative, got {k}")));
    }
    core::jones_torus_knot_closed(k).map(PyLaurentPoly).map_err(poly_err)
}

#[pyfunction]
fn jones_torus_link_closed(m: i64) -> PyResult<PyLaurentPoly> {
    core::jones_torus_link_closed(m).map(PyLaurentPoly).map_err(certify_err)
}

#[pyfunction]
fn rhs_jones1(j_l: &PyLaurentPoly, j_k: &PyLaurentPoly, delta_w: i64) -> PyLaurentPoly {
    PyLaurentPoly(core::rhs_jones1(&j_l.0, &j_k.0, delta_w))
}

/// Returns `(holds, lhs, rhs, delta_w)`.
#[pyfunction]
#[pyo3(signature = (md, cap = core::bracket::DEFAULT_CAP))]
fn check_jones1_identity(md: &PyMarkedDiagram, cap: usize) -> PyResult<(bool, PyLaurentPoly, PyLaurentPoly, i64)> {
    let c = core::check_jones1_identity(&md.0, opts(cap, 1)).map_err(certify_err)?;
    Ok((c.holds, PyLaurentPoly(c.lhs), PyLaurentPoly(c.rhs), c.delta_w))
}

#[pyfunction]
#[pyo3(signature = (x, y, cap = core::bracket::DEFAULT_CAP))]
fn certify_distinct(x: &PyMarkedDiagram, y: &PyMarkedDiagram, cap: usize) -> PyResult<PyVerdict> {
    core::certify_distinct(&x.0, &y.0, opts(cap, 1)).map(PyVerdict).map_err(certify_err)
}

#[pyfunction]
#[pyo3(signature = (x, m, cap = core::bracket::DEFAULT_CAP))]
fn certify_distinct_torus(x: &PyMarkedDiagram, m: i64, cap: usize) -> PyResult<PyVerdict> {
    core::certify_distinct_torus(&x.0, m, opts(cap, 1)).map(PyVerdict).map_err(certify_err)
}

#[pymodule]
fn knotcert(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLaurentPoly>()?;
    m.add_class::<PyDiagram>()?;
    m.add_class::<PyMarkedDiagram>()?;
    m.add_class::<PyVerdict>()?;
    m.add("CapExceededError", m.py().get_type::<CapExceededError>())?;
    m.add_function(wrap_pyfunction!(torus_diagram, m)?)?;
    m.add_function(wrap_pyfunction!(jones_torus_knot_closed, m)?)?;
    m.add_function(wrap_pyfunction!(jones_torus_link_closed, m)?)?;
    m.add_function(wrap_pyfunction!(rhs_jones1, m)?)?;
    m.add_function(wrap_pyfunction!(check_jones1_identity, m)?)?;
    m.add_function(wrap_pyfunction!(certify_distinct, m)?)?;
    m.add_function(wrap_pyfunction!(certify_distinct_torus, m)?)?;
    Ok(())
}
