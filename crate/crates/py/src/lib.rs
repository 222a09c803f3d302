//! Python bindings: expose instances, reduced bases, and the full analysis
//! report to Python.  Reports cross the boundary as plain dicts (via JSON),
//! so the Python side needs nothing beyond the standard library.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyModule;

use rees_aci::caps::Caps;
use rees_aci::groebner::defining_ideal_oracle;
use rees_aci::instance::Instance as CoreInstance;
use rees_aci::report::{analyze as core_analyze, Checks};
use rees_aci::suite::{default_desk_suite, run_suite, SuiteSpec};

type ExponentPair = (Vec<u64>, Option<Vec<u64>>);

fn json_to_py(py: Python<'_>, json: &str) -> PyResult<Py<PyAny>> {
    let loads = py.import("json")?.getattr("loads")?;
    Ok(loads.call1((json,))?.unbind())
}

fn caps_from_env() -> PyResult<Caps> {
    Caps::from_env().map_err(PyValueError::new_err)
}

fn checks_from_skip(skip: Option<Vec<String>>) -> PyResult<Checks> {
    let mut checks = Checks::default();
    for section in skip.unwrap_or_default() {
        checks.skip(&section).map_err(PyValueError::new_err)?;
    }
    Ok(checks)
}

/// A validated instance of the ideal `<T1^a1, ..., Tm^am, T^b>`.
#[pyclass(name = "Instance", module = "rees_aci_py")]
struct PyInstance {
    inner: CoreInstance,
}

#[pymethods]
impl PyInstance {
    #[new]
    #[pyo3(signature = (a, b, permissive = false))]
    fn new(a: Vec<u64>, b: Vec<u64>, permissive: bool) -> PyResult<Self> {
        CoreInstance::new(a, b, permissive)
            .map(|inner| PyInstance { inner })
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    #[getter]
    fn a(&self) -> Vec<u64> {
        self.inner.a().to_vec()
    }

    #[getter]
    fn b(&self) -> Vec<u64> {
        self.inner.b().to_vec()
    }

    #[getter]
    fn bsum(&self) -> u64 {
        self.inner.bsum()
    }

    #[getter]
    fn equi_generated(&self) -> bool {
        self.inner.equi_generated()
    }

    #[getter]
    fn b_gcd(&self) -> u64 {
        self.inner.b_gcd()
    }

    fn minimal_predicted(&self) -> Option<bool> {
        self.inner.minimal_predicted()
    }

    /// The binomial `W^{|b|} - X^b` as a display string.
    fn elimination_equation(&self) -> String {
        self.inner.elimination_equation().to_string()
    }

    /// Reduced Gröbner basis members, human-readable.
    fn reduced_basis(&self) -> PyResult<Vec<String>> {
        let caps = caps_from_env()?;
        let basis = defining_ideal_oracle(&self.inner, &caps)
            .map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
        Ok(basis.members().iter().map(|g| g.to_string()).collect())
    }

    /// Reduced Gröbner basis as `(lead, trail)` exponent-vector pairs.
    fn reduced_basis_exponents(&self) -> PyResult<Vec<ExponentPair>> {
        let caps = caps_from_env()?;
        let basis = defining_ideal_oracle(&self.inner, &caps)
            .map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
        Ok(basis
            .members()
            .iter()
            .map(|g| (g.lead().exps().to_vec(), g.trail().map(|t| t.exps().to_vec())))
            .collect())
    }

    /// Run the verification pipeline; returns the report as a dict.
    #[pyo3(signature = (skip = None))]
    fn analyze(&self, py: Python<'_>, skip: Option<Vec<String>>) -> PyResult<Py<PyAny>> {
        let caps = caps_from_env()?;
        let checks = checks_from_skip(skip)?;
        let report = core_analyze(&self.inner, &checks, &caps)
            .map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
        json_to_py(py, &report.to_json())
    }

    fn __repr__(&self) -> String {
        format!("Instance(a={:?}, b={:?})", self.inner.a(), self.inner.b())
    }
}

/// Validate and analyze in one call; returns the report dict.
#[pyfunction]
#[pyo3(signature = (a, b, permissive = false, skip = None))]
fn analyze(
    py: Python<'_>,
    a: Vec<u64>,
    b: Vec<u64>,
    permissive: bool,
    skip: Option<Vec<String>>,
) -> PyResult<Py<PyAny>> {
    let instance = PyInstance::new(a, b, permissive)?;
    instance.analyze(py, skip)
}

/// Run a suite given as a list of (a, b) pairs; returns the outcome dict.
#[pyfunction]
#[pyo3(signature = (instances, jobs = 1))]
fn suite(py: Python<'_>, instances: Vec<(Vec<u64>, Vec<u64>)>, jobs: usize) -> PyResult<Py<PyAny>> {
    let caps = caps_from_env()?;
    let spec = SuiteSpec {
        instances: instances
            .into_iter()
            .map(|(a, b)| rees_aci::suite::SuiteInstance {
                m: None,
                a,
                b,
                caps: None,
                checks: None,
            })
            .collect(),
        ..Default::default()
    };
    let outcome = run_suite(&spec, jobs.max(1), &Checks::default(), &caps);
    let json = serde_json::to_string(&outcome).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    json_to_py(py, &json)
}

/// The `(a, b)` pairs of the built-in desk-scale suite.
#[pyfunction]
fn desk_suite_instances() -> Vec<(Vec<u64>, Vec<u64>)> {
    default_desk_suite().into_iter().map(|i| (i.a, i.b)).collect()
}

#[pymodule]
fn rees_aci_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyInstance>()?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(suite, m)?)?;
    m.add_function(wrap_pyfunction!(desk_suite_instances, m)?)?;
    Ok(())
}
