//! Python bindings. Reports cross the boundary as plain dicts and lists
//! built from the library's JSON encoding, so big integers stay exact.

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

use coxgrowth::catalog::{self, Source};
use coxgrowth::coxeter::{enumerate_finite_subsets, parse_system};
use coxgrowth::growth::{
    euler_and_volume, recursion_coefficients, steinberg_series, taylor_coefficients, GrowthSeries,
};
use coxgrowth::oracle::{oracle_compare_with, BfsLimits};
use coxgrowth::right_angled::{ra3_series, ra4_series, FVector};
use coxgrowth::spectral::{check_conjecture, fixture_denominator, pole_report};
use coxgrowth::{CoxeterSystem as Inner, Error};

create_exception!(coxgrowth, IntegrityError, PyException, "An exact cross-check failed.");

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Integrity(_) | Error::InexactDivision | Error::DivisionByZero => IntegrityError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| IntegrityError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// A Coxeter system.
#[pyclass(module = "coxgrowth", frozen)]
struct CoxeterSystem {
    inner: Inner,
    dimension: Option<usize>,
}

impl CoxeterSystem {
    fn series(&self) -> PyResult<GrowthSeries> {
        let s = steinberg_series(&self.inner).map_err(py_err)?;
        Ok(match self.dimension {
            Some(n) => s.with_dimension(n),
            None => s,
        })
    }
}

#[pymethods]
impl CoxeterSystem {
    /// Parses the line-oriented text format (`rank N`, `edge I J M`).
    #[staticmethod]
    #[pyo3(signature = (text, dimension=None))]
    fn parse(text: &str, dimension: Option<usize>) -> PyResult<Self> {
        Ok(CoxeterSystem {
            inner: parse_system(text).map_err(py_err)?,
            dimension,
        })
    }

    /// Linear diagram with the given labels between consecutive nodes.
    #[staticmethod]
    #[pyo3(signature = (labels, dimension=None))]
    fn linear(labels: Vec<u32>, dimension: Option<usize>) -> PyResult<Self> {
        Ok(CoxeterSystem {
            inner: Inner::linear(&labels).map_err(py_err)?,
            dimension,
        })
    }

    /// A catalog entry that is a Coxeter system.
    #[staticmethod]
    fn catalog(key: &str) -> PyResult<Self> {
        let e = catalog::lookup(key).map_err(py_err)?;
        match e.source {
            Source::System(inner) => Ok(CoxeterSystem {
                inner,
                dimension: e.dimension,
            }),
            _ => Err(PyValueError::new_err(format!("{key} is not a Coxeter system"))),
        }
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn dimension(&self) -> Option<usize> {
        self.dimension
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    /// Number of finite standard parabolic subgroups by rank.
    fn finite_subset_counts(&self) -> PyResult<Vec<usize>> {
        Ok(enumerate_finite_subsets(&self.inner).map_err(py_err)?.size_counts())
    }

    /// All forms of the growth series as a dict.
    fn growth<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.series()?)
    }

    fn taylor(&self, upto: usize) -> PyResult<Vec<BigInt>> {
        taylor_coefficients(&self.series()?, upto).map_err(py_err)
    }

    #[pyo3(signature = (upto=None))]
    fn recursion<'py>(&self, py: Python<'py>, upto: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
        let s = self.series()?;
        let d = s.complete.as_ref().map_or(0, |c| c.denominator.deg());
        to_py(py, &recursion_coefficients(&s, upto.unwrap_or(d)).map_err(py_err)?)
    }

    fn poles<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &pole_report(&self.series()?).map_err(py_err)?)
    }

    #[pyo3(signature = (dimension=None))]
    fn conjecture<'py>(&self, py: Python<'py>, dimension: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
        let n = dimension
            .or(self.dimension)
            .ok_or_else(|| PyValueError::new_err("dimension is required"))?;
        let report = pole_report(&self.series()?).map_err(py_err)?;
        to_py(py, &check_conjecture(&report, n))
    }

    #[pyo3(signature = (dimension=None))]
    fn euler<'py>(&self, py: Python<'py>, dimension: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
        let n = dimension
            .or(self.dimension)
            .ok_or_else(|| PyValueError::new_err("dimension is required"))?;
        to_py(py, &euler_and_volume(&self.series()?, n).map_err(py_err)?)
    }

    /// BFS word counts compared with the series up to length `upto`.
    #[pyo3(signature = (upto, max_length=None))]
    fn oracle<'py>(&self, py: Python<'py>, upto: usize, max_length: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
        let mut limits = BfsLimits::default();
        if let Some(m) = max_length {
            limits.max_length = m;
        }
        to_py(py, &oracle_compare_with(&self.inner, upto, limits).map_err(py_err)?)
    }

    fn __repr__(&self) -> String {
        format!("CoxeterSystem(rank={})", self.inner.rank())
    }
}

/// Growth series of a right-angled 4-polytope from its f-vector.
#[pyfunction]
fn right_angled_4d<'py>(py: Python<'py>, fvector: Vec<u64>) -> PyResult<Bound<'py, PyAny>> {
    let fv = FVector::new(fvector).map_err(py_err)?;
    to_py(py, &ra4_series(&fv).map_err(py_err)?)
}

/// Closed form for a right-angled 3-polytope with `facets` faces.
#[pyfunction]
fn right_angled_3d<'py>(py: Python<'py>, facets: u64) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &ra3_series(facets).map_err(py_err)?)
}

/// Pole report for a bare denominator given by ascending coefficients.
#[pyfunction]
fn denominator_poles<'py>(py: Python<'py>, coeffs: Vec<BigInt>) -> PyResult<Bound<'py, PyAny>> {
    let q = coxgrowth::IntPolynomial::from_coeffs(coeffs);
    to_py(py, &fixture_denominator(&q).map_err(py_err)?)
}

#[pyfunction]
fn catalog_keys() -> Vec<String> {
    catalog::catalog().into_iter().map(|e| e.key).collect()
}

#[pymodule(name = "coxgrowth")]
fn py_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<CoxeterSystem>()?;
    m.add_function(wrap_pyfunction!(right_angled_4d, m)?)?;
    m.add_function(wrap_pyfunction!(right_angled_3d, m)?)?;
    m.add_function(wrap_pyfunction!(denominator_poles, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_keys, m)?)?;
    m.add("IntegrityError", m.py().get_type::<IntegrityError>())?;
    Ok(())
}
