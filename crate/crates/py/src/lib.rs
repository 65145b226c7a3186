//! Python bindings: descriptor-string functions returning plain dicts.
//!
//! Every function takes the same descriptor grammar as the pm binary
//! ("geometric:2/3", "primary:2,3", ...) and returns the corresponding
//! report as nested dicts, lists, and strings. Rationals cross the
//! boundary as exact "a/b" strings; nothing is converted to floats
//! except the Mertens offsets, which are approximate by construction.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyBool, PyDict, PyList, PyString};

use puiseux_core::descriptors::{MonoidDescriptor, Truncation};
use puiseux_core::engine::{self, Budget};
use puiseux_core::exactnum::{PrimeStream, Rat};
use puiseux_core::numsgp::{Frobenius, NumericalSemigroup};
use puiseux_core::witnesses::{self, WitnessReport};
use puiseux_core::Error;

fn to_py_err(e: Error) -> PyErr {
    match &e {
        Error::Resource(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn parse_descriptor(text: &str) -> PyResult<MonoidDescriptor> {
    text.parse::<MonoidDescriptor>().map_err(to_py_err)
}

fn parse_rational(text: &str) -> PyResult<Rat> {
    text.parse::<Rat>().map_err(to_py_err)
}

fn parse_stream(text: &str) -> PyResult<PrimeStream> {
    match parse_descriptor(&format!("primary:{text}"))? {
        MonoidDescriptor::Primary { primes } => Ok(primes),
        _ => unreachable!("primary descriptor parses to the primary variant"),
    }
}

fn truncation(depth: usize) -> PyResult<Truncation> {
    Truncation::new(depth).map_err(to_py_err)
}

fn json_to_py<'py>(py: Python<'py>, value: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    use serde_json::Value;
    Ok(match value {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => PyBool::new(py, *b).to_owned().into_any(),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_pyobject(py)?.into_any()
            } else if let Some(u) = n.as_u64() {
                u.into_pyobject(py)?.into_any()
            } else {
                n.as_f64()
                    .expect("JSON numbers are i64, u64, or f64")
                    .into_pyobject(py)?
                    .into_any()
            }
        }
        Value::String(s) => PyString::new(py, s).into_any(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (key, item) in map {
                dict.set_item(key, json_to_py(py, item)?)?;
            }
            dict.into_any()
        }
    })
}

fn report_to_py<'py, T: serde::Serialize>(py: Python<'py>, report: &T) -> PyResult<Bound<'py, PyAny>> {
    let value = serde_json::to_value(report)
        .map_err(|e| PyRuntimeError::new_err(format!("report serialization failed: {e}")))?;
    json_to_py(py, &value)
}

/// Structural classification of the monoid: atomicity, boundedness,
/// monotone class, and the result tags justifying each flag.
#[pyfunction]
fn classify<'py>(py: Python<'py>, descriptor: &str) -> PyResult<Bound<'py, PyAny>> {
    let d = parse_descriptor(descriptor)?;
    let report = engine::classify(&d).map_err(to_py_err)?;
    report_to_py(py, &report)
}

/// Membership of the rational `value` (as "a/b") in the monoid, with an
/// explicit representation or refutation reason.
#[pyfunction]
#[pyo3(signature = (descriptor, value, depth = 10, budget = 1_000_000))]
fn member<'py>(
    py: Python<'py>,
    descriptor: &str,
    value: &str,
    depth: usize,
    budget: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let d = parse_descriptor(descriptor)?;
    let x = parse_rational(value)?;
    let verdict = engine::member(&d, &x, truncation(depth)?, Budget::new(budget)).map_err(to_py_err)?;
    report_to_py(py, &verdict)
}

/// Atom listing with its exactness certificate.
#[pyfunction]
#[pyo3(signature = (descriptor, depth = 10))]
fn atoms<'py>(py: Python<'py>, descriptor: &str, depth: usize) -> PyResult<Bound<'py, PyAny>> {
    let d = parse_descriptor(descriptor)?;
    let report = engine::atoms(&d, truncation(depth)?).map_err(to_py_err)?;
    report_to_py(py, &report)
}

/// The first `depth` generators as exact "a/b" strings.
#[pyfunction]
#[pyo3(signature = (descriptor, depth = 10))]
fn generators(descriptor: &str, depth: usize) -> PyResult<Vec<String>> {
    let d = parse_descriptor(descriptor)?;
    let gens = d.generators_up_to(truncation(depth)?).map_err(to_py_err)?;
    Ok(gens.iter().map(Rat::to_string).collect())
}

fn witness_to_py<'py>(py: Python<'py>, report: WitnessReport) -> PyResult<Bound<'py, PyAny>> {
    report_to_py(py, &report)
}

/// Partial sums of reciprocals of primes from a stream, verified atoms.
#[pyfunction]
#[pyo3(signature = (n, primes = "all", depth = None))]
fn witness_psums<'py>(
    py: Python<'py>,
    n: usize,
    primes: &str,
    depth: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let stream = parse_stream(primes)?;
    let report = match depth {
        Some(d) => witnesses::witness_partial_sums_with_depth(&stream, n, d),
        None => witnesses::witness_partial_sums(&stream, n),
    }
    .map_err(to_py_err)?;
    witness_to_py(py, report)
}

/// The interleaved bounded construction with cluster points 0 and 1.
#[pyfunction]
#[pyo3(signature = (n, depth = None))]
fn witness_example_ab<'py>(
    py: Python<'py>,
    n: usize,
    depth: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let report = match depth {
        Some(d) => witnesses::witness_example_ab_with_depth(n, d),
        None => witnesses::witness_example_ab(n),
    }
    .map_err(to_py_err)?;
    witness_to_py(py, report)
}

/// A strictly increasing sequence of atoms inside the given monoid.
#[pyfunction]
#[pyo3(signature = (of, n, depth = None))]
fn witness_infinite_atoms<'py>(
    py: Python<'py>,
    of: &str,
    n: usize,
    depth: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let d = parse_descriptor(of)?;
    let report = match depth {
        Some(dep) => witnesses::witness_infinite_atoms_with_depth(&d, n, dep),
        None => witnesses::witness_infinite_atoms(&d, n),
    }
    .map_err(to_py_err)?;
    witness_to_py(py, report)
}

/// Generators of a non-monotone submonoid of the given monotone monoid.
#[pyfunction]
#[pyo3(signature = (of, n, depth = None))]
fn witness_non_monotone<'py>(
    py: Python<'py>,
    of: &str,
    n: usize,
    depth: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let d = parse_descriptor(of)?;
    let report = match depth {
        Some(dep) => witnesses::witness_non_monotone_with_depth(&d, n, dep),
        None => witnesses::witness_non_monotone_submonoid(&d, n),
    }
    .map_err(to_py_err)?;
    witness_to_py(py, report)
}

/// Bounded geometric partial sums, every term a verified atom.
#[pyfunction]
#[pyo3(signature = (r, n, depth = None))]
fn witness_geo_psums<'py>(
    py: Python<'py>,
    r: &str,
    n: usize,
    depth: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let ratio = parse_rational(r)?;
    let report = match depth {
        Some(d) => witnesses::witness_geo_psums_with_depth(&ratio, n, d),
        None => witnesses::witness_geo_psums(&ratio, n),
    }
    .map_err(to_py_err)?;
    witness_to_py(py, report)
}

/// Unbounded geometric partial sums, every term an atom above its index.
#[pyfunction]
#[pyo3(signature = (r, n, depth = None))]
fn witness_unbounded_geo<'py>(
    py: Python<'py>,
    r: &str,
    n: usize,
    depth: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let ratio = parse_rational(r)?;
    let report = match depth {
        Some(d) => witnesses::witness_unbounded_geo_with_depth(&ratio, n, d),
        None => witnesses::witness_unbounded_geo(&ratio, n),
    }
    .map_err(to_py_err)?;
    witness_to_py(py, report)
}

/// Substantiality of a prime stream with exact reciprocal partial sums
/// at the checkpoints (default 10^4, 10^5, 10^6).
#[pyfunction]
#[pyo3(signature = (stream, checkpoints = None))]
fn substantial<'py>(
    py: Python<'py>,
    stream: &str,
    checkpoints: Option<Vec<u64>>,
) -> PyResult<Bound<'py, PyAny>> {
    let parsed = parse_stream(stream)?;
    let points = checkpoints.unwrap_or_else(|| vec![10_000, 100_000, 1_000_000]);
    let report = engine::is_substantial(&parsed, &points).map_err(to_py_err)?;
    report_to_py(py, &report)
}

/// Numerical semigroup invariants for positive integer generators.
#[pyfunction]
fn ns<'py>(py: Python<'py>, generators: Vec<u64>) -> PyResult<Bound<'py, PyAny>> {
    let s = NumericalSemigroup::from_integers(&generators).map_err(to_py_err)?;
    let m = s.multiplicity();
    let dict = PyDict::new(py);
    dict.set_item("generators", &generators)?;
    dict.set_item("multiplicity", m)?;
    dict.set_item("apery", s.apery(m).map_err(to_py_err)?)?;
    dict.set_item("minimal_generators", s.minimal_generators().map_err(to_py_err)?)?;
    match s.frobenius().map_err(to_py_err)? {
        Frobenius::Finite(f) => {
            dict.set_item("frobenius", f)?;
            dict.set_item("genus", s.genus().map_err(to_py_err)?)?;
        }
        Frobenius::Infinite => {
            dict.set_item("frobenius", "infinite")?;
            dict.set_item("genus", "infinite")?;
        }
    }
    Ok(dict.into_any())
}

#[pymodule]
fn puiseux(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(member, m)?)?;
    m.add_function(wrap_pyfunction!(atoms, m)?)?;
    m.add_function(wrap_pyfunction!(generators, m)?)?;
    m.add_function(wrap_pyfunction!(witness_psums, m)?)?;
    m.add_function(wrap_pyfunction!(witness_example_ab, m)?)?;
    m.add_function(wrap_pyfunction!(witness_infinite_atoms, m)?)?;
    m.add_function(wrap_pyfunction!(witness_non_monotone, m)?)?;
    m.add_function(wrap_pyfunction!(witness_geo_psums, m)?)?;
    m.add_function(wrap_pyfunction!(witness_unbounded_geo, m)?)?;
    m.add_function(wrap_pyfunction!(substantial, m)?)?;
    m.add_function(wrap_pyfunction!(ns, m)?)?;
    Ok(())
}
