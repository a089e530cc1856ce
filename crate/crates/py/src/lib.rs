//! Python bindings. Rationals cross the boundary as `"p/q"` strings and
//! multiprecision values as decimal strings, so no precision is lost.

use dashu::rational::RBig;
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use euler_hurwitz::cli::{decimal, parse_rational};
use euler_hurwitz::numerics::{const_catalan, const_gamma, const_pi, const_zeta, Mode, PrecisionContext};
use euler_hurwitz::verify::{self, Overrides, Profile};
use euler_hurwitz::zeta_series::{evaluate, reference_value, EvalRequest, Formula};
use euler_hurwitz::Error;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Usage(m) => PyValueError::new_err(m),
        Error::Domain(m) | Error::Numeric(m) => PyArithmeticError::new_err(m),
    }
}

fn parse(s: Option<&str>, allow_decimal: bool) -> PyResult<Option<RBig>> {
    s.map(|v| parse_rational(v, allow_decimal)).transpose().map_err(py_err)
}

fn context(digits: u32, mode: Option<&str>) -> PyResult<PrecisionContext> {
    let mode = match mode.map(str::to_ascii_lowercase).as_deref() {
        Some("fast") => Mode::Fast,
        Some("high") | None => Mode::High,
        Some(other) => return Err(PyValueError::new_err(format!("unknown mode {other:?}"))),
    };
    match mode {
        Mode::Fast => Ok(PrecisionContext::fast()),
        Mode::High => PrecisionContext::high(digits).map_err(py_err),
    }
}

/// Partial sum of a named series with its tail estimate and limit.
///
/// `s` is the real order (integer, `p/q` or decimal string); `x` is a `p/q` shift.
#[pyfunction]
#[pyo3(signature = (formula, terms, s=None, x=None, kind=None, digits=30, mode=None))]
fn eval_series<'py>(
    py: Python<'py>,
    formula: &str,
    terms: u64,
    s: Option<&str>,
    x: Option<&str>,
    kind: Option<&str>,
    digits: u32,
    mode: Option<&str>,
) -> PyResult<Bound<'py, PyDict>> {
    let formula = Formula::parse(formula, kind).map_err(py_err)?;
    let ctx = context(digits, mode)?;
    let req = EvalRequest::new(formula, parse(s, true)?, parse(x, false)?, terms, ctx);
    let (res, reference) = py
        .allow_threads(|| Ok::<_, Error>((evaluate(&req)?, reference_value(&req)?)))
        .map_err(py_err)?;
    let sig = ctx.effective_digits() as usize;
    let d = PyDict::new_bound(py);
    d.set_item("value", decimal(&res.value, sig))?;
    d.set_item("reference", decimal(&reference, sig))?;
    d.set_item("tail_estimate", res.tail_estimate.to_f64())?;
    d.set_item("abs_error", (&res.value - &reference).abs().to_f64())?;
    d.set_item("terms_used", res.terms_used)?;
    d.set_item("mode", res.mode.to_string())?;
    Ok(d)
}

/// Runs one identity (`id`) or the whole registry and returns report dicts.
#[pyfunction]
#[pyo3(signature = (id=None, profile="full", n_max=None, q_max=None, x=None))]
fn verify_identities<'py>(
    py: Python<'py>,
    id: Option<&str>,
    profile: &str,
    n_max: Option<u64>,
    q_max: Option<u32>,
    x: Option<&str>,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let profile: Profile = profile.parse().map_err(py_err)?;
    let ov = Overrides { n_max, q_max, x: parse(x, false)?, terms: None };
    let reports = py
        .allow_threads(|| match id {
            Some(id) => verify::run_identity_profile(id, &ov, profile),
            None => Ok(verify::run_all_with(profile, &ov, euler_hurwitz::combinatorics::bell_sequence::<RBig>)),
        })
        .map_err(py_err)?;
    reports
        .into_iter()
        .map(|r| {
            let d = PyDict::new_bound(py);
            d.set_item("id", r.id)?;
            d.set_item("params", r.params)?;
            d.set_item("lhs", r.lhs)?;
            d.set_item("rhs", r.rhs)?;
            d.set_item("status", r.status.to_string())?;
            d.set_item("detail", r.detail)?;
            Ok(d)
        })
        .collect()
}

/// Registered identity ids in registry order.
#[pyfunction]
fn identity_ids() -> Vec<&'static str> {
    verify::registry().iter().map(|i| i.id).collect()
}

/// γ, π, G and ζ(2..10) rounded to `digits` decimals.
#[pyfunction]
#[pyo3(signature = (digits=30))]
fn constants(digits: u32) -> PyResult<Vec<(String, String)>> {
    let ctx = PrecisionContext::high((digits + 10).max(30)).map_err(py_err)?;
    let d = digits as usize;
    let mut out = vec![
        ("gamma".to_string(), const_gamma(&ctx).to_fixed(d)),
        ("pi".to_string(), const_pi(&ctx).to_fixed(d)),
        ("catalan".to_string(), const_catalan(&ctx).to_fixed(d)),
    ];
    for m in 2..=10 {
        out.push((format!("zeta{m}"), const_zeta(m, &ctx).map_err(py_err)?.to_fixed(d)));
    }
    Ok(out)
}

/// Signed Stirling number of the first kind `s(n, k)` as a Python int.
#[pyfunction]
fn stirling1(py: Python<'_>, n: u64, k: u64) -> PyResult<PyObject> {
    let v = euler_hurwitz::combinatorics::stirling1(n, k).to_string();
    py.import_bound("builtins")?.getattr("int")?.call1((v,)).map(Bound::unbind)
}

/// `H_n^{(m)}(x)` as an exact `"p/q"` string; `x` defaults to 1.
#[pyfunction]
#[pyo3(signature = (n, m, x="1"))]
fn harmonic(n: u64, m: u32, x: &str) -> PyResult<String> {
    let x = parse_rational(x, false).map_err(py_err)?;
    euler_hurwitz::harmonic::hx(n, m, &x).map(|v| v.to_string()).map_err(py_err)
}

/// Formula names accepted by `eval_series`.
#[pyfunction]
fn formulas() -> Vec<&'static str> {
    Formula::NAMES.to_vec()
}

#[pymodule]
fn pyehz(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(eval_series, m)?)?;
    m.add_function(wrap_pyfunction!(verify_identities, m)?)?;
    m.add_function(wrap_pyfunction!(identity_ids, m)?)?;
    m.add_function(wrap_pyfunction!(constants, m)?)?;
    m.add_function(wrap_pyfunction!(stirling1, m)?)?;
    m.add_function(wrap_pyfunction!(harmonic, m)?)?;
    m.add_function(wrap_pyfunction!(formulas, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
