//! Python bindings. Inputs are accepted as text (`"2,3,7"`, `"5/2,3"`),
//! lists of integer exponents, or the wrapper classes below.

use algknot_core as core;
use algknot_core::harness::{self, Check, HypothesisFilter, SearchConfig};
use num_bigint::BigInt;
use num_rational::BigRational;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyComplex, PyDict, PyList};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(
    name = "FracExpPoly",
    module = "algknot",
    frozen,
    eq,
    str,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
struct PyFracExpPoly(core::FracExpPoly);

impl std::fmt::Display for PyFracExpPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

#[pymethods]
impl PyFracExpPoly {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(Self).map_err(value_error)
    }

    fn __repr__(&self) -> String {
        format!("FracExpPoly('{}')", self.0)
    }

    fn __add__(&self, other: &Self) -> Self {
        Self(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        Self(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0)
    }

    fn __neg__(&self) -> Self {
        Self(-&self.0)
    }

    #[getter]
    fn denom(&self) -> u64 {
        self.0.denom()
    }

    /// `[(num, den, coeff), ...]` in increasing exponent order.
    fn terms(&self) -> Vec<(u64, u64, BigInt)> {
        self.0
            .iter()
            .map(|(e, c)| (*e.numer(), *e.denom(), c.clone()))
            .collect()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn exact_div(&self, other: &Self) -> PyResult<Self> {
        self.0.exact_div(&other.0).map(Self).map_err(value_error)
    }

    fn reduce_mod_t_plus_1(&self, m: u64) -> PyResult<Self> {
        self.0.reduce_mod_t_plus_1(m).map(Self).map_err(value_error)
    }

    fn eval_at_one(&self) -> BigInt {
        self.0.eval_at_one()
    }

    fn eval_unit<'py>(&self, py: Python<'py>, ell: i64) -> Bound<'py, PyComplex> {
        let z = self.0.eval_unit(ell);
        PyComplex::from_doubles(py, z.re, z.im)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("serializable")
    }
}

#[pyclass(
    name = "Divisor",
    module = "algknot",
    frozen,
    eq,
    str,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
struct PyDivisor(core::Divisor);

impl std::fmt::Display for PyDivisor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

fn ratio_pair(q: &BigRational) -> (BigInt, BigInt) {
    (q.numer().clone(), q.denom().clone())
}

#[pymethods]
impl PyDivisor {
    /// `Λ_a`, the sum of all `a`-th roots of unity.
    #[staticmethod]
    fn lambda_(a: u64) -> Self {
        Self(core::Divisor::lambda(a))
    }

    #[staticmethod]
    fn unit() -> Self {
        Self(core::Divisor::unit())
    }

    fn __repr__(&self) -> String {
        format!("Divisor('{}')", self.0)
    }

    fn __add__(&self, other: &Self) -> Self {
        Self(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        Self(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    /// `[((num, den), (coeff_num, coeff_den)), ...]` by rotation number.
    fn entries(&self) -> Vec<((u64, u64), (BigInt, BigInt))> {
        self.0
            .iter()
            .map(|(r, c)| ((r.num(), r.den()), ratio_pair(c)))
            .collect()
    }

    fn mod2(&self) -> PyResult<Self> {
        self.0.mod2().map(Self).map_err(value_error)
    }

    /// `{a: (num, den)}` with `D = sum c_a Λ_a`, or `None` if not Galois invariant.
    fn lambda_coefficients(&self) -> Option<Vec<(u64, (BigInt, BigInt))>> {
        self.0
            .lambda_coefficients()
            .map(|m| m.iter().map(|(&a, c)| (a, ratio_pair(c))).collect())
    }

    fn to_cyclotomic(&self) -> PyResult<Vec<(u64, u64)>> {
        Ok(self
            .0
            .to_cyclotomic()
            .map_err(value_error)?
            .iter()
            .collect())
    }
}

#[pyclass(
    name = "WeightSystem",
    module = "algknot",
    frozen,
    eq,
    str,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
struct PyWeightSystem(core::WeightSystem);

impl std::fmt::Display for PyWeightSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

#[pymethods]
impl PyWeightSystem {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(Self(
            core::parse_input(text).map_err(value_error)?.weights(),
        ))
    }

    fn __repr__(&self) -> String {
        format!("WeightSystem('{}')", self.0)
    }

    #[getter]
    fn variables(&self) -> usize {
        self.0.variables()
    }

    /// `[(u, v), ...]` for weights `u/v`.
    fn weights(&self) -> Vec<(u64, u64)> {
        self.0.weights().iter().map(|w| (w.u(), w.v())).collect()
    }
}

#[pyclass(
    name = "BrieskornExponents",
    module = "algknot",
    frozen,
    eq,
    str,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
struct PyBrieskorn(core::BrieskornExponents);

impl std::fmt::Display for PyBrieskorn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

#[pymethods]
impl PyBrieskorn {
    #[new]
    fn new(exponents: Vec<u64>) -> PyResult<Self> {
        core::BrieskornExponents::new(exponents)
            .map(Self)
            .map_err(value_error)
    }

    fn __repr__(&self) -> String {
        format!("BrieskornExponents({:?})", self.0.exponents())
    }

    #[getter]
    fn exponents(&self) -> Vec<u64> {
        self.0.exponents().to_vec()
    }

    fn to_weights(&self) -> PyWeightSystem {
        PyWeightSystem(self.0.to_weights())
    }

    fn has_no_multiple(&self) -> bool {
        self.0.has_no_multiple()
    }
}

#[pyclass(name = "CriterionReport", module = "algknot", frozen, get_all)]
struct PyCriterionReport {
    input_a: String,
    input_b: String,
    witt_over_r: bool,
    cot_test: bool,
    mod2_congruent: bool,
    odd_sets_equal: bool,
    fox_milnor: bool,
    signatures_equal: bool,
    verdict: String,
    warnings: Vec<String>,
    json: String,
}

#[pymethods]
impl PyCriterionReport {
    fn to_json(&self) -> String {
        self.json.clone()
    }

    fn __repr__(&self) -> String {
        format!(
            "CriterionReport({} vs {}: {})",
            self.input_a, self.input_b, self.verdict
        )
    }
}

impl From<core::CriterionReport> for PyCriterionReport {
    fn from(r: core::CriterionReport) -> Self {
        Self {
            json: serde_json::to_string(&r).expect("serializable"),
            input_a: r.input_a,
            input_b: r.input_b,
            witt_over_r: r.witt_over_r,
            cot_test: r.cot_test,
            mod2_congruent: r.mod2_congruent,
            odd_sets_equal: r.odd_sets_equal,
            fox_milnor: r.fox_milnor,
            signatures_equal: r.signatures_equal,
            verdict: r.verdict.to_string(),
            warnings: r.warnings,
        }
    }
}

fn weights_of(obj: &Bound<'_, PyAny>) -> PyResult<core::WeightSystem> {
    if let Ok(w) = obj.cast::<PyWeightSystem>() {
        return Ok(w.get().0.clone());
    }
    exponents_or_text(obj).map(|i| i.weights())
}

fn exponents_or_text(obj: &Bound<'_, PyAny>) -> PyResult<core::Input> {
    if let Ok(e) = obj.cast::<PyBrieskorn>() {
        return Ok(core::Input::Exponents(e.get().0.clone()));
    }
    if let Ok(text) = obj.extract::<String>() {
        return core::parse_input(&text).map_err(value_error);
    }
    if let Ok(list) = obj.extract::<Vec<u64>>() {
        return core::BrieskornExponents::new(list)
            .map(core::Input::Exponents)
            .map_err(value_error);
    }
    Err(value_error(
        "expected a string, a list of exponents, WeightSystem or BrieskornExponents",
    ))
}

fn exponents_of(obj: &Bound<'_, PyAny>) -> PyResult<core::BrieskornExponents> {
    match exponents_or_text(obj)? {
        core::Input::Exponents(e) => Ok(e),
        core::Input::Weights(w) => Err(value_error(format!(
            "{w} is not a list of integer exponents"
        ))),
    }
}

#[pyfunction]
fn parse_input(text: &str) -> PyResult<Py<PyAny>> {
    Python::attach(|py| match core::parse_input(text).map_err(value_error)? {
        core::Input::Exponents(e) => Ok(Py::new(py, PyBrieskorn(e))?.into_any()),
        core::Input::Weights(w) => Ok(Py::new(py, PyWeightSystem(w))?.into_any()),
    })
}

#[pyfunction]
fn pf_polynomial(ws: &Bound<'_, PyAny>) -> PyResult<PyFracExpPoly> {
    core::pf_polynomial(&weights_of(ws)?)
        .map(PyFracExpPoly)
        .map_err(value_error)
}

#[pyfunction]
fn milnor_number(ws: &Bound<'_, PyAny>) -> PyResult<BigInt> {
    core::milnor_number(&weights_of(ws)?).map_err(value_error)
}

#[pyfunction]
fn char_divisor(ws: &Bound<'_, PyAny>) -> PyResult<PyDivisor> {
    core::char_divisor(&weights_of(ws)?)
        .map(PyDivisor)
        .map_err(value_error)
}

/// Cyclotomic factorization `[(d, e), ...]` of the characteristic polynomial.
#[pyfunction]
fn char_polynomial(ws: &Bound<'_, PyAny>) -> PyResult<Vec<(u64, u64)>> {
    Ok(core::char_polynomial(&weights_of(ws)?)
        .map_err(value_error)?
        .iter()
        .collect())
}

#[pyfunction]
fn cyclotomic_polynomial(d: u64) -> PyResult<Vec<BigInt>> {
    if d == 0 {
        return Err(value_error("cyclotomic index must be positive"));
    }
    Ok(core::divisor::cyclotomic_polynomial(d))
}

#[pyfunction]
fn stabilize(ws: &Bound<'_, PyAny>) -> PyResult<PyWeightSystem> {
    Ok(PyWeightSystem(core::stabilize(&weights_of(ws)?)))
}

/// `{(num, den): sigma}` keyed by rotation number.
#[pyfunction]
fn equivariant_signatures<'py>(
    py: Python<'py>,
    ws: &Bound<'py, PyAny>,
) -> PyResult<Bound<'py, PyDict>> {
    let table = core::equivariant_signatures(&weights_of(ws)?).map_err(value_error)?;
    let out = PyDict::new(py);
    for (q, s) in table.iter() {
        out.set_item((q.num(), q.den()), s)?;
    }
    Ok(out)
}

#[pyfunction]
fn total_signature(ws: &Bound<'_, PyAny>) -> PyResult<i64> {
    let table = core::equivariant_signatures(&weights_of(ws)?).map_err(value_error)?;
    Ok(core::total_signature(&table))
}

#[pyfunction]
fn witt_equivalent_over_r(a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>) -> PyResult<bool> {
    core::witt_equivalent_over_r(&weights_of(a)?, &weights_of(b)?).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (a, b, tol = core::DEFAULT_COT_TOLERANCE))]
fn cot_product_test(a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>, tol: f64) -> PyResult<bool> {
    core::cot_product_test(&exponents_of(a)?, &exponents_of(b)?, tol).map_err(value_error)
}

#[pyfunction]
fn mod2_divisor_congruent(a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>) -> PyResult<bool> {
    core::mod2_divisor_congruent(&weights_of(a)?, &weights_of(b)?).map_err(value_error)
}

#[pyfunction]
fn odd_multiples_sets_equal(a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>) -> PyResult<bool> {
    Ok(core::odd_multiples_sets_equal(
        &exponents_of(a)?,
        &exponents_of(b)?,
    ))
}

#[pyfunction]
fn minimal_odd_exponent(e: &Bound<'_, PyAny>) -> PyResult<Option<u64>> {
    Ok(core::minimal_odd_exponent(&exponents_of(e)?))
}

#[pyfunction]
fn fox_milnor_square(a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>) -> PyResult<bool> {
    core::fox_milnor_square(&weights_of(a)?, &weights_of(b)?).map_err(value_error)
}

#[pyfunction]
fn weight_rigidity_hypothesis(a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>) -> PyResult<bool> {
    Ok(core::weight_rigidity_hypothesis(
        &weights_of(a)?,
        &weights_of(b)?,
    ))
}

/// Returns `(sorted exponents, hypothesis_violated)`.
#[pyfunction]
fn recover_exponents(divisor: &PyDivisor, count: usize) -> PyResult<(Vec<u64>, bool)> {
    core::recover_exponents(&divisor.0, count)
        .map(|r| (r.exponents, r.hypothesis_violated))
        .map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (a, b, tol = core::DEFAULT_COT_TOLERANCE))]
fn decide_brieskorn_cobordism(
    a: &Bound<'_, PyAny>,
    b: &Bound<'_, PyAny>,
    tol: f64,
) -> PyResult<PyCriterionReport> {
    core::decide_brieskorn_cobordism_with_tolerance(&exponents_of(a)?, &exponents_of(b)?, tol)
        .map(PyCriterionReport::from)
        .map_err(value_error)
}

fn json_to_py<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

/// Runs a harness check and returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (check, variables = 3, max_exponent = 12, hypothesis_filter = None, seed = 0, trials = 200, ps = None))]
#[allow(clippy::too_many_arguments)]
fn verify<'py>(
    py: Python<'py>,
    check: &str,
    variables: usize,
    max_exponent: u64,
    hypothesis_filter: Option<&str>,
    seed: u64,
    trials: usize,
    ps: Option<Vec<u64>>,
) -> PyResult<Bound<'py, PyAny>> {
    let check: Check = check.parse().map_err(value_error)?;
    let hypothesis_filter = match hypothesis_filter {
        Some(f) => f.parse().map_err(value_error)?,
        None if check == Check::Theorem2 => HypothesisFilter::NoMultiple,
        None => HypothesisFilter::None,
    };
    let cfg = SearchConfig {
        variables,
        max_exponent,
        hypothesis_filter,
        check,
        seed,
        trials,
        ps: ps.unwrap_or_default(),
    };
    let report = py.detach(|| harness::verify(&cfg)).map_err(value_error)?;
    json_to_py(py, &report.to_json())
}

#[pyfunction]
#[pyo3(signature = (n = 3, ps = None))]
fn reproduce_example3<'py>(
    py: Python<'py>,
    n: usize,
    ps: Option<Vec<u64>>,
) -> PyResult<Bound<'py, PyAny>> {
    let report = harness::reproduce_example3(n, &ps.unwrap_or_default()).map_err(value_error)?;
    json_to_py(py, &report.to_json())
}

/// Nondecreasing exponent tuples in `[2, max]^vars` passing the filter.
#[pyfunction]
#[pyo3(signature = (variables, max_exponent, hypothesis_filter = "none"))]
fn enumerate_tuples<'py>(
    py: Python<'py>,
    variables: usize,
    max_exponent: u64,
    hypothesis_filter: &str,
) -> PyResult<Bound<'py, PyList>> {
    let filter: HypothesisFilter = hypothesis_filter.parse().map_err(value_error)?;
    let tuples: Vec<Vec<u64>> = harness::enumerate_tuples(variables, max_exponent, filter)
        .map(|e| e.exponents().to_vec())
        .collect();
    PyList::new(py, tuples)
}

#[pymodule]
fn algknot(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("SCHEMA_VERSION", core::SCHEMA_VERSION)?;
    m.add("DEFAULT_COT_TOLERANCE", core::DEFAULT_COT_TOLERANCE)?;
    m.add_class::<PyFracExpPoly>()?;
    m.add_class::<PyDivisor>()?;
    m.add_class::<PyWeightSystem>()?;
    m.add_class::<PyBrieskorn>()?;
    m.add_class::<PyCriterionReport>()?;
    m.add_function(wrap_pyfunction!(parse_input, m)?)?;
    m.add_function(wrap_pyfunction!(pf_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(milnor_number, m)?)?;
    m.add_function(wrap_pyfunction!(char_divisor, m)?)?;
    m.add_function(wrap_pyfunction!(char_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(cyclotomic_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(stabilize, m)?)?;
    m.add_function(wrap_pyfunction!(equivariant_signatures, m)?)?;
    m.add_function(wrap_pyfunction!(total_signature, m)?)?;
    m.add_function(wrap_pyfunction!(witt_equivalent_over_r, m)?)?;
    m.add_function(wrap_pyfunction!(cot_product_test, m)?)?;
    m.add_function(wrap_pyfunction!(mod2_divisor_congruent, m)?)?;
    m.add_function(wrap_pyfunction!(odd_multiples_sets_equal, m)?)?;
    m.add_function(wrap_pyfunction!(minimal_odd_exponent, m)?)?;
    m.add_function(wrap_pyfunction!(fox_milnor_square, m)?)?;
    m.add_function(wrap_pyfunction!(weight_rigidity_hypothesis, m)?)?;
    m.add_function(wrap_pyfunction!(recover_exponents, m)?)?;
    m.add_function(wrap_pyfunction!(decide_brieskorn_cobordism, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(reproduce_example3, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_tuples, m)?)?;
    Ok(())
}
