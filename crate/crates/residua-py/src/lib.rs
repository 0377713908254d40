//! Python bindings for the residua calculator.
//!
//! Exposes the graded-ring and bundle types as classes, every top-level
//! formula as a function with exact arbitrary-precision integers (Python
//! ints throughout), and the cross-oracle verification suites. Check
//! reports come back as plain dictionaries.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use residua::checks;
use residua::chern;
use residua::residue;
use residua::singularity;
use residua::verify;

fn value_error(e: residua::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

// ---- graded ring ----

/// Element of the truncated polynomial ring of projective n-space.
#[pyclass(name = "GradedClass", frozen, eq)]
#[derive(PartialEq)]
struct PyGradedClass(residua::GradedClass);

#[pymethods]
impl PyGradedClass {
    #[new]
    fn new(ambient_dim: usize, coeffs: Vec<BigInt>) -> PyResult<Self> {
        residua::GradedClass::new(ambient_dim, coeffs).map(Self).map_err(value_error)
    }

    #[staticmethod]
    fn zero(ambient_dim: usize) -> Self {
        Self(residua::GradedClass::zero(ambient_dim))
    }

    #[staticmethod]
    fn one(ambient_dim: usize) -> Self {
        Self(residua::GradedClass::one(ambient_dim))
    }

    #[staticmethod]
    fn monomial(ambient_dim: usize, degree: usize, coeff: BigInt) -> PyResult<Self> {
        residua::GradedClass::monomial(ambient_dim, degree, coeff)
            .map(Self)
            .map_err(value_error)
    }

    fn ambient_dim(&self) -> usize {
        self.0.ambient_dim()
    }

    fn coeffs(&self) -> Vec<BigInt> {
        self.0.coeffs().to_vec()
    }

    fn coeff(&self, degree: usize) -> BigInt {
        self.0.coeff(degree)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn add(&self, other: &Self) -> PyResult<Self> {
        self.0.add(&other.0).map(Self).map_err(value_error)
    }

    fn sub(&self, other: &Self) -> PyResult<Self> {
        self.0.sub(&other.0).map(Self).map_err(value_error)
    }

    fn mul(&self, other: &Self) -> PyResult<Self> {
        self.0.mul(&other.0).map(Self).map_err(value_error)
    }

    fn neg(&self) -> Self {
        Self(self.0.neg())
    }

    fn scale(&self, factor: BigInt) -> Self {
        Self(self.0.scale(&factor))
    }

    fn pow(&self, exponent: usize) -> Self {
        Self(self.0.pow(exponent))
    }

    fn invert(&self) -> PyResult<Self> {
        self.0.invert().map(Self).map_err(value_error)
    }

    fn integrate(&self) -> BigInt {
        self.0.integrate()
    }

    fn degree_part(&self, degree: usize) -> PyResult<Self> {
        self.0.degree_part(degree).map(Self).map_err(value_error)
    }

    fn __repr__(&self) -> String {
        format!("GradedClass({})", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

// ---- formal bundles ----

/// Formal vector bundle over projective n-space: a rank plus a total
/// Chern class.
#[pyclass(name = "FormalBundle", frozen, eq)]
#[derive(PartialEq)]
struct PyFormalBundle(residua::FormalBundle);

#[pymethods]
impl PyFormalBundle {
    #[new]
    fn new(rank: i64, total_chern: &PyGradedClass) -> PyResult<Self> {
        residua::FormalBundle::new(rank, total_chern.0.clone())
            .map(Self)
            .map_err(value_error)
    }

    #[staticmethod]
    fn tangent_projective(n: usize) -> PyResult<Self> {
        residua::FormalBundle::tangent_projective(n).map(Self).map_err(value_error)
    }

    #[staticmethod]
    fn line_bundle(n: usize, degree: BigInt) -> Self {
        Self(residua::FormalBundle::line_bundle(n, degree))
    }

    #[staticmethod]
    fn direct_sum_of_lines(n: usize, degrees: Vec<BigInt>) -> Self {
        Self(residua::FormalBundle::direct_sum_of_lines(n, &degrees))
    }

    fn ambient_dim(&self) -> usize {
        self.0.ambient_dim()
    }

    fn rank(&self) -> i64 {
        self.0.rank()
    }

    fn total_chern(&self) -> PyGradedClass {
        PyGradedClass(self.0.total_chern().clone())
    }

    fn chern_class(&self, degree: usize) -> PyResult<PyGradedClass> {
        self.0.chern_class(degree).map(PyGradedClass).map_err(value_error)
    }

    fn dual(&self) -> Self {
        Self(self.0.dual())
    }

    fn virtual_difference(&self, other: &Self) -> PyResult<Self> {
        self.0.virtual_difference(&other.0).map(Self).map_err(value_error)
    }

    fn __repr__(&self) -> String {
        format!("FormalBundle(rank={}, total_chern={})", self.0.rank(), self.0.total_chern())
    }
}

// ---- symmetric polynomials and residue sums ----

/// Weighted-homogeneous symmetric polynomial in the Chern variables
/// c_1..c_k.
#[pyclass(name = "SymmetricPolynomial", frozen, eq)]
#[derive(PartialEq)]
struct PySymmetricPolynomial(residua::SymmetricPolynomial);

#[pymethods]
impl PySymmetricPolynomial {
    #[new]
    fn new(num_vars: usize, terms: Vec<(Vec<usize>, BigInt)>) -> PyResult<Self> {
        residua::SymmetricPolynomial::new(num_vars, terms).map(Self).map_err(value_error)
    }

    #[staticmethod]
    fn one(num_vars: usize) -> Self {
        Self(residua::SymmetricPolynomial::one(num_vars))
    }

    #[staticmethod]
    fn chern_variable(num_vars: usize, index: usize) -> PyResult<Self> {
        residua::SymmetricPolynomial::chern_variable(num_vars, index)
            .map(Self)
            .map_err(value_error)
    }

    #[staticmethod]
    fn c1_power(num_vars: usize, exponent: usize) -> PyResult<Self> {
        residua::SymmetricPolynomial::c1_power(num_vars, exponent)
            .map(Self)
            .map_err(value_error)
    }

    fn num_vars(&self) -> usize {
        self.0.num_vars()
    }

    fn weighted_degree(&self) -> usize {
        self.0.weighted_degree()
    }

    fn evaluate(&self, bundle: &PyFormalBundle) -> PyResult<PyGradedClass> {
        self.0.evaluate(&bundle.0).map(PyGradedClass).map_err(value_error)
    }

    fn __repr__(&self) -> String {
        format!("SymmetricPolynomial({})", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

fn residue_result_to_dict<'py>(
    py: Python<'py>,
    result: &residua::ResidueResult,
) -> PyResult<Bound<'py, PyDict>> {
    let dict = PyDict::new(py);
    dict.set_item("value", result.value.clone())?;
    dict.set_item("method", result.method.to_string())?;
    dict.set_item("ambient_dim", result.ambient_dim)?;
    dict.set_item("codimension", result.codimension)?;
    dict.set_item("degrees", result.degrees.clone())?;
    dict.set_item("phi", &result.phi)?;
    Ok(dict)
}

#[pyfunction]
fn residue_sum_general<'py>(
    py: Python<'py>,
    n: usize,
    normal: &PyFormalBundle,
    phi: &PySymmetricPolynomial,
) -> PyResult<Bound<'py, PyDict>> {
    let result = residue::residue_sum_general(n, &normal.0, &phi.0).map_err(value_error)?;
    residue_result_to_dict(py, &result)
}

#[pyfunction]
fn residue_sum_top_chern<'py>(
    py: Python<'py>,
    n: usize,
    degrees: Vec<BigInt>,
) -> PyResult<Bound<'py, PyDict>> {
    let result = residue::residue_sum_top_chern(n, &degrees).map_err(value_error)?;
    residue_result_to_dict(py, &result)
}

#[pyfunction]
fn residue_sum_c1_power<'py>(
    py: Python<'py>,
    n: usize,
    degrees: Vec<BigInt>,
) -> PyResult<Bound<'py, PyDict>> {
    let result = residue::residue_sum_c1_power(n, &degrees).map_err(value_error)?;
    residue_result_to_dict(py, &result)
}

#[pyfunction]
fn residue_sum_top_chern_ring<'py>(
    py: Python<'py>,
    n: usize,
    degrees: Vec<BigInt>,
) -> PyResult<Bound<'py, PyDict>> {
    let result = residue::residue_sum_top_chern_ring(n, &degrees).map_err(value_error)?;
    residue_result_to_dict(py, &result)
}

#[pyfunction]
fn residue_sum_c1_power_ring<'py>(
    py: Python<'py>,
    n: usize,
    degrees: Vec<BigInt>,
) -> PyResult<Bound<'py, PyDict>> {
    let result = residue::residue_sum_c1_power_ring(n, &degrees).map_err(value_error)?;
    residue_result_to_dict(py, &result)
}

#[pyfunction]
fn camacho_sad_degree_prefix(n: usize, degree: BigInt) -> PyResult<BigInt> {
    residue::camacho_sad_degree_prefix(n, &degree).map_err(value_error)
}

#[pyfunction]
fn camacho_sad_total(n: usize, degree: BigInt, chi: BigInt, mu: BigInt) -> PyResult<BigInt> {
    residue::camacho_sad_total(n, &degree, &chi, &mu).map_err(value_error)
}

// ---- bundle-level helpers ----

#[pyfunction]
fn elementary_symmetric(values: Vec<BigInt>, m: usize) -> BigInt {
    chern::elementary_symmetric(&values, m)
}

#[pyfunction]
fn top_chern_dual_tensor_line(
    bundle: &PyFormalBundle,
    line: &PyFormalBundle,
) -> PyResult<PyGradedClass> {
    chern::top_chern_dual_tensor_line(&bundle.0, &line.0)
        .map(PyGradedClass)
        .map_err(value_error)
}

#[pyfunction]
fn inverse_total_chern_multiindex(bundle: &PyFormalBundle, weight: usize) -> PyGradedClass {
    PyGradedClass(chern::inverse_total_chern_multiindex(&bundle.0, weight))
}

#[pyfunction]
fn enumerate_multiindices(weight: usize) -> PyResult<Vec<Vec<usize>>> {
    let indices = chern::enumerate_multiindices(weight).map_err(value_error)?;
    Ok(indices.into_iter().map(|index| index.parts().to_vec()).collect())
}

// ---- singularity invariants ----

fn stratum(
    n: usize,
    stratum_degrees: Vec<BigInt>,
    degree: BigInt,
    mu: BigInt,
) -> PyResult<residua::StratumSpec> {
    residua::StratumSpec::new(n, stratum_degrees, degree, mu).map_err(value_error)
}

#[pyfunction]
fn parusinski_global(n: usize, degree: BigInt) -> PyResult<BigInt> {
    singularity::parusinski_global(n, &degree).map_err(value_error)
}

#[pyfunction]
fn adjunction_euler(n: usize, degree: BigInt, mu_total: BigInt) -> PyResult<BigInt> {
    singularity::adjunction_euler(n, &degree, &mu_total).map_err(value_error)
}

#[pyfunction]
fn milnor_stratum_ring(
    n: usize,
    stratum_degrees: Vec<BigInt>,
    degree: BigInt,
    mu: BigInt,
) -> PyResult<BigInt> {
    Ok(singularity::milnor_stratum_ring(&stratum(n, stratum_degrees, degree, mu)?))
}

#[pyfunction]
fn milnor_stratum_multiindex(
    n: usize,
    stratum_degrees: Vec<BigInt>,
    degree: BigInt,
    mu: BigInt,
) -> PyResult<BigInt> {
    Ok(singularity::milnor_stratum_multiindex(&stratum(n, stratum_degrees, degree, mu)?))
}

#[pyfunction]
fn milnor_curve_case(
    n: usize,
    stratum_degrees: Vec<BigInt>,
    degree: BigInt,
    mu: BigInt,
) -> PyResult<BigInt> {
    singularity::milnor_curve_case(&stratum(n, stratum_degrees, degree, mu)?)
        .map_err(value_error)
}

#[pyfunction]
fn milnor_discrepancy_note(
    n: usize,
    stratum_degrees: Vec<BigInt>,
    degree: BigInt,
    mu: BigInt,
) -> PyResult<Option<String>> {
    Ok(singularity::discrepancy_note(&stratum(n, stratum_degrees, degree, mu)?))
}

#[pyfunction]
fn euler_ci(n: usize, degrees: Vec<BigInt>) -> PyResult<BigInt> {
    singularity::euler_ci(n, &degrees).map_err(value_error)
}

#[pyfunction]
fn euler_ci_multiindex(n: usize, degrees: Vec<BigInt>) -> PyResult<BigInt> {
    singularity::euler_ci_multiindex(n, &degrees).map_err(value_error)
}

// ---- decision procedures ----

fn report_to_dict<'py>(
    py: Python<'py>,
    report: &residua::CheckReport,
) -> PyResult<Bound<'py, PyDict>> {
    let dict = PyDict::new(py);
    dict.set_item("check", &report.check_name)?;
    dict.set_item("verdict", report.verdict.to_string())?;
    let witness = PyDict::new(py);
    for (name, value) in &report.witness {
        witness.set_item(name, value.clone())?;
    }
    dict.set_item("witness", witness)?;
    dict.set_item("notes", report.notes.clone())?;
    Ok(dict)
}

#[pyfunction]
fn congruence_check<'py>(
    py: Python<'py>,
    n: usize,
    degree: BigInt,
    chi: BigInt,
    mu_total: BigInt,
) -> PyResult<Bound<'py, PyDict>> {
    let report = checks::congruence_check(n, &degree, &chi, &mu_total).map_err(value_error)?;
    report_to_dict(py, &report)
}

/// Monic witness polynomial of the degree congruence; the hypersurface
/// degree must be one of its integer roots.
#[pyclass(name = "AdjunctionPolynomial", frozen, eq)]
#[derive(PartialEq)]
struct PyAdjunctionPolynomial(checks::AdjunctionPolynomial);

#[pymethods]
impl PyAdjunctionPolynomial {
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn coefficients(&self) -> Vec<BigInt> {
        self.0.coefficients().to_vec()
    }

    fn evaluate(&self, x: BigInt) -> BigInt {
        self.0.evaluate(&x)
    }

    fn is_root(&self, x: BigInt) -> bool {
        self.0.is_root(&x)
    }

    fn __repr__(&self) -> String {
        format!("AdjunctionPolynomial({})", self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyfunction]
fn adjunction_polynomial(n: usize, chi: BigInt, mu_total: BigInt) -> PyResult<PyAdjunctionPolynomial> {
    checks::adjunction_polynomial(n, &chi, &mu_total)
        .map(PyAdjunctionPolynomial)
        .map_err(value_error)
}

#[pyfunction]
fn min_degree_check<'py>(
    py: Python<'py>,
    irreducible: bool,
    has_singularity: bool,
    curve_degree: BigInt,
) -> PyResult<Bound<'py, PyDict>> {
    let report = checks::min_degree_check(irreducible, has_singularity, &curve_degree);
    report_to_dict(py, &report)
}

#[pyfunction]
fn schwartz_sum(curve_degree: BigInt, foliation_degree: BigInt, mu_total: BigInt) -> BigInt {
    checks::schwartz_sum(&curve_degree, &foliation_degree, &mu_total)
}

#[pyfunction]
#[pyo3(signature = (
    curve_degree,
    foliation_degree,
    num_sing_points = None,
    mu_total = None,
    chi = None,
    irreducible = true,
    nodal_only = false,
    non_dicritical = false,
))]
#[allow(clippy::too_many_arguments)]
fn sing_count_bound<'py>(
    py: Python<'py>,
    curve_degree: BigInt,
    foliation_degree: BigInt,
    num_sing_points: Option<BigInt>,
    mu_total: Option<BigInt>,
    chi: Option<BigInt>,
    irreducible: bool,
    nodal_only: bool,
    non_dicritical: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let mut data = residua::CurveFoliationData::new(curve_degree, foliation_degree);
    data.num_sing_points = num_sing_points;
    data.mu_total = mu_total;
    data.chi = chi;
    data.irreducible = irreducible;
    data.nodal_only = nodal_only;
    data.non_dicritical = non_dicritical;
    let report = checks::sing_count_bound(&data).map_err(value_error)?;
    report_to_dict(py, &report)
}

// ---- verification ----

#[pyfunction]
fn verify_suites(py: Python<'_>) -> PyResult<Vec<Bound<'_, PyDict>>> {
    verify::run_all()
        .iter()
        .map(|suite| {
            let dict = PyDict::new(py);
            dict.set_item("name", suite.name)?;
            dict.set_item("cases", suite.cases)?;
            dict.set_item("passed", suite.passed())?;
            dict.set_item("failure", suite.failure.clone())?;
            Ok(dict)
        })
        .collect()
}

#[pymodule]
fn residua_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGradedClass>()?;
    m.add_class::<PyFormalBundle>()?;
    m.add_class::<PySymmetricPolynomial>()?;
    m.add_class::<PyAdjunctionPolynomial>()?;
    m.add_function(wrap_pyfunction!(residue_sum_general, m)?)?;
    m.add_function(wrap_pyfunction!(residue_sum_top_chern, m)?)?;
    m.add_function(wrap_pyfunction!(residue_sum_c1_power, m)?)?;
    m.add_function(wrap_pyfunction!(residue_sum_top_chern_ring, m)?)?;
    m.add_function(wrap_pyfunction!(residue_sum_c1_power_ring, m)?)?;
    m.add_function(wrap_pyfunction!(camacho_sad_degree_prefix, m)?)?;
    m.add_function(wrap_pyfunction!(camacho_sad_total, m)?)?;
    m.add_function(wrap_pyfunction!(elementary_symmetric, m)?)?;
    m.add_function(wrap_pyfunction!(top_chern_dual_tensor_line, m)?)?;
    m.add_function(wrap_pyfunction!(inverse_total_chern_multiindex, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_multiindices, m)?)?;
    m.add_function(wrap_pyfunction!(parusinski_global, m)?)?;
    m.add_function(wrap_pyfunction!(adjunction_euler, m)?)?;
    m.add_function(wrap_pyfunction!(milnor_stratum_ring, m)?)?;
    m.add_function(wrap_pyfunction!(milnor_stratum_multiindex, m)?)?;
    m.add_function(wrap_pyfunction!(milnor_curve_case, m)?)?;
    m.add_function(wrap_pyfunction!(milnor_discrepancy_note, m)?)?;
    m.add_function(wrap_pyfunction!(euler_ci, m)?)?;
    m.add_function(wrap_pyfunction!(euler_ci_multiindex, m)?)?;
    m.add_function(wrap_pyfunction!(congruence_check, m)?)?;
    m.add_function(wrap_pyfunction!(adjunction_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(min_degree_check, m)?)?;
    m.add_function(wrap_pyfunction!(schwartz_sum, m)?)?;
    m.add_function(wrap_pyfunction!(sing_count_bound, m)?)?;
    m.add_function(wrap_pyfunction!(verify_suites, m)?)?;
    Ok(())
}
