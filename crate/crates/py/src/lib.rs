//! Python bindings. Coordinates cross the boundary as `fractions.Fraction`;
//! inputs may be ints, Fractions or `"p/q"` strings.

use pyo3::basic::CompareOp;
use pyo3::create_exception;
use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use skewroot_core::rational::{format_rational, parse_rational};
use skewroot_core::{roots, Rational};

create_exception!(skewroot, SkewrootError, PyValueError);

fn err(e: skewroot_core::Error) -> PyErr {
    SkewrootError::new_err(format!("{}: {e}", e.kind()))
}

fn to_fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((format_rational(r),))
}

fn from_py_rational(v: &Bound<'_, PyAny>) -> PyResult<Rational> {
    let s = v.str()?;
    let s = s.to_str()?.trim();
    parse_rational(s).ok_or_else(|| SkewrootError::new_err(format!("not a rational: {s:?}")))
}

fn central_coeffs<'py>(py: Python<'py>, c: &[Rational]) -> PyResult<Vec<Bound<'py, PyAny>>> {
    c.iter().map(|r| to_fraction(py, r)).collect()
}

#[pyclass(frozen, from_py_object, module = "skewroot")]
#[derive(Clone)]
pub struct Algebra(skewroot_core::Algebra);

#[pymethods]
impl Algebra {
    /// `quat:A,B`, `cyclic:default` or `cyclic:g=..;sigma=..;gamma=..`.
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        skewroot_core::parse_algebra(spec).map(Algebra).map_err(err)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    #[getter]
    fn basis_names(&self) -> Vec<String> {
        self.0.basis_names().iter().map(|s| s.to_string()).collect()
    }

    fn is_quaternion(&self) -> bool {
        self.0.is_quaternion()
    }

    /// Parses an element expression such as `"1/2 + 3i - j"`.
    fn element(&self, src: &str) -> PyResult<Element> {
        skewroot_core::parse_element(src, &self.0).map(Element).map_err(err)
    }

    fn element_from_coords(&self, coords: Vec<Bound<'_, PyAny>>) -> PyResult<Element> {
        let c = coords.iter().map(from_py_rational).collect::<PyResult<Vec<_>>>()?;
        self.0.element(c).map(Element).map_err(err)
    }

    /// Parses a polynomial in `x`, coefficients on the left.
    fn poly(&self, src: &str) -> PyResult<Polynomial> {
        skewroot_core::parse_poly(src, &self.0).map(Polynomial).map_err(err)
    }

    fn generator(&self, name: &str) -> PyResult<Element> {
        self.0
            .generator(name)
            .map(Element)
            .ok_or_else(|| SkewrootError::new_err(format!("no generator named {name:?}")))
    }

    fn one(&self) -> Element {
        Element(self.0.one())
    }

    fn zero(&self) -> Element {
        Element(self.0.zero())
    }

    fn random_element(&self, seed: u64, bound: u32) -> Element {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Element(self.0.random_element(&mut rng, bound))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Algebra({:?})", self.0.to_string())
    }
}

#[pyclass(frozen, from_py_object, module = "skewroot")]
#[derive(Clone)]
pub struct Element(skewroot_core::Element);

fn element_operand(alg: &skewroot_core::Algebra, v: &Bound<'_, PyAny>) -> PyResult<skewroot_core::Element> {
    if let Ok(e) = v.cast::<Element>() {
        return Ok(e.get().0.clone());
    }
    if v.is_instance_of::<pyo3::types::PyString>() {
        return Err(PyTypeError::new_err("parse strings with Algebra.element"));
    }
    Ok(alg.scalar(from_py_rational(v)?))
}

#[pymethods]
impl Element {
    #[getter]
    fn algebra(&self) -> Algebra {
        Algebra(self.0.algebra().clone())
    }

    #[getter]
    fn coords<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        central_coeffs(py, self.0.coords())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_central(&self) -> bool {
        self.0.is_central()
    }

    fn inverse(&self) -> PyResult<Element> {
        self.0.inverse().map(Element).map_err(err)
    }

    /// Canonical involution; quaternion algebras only.
    fn conjugate(&self) -> PyResult<Element> {
        self.0.conjugate().map(Element).map_err(err)
    }

    fn reduced_norm<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_fraction(py, &self.0.reduced_norm().map_err(err)?)
    }

    /// `t * self * t^-1`.
    fn conjugated_by(&self, t: &Element) -> PyResult<Element> {
        self.0.conjugated_by(&t.0).map(Element).map_err(err)
    }

    fn __add__(&self, other: &Bound<'_, PyAny>) -> PyResult<Element> {
        let o = element_operand(self.0.algebra(), other)?;
        self.0.try_add(&o).map(Element).map_err(err)
    }

    fn __radd__(&self, other: &Bound<'_, PyAny>) -> PyResult<Element> {
        self.__add__(other)
    }

    fn __sub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Element> {
        let o = element_operand(self.0.algebra(), other)?;
        self.0.try_sub(&o).map(Element).map_err(err)
    }

    fn __rsub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Element> {
        let o = element_operand(self.0.algebra(), other)?;
        o.try_sub(&self.0).map(Element).map_err(err)
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Element> {
        let o = element_operand(self.0.algebra(), other)?;
        self.0.try_mul(&o).map(Element).map_err(err)
    }

    fn __rmul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Element> {
        let o = element_operand(self.0.algebra(), other)?;
        o.try_mul(&self.0).map(Element).map_err(err)
    }

    fn __neg__(&self) -> Element {
        Element(-&self.0)
    }

    fn __pow__(&self, n: u32, modulo: Option<&Bound<'_, PyAny>>) -> PyResult<Element> {
        if modulo.is_some() {
            return Err(PyTypeError::new_err("modular power is not supported"));
        }
        Ok(Element(self.0.pow(n)))
    }

    fn __richcmp__(&self, other: &Bound<'_, PyAny>, op: CompareOp) -> PyResult<Py<PyAny>> {
        let py = other.py();
        let Ok(o) = element_operand(self.0.algebra(), other) else {
            return Ok(py.NotImplemented());
        };
        let eq = self.0 == o;
        match op {
            CompareOp::Eq => Ok(eq.into_pyobject(py)?.to_owned().into_any().unbind()),
            CompareOp::Ne => Ok((!eq).into_pyobject(py)?.to_owned().into_any().unbind()),
            _ => Ok(py.NotImplemented()),
        }
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.0.hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Element({:?})", self.0.to_string())
    }
}

#[pyclass(frozen, from_py_object, module = "skewroot")]
#[derive(Clone)]
pub struct Polynomial(skewroot_core::SkewPolynomial);

fn poly_operand(alg: &skewroot_core::Algebra, v: &Bound<'_, PyAny>) -> PyResult<skewroot_core::SkewPolynomial> {
    if let Ok(p) = v.cast::<Polynomial>() {
        return Ok(p.get().0.clone());
    }
    element_operand(alg, v).map(skewroot_core::SkewPolynomial::constant)
}

#[pymethods]
impl Polynomial {
    /// `(x - d_n)...(x - d_1)`; `ds[0]` is the rightmost factor.
    #[staticmethod]
    fn from_linear_factors(ds: Vec<Element>) -> PyResult<Polynomial> {
        let ds: Vec<_> = ds.into_iter().map(|e| e.0).collect();
        skewroot_core::SkewPolynomial::from_linear_factors(&ds)
            .map(Polynomial)
            .map_err(err)
    }

    #[getter]
    fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    /// Coefficients, lowest degree first.
    #[getter]
    fn coeffs(&self) -> Vec<Element> {
        self.0.coeffs().iter().cloned().map(Element).collect()
    }

    /// Right evaluation `sum a_k d^k`.
    fn right_eval(&self, d: &Element) -> PyResult<Element> {
        self.0.right_eval(&d.0).map(Element).map_err(err)
    }

    fn __call__(&self, d: &Element) -> PyResult<Element> {
        self.right_eval(d)
    }

    /// `(q, r)` with `self = q * divisor + r`.
    fn right_divide(&self, divisor: &Polynomial) -> PyResult<(Polynomial, Polynomial)> {
        let (q, r) = self.0.right_divide(&divisor.0).map_err(err)?;
        Ok((Polynomial(q), Polynomial(r)))
    }

    fn conjugate(&self) -> PyResult<Polynomial> {
        self.0.conjugate().map(Polynomial).map_err(err)
    }

    fn __add__(&self, other: &Bound<'_, PyAny>) -> PyResult<Polynomial> {
        let o = poly_operand(self.0.algebra(), other)?;
        self.0.try_add(&o).map(Polynomial).map_err(err)
    }

    fn __sub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Polynomial> {
        let o = poly_operand(self.0.algebra(), other)?;
        self.0.try_sub(&o).map(Polynomial).map_err(err)
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Polynomial> {
        let o = poly_operand(self.0.algebra(), other)?;
        self.0.try_mul(&o).map(Polynomial).map_err(err)
    }

    fn __rmul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Polynomial> {
        let o = poly_operand(self.0.algebra(), other)?;
        o.try_mul(&self.0).map(Polynomial).map_err(err)
    }

    fn __richcmp__(&self, other: &Bound<'_, PyAny>, op: CompareOp) -> PyResult<Py<PyAny>> {
        let py = other.py();
        let Ok(o) = other.cast::<Polynomial>() else {
            return Ok(py.NotImplemented());
        };
        let eq = self.0 == o.get().0;
        match op {
            CompareOp::Eq => Ok(eq.into_pyobject(py)?.to_owned().into_any().unbind()),
            CompareOp::Ne => Ok((!eq).into_pyobject(py)?.to_owned().into_any().unbind()),
            _ => Ok(py.NotImplemented()),
        }
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({:?})", self.0.to_string())
    }
}

fn unwrap_all(ds: Vec<Element>) -> Vec<skewroot_core::Element> {
    ds.into_iter().map(|e| e.0).collect()
}

/// Monic minimal polynomial over the rationals, lowest degree first.
#[pyfunction]
fn minimal_polynomial<'py>(py: Python<'py>, p: &Element) -> PyResult<Vec<Bound<'py, PyAny>>> {
    central_coeffs(py, skewroot_core::minimal_polynomial(&p.0).coeffs())
}

#[pyfunction]
fn are_conjugate(p: &Element, q: &Element) -> PyResult<bool> {
    skewroot_core::are_conjugate(&p.0, &q.0).map_err(err)
}

/// Nonzero `t` with `t p t^-1 = q`.
#[pyfunction]
fn find_conjugator(p: &Element, q: &Element) -> PyResult<Element> {
    skewroot_core::find_conjugator(&p.0, &q.0).map(Element).map_err(err)
}

#[pyfunction]
fn centralizer_basis(p: &Element) -> Vec<Element> {
    skewroot_core::centralizer_basis(&p.0).into_iter().map(Element).collect()
}

/// Roots `zeta_1..zeta_n` of `(x - d_n)...(x - d_1)`; `ds[0]` is `d_1`.
#[pyfunction]
fn linear_factor_roots(ds: Vec<Element>) -> PyResult<Vec<Element>> {
    let sol = roots::linear_factor_roots(&unwrap_all(ds)).map_err(err)?;
    Ok(sol.zetas().into_iter().map(Element).collect())
}

/// Same roots via the conjugate-polynomial formula; quaternions only.
#[pyfunction]
fn quaternion_roots(ds: Vec<Element>) -> PyResult<Vec<Element>> {
    let sol = roots::quaternion_roots(&unwrap_all(ds)).map_err(err)?;
    Ok(sol.zetas().into_iter().map(Element).collect())
}

/// `(d, d3)` with `(x - d2)(x - d1) = (x - d)(x - d3)`.
#[pyfunction]
fn swap_factors(d1: &Element, d2: &Element) -> PyResult<(Element, Element)> {
    let (a, b) = roots::swap_factors(&d1.0, &d2.0).map_err(err)?;
    Ok((Element(a), Element(b)))
}

#[pyfunction]
fn quaternion_swap(d1: &Element, d2: &Element) -> PyResult<(Element, Element)> {
    let (a, b) = roots::quaternion_swap(&d1.0, &d2.0).map_err(err)?;
    Ok((Element(a), Element(b)))
}

#[pyfunction]
fn vanishes_on_class(p: &Polynomial, a: &Element) -> PyResult<bool> {
    roots::vanishes_on_class(&p.0, &a.0).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (ds, samples_per_class = 30, seed = 0))]
fn verify_exact_root_count(ds: Vec<Element>, samples_per_class: usize, seed: u64) -> PyResult<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    roots::verify_exact_root_count(&unwrap_all(ds), samples_per_class, &mut rng).map_err(err)
}

/// Quadratic `(x - b)(x - a)` with the given numbers of certified roots and
/// non-roots in the class of `a`. Returns a dict.
#[pyfunction]
#[pyo3(signature = (a, d, num_roots = 10, num_nonroots = 10, seed = 0))]
fn build_quadratic_counterexample<'py>(
    py: Python<'py>,
    a: &Element,
    d: &Element,
    num_roots: usize,
    num_nonroots: usize,
    seed: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rep = roots::build_quadratic_counterexample(&a.0, &d.0, num_roots, num_nonroots, &mut rng)
        .map_err(err)?;
    let wrap = |v: &[skewroot_core::Element]| -> PyResult<Bound<'py, PyList>> {
        PyList::new(py, v.iter().cloned().map(Element))
    };
    let out = PyDict::new(py);
    out.set_item("q", Element(rep.q.clone()))?;
    out.set_item("b", Element(rep.b.clone()))?;
    out.set_item("polynomial", Polynomial(rep.polynomial.clone()))?;
    out.set_item("class_polynomial", central_coeffs(py, rep.lambda.coeffs())?)?;
    out.set_item("witness", Element(rep.witness.clone()))?;
    out.set_item("roots", wrap(&rep.roots)?)?;
    out.set_item("nonroots", wrap(&rep.nonroots)?)?;
    out.set_item("remainder", Polynomial(rep.remainder.clone()))?;
    Ok(out)
}

#[pymodule]
fn skewroot(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("SkewrootError", m.py().get_type::<SkewrootError>())?;
    m.add_class::<Algebra>()?;
    m.add_class::<Element>()?;
    m.add_class::<Polynomial>()?;
    m.add_function(wrap_pyfunction!(minimal_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(are_conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(find_conjugator, m)?)?;
    m.add_function(wrap_pyfunction!(centralizer_basis, m)?)?;
    m.add_function(wrap_pyfunction!(linear_factor_roots, m)?)?;
    m.add_function(wrap_pyfunction!(quaternion_roots, m)?)?;
    m.add_function(wrap_pyfunction!(swap_factors, m)?)?;
    m.add_function(wrap_pyfunction!(quaternion_swap, m)?)?;
    m.add_function(wrap_pyfunction!(vanishes_on_class, m)?)?;
    m.add_function(wrap_pyfunction!(verify_exact_root_count, m)?)?;
    m.add_function(wrap_pyfunction!(build_quadratic_counterexample, m)?)?;
    Ok(())
}
