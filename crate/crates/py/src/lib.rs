//! Python bindings for the `goursat` crate.

use std::collections::BTreeMap;

use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;

use goursat::render::{self, OutputFormat};
use goursat::{arith, counting, oracle, subgroups, Error};

fn to_py(err: Error) -> PyErr {
    match err {
        Error::Overflow(_) => PyOverflowError::new_err(err.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

type Res<T> = PyResult<T>;

trait IntoPy<T> {
    fn py(self) -> Res<T>;
}

impl<T> IntoPy<T> for goursat::Result<T> {
    fn py(self) -> Res<T> {
        self.map_err(to_py)
    }
}

/// Subgroup index `(a, b, c, d, ell)`.
#[pyclass(name = "GoursatTuple", module = "goursat_py", frozen, eq, hash, ord, from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PyTuple5 {
    inner: subgroups::GoursatTuple,
}

#[pymethods]
impl PyTuple5 {
    #[new]
    fn new(a: u64, b: u64, c: u64, d: u64, ell: u64) -> Self {
        Self {
            inner: subgroups::GoursatTuple::new(a, b, c, d, ell),
        }
    }

    #[getter]
    fn a(&self) -> u64 {
        self.inner.a
    }
    #[getter]
    fn b(&self) -> u64 {
        self.inner.b
    }
    #[getter]
    fn c(&self) -> u64 {
        self.inner.c
    }
    #[getter]
    fn d(&self) -> u64 {
        self.inner.d
    }
    #[getter]
    fn ell(&self) -> u64 {
        self.inner.ell
    }

    fn as_tuple(&self) -> (u64, u64, u64, u64, u64) {
        let t = self.inner;
        (t.a, t.b, t.c, t.d, t.ell)
    }

    /// Raises ValueError naming the first violated membership condition.
    fn validate(&self, m: u64, n: u64) -> Res<()> {
        self.inner.validate(m, n).py()
    }

    fn __repr__(&self) -> String {
        let t = self.inner;
        format!("GoursatTuple({}, {}, {}, {}, {})", t.a, t.b, t.c, t.d, t.ell)
    }
}

#[pyclass(name = "SubgroupDescriptor", module = "goursat_py", frozen, get_all)]
struct PyDescriptor {
    ambient: (u64, u64),
    tuple: PyTuple5,
    order: u64,
    exponent: u64,
    invariants: (u64, u64),
    cyclic: bool,
    generators: Vec<(u64, u64)>,
}

#[pymethods]
impl PyDescriptor {
    fn __repr__(&self) -> String {
        format!(
            "SubgroupDescriptor(tuple={}, order={}, exponent={}, invariants={:?}, cyclic={})",
            self.tuple.inner, self.order, self.exponent, self.invariants, self.cyclic
        )
    }
}

impl From<subgroups::SubgroupDescriptor> for PyDescriptor {
    fn from(d: subgroups::SubgroupDescriptor) -> Self {
        Self {
            ambient: d.ambient,
            tuple: PyTuple5 { inner: d.tuple },
            order: d.order,
            exponent: d.exponent,
            invariants: (d.invariants.u, d.invariants.v),
            cyclic: d.cyclic,
            generators: d.generators.to_vec(),
        }
    }
}

#[pyclass(name = "SubgroupTable", module = "goursat_py", frozen)]
struct PyTable {
    inner: counting::SubgroupTable,
}

#[pymethods]
impl PyTable {
    #[getter]
    fn ambient(&self) -> (u64, u64) {
        self.inner.ambient
    }
    #[getter]
    fn total(&self) -> u64 {
        self.inner.total
    }
    #[getter]
    fn cyclic(&self) -> u64 {
        self.inner.cyclic_total
    }
    #[getter]
    fn noncyclic(&self) -> u64 {
        self.inner.noncyclic_total
    }
    /// `{order: count}` for every order with a nonzero count.
    #[getter]
    fn by_order(&self) -> BTreeMap<u64, u64> {
        self.inner.by_order.clone()
    }
    /// `{(A, B): count}` keyed by isomorphism type `Z_A x Z_B`.
    #[getter]
    fn by_type(&self) -> BTreeMap<(u64, u64), u64> {
        self.inner
            .by_type
            .iter()
            .map(|(k, &v)| ((k.small(), k.large()), v))
            .collect()
    }

    fn to_json(&self) -> String {
        render::render_table(&self.inner, OutputFormat::Json)
    }

    fn __str__(&self) -> String {
        render::render_table(&self.inner, OutputFormat::Plain)
    }
}

#[pyclass(name = "OracleReport", module = "goursat_py", frozen)]
struct PyReport {
    inner: oracle::OracleReport,
}

#[pymethods]
impl PyReport {
    #[getter]
    fn ambient(&self) -> (u64, u64) {
        self.inner.ambient
    }
    #[getter]
    fn subgroup_count(&self) -> u64 {
        self.inner.subgroup_count
    }
    #[getter]
    fn ok(&self) -> bool {
        self.inner.is_ok()
    }
    /// `(side, key, expected, actual)` per discrepancy.
    #[getter]
    fn mismatches(&self) -> Vec<(String, String, u64, u64)> {
        self.inner
            .mismatches
            .iter()
            .map(|m| (m.side.to_string(), m.key.clone(), m.expected, m.actual))
            .collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "OracleReport(ambient={:?}, subgroups={}, mismatches={})",
            self.inner.ambient,
            self.inner.subgroup_count,
            self.inner.mismatches.len()
        )
    }
}

#[pyfunction]
fn divisors(n: u64) -> Res<Vec<u64>> {
    arith::divisors(n).py()
}

#[pyfunction]
fn euler_phi(n: u64) -> Res<u64> {
    arith::euler_phi(n).py()
}

#[pyfunction]
fn mobius(n: u64) -> Res<i8> {
    arith::mobius(n).py()
}

#[pyfunction]
fn factorize(n: u64) -> Res<Vec<(u64, u32)>> {
    Ok(arith::factorize(n).py()?.pairs().to_vec())
}

#[pyfunction]
fn count_total(m: u64, n: u64) -> Res<u64> {
    counting::count_total(m, n).py()
}

#[pyfunction]
fn count_total_fast(m: u64, n: u64) -> Res<u64> {
    counting::count_total_fast(m, n).py()
}

#[pyfunction]
fn count_total_prime_power(p: u64, a: u32, b: u32) -> Res<u64> {
    counting::count_total_prime_power(p, a, b).py()
}

#[pyfunction]
fn count_by_order(m: u64, n: u64, delta: u64) -> Res<u64> {
    counting::count_by_order(m, n, delta).py()
}

#[pyfunction]
fn count_by_order_prime_power(p: u64, a: u32, b: u32, c: u32) -> Res<u64> {
    counting::count_by_order_prime_power(p, a, b, c).py()
}

/// Number of subgroups isomorphic to `Z_a x Z_b`.
#[pyfunction]
fn count_by_type(m: u64, n: u64, a: u64, b: u64) -> Res<u64> {
    let key = counting::TypeKey::new(a, b).py()?;
    counting::count_by_type(m, n, key).py()
}

#[pyfunction]
fn count_cyclic(m: u64, n: u64) -> Res<u64> {
    counting::count_cyclic(m, n).py()
}

#[pyfunction]
fn count_cyclic_by_order(m: u64, n: u64, delta: u64) -> Res<u64> {
    counting::count_cyclic_by_order(m, n, delta).py()
}

#[pyfunction]
fn build_table(m: u64, n: u64) -> Res<PyTable> {
    Ok(PyTable {
        inner: counting::build_table(m, n).py()?,
    })
}

#[pyfunction]
fn enumerate_tuples(m: u64, n: u64) -> Res<Vec<PyTuple5>> {
    Ok(subgroups::enumerate_tuples(m, n)
        .py()?
        .map(|inner| PyTuple5 { inner })
        .collect())
}

#[pyfunction]
fn describe(m: u64, n: u64, t: PyTuple5) -> Res<PyDescriptor> {
    Ok(subgroups::describe(m, n, t.inner).py()?.into())
}

#[pyfunction]
fn materialize(m: u64, n: u64, t: PyTuple5) -> Res<Vec<(u64, u64)>> {
    Ok(subgroups::materialize(m, n, t.inner).py()?.elements().to_vec())
}

/// `(i, j_i)` offsets of the unreduced representation.
#[pyfunction]
fn offset_form(m: u64, n: u64, t: PyTuple5) -> Res<Vec<(u64, i64)>> {
    Ok(subgroups::offset_form(m, n, t.inner)
        .py()?
        .into_iter()
        .map(|row| (row.i, row.j_start))
        .collect())
}

#[pyfunction]
fn find_tuple(m: u64, n: u64, elements: Vec<(u64, u64)>) -> Res<PyTuple5> {
    let set = subgroups::ElementSet::from_pairs(m, n, elements).py()?;
    Ok(PyTuple5 {
        inner: subgroups::find_tuple(m, n, &set).py()?,
    })
}

/// `(order, exponent, (u, v))` of an explicit subgroup.
#[pyfunction]
fn classify(m: u64, n: u64, elements: Vec<(u64, u64)>) -> Res<(u64, u64, (u64, u64))> {
    let set = subgroups::ElementSet::from_pairs(m, n, elements).py()?;
    let c = oracle::classify(&set).py()?;
    Ok((c.order, c.exponent, (c.invariants.u, c.invariants.v)))
}

#[pyfunction]
#[pyo3(signature = (m, n, bound = oracle::DEFAULT_BOUND))]
fn brute_subgroups(m: u64, n: u64, bound: u64) -> Res<Vec<Vec<(u64, u64)>>> {
    Ok(oracle::brute_subgroups_bounded(m, n, bound)
        .py()?
        .into_iter()
        .map(|s| s.elements().to_vec())
        .collect())
}

#[pyfunction]
#[pyo3(signature = (m, n, bound = oracle::DEFAULT_BOUND))]
fn cross_check(m: u64, n: u64, bound: u64) -> Res<PyReport> {
    Ok(PyReport {
        inner: oracle::cross_check_bounded(m, n, bound).py()?,
    })
}

#[pymodule]
fn goursat_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTuple5>()?;
    m.add_class::<PyDescriptor>()?;
    m.add_class::<PyTable>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(divisors, m)?)?;
    m.add_function(wrap_pyfunction!(euler_phi, m)?)?;
    m.add_function(wrap_pyfunction!(mobius, m)?)?;
    m.add_function(wrap_pyfunction!(factorize, m)?)?;
    m.add_function(wrap_pyfunction!(count_total, m)?)?;
    m.add_function(wrap_pyfunction!(count_total_fast, m)?)?;
    m.add_function(wrap_pyfunction!(count_total_prime_power, m)?)?;
    m.add_function(wrap_pyfunction!(count_by_order, m)?)?;
    m.add_function(wrap_pyfunction!(count_by_order_prime_power, m)?)?;
    m.add_function(wrap_pyfunction!(count_by_type, m)?)?;
    m.add_function(wrap_pyfunction!(count_cyclic, m)?)?;
    m.add_function(wrap_pyfunction!(count_cyclic_by_order, m)?)?;
    m.add_function(wrap_pyfunction!(build_table, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_tuples, m)?)?;
    m.add_function(wrap_pyfunction!(describe, m)?)?;
    m.add_function(wrap_pyfunction!(materialize, m)?)?;
    m.add_function(wrap_pyfunction!(offset_form, m)?)?;
    m.add_function(wrap_pyfunction!(find_tuple, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(brute_subgroups, m)?)?;
    m.add_function(wrap_pyfunction!(cross_check, m)?)?;
    Ok(())
}
