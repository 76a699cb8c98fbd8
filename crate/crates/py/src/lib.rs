//! Python bindings: groups, tables of marks, induction certificates and the
//! restriction checks. Certificates come back as plain dicts.

use std::sync::Arc;

use burnside::artin::artin_certificate;
use burnside::brauer::brauer_certificate;
use burnside::burnside::{BurnsideElement, GhostElement, MarksTable as CoreMarks};
use burnside::character::{verify_artin_restriction, verify_brauer_restriction, TableLibrary};
use burnside::exact::BigInt;
use burnside::group::{builtin, parse_group, GenBound, Group as CoreGroup, SubgroupLattice, DEFAULT_ORDER_CAP};
use burnside::lie::{order_n_lie, PhiData};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::Value;

fn value_error(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn bound(n: &str) -> PyResult<GenBound> {
    n.parse().map_err(value_error)
}

fn big_to_py<'py>(py: Python<'py>, v: &BigInt) -> PyResult<Bound<'py, PyAny>> {
    py.import("builtins")?.getattr("int")?.call1((v.to_string(),))
}

fn big_from_py(v: &Bound<'_, PyAny>) -> PyResult<BigInt> {
    v.str()?.to_str()?.parse().map_err(value_error)
}

fn json_to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match n.as_i64() {
            Some(i) => i.into_pyobject(py)?.into_any(),
            None => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        // integers too large for i64 travel as decimal strings
        Value::String(s) => match s.parse::<BigInt>() {
            Ok(b) => big_to_py(py, &b)?,
            Err(_) => s.into_pyobject(py)?.into_any(),
        },
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, item) in map {
                dict.set_item(k, json_to_py(py, item)?)?;
            }
            dict.into_any()
        }
    })
}

/// A finite permutation group with its subgroup lattice.
#[pyclass(frozen, module = "burnside_py")]
struct Group {
    marks: Arc<CoreMarks>,
}

impl Group {
    fn wrap(g: CoreGroup) -> Self {
        let lattice = Arc::new(SubgroupLattice::new(Arc::new(g)));
        Group { marks: Arc::new(CoreMarks::new(lattice)) }
    }

    fn core(&self) -> &CoreGroup {
        self.marks.group()
    }
}

#[pymethods]
impl Group {
    /// One of trivial, C2, C3, C4, C6, C2xC2, S3, D4, Q8, A4, S4.
    #[staticmethod]
    fn builtin(name: &str) -> PyResult<Self> {
        builtin(name).map(Group::wrap).map_err(value_error)
    }

    /// Generators in cycle notation, one per line, optional `name:` header.
    #[staticmethod]
    #[pyo3(signature = (text, cap = DEFAULT_ORDER_CAP))]
    fn from_text(text: &str, cap: usize) -> PyResult<Self> {
        parse_group(text, cap).map(Group::wrap).map_err(value_error)
    }

    #[getter]
    fn order(&self) -> usize {
        self.core().order()
    }

    #[getter]
    fn label(&self) -> String {
        self.core().label()
    }

    fn conjugacy_class_labels(&self) -> Vec<String> {
        self.core().conjugacy_class_labels()
    }

    /// Labels of the subgroup classes, in lattice order.
    fn subgroup_classes(&self) -> Vec<String> {
        self.marks.lattice().classes().iter().map(|c| c.label.clone()).collect()
    }

    fn marks(&self) -> MarksTable {
        MarksTable { marks: self.marks.clone() }
    }

    fn __repr__(&self) -> String {
        format!("Group({}, order={})", self.core().label(), self.core().order())
    }
}

/// The table of marks `m[H][K] = |(G/H)^K|` and the ghost map.
#[pyclass(frozen, module = "burnside_py")]
struct MarksTable {
    marks: Arc<CoreMarks>,
}

#[pymethods]
impl MarksTable {
    fn __len__(&self) -> usize {
        self.marks.len()
    }

    fn labels(&self) -> Vec<String> {
        self.marks.lattice().classes().iter().map(|c| c.label.clone()).collect()
    }

    fn matrix<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        json_to_py(py, &self.marks.to_json()["marks"])
    }

    /// Ghost of a Burnside ring element given by its coefficients.
    fn phi<'py>(&self, py: Python<'py>, coefficients: Vec<Bound<'py, PyAny>>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        if coefficients.len() != self.marks.len() {
            return Err(value_error(format!("expected {} coefficients", self.marks.len())));
        }
        let x = BurnsideElement { coefficients: coefficients.iter().map(big_from_py).collect::<PyResult<_>>()? };
        self.marks.phi(&x).values.iter().map(|v| big_to_py(py, v)).collect()
    }

    /// Burnside coefficients with the given ghost; ValueError when none is
    /// integral.
    fn solve_ghost<'py>(&self, py: Python<'py>, values: Vec<Bound<'py, PyAny>>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        if values.len() != self.marks.len() {
            return Err(value_error(format!("expected {} values", self.marks.len())));
        }
        let ghost = GhostElement { values: values.iter().map(big_from_py).collect::<PyResult<_>>()? };
        let x = self.marks.solve_ghost(&ghost).map_err(value_error)?;
        x.coefficients.iter().map(|v| big_to_py(py, v)).collect()
    }

    fn to_dict<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        json_to_py(py, &self.marks.to_json())
    }
}

/// Artin certificate as a dict; `n` is "0", "1", "2", ... or "inf".
#[pyfunction]
#[pyo3(signature = (group, n = "1"))]
fn artin<'py>(py: Python<'py>, group: &Group, n: &str) -> PyResult<Bound<'py, PyAny>> {
    let cert = artin_certificate(&group.marks, bound(n)?).map_err(value_error)?;
    json_to_py(py, &cert.to_json())
}

#[pyfunction]
#[pyo3(signature = (group, n = "1"))]
fn brauer<'py>(py: Python<'py>, group: &Group, n: &str) -> PyResult<Bound<'py, PyAny>> {
    let cert = brauer_certificate(&group.marks, bound(n)?).map_err(value_error)?;
    json_to_py(py, &cert.to_json())
}

fn library(tables: Option<&str>) -> PyResult<TableLibrary> {
    match tables {
        None => Ok(TableLibrary::builtin()),
        Some(dir) => TableLibrary::from_dir(std::path::Path::new(dir)).map_err(value_error),
    }
}

/// Checks `ψ∘res = res∘ψ = |G|_n` on representation-ring lattices.
#[pyfunction]
#[pyo3(signature = (group, n = "1", tables = None))]
fn artin_restriction<'py>(py: Python<'py>, group: &Group, n: &str, tables: Option<&str>) -> PyResult<Bound<'py, PyAny>> {
    let r = verify_artin_restriction(&group.marks, bound(n)?, &library(tables)?).map_err(value_error)?;
    json_to_py(py, &r.to_json())
}

/// Checks that restriction to the n-hyper classes is a lattice isomorphism.
#[pyfunction]
#[pyo3(signature = (group, n = "1", tables = None))]
fn brauer_restriction<'py>(py: Python<'py>, group: &Group, n: &str, tables: Option<&str>) -> PyResult<Bound<'py, PyAny>> {
    let r = verify_brauer_restriction(&group.marks, bound(n)?, &library(tables)?).map_err(value_error)?;
    json_to_py(py, &r.to_json())
}

/// `|G|_n` from abelian-class JSON data (SO(3) when omitted), optionally of
/// a power.
#[pyfunction]
#[pyo3(signature = (n = "1", data = None, power = 1))]
fn lie_order<'py>(py: Python<'py>, n: &str, data: Option<&str>, power: usize) -> PyResult<Bound<'py, PyAny>> {
    let base = match data {
        None => PhiData::so3(),
        Some(text) => PhiData::from_json(text).map_err(value_error)?,
    };
    let order = order_n_lie(&base.power(power), bound(n)?).map_err(value_error)?;
    big_to_py(py, &order)
}

#[pymodule]
fn burnside_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Group>()?;
    m.add_class::<MarksTable>()?;
    m.add_function(wrap_pyfunction!(artin, m)?)?;
    m.add_function(wrap_pyfunction!(brauer, m)?)?;
    m.add_function(wrap_pyfunction!(artin_restriction, m)?)?;
    m.add_function(wrap_pyfunction!(brauer_restriction, m)?)?;
    m.add_function(wrap_pyfunction!(lie_order, m)?)?;
    Ok(())
}
