//! Python bindings for the varops workbench.
//!
//! Exposes tabulated tables with their law oracles, quasi-inverse
//! enumeration, extension synthesis, factorization, and the real-valued
//! families. Words cross the boundary as lists of symbol names (empty list
//! for ε) and reports as plain dicts.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use varops::construct;
use varops::io::{witness_strings, TableFile, UnaryMapFile};
use varops::oracle;
use varops::quasi_inverse;
use varops::real_families::{self, RealFamily, RealValue};
use varops::report::CheckReport;
use varops::{Codomain, TabulatedVariadic, UnaryMap, Value};

fn to_py_err(err: varops::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn report_dict<'py>(
    py: Python<'py>,
    report: &CheckReport,
    carrier: Option<&varops::Carrier>,
) -> PyResult<Bound<'py, PyDict>> {
    let dict = PyDict::new(py);
    dict.set_item("property", &report.property)?;
    dict.set_item("verdict", report.verdict)?;
    let witness = report.witness.as_ref().map(|w| match (w, carrier) {
        (witness, Some(c)) => witness_strings(c, witness),
        (varops::Witness::Values(names), None) => names.clone(),
        (varops::Witness::RealWords(words), None) => words
            .iter()
            .map(|w| {
                w.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect(),
        (varops::Witness::Words(_), None) => vec![],
    });
    dict.set_item("witness", witness)?;
    dict.set_item("horizon", report.horizon_used)?;
    Ok(dict)
}

fn unary_map_dict<'py>(py: Python<'py>, map: &UnaryMap) -> PyResult<Bound<'py, PyDict>> {
    let file = UnaryMapFile::of(map);
    let dict = PyDict::new(py);
    dict.set_item("domain", file.domain.values)?;
    dict.set_item("domain_epsilon", file.domain.epsilon)?;
    dict.set_item("codomain", file.codomain.values)?;
    dict.set_item("codomain_epsilon", file.codomain.epsilon)?;
    let entries = PyDict::new(py);
    for (k, v) in file.map {
        entries.set_item(k, v)?;
    }
    dict.set_item("map", entries)?;
    Ok(dict)
}

fn parts_from_dicts(
    carrier: &varops::Carrier,
    codomain: &Codomain,
    f1: BTreeMap<String, String>,
    f2: BTreeMap<String, String>,
) -> PyResult<(UnaryMap, varops::BinaryMap)> {
    let mut f1_pairs = Vec::new();
    for (k, v) in &f1 {
        f1_pairs.push((k.as_str(), v.as_str()));
    }
    let f1 = UnaryMap::from_pairs(carrier.to_codomain(), codomain.clone(), &f1_pairs)
        .map_err(to_py_err)?;
    let n = carrier.len();
    let mut table = vec![None; n * n];
    for (k, v) in &f2 {
        let parts: Vec<&str> = k.split(',').collect();
        if parts.len() != 2 {
            return Err(PyValueError::new_err(format!(
                "f2 key `{k}` is not a pair of symbols"
            )));
        }
        let i = carrier
            .index_of(parts[0])
            .ok_or_else(|| PyValueError::new_err(format!("unknown symbol `{}`", parts[0])))?;
        let j = carrier
            .index_of(parts[1])
            .ok_or_else(|| PyValueError::new_err(format!("unknown symbol `{}`", parts[1])))?;
        table[i * n + j] = Some(codomain.value_named(v).map_err(to_py_err)?);
    }
    let table: Option<Vec<Value>> = table.into_iter().collect();
    let table = table.ok_or_else(|| PyValueError::new_err("f2 does not cover every pair"))?;
    let f2 = varops::BinaryMap::new(carrier.clone(), codomain.clone(), table).map_err(to_py_err)?;
    Ok((f1, f2))
}

/// A variadic function tabulated on all words up to its horizon.
#[pyclass(skip_from_py_object)]
#[derive(Clone)]
struct Table {
    inner: TabulatedVariadic,
}

#[pymethods]
impl Table {
    /// Parse a table from the JSON operation-definition format.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let file: TableFile =
            serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(Self {
            inner: file.to_table().map_err(to_py_err)?,
        })
    }

    #[staticmethod]
    fn from_file(path: &str) -> PyResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| PyValueError::new_err(format!("reading {path}: {e}")))?;
        Self::from_json(&text)
    }

    /// Synthesize the associative ε-standard extension of unary and binary
    /// parts given as dicts of symbol names.
    #[staticmethod]
    fn extend_associative(
        carrier: Vec<String>,
        f1: BTreeMap<String, String>,
        f2: BTreeMap<String, String>,
        horizon: usize,
    ) -> PyResult<Self> {
        let carrier = varops::Carrier::new(carrier).map_err(to_py_err)?;
        let codomain = carrier.to_codomain();
        let (f1, f2) = parts_from_dicts(&carrier, &codomain, f1, f2)?;
        let table = construct::extend_associative(&f1, &f2, horizon).map_err(to_py_err)?;
        Ok(Self { inner: table })
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string_pretty(&TableFile::of(&self.inner))
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    #[getter]
    fn horizon(&self) -> usize {
        self.inner.horizon()
    }

    #[getter]
    fn carrier(&self) -> Vec<String> {
        self.inner.carrier().symbols().to_vec()
    }

    #[getter]
    fn codomain_values(&self) -> Vec<String> {
        self.inner.codomain().values().to_vec()
    }

    #[getter]
    fn codomain_has_epsilon(&self) -> bool {
        self.inner.codomain().has_epsilon()
    }

    /// Value of a word given as a list of symbol names; [] is ε. The ε value
    /// comes back as "ε".
    fn value(&self, word: Vec<String>) -> PyResult<String> {
        let w = self.inner.carrier().word(&word).map_err(to_py_err)?;
        let v = self.inner.value(&w).map_err(to_py_err)?;
        Ok(self.inner.codomain().name_of(v).to_string())
    }

    /// Run one named property oracle and return its report dict.
    fn check(&self, py: Python<'_>, name: &str) -> PyResult<Py<PyDict>> {
        let f = &self.inner;
        let report = match name {
            "standard" => Ok(oracle::is_standard(f)),
            "epsilon-standard" => oracle::is_epsilon_standard(f),
            "associative" => oracle::is_associative(f),
            "associative-short" => oracle::is_associative_short(f),
            "preassociative" => Ok(oracle::is_preassociative(f)),
            "preassociative-pairwise" => Ok(oracle::is_preassociative_pairwise(f)),
            "preassociative-single-context" => Ok(oracle::is_preassociative_single_context(f)),
            "strongly-preassociative" => oracle::is_strongly_preassociative(f),
            "symmetric" => Ok(oracle::is_symmetric(f)),
            "idempotent" => oracle::is_idempotent(f),
            "unarily-idempotent" => oracle::is_unarily_idempotent(f),
            "unarily-range-idempotent" => oracle::is_unarily_range_idempotent(f),
            "unarily-quasi-range-idempotent" => Ok(oracle::is_unarily_quasi_range_idempotent(f)),
            "constant-parts" => oracle::constant_part_check(f),
            other => {
                return Err(PyValueError::new_err(format!("unknown property `{other}`")))
            }
        }
        .map_err(to_py_err)?;
        Ok(report_dict(py, &report, Some(f.carrier()))?.into())
    }

    /// Reports for every property applicable to this table.
    fn check_all(&self, py: Python<'_>) -> PyResult<Py<PyList>> {
        let names = [
            "standard",
            "epsilon-standard",
            "associative",
            "associative-short",
            "preassociative",
            "preassociative-pairwise",
            "preassociative-single-context",
            "strongly-preassociative",
            "symmetric",
            "idempotent",
            "unarily-idempotent",
            "unarily-range-idempotent",
            "unarily-quasi-range-idempotent",
        ];
        let list = PyList::empty(py);
        for name in names {
            // properties whose preconditions fail are inapplicable here
            if let Ok(dict) = self.check(py, name) {
                list.append(dict)?;
            }
        }
        Ok(list.into())
    }

    /// The four idempotence verdicts as a dict of booleans.
    fn idempotence_profile(&self, py: Python<'_>) -> PyResult<Py<PyDict>> {
        let profile = oracle::idempotence_profile(&self.inner).map_err(to_py_err)?;
        let dict = PyDict::new(py);
        dict.set_item("idempotent", profile.idempotent.verdict)?;
        dict.set_item("unarily_idempotent", profile.unarily_idempotent.verdict)?;
        dict.set_item(
            "unarily_range_idempotent",
            profile.unarily_range_idempotent.verdict,
        )?;
        dict.set_item(
            "unarily_quasi_range_idempotent",
            profile.unarily_quasi_range_idempotent.verdict,
        )?;
        Ok(dict.into())
    }

    fn kernel_class_count(&self) -> usize {
        oracle::kernel_partition(&self.inner).class_count()
    }

    /// Kernel classes as lists of word keys ("" is ε).
    fn kernel_classes(&self) -> Vec<Vec<String>> {
        let partition = oracle::kernel_partition(&self.inner);
        let carrier = self.inner.carrier();
        (0..partition.class_count())
            .map(|c| {
                partition
                    .words_of_class(c)
                    .iter()
                    .map(|w| varops::io::word_key(carrier, w))
                    .collect()
            })
            .collect()
    }

    /// Factor a standard preassociative UQRI table as f ∘ H♭. Returns
    /// (inner table, outer map dict, quasi-inverse dict).
    fn factorize(&self, py: Python<'_>) -> PyResult<(Table, Py<PyDict>, Py<PyDict>)> {
        let fact = construct::factorize(&self.inner, None).map_err(to_py_err)?;
        Ok((
            Table { inner: fact.inner },
            unary_map_dict(py, &fact.outer)?.into(),
            unary_map_dict(py, &fact.quasi_inverse)?.into(),
        ))
    }

    fn __repr__(&self) -> String {
        format!(
            "Table(carrier={:?}, horizon={}, entries={})",
            self.inner.carrier().symbols(),
            self.inner.horizon(),
            self.inner.space().word_count(),
        )
    }
}

/// Enumerate the quasi-inverses of the map {domain → codomain} given as a
/// dict of names. Returns a list of map dicts in canonical order.
#[pyfunction]
fn quasi_inverses(
    py: Python<'_>,
    domain: Vec<String>,
    codomain: Vec<String>,
    map: BTreeMap<String, String>,
) -> PyResult<Py<PyList>> {
    let domain = Codomain::new(domain, false).map_err(to_py_err)?;
    let codomain = Codomain::new(codomain, false).map_err(to_py_err)?;
    let pairs: Vec<(&str, &str)> = map.iter().map(|(k, v)| (k.as_str(), v.as_str())).collect();
    let f = UnaryMap::from_pairs(domain, codomain, &pairs).map_err(to_py_err)?;
    let set = quasi_inverse::enumerate_quasi_inverses(&f);
    let list = PyList::empty(py);
    for g in set.members() {
        list.append(unary_map_dict(py, g)?)?;
    }
    Ok(list.into())
}

fn family_from(name: &str, params: Option<BTreeMap<String, f64>>) -> PyResult<RealFamily> {
    RealFamily::from_name(name, &params.unwrap_or_default()).map_err(to_py_err)
}

/// Evaluate a real family at a float word; None encodes ε.
#[pyfunction]
#[pyo3(signature = (name, word, params=None))]
fn eval_family(name: &str, word: Vec<f64>, params: Option<BTreeMap<String, f64>>) -> PyResult<Option<f64>> {
    let family = family_from(name, params)?;
    match family.evaluate(&word).map_err(to_py_err)? {
        RealValue::Epsilon => Ok(None),
        RealValue::Num(x) => Ok(Some(x)),
    }
}

/// Sampled associativity identity check for an ε-standard family.
#[pyfunction]
#[pyo3(signature = (name, params=None, seed=0, count=1000, tol=1e-9))]
fn check_family_associativity(
    py: Python<'_>,
    name: &str,
    params: Option<BTreeMap<String, f64>>,
    seed: u64,
    count: usize,
    tol: f64,
) -> PyResult<Py<PyDict>> {
    let family = family_from(name, params)?;
    let report =
        real_families::check_associativity_identity(&family, seed, count, tol).map_err(to_py_err)?;
    Ok(report_dict(py, &report, None)?.into())
}

/// Witness-pair preassociativity check for families with a generator.
#[pyfunction]
#[pyo3(signature = (name, params=None, seed=0, count=1000, tol=1e-9))]
fn check_family_preassociativity(
    py: Python<'_>,
    name: &str,
    params: Option<BTreeMap<String, f64>>,
    seed: u64,
    count: usize,
    tol: f64,
) -> PyResult<Py<PyDict>> {
    let family = family_from(name, params)?;
    let report = real_families::check_preassociativity_witnessed(&family, seed, count, tol)
        .map_err(to_py_err)?;
    Ok(report_dict(py, &report, None)?.into())
}

/// Registered factorization of a family, verified by sampling.
#[pyfunction]
#[pyo3(signature = (name, params=None, seed=0, count=1000, tol=1e-9))]
fn factorize_family(
    py: Python<'_>,
    name: &str,
    params: Option<BTreeMap<String, f64>>,
    seed: u64,
    count: usize,
    tol: f64,
) -> PyResult<Py<PyDict>> {
    let family = family_from(name, params)?;
    let fact = real_families::factorize_family(&family, seed, count, tol).map_err(to_py_err)?;
    let dict = PyDict::new(py);
    dict.set_item("inner", fact.inner.name())?;
    dict.set_item("outer", fact.outer.describe())?;
    dict.set_item("max_sample_error", fact.max_sample_error)?;
    Ok(dict.into())
}

/// The arity-indexed exponential counterexample values.
#[pyfunction]
fn exp_sequence_demo(py: Python<'_>) -> PyResult<Py<PyDict>> {
    let demo = real_families::exp_sequence_demo();
    let dict = PyDict::new(py);
    dict.set_item("h2_log_pair", demo.h2_log_pair)?;
    dict.set_item("h2_half_log_pair", demo.h2_half_log_pair)?;
    dict.set_item("h3_log_triple", demo.h3_log_triple)?;
    dict.set_item("h3_half_log_triple", demo.h3_half_log_triple)?;
    Ok(dict.into())
}

#[pymodule]
fn varops_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<Table>()?;
    m.add_function(wrap_pyfunction!(quasi_inverses, m)?)?;
    m.add_function(wrap_pyfunction!(eval_family, m)?)?;
    m.add_function(wrap_pyfunction!(check_family_associativity, m)?)?;
    m.add_function(wrap_pyfunction!(check_family_preassociativity, m)?)?;
    m.add_function(wrap_pyfunction!(factorize_family, m)?)?;
    m.add_function(wrap_pyfunction!(exp_sequence_demo, m)?)?;
    Ok(())
}
