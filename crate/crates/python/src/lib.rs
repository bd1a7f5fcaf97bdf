//! Python bindings for the frame48 library: the code pair and its
//! structure theory, module labels with fusion and lowest weights, the
//! named q-expansions, the Hamming weight-2 algebra checks, and the
//! assignment search.

use std::time::Duration;

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use frame48::catalog;
use frame48::griess::HammingGriess;
use frame48::modules::ModuleSystem;
use frame48::search::{assignment_search, Obstruction, SearchConfig};
use frame48::series;
use frame48::weights::WeightDistribution;
use frame48::{BinaryWord, LinearCode, QSeries};

fn err(e: frame48::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_word(s: &str) -> PyResult<BinaryWord> {
    BinaryWord::parse(s).map_err(err)
}

/// A binary linear code in canonical reduced row-echelon form.
#[pyclass(name = "Code", skip_from_py_object)]
#[derive(Clone)]
struct PyCode {
    inner: LinearCode,
}

#[pymethods]
impl PyCode {
    /// Span of `0`/`1` row strings of one common length.
    #[new]
    fn new(rows: Vec<String>) -> PyResult<Self> {
        if rows.is_empty() {
            return Err(PyValueError::new_err("need at least one row"));
        }
        let words: Vec<BinaryWord> =
            rows.iter().map(|r| parse_word(r)).collect::<PyResult<_>>()?;
        let length = words[0].len();
        Ok(PyCode { inner: LinearCode::from_rows(length, &words).map_err(err)? })
    }

    #[staticmethod]
    fn hamming8() -> Self {
        PyCode { inner: catalog::hamming8() }
    }

    #[staticmethod]
    fn moonshine_d() -> Self {
        PyCode { inner: catalog::moonshine_d() }
    }

    #[staticmethod]
    fn moonshine_c() -> Self {
        PyCode { inner: catalog::moonshine_c() }
    }

    #[staticmethod]
    fn reed_muller(r: u32, m: u32) -> PyResult<Self> {
        Ok(PyCode { inner: catalog::reed_muller(r, m).map_err(err)? })
    }

    #[getter]
    fn length(&self) -> u32 {
        self.inner.length()
    }

    #[getter]
    fn dim(&self) -> u32 {
        self.inner.dim()
    }

    fn basis(&self) -> Vec<String> {
        self.inner.basis().iter().map(|w| w.to_string()).collect()
    }

    fn dual(&self) -> Self {
        PyCode { inner: self.inner.dual() }
    }

    fn contains(&self, word: &str) -> PyResult<bool> {
        self.inner.contains(&parse_word(word)?).map_err(err)
    }

    /// Weight counts `A_0..A_n` as Python integers; uses the MacWilliams
    /// transform of the dual automatically when the code is too large to
    /// enumerate.
    fn weight_distribution(&self) -> PyResult<Vec<BigInt>> {
        let dist = match WeightDistribution::of_code(&self.inner) {
            Ok(d) => d,
            Err(frame48::Error::Capacity(_)) => {
                let dual = self.inner.dual();
                WeightDistribution::of_code(&dual)
                    .and_then(|w| w.macwilliams(dual.dim()))
                    .map_err(err)?
            }
            Err(e) => return Err(err(e)),
        };
        Ok(dist.counts().iter().map(|c| BigInt::from(c.clone())).collect())
    }

    fn is_self_orthogonal(&self) -> bool {
        self.inner.is_self_orthogonal()
    }

    fn generated_by_weight4(&self) -> bool {
        frame48::structure::generated_by_weight4(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Code(length={}, dim={})", self.inner.length(), self.inner.dim())
    }
}

/// The module-label calculus of the length-48 code pair.
#[pyclass(name = "MoonshineModules")]
struct PyModules {
    sys: ModuleSystem,
}

#[pymethods]
impl PyModules {
    #[new]
    fn new() -> Self {
        PyModules { sys: ModuleSystem::moonshine() }
    }

    /// Number of inequivalent module labels.
    fn census(&self) -> BigInt {
        BigInt::from(self.sys.census())
    }

    /// Canonical label `(tau_word, gamma_class_bits)` for a pair of words.
    fn label(&self, beta: &str, gamma: &str) -> PyResult<(String, u32)> {
        let label = self
            .sys
            .label(&parse_word(beta)?, &parse_word(gamma)?)
            .map_err(err)?;
        Ok((label.beta().to_string(), label.gamma_class()))
    }

    /// Fusion product of two labels given as `(tau_word, class_bits)`.
    fn fuse(&self, a: (String, u32), b: (String, u32)) -> PyResult<(String, u32)> {
        let la = self.sys.label_from_class(&parse_word(&a.0)?, a.1).map_err(err)?;
        let lb = self.sys.label_from_class(&parse_word(&b.0)?, b.1).map_err(err)?;
        let p = self.sys.fuse(&la, &lb);
        Ok((p.beta().to_string(), p.gamma_class()))
    }

    /// Lowest conformal weight of a label, as `(numerator, denominator)`.
    fn lowest_weight(&self, label: (String, u32)) -> PyResult<(i64, i64)> {
        let l = self
            .sys
            .label_from_class(&parse_word(&label.0)?, label.1)
            .map_err(err)?;
        let w = self.sys.lowest_weight(&l).map_err(err)?;
        Ok((*w.numer(), *w.denom()))
    }

    /// Character coefficients of a label through `q^order`, as
    /// `(exponent_string, coefficient)` pairs.
    fn character(&self, label: (String, u32), order: i64) -> PyResult<Vec<(String, BigInt)>> {
        let l = self
            .sys
            .label_from_class(&parse_word(&label.0)?, label.1)
            .map_err(err)?;
        let ch = series::induced_module_character(&self.sys, &l, order).map_err(err)?;
        Ok(series_terms(&ch))
    }
}

fn series_terms(s: &QSeries) -> Vec<(String, BigInt)> {
    s.terms()
        .map(|(i, c)| (QSeries::format_exponent(i), c.to_integer()))
        .collect()
}

/// Coefficients of the J-function through `q^order`, both modular routes
/// checked against each other, as `(power, coefficient)` pairs.
#[pyfunction]
fn j_coefficients(order: i64) -> PyResult<Vec<(i64, BigInt)>> {
    let j = series::j_function(order).map_err(err)?;
    Ok((-1..=order).map(|p| (p, j.coeff_q(p).to_integer())).collect())
}

/// An Ising character (`h` one of "0", "1/2", "1/16") through `q^order`.
#[pyfunction]
fn ising_character(h: &str, order: i64) -> PyResult<Vec<(String, BigInt)>> {
    let weight = match h {
        "0" => series::IsingWeight::Zero,
        "1/2" => series::IsingWeight::Half,
        "1/16" => series::IsingWeight::Sixteenth,
        other => return Err(PyValueError::new_err(format!("unknown weight {other:?}"))),
    };
    Ok(series_terms(&series::ising_char(weight, order)))
}

/// True when the three Virasoro frames of the Hamming weight-2 algebra all
/// pass the frame test and the bilinear form is invariant on all triples.
#[pyfunction]
fn hamming_frames_ok() -> bool {
    let g = HammingGriess::new();
    g.form_is_invariant()
        && g.is_frame(&g.standard_frame())
        && g.is_frame(&g.d_frame())
        && g.is_frame(&g.f_frame())
}

/// Number of distinct S vectors over the 256 sign patterns (16).
#[pyfunction]
fn s_vector_count() -> usize {
    let g = HammingGriess::new();
    let mut distinct = std::collections::BTreeSet::new();
    for bits in 0u64..256 {
        distinct.insert(format!("{:?}", g.s_vector(&BinaryWord::from_bits(8, bits)).coords()));
    }
    distinct.len()
}

/// Run the additive assignment search; returns a dict with the count,
/// completeness flag and the certificate terms when the space is empty.
#[pyfunction]
#[pyo3(signature = (max_order = 4, budget_secs = 600))]
fn search_assignments(py: Python<'_>, max_order: i64, budget_secs: u64) -> PyResult<Py<PyAny>> {
    let sys = ModuleSystem::moonshine();
    let config = SearchConfig {
        max_order,
        budget: Duration::from_secs(budget_secs),
        store_limit: 100,
    };
    let report = assignment_search(&sys, &config).map_err(err)?;
    let dict = pyo3::types::PyDict::new(py);
    dict.set_item("total_found", report.total_found)?;
    dict.set_item("complete", report.complete)?;
    let certificate: Vec<(String, String, u8)> = match &report.obstruction {
        Some(Obstruction::ParityCertificate { terms }) => terms
            .iter()
            .map(|t| (t.tau_word.clone(), t.check_word.clone(), t.required_parity))
            .collect(),
        _ => Vec::new(),
    };
    dict.set_item("certificate", certificate)?;
    Ok(dict.into())
}

#[pymodule]
fn frame48_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCode>()?;
    m.add_class::<PyModules>()?;
    m.add_function(wrap_pyfunction!(j_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(ising_character, m)?)?;
    m.add_function(wrap_pyfunction!(hamming_frames_ok, m)?)?;
    m.add_function(wrap_pyfunction!(s_vector_count, m)?)?;
    m.add_function(wrap_pyfunction!(search_assignments, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
