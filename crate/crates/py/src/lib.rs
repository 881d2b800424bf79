//! Python module `pats`: monomials, straightening, identity discovery and the
//! per-partition rank tables.

use pats_core::exactla::{Field, Modulus, DEFAULT_PRIME};
use pats_core::identities as id;
use pats_core::repanalysis as rep;
use pats_core::symgroup::{self, Partition, Permutation};
use pats_core::ternary::{self, Level, SignedMonomial};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: pats_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn level(s: &str) -> PyResult<Level> {
    match s.to_ascii_lowercase().as_str() {
        "free" => Ok(Level::Free),
        "p" => Ok(Level::P),
        "pq" => Ok(Level::PQ),
        _ => Err(PyValueError::new_err(format!("unknown level {s:?}; use free, p or pq"))),
    }
}

fn field(modulus: Option<u32>) -> Field {
    match modulus {
        None => Field::Rational,
        Some(p) => Field::Prime(p),
    }
}

fn partition(s: &str) -> PyResult<Partition> {
    s.parse().map_err(err)
}

/// A ternary monomial such as `((a,b,c),d,e)`.
#[pyclass(name = "Monomial", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyMonomial(ternary::Monomial);

#[pymethods]
impl PyMonomial {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyMonomial(text.parse().map_err(err)?))
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    /// `(sign, normal form)`; the normal form is None when the monomial vanishes.
    #[pyo3(signature = (level = "pq"))]
    fn straighten(&self, level: &str) -> PyResult<(i32, Option<PyMonomial>)> {
        Ok(match ternary::straighten_at(self::level(level)?, &self.0) {
            SignedMonomial::Zero => (0, None),
            SignedMonomial::Term(s, m) => (s, Some(PyMonomial(m))),
        })
    }

    /// Dialgebra expansion as `(word, coefficient)` pairs.
    fn expand(&self) -> Vec<(String, i64)> {
        id::TrilinearOp::pats()
            .expand(&self.0)
            .into_iter()
            .map(|(w, c)| (w.to_string(), c))
            .collect()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Monomial('{}')", self.0)
    }
}

/// A linear combination of normal-form ternary monomials.
#[pyclass(name = "Polynomial", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyPolynomial(id::TernaryPolynomial);

#[pymethods]
impl PyPolynomial {
    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial(degree={}, terms={})", self.0.degree(), self.0.len())
    }

    /// True when the dialgebra expansion vanishes.
    fn is_identity(&self) -> bool {
        id::is_identity(&self.0)
    }

    /// `(coefficient, monomial)` pairs, sorted by association type.
    fn terms(&self) -> Vec<(String, String)> {
        self.0
            .sorted_terms()
            .into_iter()
            .map(|(_, m, c)| (c.to_string(), m.to_string()))
            .collect()
    }

    /// One-based association types that occur.
    fn types(&self) -> Vec<usize> {
        self.0.types().into_iter().map(|t| t + 1).collect()
    }

    fn coefficients(&self) -> Vec<String> {
        self.0.coefficient_set().iter().map(|c| c.to_string()).collect()
    }

    /// Substitute letter i -> images[i] (zero-based).
    fn permuted(&self, images: Vec<usize>) -> PyResult<Self> {
        let p = Permutation::from_images(images).map_err(err)?;
        Ok(PyPolynomial(self.0.permuted(&p).map_err(err)?))
    }

    /// Dimension of the span of all variable permutations.
    #[pyo3(signature = (modulus = Some(DEFAULT_PRIME)))]
    fn orbit_dimension(&self, modulus: Option<u32>) -> PyResult<usize> {
        id::orbit_dimension(&self.0, field(modulus)).map_err(err)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("json")
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text)
            .map(PyPolynomial)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }
}

/// Ranks for one partition.
#[pyclass(name = "RankRow", frozen, get_all, skip_from_py_object)]
#[derive(Clone)]
pub struct PyRankRow {
    partition: String,
    dimension: usize,
    symrank: usize,
    exprank: usize,
    newrank: usize,
    symlifrank: Option<usize>,
}

impl From<rep::RankRow> for PyRankRow {
    fn from(r: rep::RankRow) -> Self {
        PyRankRow {
            partition: r.partition.to_string(),
            dimension: r.dimension,
            symrank: r.symrank,
            exprank: r.exprank,
            newrank: r.newrank,
            symlifrank: r.symlifrank,
        }
    }
}

#[pymethods]
impl PyRankRow {
    fn __repr__(&self) -> String {
        format!(
            "RankRow(partition='{}', dimension={}, symrank={}, exprank={}, newrank={}, symlifrank={:?})",
            self.partition, self.dimension, self.symrank, self.exprank, self.newrank, self.symlifrank
        )
    }
}

/// Signed normal form as text, e.g. `-(a,b,c)`.
#[pyfunction]
#[pyo3(signature = (monomial, level = "pq"))]
fn straighten(monomial: &str, level: &str) -> PyResult<String> {
    let m: ternary::Monomial = monomial.parse().map_err(err)?;
    Ok(ternary::straighten_at(self::level(level)?, &m).to_string())
}

/// Dialgebra expansion as text.
#[pyfunction]
fn expand(monomial: &str) -> PyResult<String> {
    let m: ternary::Monomial = monomial.parse().map_err(err)?;
    Ok(id::expand_pats(&m).to_string())
}

/// P, Q, R, S or one of the printed nonlinear identities.
#[pyfunction]
fn identity(name: &str) -> PyResult<PyPolynomial> {
    id::builtin_identity(name)
        .or_else(|_| id::nonlinear_identity(name))
        .map(PyPolynomial)
        .map_err(err)
}

/// Canonical nullspace basis for a variable multiset such as `abcde` or
/// `aaabcde`. `modulus=None` computes over the rationals.
#[pyfunction]
#[pyo3(signature = (vars, modulus = Some(DEFAULT_PRIME)))]
fn find_identities(py: Python<'_>, vars: &str, modulus: Option<u32>) -> PyResult<Vec<PyPolynomial>> {
    let vars = id::parse_vars(vars).map_err(err)?;
    let f = field(modulus);
    let records = py.detach(|| id::find_identities(&vars, f)).map_err(err)?;
    Ok(records.into_iter().map(|r| PyPolynomial(r.polynomial)).collect())
}

/// `(rows, columns, rank)` of the expansion matrix.
#[pyfunction]
#[pyo3(signature = (vars, modulus = Some(DEFAULT_PRIME)))]
fn expansion_rank(py: Python<'_>, vars: &str, modulus: Option<u32>) -> PyResult<(usize, usize, usize)> {
    let vars = id::parse_vars(vars).map_err(err)?;
    let f = field(modulus);
    py.detach(|| {
        let e = id::build_expansion_matrix(&vars)?;
        Ok((e.nrows(), e.ncols(), e.rank(f)?))
    })
    .map_err(err)
}

/// Ranks for one partition; `lifts` adds symlifrank (degree 9 only).
#[pyfunction]
#[pyo3(signature = (partition, modulus = DEFAULT_PRIME, lifts = false))]
fn rank_row(py: Python<'_>, partition: &str, modulus: u32, lifts: bool) -> PyResult<PyRankRow> {
    let lambda = self::partition(partition)?;
    let m = Modulus::new(modulus).map_err(err)?;
    py.detach(|| rep::rank_row(&lambda, m, lifts)).map(Into::into).map_err(err)
}

/// Rank table over all (or the given) partitions of `degree`.
#[pyfunction]
#[pyo3(signature = (degree, modulus = DEFAULT_PRIME, partitions = None))]
fn rank_table(py: Python<'_>, degree: usize, modulus: u32, partitions: Option<Vec<String>>) -> PyResult<Vec<PyRankRow>> {
    let m = Modulus::new(modulus).map_err(err)?;
    let only = partitions
        .map(|v| v.iter().map(|s| self::partition(s)).collect::<PyResult<Vec<_>>>())
        .transpose()?;
    let t = py.detach(|| rep::rank_table(degree, m, only.as_deref())).map_err(err)?;
    Ok(t.rows.into_iter().map(Into::into).collect())
}

/// Association types as `(ca, pa)` lists of template strings.
#[pyfunction]
fn types(degree: usize) -> PyResult<(Vec<String>, Vec<String>)> {
    let t = ternary::generate_types(degree).map_err(err)?;
    let s = |v: &[ternary::AssocType]| v.iter().map(|x| x.to_string()).collect();
    Ok((s(&t.ca), s(&t.pa)))
}

/// Normal-form monomials at the discovery level for `vars`.
#[pyfunction]
fn monomials(vars: &str) -> PyResult<Vec<(usize, PyMonomial)>> {
    let vars = id::parse_vars(vars).map_err(err)?;
    let n = vars.len();
    let list = ternary::enumerate_monomials(n, &vars, Level::for_discovery(n)).map_err(err)?;
    Ok(list.into_iter().map(|(t, m)| (t + 1, PyMonomial(m))).collect())
}

#[pyfunction]
fn partitions(n: usize) -> Vec<String> {
    symgroup::partitions_of(n).iter().map(|p| p.to_string()).collect()
}

#[pyfunction]
fn dimension(partition: &str) -> PyResult<usize> {
    Ok(self::partition(partition)?.dimension())
}

/// Standard tableaux as one-based rows, in the fixed order.
#[pyfunction]
fn standard_tableaux(partition: &str) -> PyResult<Vec<Vec<Vec<usize>>>> {
    let lambda = self::partition(partition)?;
    Ok(symgroup::standard_tableaux(&lambda).iter().map(|t| t.one_based_rows()).collect())
}

/// ρ(π) (or the Clifton matrix R_π with `raw=True`) with rational entries
/// as strings; `perm` is one-based, e.g. `[2, 1, 3]`.
#[pyfunction]
#[pyo3(signature = (partition, perm, raw = false))]
fn representation_matrix(partition: &str, perm: Vec<usize>, raw: bool) -> PyResult<Vec<Vec<String>>> {
    let lambda = self::partition(partition)?;
    let pi = Permutation::from_one_based(&perm).map_err(err)?;
    let m = if raw {
        symgroup::clifton_raw(&lambda, &pi)
    } else {
        symgroup::rep_matrix(&lambda, &pi)
    }
    .map_err(err)?;
    Ok((0..m.nrows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect())
}

#[pymodule]
fn pats(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMonomial>()?;
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyRankRow>()?;
    m.add_function(wrap_pyfunction!(straighten, m)?)?;
    m.add_function(wrap_pyfunction!(expand, m)?)?;
    m.add_function(wrap_pyfunction!(identity, m)?)?;
    m.add_function(wrap_pyfunction!(find_identities, m)?)?;
    m.add_function(wrap_pyfunction!(expansion_rank, m)?)?;
    m.add_function(wrap_pyfunction!(rank_row, m)?)?;
    m.add_function(wrap_pyfunction!(rank_table, m)?)?;
    m.add_function(wrap_pyfunction!(types, m)?)?;
    m.add_function(wrap_pyfunction!(monomials, m)?)?;
    m.add_function(wrap_pyfunction!(partitions, m)?)?;
    m.add_function(wrap_pyfunction!(dimension, m)?)?;
    m.add_function(wrap_pyfunction!(standard_tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(representation_matrix, m)?)?;
    Ok(())
}
