//! Python bindings: a `Tableau` class, a `Pattern` class, and module-level
//! functions over plain lists of ints.

use std::collections::BTreeMap;

use permtab_core as core;
use permtab_core::format::{alternative_to_text, parse_any, tableau_to_text};
use permtab_core::verify::CheckSet;
use permtab_core::{
    AlternativeRepresentation, Cell, DashedPattern, FerrersShape, Permutation, PermutationTableau,
    Statistic,
};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

/// Largest length accepted by functions that materialize every tableau.
const MAX_LIST_N: usize = 9;
const MAX_N: usize = 12;

fn value_error(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn permutation(entries: Vec<usize>) -> PyResult<Permutation> {
    Permutation::new(entries).map_err(value_error)
}

fn cells(pairs: Vec<(usize, usize)>) -> impl Iterator<Item = Cell> {
    pairs.into_iter().map(|(r, c)| Cell::new(r, c))
}

fn pairs(cells: Vec<Cell>) -> Vec<(usize, usize)> {
    cells.into_iter().map(|c| (c.row, c.col)).collect()
}

/// A permutation tableau together with its dot form.
#[pyclass(frozen, eq, hash, skip_from_py_object, module = "permtab")]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    tableau: PermutationTableau,
}

impl Tableau {
    fn alt(&self) -> AlternativeRepresentation {
        core::to_alternative(&self.tableau)
    }
}

impl From<PermutationTableau> for Tableau {
    fn from(tableau: PermutationTableau) -> Self {
        Tableau { tableau }
    }
}

#[pymethods]
impl Tableau {
    /// `shape` is the list of row lengths (trailing zeros for empty rows);
    /// `rows` gives each row's 0/1 entries left to right.
    #[new]
    fn new(shape: Vec<usize>, rows: Vec<Vec<u8>>) -> PyResult<Self> {
        let shape = FerrersShape::new(shape).map_err(value_error)?;
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(|x| x != 0).collect())
            .collect();
        PermutationTableau::new(shape, rows)
            .map(Tableau::from)
            .map_err(value_error)
    }

    /// Parses either text format (0/1 rows or `B`/`W` dot lines).
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        parse_any(text).map(Tableau::from).map_err(value_error)
    }

    /// Builds a tableau from its black and white dots, given as
    /// `(row_label, column_label)` pairs.
    #[staticmethod]
    fn from_dots(
        shape: Vec<usize>,
        black: Vec<(usize, usize)>,
        white: Vec<(usize, usize)>,
    ) -> PyResult<Self> {
        let shape = FerrersShape::new(shape).map_err(value_error)?;
        let a = AlternativeRepresentation::new(shape, cells(black), cells(white))
            .map_err(value_error)?;
        Ok(a.reconstruct().into())
    }

    fn __len__(&self) -> usize {
        self.tableau.len()
    }

    fn __repr__(&self) -> String {
        let rows: Vec<String> = self
            .tableau
            .rows()
            .iter()
            .map(|r| r.iter().map(|&b| if b { '1' } else { '0' }).collect())
            .collect();
        format!("Tableau(shape=[{}], rows={:?})", self.tableau.shape(), rows)
    }

    #[getter]
    fn shape(&self) -> Vec<usize> {
        self.tableau.shape().row_lengths().to_vec()
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<u8>> {
        self.tableau
            .rows()
            .iter()
            .map(|r| r.iter().map(|&b| b as u8).collect())
            .collect()
    }

    #[getter]
    fn row_labels(&self) -> Vec<usize> {
        self.tableau.labeling().row_labels().to_vec()
    }

    #[getter]
    fn column_labels(&self) -> Vec<usize> {
        self.tableau.labeling().column_labels()
    }

    #[getter]
    fn black_dots(&self) -> Vec<(usize, usize)> {
        pairs(self.alt().black_dots())
    }

    #[getter]
    fn white_dots(&self) -> Vec<(usize, usize)> {
        pairs(self.alt().white_dots())
    }

    #[getter]
    fn unrestricted_rows(&self) -> Vec<usize> {
        self.alt().unrestricted_rows()
    }

    fn inv(&self) -> usize {
        core::inv(&self.alt())
    }

    fn w(&self, column: usize) -> PyResult<usize> {
        core::w(&self.alt(), column).map_err(value_error)
    }

    fn inversions(&self) -> Vec<(usize, usize)> {
        core::inversions(&self.alt()).into_iter().collect()
    }

    /// Labels along the alternating path starting at `label`.
    fn path(&self, label: usize) -> PyResult<Vec<usize>> {
        core::alternating_path(&self.alt(), label)
            .map(|p| p.labels().to_vec())
            .map_err(value_error)
    }

    fn xi(&self) -> Vec<usize> {
        core::xi(&self.alt()).entries().to_vec()
    }

    fn is_lbell(&self) -> bool {
        core::is_lbell(&self.tableau)
    }

    fn to_text(&self) -> String {
        tableau_to_text(&self.tableau)
    }

    fn to_dots_text(&self) -> String {
        alternative_to_text(&self.alt())
    }
}

/// A dashed pattern such as `32-1`.
#[pyclass(frozen, eq, skip_from_py_object, module = "permtab")]
#[derive(Clone, PartialEq, Eq)]
pub struct Pattern {
    pattern: DashedPattern,
}

#[pymethods]
impl Pattern {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        parse_pattern(text)
    }

    #[getter]
    fn blocks(&self) -> Vec<Vec<u8>> {
        self.pattern.blocks().to_vec()
    }

    fn __len__(&self) -> usize {
        self.pattern.len()
    }

    fn __str__(&self) -> String {
        self.pattern.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Pattern('{}')", self.pattern)
    }

    fn count(&self, perm: Vec<usize>) -> PyResult<u64> {
        Ok(core::count_occurrences(&self.pattern, &permutation(perm)?))
    }
}

#[pyfunction]
fn parse_pattern(text: &str) -> PyResult<Pattern> {
    core::parse_pattern(text)
        .map(|pattern| Pattern { pattern })
        .map_err(value_error)
}

#[pyfunction]
fn inv(t: &Tableau) -> usize {
    t.inv()
}

#[pyfunction]
fn w(t: &Tableau, column: usize) -> PyResult<usize> {
    t.w(column)
}

#[pyfunction]
fn xi(t: &Tableau) -> Vec<usize> {
    t.xi()
}

#[pyfunction]
fn is_lbell(t: &Tableau) -> bool {
    t.is_lbell()
}

#[pyfunction]
fn count_occurrences(pattern: &str, perm: Vec<usize>) -> PyResult<u64> {
    parse_pattern(pattern)?.count(perm)
}

#[pyfunction]
fn oracle_count(pattern: &str, perm: Vec<usize>) -> PyResult<u64> {
    let p = parse_pattern(pattern)?;
    Ok(core::oracle_count(&p.pattern, &permutation(perm)?))
}

#[pyfunction]
fn reverse_complement(perm: Vec<usize>) -> PyResult<Vec<usize>> {
    Ok(core::reverse_complement(&permutation(perm)?)
        .entries()
        .to_vec())
}

/// `[B_0, ..., B_m]`.
#[pyfunction]
fn bell(m: usize) -> PyResult<Vec<u128>> {
    core::bell(m).map_err(value_error)
}

#[pyfunction]
fn tableaux_of_length(n: usize) -> PyResult<Vec<Tableau>> {
    if n > MAX_LIST_N {
        return Err(value_error(format!(
            "n must be at most {MAX_LIST_N}, got {n}"
        )));
    }
    Ok(core::tableaux_of_length(n).map(Tableau::from).collect())
}

/// Histogram `{value: count}` of `inv` over tableaux of length `n`, or of
/// a pattern count over permutations of length `n`.
#[pyfunction]
#[pyo3(signature = (n, statistic = "inv"))]
fn distribution(py: Python<'_>, n: usize, statistic: &str) -> PyResult<BTreeMap<u64, u64>> {
    if n > MAX_N {
        return Err(value_error(format!("n must be at most {MAX_N}, got {n}")));
    }
    let stat: Statistic = statistic.parse().map_err(value_error)?;
    let d = py.detach(|| core::distribution(n, &stat));
    Ok(d.histogram)
}

/// Runs the named checks; returns `(passed, tsv_report)`.
#[pyfunction]
#[pyo3(signature = (n, checks = "all", seed = 0))]
fn verify(py: Python<'_>, n: usize, checks: &str, seed: u64) -> PyResult<(bool, String)> {
    let set: CheckSet = checks.parse().map_err(value_error)?;
    let report = py
        .detach(|| core::verify::verify(n, &set, seed))
        .map_err(value_error)?;
    Ok((report.passed(), report.to_tsv()))
}

#[pymodule]
pub fn permtab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Tableau>()?;
    m.add_class::<Pattern>()?;
    m.add_function(wrap_pyfunction!(parse_pattern, m)?)?;
    m.add_function(wrap_pyfunction!(inv, m)?)?;
    m.add_function(wrap_pyfunction!(w, m)?)?;
    m.add_function(wrap_pyfunction!(xi, m)?)?;
    m.add_function(wrap_pyfunction!(is_lbell, m)?)?;
    m.add_function(wrap_pyfunction!(count_occurrences, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_count, m)?)?;
    m.add_function(wrap_pyfunction!(reverse_complement, m)?)?;
    m.add_function(wrap_pyfunction!(bell, m)?)?;
    m.add_function(wrap_pyfunction!(tableaux_of_length, m)?)?;
    m.add_function(wrap_pyfunction!(distribution, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
