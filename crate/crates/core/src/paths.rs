//! Alternating paths, their order, and the inversion number of a tableau.
//!
//! From a white dot the path moves up to the black dot of the same column;
//! from a black dot in a restricted row it moves left to that row's white
//! dot. It stops at a black dot in an unrestricted row.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::alternative::{AlternativeRepresentation, DotKind};
use crate::error::PathError;
use crate::shape::{Cell, Label};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlternatingPath {
    labels: Vec<Label>,
    cells: Vec<Cell>,
}

impl AlternatingPath {
    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Dot cells along the path, parallel to [`labels`](Self::labels).
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn start(&self) -> Label {
        self.labels[0]
    }

    /// The terminal black dot.
    pub fn end(&self) -> Cell {
        *self.cells.last().expect("paths are nonempty")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains_label(&self, label: Label) -> bool {
        self.labels.contains(&label)
    }
}

/// Outcome of comparing two alternating paths `p` and `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathOrder {
    Less,
    Greater,
    /// `q` is a final segment of `p` (this includes `p == q`).
    PContainsQ,
    /// `p` is a proper final segment of `q`.
    QContainsP,
}

impl PathOrder {
    pub fn reverse(self) -> Self {
        match self {
            PathOrder::Less => PathOrder::Greater,
            PathOrder::Greater => PathOrder::Less,
            PathOrder::PContainsQ => PathOrder::QContainsP,
            PathOrder::QContainsP => PathOrder::PContainsQ,
        }
    }
}

pub fn alternating_path(
    a: &AlternativeRepresentation,
    start: Label,
) -> Result<AlternatingPath, PathError> {
    if start == 0 || start > a.len() {
        return Err(PathError::OutOfRange(start));
    }
    let (mut kind, mut cell) = a.dot(start).ok_or(PathError::NoDot(start))?;
    let mut labels = vec![start];
    let mut cells = vec![cell];
    loop {
        let next = match kind {
            DotKind::White => cell.col,
            DotKind::Black if a.is_unrestricted(cell.row) => break,
            DotKind::Black => cell.row,
        };
        (kind, cell) = a.dot(next).expect("every step lands on a dot");
        labels.push(next);
        cells.push(cell);
    }
    Ok(AlternatingPath { labels, cells })
}

/// Paths starting at every dot, indexed by label (`None` where the label
/// names no dot).
pub fn all_paths(a: &AlternativeRepresentation) -> Vec<Option<AlternatingPath>> {
    (0..=a.len()).map(|l| alternating_path(a, l).ok()).collect()
}

/// Containment if one path is a final segment of the other; otherwise the
/// common final segment is removed and the remaining end dots decide. The
/// lower end dot is greater; on the same row, the one further right
/// (smaller column label) is greater.
pub fn compare_paths(p: &AlternatingPath, q: &AlternatingPath) -> PathOrder {
    let common = p
        .labels
        .iter()
        .rev()
        .zip(q.labels.iter().rev())
        .take_while(|(x, y)| x == y)
        .count();
    if common == q.len() {
        return PathOrder::PContainsQ;
    }
    if common == p.len() {
        return PathOrder::QContainsP;
    }
    let pe = p.cells[p.len() - common - 1];
    let qe = q.cells[q.len() - common - 1];
    let ord = pe.row.cmp(&qe.row).then_with(|| qe.col.cmp(&pe.col));
    match ord {
        Ordering::Greater => PathOrder::Greater,
        Ordering::Less => PathOrder::Less,
        Ordering::Equal => unreachable!("distinct reduced paths end at distinct dots"),
    }
}

fn inversions_from<'a>(
    a: &'a AlternativeRepresentation,
    paths: &'a [Option<AlternatingPath>],
    j: Label,
) -> impl Iterator<Item = (Label, Label)> + 'a {
    let pj = paths[j].as_ref().expect("column labels name black dots");
    // labels without a dot have no path and are skipped
    (j + 1..=a.len()).filter_map(move |k| {
        let pk = paths[k].as_ref()?;
        (compare_paths(pj, pk) == PathOrder::Greater).then_some((j, k))
    })
}

/// All inversions `(j, k)`: `j` a column label, `k > j` a dot label, and
/// `P_j > P_k`.
pub fn inversions(a: &AlternativeRepresentation) -> BTreeSet<(Label, Label)> {
    let paths = all_paths(a);
    a.column_labels()
        .into_iter()
        .flat_map(|j| inversions_from(a, &paths, j).collect::<Vec<_>>())
        .collect()
}

/// Number of inversions whose first label is column `j`.
pub fn w(a: &AlternativeRepresentation, j: Label) -> Result<usize, PathError> {
    if !a.labeling().is_column(j) {
        return Err(PathError::NotAColumn(j));
    }
    let paths = all_paths(a);
    Ok(inversions_from(a, &paths, j).count())
}

pub fn inv(a: &AlternativeRepresentation) -> usize {
    let paths = all_paths(a);
    a.column_labels()
        .into_iter()
        .map(|j| inversions_from(a, &paths, j).count())
        .sum()
}
