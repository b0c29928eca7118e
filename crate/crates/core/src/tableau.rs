//! Permutation tableaux: 0/1 fillings of a Ferrers shape such that every
//! column holds a 1 and no 0 has both a 1 above it and a 1 to its left.

use std::fmt;

use crate::error::TableauError;
use crate::shape::{BorderLabeling, Cell, FerrersShape, Label};

/// One broken axiom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Violation {
    /// The column contains no 1.
    EmptyColumn { col: Label },
    /// A 0 with a 1 above it and a 1 to its left.
    ZeroBetweenOnes { cell: Cell },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyColumn { col } => write!(f, "column {col} has no 1"),
            Violation::ZeroBetweenOnes { cell } => {
                write!(f, "0 at {cell} has a 1 above and a 1 to the left")
            }
        }
    }
}

/// Every axiom violation of a filling; empty iff the filling is a tableau.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks a raw filling (rows top to bottom, cells left to right) against
/// the shape and both axioms.
///
/// Size mismatches are structural errors; axiom violations are collected
/// in the returned report.
pub fn validate(
    shape: &FerrersShape,
    rows: &[Vec<bool>],
) -> Result<ValidationReport, TableauError> {
    let labels = shape.labeling();
    check_dimensions(shape, &labels, rows)?;
    let mut violations = Vec::new();
    for c in 0..shape.column_count() {
        if !rows[..shape.column_height(c)].iter().any(|row| row[c]) {
            violations.push(Violation::EmptyColumn {
                col: labels.col_label(c),
            });
        }
    }
    for (r, row) in rows.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            if !v && row[..c].iter().any(|&x| x) && (0..r).any(|above| rows[above][c]) {
                violations.push(Violation::ZeroBetweenOnes {
                    cell: labels.cell_at(r, c),
                });
            }
        }
    }
    violations.sort();
    Ok(ValidationReport { violations })
}

fn check_dimensions(
    shape: &FerrersShape,
    labels: &BorderLabeling,
    rows: &[Vec<bool>],
) -> Result<(), TableauError> {
    if rows.len() != shape.row_count() {
        return Err(TableauError::RowCountMismatch {
            expected: shape.row_count(),
            found: rows.len(),
        });
    }
    for (r, (row, &len)) in rows.iter().zip(shape.row_lengths()).enumerate() {
        if row.len() != len {
            return Err(TableauError::RowLengthMismatch {
                row: labels.row_label(r),
                expected: len,
                found: row.len(),
            });
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermutationTableau {
    shape: FerrersShape,
    rows: Vec<Vec<bool>>,
}

impl PermutationTableau {
    pub fn new(shape: FerrersShape, rows: Vec<Vec<bool>>) -> Result<Self, TableauError> {
        let report = validate(&shape, &rows)?;
        if !report.is_valid() {
            return Err(TableauError::Axioms(report));
        }
        Ok(PermutationTableau { shape, rows })
    }

    /// Caller guarantees the filling is a valid tableau of `shape`.
    pub(crate) fn new_unchecked(shape: FerrersShape, rows: Vec<Vec<bool>>) -> Self {
        debug_assert!(validate(&shape, &rows).is_ok_and(|r| r.is_valid()));
        PermutationTableau { shape, rows }
    }

    /// The unique tableau of length 0.
    pub fn empty() -> Self {
        PermutationTableau {
            shape: FerrersShape::empty(),
            rows: Vec::new(),
        }
    }

    /// A tableau with `n` empty rows and no columns.
    pub fn empty_rows(n: usize) -> Self {
        PermutationTableau {
            shape: FerrersShape::new(vec![0; n]).expect("zeros are weakly decreasing"),
            rows: vec![Vec::new(); n],
        }
    }

    pub fn shape(&self) -> &FerrersShape {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.shape.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shape.is_empty()
    }

    pub fn labeling(&self) -> BorderLabeling {
        self.shape.labeling()
    }

    /// Rows top to bottom, each row left to right.
    pub fn rows(&self) -> &[Vec<bool>] {
        &self.rows
    }

    /// Value at a cell addressed by labels; `None` outside the shape.
    pub fn get(&self, cell: Cell) -> Option<bool> {
        let (r, c) = self.labeling().geometric(cell)?;
        Some(self.rows[r][c])
    }

    pub fn classify(&self) -> Classification {
        classify_cells(self)
    }
}

/// The role a cell plays in a valid tableau.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CellKind {
    TopmostOne,
    OtherOne,
    /// A 0 with a 1 above it that is not the rightmost such 0 in its row.
    RestrictedZero,
    RightmostRestrictedZero,
    /// A 0 with no 1 above it.
    FreeZero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    labels: BorderLabeling,
    kinds: Vec<Vec<CellKind>>,
}

impl Classification {
    pub fn kind(&self, cell: Cell) -> Option<CellKind> {
        let (r, c) = self.labels.geometric(cell)?;
        Some(self.kinds[r][c])
    }

    /// All cells of a given kind, in row-label then column-label order.
    pub fn cells_of(&self, kind: CellKind) -> Vec<Cell> {
        let mut out: Vec<Cell> = self
            .kinds
            .iter()
            .enumerate()
            .flat_map(|(r, row)| {
                row.iter()
                    .enumerate()
                    .filter(move |(_, &k)| k == kind)
                    .map(move |(c, _)| (r, c))
            })
            .map(|(r, c)| self.labels.cell_at(r, c))
            .collect();
        out.sort_unstable();
        out
    }

    /// Rows with no restricted 0, by label.
    pub fn unrestricted_rows(&self) -> Vec<Label> {
        self.kinds
            .iter()
            .enumerate()
            .filter(|(_, row)| {
                !row.iter().any(|k| {
                    matches!(
                        k,
                        CellKind::RestrictedZero | CellKind::RightmostRestrictedZero
                    )
                })
            })
            .map(|(r, _)| self.labels.row_label(r))
            .collect()
    }
}

pub fn classify_cells(t: &PermutationTableau) -> Classification {
    let labels = t.labeling();
    let rows = t.rows();
    let mut kinds: Vec<Vec<CellKind>> = rows
        .iter()
        .map(|row| vec![CellKind::FreeZero; row.len()])
        .collect();
    for c in 0..t.shape().column_count() {
        let mut seen_one = false;
        for r in 0..t.shape().column_height(c) {
            kinds[r][c] = match (rows[r][c], seen_one) {
                (true, false) => CellKind::TopmostOne,
                (true, true) => CellKind::OtherOne,
                (false, true) => CellKind::RestrictedZero,
                (false, false) => CellKind::FreeZero,
            };
            seen_one |= rows[r][c];
        }
    }
    // rightmost = largest geometric column index
    for row in &mut kinds {
        if let Some(k) = row
            .iter_mut()
            .rev()
            .find(|k| **k == CellKind::RestrictedZero)
        {
            *k = CellKind::RightmostRestrictedZero;
        }
    }
    Classification { labels, kinds }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    fn length11() -> PermutationTableau {
        let shape = FerrersShape::new(vec![5, 5, 3, 2, 2, 0]).unwrap();
        let rows = ["01000", "01011", "001", "11", "01", ""]
            .iter()
            .map(|s| bits(s))
            .collect();
        PermutationTableau::new(shape, rows).unwrap()
    }

    #[test]
    fn classifies_restricted_zeros_and_unrestricted_rows() {
        let cls = length11().classify();
        assert_eq!(
            cls.cells_of(CellKind::RightmostRestrictedZero),
            vec![Cell::new(5, 9), Cell::new(8, 10)]
        );
        assert_eq!(cls.unrestricted_rows(), vec![1, 2, 7, 11]);
        assert_eq!(cls.cells_of(CellKind::TopmostOne).len(), 5);
    }

    #[test]
    fn column_without_one_is_reported() {
        let shape = FerrersShape::new(vec![1]).unwrap();
        let report = validate(&shape, &[vec![false]]).unwrap();
        assert_eq!(report.violations, vec![Violation::EmptyColumn { col: 2 }]);
    }

    #[test]
    fn zero_with_one_above_and_left_is_reported() {
        // 2x2: top row "01", bottom row "10": bottom-right 0 has a 1 above and left.
        let shape = FerrersShape::new(vec![2, 2]).unwrap();
        let report = validate(&shape, &[bits("01"), bits("10")]).unwrap();
        assert_eq!(
            report.violations,
            vec![Violation::ZeroBetweenOnes {
                cell: Cell::new(2, 3)
            }]
        );
    }

    #[test]
    fn reports_every_violation() {
        let shape = FerrersShape::new(vec![3, 3]).unwrap();
        let report = validate(&shape, &[bits("011"), bits("100")]).unwrap();
        assert_eq!(report.violations.len(), 2);
    }

    #[test]
    fn dimension_mismatch_is_structural() {
        let shape = FerrersShape::new(vec![2, 1]).unwrap();
        assert!(matches!(
            validate(&shape, &[bits("11")]),
            Err(TableauError::RowCountMismatch { .. })
        ));
        assert!(matches!(
            validate(&shape, &[bits("11"), bits("11")]),
            Err(TableauError::RowLengthMismatch { row: 3, .. })
        ));
    }

    #[test]
    fn empty_rows_are_all_unrestricted() {
        let t = PermutationTableau::empty_rows(4);
        let cls = t.classify();
        assert_eq!(cls.unrestricted_rows(), vec![1, 2, 3, 4]);
        assert!(cls.cells_of(CellKind::TopmostOne).is_empty());
    }

    #[test]
    fn shape_221_white_dot_position() {
        let shape = FerrersShape::new(vec![2, 2, 1]).unwrap();
        let t = PermutationTableau::new(shape, vec![bits("10"), bits("11"), bits("0")]).unwrap();
        let cls = t.classify();
        assert_eq!(
            cls.cells_of(CellKind::RightmostRestrictedZero),
            vec![Cell::new(4, 5)]
        );
        assert_eq!(cls.unrestricted_rows(), vec![1, 2]);
    }
}
