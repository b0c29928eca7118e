//! The dot form of a tableau: a black dot on the topmost 1 of every column
//! and a white dot on the rightmost restricted 0 of every row that has one.
//! The tableau is recoverable from the dots alone.

use std::collections::BTreeMap;

use crate::error::RepresentationError;
use crate::shape::{BorderLabeling, Cell, FerrersShape, Label};
use crate::tableau::{classify_cells, validate, CellKind, PermutationTableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DotKind {
    Black,
    White,
}

/// A tableau reduced to its black and white dots.
///
/// Every value of this type encodes a valid permutation tableau; the
/// constructor rejects dot sets that do not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternativeRepresentation {
    shape: FerrersShape,
    labels: BorderLabeling,
    // column label -> row label of its black dot
    black: BTreeMap<Label, Label>,
    // row label -> column label of its white dot
    white: BTreeMap<Label, Label>,
}

impl AlternativeRepresentation {
    /// Builds the representation from dot cells and checks that it encodes a
    /// tableau: the deterministic fill must pass validation and classify back
    /// to exactly these dots.
    pub fn new(
        shape: FerrersShape,
        black: impl IntoIterator<Item = Cell>,
        white: impl IntoIterator<Item = Cell>,
    ) -> Result<Self, RepresentationError> {
        let labels = shape.labeling();
        let mut black_map = BTreeMap::new();
        for cell in black {
            if !labels.contains(cell) {
                return Err(RepresentationError::CellOutsideShape(cell));
            }
            if black_map.insert(cell.col, cell.row).is_some() {
                return Err(RepresentationError::DuplicateBlack(cell.col));
            }
        }
        if let Some(col) = labels
            .column_labels()
            .into_iter()
            .find(|c| !black_map.contains_key(c))
        {
            return Err(RepresentationError::MissingBlack(col));
        }
        let mut white_map = BTreeMap::new();
        for cell in white {
            if !labels.contains(cell) {
                return Err(RepresentationError::CellOutsideShape(cell));
            }
            if black_map.get(&cell.col) == Some(&cell.row) {
                return Err(RepresentationError::Overlap(cell));
            }
            if white_map.insert(cell.row, cell.col).is_some() {
                return Err(RepresentationError::DuplicateWhite(cell.row));
            }
        }
        let rep = AlternativeRepresentation {
            shape,
            labels,
            black: black_map,
            white: white_map,
        };
        let rows = rep.fill();
        let report = validate(&rep.shape, &rows).expect("fill matches the shape");
        if !report.is_valid() {
            return Err(RepresentationError::NotATableau(report.to_string()));
        }
        let t = PermutationTableau::new_unchecked(rep.shape.clone(), rows);
        if to_alternative(&t) != rep {
            return Err(RepresentationError::NotATableau(
                "filled tableau has different topmost 1s or rightmost restricted 0s".into(),
            ));
        }
        Ok(rep)
    }

    // For a cell below its column's black dot: 0 at or left of the row's
    // white dot, 1 otherwise. Cells above the black dot are 0.
    fn fill(&self) -> Vec<Vec<bool>> {
        let lens = self.shape.row_lengths();
        let top: Vec<usize> = (0..self.shape.column_count())
            .map(|c| {
                let row = self.black[&self.labels.col_label(c)];
                self.labels
                    .row_index(row)
                    .expect("black dot row is a row label")
            })
            .collect();
        lens.iter()
            .enumerate()
            .map(|(r, &len)| {
                let white = self
                    .white
                    .get(&self.labels.row_label(r))
                    .and_then(|&col| self.labels.col_index(col));
                (0..len)
                    .map(|c| match r.cmp(&top[c]) {
                        std::cmp::Ordering::Less => false,
                        std::cmp::Ordering::Equal => true,
                        std::cmp::Ordering::Greater => white.is_none_or(|w| c > w),
                    })
                    .collect()
            })
            .collect()
    }

    pub fn reconstruct(&self) -> PermutationTableau {
        PermutationTableau::new_unchecked(self.shape.clone(), self.fill())
    }

    pub fn shape(&self) -> &FerrersShape {
        &self.shape
    }

    pub fn labeling(&self) -> &BorderLabeling {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.shape.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shape.is_empty()
    }

    /// Black dots ordered by column label.
    pub fn black_dots(&self) -> Vec<Cell> {
        self.black
            .iter()
            .map(|(&col, &row)| Cell::new(row, col))
            .collect()
    }

    /// White dots ordered by row label.
    pub fn white_dots(&self) -> Vec<Cell> {
        self.white
            .iter()
            .map(|(&row, &col)| Cell::new(row, col))
            .collect()
    }

    /// Row label of the black dot in a column.
    pub fn black_row(&self, col: Label) -> Option<Label> {
        self.black.get(&col).copied()
    }

    /// Column label of the white dot in a row.
    pub fn white_col(&self, row: Label) -> Option<Label> {
        self.white.get(&row).copied()
    }

    pub fn column_labels(&self) -> Vec<Label> {
        self.black.keys().copied().collect()
    }

    /// Rows without a white dot, which are exactly the rows with no
    /// restricted 0.
    pub fn unrestricted_rows(&self) -> Vec<Label> {
        self.labels
            .row_labels()
            .iter()
            .copied()
            .filter(|r| !self.white.contains_key(r))
            .collect()
    }

    pub fn is_unrestricted(&self, row: Label) -> bool {
        self.labels.is_row(row) && !self.white.contains_key(&row)
    }

    /// The dot a label names: a column's black dot or a row's white dot.
    pub fn dot(&self, label: Label) -> Option<(DotKind, Cell)> {
        if let Some(&row) = self.black.get(&label) {
            Some((DotKind::Black, Cell::new(row, label)))
        } else {
            self.white
                .get(&label)
                .map(|&col| (DotKind::White, Cell::new(label, col)))
        }
    }

    pub fn names_dot(&self, label: Label) -> bool {
        self.black.contains_key(&label) || self.white.contains_key(&label)
    }

    /// Labels that name a dot, increasing.
    pub fn dot_labels(&self) -> Vec<Label> {
        (1..=self.len()).filter(|&l| self.names_dot(l)).collect()
    }

    pub fn dot_at(&self, cell: Cell) -> Option<DotKind> {
        if self.black.get(&cell.col) == Some(&cell.row) {
            Some(DotKind::Black)
        } else if self.white.get(&cell.row) == Some(&cell.col) {
            Some(DotKind::White)
        } else {
            None
        }
    }
}

pub fn to_alternative(t: &PermutationTableau) -> AlternativeRepresentation {
    let cls = classify_cells(t);
    let black = cls
        .cells_of(CellKind::TopmostOne)
        .into_iter()
        .map(|c| (c.col, c.row))
        .collect();
    let white = cls
        .cells_of(CellKind::RightmostRestrictedZero)
        .into_iter()
        .map(|c| (c.row, c.col))
        .collect();
    AlternativeRepresentation {
        shape: t.shape().clone(),
        labels: t.labeling(),
        black,
        white,
    }
}

impl From<&PermutationTableau> for AlternativeRepresentation {
    fn from(t: &PermutationTableau) -> Self {
        to_alternative(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> Vec<bool> {
        s.chars().map(|c| c == '1').collect()
    }

    fn shape(rows: &[usize]) -> FerrersShape {
        FerrersShape::new(rows.to_vec()).unwrap()
    }

    fn cells(pairs: &[(Label, Label)]) -> Vec<Cell> {
        pairs.iter().map(|&(r, c)| Cell::new(r, c)).collect()
    }

    #[test]
    fn dots_of_length11_tableau() {
        let rows = ["01000", "01011", "001", "11", "01", ""];
        let t = PermutationTableau::new(
            shape(&[5, 5, 3, 2, 2, 0]),
            rows.iter().map(|s| bits(s)).collect(),
        )
        .unwrap();
        let a = to_alternative(&t);
        assert_eq!(a.column_labels(), vec![3, 4, 6, 9, 10]);
        assert_eq!(a.white_dots(), cells(&[(5, 9), (8, 10)]));
        assert_eq!(a.reconstruct(), t);
    }

    #[test]
    fn two_black_dots_in_one_row() {
        let t = PermutationTableau::new(shape(&[2]), vec![bits("11")]).unwrap();
        let a = to_alternative(&t);
        assert_eq!(a.black_dots(), cells(&[(1, 2), (1, 3)]));
        assert!(a.white_dots().is_empty());
    }

    #[test]
    fn empty_rows_have_no_dots() {
        let a = to_alternative(&PermutationTableau::empty_rows(3));
        assert!(a.black_dots().is_empty());
        assert!(a.white_dots().is_empty());
    }

    #[test]
    fn reconstructs_length12_filling_from_dots() {
        let s = shape(&[6, 5, 5, 5, 4, 3]);
        let black = cells(&[(1, 2), (5, 6), (4, 8), (4, 10), (1, 11), (1, 12)]);
        let white = cells(&[(3, 12), (4, 11), (5, 12), (7, 10), (9, 10)]);
        let a = AlternativeRepresentation::new(s.clone(), black, white).unwrap();
        let expected = ["110001", "01000", "00110", "01111", "0001", "000"]
            .iter()
            .map(|s| bits(s))
            .collect();
        assert_eq!(
            a.reconstruct(),
            PermutationTableau::new(s, expected).unwrap()
        );
    }

    #[test]
    fn all_black_dots_in_first_row() {
        // every other row is unrestricted, so everything below a black dot is 1
        let s = shape(&[3, 3, 2]);
        let black = cells(&[(1, 3), (1, 5), (1, 6)]);
        let a = AlternativeRepresentation::new(s.clone(), black, Vec::new()).unwrap();
        let t = a.reconstruct();
        assert_eq!(t.rows(), &[bits("111"), bits("111"), bits("11")]);
        assert_eq!(to_alternative(&t), a);
    }

    #[test]
    fn white_dot_above_its_black_dot_is_rejected() {
        // column 5 black dot in row 2, white dot in row 1 of the same column
        let s = shape(&[2, 2]);
        let black = cells(&[(1, 3), (2, 4)]);
        let white = cells(&[(1, 4)]);
        assert!(matches!(
            AlternativeRepresentation::new(s, black, white),
            Err(RepresentationError::NotATableau(_))
        ));
    }

    #[test]
    fn structural_errors() {
        // rows {1,3}, columns {2,4}
        let s = shape(&[2, 1]);
        assert_eq!(
            AlternativeRepresentation::new(s.clone(), cells(&[(1, 2)]), Vec::new()),
            Err(RepresentationError::MissingBlack(4))
        );
        assert_eq!(
            AlternativeRepresentation::new(s.clone(), cells(&[(1, 2), (1, 4), (3, 4)]), Vec::new()),
            Err(RepresentationError::DuplicateBlack(4))
        );
        assert_eq!(
            AlternativeRepresentation::new(s.clone(), cells(&[(1, 2), (3, 2)]), Vec::new()),
            Err(RepresentationError::CellOutsideShape(Cell::new(3, 2)))
        );
        assert_eq!(
            AlternativeRepresentation::new(s, cells(&[(1, 2), (1, 4)]), cells(&[(1, 4)])),
            Err(RepresentationError::Overlap(Cell::new(1, 4)))
        );
    }
}
