//! Ferrers shapes (empty rows allowed) and their border labeling.
//!
//! Rows are indexed top to bottom and columns left to right internally.
//! The public model addresses rows and columns by their border labels:
//! walking the southeast border from the top-right corner to the bottom-left
//! corner, every down-step receives the next row label and every left-step
//! the next column label.

use std::fmt;

use crate::error::ShapeError;

/// A border label in `1..=n`.
pub type Label = usize;

/// A cell addressed by `(row label, column label)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: Label,
    pub col: Label,
}

impl Cell {
    pub fn new(row: Label, col: Label) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Weakly decreasing row lengths. Trailing zeros are empty rows.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FerrersShape {
    rows: Vec<usize>,
}

impl FerrersShape {
    pub fn new(rows: Vec<usize>) -> Result<Self, ShapeError> {
        if let Some(i) = rows.windows(2).position(|w| w[0] < w[1]) {
            return Err(ShapeError::NotDecreasing {
                index: i + 1,
                above: rows[i],
                below: rows[i + 1],
            });
        }
        Ok(FerrersShape { rows })
    }

    /// The shape of length 0: no rows, no columns.
    pub fn empty() -> Self {
        FerrersShape { rows: Vec::new() }
    }

    pub fn row_lengths(&self) -> &[usize] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn column_count(&self) -> usize {
        self.rows.first().copied().unwrap_or(0)
    }

    /// Number of rows plus number of columns.
    pub fn len(&self) -> usize {
        self.row_count() + self.column_count()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn cell_count(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Height of geometric column `c` (0 = leftmost).
    pub(crate) fn column_height(&self, c: usize) -> usize {
        self.rows.iter().take_while(|&&len| len > c).count()
    }

    pub fn labeling(&self) -> BorderLabeling {
        BorderLabeling::new(self)
    }
}

impl fmt::Display for FerrersShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, len) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{len}")?;
        }
        Ok(())
    }
}

/// Whether a label sits on a down-step (row) or a left-step (column).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LabelKind {
    Row,
    Column,
}

/// The border labeling of a shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderLabeling {
    // row index (top to bottom) -> label
    row_labels: Vec<Label>,
    // column index (left to right) -> label
    col_labels: Vec<Label>,
    // label - 1 -> (kind, geometric index)
    by_label: Vec<(LabelKind, usize)>,
}

impl BorderLabeling {
    pub fn new(shape: &FerrersShape) -> Self {
        let rows = shape.row_lengths();
        let width = shape.column_count();
        let mut row_labels = Vec::with_capacity(rows.len());
        let mut col_labels = vec![0; width];
        let mut by_label = Vec::with_capacity(shape.len());
        let mut x = width;
        for (r, &len) in rows.iter().enumerate() {
            while x > len {
                x -= 1;
                by_label.push((LabelKind::Column, x));
                col_labels[x] = by_label.len();
            }
            by_label.push((LabelKind::Row, r));
            row_labels.push(by_label.len());
        }
        while x > 0 {
            x -= 1;
            by_label.push((LabelKind::Column, x));
            col_labels[x] = by_label.len();
        }
        BorderLabeling {
            row_labels,
            col_labels,
            by_label,
        }
    }

    pub fn len(&self) -> usize {
        self.by_label.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_label.is_empty()
    }

    /// Label of the row with geometric index `r` (0 = top).
    pub fn row_label(&self, r: usize) -> Label {
        self.row_labels[r]
    }

    /// Label of the column with geometric index `c` (0 = leftmost).
    pub fn col_label(&self, c: usize) -> Label {
        self.col_labels[c]
    }

    /// Row labels, increasing top to bottom.
    pub fn row_labels(&self) -> &[Label] {
        &self.row_labels
    }

    /// Column labels in increasing order (right to left).
    pub fn column_labels(&self) -> Vec<Label> {
        self.col_labels.iter().rev().copied().collect()
    }

    pub fn kind(&self, label: Label) -> Option<LabelKind> {
        self.entry(label).map(|(k, _)| k)
    }

    pub fn is_column(&self, label: Label) -> bool {
        self.kind(label) == Some(LabelKind::Column)
    }

    pub fn is_row(&self, label: Label) -> bool {
        self.kind(label) == Some(LabelKind::Row)
    }

    pub fn row_index(&self, label: Label) -> Option<usize> {
        match self.entry(label) {
            Some((LabelKind::Row, r)) => Some(r),
            _ => None,
        }
    }

    pub fn col_index(&self, label: Label) -> Option<usize> {
        match self.entry(label) {
            Some((LabelKind::Column, c)) => Some(c),
            _ => None,
        }
    }

    /// A row and a column meet in a cell iff the row's step comes before the
    /// column's step along the border, i.e. `row < col`.
    pub fn contains(&self, cell: Cell) -> bool {
        self.is_row(cell.row) && self.is_column(cell.col) && cell.row < cell.col
    }

    pub(crate) fn geometric(&self, cell: Cell) -> Option<(usize, usize)> {
        let r = self.row_index(cell.row)?;
        let c = self.col_index(cell.col)?;
        (cell.row < cell.col).then_some((r, c))
    }

    /// Label coordinates of the cell at geometric row `r` (top is 0) and
    /// column `c` (left is 0).
    pub fn cell_at(&self, r: usize, c: usize) -> Cell {
        Cell::new(self.row_labels[r], self.col_labels[c])
    }

    fn entry(&self, label: Label) -> Option<(LabelKind, usize)> {
        label
            .checked_sub(1)
            .and_then(|i| self.by_label.get(i))
            .copied()
    }
}
