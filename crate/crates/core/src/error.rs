use thiserror::Error;

use crate::shape::{Cell, Label};
use crate::tableau::ValidationReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("row {index} has length {below}, longer than the row above ({above})")]
    NotDecreasing {
        index: usize,
        above: usize,
        below: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error("filling has {found} rows, shape has {expected}")]
    RowCountMismatch { expected: usize, found: usize },
    #[error("row {row} of the filling has {found} cells, shape has {expected}")]
    RowLengthMismatch {
        row: Label,
        expected: usize,
        found: usize,
    },
    #[error("filling violates the tableau axioms: {0}")]
    Axioms(ValidationReport),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepresentationError {
    #[error("cell {0} is not in the shape")]
    CellOutsideShape(Cell),
    #[error("column {0} has more than one black dot")]
    DuplicateBlack(Label),
    #[error("column {0} has no black dot")]
    MissingBlack(Label),
    #[error("row {0} has more than one white dot")]
    DuplicateWhite(Label),
    #[error("cell {0} holds both a black and a white dot")]
    Overlap(Cell),
    #[error("the dots do not encode a permutation tableau: {0}")]
    NotATableau(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("label {0} is out of range")]
    OutOfRange(Label),
    #[error("row {0} has no white dot")]
    NoDot(Label),
    #[error("label {0} is not a column label")]
    NotAColumn(Label),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermutationError {
    #[error("value {0} is missing or out of range")]
    NotAPermutation(usize),
    #[error("cannot parse permutation entry {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("pattern is empty")]
    Empty,
    #[error("empty block in pattern {0:?}")]
    EmptyBlock(String),
    #[error("illegal character {0:?} in pattern")]
    IllegalChar(char),
    #[error("value {0} appears more than once")]
    Repeated(u8),
    #[error("pattern values must be exactly 1..={k}; {missing} is missing")]
    Gap { k: usize, missing: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("declared length {declared} does not match shape length {actual}")]
    LengthMismatch { declared: usize, actual: usize },
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Representation(#[from] RepresentationError),
    #[error(transparent)]
    Shape(#[from] ShapeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatisticError {
    #[error("unknown statistic {0:?}")]
    Unknown(String),
    #[error(transparent)]
    Pattern(#[from] PatternError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BellError {
    #[error("Bell number B_{0} overflows 128-bit arithmetic")]
    Overflow(usize),
}
