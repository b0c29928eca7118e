//! Permutation tableaux and the inversion statistic defined through
//! alternating paths on their dot form.
//!
//! The main objects:
//!
//! * [`PermutationTableau`]: a 0/1 filling of a Ferrers shape (empty rows
//!   allowed) where every column has a 1 and no 0 has a 1 both above it and
//!   to its left. Rows and columns carry border labels `1..=n`.
//! * [`AlternativeRepresentation`]: the same tableau as black dots (topmost
//!   1s) and white dots (rightmost restricted 0s).
//! * [`inv`]: number of pairs `(j, k)` with `j` a column label, `k > j` a dot
//!   label, and the alternating path from `j` greater than the one from `k`.
//! * [`xi`]: the insertion bijection to permutations, under which `inv(T)`
//!   equals the number of `3-21` occurrences in `xi(T)`.
//!
//! ```
//! use permtab_core::{format::parse_tableau, inv, to_alternative, xi};
//!
//! let t = parse_tableau("5\n2,2,1\n10\n11\n0\n").unwrap();
//! let a = to_alternative(&t);
//! assert_eq!(inv(&a), 2);
//! assert_eq!(xi(&a).to_string(), "4,5,1,3,2");
//! ```

pub mod alternative;
pub mod bijection;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod lbell;
pub mod paths;
pub mod patterns;
pub mod shape;
pub mod tableau;
pub mod verify;

pub use alternative::{to_alternative, AlternativeRepresentation, DotKind};
pub use bijection::{descent_column_check, xi, Permutation};
pub use enumerate::{
    distribution, shapes_of_length, tableaux_of_length, tableaux_of_shape, Statistic,
    StatisticDistribution,
};
pub use lbell::{bell, is_lbell, structural_noinv_check};
pub use paths::{alternating_path, compare_paths, inv, inversions, w, AlternatingPath, PathOrder};
pub use patterns::{
    count_occurrences, oracle_count, parse_pattern, reverse_complement, DashedPattern,
};
pub use shape::{BorderLabeling, Cell, FerrersShape, Label, LabelKind};
pub use tableau::{
    classify_cells, validate, CellKind, Classification, PermutationTableau, ValidationReport,
    Violation,
};
