//! The insertion bijection from tableaux (in dot form) to permutations.

use std::fmt;
use std::str::FromStr;

use crate::alternative::AlternativeRepresentation;
use crate::error::PermutationError;

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(entries: Vec<usize>) -> Result<Self, PermutationError> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            if v == 0 || v > n || seen[v] {
                return Err(PermutationError::NotAPermutation(v));
            }
            seen[v] = true;
        }
        Ok(Permutation(entries))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 0-based positions `i` with `π_i > π_{i+1}`.
    pub fn descent_positions(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i)
            .collect()
    }

    /// 0-based position of each value, indexed by value (slot 0 unused).
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.0.len() + 1];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = PermutationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Permutation(Vec::new()));
        }
        let entries = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| PermutationError::Parse(t.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Permutation::new(entries)
    }
}

/// Starts from the unrestricted row labels in increasing order. Column
/// labels are then taken in decreasing order: each goes immediately left of
/// the row label of its black dot, and the rows holding white dots in that
/// column go, increasing, immediately left of the column label.
pub fn xi(a: &AlternativeRepresentation) -> Permutation {
    let mut seq = a.unrestricted_rows();
    seq.reserve(a.len());
    let mut whites_by_col = vec![Vec::new(); a.len() + 1];
    for cell in a.white_dots() {
        whites_by_col[cell.col].push(cell.row);
    }
    for j in a.column_labels().into_iter().rev() {
        let row = a.black_row(j).expect("every column has a black dot");
        // a restricted row's white dot lies in a larger column, so the row
        // label is already placed
        let at = seq
            .iter()
            .position(|&x| x == row)
            .expect("black dot row already inserted");
        seq.insert(at, j);
        // white_dots() is ordered by row, so each list is increasing
        seq.splice(at..at, whites_by_col[j].iter().copied());
    }
    debug_assert_eq!(seq.len(), a.len());
    Permutation(seq)
}

/// True iff the descents of `xi(a)` sit exactly at the column labels.
pub fn descent_column_check(a: &AlternativeRepresentation) -> bool {
    let pi = xi(a);
    let labels = a.labeling();
    let e = pi.entries();
    (0..e.len()).all(|i| {
        let descent = i + 1 < e.len() && e[i] > e[i + 1];
        descent == labels.is_column(e[i])
    })
}
