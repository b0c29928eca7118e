//! L-Bell tableaux (every topmost 1 is also the leftmost 1 of its row) and
//! Bell numbers.

use crate::alternative::{AlternativeRepresentation, DotKind};
use crate::error::BellError;
use crate::shape::Cell;
use crate::tableau::{classify_cells, CellKind, PermutationTableau};

pub fn is_lbell(t: &PermutationTableau) -> bool {
    let cls = classify_cells(t);
    let labels = t.labeling();
    cls.cells_of(CellKind::TopmostOne).into_iter().all(|cell| {
        let (r, c) = labels
            .geometric(cell)
            .expect("classified cells are in the shape");
        !t.rows()[r][..c].iter().any(|&b| b)
    })
}

/// Checks the two dot conditions that characterize L-Bell tableaux:
///
/// 1. no row holds two black dots;
/// 2. no empty cell lies below its column's black dot while the nearest dot
///    to its right in the same row is black.
pub fn structural_noinv_check(a: &AlternativeRepresentation) -> bool {
    let labels = a.labeling();
    let rows = a.shape().row_lengths();
    for (r, &len) in rows.iter().enumerate() {
        let row = labels.row_label(r);
        let dots: Vec<Option<DotKind>> = (0..len)
            .map(|c| a.dot_at(Cell::new(row, labels.col_label(c))))
            .collect();
        if dots.iter().filter(|d| **d == Some(DotKind::Black)).count() > 1 {
            return false;
        }
        for c in 0..len {
            if dots[c].is_some() {
                continue;
            }
            let col = labels.col_label(c);
            let below_black = a.black_row(col).is_some_and(|top| top < row);
            let right_is_black = dots[c + 1..].iter().flatten().next() == Some(&DotKind::Black);
            if below_black && right_is_black {
                return false;
            }
        }
    }
    true
}

/// `B_0, ..., B_m` from the Bell triangle.
pub fn bell(m: usize) -> Result<Vec<u128>, BellError> {
    let mut out = vec![1u128];
    let mut row = vec![1u128];
    for n in 1..=m {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().expect("rows are nonempty"));
        for &above in &row {
            let left = *next.last().expect("seeded above");
            next.push(left.checked_add(above).ok_or(BellError::Overflow(n))?);
        }
        out.push(next[0]);
        row = next;
    }
    Ok(out)
}
