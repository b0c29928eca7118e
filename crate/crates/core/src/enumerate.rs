//! Exhaustive generation of shapes and tableaux, and statistic histograms.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;

use crate::alternative::to_alternative;
use crate::bijection::Permutation;
use crate::error::StatisticError;
use crate::paths::inv;
use crate::patterns::{count_occurrences, parse_pattern, DashedPattern};
use crate::shape::FerrersShape;
use crate::tableau::PermutationTableau;

/// Every shape of length `n` (at least one row when `n >= 1`), in
/// decreasing lexicographic order of row lengths.
pub fn shapes_of_length(n: usize) -> Vec<FerrersShape> {
    if n == 0 {
        return vec![FerrersShape::empty()];
    }
    let mut out = Vec::new();
    for width in 0..n {
        let height = n - width;
        let mut rows = vec![width];
        extend_rows(&mut rows, height, width, &mut out);
    }
    out.sort_unstable_by(|a, b| b.row_lengths().cmp(a.row_lengths()));
    out
}

fn extend_rows(rows: &mut Vec<usize>, height: usize, max: usize, out: &mut Vec<FerrersShape>) {
    if rows.len() == height {
        out.push(FerrersShape::new(rows.clone()).expect("built weakly decreasing"));
        return;
    }
    for len in (0..=max).rev() {
        rows.push(len);
        extend_rows(rows, height, len, out);
        rows.pop();
    }
}

/// Iterator over all tableaux of one shape.
///
/// Cells are filled column by column starting from the rightmost column,
/// top to bottom within a column. A 1 is refused in a row that already has
/// a 0 with a 1 above it further right, and a column may not close without
/// a 1.
pub struct ShapeTableaux {
    shape: FerrersShape,
    // (row, col) in fill order
    order: Vec<(usize, usize)>,
    // whether order[i] is the bottom cell of its column
    column_end: Vec<bool>,
    values: Vec<bool>,
    ones_in_col: Vec<usize>,
    restricted_zeros_in_row: Vec<usize>,
    started: bool,
    done: bool,
}

impl ShapeTableaux {
    pub fn new(shape: FerrersShape) -> Self {
        let width = shape.column_count();
        let mut order = Vec::with_capacity(shape.cell_count());
        let mut column_end = Vec::with_capacity(shape.cell_count());
        for c in (0..width).rev() {
            let h = shape.column_height(c);
            for r in 0..h {
                order.push((r, c));
                column_end.push(r + 1 == h);
            }
        }
        let rows = shape.row_count();
        ShapeTableaux {
            shape,
            order,
            column_end,
            values: Vec::new(),
            ones_in_col: vec![0; width],
            restricted_zeros_in_row: vec![0; rows],
            started: false,
            done: false,
        }
    }

    fn allowed(&self, idx: usize, value: bool) -> bool {
        let (r, c) = self.order[idx];
        if value {
            self.restricted_zeros_in_row[r] == 0
        } else {
            !self.column_end[idx] || self.ones_in_col[c] > 0
        }
    }

    fn push(&mut self, value: bool) {
        let (r, c) = self.order[self.values.len()];
        if value {
            self.ones_in_col[c] += 1;
        } else if self.ones_in_col[c] > 0 {
            self.restricted_zeros_in_row[r] += 1;
        }
        self.values.push(value);
    }

    fn pop(&mut self) -> Option<bool> {
        let value = self.values.pop()?;
        let (r, c) = self.order[self.values.len()];
        if value {
            self.ones_in_col[c] -= 1;
        } else if self.ones_in_col[c] > 0 {
            self.restricted_zeros_in_row[r] -= 1;
        }
        Some(value)
    }

    /// Depth-first search from the current partial filling, trying values
    /// `>= from` at the next cell. Returns false when exhausted.
    fn search(&mut self, mut from: bool) -> bool {
        loop {
            let idx = self.values.len();
            if idx == self.order.len() {
                return true;
            }
            let next = [false, true]
                .into_iter()
                .filter(|&v| v >= from)
                .find(|&v| self.allowed(idx, v));
            match next {
                Some(v) => {
                    self.push(v);
                    from = false;
                }
                None => loop {
                    match self.pop() {
                        None => return false,
                        Some(false) => {
                            from = true;
                            break;
                        }
                        Some(true) => continue,
                    }
                },
            }
        }
    }

    fn current(&self) -> PermutationTableau {
        let mut rows: Vec<Vec<bool>> = self
            .shape
            .row_lengths()
            .iter()
            .map(|&len| vec![false; len])
            .collect();
        for (&(r, c), &v) in self.order.iter().zip(&self.values) {
            rows[r][c] = v;
        }
        PermutationTableau::new_unchecked(self.shape.clone(), rows)
    }
}

impl Iterator for ShapeTableaux {
    type Item = PermutationTableau;

    fn next(&mut self) -> Option<PermutationTableau> {
        if self.done {
            return None;
        }
        let found = if !self.started {
            self.started = true;
            self.search(false)
        } else {
            // step past the last emitted filling
            loop {
                match self.pop() {
                    None => break false,
                    Some(true) => continue,
                    Some(false) => break self.search(true),
                }
            }
        };
        if found {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

pub fn tableaux_of_shape(shape: &FerrersShape) -> ShapeTableaux {
    ShapeTableaux::new(shape.clone())
}

/// All tableaux of length `n`, shape by shape.
pub fn tableaux_of_length(n: usize) -> impl Iterator<Item = PermutationTableau> {
    shapes_of_length(n).into_iter().flat_map(ShapeTableaux::new)
}

/// Applies `f` to every tableau of length `n`, one shape per work unit,
/// and returns the per-shape results in shape order.
pub fn map_shapes<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(ShapeTableaux) -> T + Sync,
{
    shapes_of_length(n)
        .into_par_iter()
        .map(|s| f(ShapeTableaux::new(s)))
        .collect()
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations_of(n: usize) -> impl Iterator<Item = Permutation> {
    (1..=n)
        .permutations(n)
        .map(|v| Permutation::new(v).expect("itertools yields permutations"))
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StatisticDistribution {
    pub histogram: BTreeMap<u64, u64>,
    pub total: u64,
}

impl StatisticDistribution {
    pub fn add(&mut self, value: u64) {
        *self.histogram.entry(value).or_default() += 1;
        self.total += 1;
    }

    pub fn merge(mut self, other: StatisticDistribution) -> Self {
        for (v, c) in other.histogram {
            *self.histogram.entry(v).or_default() += c;
        }
        self.total += other.total;
        self
    }

    pub fn count(&self, value: u64) -> u64 {
        self.histogram.get(&value).copied().unwrap_or(0)
    }

    /// `value<TAB>count` lines followed by a `total` line.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (v, c) in &self.histogram {
            out.push_str(&format!("{v}\t{c}\n"));
        }
        out.push_str(&format!("total\t{}\n", self.total));
        out
    }
}

impl FromIterator<u64> for StatisticDistribution {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        let mut d = StatisticDistribution::default();
        for v in iter {
            d.add(v);
        }
        d
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Statistic {
    /// Inversion number over tableaux of length n.
    TableauInv,
    /// Occurrences of a dashed pattern over all permutations of size n.
    PatternCount(DashedPattern),
}

impl FromStr for Statistic {
    type Err = StatisticError;

    /// Accepts `inv`, `inv-tableau`, or a pattern written either bare
    /// (`32-1`) or as `pattern:32-1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inv" | "inv-tableau" => Ok(Statistic::TableauInv),
            other => {
                let text = other.strip_prefix("pattern:").unwrap_or(other);
                if text.is_empty() || !text.chars().all(|c| c.is_ascii_digit() || c == '-') {
                    return Err(StatisticError::Unknown(s.to_string()));
                }
                Ok(Statistic::PatternCount(parse_pattern(text)?))
            }
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistic::TableauInv => f.write_str("inv"),
            Statistic::PatternCount(p) => write!(f, "pattern:{p}"),
        }
    }
}

pub fn distribution(n: usize, statistic: &Statistic) -> StatisticDistribution {
    match statistic {
        Statistic::TableauInv => map_shapes(n, |ts| {
            ts.map(|t| inv(&to_alternative(&t)) as u64)
                .collect::<StatisticDistribution>()
        })
        .into_iter()
        .fold(
            StatisticDistribution::default(),
            StatisticDistribution::merge,
        ),
        Statistic::PatternCount(p) => permutations_of(n)
            .map(|pi| count_occurrences(p, &pi))
            .collect(),
    }
}
