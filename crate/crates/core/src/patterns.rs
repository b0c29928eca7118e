//! Dashed (vincular) patterns such as `32-1`: entries inside a block must
//! match adjacent positions, blocks separated by a dash need not.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::bijection::Permutation;
use crate::error::PatternError;

/// Longest supported pattern (single-digit notation).
pub const MAX_PATTERN_LEN: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DashedPattern {
    blocks: Vec<Vec<u8>>,
}

impl DashedPattern {
    pub fn new(blocks: Vec<Vec<u8>>) -> Result<Self, PatternError> {
        if blocks.is_empty() {
            return Err(PatternError::Empty);
        }
        if blocks.iter().any(Vec::is_empty) {
            return Err(PatternError::EmptyBlock(format!("{blocks:?}")));
        }
        let k: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = [false; MAX_PATTERN_LEN + 1];
        for &v in blocks.iter().flatten() {
            if v == 0 || v as usize > MAX_PATTERN_LEN {
                return Err(PatternError::IllegalChar(char::from(b'0' + v.min(9))));
            }
            if seen[v as usize] {
                return Err(PatternError::Repeated(v));
            }
            seen[v as usize] = true;
        }
        if let Some(missing) = (1..=k).find(|&v| !seen[v]) {
            return Err(PatternError::Gap { k, missing });
        }
        Ok(DashedPattern { blocks })
    }

    pub fn blocks(&self) -> &[Vec<u8>] {
        &self.blocks
    }

    /// Pattern length `k`.
    pub fn len(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> Vec<u8> {
        self.blocks.iter().flatten().copied().collect()
    }

    /// For each pattern entry, whether it must sit right after the previous
    /// entry.
    fn adjacent_to_previous(&self) -> Vec<bool> {
        self.blocks
            .iter()
            .flat_map(|b| (0..b.len()).map(|i| i > 0))
            .collect()
    }
}

/// Parses notation like `32-1`, `3--21` or `2-31`. A double dash counts as a
/// single separator.
pub fn parse_pattern(text: &str) -> Result<DashedPattern, PatternError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(PatternError::Empty);
    }
    let mut blocks = vec![Vec::new()];
    let mut dashes = 0;
    for ch in text.chars() {
        match ch {
            '1'..='9' => {
                if dashes > 0 {
                    blocks.push(Vec::new());
                    dashes = 0;
                }
                blocks.last_mut().unwrap().push(ch as u8 - b'0');
            }
            '-' => {
                dashes += 1;
                if dashes > 2 || blocks.last().unwrap().is_empty() {
                    return Err(PatternError::EmptyBlock(text.to_string()));
                }
            }
            other => return Err(PatternError::IllegalChar(other)),
        }
    }
    if dashes > 0 {
        return Err(PatternError::EmptyBlock(text.to_string()));
    }
    DashedPattern::new(blocks)
}

impl FromStr for DashedPattern {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_pattern(s)
    }
}

impl fmt::Display for DashedPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("-")?;
            }
            for v in b {
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// Number of occurrences of `p` in `perm`.
///
/// Backtracks over positions entry by entry, rejecting a partial placement
/// as soon as one pair disagrees in relative order with the pattern.
pub fn count_occurrences(p: &DashedPattern, perm: &Permutation) -> u64 {
    let values = p.values();
    let adjacent = p.adjacent_to_previous();
    let entries = perm.entries();
    if values.len() > entries.len() {
        return 0;
    }
    let mut placed = Vec::with_capacity(values.len());
    place(&values, &adjacent, entries, &mut placed)
}

fn place(values: &[u8], adjacent: &[bool], entries: &[usize], placed: &mut Vec<usize>) -> u64 {
    let t = placed.len();
    if t == values.len() {
        return 1;
    }
    let remaining = values.len() - t;
    let candidates = match placed.last() {
        None => 0..entries.len() + 1 - remaining,
        Some(&prev) if adjacent[t] => prev + 1..(prev + 2).min(entries.len() + 1 - remaining),
        Some(&prev) => prev + 1..entries.len() + 1 - remaining,
    };
    let mut total = 0;
    for pos in candidates {
        let consistent = placed
            .iter()
            .zip(values)
            .all(|(&q, &v)| (entries[q] < entries[pos]) == (v < values[t]));
        if consistent {
            placed.push(pos);
            total += place(values, adjacent, entries, placed);
            placed.pop();
        }
    }
    total
}

/// Brute-force count: every increasing index tuple of length `k`, filtered
/// by block adjacency and by comparing the standardized values.
pub fn oracle_count(p: &DashedPattern, perm: &Permutation) -> u64 {
    let values = p.values();
    let k = values.len();
    let entries = perm.entries();
    let block_ends: Vec<usize> = p
        .blocks()
        .iter()
        .scan(0, |acc, b| {
            *acc += b.len();
            Some(*acc)
        })
        .collect();
    let mut count = 0;
    for idx in (0..entries.len()).combinations(k) {
        let contiguous = (1..k).all(|t| block_ends.contains(&t) || idx[t] == idx[t - 1] + 1);
        if !contiguous {
            continue;
        }
        let picked: Vec<usize> = idx.iter().map(|&i| entries[i]).collect();
        if standardize(&picked) == values {
            count += 1;
        }
    }
    count
}

/// Replaces each value by its rank (1-based) among the values.
fn standardize(xs: &[usize]) -> Vec<u8> {
    let mut sorted = xs.to_vec();
    sorted.sort_unstable();
    xs.iter()
        .map(|x| (sorted.binary_search(x).unwrap() + 1) as u8)
        .collect()
}

/// Entry `i` becomes `n + 1 - π_{n+1-i}`.
pub fn reverse_complement(perm: &Permutation) -> Permutation {
    let n = perm.len();
    let entries = perm.entries().iter().rev().map(|&v| n + 1 - v).collect();
    Permutation::new(entries).expect("reverse complement of a permutation")
}
