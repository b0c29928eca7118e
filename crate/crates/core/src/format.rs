//! Plain-text formats.
//!
//! Tableau:
//!
//! ```text
//! 5
//! 2,2,1
//! 10
//! 11
//! 0
//! ```
//!
//! Line 1 is the length, line 2 the row lengths (trailing zeros included),
//! then one line of `0`/`1` per row with `-` for an empty row. The dot form
//! shares the header and lists `B row col` / `W row col` lines by label.

use crate::alternative::AlternativeRepresentation;
use crate::error::FormatError;
use crate::shape::{Cell, FerrersShape};
use crate::tableau::PermutationTableau;

pub fn tableau_to_text(t: &PermutationTableau) -> String {
    let mut out = header(t.shape());
    for row in t.rows() {
        if row.is_empty() {
            out.push('-');
        } else {
            out.extend(row.iter().map(|&b| if b { '1' } else { '0' }));
        }
        out.push('\n');
    }
    out
}

pub fn alternative_to_text(a: &AlternativeRepresentation) -> String {
    let mut out = header(a.shape());
    for c in a.black_dots() {
        out.push_str(&format!("B {} {}\n", c.row, c.col));
    }
    for c in a.white_dots() {
        out.push_str(&format!("W {} {}\n", c.row, c.col));
    }
    out
}

fn header(shape: &FerrersShape) -> String {
    format!("{}\n{}\n", shape.len(), shape)
}

fn content_lines(text: &str) -> Vec<(usize, &str)> {
    let mut lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .collect();
    while lines.last().is_some_and(|(_, l)| l.is_empty()) {
        lines.pop();
    }
    lines
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn parse_header(lines: &[(usize, &str)]) -> Result<FerrersShape, FormatError> {
    let &(_, n_line) = lines
        .first()
        .ok_or_else(|| syntax(1, "missing length line"))?;
    let declared: usize = n_line
        .trim()
        .parse()
        .map_err(|_| syntax(1, format!("expected a length, found {n_line:?}")))?;
    let shape_line = lines.get(1).map_or("", |&(_, l)| l.trim());
    let rows = if shape_line.is_empty() {
        Vec::new()
    } else {
        shape_line
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| syntax(2, format!("bad row length {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    let shape = FerrersShape::new(rows)?;
    if shape.len() != declared {
        return Err(FormatError::LengthMismatch {
            declared,
            actual: shape.len(),
        });
    }
    Ok(shape)
}

pub fn parse_tableau(text: &str) -> Result<PermutationTableau, FormatError> {
    let lines = content_lines(text);
    let shape = parse_header(&lines)?;
    let body = lines.get(2..).unwrap_or(&[]);
    if body.len() != shape.row_count() {
        return Err(syntax(
            lines.len() + 1,
            format!(
                "expected {} row lines, found {}",
                shape.row_count(),
                body.len()
            ),
        ));
    }
    let rows = body
        .iter()
        .map(|&(ln, line)| {
            let line = line.trim();
            if line == "-" {
                return Ok(Vec::new());
            }
            line.chars()
                .map(|ch| match ch {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    other => Err(syntax(ln, format!("unexpected character {other:?}"))),
                })
                .collect()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PermutationTableau::new(shape, rows)?)
}

pub fn parse_alternative(text: &str) -> Result<AlternativeRepresentation, FormatError> {
    let lines = content_lines(text);
    let shape = parse_header(&lines)?;
    let mut black = Vec::new();
    let mut white = Vec::new();
    for &(ln, line) in lines.get(2..).unwrap_or(&[]) {
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.is_empty() {
            continue;
        }
        let [kind, r, c] = parts[..] else {
            return Err(syntax(ln, "expected `B row col` or `W row col`"));
        };
        let label = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| syntax(ln, format!("bad label {s:?}")))
        };
        let cell = Cell::new(label(r)?, label(c)?);
        match kind {
            "B" => black.push(cell),
            "W" => white.push(cell),
            other => return Err(syntax(ln, format!("unknown dot kind {other:?}"))),
        }
    }
    Ok(AlternativeRepresentation::new(shape, black, white)?)
}

/// Reads either format, telling them apart by the presence of dot lines.
pub fn parse_any(text: &str) -> Result<PermutationTableau, FormatError> {
    let is_dots = text
        .lines()
        .skip(2)
        .any(|l| matches!(l.trim_start().chars().next(), Some('B' | 'W')));
    if is_dots {
        Ok(parse_alternative(text)?.reconstruct())
    } else {
        parse_tableau(text)
    }
}
