//! Text formats for the `rank` command.
//!
//! A matrix file has one row per line with `;`-separated entries in the
//! Laurent polynomial text form; blank lines and `#` comments are ignored.
//!
//! A tower file declares `b <n>` and `r <n>`, then optionally one line
//! `action <k> = <row>; <row>; ...` per skew variable, entries in a row
//! separated by `,`. Without action lines the standard tower is used.
//!
//! Over a tower, matrix entries are polynomials in `t1..tb` (the skew
//! variables) and `t(b+1)..t(b+r)` (the module basis), each monomial read
//! with its module part on the left.

use num_rational::BigRational;
use thiserror::Error;

use crate::laurent::{LaurentError, LaurentPoly, Matrix};
use crate::skewfield::{ExtensionTower, MElt, SkewError, SkewFieldElt};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Poly { line: usize, source: LaurentError },
    #[error(transparent)]
    Tower(#[from] SkewError),
}

fn content(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// Parses a matrix with entries in `nvars` variables.
pub fn parse_matrix(text: &str, nvars: usize) -> Result<Matrix<LaurentPoly>, FormatError> {
    let mut rows: Vec<Vec<LaurentPoly>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = content(raw);
        if line.is_empty() {
            continue;
        }
        let row = line
            .split(';')
            .map(|e| LaurentPoly::parse(e.trim(), nvars).map_err(|source| FormatError::Poly { line: i + 1, source }))
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(FormatError::Syntax {
                    line: i + 1,
                    message: format!("row has {} entries, expected {}", row.len(), first.len()),
                });
            }
        }
        rows.push(row);
    }
    let cols = rows.first().map_or(0, Vec::len);
    Ok(Matrix::from_rows(rows, cols))
}

fn parse_count(line: usize, v: Option<&str>) -> Result<usize, FormatError> {
    v.and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| FormatError::Syntax { line, message: "expected a nonnegative integer".into() })
}

pub fn parse_tower(text: &str) -> Result<ExtensionTower, FormatError> {
    let (mut b, mut r) = (None, None);
    let mut actions: Vec<(usize, usize, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = content(raw);
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match key {
            "b" => b = Some(parse_count(i + 1, Some(rest))?),
            "r" => r = Some(parse_count(i + 1, Some(rest))?),
            "action" => {
                let (k, m) = rest.split_once('=').ok_or_else(|| FormatError::Syntax {
                    line: i + 1,
                    message: "expected `action <k> = <matrix>`".into(),
                })?;
                actions.push((i + 1, parse_count(i + 1, Some(k))?, m.trim().to_string()));
            }
            other => {
                return Err(FormatError::Syntax { line: i + 1, message: format!("unknown key `{other}`") });
            }
        }
    }
    let b = b.ok_or(FormatError::Syntax { line: 1, message: "missing `b`".into() })?;
    let r = r.ok_or(FormatError::Syntax { line: 1, message: "missing `r`".into() })?;
    if actions.is_empty() {
        return Ok(ExtensionTower::standard(b, r));
    }
    actions.sort_by_key(|a| a.1);
    let mut mats = Vec::new();
    for (k, (line, idx, m)) in actions.iter().enumerate() {
        if *idx != k + 1 {
            return Err(FormatError::Syntax { line: *line, message: format!("action {} out of order", idx) });
        }
        let rows = m
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|e| {
                        LaurentPoly::parse(e.trim(), b).map_err(|source| FormatError::Poly { line: *line, source })
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        mats.push(Matrix::from_rows(rows, r));
    }
    Ok(ExtensionTower::new(b, r, mats)?)
}

/// Reads a polynomial in `b + r` variables as a group-ring element of the
/// tower.
pub fn tower_element(tower: &ExtensionTower, p: &LaurentPoly) -> SkewFieldElt {
    let (b, r) = (tower.b(), tower.module_rank());
    let terms: Vec<(MElt, Vec<i64>, BigRational)> = p
        .terms()
        .map(|(e, c)| {
            let v =
                MElt((0..r).map(|k| LaurentPoly::constant(b, BigRational::from_integer(e[b + k].into()))).collect());
            (v, e[..b].to_vec(), c.clone())
        })
        .collect();
    tower.group_ring_element(&terms)
}
