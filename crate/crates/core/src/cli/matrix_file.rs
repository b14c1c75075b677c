use std::path::Path;

use crate::error::{Error, Result};
use crate::field_linalg::FieldCtx;
use crate::lie::QuadraticPresentation;

/// Parses `p <modulus>` followed by four rows of six integers. Text after `#`
/// and blank lines are ignored; entries are reduced mod `p`.
pub fn parse_matrix_file(text: &str) -> Result<QuadraticPresentation> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (n, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
    let p = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["p", v] => v
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("line {n}: bad modulus {v:?}")))?,
        _ => return Err(Error::Parse(format!("line {n}: expected `p <modulus>`"))),
    };
    let ctx = FieldCtx::new(p)?;

    let mut rows = [[0i64; 6]; 4];
    let mut count = 0;
    for (n, line) in lines {
        if count == 4 {
            return Err(Error::Parse(format!("line {n}: more than 4 relator rows")));
        }
        let vals = line
            .split_whitespace()
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("line {n}: bad integer {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if vals.len() != 6 {
            return Err(Error::Parse(format!(
                "line {n}: expected 6 entries, found {}",
                vals.len()
            )));
        }
        rows[count].copy_from_slice(&vals);
        count += 1;
    }
    if count != 4 {
        return Err(Error::Parse(format!(
            "expected 4 relator rows, found {count}"
        )));
    }
    Ok(QuadraticPresentation::from_int_rows(ctx, &rows))
}

pub fn read_matrix_file(path: &Path) -> Result<QuadraticPresentation> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_matrix_file(&text)
}
