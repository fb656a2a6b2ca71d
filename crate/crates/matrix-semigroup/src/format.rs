//! `mat` text format: header `mat <count> <n>` followed by `count` blocks of
//! `n` rows, each row `n` characters of `0`/`1`. Lines starting with `#` and
//! blank lines are skipped on input; output is canonical with no separators.

use crate::matrix::{BoolMatrix, MatrixError};

pub fn render_mat_file(matrices: &[BoolMatrix]) -> String {
    let n = matrices.first().map_or(0, BoolMatrix::n);
    let mut out = format!("mat {} {}\n", matrices.len(), n);
    for m in matrices {
        for i in 0..m.n() {
            for j in 0..m.n() {
                out.push(if m.get(i, j) { '1' } else { '0' });
            }
            out.push('\n');
        }
    }
    out
}

pub fn parse_mat_file(text: &str) -> Result<Vec<BoolMatrix>, MatrixError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let parse_err = |line: usize, message: &str| MatrixError::Parse {
        line,
        message: message.to_string(),
    };

    let (header_no, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "empty input"))?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("mat") {
        return Err(parse_err(header_no, "expected `mat <count> <n>` header"));
    }
    let count: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(header_no, "bad matrix count"))?;
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(header_no, "bad dimension"))?;

    let mut matrices = Vec::with_capacity(count);
    for _ in 0..count {
        let mut m = BoolMatrix::zero(n);
        for i in 0..n {
            let (line_no, row) = lines
                .next()
                .ok_or_else(|| parse_err(0, "missing matrix rows"))?;
            let chars: Vec<char> = row.chars().collect();
            if chars.len() != n {
                return Err(parse_err(line_no, "row has wrong width"));
            }
            for (j, c) in chars.into_iter().enumerate() {
                match c {
                    '0' => {}
                    '1' => m.set(i, j, true),
                    _ => return Err(parse_err(line_no, "rows must be 0/1 digits")),
                }
            }
        }
        matrices.push(m);
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(parse_err(line_no, "unexpected content after matrices"));
    }
    Ok(matrices)
}
