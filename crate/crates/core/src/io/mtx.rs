//! Matrix Market coordinate files (`real general`).

use std::io::{BufRead, Write};

use crate::error::{MagError, Result};
use crate::sparse::SparseMatrix;

const HEADER: &str = "%%MatrixMarket matrix coordinate real general";

/// Writes 1-based, row-major entries with 17 significant digits.
pub fn write_matrix_market<W: Write>(m: &SparseMatrix, mut out: W) -> Result<()> {
    writeln!(out, "{HEADER}")?;
    writeln!(out, "{} {} {}", m.rows(), m.cols(), m.nnz())?;
    for (r, c, v) in m.triplets() {
        writeln!(out, "{} {} {:.16e}", r + 1, c + 1, v)?;
    }
    out.flush()?;
    Ok(())
}

/// Reads a `coordinate real|integer general` file. Repeated coordinates are
/// summed.
pub fn read_matrix_market<R: BufRead>(input: R) -> Result<SparseMatrix> {
    let mut lines = input.lines().enumerate();
    let syntax = |line: usize, message: &str| MagError::Syntax {
        line,
        message: message.to_string(),
    };
    let header = match lines.next() {
        Some((_, l)) => l?,
        None => return Err(syntax(1, "empty Matrix Market file")),
    };
    let fields: Vec<String> = header.split_whitespace().map(str::to_ascii_lowercase).collect();
    if fields.len() != 5 || fields[0] != "%%matrixmarket" || fields[1] != "matrix" || fields[2] != "coordinate" {
        return Err(syntax(1, "expected a `%%MatrixMarket matrix coordinate` header"));
    }
    if !matches!(fields[3].as_str(), "real" | "integer") || fields[4] != "general" {
        return Err(syntax(1, "only `real general` and `integer general` are supported"));
    }
    let mut size: Option<(usize, usize, usize)> = None;
    let mut triplets = Vec::new();
    for (k, line) in lines {
        let line_no = k + 1;
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('%') {
            continue;
        }
        let parts: Vec<&str> = text.split_whitespace().collect();
        match size {
            None => {
                let nums = parse_all::<usize>(&parts).filter(|v| v.len() == 3);
                let nums = nums.ok_or_else(|| syntax(line_no, "expected `rows cols nnz`"))?;
                size = Some((nums[0], nums[1], nums[2]));
                triplets.reserve(nums[2]);
            }
            Some((rows, cols, _)) => {
                if parts.len() != 3 {
                    return Err(syntax(line_no, "expected `row col value`"));
                }
                let rc = parse_all::<usize>(&parts[..2]).ok_or_else(|| syntax(line_no, "invalid coordinate"))?;
                let v: f64 = parts[2].parse().map_err(|_| syntax(line_no, "invalid value"))?;
                let (r, c) = (rc[0], rc[1]);
                if r == 0 || c == 0 || r > rows || c > cols {
                    return Err(syntax(line_no, "coordinate outside the declared shape"));
                }
                triplets.push((r - 1, c - 1, v));
            }
        }
    }
    let (rows, cols, nnz) = size.ok_or_else(|| syntax(1, "missing size line"))?;
    if triplets.len() != nnz {
        return Err(MagError::ShapeMismatch {
            expected: format!("{nnz} entries"),
            found: format!("{} entries", triplets.len()),
        });
    }
    Ok(SparseMatrix::from_triplets(rows, cols, triplets))
}

fn parse_all<T: std::str::FromStr>(parts: &[&str]) -> Option<Vec<T>> {
    parts.iter().map(|p| p.parse().ok()).collect()
}
