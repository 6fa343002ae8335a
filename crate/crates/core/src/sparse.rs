//! Compressed sparse row matrices and the handful of kernels the MAG
//! constructions need.
//!
//! Row and column indices on [`SparseMatrix`] are zero-based. Column indices
//! are strictly increasing within a row and no explicit zeros are stored.

use std::fmt;

use crate::error::{MagError, Result};

/// Entries with magnitude below this are treated as zero in pattern
/// comparisons and rank computations.
pub const ZERO_TOL: f64 = 1e-12;

/// Largest side for which dense fallbacks (rank, inverse) are allowed.
pub const DENSE_CAP: usize = 512;

#[derive(Clone, PartialEq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    offsets: Vec<usize>,
    indices: Vec<usize>,
    values: Vec<f64>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            offsets: vec![0; rows + 1],
            indices: Vec::new(),
            values: Vec::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            offsets: (0..=n).collect(),
            indices: (0..n).collect(),
            values: vec![1.0; n],
        }
    }

    pub fn diagonal(diag: &[f64]) -> Self {
        Self::from_triplets(
            diag.len(),
            diag.len(),
            diag.iter().enumerate().map(|(i, &v)| (i, i, v)),
        )
    }

    /// Builds from coordinate triplets. Duplicate coordinates are summed and
    /// resulting zeros dropped.
    ///
    /// Panics if a coordinate falls outside the shape.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, f64)>,
    ) -> Self {
        let mut entries: Vec<(usize, usize, f64)> = triplets.into_iter().collect();
        for &(r, c, _) in &entries {
            assert!(r < rows && c < cols, "({r},{c}) outside {rows}x{cols}");
        }
        entries.sort_by_key(|e| (e.0, e.1));
        let mut offsets = vec![0usize; rows + 1];
        let mut indices = Vec::with_capacity(entries.len());
        let mut values: Vec<f64> = Vec::with_capacity(entries.len());
        let mut rowcol: Option<(usize, usize)> = None;
        let mut row_of = Vec::with_capacity(entries.len());
        for (r, c, v) in entries {
            if rowcol == Some((r, c)) {
                *values.last_mut().unwrap() += v;
            } else {
                indices.push(c);
                values.push(v);
                row_of.push(r);
                rowcol = Some((r, c));
            }
        }
        let mut kept_idx = Vec::with_capacity(indices.len());
        let mut kept_val = Vec::with_capacity(values.len());
        for ((c, v), r) in indices.into_iter().zip(values).zip(row_of) {
            if v != 0.0 {
                kept_idx.push(c);
                kept_val.push(v);
                offsets[r + 1] += 1;
            }
        }
        for r in 0..rows {
            offsets[r + 1] += offsets[r];
        }
        SparseMatrix {
            rows,
            cols,
            offsets,
            indices: kept_idx,
            values: kept_val,
        }
    }

    pub fn from_dense(dense: &[Vec<f64>]) -> Self {
        let rows = dense.len();
        let cols = dense.first().map_or(0, Vec::len);
        Self::from_triplets(
            rows,
            cols,
            dense.iter().enumerate().flat_map(|(r, row)| {
                assert_eq!(row.len(), cols, "ragged dense matrix");
                row.iter().enumerate().map(move |(c, &v)| (r, c, v))
            }),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn nnz(&self) -> usize {
        self.indices.len()
    }

    /// Column indices and values of row `r`.
    pub fn row(&self, r: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let span = self.offsets[r]..self.offsets[r + 1];
        self.indices[span.clone()]
            .iter()
            .copied()
            .zip(self.values[span].iter().copied())
    }

    /// Column indices of row `r`, ascending.
    pub fn row_indices(&self, r: usize) -> &[usize] {
        &self.indices[self.offsets[r]..self.offsets[r + 1]]
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        let cols = self.row_indices(r);
        match cols.binary_search(&c) {
            Ok(k) => self.values[self.offsets[r] + k],
            Err(_) => 0.0,
        }
    }

    /// All stored entries in row-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.rows).flat_map(move |r| self.row(r).map(move |(c, v)| (r, c, v)))
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut counts = vec![0usize; self.cols + 1];
        for &c in &self.indices {
            counts[c + 1] += 1;
        }
        for c in 0..self.cols {
            counts[c + 1] += counts[c];
        }
        let offsets = counts.clone();
        let mut next = counts;
        let mut indices = vec![0; self.nnz()];
        let mut values = vec![0.0; self.nnz()];
        for r in 0..self.rows {
            for (c, v) in self.row(r) {
                let k = next[c];
                indices[k] = r;
                values[k] = v;
                next[c] += 1;
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            offsets,
            indices,
            values,
        }
    }

    /// Sparse product `self * rhs` (row-by-row Gustavson accumulation).
    pub fn matmul(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != rhs.rows {
            return Err(shape_err(
                format!("{}x_ * {}x_", self.rows, self.cols),
                format!("_x{} * {}x_", self.cols, rhs.rows),
            ));
        }
        let mut acc = vec![0.0f64; rhs.cols];
        let mut touched = vec![false; rhs.cols];
        let mut cols_in_row = Vec::new();
        let mut offsets = Vec::with_capacity(self.rows + 1);
        let mut indices = Vec::new();
        let mut values = Vec::new();
        offsets.push(0);
        for r in 0..self.rows {
            for (k, a) in self.row(r) {
                for (c, b) in rhs.row(k) {
                    if !touched[c] {
                        touched[c] = true;
                        cols_in_row.push(c);
                    }
                    acc[c] += a * b;
                }
            }
            cols_in_row.sort_unstable();
            for &c in &cols_in_row {
                if acc[c] != 0.0 {
                    indices.push(c);
                    values.push(acc[c]);
                }
                acc[c] = 0.0;
                touched[c] = false;
            }
            cols_in_row.clear();
            offsets.push(indices.len());
        }
        Ok(SparseMatrix {
            rows: self.rows,
            cols: rhs.cols,
            offsets,
            indices,
            values,
        })
    }

    /// Dense product `self * x`.
    pub fn mul_vec(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.cols {
            return Err(shape_err(
                format!("vector of length {}", self.cols),
                format!("vector of length {}", x.len()),
            ));
        }
        Ok((0..self.rows)
            .map(|r| self.row(r).map(|(c, v)| v * x[c]).sum())
            .collect())
    }

    /// Dense product `x^T * self`, returned as a vector.
    pub fn vec_mul(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.rows {
            return Err(shape_err(
                format!("vector of length {}", self.rows),
                format!("vector of length {}", x.len()),
            ));
        }
        let mut out = vec![0.0; self.cols];
        for (r, &xr) in x.iter().enumerate() {
            if xr != 0.0 {
                for (c, v) in self.row(r) {
                    out[c] += xr * v;
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: f64) -> SparseMatrix {
        let mut m = self.clone();
        m.values.iter_mut().for_each(|v| *v *= s);
        if s == 0.0 {
            return SparseMatrix::zeros(self.rows, self.cols);
        }
        m
    }

    pub fn diag(&self) -> Vec<f64> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).collect()
    }

    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.rows).map(|r| self.row(r).map(|(_, v)| v).sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.cols];
        for (_, c, v) in self.triplets() {
            out[c] += v;
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let mut out = vec![vec![0.0; self.cols]; self.rows];
        for (r, c, v) in self.triplets() {
            out[r][c] = v;
        }
        out
    }

    /// 0/1 matrix marking entries with `|x| >= ZERO_TOL`.
    pub fn pattern(&self) -> SparseMatrix {
        SparseMatrix::from_triplets(
            self.rows,
            self.cols,
            self.triplets()
                .filter(|&(_, _, v)| v.abs() >= ZERO_TOL)
                .map(|(r, c, _)| (r, c, 1.0)),
        )
    }

    /// Same shape and same zero/nonzero pattern (threshold `ZERO_TOL`).
    pub fn pattern_eq(&self, other: &SparseMatrix) -> bool {
        self.shape() == other.shape() && self.pattern() == other.pattern()
    }

    /// Same shape and every entry within `tol`.
    pub fn approx_eq(&self, other: &SparseMatrix, tol: f64) -> bool {
        self.max_abs_diff(other).is_some_and(|d| d <= tol)
    }

    /// Largest entrywise difference, or `None` when shapes differ.
    pub fn max_abs_diff(&self, other: &SparseMatrix) -> Option<f64> {
        if self.shape() != other.shape() {
            return None;
        }
        let mut worst = 0.0f64;
        for r in 0..self.rows {
            let (a, b) = (self.row_indices(r), other.row_indices(r));
            let mut cols: Vec<usize> = a.iter().chain(b).copied().collect();
            cols.sort_unstable();
            cols.dedup();
            for c in cols {
                worst = worst.max((self.get(r, c) - other.get(r, c)).abs());
            }
        }
        Some(worst)
    }

    /// Keeps only the given columns (ascending, zero-based), renumbered.
    pub fn select_columns(&self, keep: &[usize]) -> SparseMatrix {
        let mut map = vec![usize::MAX; self.cols];
        for (k, &c) in keep.iter().enumerate() {
            map[c] = k;
        }
        SparseMatrix::from_triplets(
            self.rows,
            keep.len(),
            self.triplets()
                .filter(|&(_, c, _)| map[c] != usize::MAX)
                .map(|(r, c, v)| (r, map[c], v)),
        )
    }

    pub(crate) fn check_square(&self) -> Result<usize> {
        if self.rows != self.cols {
            return Err(shape_err(
                "square matrix".to_string(),
                format!("{}x{}", self.rows, self.cols),
            ));
        }
        Ok(self.rows)
    }
}

pub(crate) fn shape_err(expected: String, found: String) -> MagError {
    MagError::ShapeMismatch { expected, found }
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseMatrix {}x{} nnz={}", self.rows, self.cols, self.nnz())?;
        if self.rows <= 32 && self.cols <= 32 {
            for row in self.to_dense() {
                let cells: Vec<String> = row.iter().map(|v| format!("{v:>5}")).collect();
                writeln!(f, "  [{}]", cells.join(" "))?;
            }
        }
        Ok(())
    }
}

/// Rank by Gaussian elimination with partial pivoting on the dense form.
/// Pivots below `ZERO_TOL * max(1, max|a|)` count as zero.
pub fn dense_rank(m: &SparseMatrix) -> Result<usize> {
    if m.rows.min(m.cols) > DENSE_CAP || m.rows.max(m.cols) > 8 * DENSE_CAP {
        return Err(MagError::TooLargeForDense {
            n: m.rows.max(m.cols),
            cap: DENSE_CAP,
        });
    }
    let mut a = m.to_dense();
    let scale = a
        .iter()
        .flatten()
        .fold(1.0f64, |acc, v| acc.max(v.abs()));
    let tol = ZERO_TOL * scale;
    let (rows, cols) = m.shape();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let pivot = (rank..rows)
            .max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs()))
            .unwrap();
        if a[pivot][c].abs() < tol {
            continue;
        }
        a.swap(rank, pivot);
        let p = a[rank][c];
        for r in rank + 1..rows {
            let f = a[r][c] / p;
            if f != 0.0 {
                for k in c..cols {
                    a[r][k] -= f * a[rank][k];
                }
            }
        }
        rank += 1;
    }
    Ok(rank)
}
