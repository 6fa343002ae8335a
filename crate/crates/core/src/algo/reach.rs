use crate::error::{MagError, Result};
use crate::matrix::MatrixWithTuple;
use crate::sparse::{SparseMatrix, DENSE_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Truncated Neumann series `sum (rho J)^i`.
    Series,
    /// Dense `(I - rho J)^-1`; limited to the dense cap.
    Inverse,
    /// Breadth-first closure from every vertex.
    Closure,
}

/// 0/1 reachability: entry `(u, v)` is 1 when `v` can be reached from `u`,
/// including `u` itself.
#[derive(Debug, Clone, PartialEq)]
pub struct ReachabilityMatrix {
    pub pattern: SparseMatrix,
    pub rho: f64,
}

/// `1 / (2 max(1, max row sum of J))`, strictly below `1 / spectral radius`.
pub fn rho_bound(j: &SparseMatrix) -> f64 {
    let max_row = j.row_sums().into_iter().fold(1.0f64, f64::max);
    1.0 / (2.0 * max_row)
}

pub fn reachability(jm: &MatrixWithTuple, method: Method) -> Result<ReachabilityMatrix> {
    let j = &jm.matrix;
    let n = j.check_square()?;
    let rho = rho_bound(j);
    let pattern = match method {
        Method::Series => series_pattern(j, rho)?,
        Method::Inverse => neumann_inverse(j, Some(rho))?.pattern_exact(),
        Method::Closure => closure_pattern(j, n),
    };
    Ok(ReachabilityMatrix { pattern, rho })
}

/// Dense `B = (I - rho J)^-1`, with `rho` defaulting to [`rho_bound`].
///
/// `I - rho J` is strictly diagonally dominant with non-positive
/// off-diagonal entries, so elimination without pivoting never cancels and
/// an entry of `B` is nonzero exactly when the target is reachable.
pub fn neumann_inverse(j: &SparseMatrix, rho: Option<f64>) -> Result<SparseMatrix> {
    let n = j.check_square()?;
    if n > DENSE_CAP {
        return Err(MagError::TooLargeForDense { n, cap: DENSE_CAP });
    }
    let rho = rho.unwrap_or_else(|| rho_bound(j));
    let mut a = vec![vec![0.0; n]; n];
    for (r, c, v) in j.triplets() {
        a[r][c] = -rho * v;
    }
    let mut inv = vec![vec![0.0; n]; n];
    for i in 0..n {
        a[i][i] += 1.0;
        inv[i][i] = 1.0;
    }
    for k in 0..n {
        let p = a[k][k];
        for c in 0..n {
            a[k][c] /= p;
            inv[k][c] /= p;
        }
        for r in 0..n {
            let f = a[r][k];
            if r == k || f == 0.0 {
                continue;
            }
            for c in 0..n {
                a[r][c] -= f * a[k][c];
                inv[r][c] -= f * inv[k][c];
            }
        }
    }
    Ok(SparseMatrix::from_dense(&inv))
}

/// Accumulates the support of `I + sum_i (rho J)^i`. Each term is rescaled
/// by its largest entry so long paths do not underflow; the loop stops once
/// a term adds no new support, which bounds it by `n` iterations.
fn series_pattern(j: &SparseMatrix, rho: f64) -> Result<SparseMatrix> {
    let n = j.rows();
    let jr = j.scale(rho);
    let mut support = SparseMatrix::identity(n);
    let mut term = SparseMatrix::identity(n);
    for _ in 0..n {
        term = term.matmul(&jr)?;
        if term.nnz() == 0 {
            break;
        }
        let peak = term.triplets().fold(0.0f64, |m, (_, _, v)| m.max(v.abs()));
        term = term.scale(1.0 / peak);
        let grown = SparseMatrix::from_triplets(
            n,
            n,
            support.triplets().chain(term.triplets().map(|(r, c, _)| (r, c, 1.0))),
        )
        .pattern_exact();
        if grown.nnz() == support.nnz() {
            break;
        }
        support = grown;
    }
    Ok(support)
}

fn closure_pattern(j: &SparseMatrix, n: usize) -> SparseMatrix {
    let mut triplets = Vec::new();
    let mut seen = vec![usize::MAX; n];
    let mut stack = Vec::new();
    for s in 0..n {
        seen[s] = s;
        stack.push(s);
        while let Some(u) = stack.pop() {
            triplets.push((s, u, 1.0));
            for &v in j.row_indices(u) {
                if seen[v] != s {
                    seen[v] = s;
                    stack.push(v);
                }
            }
        }
    }
    SparseMatrix::from_triplets(n, n, triplets)
}

impl SparseMatrix {
    /// 0/1 matrix marking every stored (hence nonzero) entry.
    fn pattern_exact(&self) -> SparseMatrix {
        SparseMatrix::from_triplets(self.rows(), self.cols(), self.triplets().map(|(r, c, _)| (r, c, 1.0)))
    }
}
