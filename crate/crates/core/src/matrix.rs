//! Matrix representations of a MAG: adjacency, incidence, elimination,
//! Laplacians and sub-determination matrices.
//!
//! Matrices are indexed by the zero-based form of the numerical
//! representation, so composite vertex `D(v)` lives at row/column `D(v) - 1`.

use crate::error::{MagError, Result};
use crate::index::{CompanionTuple, SubDetermination};
use crate::model::{Aspect, AspectList, Mag, MagEdge};
use crate::sparse::{dense_rank, shape_err, SparseMatrix, DENSE_CAP};

/// A matrix paired with the companion tuple that gives its rows/columns
/// meaning.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixWithTuple {
    pub matrix: SparseMatrix,
    pub tau: CompanionTuple,
}

/// Incidence matrix together with the `(origin, destination)` numerical
/// representations of the edge behind each row.
#[derive(Debug, Clone, PartialEq)]
pub struct IncidenceMatrix {
    pub matrix: SparseMatrix,
    pub tau: CompanionTuple,
    pub edges: Vec<(usize, usize)>,
}

/// How [`main_components`] applies the elimination matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Elimination {
    /// `R^T X R`, for vertex-by-vertex matrices.
    TwoSided,
    /// `X R`, for edge-by-vertex matrices.
    Right,
}

pub fn adjacency_matrix(mag: &Mag) -> MatrixWithTuple {
    let n = mag.vertex_count();
    let matrix = SparseMatrix::from_triplets(
        n,
        n,
        mag.edge_indices().into_iter().map(|(o, d)| (o - 1, d - 1, 1.0)),
    );
    MatrixWithTuple {
        matrix,
        tau: mag.companion_tuple(),
    }
}

/// Rebuilds a MAG from its adjacency matrix and companion tuple. Aspect `i`
/// is named `i` and holds the labels `1..=tau_i`; edges follow row-major
/// order.
pub fn mag_from_adjacency(jm: &MatrixWithTuple) -> Result<Mag> {
    let tau = &jm.tau;
    if tau.order() == 0 || !tau.is_full() {
        return Err(shape_err(
            "full companion tuple".into(),
            tau.to_string(),
        ));
    }
    let n = tau.vertex_count();
    if jm.matrix.shape() != (n, n) {
        return Err(shape_err(
            format!("{n}x{n}"),
            format!("{}x{}", jm.matrix.rows(), jm.matrix.cols()),
        ));
    }
    let aspects = AspectList::new(
        tau.sizes()
            .iter()
            .enumerate()
            .map(|(i, &t)| Aspect::new((i + 1).to_string(), (1..=t).map(|e| e.to_string())))
            .collect::<Result<Vec<_>>>()?,
    )?;
    let mut edges = Vec::with_capacity(jm.matrix.nnz());
    for (r, c, v) in jm.matrix.triplets() {
        if r == c {
            return Err(MagError::NonzeroDiagonal { index: r + 1 });
        }
        if v != 1.0 {
            return Err(MagError::NonBinaryEntry {
                row: r + 1,
                col: c + 1,
                value: v,
            });
        }
        edges.push(MagEdge::new(tau.vertex_at(r + 1)?, tau.vertex_at(c + 1)?));
    }
    Mag::from_numeric("canonical", aspects, edges)
}

/// `+1` at the origin and `-1` at the destination of each edge; row `k` is
/// the `k`-th edge of the MAG.
pub fn incidence_matrix(mag: &Mag) -> IncidenceMatrix {
    let edges = mag.edge_indices();
    let matrix = SparseMatrix::from_triplets(
        edges.len(),
        mag.vertex_count(),
        edges
            .iter()
            .enumerate()
            .flat_map(|(k, &(o, d))| [(k, o - 1, 1.0), (k, d - 1, -1.0)]),
    );
    IncidenceMatrix {
        matrix,
        tau: mag.companion_tuple(),
        edges,
    }
}

/// Numerical representations (1-based, ascending) of the composite vertices
/// touched by no edge.
pub fn trivial_components(mag: &Mag) -> Vec<usize> {
    let mut touched = vec![false; mag.vertex_count()];
    for (o, d) in mag.edge_indices() {
        touched[o - 1] = true;
        touched[d - 1] = true;
    }
    touched
        .iter()
        .enumerate()
        .filter(|(_, &t)| !t)
        .map(|(i, _)| i + 1)
        .collect()
}

/// The `n x (n - r)` identity with the trivial-component columns removed.
pub fn elimination_matrix(mag: &Mag) -> SparseMatrix {
    let n = mag.vertex_count();
    let trivial = trivial_components(mag);
    let keep: Vec<usize> = (0..n).filter(|i| trivial.binary_search(&(i + 1)).is_err()).collect();
    SparseMatrix::identity(n).select_columns(&keep)
}

/// `R R^T`: diagonal with 1 at every non-trivial component.
pub fn main_identity(mag: &Mag) -> SparseMatrix {
    let r = elimination_matrix(mag);
    r.matmul(&r.transpose()).expect("R R^T is always conformable")
}

pub fn main_components(x: &SparseMatrix, r: &SparseMatrix, mode: Elimination) -> Result<SparseMatrix> {
    match mode {
        Elimination::TwoSided => r.transpose().matmul(&x.matmul(r)?),
        Elimination::Right => x.matmul(r),
    }
}

/// `C^T C`.
pub fn combinatorial_laplacian(c: &SparseMatrix) -> SparseMatrix {
    c.transpose().matmul(c).expect("C^T C is always conformable")
}

/// `C^T W C` with `W = Diag(weights)`, weights in edge-id order.
pub fn weighted_laplacian(c: &SparseMatrix, weights: &[f64]) -> Result<SparseMatrix> {
    if weights.len() != c.rows() {
        return Err(MagError::WeightCountMismatch {
            expected: c.rows(),
            found: weights.len(),
        });
    }
    if let Some((edge, &weight)) = weights
        .iter()
        .enumerate()
        .find(|(_, w)| !(w.is_finite() && **w > 0.0))
    {
        return Err(MagError::NonPositiveWeight { edge, weight });
    }
    let wc = SparseMatrix::diagonal(weights).matmul(c)?;
    c.transpose().matmul(&wc)
}

/// `N C^T C N` with `N_ii = 1/sqrt(d_i)` for vertices of total degree
/// `d_i > 0` and `0` otherwise.
pub fn normalized_laplacian(c: &SparseMatrix) -> SparseMatrix {
    let l = combinatorial_laplacian(c);
    let n: Vec<f64> = l
        .diag()
        .iter()
        .map(|&d| if d > 0.0 { 1.0 / d.sqrt() } else { 0.0 })
        .collect();
    SparseMatrix::from_triplets(
        l.rows(),
        l.cols(),
        l.triplets().map(|(r, c, v)| (r, c, n[r] * v * n[c])),
    )
}

/// `M_zeta`: one 1 per column, at the row of the column's sub-determined
/// vertex.
pub fn sub_determination_matrix(tau: &CompanionTuple, zeta: SubDetermination) -> Result<SparseMatrix> {
    let sub = tau.sub_determined(zeta)?;
    let n = tau.vertex_count();
    let mut triplets = Vec::with_capacity(n);
    for j in 1..=n {
        let v = tau.vertex_at(j)?;
        triplets.push((sub.index_of(v.indices())? - 1, j - 1, 1.0));
    }
    Ok(SparseMatrix::from_triplets(sub.vertex_count(), n, triplets))
}

/// `M J M^T`: entry `(a, b)` counts the edges whose endpoints collapse to
/// `a` and `b`; the diagonal counts the resulting self-loops.
pub fn sub_determined_adjacency(j: &SparseMatrix, mz: &SparseMatrix) -> Result<SparseMatrix> {
    mz.matmul(j)?.matmul(&mz.transpose())
}

/// Dimension of the nullspace of a Laplacian. Uses dense elimination up to
/// the dense cap and connected components of the symmetrized pattern
/// beyond it.
pub fn laplacian_nullity(l: &SparseMatrix) -> Result<usize> {
    let n = l.check_square()?;
    if n <= DENSE_CAP {
        return Ok(n - dense_rank(l)?);
    }
    Ok(component_count(l))
}

fn component_count(l: &SparseMatrix) -> usize {
    let n = l.rows();
    let lt = l.transpose();
    let mut seen = vec![false; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for &v in l.row_indices(u).iter().chain(lt.row_indices(u)) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    count
}
