use crate::error::Result;
use crate::index::{CompanionTuple, SubDetermination};
use crate::matrix::{sub_determination_matrix, sub_determined_adjacency, MatrixWithTuple};
use crate::model::Mag;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeResult {
    pub indegree: Vec<usize>,
    pub outdegree: Vec<usize>,
    /// Self-loop counts; only set when loops are counted separately.
    pub selfdegree: Option<Vec<usize>>,
    pub tau: CompanionTuple,
}

/// Composite-vertex degrees by walking the edge list.
pub fn degree(mag: &Mag) -> DegreeResult {
    let n = mag.vertex_count();
    let mut indegree = vec![0; n];
    let mut outdegree = vec![0; n];
    for (o, d) in mag.edge_indices() {
        outdegree[o - 1] += 1;
        indegree[d - 1] += 1;
    }
    DegreeResult {
        indegree,
        outdegree,
        selfdegree: None,
        tau: mag.companion_tuple(),
    }
}

/// `J^T 1` and `J 1`.
pub fn degree_algebraic(jm: &MatrixWithTuple) -> Result<DegreeResult> {
    let ones = vec![1.0; jm.matrix.rows()];
    Ok(DegreeResult {
        indegree: to_counts(&jm.matrix.vec_mul(&ones)?),
        outdegree: to_counts(&jm.matrix.mul_vec(&ones)?),
        selfdegree: None,
        tau: jm.tau.clone(),
    })
}

/// Degrees of the sub-determined vertices. Edges that collapse into a
/// self-loop count towards both in- and outdegree unless `separate_loops`
/// is set, in which case they go to `selfdegree` only.
pub fn sub_det_degree(mag: &Mag, zeta: SubDetermination, separate_loops: bool) -> Result<DegreeResult> {
    let tau = mag.companion_tuple();
    let sub = tau.sub_determined(zeta)?;
    let n = sub.vertex_count();
    let mut indegree = vec![0; n];
    let mut outdegree = vec![0; n];
    let mut selfdegree = vec![0; n];
    for e in mag.edges() {
        let o = sub.index_of(e.origin.indices())? - 1;
        let d = sub.index_of(e.destination.indices())? - 1;
        if separate_loops && o == d {
            selfdegree[o] += 1;
        } else {
            outdegree[o] += 1;
            indegree[d] += 1;
        }
    }
    Ok(DegreeResult {
        indegree,
        outdegree,
        selfdegree: separate_loops.then_some(selfdegree),
        tau: sub,
    })
}

/// `M J^T 1` and `M J 1`; with `separate_loops`, the diagonal of `M J M^T`
/// is split off into `selfdegree`.
pub fn sub_det_degree_algebraic(
    jm: &MatrixWithTuple,
    zeta: SubDetermination,
    separate_loops: bool,
) -> Result<DegreeResult> {
    let mz = sub_determination_matrix(&jm.tau, zeta)?;
    let full = degree_algebraic(jm)?;
    let as_f64 = |v: &[usize]| v.iter().map(|&x| x as f64).collect::<Vec<_>>();
    let mut indegree = to_counts(&mz.mul_vec(&as_f64(&full.indegree))?);
    let mut outdegree = to_counts(&mz.mul_vec(&as_f64(&full.outdegree))?);
    let selfdegree = if separate_loops {
        let loops = to_counts(&sub_determined_adjacency(&jm.matrix, &mz)?.diag());
        for (k, &s) in loops.iter().enumerate() {
            indegree[k] -= s;
            outdegree[k] -= s;
        }
        Some(loops)
    } else {
        None
    };
    Ok(DegreeResult {
        indegree,
        outdegree,
        selfdegree,
        tau: jm.tau.sub_determined(zeta)?,
    })
}

fn to_counts(v: &[f64]) -> Vec<usize> {
    v.iter().map(|&x| x.round() as usize).collect()
}
