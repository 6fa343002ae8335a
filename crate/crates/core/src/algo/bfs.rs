use std::collections::VecDeque;

use crate::error::{MagError, Result};
use crate::index::{CompanionTuple, SubDetermination};
use crate::matrix::MatrixWithTuple;
use crate::model::CompositeVertex;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsResult {
    /// Discovered vertices in discovery order, source first.
    pub vertices: Vec<usize>,
    /// Hop count per vertex; `None` when unreachable.
    pub distance: Vec<Option<usize>>,
    /// Predecessor per vertex; `None` for the source and unreached vertices.
    pub pred: Vec<Option<usize>>,
    pub tau: CompanionTuple,
}

impl BfsResult {
    fn new(n: usize, tau: CompanionTuple) -> Self {
        BfsResult {
            vertices: Vec::new(),
            distance: vec![None; n],
            pred: vec![None; n],
            tau,
        }
    }

    /// Whether 1-based vertex `v` was discovered.
    pub fn reached(&self, v: usize) -> bool {
        self.distance[v - 1].is_some()
    }
}

fn source_index(tau: &CompanionTuple, source: &CompositeVertex) -> Result<usize> {
    tau.index_of(source.indices())
        .map_err(|_| MagError::UnknownVertex(source.to_string()))
}

/// Breadth-first search from a composite vertex given in numerical form.
/// Successors are visited in ascending order.
pub fn bfs(jm: &MatrixWithTuple, source: &CompositeVertex) -> Result<BfsResult> {
    if source.order() != jm.tau.order() {
        return Err(MagError::UnknownVertex(source.to_string()));
    }
    bfs_from_index(jm, source_index(&jm.tau, source)?)
}

/// [`bfs`] from the 1-based numerical representation `s`.
pub fn bfs_from_index(jm: &MatrixWithTuple, s: usize) -> Result<BfsResult> {
    let j = &jm.matrix;
    let n = j.check_square()?;
    if s == 0 || s > n {
        return Err(MagError::IndexOutOfRange { index: s, max: n });
    }
    let mut out = BfsResult::new(n, jm.tau.clone());
    let mut queue = VecDeque::new();
    out.distance[s - 1] = Some(0);
    out.vertices.push(s);
    queue.push_back(s - 1);
    while let Some(u) = queue.pop_front() {
        let du = out.distance[u].map(|d| d + 1);
        for &v in j.row_indices(u) {
            if out.distance[v].is_none() {
                out.distance[v] = du;
                out.pred[v] = Some(u + 1);
                out.vertices.push(v + 1);
                queue.push_back(v);
            }
        }
    }
    Ok(out)
}

/// Sub-determined BFS. The search runs over the composite vertices, seeded
/// with every composite vertex that collapses to `source`, so only paths
/// present in the original MAG count. The first time a sub-determined
/// vertex is touched fixes its distance and predecessor.
///
/// `source` lists the element indices of the kept aspects only.
pub fn bfs_sub(jm: &MatrixWithTuple, zeta: SubDetermination, source: &CompositeVertex) -> Result<BfsResult> {
    let tau_z = jm.tau.sub_determined(zeta)?;
    if source.order() != tau_z.kept_order() {
        return Err(MagError::UnknownVertex(source.to_string()));
    }
    let s = source_index(&tau_z, source)?;
    bfs_sub_from_index(jm, &tau_z, s)
}

pub(crate) fn bfs_sub_from_index(jm: &MatrixWithTuple, tau_z: &CompanionTuple, s: usize) -> Result<BfsResult> {
    let j = &jm.matrix;
    let n = j.check_square()?;
    let sub_of: Vec<usize> = (1..=n)
        .map(|d| {
            let v = jm.tau.vertex_at(d)?;
            Ok(tau_z.index_of(v.indices())? - 1)
        })
        .collect::<Result<_>>()?;
    let mut out = BfsResult::new(tau_z.vertex_count(), tau_z.clone());
    let mut color = vec![false; n];
    let mut queue = VecDeque::new();
    for (u, &su) in sub_of.iter().enumerate() {
        if su == s - 1 {
            color[u] = true;
            queue.push_back(u);
        }
    }
    out.distance[s - 1] = Some(0);
    out.vertices.push(s);
    while let Some(u) = queue.pop_front() {
        let su = sub_of[u];
        for &v in j.row_indices(u) {
            if color[v] {
                continue;
            }
            color[v] = true;
            queue.push_back(v);
            let sv = sub_of[v];
            if out.distance[sv].is_none() {
                out.distance[sv] = out.distance[su].map(|d| d + 1);
                out.pred[sv] = Some(su + 1);
                out.vertices.push(sv + 1);
            }
        }
    }
    Ok(out)
}
