use crate::error::Result;
use crate::index::{CompanionTuple, SubDetermination};
use crate::matrix::{sub_determination_matrix, sub_determined_adjacency, MatrixWithTuple};
use crate::sparse::SparseMatrix;

use super::bfs::bfs_sub_from_index;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DfsResult {
    /// Discovery timestamps, starting at 0.
    pub disc: Vec<usize>,
    /// Finish timestamps.
    pub fin: Vec<usize>,
    /// Parent in the DFS forest; `None` for tree roots.
    pub pred: Vec<Option<usize>>,
    pub tau: CompanionTuple,
}

/// Depth-first search over all composite vertices. Roots and successors are
/// taken in ascending order.
pub fn dfs(jm: &MatrixWithTuple) -> Result<DfsResult> {
    let n = jm.matrix.check_square()?;
    let mut state = DfsState::new(n);
    for root in 0..n {
        if !state.visited[root] {
            state.visit(&jm.matrix, root, |_| true);
        }
    }
    Ok(state.finish(jm.tau.clone()))
}

/// Depth-first search over the sub-determined adjacency `M J M^T`. Each new
/// tree root runs a sub-determined BFS first, and the tree only grows into
/// vertices that BFS reached.
pub fn dfs_sub(jm: &MatrixWithTuple, zeta: SubDetermination) -> Result<DfsResult> {
    let tau_z = jm.tau.sub_determined(zeta)?;
    let mz = sub_determination_matrix(&jm.tau, zeta)?;
    let jz = sub_determined_adjacency(&jm.matrix, &mz)?;
    let n = jz.rows();
    let mut state = DfsState::new(n);
    for root in 0..n {
        if !state.visited[root] {
            let reach = bfs_sub_from_index(jm, &tau_z, root + 1)?;
            state.visit(&jz, root, |v| reach.distance[v].is_some());
        }
    }
    Ok(state.finish(tau_z))
}

struct DfsState {
    visited: Vec<bool>,
    disc: Vec<usize>,
    fin: Vec<usize>,
    pred: Vec<Option<usize>>,
    time: usize,
}

impl DfsState {
    fn new(n: usize) -> Self {
        DfsState {
            visited: vec![false; n],
            disc: vec![0; n],
            fin: vec![0; n],
            pred: vec![None; n],
            time: 0,
        }
    }

    /// Iterative form of the recursive visit: each stack frame holds a
    /// vertex and the position of the next successor to try.
    fn visit(&mut self, j: &SparseMatrix, root: usize, allowed: impl Fn(usize) -> bool) {
        let mut stack = vec![(root, 0usize)];
        self.enter(root);
        while let Some(frame) = stack.last_mut() {
            let (u, pos) = *frame;
            let succ = j.row_indices(u);
            match succ[pos..].iter().position(|&v| !self.visited[v] && allowed(v)) {
                Some(k) => {
                    let v = succ[pos + k];
                    frame.1 = pos + k + 1;
                    self.pred[v] = Some(u + 1);
                    self.enter(v);
                    stack.push((v, 0));
                }
                None => {
                    self.fin[u] = self.time;
                    self.time += 1;
                    stack.pop();
                }
            }
        }
    }

    fn enter(&mut self, u: usize) {
        self.visited[u] = true;
        self.disc[u] = self.time;
        self.time += 1;
    }

    fn finish(self, tau: CompanionTuple) -> DfsResult {
        DfsResult {
            disc: self.disc,
            fin: self.fin,
            pred: self.pred,
            tau,
        }
    }
}
