//! Degree, breadth-first and depth-first search over composite and
//! sub-determined vertices, plus matrix-based reachability.
//!
//! Vertex numbers in results are 1-based numerical representations. Vectors
//! are stored zero-based, so entry `k` describes vertex `k + 1`.

mod bfs;
mod degree;
mod dfs;
mod reach;

pub use bfs::{bfs, bfs_from_index, bfs_sub, BfsResult};
pub use degree::{
    degree, degree_algebraic, sub_det_degree, sub_det_degree_algebraic, DegreeResult,
};
pub use dfs::{dfs, dfs_sub, DfsResult};
pub use reach::{neumann_inverse, reachability, rho_bound, Method, ReachabilityMatrix};
