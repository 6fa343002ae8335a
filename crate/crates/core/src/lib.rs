//! MultiAspect Graphs (MAGs): data model, sparse matrix representations and
//! traversal algorithms.
//!
//! A MAG `H = (A, E)` is a list of aspects `A` and a set of directed edges
//! between composite vertices, where a composite vertex picks one element
//! from every aspect. Composite vertices are numbered `1..=n` by a
//! mixed-radix encoding over the companion tuple of aspect sizes, which is
//! what ties the graph to its matrices.
//!
//! ```
//! use mag_core::{adjacency_matrix, bfs, builtin_example};
//!
//! let t = builtin_example("T").unwrap();
//! let jm = adjacency_matrix(&t);
//! let source = t.aspects().parse_vertex("2,Bus,t1").unwrap();
//! let result = bfs(&jm, &source).unwrap();
//! assert_eq!(result.vertices, vec![2, 5, 8, 9, 10, 11, 14, 15, 16, 17]);
//! ```

pub mod algo;
pub mod error;
pub mod index;
pub mod io;
pub mod matrix;
pub mod model;
pub mod sparse;
pub mod subdet;

pub use algo::{
    bfs, bfs_from_index, bfs_sub, degree, degree_algebraic, dfs, dfs_sub, neumann_inverse,
    reachability, rho_bound, sub_det_degree, sub_det_degree_algebraic, BfsResult, DegreeResult,
    DfsResult, Method, ReachabilityMatrix,
};
pub use error::{MagError, Result};
pub use index::{CompanionTuple, SubDetermination};
pub use io::{builtin_example, parse_mag, read_matrix_market, write_mag, write_matrix_market};
pub use matrix::{
    adjacency_matrix, combinatorial_laplacian, elimination_matrix, incidence_matrix,
    laplacian_nullity, mag_from_adjacency, main_components, main_identity, normalized_laplacian,
    sub_determination_matrix, sub_determined_adjacency, trivial_components, weighted_laplacian,
    Elimination, IncidenceMatrix, MatrixWithTuple,
};
pub use model::{Aspect, AspectList, CompositeVertex, LabeledEdge, Mag, MagEdge};
pub use sparse::SparseMatrix;
pub use subdet::{sub_determine_edge, sub_determine_mag, sub_determine_vertex};
