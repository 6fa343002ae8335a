use thiserror::Error;

/// Errors produced while building, transforming or analysing a MAG.
///
/// Edge positions (`edge`) are zero-based positions in the edge list handed
/// to the builder and are displayed one-based. The file parser additionally
/// wraps them with the line number.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MagError {
    #[error("a MAG needs at least one aspect")]
    NoAspects,
    #[error("aspect `{0}` has no elements")]
    EmptyAspect(String),
    #[error("duplicate aspect name `{0}`")]
    DuplicateAspect(String),
    #[error("duplicate element `{element}` in aspect `{aspect}`")]
    DuplicateElement { aspect: String, element: String },
    #[error("invalid label `{0}`")]
    InvalidLabel(String),
    #[error("edge #{} is a self-loop", .edge + 1)]
    SelfLoopEdge { edge: usize },
    #[error("edge #{}: unknown element `{element}` for aspect `{aspect}`", .edge + 1)]
    UnknownElement {
        edge: usize,
        aspect: String,
        element: String,
    },
    #[error("edge #{} duplicates edge #{}", .edge + 1, .first + 1)]
    DuplicateEdge { edge: usize, first: usize },
    #[error("edge #{} has {found} elements, expected {expected}", .edge + 1)]
    EdgeArityMismatch {
        edge: usize,
        expected: usize,
        found: usize,
    },
    #[error("edge #{} has non-positive weight {weight}", .edge + 1)]
    NonPositiveWeight { edge: usize, weight: f64 },
    #[error("invalid sub-determination {mask} for a MAG of order {order}")]
    InvalidZeta { mask: u64, order: usize },
    #[error("invalid sub-determination syntax `{0}`")]
    ZetaSyntax(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("numerical tuple {tuple:?} does not fit companion tuple {tau:?}")]
    TupleOutOfRange { tuple: Vec<usize>, tau: Vec<usize> },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: String, found: String },
    #[error("adjacency matrix has a nonzero diagonal entry at {index}")]
    NonzeroDiagonal { index: usize },
    #[error("adjacency matrix entry ({row},{col}) = {value} is not 0/1")]
    NonBinaryEntry { row: usize, col: usize, value: f64 },
    #[error("expected {expected} edge weights, got {found}")]
    WeightCountMismatch { expected: usize, found: usize },
    #[error("dense computation on {n} vertices exceeds the cap of {cap}")]
    TooLargeForDense { n: usize, cap: usize },
    #[error("unknown builtin example `{0}`")]
    UnknownExample(String),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<MagError>,
    },
    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for MagError {
    fn from(e: std::io::Error) -> Self {
        MagError::Io(e.to_string())
    }
}

pub type Result<T, E = MagError> = std::result::Result<T, E>;
