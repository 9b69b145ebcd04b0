use thiserror::Error;

/// Everything that can go wrong in the engine.
///
/// Internal inconsistencies (a failed eigenspace split, a non-integral
/// central character) are bugs and panic instead of surfacing here.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} bound exceeded: {actual} > {limit}")]
    BoundExceeded {
        what: &'static str,
        limit: u64,
        actual: String,
    },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("degree mismatch: expected {expected}, got {actual}")]
    DegreeMismatch { expected: usize, actual: usize },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("group is not transitive")]
    NotTransitive,

    #[error("group is primitive: no proper block system")]
    Primitive,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("matrix is singular modulo {0}")]
    SingularMatrix(u32),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{name}: expected order {expected}, got {actual}")]
    OrderMismatch {
        name: String,
        expected: String,
        actual: String,
    },

    #[error("fixture {name} failed validation: {msg}")]
    Fixture { name: String, msg: String },

    #[error("not a direct-sum decomposition: {0}")]
    Decomposition(String),

    #[error("generators do not permute the given parts")]
    NotPermuted,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn bound(what: &'static str, limit: u64, actual: impl ToString) -> Error {
    Error::BoundExceeded {
        what,
        limit,
        actual: actual.to_string(),
    }
}
