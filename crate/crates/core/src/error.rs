use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    Parse(String),
    #[error("modulus {0} is not a prime")]
    NonPrime(u64),
    #[error("form {index} has length {len}, expected {ell}")]
    RaggedRows { index: usize, len: usize, ell: usize },
    #[error("no forms given for a configuration of dimension {0}")]
    EmptyForms(usize),
    #[error("element {0} is out of range for a ground set of size {1}")]
    IndexOutOfRange(usize, usize),
    #[error("element {0} is an isthmus; deleting it drops the rank")]
    Isthmus(usize),
    #[error("element {0} is a loop and cannot be contracted")]
    Loop(usize),
    #[error("configuration has loops")]
    HasLoops,
    #[error("configuration has rank zero")]
    RankZero,
    #[error("{0} is not a flat")]
    NotAFlat(String),
    #[error("{0} is not independent")]
    NotIndependent(String),
    #[error("{0} is not a basis")]
    NotABasis(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("multiplicity must be at least 1")]
    ZeroMultiplicity,
    #[error("{what}: size {size} exceeds the cap {cap}")]
    TooLarge { what: &'static str, size: usize, cap: usize },
    #[error("polynomial expected but the division left a remainder")]
    NotPolynomial,
    #[error("inhomogeneous polynomial: expected degree {expected}, found {found}")]
    Inhomogeneous { expected: usize, found: usize },
    #[error("identity check failed: {0}")]
    Mismatch(String),
    #[error("internal consistency violated: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
