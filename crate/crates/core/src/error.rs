use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cycle syntax error at column {column}: {message}")]
    CycleSyntax { column: usize, message: String },

    #[error("point {point} appears more than once in the cycle product")]
    RepeatedPoint { point: usize },

    #[error("point {point} exceeds degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("image array is not a permutation of 0..{degree}")]
    NotABijection { degree: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("group order exceeds the cap of {cap} (reached at least {reached})")]
    CapExceeded { cap: usize, reached: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("element set is not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("subgroup is not a node of this lattice")]
    NotANode,

    #[error("chain enumeration exceeded the cap of {cap} chains")]
    ChainCapExceeded { cap: usize },

    #[error("spec syntax error at line {line}, column {column}: expected {expected}, found {found}")]
    SpecSyntax {
        line: usize,
        column: usize,
        expected: String,
        found: String,
    },

    #[error("unknown corpus group `{0}`")]
    UnknownCorpusName(String),

    #[error("invalid subgroup selector: {0}")]
    Selector(String),

    #[error("cache format version {found} is not supported (expected {expected})")]
    CacheVersion { found: u32, expected: u32 },

    #[error("cache entry belongs to a different group")]
    CacheHashMismatch,

    #[error("cache entry is corrupt: {0}")]
    CacheCorrupt(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
