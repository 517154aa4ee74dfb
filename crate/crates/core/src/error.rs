use thiserror::Error;

/// Errors raised by the library layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("component index {index} is outside the universe 1..={n}")]
    IndexOutOfUniverse { index: usize, n: usize },

    #[error("universe size {0} is not supported (must be 1..=64)")]
    InvalidUniverse(usize),

    #[error("family contains the empty set")]
    EmptyMember,

    #[error("family is empty")]
    EmptyFamily,

    #[error("duplicate member {0}")]
    DuplicateMember(String),

    #[error("{sub} is contained in {sup}; the family is not an antichain")]
    NotAntichain { sub: String, sup: String },

    #[error("family is not uniform: expected cardinality {expected}, found {found}")]
    NonUniform { expected: usize, found: usize },

    #[error("rank {rank} out of range for {l}-subsets of a {n}-element universe")]
    RankOutOfRange { rank: String, l: usize, n: usize },

    #[error("the cascade representation needs a positive integer and level")]
    ZeroCascade,

    #[error("invalid cascade representation: {0}")]
    InvalidCascade(String),

    #[error("{what}: size {actual} exceeds the supported limit {limit}")]
    Capacity {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("not a permutation of 1..={n}: {perm}")]
    InvalidPermutation { perm: String, n: usize },

    #[error("invalid count vector: {0}")]
    InvalidCounts(String),

    #[error("invalid f-vector: {0}")]
    InvalidFVector(String),

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("candidate is not realizable: {0}")]
    NotRealizable(crate::realizability::Rejection),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// True for errors caused by an input exceeding an enumeration limit.
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }
}
