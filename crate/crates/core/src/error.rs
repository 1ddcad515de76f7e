use thiserror::Error;

pub type Result<T> = std::result::Result<T, NsrError>;

#[derive(Debug, Error)]
pub enum NsrError {
    #[error("n must be between 1 and {max}, got {got}")]
    InvalidN { got: usize, max: usize },

    #[error("operands belong to different Brandt semigroups (n = {left} vs n = {right})")]
    MismatchedN { left: usize, right: usize },

    #[error("element ({row},{col}) is not in B_{n}")]
    PairOutOfRange { row: usize, col: usize, n: usize },

    #[error("code {code} is out of range for B_{n} (max {max})")]
    CodeOutOfRange { code: usize, n: usize, max: usize },

    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("cannot realize a map with no canonical form")]
    NotCanonical,

    #[error("cannot parse element name {0:?}")]
    BadName(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("carrier of size {size} exceeds the enumeration limit of {limit}")]
    CarrierTooLarge { size: usize, limit: usize },

    #[error("premise of {theorem} failed: {claim}")]
    PremiseFailed { theorem: String, claim: String },

    #[error("unknown compatibility mode {0:?}")]
    UnknownMode(String),

    #[error("cache format {found} is not supported (expected {expected})")]
    CacheVersion { found: u64, expected: u64 },

    #[error("cache checksum mismatch: stored {stored}, computed {computed}")]
    ChecksumMismatch { stored: String, computed: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl NsrError {
    pub fn invariant(msg: impl Into<String>) -> Self {
        NsrError::Invariant(msg.into())
    }
}
