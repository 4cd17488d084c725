use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cap exceeded: {what} needs {needed}, cap is {cap}")]
    CapExceeded { what: String, needed: u64, cap: u64 },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("lattices live over different groups")]
    GroupMismatch,
    #[error("rank too small: {0}")]
    RankTooSmall(String),
    #[error("map {index} is not equivariant")]
    NotEquivariant { index: usize },
    #[error("sequence is not exact at position {position}: {reason}")]
    NotExact { position: usize, reason: String },
    #[error("sequence has not been verified")]
    SequenceNotVerified,
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("witness invalid: {0}")]
    WitnessInvalid(String),
    #[error("generator images do not define a homomorphism")]
    NotHomomorphism,
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn cap(what: impl Into<String>, needed: u64, cap: u64) -> Self {
        Error::CapExceeded { what: what.into(), needed, cap }
    }

    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
