use thiserror::Error;

/// Errors surfaced by the fallible entry points of this crate.
///
/// Mixed-degree group operations (`compose`, vertex construction, ...) are
/// programmer errors and panic instead; see the respective methods.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("degree {r} out of range (supported: 1..={max})")]
    DegreeOutOfRange { r: u32, max: u32 },

    #[error("rank {rank} out of range for degree {degree} (valid: 1..={max})")]
    RankOutOfRange { rank: u64, degree: u8, max: u32 },

    #[error("image sequence {images:?} is not a permutation of 1..={degree}")]
    InvalidImages { images: Vec<u8>, degree: u8 },

    #[error("level {n} invalid: {reason}")]
    InvalidLevel { n: u32, reason: String },

    #[error("({n}, {r}) is outside the conjecture's domain (requires n >= 5 and r <= n)")]
    ConjectureDomain { n: u32, r: u8 },

    #[error("table parse error at line {line}: {msg}")]
    TableParse { line: usize, msg: String },

    #[error("invalid cycle data: {0}")]
    InvalidCycle(String),

    #[error("invalid run configuration: {0}")]
    InvalidConfig(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
