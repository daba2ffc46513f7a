use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for Dynkin type {letter}")]
    InvalidRank { letter: char, rank: usize },

    #[error("cannot parse group `{0}`: expected a Dynkin letter A-G followed by a rank, e.g. A2 or E6")]
    ParseGroup(String),

    #[error("cannot parse weight `{text}`: {reason}")]
    ParseWeight { text: String, reason: String },

    #[error("weight {0:?} is not dominant")]
    NonDominant(Vec<i64>),

    #[error("L-coordinate input is only available for type A groups, not {0}")]
    LFormOutsideTypeA(String),

    #[error("rank mismatch: expected a vector of length {expected}, got {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("unsupported coordinate conversion {from} -> {to} for group {group}")]
    UnsupportedConversion {
        from: &'static str,
        to: &'static str,
        group: String,
    },

    #[error("invalid coordinates: {0}")]
    InvalidCoordinates(String),

    #[error("resource guard exceeded: {what} (limit {limit})")]
    ResourceGuard { what: &'static str, limit: u64 },

    #[error("point support must be non-empty")]
    EmptySupport,

    #[error("weight {0:?} is not a weight of the representation")]
    NotInSupport(Vec<i64>),

    #[error("weight list is not closed under the Weyl group: {0:?} maps outside it")]
    NotWeylClosed(Vec<i64>),

    #[error("invalid loci selection `{0}`: expected a comma-separated subset of nonstable, unstable, polystable")]
    InvalidLoci(String),

    #[error("cannot parse report: {0}")]
    ParseReport(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("cannot serialize report: {0}")]
    Serialize(#[from] serde_json::Error),
}

impl Error {
    /// Process exit status for this error: 2 for parse errors, 3 for resource guards, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ParseGroup(_)
            | Error::ParseWeight { .. }
            | Error::NonDominant(_)
            | Error::LFormOutsideTypeA(_)
            | Error::InvalidRank { .. }
            | Error::InvalidLoci(_)
            | Error::RankMismatch { .. }
            | Error::NotWeylClosed(_)
            | Error::InvalidCoordinates(_)
            | Error::ParseReport(_) => 2,
            Error::ResourceGuard { .. } => 3,
            _ => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
