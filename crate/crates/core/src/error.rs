use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("resource limit exceeded: {what} needs {needed}, limit is {limit}")]
    ResourceLimit {
        what: &'static str,
        needed: u128,
        limit: u128,
    },

    #[error("t-degree {k} is beyond the series truncation bound {bound}")]
    OutOfTruncation { k: u32, bound: u32 },

    #[error("cache i/o: {0}")]
    Io(#[from] io::Error),

    #[error("cache record: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::ResourceLimit { .. } | Error::OutOfTruncation { .. }
        )
    }
}

/// Bounds on the work a single call may perform.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for which the Weyl group is enumerated directly (`n!` elements).
    pub max_rank: usize,
    /// Dense DP table size for one solution count.
    pub max_states: u128,
    /// Cardinality of the coefficient index set.
    pub max_indices: u128,
    /// Nonzero coefficients stored in a truncated series.
    pub max_series_terms: u128,
    /// Monomials visited by the brute-force character oracle.
    pub max_enumeration: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_rank: 8,
            max_states: 100_000_000,
            max_indices: 1_000_000,
            max_series_terms: 20_000_000,
            max_enumeration: 10_000_000,
        }
    }
}

pub(crate) fn check_limit(what: &'static str, needed: u128, limit: u128) -> Result<()> {
    if needed > limit {
        Err(Error::ResourceLimit {
            what,
            needed,
            limit,
        })
    } else {
        Ok(())
    }
}
