use thiserror::Error;

/// Errors produced by the library. Indexing into the word starts at 1;
/// anything that would query index 0 is a domain error, not a panic.
#[derive(Debug, Error)]
pub enum Error {
    #[error("index 0 is outside the domain; the word is indexed from 1")]
    IndexZero,

    #[error("growth level 0 is outside the domain; levels start at 1")]
    LevelZero,

    #[error("reduction step requires n >= 2, got {0}")]
    ReduceBase(u64),

    #[error("window length {n} exceeds prefix length {prefix_len}")]
    WindowTooLong { n: u64, prefix_len: u64 },

    #[error(
        "completeness certificate for n = {} not reached within the \
         prefix cap of {cap} letters (uncertified rho = {})",
        record.n,
        record.rho
    )]
    CertificationFailed {
        cap: u64,
        record: Box<crate::oracle::ComplexityRecord>,
    },

    #[error("linear representation row check failed: {identity} at n = {n}")]
    RowCheckFailed { identity: &'static str, n: u64 },
}
