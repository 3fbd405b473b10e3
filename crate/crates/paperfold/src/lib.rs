//! The ordinary paperfolding word and its abelian complexity function.
//!
//! The word is generated two independent ways (odd-part formula and the
//! Toeplitz gap-filling construction). Its abelian complexity `rho(n)` is
//! computed three independent ways:
//!
//! * [`oracle::rho_oracle`] — exhaustive sliding-window ground truth over a
//!   prefix, with a per-`n` completeness certificate,
//! * [`regular::rho_rec`] — the recurrence relations, `O(log n)` per query,
//! * [`regular::rho_linrep`] — a 9-dimensional integer linear representation
//!   evaluated along the binary digits of `n`.
//!
//! The [`verify`] module cross-checks all three plus the structural
//! invariants of the word; the `paperfold` binary exposes everything on the
//! command line.

pub mod error;
pub mod growth;
pub mod oracle;
pub mod regular;
pub mod verify;
pub mod word;

pub use error::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
