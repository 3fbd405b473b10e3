//! Growth of `rho`: first-occurrence indices, their closed form, and the
//! logarithmic upper bound.
//!
//! `A(i)` is the least `n` with `rho(n) = i + 1`. It equals the closed
//! form `B(i) = (2^i + 1)/3` for odd `i` and `(2^i + 2)/3` for even `i`;
//! taking logarithms gives `rho(n) <= ceil(log2 n) + 2`.

use crate::regular::rho_rec;
use crate::{Error, Result};

/// The closed form `B(i)`; exact integer arithmetic (divisibility by 3
/// holds by the parity of `i`). Supports `i <= 62`.
pub fn b_closed_form(i: u32) -> Result<u64> {
    if i == 0 {
        return Err(Error::LevelZero);
    }
    assert!(i <= 62, "2^i overflows a 64-bit index");
    let pow = 1u64 << i;
    let num = if i % 2 == 1 { pow + 1 } else { pow + 2 };
    debug_assert_eq!(num % 3, 0);
    Ok(num / 3)
}

/// One level of the growth law: the scanned first occurrence against the
/// closed form.
#[derive(Debug, Clone, Copy)]
pub struct GrowthRecord {
    pub i: u32,
    /// First `n` with `rho(n) = i + 1`, or `None` when the scan passed
    /// `B(i) + 1` without finding one (a mismatch, not an error).
    pub a_scan: Option<u64>,
    pub b_closed: u64,
    pub matches: bool,
}

/// Scans `n = 1, 2, ...` with the recurrence evaluator until `rho(n)`
/// first reaches `i + 1`. The scan stops at `B(i) + 1`; running past the
/// closed form is reported as a mismatch rather than looping on.
pub fn a_of_i(i: u32) -> Result<GrowthRecord> {
    let b_closed = b_closed_form(i)?;
    let target = i as u64 + 1;
    let a_scan = (1..=b_closed + 1).find(|&n| rho_rec(n).unwrap() == target);
    Ok(GrowthRecord {
        i,
        a_scan,
        b_closed,
        matches: a_scan == Some(b_closed),
    })
}

/// Outcome of sweeping the upper bound `rho(n) <= ceil(log2 n) + 2` over
/// `2 <= n <= max_n`.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub max_n: u64,
    pub pass: bool,
    pub first_violation: Option<u64>,
    /// Indices where the bound is attained with equality.
    pub equality_at: Vec<u64>,
}

pub fn bound_check(max_n: u64) -> BoundReport {
    assert!(max_n >= 2);
    let mut equality_at = Vec::new();
    for n in 2..=max_n {
        let bound = ceil_log2(n) + 2;
        let rho = rho_rec(n).unwrap();
        if rho > bound {
            return BoundReport {
                max_n,
                pass: false,
                first_violation: Some(n),
                equality_at,
            };
        }
        if rho == bound {
            equality_at.push(n);
        }
    }
    BoundReport {
        max_n,
        pass: true,
        first_violation: None,
        equality_at,
    }
}

pub fn ceil_log2(n: u64) -> u64 {
    debug_assert!(n >= 1);
    (64 - (n - 1).leading_zeros()) as u64
}
