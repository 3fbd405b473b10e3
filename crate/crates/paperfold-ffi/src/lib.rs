//! C ABI over the paperfold library.
//!
//! Conventions: every fallible function returns a [`PfStatus`] and writes
//! its result through out-pointers; the linear representation is an opaque
//! handle created by `pf_linrep_new` and released by `pf_linrep_free`;
//! strings returned by the library are released by `pf_string_free`.
//! Null out-pointers yield `PF_STATUS_NULL_POINTER`, never a crash.

use std::ffi::CString;

use libc::c_char;

use paperfold::growth::{a_of_i, b_closed_form};
use paperfold::oracle::{rho_oracle_with, OracleConfig};
use paperfold::regular::{build_linear_representation, rho_linrep, rho_rec, LinearRepresentation};
use paperfold::word::{letter_at, prefix, toeplitz_prefix};
use paperfold::Error;

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PfStatus {
    Ok = 0,
    /// An index or level outside the domain (e.g. index 0).
    DomainError = 1,
    NullPointer = 2,
    /// Output buffer smaller than the requested length.
    BufferTooSmall = 3,
    /// The oracle's completeness certificate was not reached within the cap.
    CertificationFailed = 4,
    InternalError = 5,
}

fn status_of(e: &Error) -> PfStatus {
    match e {
        Error::IndexZero | Error::LevelZero | Error::ReduceBase(_) | Error::WindowTooLong { .. } => {
            PfStatus::DomainError
        }
        Error::CertificationFailed { .. } => PfStatus::CertificationFailed,
        Error::RowCheckFailed { .. } => PfStatus::InternalError,
    }
}

/// Opaque handle to a verified linear representation.
pub struct PfLinRep {
    rep: LinearRepresentation,
}

/// The letter `f_n` of the word (1-based), written to `out` as 0 or 1.
///
/// # Safety
/// `out` must be null or a valid pointer to a `uint8_t`.
#[no_mangle]
pub unsafe extern "C" fn pf_letter_at(n: u64, out: *mut u8) -> PfStatus {
    if out.is_null() {
        return PfStatus::NullPointer;
    }
    match letter_at(n) {
        Ok(l) => {
            *out = l.bit() as u8;
            PfStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

unsafe fn write_prefix(
    p: paperfold::word::PaperfoldingPrefix,
    out: *mut u8,
    out_len: usize,
) -> PfStatus {
    if out.is_null() {
        return PfStatus::NullPointer;
    }
    if (out_len as u64) < p.len() {
        return PfStatus::BufferTooSmall;
    }
    for (i, l) in p.letters().enumerate() {
        *out.add(i) = l.bit() as u8;
    }
    PfStatus::Ok
}

/// Writes `f_1 .. f_length` into `out`, one letter per byte (values 0/1),
/// by the odd-part formula.
///
/// # Safety
/// `out` must point to at least `out_len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn pf_prefix(length: u64, out: *mut u8, out_len: usize) -> PfStatus {
    write_prefix(prefix(length), out, out_len)
}

/// Same as [`pf_prefix`] but generated by the Toeplitz construction.
///
/// # Safety
/// `out` must point to at least `out_len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn pf_toeplitz_prefix(length: u64, out: *mut u8, out_len: usize) -> PfStatus {
    write_prefix(toeplitz_prefix(length), out, out_len)
}

/// The abelian complexity `rho(n)` by the recurrence route.
///
/// # Safety
/// `out` must be null or a valid pointer to a `uint64_t`.
#[no_mangle]
pub unsafe extern "C" fn pf_rho_rec(n: u64, out: *mut u64) -> PfStatus {
    if out.is_null() {
        return PfStatus::NullPointer;
    }
    match rho_rec(n) {
        Ok(rho) => {
            *out = rho;
            PfStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Ground-truth `rho(n)` from the windowing oracle. `prefix_cap` bounds
/// the certification loop (0 selects the default of 2^28 letters). On
/// certification failure the uncertified value is still written and
/// `PF_STATUS_CERTIFICATION_FAILED` returned.
///
/// # Safety
/// `out_rho` and `out_certified` must be null or valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pf_rho_oracle(
    n: u64,
    prefix_cap: u64,
    out_rho: *mut u64,
    out_certified: *mut bool,
) -> PfStatus {
    if out_rho.is_null() || out_certified.is_null() {
        return PfStatus::NullPointer;
    }
    let config = if prefix_cap == 0 {
        OracleConfig::default()
    } else {
        OracleConfig { prefix_cap }
    };
    match rho_oracle_with(n, &config) {
        Ok(rec) => {
            *out_rho = rec.rho;
            *out_certified = rec.certified;
            PfStatus::Ok
        }
        Err(Error::CertificationFailed { record, .. }) => {
            *out_rho = record.rho;
            *out_certified = false;
            PfStatus::CertificationFailed
        }
        Err(e) => status_of(&e),
    }
}

/// Builds (and row-verifies) the linear representation, returning an
/// opaque handle through `out`.
///
/// # Safety
/// `out` must be null or a valid pointer to a `PfLinRep*`.
#[no_mangle]
pub unsafe extern "C" fn pf_linrep_new(out: *mut *mut PfLinRep) -> PfStatus {
    if out.is_null() {
        return PfStatus::NullPointer;
    }
    match build_linear_representation() {
        Ok(rep) => {
            *out = Box::into_raw(Box::new(PfLinRep { rep }));
            PfStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Releases a handle from [`pf_linrep_new`]. Null is a no-op.
///
/// # Safety
/// `handle` must be null or a pointer returned by `pf_linrep_new` that has
/// not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn pf_linrep_free(handle: *mut PfLinRep) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// `rho(n)` evaluated through the matrices of `handle`.
///
/// # Safety
/// `handle` must be a live pointer from `pf_linrep_new`; `out` must be
/// null or a valid pointer to a `uint64_t`.
#[no_mangle]
pub unsafe extern "C" fn pf_linrep_eval(
    handle: *const PfLinRep,
    n: u64,
    out: *mut u64,
) -> PfStatus {
    if handle.is_null() || out.is_null() {
        return PfStatus::NullPointer;
    }
    match rho_linrep(n, &(*handle).rep) {
        Ok(rho) => {
            *out = rho;
            PfStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// The representation as its JSON document, as a newly allocated
/// NUL-terminated string. Free with [`pf_string_free`]. Returns null on a
/// null handle.
///
/// # Safety
/// `handle` must be null or a live pointer from `pf_linrep_new`.
#[no_mangle]
pub unsafe extern "C" fn pf_linrep_to_json(handle: *const PfLinRep) -> *mut c_char {
    if handle.is_null() {
        return std::ptr::null_mut();
    }
    let json = serde_json::to_string(&(*handle).rep).expect("representation serializes");
    CString::new(json)
        .map_or(std::ptr::null_mut(), CString::into_raw)
}

/// Releases a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must be null or a pointer previously returned by
/// [`pf_linrep_to_json`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The closed form `B(i)` for the first index where `rho` reaches `i + 1`.
///
/// # Safety
/// `out` must be null or a valid pointer to a `uint64_t`.
#[no_mangle]
pub unsafe extern "C" fn pf_growth_b_closed(i: u32, out: *mut u64) -> PfStatus {
    if out.is_null() {
        return PfStatus::NullPointer;
    }
    if i > 62 {
        return PfStatus::DomainError;
    }
    match b_closed_form(i) {
        Ok(b) => {
            *out = b;
            PfStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Scans for the first index with `rho = i + 1` and compares it to the
/// closed form. `out_a` receives 0 when the scan found no index up to
/// `B(i) + 1`.
///
/// # Safety
/// `out_a` and `out_match` must be null or valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pf_growth_a_of_i(
    i: u32,
    out_a: *mut u64,
    out_match: *mut bool,
) -> PfStatus {
    if out_a.is_null() || out_match.is_null() {
        return PfStatus::NullPointer;
    }
    if i > 62 {
        return PfStatus::DomainError;
    }
    match a_of_i(i) {
        Ok(r) => {
            *out_a = r.a_scan.unwrap_or(0);
            *out_match = r.matches;
            PfStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}
