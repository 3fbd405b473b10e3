//! Exercises the C entry points from Rust, including the error paths a C
//! caller would hit.

use std::ffi::CStr;
use std::ptr;

use paperfold_ffi::*;

#[test]
fn letter_at_roundtrip() {
    let mut out = 9u8;
    unsafe {
        assert_eq!(pf_letter_at(1, &mut out), PfStatus::Ok);
        assert_eq!(out, 0);
        assert_eq!(pf_letter_at(12, &mut out), PfStatus::Ok);
        assert_eq!(out, 1);
        assert_eq!(pf_letter_at(0, &mut out), PfStatus::DomainError);
        assert_eq!(pf_letter_at(1, ptr::null_mut()), PfStatus::NullPointer);
    }
}

#[test]
fn prefix_generators_agree() {
    let mut a = [0u8; 31];
    let mut b = [0u8; 31];
    unsafe {
        assert_eq!(pf_prefix(31, a.as_mut_ptr(), a.len()), PfStatus::Ok);
        assert_eq!(pf_toeplitz_prefix(31, b.as_mut_ptr(), b.len()), PfStatus::Ok);
    }
    assert_eq!(a, b);
    let s: String = a.iter().map(|&x| char::from(b'0' + x)).collect();
    assert_eq!(s, "0010011000110110001001110011011");
}

#[test]
fn prefix_rejects_short_buffer() {
    let mut buf = [0u8; 4];
    unsafe {
        assert_eq!(pf_prefix(5, buf.as_mut_ptr(), buf.len()), PfStatus::BufferTooSmall);
    }
}

#[test]
fn rho_routes_agree() {
    let mut rec = 0u64;
    let mut orc = 0u64;
    let mut certified = false;
    let mut handle: *mut PfLinRep = ptr::null_mut();
    unsafe {
        assert_eq!(pf_linrep_new(&mut handle), PfStatus::Ok);
        for n in 1..=64u64 {
            assert_eq!(pf_rho_rec(n, &mut rec), PfStatus::Ok);
            assert_eq!(pf_rho_oracle(n, 0, &mut orc, &mut certified), PfStatus::Ok);
            assert!(certified);
            assert_eq!(rec, orc, "n = {n}");
            let mut lin = 0u64;
            assert_eq!(pf_linrep_eval(handle, n, &mut lin), PfStatus::Ok);
            assert_eq!(rec, lin, "n = {n}");
        }
        assert_eq!(pf_rho_rec(0, &mut rec), PfStatus::DomainError);
        pf_linrep_free(handle);
    }
}

#[test]
fn oracle_cap_failure_reports_uncertified_value() {
    let mut rho = 0u64;
    let mut certified = true;
    unsafe {
        assert_eq!(
            pf_rho_oracle(64, 32, &mut rho, &mut certified),
            PfStatus::CertificationFailed
        );
    }
    assert!(!certified);
    assert!(rho >= 1);
}

#[test]
fn linrep_json_document() {
    let mut handle: *mut PfLinRep = ptr::null_mut();
    unsafe {
        assert_eq!(pf_linrep_new(&mut handle), PfStatus::Ok);
        let s = pf_linrep_to_json(handle);
        assert!(!s.is_null());
        let json: serde_json::Value =
            serde_json::from_str(CStr::from_ptr(s).to_str().unwrap()).unwrap();
        assert_eq!(json["dim"], 9);
        assert_eq!(json["v0"], serde_json::json!([2, 3, 2, 4, 2, 4, 4, 4, 1]));
        pf_string_free(s);
        pf_linrep_free(handle);
        assert!(pf_linrep_to_json(ptr::null()).is_null());
    }
}

#[test]
fn growth_entry_points() {
    let mut b = 0u64;
    let mut a = 0u64;
    let mut matches = false;
    unsafe {
        assert_eq!(pf_growth_b_closed(12, &mut b), PfStatus::Ok);
        assert_eq!(b, 1366);
        assert_eq!(pf_growth_b_closed(0, &mut b), PfStatus::DomainError);
        assert_eq!(pf_growth_b_closed(63, &mut b), PfStatus::DomainError);
        assert_eq!(pf_growth_a_of_i(5, &mut a, &mut matches), PfStatus::Ok);
        assert_eq!(a, 11);
        assert!(matches);
    }
}
