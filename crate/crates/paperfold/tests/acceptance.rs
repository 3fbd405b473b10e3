//! Acceptance suite: the exact claims the crate exists to machine-check,
//! one test per criterion, each printing its own pass/fail line. All
//! comparisons are exact; the few runtime budgets are asserted as stated.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use std::process::Command;
use std::time::{Duration, Instant};

use paperfold::growth::{a_of_i, ceil_log2};
use paperfold::oracle::rho_oracle;
use paperfold::regular::{build_linear_representation, rho_linrep, rho_rec};
use paperfold::word::{prefix, toeplitz_prefix};
use rayon::prelude::*;

const RHO_TABLE_20: [u64; 20] = [2, 3, 4, 3, 4, 5, 4, 3, 4, 5, 6, 5, 4, 5, 4, 3, 4, 5, 6, 5];

fn report(criterion: &str, pass: bool, elapsed: Duration) {
    println!(
        "acceptance: {criterion}: {} ({elapsed:.2?})",
        if pass { "pass" } else { "FAIL" }
    );
    assert!(pass, "criterion failed: {criterion}");
}

#[test]
fn criterion_1_initial_table_via_cli() {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_paperfold"))
        .args(["rho", "--from", "1", "--to", "20", "--method", "rec"])
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    let body = String::from_utf8(out.stdout).unwrap();
    let mut ok = out.status.success();
    let mut lines = body.lines();
    ok &= lines.next() == Some("n,rho,method");
    for (i, &rho) in RHO_TABLE_20.iter().enumerate() {
        ok &= lines.next() == Some(format!("{},{},rec", i + 1, rho).as_str());
    }
    ok &= lines.next().is_none();
    ok &= elapsed < Duration::from_secs(1);
    report("1 initial-table reproduction (CLI, < 1 s)", ok, elapsed);
}

#[test]
fn criterion_2_oracle_recurrence_equivalence_to_4096() {
    let start = Instant::now();
    let bad: Vec<u64> = (1u64..=4096)
        .into_par_iter()
        .filter(|&n| {
            let rec = rho_oracle(n).expect("oracle certifies");
            !rec.certified || rec.rho != rho_rec(n).unwrap()
        })
        .collect();
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && elapsed < Duration::from_secs(300);
    report("2 oracle = recurrence, certified, n <= 4096 (<= 5 min)", ok, elapsed);
}

#[test]
fn criterion_3_factor_count_certificate() {
    let start = Instant::now();
    let bad: Vec<u64> = (7u64..=512)
        .into_par_iter()
        .filter(|&n| rho_oracle(n).expect("oracle certifies").factor_count != 4 * n)
        .collect();
    report("3 distinct factor count = 4n, 7 <= n <= 512", bad.is_empty(), start.elapsed());
}

#[test]
fn criterion_4_step_property_to_2_pow_20() {
    let start = Instant::now();
    let mut ok = true;
    let mut prev = rho_rec(1).unwrap() as i64;
    for n in 2..=(1u64 << 20) {
        let cur = rho_rec(n).unwrap() as i64;
        if (cur - prev).abs() != 1 {
            ok = false;
            break;
        }
        prev = cur;
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(30);
    report("4 |rho(n+1) - rho(n)| = 1, n < 2^20 (< 30 s)", ok, elapsed);
}

#[test]
fn criterion_5_spectrum_structure_to_512() {
    let start = Instant::now();
    let bad: Vec<u64> = (1u64..=512)
        .into_par_iter()
        .filter(|&n| {
            let rec = rho_oracle(n).expect("oracle certifies");
            let m = rec.m;
            let expected: Vec<i64> = (-m..=m).step_by(2).collect();
            rec.spectrum.values != expected
        })
        .collect();
    report("5 spectrum = {-M, -M+2, ..., M}, n <= 512", bad.is_empty(), start.elapsed());
}

#[test]
fn criterion_6_growth_law_to_level_21() {
    let start = Instant::now();
    let mut ok = true;
    for i in 1..=21 {
        let r = a_of_i(i).unwrap();
        ok &= r.matches;
        if i == 5 {
            ok &= r.a_scan == Some(11);
        }
        if i == 12 {
            ok &= r.a_scan == Some(1366);
        }
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(60);
    report("6 A(i) matches closed form, i <= 21 (< 1 min)", ok, elapsed);
}

#[test]
fn criterion_7_powers_and_log_bound() {
    let start = Instant::now();
    let mut ok = (1..=40u32).all(|k| rho_rec(1u64 << k).unwrap() == 3);
    ok &= (2..=(1u64 << 20)).all(|n| rho_rec(n).unwrap() <= ceil_log2(n) + 2);
    report("7 rho(2^k) = 3 and rho(n) <= ceil(log2 n) + 2", ok, start.elapsed());
}

#[test]
fn criterion_8_linear_representation_equivalence() {
    let start = Instant::now();
    let rep = build_linear_representation().expect("row verification passes");
    let ok = (1u64..=(1 << 14)).all(|n| rho_linrep(n, &rep).unwrap() == rho_rec(n).unwrap());
    report("8 linrep = recurrence, n <= 2^14", ok, start.elapsed());
}

#[test]
fn criterion_9_generator_cross_validation_at_10_pow_6() {
    let start = Instant::now();
    let len = 1_000_000;
    let ok = toeplitz_prefix(len) == prefix(len);
    let elapsed = start.elapsed();
    report(
        "9 toeplitz prefix = formula prefix at L = 10^6 (< 1 s)",
        ok && elapsed < Duration::from_secs(1),
        elapsed,
    );
}
