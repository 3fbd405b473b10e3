//! Cross-validation suites: every structural fact the rest of the crate
//! relies on, run as named checks over bounded ranges and gathered into a
//! report. Each check caps its own range; `max_n` caps them all.

use rayon::prelude::*;

use crate::growth::{a_of_i, b_closed_form, bound_check, ceil_log2};
use crate::oracle::{
    distinct_factors, maximal_factor_endpoints_check, rho_oracle,
};
use crate::regular::{build_linear_representation, reduce_step, rho_linrep, rho_rec, RULE_TABLE};
use crate::word::{prefix, reverse_complement, toeplitz_prefix};

/// The verifiable invariant suites, one per CLI check name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckKind {
    /// `rho_rec(n) = rho_oracle(n)` with every record certified, n <= 4096.
    RecVsOracle,
    /// `|rho(n+1) - rho(n)| = 1`, n <= 2^20.
    Step,
    /// Balance spectrum is exactly `{-M, -M+2, ..., M}`, n <= 512.
    Spectrum,
    /// Distinct factor count is `4n`, 7 <= n <= 512.
    FactorCount,
    /// Factor sets closed under reverse complement, n <= 64.
    RevComp,
    /// No maximal window starts and ends with 1, 2 <= n <= 512. Known to
    /// fail (the word has counterexamples from n = 8 on); kept so the
    /// report documents them.
    MaximalEndpoints,
    /// `rho(2^k) = 3` for k >= 1.
    Powers,
    /// `rho(n) <= ceil(log2 n) + 2`, n <= 2^20.
    Bound,
    /// First occurrence of `rho = i+1` matches the closed form, i <= 21.
    Growth,
    /// Matrix route equals recurrence route, n <= 2^14.
    Linrep,
    /// Toeplitz generator equals odd-part generator, bit for bit.
    Toeplitz,
    /// Every n >= 2 matches exactly one recurrence rule and reduction
    /// terminates within the step budget.
    RuleTotality,
}

impl CheckKind {
    pub const ALL: [CheckKind; 12] = [
        CheckKind::RecVsOracle,
        CheckKind::Step,
        CheckKind::Spectrum,
        CheckKind::FactorCount,
        CheckKind::RevComp,
        CheckKind::MaximalEndpoints,
        CheckKind::Powers,
        CheckKind::Bound,
        CheckKind::Growth,
        CheckKind::Linrep,
        CheckKind::Toeplitz,
        CheckKind::RuleTotality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::RecVsOracle => "rec-vs-oracle",
            CheckKind::Step => "step",
            CheckKind::Spectrum => "spectrum",
            CheckKind::FactorCount => "factor-count",
            CheckKind::RevComp => "revcomp",
            CheckKind::MaximalEndpoints => "maximal-endpoints",
            CheckKind::Powers => "powers",
            CheckKind::Bound => "bound",
            CheckKind::Growth => "growth",
            CheckKind::Linrep => "linrep",
            CheckKind::Toeplitz => "toeplitz",
            CheckKind::RuleTotality => "rule-totality",
        }
    }

    pub fn from_name(name: &str) -> Option<CheckKind> {
        CheckKind::ALL.iter().copied().find(|k| k.name() == name)
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub range: String,
    pub pass: bool,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn overall(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

impl std::fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            write!(f, "{:<18} {:<24} {}", c.name, c.range, if c.pass { "pass" } else { "FAIL" })?;
            if let Some(ce) = &c.counterexample {
                write!(f, "  ({ce})")?;
            }
            writeln!(f)?;
        }
        writeln!(
            f,
            "overall: {}",
            if self.overall() { "pass" } else { "FAIL" }
        )
    }
}

fn result(
    kind: CheckKind,
    range: String,
    counterexample: Option<String>,
) -> CheckResult {
    CheckResult {
        name: kind.name(),
        range,
        pass: counterexample.is_none(),
        counterexample,
    }
}

/// First failure over `lo..=hi`, optionally sharded across threads. With
/// sharding the minimum failing index is still reported, so output is
/// deterministic either way.
fn scan<F>(lo: u64, hi: u64, parallel: bool, f: F) -> Option<String>
where
    F: Fn(u64) -> Option<String> + Sync,
{
    if lo > hi {
        return None;
    }
    if parallel {
        (lo..=hi)
            .into_par_iter()
            .filter_map(|n| f(n).map(|msg| (n, msg)))
            .min_by_key(|(n, _)| *n)
            .map(|(_, msg)| msg)
    } else {
        (lo..=hi).find_map(f)
    }
}

pub fn run_check(kind: CheckKind, max_n: u64, parallel: bool) -> CheckResult {
    match kind {
        CheckKind::RecVsOracle => {
            let hi = max_n.min(4096);
            let ce = scan(1, hi, parallel, |n| {
                let rec = match rho_oracle(n) {
                    Ok(r) => r,
                    Err(e) => return Some(format!("n = {n}: {e}")),
                };
                if !rec.certified {
                    return Some(format!("n = {n}: oracle record not certified"));
                }
                let fast = rho_rec(n).unwrap();
                (fast != rec.rho)
                    .then(|| format!("n = {n}: rec {} vs oracle {}", fast, rec.rho))
            });
            result(kind, format!("1 <= n <= {hi}"), ce)
        }
        CheckKind::Step => {
            let hi = max_n.min(1 << 20);
            let ce = scan(1, hi.saturating_sub(1), parallel, |n| {
                let a = rho_rec(n).unwrap() as i64;
                let b = rho_rec(n + 1).unwrap() as i64;
                ((b - a).abs() != 1).then(|| format!("n = {n}: rho {a} -> {b}"))
            });
            result(kind, format!("1 <= n < {hi}"), ce)
        }
        CheckKind::Spectrum => {
            let hi = max_n.min(512);
            let ce = scan(1, hi, parallel, |n| match rho_oracle(n) {
                Ok(rec) if rec.spectrum.is_symmetric_step_two() => None,
                Ok(rec) => Some(format!("n = {n}: spectrum {:?}", rec.spectrum.values)),
                Err(e) => Some(format!("n = {n}: {e}")),
            });
            result(kind, format!("1 <= n <= {hi}"), ce)
        }
        CheckKind::FactorCount => {
            let hi = max_n.min(512);
            let ce = scan(7, hi, parallel, |n| match rho_oracle(n) {
                Ok(rec) if rec.factor_count == 4 * n => None,
                Ok(rec) => Some(format!("n = {n}: {} factors, expected {}", rec.factor_count, 4 * n)),
                Err(e) => Some(format!("n = {n}: {e}")),
            });
            result(kind, format!("7 <= n <= {hi}"), ce)
        }
        CheckKind::RevComp => {
            let hi = max_n.min(64);
            let ce = scan(1, hi, parallel, |n| match distinct_factors(n) {
                Ok(set) => set
                    .iter()
                    .find(|w| !set.contains(&reverse_complement(w)))
                    .map(|w| format!("n = {n}: {w} in B_n but its reverse complement is not")),
                Err(e) => Some(format!("n = {n}: {e}")),
            });
            result(kind, format!("1 <= n <= {hi}"), ce)
        }
        CheckKind::MaximalEndpoints => {
            let hi = max_n.min(512);
            let ce = scan(2, hi, parallel, |n| match maximal_factor_endpoints_check(n) {
                Ok(true) => None,
                Ok(false) => Some(format!("n = {n}: a maximal factor starts and ends with 1")),
                Err(e) => Some(format!("n = {n}: {e}")),
            });
            result(kind, format!("2 <= n <= {hi}"), ce)
        }
        CheckKind::Powers => {
            let hi_k = (1..=40u64).take_while(|&k| (1u64 << k) <= max_n.max(2)).last().unwrap_or(1);
            let ce = scan(1, hi_k, parallel, |k| {
                let rho = rho_rec(1u64 << k).unwrap();
                (rho != 3).then(|| format!("k = {k}: rho(2^k) = {rho}"))
            });
            result(kind, format!("1 <= k <= {hi_k}"), ce)
        }
        CheckKind::Bound => {
            let hi = max_n.clamp(2, 1 << 20);
            let report = bound_check(hi);
            let ce = report
                .first_violation
                .map(|n| format!("n = {n}: rho {} > {}", rho_rec(n).unwrap(), ceil_log2(n) + 2));
            result(kind, format!("2 <= n <= {hi}"), ce)
        }
        CheckKind::Growth => {
            let hi_i = (1..=21u32)
                .take_while(|&i| b_closed_form(i).unwrap() <= max_n)
                .last()
                .unwrap_or(1);
            let ce = scan(1, hi_i as u64, parallel, |i| {
                let r = a_of_i(i as u32).unwrap();
                (!r.matches).then(|| {
                    format!("i = {i}: scan {:?} vs closed form {}", r.a_scan, r.b_closed)
                })
            });
            result(kind, format!("1 <= i <= {hi_i}"), ce)
        }
        CheckKind::Linrep => {
            let hi = max_n.min(1 << 14);
            let ce = match build_linear_representation() {
                Ok(rep) => scan(1, hi, parallel, |n| {
                    let a = rho_linrep(n, &rep).unwrap();
                    let b = rho_rec(n).unwrap();
                    (a != b).then(|| format!("n = {n}: linrep {a} vs rec {b}"))
                }),
                Err(e) => Some(format!("builder: {e}")),
            };
            result(kind, format!("1 <= n <= {hi}"), ce)
        }
        CheckKind::Toeplitz => {
            let len = max_n.min(1 << 20);
            let a = prefix(len);
            let b = toeplitz_prefix(len);
            let ce = (1..=len)
                .find(|&n| a.get(n) != b.get(n))
                .map(|n| format!("first difference at index {n}"));
            result(kind, format!("L = {len}"), ce)
        }
        CheckKind::RuleTotality => {
            let hi = max_n.clamp(2, 1 << 20);
            let ce = scan(2, hi, parallel, |n| {
                let matching = RULE_TABLE.iter().filter(|r| r.matches(n)).count();
                if matching != 1 {
                    return Some(format!("n = {n}: {matching} rules match"));
                }
                let bound = 4 * ceil_log2(n).max(1);
                let mut m = n;
                let mut steps = 0;
                while m > 1 {
                    m = reduce_step(m).unwrap().0;
                    steps += 1;
                    if steps > bound {
                        return Some(format!("n = {n}: reduction exceeded {bound} steps"));
                    }
                }
                None
            });
            result(kind, format!("2 <= n <= {hi}"), ce)
        }
    }
}

pub fn run_checks(kinds: &[CheckKind], max_n: u64, parallel: bool) -> VerificationReport {
    VerificationReport {
        checks: kinds
            .iter()
            .map(|&k| run_check(k, max_n, parallel))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_names_round_trip() {
        for k in CheckKind::ALL {
            assert_eq!(CheckKind::from_name(k.name()), Some(k));
        }
        assert_eq!(CheckKind::from_name("nope"), None);
    }

    #[test]
    fn small_sweep_passes_all_checks_but_maximal_endpoints() {
        let kinds: Vec<CheckKind> = CheckKind::ALL
            .into_iter()
            .filter(|&k| k != CheckKind::MaximalEndpoints)
            .collect();
        let report = run_checks(&kinds, 64, false);
        assert!(report.overall(), "{report}");
    }

    #[test]
    fn maximal_endpoints_finds_the_length_eight_counterexample() {
        assert!(run_check(CheckKind::MaximalEndpoints, 7, false).pass);
        let r = run_check(CheckKind::MaximalEndpoints, 8, false);
        assert!(!r.pass);
        assert!(r.counterexample.unwrap().contains("n = 8"));
    }

    #[test]
    fn step_check_is_vacuous_at_one() {
        let r = run_check(CheckKind::Step, 1, false);
        assert!(r.pass);
    }

    #[test]
    fn parallel_and_serial_agree() {
        for kind in [CheckKind::RecVsOracle, CheckKind::Step, CheckKind::Growth] {
            let a = run_check(kind, 128, false);
            let b = run_check(kind, 128, true);
            assert_eq!(a.pass, b.pass);
            assert_eq!(a.range, b.range);
        }
    }
}
