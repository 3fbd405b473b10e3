//! Fast exact evaluation of `rho(n)`.
//!
//! Two routes, both independent of the sliding-window oracle:
//!
//! * [`rho_rec`] applies the recurrence relations — every even index
//!   reduces mod 4, every odd index mod 16, each application shrinking the
//!   index by roughly half, so a query costs `O(log n)`.
//! * [`rho_linrep`] evaluates a 9-dimensional integer linear
//!   representation along the binary digits of `n`, built by closing the
//!   generator sequences under even/odd index refinement.

use serde::Serialize;

use crate::{Error, Result};

/// `rho(1) .. rho(20)`.
pub const RHO_INITIAL: [u64; 20] = [
    2, 3, 4, 3, 4, 5, 4, 3, 4, 5, 6, 5, 4, 5, 4, 3, 4, 5, 6, 5,
];

/// One recurrence family: for `n = residue (mod modulus)`, `rho(n)` equals
/// `rho((num * n + offset) / den) + additive`. The index map is exact
/// integer arithmetic (the division is always even on the residue class).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecurrenceRule {
    pub modulus: u64,
    pub residue: u64,
    pub num: u64,
    pub den: u64,
    pub offset: i64,
    pub additive: u64,
    pub label: &'static str,
}

impl RecurrenceRule {
    pub fn matches(&self, n: u64) -> bool {
        n % self.modulus == self.residue
    }

    pub fn apply(&self, n: u64) -> u64 {
        ((self.num * n) as i64 + self.offset) as u64 / self.den
    }
}

/// The full rule set. Evens split mod 4, odds mod 16; together the residue
/// classes tile the integers, so every `n >= 2` matches exactly one rule
/// (`n = 1` is the base case `rho(1) = 2`).
pub const RULE_TABLE: [RecurrenceRule; 10] = [
    // rho(4n) = rho(2n)
    RecurrenceRule { modulus: 4, residue: 0, num: 1, den: 2, offset: 0, additive: 0, label: "rho(4n) = rho(2n)" },
    // rho(4n+2) = rho(2n+1) + 1
    RecurrenceRule { modulus: 4, residue: 2, num: 1, den: 2, offset: 0, additive: 1, label: "rho(4n+2) = rho(2n+1)+1" },
    // rho(16n+1) = rho(8n+1)
    RecurrenceRule { modulus: 16, residue: 1, num: 1, den: 2, offset: 1, additive: 0, label: "rho(16n+1) = rho(8n+1)" },
    // rho(16n+r) = rho(2n+1) + 2 for r in {3, 7, 9, 13}
    RecurrenceRule { modulus: 16, residue: 3, num: 1, den: 8, offset: 5, additive: 2, label: "rho(16n+3) = rho(2n+1)+2" },
    RecurrenceRule { modulus: 16, residue: 7, num: 1, den: 8, offset: 1, additive: 2, label: "rho(16n+7) = rho(2n+1)+2" },
    RecurrenceRule { modulus: 16, residue: 9, num: 1, den: 8, offset: -1, additive: 2, label: "rho(16n+9) = rho(2n+1)+2" },
    RecurrenceRule { modulus: 16, residue: 13, num: 1, den: 8, offset: -5, additive: 2, label: "rho(16n+13) = rho(2n+1)+2" },
    // rho(16n+5) = rho(4n+1) + 2
    RecurrenceRule { modulus: 16, residue: 5, num: 1, den: 4, offset: -1, additive: 2, label: "rho(16n+5) = rho(4n+1)+2" },
    // rho(16n+11) = rho(4n+3) + 2
    RecurrenceRule { modulus: 16, residue: 11, num: 1, den: 4, offset: 1, additive: 2, label: "rho(16n+11) = rho(4n+3)+2" },
    // rho(16n+15) = rho(2n+2) + 1
    RecurrenceRule { modulus: 16, residue: 15, num: 1, den: 8, offset: 1, additive: 1, label: "rho(16n+15) = rho(2n+2)+1" },
];

fn rule_for(n: u64) -> &'static RecurrenceRule {
    RULE_TABLE
        .iter()
        .find(|r| r.matches(n))
        .expect("residue classes cover every n >= 2")
}

/// One reduction: the unique matching rule applied to `n`, returning the
/// smaller index and the additive constant. `n = 1` is excluded (it is the
/// fixed point of the `16n+1` family and the caller's base case).
pub fn reduce_step(n: u64) -> Result<(u64, u64)> {
    if n < 2 {
        return Err(Error::ReduceBase(n));
    }
    let rule = rule_for(n);
    Ok((rule.apply(n), rule.additive))
}

/// Exact `rho(n)` by iterated reduction; additive constants are summed on
/// the way down and `rho(1) = 2` anchors the recursion.
pub fn rho_rec(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::IndexZero);
    }
    let mut n = n;
    let mut acc = 0u64;
    while n > 1 {
        let (next, add) = reduce_step(n)?;
        debug_assert!(next < n);
        n = next;
        acc += add;
    }
    Ok(2 + acc)
}

/// Names of the basis sequences, in coordinate order. The first eight are
/// kernel sequences of `rho`; the ninth is the constant 1.
pub const BASIS: [&str; 9] = [
    "rho(2n+1)",
    "rho(2n+2)",
    "rho(4n+1)",
    "rho(4n+3)",
    "rho(8n+1)",
    "rho(8n+5)",
    "rho(8n+3)",
    "rho(8n+7)",
    "1",
];

const DIM: usize = 9;

/// Refinement table: coordinate `i` of `V(2n)` (resp. `V(2n+1)`) equals
/// coordinate `src` of `V(n)` plus `add`. Row 8 (the constant) maps to
/// itself. Each entry is derived by substituting an even or odd index into
/// the corresponding recurrence family.
const REFINE_EVEN: [(usize, i64, &str); 8] = [
    (2, 0, "s1(2n) = s3(n)"),     // rho(4n+1)
    (0, 1, "s2(2n) = s1(n)+1"),   // rho(4n+2) = rho(2n+1)+1
    (4, 0, "s3(2n) = s5(n)"),     // rho(8n+1)
    (6, 0, "s4(2n) = s7(n)"),     // rho(8n+3)
    (4, 0, "s5(2n) = s5(n)"),     // rho(16n+1) = rho(8n+1)
    (2, 2, "s6(2n) = s3(n)+2"),   // rho(16n+5) = rho(4n+1)+2
    (0, 2, "s7(2n) = s1(n)+2"),   // rho(16n+3) = rho(2n+1)+2
    (0, 2, "s8(2n) = s1(n)+2"),   // rho(16n+7) = rho(2n+1)+2
];

const REFINE_ODD: [(usize, i64, &str); 8] = [
    (3, 0, "s1(2n+1) = s4(n)"),   // rho(4n+3)
    (1, 0, "s2(2n+1) = s2(n)"),   // rho(4n+4) = rho(2n+2)
    (5, 0, "s3(2n+1) = s6(n)"),   // rho(8n+5)
    (7, 0, "s4(2n+1) = s8(n)"),   // rho(8n+7)
    (0, 2, "s5(2n+1) = s1(n)+2"), // rho(16n+9) = rho(2n+1)+2
    (0, 2, "s6(2n+1) = s1(n)+2"), // rho(16n+13) = rho(2n+1)+2
    (3, 2, "s7(2n+1) = s4(n)+2"), // rho(16n+11) = rho(4n+3)+2
    (1, 1, "s8(2n+1) = s2(n)+1"), // rho(16n+15) = rho(2n+2)+1
];

/// A 2-linear representation of `rho`: `V(2n) = M0 V(n)`,
/// `V(2n+1) = M1 V(n)`, anchored at `V(0) = v0`, with `rho(2n+1)` and
/// `rho(2n+2)` read off coordinates 0 and 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearRepresentation {
    pub dim: usize,
    pub v0: Vec<i64>,
    #[serde(rename = "M0")]
    pub m0: Vec<Vec<i64>>,
    #[serde(rename = "M1")]
    pub m1: Vec<Vec<i64>>,
    pub basis: Vec<String>,
}

fn matrix_from(refine: &[(usize, i64, &str); 8]) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; DIM]; DIM];
    for (row, &(src, add, _)) in refine.iter().enumerate() {
        m[row][src] += 1;
        m[row][DIM - 1] += add;
    }
    m[DIM - 1][DIM - 1] = 1;
    m
}

/// The basis vector `V(n) = (s1(n), ..., s8(n), 1)` computed directly from
/// the recurrences; the reference the builder verifies the matrices
/// against.
fn basis_vector(n: u64) -> Vec<i64> {
    vec![
        rho_rec(2 * n + 1).unwrap() as i64,
        rho_rec(2 * n + 2).unwrap() as i64,
        rho_rec(4 * n + 1).unwrap() as i64,
        rho_rec(4 * n + 3).unwrap() as i64,
        rho_rec(8 * n + 1).unwrap() as i64,
        rho_rec(8 * n + 5).unwrap() as i64,
        rho_rec(8 * n + 3).unwrap() as i64,
        rho_rec(8 * n + 7).unwrap() as i64,
        1,
    ]
}

fn mat_apply(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Builds the representation and verifies every matrix row against the
/// recurrence route for all `n <= 1024` before returning it.
pub fn build_linear_representation() -> Result<LinearRepresentation> {
    let rep = LinearRepresentation {
        dim: DIM,
        v0: basis_vector(0),
        m0: matrix_from(&REFINE_EVEN),
        m1: matrix_from(&REFINE_ODD),
        basis: BASIS.iter().map(|s| s.to_string()).collect(),
    };
    for n in 0..=1024u64 {
        let v = basis_vector(n);
        let even = mat_apply(&rep.m0, &v);
        let odd = mat_apply(&rep.m1, &v);
        let expect_even = basis_vector(2 * n);
        let expect_odd = basis_vector(2 * n + 1);
        for row in 0..DIM - 1 {
            if even[row] != expect_even[row] {
                return Err(Error::RowCheckFailed {
                    identity: REFINE_EVEN[row].2,
                    n,
                });
            }
            if odd[row] != expect_odd[row] {
                return Err(Error::RowCheckFailed {
                    identity: REFINE_ODD[row].2,
                    n,
                });
            }
        }
    }
    Ok(rep)
}

/// `rho(n)` by the matrix route: write `n` as `2m+1` or `2m+2`, compute
/// `V(m)` by applying `M0`/`M1` along the binary digits of `m` (most
/// significant digit applied to `v0` first, since `V(2n+b) = Mb V(n)`
/// makes the least significant digit the outermost factor), and read off
/// the matching coordinate.
pub fn rho_linrep(n: u64, rep: &LinearRepresentation) -> Result<u64> {
    if n == 0 {
        return Err(Error::IndexZero);
    }
    let (m, coord) = if n % 2 == 1 {
        ((n - 1) / 2, 0)
    } else {
        ((n - 2) / 2, 1)
    };
    let mut v = rep.v0.clone();
    for k in (0..64 - m.leading_zeros()).rev() {
        let mat = if (m >> k) & 1 == 0 { &rep.m0 } else { &rep.m1 };
        v = mat_apply(mat, &v);
    }
    Ok(v[coord] as u64)
}

/// A 2-kernel subsequence `(rho(2^e n + c))` with `0 <= c < 2^e`.
#[derive(Debug, Clone, Copy)]
pub struct KernelQuery {
    pub e: u32,
    pub c: u64,
    pub count: usize,
}

/// One emitted kernel term: position `k` in the subsequence, the index
/// `2^e k + c`, and `rho` there. The term at index 0 (when `c = 0`) is
/// skipped since the word starts at index 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KernelTerm {
    pub k: u64,
    pub index: u64,
    pub rho: u64,
}

pub fn kernel_sequence(q: KernelQuery) -> Vec<KernelTerm> {
    assert!(q.c < 1u64 << q.e, "offset must satisfy c < 2^e");
    let mut terms = Vec::with_capacity(q.count);
    let mut k = 0u64;
    while terms.len() < q.count {
        let index = (1u64 << q.e) * k + q.c;
        if index >= 1 {
            terms.push(KernelTerm {
                k,
                index,
                rho: rho_rec(index).unwrap(),
            });
        }
        k += 1;
    }
    terms
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduce_step_examples() {
        assert_eq!(reduce_step(20).unwrap(), (10, 0));
        assert_eq!(reduce_step(11).unwrap(), (3, 2));
        assert_eq!(reduce_step(33).unwrap(), (17, 0));
    }

    #[test]
    fn reduce_step_rejects_base() {
        assert!(matches!(reduce_step(1), Err(Error::ReduceBase(1))));
        assert!(matches!(reduce_step(0), Err(Error::ReduceBase(0))));
    }

    #[test]
    fn rho_rec_matches_initial_table() {
        for (i, &expected) in RHO_INITIAL.iter().enumerate() {
            assert_eq!(rho_rec(i as u64 + 1).unwrap(), expected, "n = {}", i + 1);
        }
    }

    #[test]
    fn rho_rec_examples() {
        assert_eq!(rho_rec(20).unwrap(), 5);
        assert_eq!(rho_rec(16).unwrap(), 3);
        assert_eq!(rho_rec(1366).unwrap(), 13);
        assert!(matches!(rho_rec(0), Err(Error::IndexZero)));
    }

    #[test]
    fn powers_of_two_give_three() {
        for k in 1..=40u32 {
            assert_eq!(rho_rec(1u64 << k).unwrap(), 3, "k = {k}");
        }
    }

    #[test]
    fn builder_produces_verified_representation() {
        let rep = build_linear_representation().unwrap();
        assert_eq!(rep.dim, 9);
        assert_eq!(rep.v0, vec![2, 3, 2, 4, 2, 4, 4, 4, 1]);
        assert_eq!(rho_linrep(19, &rep).unwrap(), 6);
    }

    #[test]
    fn linrep_examples() {
        let rep = build_linear_representation().unwrap();
        assert_eq!(rho_linrep(1, &rep).unwrap(), 2);
        assert_eq!(rho_linrep(11, &rep).unwrap(), 6);
        assert_eq!(rho_linrep(4096, &rep).unwrap(), 3);
        assert!(matches!(rho_linrep(0, &rep), Err(Error::IndexZero)));
    }

    #[test]
    fn linrep_json_shape() {
        let rep = build_linear_representation().unwrap();
        let json = serde_json::to_value(&rep).unwrap();
        assert_eq!(json["dim"], 9);
        assert_eq!(json["v0"].as_array().unwrap().len(), 9);
        assert_eq!(json["M0"].as_array().unwrap().len(), 9);
        assert_eq!(json["M1"].as_array().unwrap().len(), 9);
        assert_eq!(json["basis"][0], "rho(2n+1)");
        assert_eq!(json["basis"][8], "1");
    }

    #[test]
    fn kernel_sequence_examples() {
        let rho = |terms: Vec<KernelTerm>| terms.iter().map(|t| t.rho).collect::<Vec<_>>();
        assert_eq!(
            rho(kernel_sequence(KernelQuery { e: 1, c: 1, count: 5 })),
            vec![2, 4, 4, 4, 4]
        );
        assert_eq!(
            rho(kernel_sequence(KernelQuery { e: 2, c: 2, count: 4 })),
            vec![3, 5, 5, 5]
        );
        assert_eq!(
            rho(kernel_sequence(KernelQuery { e: 3, c: 1, count: 3 })),
            vec![2, 4, 4]
        );
        // c = 0: the index-0 term is skipped.
        assert_eq!(
            rho(kernel_sequence(KernelQuery { e: 0, c: 0, count: 3 })),
            vec![2, 3, 4]
        );
    }

    #[test]
    fn reduction_reaches_base_within_step_bound() {
        for n in (2u64..=1 << 14).chain([1 << 20, (1 << 20) - 1]) {
            let bound = 4 * (64 - (n - 1).leading_zeros()) as u64;
            let mut m = n;
            let mut steps = 0u64;
            while m > 1 {
                m = reduce_step(m).unwrap().0;
                steps += 1;
                assert!(steps <= bound, "n = {n} exceeded {bound} steps");
            }
        }
    }

    proptest! {
        #[test]
        fn rule_table_is_a_partition(n in 2u64..(1 << 20)) {
            let matching = RULE_TABLE.iter().filter(|r| r.matches(n)).count();
            prop_assert_eq!(matching, 1);
        }

        #[test]
        fn reduce_strictly_decreases(n in 2u64..(1 << 40)) {
            let (next, _) = reduce_step(n).unwrap();
            prop_assert!(next < n);
            prop_assert!(next >= 1);
        }

        #[test]
        fn linrep_agrees_with_recurrences(n in 1u64..(1 << 14)) {
            let rep = build_linear_representation().unwrap();
            prop_assert_eq!(rho_linrep(n, &rep).unwrap(), rho_rec(n).unwrap());
        }
    }
}
