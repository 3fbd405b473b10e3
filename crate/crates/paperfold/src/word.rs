//! Generation of the ordinary paperfolding word `f = f_1 f_2 f_3 ...` over
//! `{0,1}`, by the odd-part formula and by the Toeplitz construction, plus
//! the factor utilities the rest of the crate builds on.

use crate::{Error, Result};

/// A single letter of the word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Zero,
    One,
}

impl Letter {
    #[inline]
    pub fn from_bit(bit: u64) -> Letter {
        if bit & 1 == 0 {
            Letter::Zero
        } else {
            Letter::One
        }
    }

    #[inline]
    pub fn bit(self) -> u64 {
        match self {
            Letter::Zero => 0,
            Letter::One => 1,
        }
    }

    #[inline]
    pub fn flip(self) -> Letter {
        match self {
            Letter::Zero => Letter::One,
            Letter::One => Letter::Zero,
        }
    }

    /// Contribution of this letter to the balance `|w|_0 - |w|_1`.
    #[inline]
    pub fn balance(self) -> i64 {
        match self {
            Letter::Zero => 1,
            Letter::One => -1,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::Zero => '0',
            Letter::One => '1',
        }
    }
}

impl std::fmt::Display for Letter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// The letter `f_n`, from the odd part of `n`: write `n = n' * 2^k` with
/// `n'` odd; the letter is 0 when `n' = 1 (mod 4)` and 1 when
/// `n' = 3 (mod 4)`. Constant time via trailing-zero count.
pub fn letter_at(n: u64) -> Result<Letter> {
    if n == 0 {
        return Err(Error::IndexZero);
    }
    let odd = n >> n.trailing_zeros();
    Ok(Letter::from_bit(odd >> 1))
}

/// A finite prefix `f_1 .. f_L` of the word, one letter per bit.
///
/// Letter `n` (1-based) lives at bit `(n-1) % 64` of word `(n-1) / 64`.
/// The backing vector always carries one trailing zero word so that
/// unaligned window extraction never reads out of bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaperfoldingPrefix {
    words: Vec<u64>,
    len: u64,
}

impl PaperfoldingPrefix {
    fn with_capacity(len: u64) -> PaperfoldingPrefix {
        let nwords = (len as usize).div_ceil(64) + 1;
        PaperfoldingPrefix {
            words: vec![0u64; nwords],
            len,
        }
    }

    #[inline]
    fn set(&mut self, n: u64, letter: Letter) {
        let g = n - 1;
        self.words[(g / 64) as usize] |= letter.bit() << (g % 64);
    }

    /// The letter at 1-based index `n`; `n` must be in `1..=len`.
    #[inline]
    pub fn get(&self, n: u64) -> Letter {
        assert!(n >= 1 && n <= self.len, "index {n} out of range 1..={}", self.len);
        let g = n - 1;
        Letter::from_bit(self.words[(g / 64) as usize] >> (g % 64))
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (1..=self.len).map(|n| self.get(n))
    }

    /// Copies the `n` letters starting at 1-based index `start` into `out`
    /// as packed bits (letter `start + j` at local bit `j`). Bits past `n`
    /// in the last output word are cleared, so equal windows are equal as
    /// word slices.
    pub fn extract_window(&self, start: u64, n: u64, out: &mut [u64]) {
        debug_assert!(start >= 1 && start + n - 1 <= self.len);
        let nwords = (n as usize).div_ceil(64);
        debug_assert!(out.len() >= nwords);
        let g = start - 1;
        let w = (g / 64) as usize;
        let off = (g % 64) as u32;
        if off == 0 {
            out[..nwords].copy_from_slice(&self.words[w..w + nwords]);
        } else {
            for (k, slot) in out[..nwords].iter_mut().enumerate() {
                *slot = (self.words[w + k] >> off) | (self.words[w + k + 1] << (64 - off));
            }
        }
        let tail = (n % 64) as u32;
        if tail != 0 {
            out[nwords - 1] &= u64::MAX >> (64 - tail);
        }
    }

    /// The window as an owned `FactorWord`; for short factors only.
    pub fn factor(&self, start: u64, n: u64) -> FactorWord {
        FactorWord::new((0..n).map(|j| self.get(start + j)).collect())
    }
}

impl std::fmt::Display for PaperfoldingPrefix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for l in self.letters() {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// The prefix `f_1 .. f_L` by the odd-part formula. `L = 0` gives the
/// empty prefix.
pub fn prefix(len: u64) -> PaperfoldingPrefix {
    let mut p = PaperfoldingPrefix::with_capacity(len);
    for n in 1..=len {
        p.set(n, letter_at(n).expect("n >= 1"));
    }
    p
}

/// The prefix `f_1 .. f_L` by the Toeplitz construction: starting from all
/// gaps, each round fills every other remaining gap with alternating
/// `0, 1, 0, 1, ...`. Round `r` fixes every position not divisible by
/// `2^r`, so `ceil(log2(L+1))` rounds close all gaps below `L`.
///
/// Only the first `L` positions are ever materialized; truncating the gap
/// list is sound because fills are assigned in increasing position order.
pub fn toeplitz_prefix(len: u64) -> PaperfoldingPrefix {
    let mut p = PaperfoldingPrefix::with_capacity(len);
    let mut gaps: Vec<u64> = (1..=len).collect();
    while !gaps.is_empty() {
        let mut remaining = Vec::with_capacity(gaps.len() / 2);
        let mut fill = Letter::Zero;
        for (i, &pos) in gaps.iter().enumerate() {
            if i % 2 == 0 {
                p.set(pos, fill);
                fill = fill.flip();
            } else {
                remaining.push(pos);
            }
        }
        gaps = remaining;
    }
    p
}

/// A finite word over `{0,1}`, unpacked one letter per byte. Factors
/// handled this way are short; the packed representation stays inside
/// `PaperfoldingPrefix`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FactorWord {
    letters: Vec<Letter>,
}

impl FactorWord {
    pub fn new(letters: Vec<Letter>) -> FactorWord {
        FactorWord { letters }
    }

    /// Parses a string of `0`s and `1`s; any other character is rejected.
    pub fn parse(s: &str) -> Option<FactorWord> {
        s.chars()
            .map(|c| match c {
                '0' => Some(Letter::Zero),
                '1' => Some(Letter::One),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(FactorWord::new)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }
}

impl std::fmt::Display for FactorWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Reversal with every letter flipped. Maps factors of the word to factors
/// of the word and negates the balance.
pub fn reverse_complement(w: &FactorWord) -> FactorWord {
    FactorWord::new(w.letters().iter().rev().map(|l| l.flip()).collect())
}

/// Result of checking the kernel letter identities `f(2n) = f(n)`,
/// `f(4n+1) = 0`, `f(4n+3) = 1` for all applicable indices up to `max_n`.
/// These follow from the odd-part formula and witness that the word is
/// 2-automatic.
#[derive(Debug, Clone)]
pub struct KernelIdentityReport {
    pub max_n: u64,
    pub pass: bool,
    /// First `(identity, index)` pair that failed, if any.
    pub first_failure: Option<(&'static str, u64)>,
}

pub fn kernel_letter_identities_check(max_n: u64) -> KernelIdentityReport {
    let fail = |identity, n| KernelIdentityReport {
        max_n,
        pass: false,
        first_failure: Some((identity, n)),
    };
    for n in 1..=max_n / 2 {
        if letter_at(2 * n).unwrap() != letter_at(n).unwrap() {
            return fail("f(2n) = f(n)", n);
        }
    }
    let mut i = 1;
    while i <= max_n {
        if letter_at(i).unwrap() != Letter::Zero {
            return fail("f(4n+1) = 0", i);
        }
        i += 4;
    }
    let mut i = 3;
    while i <= max_n {
        if letter_at(i).unwrap() != Letter::One {
            return fail("f(4n+3) = 1", i);
        }
        i += 4;
    }
    KernelIdentityReport {
        max_n,
        pass: true,
        first_failure: None,
    }
}
