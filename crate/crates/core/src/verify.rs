//! Independent universal-cycle verifier.
//!
//! A word over `0..=n` of length `n!` is a universal cycle for `S_n` when
//! its `n!` cyclic windows of length `n` have pairwise distinct patterns.
//! At exact length, no duplicates is the same as full coverage.
//!
//! Only the pattern primitives are shared with the generator. Patterns are
//! marked in a seen-set indexed by Lehmer rank. The streaming verifier
//! keeps the first `n - 1` symbols for the wrap-around windows and the last
//! `n` symbols as the current window.

use std::collections::VecDeque;
use std::fmt;

use crate::pattern::{factorial, lehmer_rank};

/// Largest `n` accepted; the seen-set for 12 is 60 MB.
pub const MAX_N: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailureReason {
    /// The word length differs from `n!`. Index is the length.
    Length,
    /// Symbol outside `0..=n`. Index is the symbol position.
    SymbolOutOfRange(u8),
    /// A window repeats a symbol. Index is the window start.
    RepeatedSymbol,
    /// A window repeats an earlier window's pattern. Index is the window start.
    DuplicatePattern,
    /// `n` outside the supported range.
    UnsupportedN,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Failure {
    pub index: u64,
    pub reason: FailureReason,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.reason {
            FailureReason::Length => write!(f, "word has length {}", self.index),
            FailureReason::SymbolOutOfRange(s) => {
                write!(
                    f,
                    "symbol {s} at index {} is outside the alphabet",
                    self.index
                )
            }
            FailureReason::RepeatedSymbol => {
                write!(f, "window at index {} repeats a symbol", self.index)
            }
            FailureReason::DuplicatePattern => {
                write!(
                    f,
                    "window at index {} repeats an earlier pattern",
                    self.index
                )
            }
            FailureReason::UnsupportedN => write!(f, "n = {} is not supported", self.index),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub n: usize,
    pub valid: bool,
    pub length_ok: bool,
    pub alphabet_ok: bool,
    /// First failure in scan order.
    pub first_failure: Option<Failure>,
    /// Distinct window patterns marked.
    pub patterns_seen: u64,
}

/// Push-style verifier holding `O(n)` symbols plus the seen-set.
pub struct StreamVerifier {
    n: usize,
    head: Vec<u8>,
    window: VecDeque<u8>,
    seen: Vec<u64>,
    len: u64,
    alphabet_ok: bool,
    patterns_seen: u64,
    first_failure: Option<Failure>,
}

impl StreamVerifier {
    /// `n` must lie in `1..=MAX_N`; otherwise the verdict is a failure.
    pub fn new(n: usize) -> Self {
        let supported = (1..=MAX_N).contains(&n);
        let bits = if supported { factorial(n) } else { 0 };
        StreamVerifier {
            n,
            head: Vec::with_capacity(n),
            window: VecDeque::with_capacity(n + 1),
            seen: vec![0; bits.div_ceil(64) as usize],
            len: 0,
            alphabet_ok: true,
            patterns_seen: 0,
            first_failure: (!supported).then_some(Failure {
                index: n as u64,
                reason: FailureReason::UnsupportedN,
            }),
        }
    }

    fn fail(&mut self, index: u64, reason: FailureReason) {
        if self.first_failure.is_none() {
            self.first_failure = Some(Failure { index, reason });
        }
    }

    fn check_window(&mut self, start: u64, window: &[u8]) {
        let mut mask = 0u64;
        for &s in window {
            // symbols >= 63 share a bit; they are already alphabet failures
            let bit = 1u64 << (s as u32).min(63);
            if mask & bit != 0 {
                self.fail(start, FailureReason::RepeatedSymbol);
                return;
            }
            mask |= bit;
        }
        let rank = lehmer_rank(window);
        let (word, bit) = ((rank / 64) as usize, rank % 64);
        if self.seen[word] & (1 << bit) != 0 {
            self.fail(start, FailureReason::DuplicatePattern);
        } else {
            self.seen[word] |= 1 << bit;
            self.patterns_seen += 1;
        }
    }

    pub fn push(&mut self, symbol: u8) {
        let n = self.n;
        if !(1..=MAX_N).contains(&n) {
            self.len += 1;
            return;
        }
        if symbol as usize > n {
            self.alphabet_ok = false;
            self.fail(self.len, FailureReason::SymbolOutOfRange(symbol));
        }
        if self.head.len() < n - 1 {
            self.head.push(symbol);
        }
        self.window.push_back(symbol);
        if self.window.len() > n {
            self.window.pop_front();
        }
        self.len += 1;
        if self.window.len() == n {
            let start = self.len - n as u64;
            let (a, b) = self.window.as_slices();
            let mut buf = [0u8; MAX_N];
            buf[..a.len()].copy_from_slice(a);
            buf[a.len()..n].copy_from_slice(b);
            self.check_window(start, &buf[..n]);
        }
    }

    pub fn finish(mut self) -> VerifyReport {
        let n = self.n;
        let expected = if (1..=MAX_N).contains(&n) {
            factorial(n)
        } else {
            0
        };
        if expected > 0 && self.len > 0 {
            // windows starting in the last n - 1 positions wrap around
            let len = self.len as usize;
            let tail_from = len - self.window.len();
            let symbol = |p: usize| {
                if p >= tail_from {
                    self.window[p - tail_from]
                } else {
                    self.head[p]
                }
            };
            let wraps: Vec<(u64, Vec<u8>)> = (len.saturating_sub(n - 1)..len)
                .map(|s| (s as u64, (0..n).map(|j| symbol((s + j) % len)).collect()))
                .collect();
            for (start, w) in wraps {
                self.check_window(start, &w);
            }
        }
        let length_ok = self.len == expected && expected > 0;
        if !length_ok {
            self.fail(self.len, FailureReason::Length);
        }
        let valid = length_ok
            && self.alphabet_ok
            && self.first_failure.is_none()
            && self.patterns_seen == expected;
        VerifyReport {
            n,
            valid,
            length_ok,
            alphabet_ok: self.alphabet_ok,
            first_failure: self.first_failure,
            patterns_seen: self.patterns_seen,
        }
    }
}

/// Verify a word held in memory. Scans in the same order as
/// [`StreamVerifier`] so both report the same first failure.
pub fn verify(n: usize, word: &[u8]) -> VerifyReport {
    let mut first_failure = None;
    let mut fail = |index: usize, reason| {
        first_failure.get_or_insert(Failure {
            index: index as u64,
            reason,
        });
    };
    if !(1..=MAX_N).contains(&n) {
        fail(n, FailureReason::UnsupportedN);
        return VerifyReport {
            n,
            valid: false,
            length_ok: false,
            alphabet_ok: true,
            first_failure,
            patterns_seen: 0,
        };
    }
    let expected = factorial(n);
    let len = word.len();
    let mut seen = vec![false; expected as usize];
    let mut patterns_seen = 0u64;
    let mut alphabet_ok = true;
    let mut window = vec![0u8; n];
    let mut check = |start: usize, fail: &mut dyn FnMut(usize, FailureReason)| {
        for j in 0..n {
            window[j] = word[(start + j) % len];
        }
        let distinct = (0..n).all(|i| (i + 1..n).all(|j| window[i] != window[j]));
        if !distinct {
            fail(start, FailureReason::RepeatedSymbol);
            return;
        }
        let rank = lehmer_rank(&window) as usize;
        if std::mem::replace(&mut seen[rank], true) {
            fail(start, FailureReason::DuplicatePattern);
        } else {
            patterns_seen += 1;
        }
    };
    for (p, &s) in word.iter().enumerate() {
        if s as usize > n {
            alphabet_ok = false;
            fail(p, FailureReason::SymbolOutOfRange(s));
        }
        if p + 1 >= n {
            check(p + 1 - n, &mut fail);
        }
    }
    for start in len.saturating_sub(n - 1)..len {
        check(start, &mut fail);
    }
    let length_ok = len as u64 == expected;
    if !length_ok {
        fail(len, FailureReason::Length);
    }
    VerifyReport {
        n,
        valid: length_ok && alphabet_ok && first_failure.is_none() && patterns_seen == expected,
        length_ok,
        alphabet_ok,
        first_failure,
        patterns_seen,
    }
}

/// Verify symbols as they arrive.
pub fn verify_stream(n: usize, source: impl IntoIterator<Item = u8>) -> VerifyReport {
    let mut v = StreamVerifier::new(n);
    for s in source {
        v.push(s);
    }
    v.finish()
}
