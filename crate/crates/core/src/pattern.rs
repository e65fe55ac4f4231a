//! Order-isomorphism primitives.
//!
//! A [`Perm`] is an element of `S_m` in one-line notation with values
//! `1..=m`. A [`Tuple`] is a sequence of distinct non-negative symbols, the
//! shape of a vertex of the transition graph and of a window of a word.
//! Two tuples are order-isomorphic when every pairwise comparison agrees;
//! [`pattern`] maps a tuple to the unique permutation in its class.
//!
//! Permutations are ranked by their Lehmer code (factorial number system),
//! which coincides with lexicographic order. This ranking is an internal
//! indexing convention only: it sizes the seen-sets of the verifier and the
//! census, and fixes the search order of the base-tree search.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest supported sequence length. Symbols and labels fit in a `u8` and
/// every rank fits in a `u64` well below this bound.
pub const MAX_LEN: usize = 16;

pub(crate) type Values = SmallVec<[u8; MAX_LEN]>;

/// `m!` for `m <= 20`.
pub fn factorial(m: usize) -> u64 {
    (1..=m as u64).product()
}

/// A permutation of `1..=m` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Values);

impl Perm {
    pub fn new(values: &[u8]) -> Result<Self> {
        let m = values.len();
        if m > MAX_LEN {
            return Err(Error::InvalidPerm {
                values: values.to_vec(),
                len: m,
            });
        }
        let mut seen = 0u32;
        for &v in values {
            if v == 0 || v as usize > m || seen & (1 << v) != 0 {
                return Err(Error::InvalidPerm {
                    values: values.to_vec(),
                    len: m,
                });
            }
            seen |= 1 << v;
        }
        Ok(Perm(Values::from_slice(values)))
    }

    pub(crate) fn from_values_unchecked(values: Values) -> Self {
        debug_assert!(Perm::new(&values).is_ok(), "{values:?}");
        Perm(values)
    }

    /// `1 2 ... m`
    pub fn identity(m: usize) -> Self {
        Perm((1..=m as u8).collect())
    }

    /// The permutation of `1..=m` with Lehmer rank `rank`.
    pub fn unrank(m: usize, mut rank: u64) -> Result<Self> {
        if m > MAX_LEN || rank >= factorial(m) {
            return Err(Error::InvalidPerm {
                values: vec![],
                len: m,
            });
        }
        let mut pool: Values = (1..=m as u8).collect();
        let mut out = Values::new();
        for i in (0..m).rev() {
            let f = factorial(i);
            let digit = (rank / f) as usize;
            rank %= f;
            out.push(pool.remove(digit));
        }
        Ok(Perm(out))
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The tuple `0 a_1 ... a_m`.
    pub fn with_leading_zero(&self) -> Tuple {
        let mut v = Values::with_capacity(self.len() + 1);
        v.push(0);
        v.extend_from_slice(&self.0);
        Tuple(v)
    }

    /// Lehmer rank, see [`perm_rank`].
    pub fn rank(&self) -> u64 {
        lehmer_rank(&self.0)
    }

    /// All of `S_m` in rank order.
    pub fn all(m: usize) -> impl Iterator<Item = Perm> {
        (0..factorial(m)).map(move |r| Perm::unrank(m, r).expect("rank in range"))
    }
}

impl Deref for Perm {
    type Target = [u8];
    fn deref(&self) -> &[u8] {
        &self.0
    }
}

/// A sequence of distinct non-negative symbols.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tuple(Values);

impl Tuple {
    pub fn new(values: &[u8]) -> Result<Self> {
        if values.len() > MAX_LEN {
            return Err(Error::LengthMismatch(values.len(), MAX_LEN));
        }
        check_distinct(values)?;
        Ok(Tuple(Values::from_slice(values)))
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    /// True when every symbol is at most `bound`.
    pub fn within(&self, bound: u8) -> bool {
        self.0.iter().all(|&v| v <= bound)
    }
}

impl Deref for Tuple {
    type Target = [u8];
    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl From<&Perm> for Tuple {
    fn from(p: &Perm) -> Self {
        Tuple(p.0.clone())
    }
}

fn check_distinct(values: &[u8]) -> Result<()> {
    let mut seen = [false; 256];
    for &v in values {
        if std::mem::replace(&mut seen[v as usize], true) {
            return Err(Error::DuplicateValue(v));
        }
    }
    Ok(())
}

/// Standardize `values` to the unique permutation order-isomorphic to it:
/// each value is replaced by its rank, the smallest becoming 1.
pub fn pattern(values: &[u8]) -> Result<Perm> {
    check_distinct(values)?;
    if values.len() > MAX_LEN {
        return Err(Error::LengthMismatch(values.len(), MAX_LEN));
    }
    let out = values
        .iter()
        .map(|&v| 1 + values.iter().filter(|&&w| w < v).count() as u8)
        .collect();
    Ok(Perm(out))
}

pub fn order_isomorphic(a: &[u8], b: &[u8]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    Ok(pattern(a)? == pattern(b)?)
}

/// Lehmer rank of a permutation: a bijection `S_m -> 0..m!` with the
/// identity at 0 and lexicographic order preserved.
pub fn perm_rank(p: &[u8]) -> Result<u64> {
    Perm::new(p).map(|p| p.rank())
}

/// Lehmer rank of the pattern of a slice of distinct values. Does not check
/// distinctness.
pub fn lehmer_rank(values: &[u8]) -> u64 {
    let m = values.len();
    let mut rank = 0u64;
    for i in 0..m {
        let smaller_right = values[i + 1..].iter().filter(|&&w| w < values[i]).count() as u64;
        rank = rank * (m - i) as u64 + smaller_right;
    }
    rank
}

/// Apply `s_x` to one symbol: values below `x` are kept, the rest move up by one.
#[inline]
pub fn shift_value(x: u8, v: u8) -> u8 {
    if v < x {
        v
    } else {
        v + 1
    }
}

/// Coordinatewise `s_x`. The result never contains `x` and is
/// order-isomorphic to the input.
pub fn shift(x: u8, t: &Tuple) -> Tuple {
    Tuple(t.0.iter().map(|&v| shift_value(x, v)).collect())
}

/// Left rotation by `k` places: `rotate(a_1 ... a_m, 1) = a_2 ... a_m a_1`.
pub fn rotate(t: &Tuple, k: usize) -> Tuple {
    let mut v = t.0.clone();
    if !v.is_empty() {
        let k = k % v.len();
        v.rotate_left(k);
    }
    Tuple(v)
}

fn fmt_symbols(values: &[u8], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if values.iter().all(|&v| v < 10) {
        for v in values {
            write!(f, "{v}")?;
        }
        Ok(())
    } else {
        let mut first = true;
        for v in values {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_symbols(&self.0, f)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm({self})")
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_symbols(&self.0, f)
    }
}

impl fmt::Debug for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tuple({self})")
    }
}

/// Parse either compact digits (`"42135"`) or whitespace/comma separated
/// numbers (`"4 2 1 3 5"`).
pub(crate) fn parse_symbols(s: &str) -> std::result::Result<Vec<u8>, String> {
    let s = s.trim();
    if s.contains(|c: char| c.is_whitespace() || c == ',') {
        s.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u8>().map_err(|e| format!("{t:?}: {e}")))
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| format!("not a digit: {c:?}"))
            })
            .collect()
    }
}

impl FromStr for Perm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let v = parse_symbols(s).map_err(|m| Error::parse(1, m))?;
        Perm::new(&v)
    }
}

impl FromStr for Tuple {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let v = parse_symbols(s).map_err(|m| Error::parse(1, m))?;
        Tuple::new(&v)
    }
}
