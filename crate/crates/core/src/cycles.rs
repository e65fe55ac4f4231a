//! The short cycles `C(a, x)`.
//!
//! For `a` in `S_{n-1}` and a label `x` in `1..=n`, the tuple
//! `shift(x, 0 a)` uses every symbol of `0..=n` except `x`. Its `n`
//! rotations form a directed `n`-cycle of the transition graph, since each
//! rotation overlaps the next in `n - 1` positions. Across all of `S_{n-1}`
//! these cycles are pairwise disjoint and, whatever the labels, contain one
//! representative of every pattern in `S_n`.
//!
//! Cycles are never materialized as tuple lists; a vertex is addressed by
//! its [`LabeledVertex`] and a rotation index.

use std::fmt;

use crate::error::{Error, Result};
use crate::pattern::{rotate, shift, shift_value, Perm, Tuple};

/// A vertex `(a, x)` of the link graph, naming the cycle `C(a, x)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledVertex {
    perm: Perm,
    label: u8,
}

impl LabeledVertex {
    /// `perm` is in `S_{n-1}`; `label` must lie in `1..=n`.
    pub fn new(perm: Perm, label: u8) -> Result<Self> {
        let max = perm.len() as u8 + 1;
        if label == 0 || label > max {
            return Err(Error::InvalidLabel { label, max });
        }
        Ok(LabeledVertex { perm, label })
    }

    /// Shorthand for tests and examples: `LabeledVertex::parse("42135", 2)`.
    pub fn parse(perm: &str, label: u8) -> Result<Self> {
        LabeledVertex::new(perm.parse()?, label)
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn label(&self) -> u8 {
        self.label
    }

    /// Cycle length, one more than the permutation length.
    pub fn order(&self) -> usize {
        self.perm.len() + 1
    }

    /// `shift(label, 0 a)`, the rotation-0 vertex.
    pub fn base(&self) -> Tuple {
        shift(self.label, &self.perm.with_leading_zero())
    }

    /// First symbol of the rotation-`k` vertex, i.e. position `k` of the base.
    #[inline]
    pub fn symbol_at(&self, k: usize) -> u8 {
        let k = k % self.order();
        if k == 0 {
            0
        } else {
            shift_value(self.label, self.perm[k - 1])
        }
    }
}

impl fmt::Display for LabeledVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.perm, self.label)
    }
}

impl fmt::Debug for LabeledVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The cycle `C(a, x)`: the `n` rotations of its base tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortCycle {
    source: LabeledVertex,
    base: Tuple,
}

impl ShortCycle {
    pub fn source(&self) -> &LabeledVertex {
        &self.source
    }

    pub fn base(&self) -> &Tuple {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.base.len()
    }

    /// Vertex at rotation `k`, taken mod `n`.
    pub fn vertex(&self, k: usize) -> Tuple {
        rotate(&self.base, k)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Tuple> + '_ {
        (0..self.order()).map(|k| self.vertex(k))
    }
}

pub fn short_cycle(v: &LabeledVertex) -> Result<ShortCycle> {
    let n = v.order();
    if n < 3 {
        return Err(Error::UnsupportedN {
            n,
            reason: "short cycles need n >= 3",
        });
    }
    // Re-check in case the vertex was built through a crate-internal path.
    let v = LabeledVertex::new(v.perm.clone(), v.label)?;
    let base = v.base();
    Ok(ShortCycle { source: v, base })
}

/// `rotate(shift(label, 0 a), k mod n)`.
pub fn cycle_vertex(v: &LabeledVertex, k: usize) -> Tuple {
    rotate(&v.base(), k)
}
