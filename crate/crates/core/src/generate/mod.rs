//! Universal cycle generation.
//!
//! A full link tree is compiled into a [`SpliceTable`]: for every tree edge
//! with link position `t`, the rotation-`t` states of the two cycles swap
//! successors. The merged cycle is then walked by a successor rule over
//! states `(cycle, rotation)`: follow the table entry if there is one,
//! otherwise advance the rotation. The word is the sequence of first
//! symbols of the visited tuples, so its cyclic windows are exactly the
//! visited tuples.
//!
//! The walk starts at `(1 2 ... n-1, label 1)` with rotation 0, whose tuple
//! `0 2 3 ... n` is increasing; generated words are therefore normalized
//! with an increasing first window.

mod format;

pub use format::{parse_word, SymbolReader, WordFormat, WordWriter};

use std::fmt;

use crate::error::{Error, Result};
use crate::pattern::{factorial, Perm, MAX_LEN};
use crate::treebuild::{build_tree, LinkTree};

/// Hand-built words for the sizes below the induction.
pub const WORD_3: &str = "012032";
pub const WORD_4: &str = "012301423042103421302143";

/// Largest `n` the generator accepts.
pub const MAX_N: usize = 12;

/// Splice lookup keyed by (tree vertex index, rotation). Entries are grouped
/// per vertex; a vertex has at most `n - 1` of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpliceTable {
    offsets: Vec<u32>,
    entries: Vec<(u8, u32)>,
}

impl SpliceTable {
    /// Target cycle of the spliced edge leaving `(vertex, rotation)`; the
    /// target rotation is `rotation + 1`.
    #[inline]
    pub fn get(&self, vertex: usize, rotation: usize) -> Option<usize> {
        let lo = self.offsets[vertex] as usize;
        let hi = self.offsets[vertex + 1] as usize;
        self.entries[lo..hi]
            .iter()
            .find(|&&(t, _)| t as usize == rotation)
            .map(|&(_, to)| to as usize)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(from vertex, rotation, to vertex)` triples.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..self.offsets.len() - 1).flat_map(move |v| {
            let range = self.offsets[v] as usize..self.offsets[v + 1] as usize;
            self.entries[range]
                .iter()
                .map(move |&(t, to)| (v, t as usize, to as usize))
        })
    }
}

/// Two entries per tree edge. Fails if two edges would replace the same
/// cycle edge.
pub fn compile_splices(tree: &LinkTree) -> Result<SpliceTable> {
    let specs = tree.link_specs()?;
    let mut pairs: Vec<(usize, u8, u32)> = Vec::with_capacity(2 * specs.len());
    for (&(i, j), spec) in tree.edges().iter().zip(&specs) {
        let t = spec.position as u8;
        pairs.push((i, t, j as u32));
        pairs.push((j, t, i as u32));
    }
    pairs.sort_unstable();
    let mut offsets = vec![0u32; tree.len() + 1];
    for w in pairs.windows(2) {
        if w[0].0 == w[1].0 && w[0].1 == w[1].1 {
            return Err(Error::SplicePositionClash {
                vertex: w[0].0,
                position: w[0].1,
            });
        }
    }
    for &(v, _, _) in &pairs {
        offsets[v + 1] += 1;
    }
    for v in 0..tree.len() {
        offsets[v + 1] += offsets[v];
    }
    let entries = pairs.into_iter().map(|(_, t, to)| (t, to)).collect();
    Ok(SpliceTable { offsets, entries })
}

/// A universal cycle for `S_n` over `0..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UWord {
    n: usize,
    symbols: Vec<u8>,
}

impl UWord {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<u8> {
        self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// The word in the given format, newline-terminated.
    pub fn render(&self, format: WordFormat) -> Result<String> {
        let mut buf = Vec::with_capacity(self.symbols.len() * 3);
        let mut w = WordWriter::new(&mut buf, format, self.n)?;
        for &s in &self.symbols {
            w.push(s).expect("writing to memory");
        }
        w.finish().expect("writing to memory");
        Ok(String::from_utf8(buf).expect("ascii"))
    }
}

impl fmt::Display for UWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let format = if self.n <= 9 {
            WordFormat::Compact
        } else {
            WordFormat::Spaced
        };
        f.write_str(self.render(format).map_err(|_| fmt::Error)?.trim_end())
    }
}

impl fmt::Debug for UWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UWord(n={}, {self})", self.n)
    }
}

/// Walks the merged cycle of a full link tree.
#[derive(Clone, Debug)]
pub struct Generator {
    tree: LinkTree,
    splices: SpliceTable,
    start: usize,
}

impl Generator {
    /// Builds the link tree for `n >= 5`.
    pub fn new(n: usize) -> Result<Self> {
        check_n(n)?;
        if n < 5 {
            return Err(Error::UnsupportedN {
                n,
                reason: "the tree construction starts at n = 5",
            });
        }
        Generator::from_tree(build_tree(n)?)
    }

    /// Any full link tree works: one vertex per permutation, a tree of
    /// linkable edges, and the identity labeled 1.
    pub fn from_tree(tree: LinkTree) -> Result<Self> {
        tree.validate()?;
        let m = tree.n() - 1;
        let index = tree
            .rank_index()
            .ok_or_else(|| Error::UnusableTree("not one vertex per permutation".into()))?;
        let start = index[0] as usize;
        debug_assert_eq!(tree.vertices()[start].perm(), &Perm::identity(m));
        if tree.vertices()[start].label() != 1 {
            return Err(Error::UnusableTree(
                "identity does not carry label 1".into(),
            ));
        }
        let splices = compile_splices(&tree)?;
        Ok(Generator {
            tree,
            splices,
            start,
        })
    }

    pub fn n(&self) -> usize {
        self.tree.n()
    }

    pub fn tree(&self) -> &LinkTree {
        &self.tree
    }

    pub fn splices(&self) -> &SpliceTable {
        &self.splices
    }

    /// Visit the `n!` states `(vertex index, rotation)` of the merged cycle
    /// in order, checking that the walk closes exactly at the end.
    pub fn walk(&self, mut visit: impl FnMut(usize, usize)) -> Result<u64> {
        let n = self.n();
        let total = factorial(n);
        let (mut v, mut k) = (self.start, 0usize);
        for step in 0..total {
            if step > 0 && v == self.start && k == 0 {
                return Err(Error::CycleMergeFailure {
                    closed_at: Some(step),
                    expected: total,
                });
            }
            visit(v, k);
            if let Some(to) = self.splices.get(v, k) {
                v = to;
            }
            k += 1;
            if k == n {
                k = 0;
            }
        }
        if v != self.start || k != 0 {
            return Err(Error::CycleMergeFailure {
                closed_at: None,
                expected: total,
            });
        }
        Ok(total)
    }

    /// Emit the word symbol by symbol. Returns `n!`.
    pub fn stream(&self, mut sink: impl FnMut(u8)) -> Result<u64> {
        let vertices = self.tree.vertices();
        self.walk(|v, k| sink(vertices[v].symbol_at(k)))
    }

    pub fn word(&self) -> Result<UWord> {
        let mut symbols = Vec::with_capacity(factorial(self.n()) as usize);
        self.stream(|s| symbols.push(s))?;
        Ok(UWord {
            n: self.n(),
            symbols,
        })
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::UnsupportedN {
            n,
            reason: "universal cycles over 0..=n need n >= 3",
        });
    }
    if n > MAX_N || n >= MAX_LEN {
        return Err(Error::UnsupportedN {
            n,
            reason: "too large",
        });
    }
    Ok(())
}

fn small_word(n: usize) -> Option<&'static str> {
    match n {
        3 => Some(WORD_3),
        4 => Some(WORD_4),
        _ => None,
    }
}

/// A universal cycle for `S_n`, `n >= 3`.
pub fn generate(n: usize) -> Result<UWord> {
    check_n(n)?;
    match small_word(n) {
        Some(w) => Ok(UWord {
            n,
            symbols: w.bytes().map(|b| b - b'0').collect(),
        }),
        None => Generator::new(n)?.word(),
    }
}

/// Same symbols as [`generate`], passed to `sink` without keeping the word.
pub fn stream(n: usize, mut sink: impl FnMut(u8)) -> Result<u64> {
    check_n(n)?;
    match small_word(n) {
        Some(w) => {
            w.bytes().for_each(|b| sink(b - b'0'));
            Ok(w.len() as u64)
        }
        None => Generator::new(n)?.stream(sink),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::{cycle_vertex, LabeledVertex};
    use crate::treebuild::find_base_tree;
    use std::collections::HashSet;

    #[test]
    fn small_words() {
        assert_eq!(generate(3).unwrap().to_string(), "012032");
        assert_eq!(generate(4).unwrap().to_string(), "012301423042103421302143");
        let mut got = Vec::new();
        assert_eq!(stream(3, |s| got.push(s)).unwrap(), 6);
        assert_eq!(got, [0, 1, 2, 0, 3, 2]);
        assert!(matches!(generate(2), Err(Error::UnsupportedN { n: 2, .. })));
        assert!(matches!(generate(13), Err(Error::UnsupportedN { .. })));
    }

    #[test]
    fn single_edge_table() {
        let a = LabeledVertex::parse("42135", 2).unwrap();
        let b = LabeledVertex::parse("23145", 5).unwrap();
        let t = LinkTree::new(6, vec![a, b], vec![(0, 1)]).unwrap();
        let table = compile_splices(&t).unwrap();
        assert_eq!(table.iter().collect::<Vec<_>>(), vec![(0, 1, 1), (1, 1, 0)]);
        assert_eq!(table.get(0, 1), Some(1));
        assert_eq!(table.get(0, 2), None);

        let lone =
            LinkTree::new(6, vec![LabeledVertex::parse("42135", 2).unwrap()], vec![]).unwrap();
        assert!(compile_splices(&lone).unwrap().is_empty());
    }

    #[test]
    fn clashing_positions_are_rejected() {
        // a doubled edge reuses both positions
        let a = LabeledVertex::parse("1234", 1).unwrap();
        let b = LabeledVertex::parse("2134", 3).unwrap();
        let t = LinkTree::new(5, vec![a, b], vec![(0, 1), (1, 0)]).unwrap();
        assert!(matches!(
            compile_splices(&t),
            Err(Error::SplicePositionClash { .. })
        ));
    }

    #[test]
    fn base_table_size() {
        let t = find_base_tree().unwrap();
        assert_eq!(compile_splices(&t).unwrap().len(), 46);
    }

    #[test]
    fn walk_visits_each_state_once_and_windows_match() {
        for n in 5..=7 {
            let g = Generator::new(n).unwrap();
            let word = g.word().unwrap();
            let w = word.symbols();
            let mut seen = HashSet::new();
            let mut i = 0;
            g.walk(|v, k| {
                assert!(seen.insert((v, k)));
                let tuple = cycle_vertex(&g.tree().vertices()[v], k);
                let window: Vec<u8> = (0..n).map(|j| w[(i + j) % w.len()]).collect();
                assert_eq!(tuple.values(), &window[..], "n={n} i={i}");
                i += 1;
            })
            .unwrap();
            assert_eq!(seen.len(), (1..=n).product::<usize>());
            assert!(w[..n].windows(2).all(|p| p[0] < p[1]));
        }
    }

    #[test]
    fn generator_rejects_partial_trees() {
        let a = LabeledVertex::parse("42135", 2).unwrap();
        let b = LabeledVertex::parse("23145", 5).unwrap();
        let t = LinkTree::new(6, vec![a, b], vec![(0, 1)]).unwrap();
        assert!(matches!(
            Generator::from_tree(t),
            Err(Error::UnusableTree(_))
        ));
    }

    #[test]
    fn deterministic() {
        assert_eq!(generate(6).unwrap(), generate(6).unwrap());
    }
}
