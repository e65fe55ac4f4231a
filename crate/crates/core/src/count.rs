//! Counting universal cycles.
//!
//! `U(n)` is the number of words of length `n!` over `0..=n` whose first
//! `n` symbols are increasing and whose cyclic windows realize every
//! pattern of `S_n` once. Known bounds:
//!
//! ```text
//! 420^((n-1)!/24) <= U(n) <= (n+1) * 2^(n! - n)
//! ```
//!
//! The upper bound counts the `n + 1` increasing first windows and then two
//! choices for every later symbol (it must avoid the previous `n - 1`). The
//! lower bound comes from counting link trees; it is stated for `n >= 5`.
//!
//! This module evaluates both bounds exactly, counts `U(3)` and `U(4)` by
//! exhaustive search, counts spanning trees by the matrix-tree theorem, and
//! checks that distinct base trees give distinct extended trees.
//!
//! The factor 420 is the number of base trees found inside one small
//! graph: see [`augmented_base_graphs`](crate::treebuild::augmented_base_graphs)
//! and [`valid_spanning_trees`].

use std::io::BufRead;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::pattern::{factorial, lehmer_rank};
use crate::treebuild::{check_properties, extend_mixed, LinkTree};

/// Largest `n` whose bounds are materialized; the upper bound for 11 has
/// about 40 million bits.
pub const MAX_BOUNDS_N: usize = 11;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub n: usize,
    /// `420^((n-1)!/24)`, only for `n >= 5`.
    pub lower: Option<BigUint>,
    /// `(n+1) * 2^(n! - n)`.
    pub upper: BigUint,
}

pub fn bounds(n: usize) -> Result<BoundsReport> {
    if n < 3 {
        return Err(Error::UnsupportedN {
            n,
            reason: "bounds are stated for n >= 3",
        });
    }
    if n > MAX_BOUNDS_N {
        return Err(Error::UnsupportedN {
            n,
            reason: "bound too large to materialize",
        });
    }
    let lower = (n >= 5).then(|| {
        let exponent = factorial(n - 1) / 24;
        BigUint::from(420u32).pow(exponent as u32)
    });
    let upper = BigUint::from(n as u64 + 1) << (factorial(n) - n as u64);
    Ok(BoundsReport { n, lower, upper })
}

/// Exhaustive count of normalized universal cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub n: usize,
    pub count: u64,
    /// Every counted word, in lexicographic order.
    pub words: Vec<Vec<u8>>,
}

/// Depth-first search over words with an increasing first window, two
/// choices per later symbol, pruned on repeated patterns. Only `n = 3, 4`.
pub fn enumerate_ucycles(n: usize) -> Result<Census> {
    if !(3..=4).contains(&n) {
        return Err(Error::UnsupportedN {
            n,
            reason: "exhaustive census only for n = 3, 4",
        });
    }
    let total = factorial(n) as usize;
    let mut words = Vec::new();
    for omitted in (0..=n as u8).rev() {
        let mut word: Vec<u8> = (0..=n as u8).filter(|&s| s != omitted).collect();
        let mut seen = vec![false; total];
        seen[0] = true;
        extend_word(n, total, &mut word, &mut seen, &mut words);
    }
    words.sort();
    Ok(Census {
        n,
        count: words.len() as u64,
        words,
    })
}

fn extend_word(
    n: usize,
    total: usize,
    word: &mut Vec<u8>,
    seen: &mut [bool],
    out: &mut Vec<Vec<u8>>,
) {
    if word.len() == total {
        // the n - 1 windows that wrap around
        let mut marked = Vec::new();
        let mut ok = true;
        for start in total - n + 1..total {
            let w: Vec<u8> = (0..n).map(|j| word[(start + j) % total]).collect();
            let distinct = (0..n).all(|i| (i + 1..n).all(|j| w[i] != w[j]));
            let rank = lehmer_rank(&w) as usize;
            if !distinct || seen[rank] {
                ok = false;
                break;
            }
            seen[rank] = true;
            marked.push(rank);
        }
        if ok {
            out.push(word.clone());
        }
        for r in marked {
            seen[r] = false;
        }
        return;
    }
    let recent = &word[word.len() + 1 - n..];
    let choices: Vec<u8> = (0..=n as u8).filter(|s| !recent.contains(s)).collect();
    for s in choices {
        word.push(s);
        let rank = lehmer_rank(&word[word.len() - n..]) as usize;
        if !seen[rank] {
            seen[rank] = true;
            extend_word(n, total, word, seen, out);
            seen[rank] = false;
        }
        word.pop();
    }
}

/// Undirected multigraph on vertices `0..vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= vertices || v >= vertices) {
            return Err(Error::parse(0, format!("edge ({u}, {v}) out of range")));
        }
        Ok(Multigraph { vertices, edges })
    }

    pub fn complete(k: usize) -> Self {
        let edges = (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .collect();
        Multigraph { vertices: k, edges }
    }

    /// Edge-list text: a header `p <vertices> <edges>` then one `u v` pair
    /// per line with 1-based vertex ids. Blank lines and lines starting with
    /// `c` or `#` are comments.
    pub fn parse_edge_list<R: BufRead>(input: R) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (i, line) in input.lines().enumerate() {
            let lineno = i + 1;
            let line = line.map_err(|e| Error::parse(lineno, e.to_string()))?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::parse(lineno, format!("bad number {s:?}")))
            };
            match (header, fields.as_slice()) {
                (None, ["p", v, e]) => header = Some((num(v)?, num(e)?)),
                (Some((nv, _)), [u, v]) => {
                    let (u, v) = (num(u)?, num(v)?);
                    if u == 0 || v == 0 || u > nv || v > nv {
                        return Err(Error::parse(
                            lineno,
                            format!("vertex out of range 1..={nv}"),
                        ));
                    }
                    edges.push((u - 1, v - 1));
                }
                _ => return Err(Error::parse(lineno, format!("unexpected line {line:?}"))),
            }
        }
        let (nv, ne) = header.ok_or_else(|| Error::parse(0, "missing `p` header"))?;
        if edges.len() != ne {
            return Err(Error::parse(
                0,
                format!("header says {ne} edges, found {}", edges.len()),
            ));
        }
        Multigraph::new(nv, edges)
    }
}

/// Number of spanning trees, as the determinant of the reduced Laplacian
/// computed by fraction-free (Bareiss) elimination. Loops are ignored;
/// parallel edges count separately. Disconnected graphs give 0.
pub fn spanning_tree_count(g: &Multigraph) -> BigUint {
    let n = g.vertices;
    if n <= 1 {
        return BigUint::one();
    }
    let mut lap = vec![vec![0i64; n]; n];
    for &(u, v) in &g.edges {
        if u != v {
            lap[u][u] += 1;
            lap[v][v] += 1;
            lap[u][v] -= 1;
            lap[v][u] -= 1;
        }
    }
    // drop the last row and column
    let m = n - 1;
    let mut a: Vec<Vec<BigInt>> = (0..m)
        .map(|i| (0..m).map(|j| BigInt::from(lap[i][j])).collect())
        .collect();
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..m {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..m).find(|&i| !a[i][k].is_zero()) else {
                return BigUint::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..m {
            for j in k + 1..m {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let det = if sign < 0 { -prev } else { prev };
    debug_assert!(!det.is_negative());
    det.to_biguint().unwrap_or_default()
}

/// Spanning trees of a small link graph, checked one by one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpanningTreeCensus {
    pub spanning_trees: u64,
    /// Trees with distinct splice positions and all seven properties.
    pub valid: u64,
}

/// Largest `E - V + 1` accepted by [`spanning_subtrees`].
pub const MAX_EXTRA_EDGES: usize = 4;

/// Every spanning tree of `graph`, a connected link graph with at most
/// [`MAX_EXTRA_EDGES`] edges beyond a tree, found by dropping each
/// combination of surplus edges.
pub fn spanning_subtrees(graph: &LinkTree) -> Result<Vec<LinkTree>> {
    let (v, e) = (graph.len(), graph.edges().len());
    if graph.components() != 1 {
        return Err(Error::NotATree("graph is disconnected".into()));
    }
    let extra = e + 1 - v;
    if extra > MAX_EXTRA_EDGES {
        return Err(Error::UnusableTree(format!(
            "{extra} surplus edges, at most {MAX_EXTRA_EDGES}"
        )));
    }
    let mut trees = Vec::new();
    let mut drop: Vec<usize> = (0..extra).collect();
    loop {
        let edges = graph
            .edges()
            .iter()
            .enumerate()
            .filter(|(i, _)| !drop.contains(i))
            .map(|(_, &edge)| edge)
            .collect();
        let tree = LinkTree::new(graph.n(), graph.vertices().to_vec(), edges)?;
        if tree.is_tree() {
            trees.push(tree);
        }
        // next combination of dropped edges
        let Some(i) = (0..extra).rev().find(|&i| drop[i] < e - extra + i) else {
            break;
        };
        drop[i] += 1;
        for j in i + 1..extra {
            drop[j] = drop[j - 1] + 1;
        }
    }
    Ok(trees)
}

/// Count the spanning trees of `graph` and those usable as a base tree.
pub fn valid_spanning_trees(graph: &LinkTree) -> Result<SpanningTreeCensus> {
    let trees = spanning_subtrees(graph)?;
    let mut valid = 0;
    for tree in &trees {
        if tree.validate().is_ok() && check_properties(tree)?.all() {
            valid += 1;
        }
    }
    Ok(SpanningTreeCensus {
        spanning_trees: trees.len() as u64,
        valid,
    })
}

/// Result of [`amplification_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Amplification {
    /// `extend(first) != extend(second)`.
    pub extensions_differ: bool,
    /// Number of mixed-copy variants built, `2^n`.
    pub variants: usize,
    /// All variants pairwise distinct.
    pub variants_distinct: bool,
    /// All variants are valid trees with the seven properties.
    pub variants_valid: bool,
}

impl Amplification {
    pub fn holds(&self) -> bool {
        self.extensions_differ && self.variants_distinct && self.variants_valid
    }
}

/// Build every extension that places `first` or `second` in each of the
/// `n` copies and check the results are distinct valid trees.
pub fn amplification_check(first: &LinkTree, second: &LinkTree) -> Result<Amplification> {
    if first.canonical() == second.canonical() {
        return Err(Error::IdenticalTrees);
    }
    if first.n() != second.n() {
        return Err(Error::InductionInvariantViolated(
            "trees for different n".into(),
        ));
    }
    let n = first.n();
    if n > 6 {
        return Err(Error::UnsupportedN {
            n,
            reason: "2^n variants; use n = 5 or 6",
        });
    }
    let mut seen = std::collections::HashSet::new();
    let mut variants_valid = true;
    let mut pure = [None, None];
    for mask in 0..1usize << n {
        let copies: Vec<&LinkTree> = (0..n)
            .map(|k| if mask >> k & 1 == 0 { first } else { second })
            .collect();
        let tree = extend_mixed(&copies)?;
        variants_valid &= tree.validate().is_ok() && check_properties(&tree)?.all();
        let canon = tree.canonical();
        if mask == 0 {
            pure[0] = Some(canon.clone());
        } else if mask == (1 << n) - 1 {
            pure[1] = Some(canon.clone());
        }
        seen.insert(canon);
    }
    Ok(Amplification {
        extensions_differ: pure[0] != pure[1],
        variants: 1 << n,
        variants_distinct: seen.len() == 1 << n,
        variants_valid,
    })
}
