//! Link trees.
//!
//! A link tree for `n` is a tree whose vertices are labeled vertices
//! `(a, x)` with `a` in `S_{n-1}` and whose edges are linkable pairs. When
//! it holds exactly one vertex per permutation, splicing along every edge
//! joins all short cycles into a single cycle of length `n!`.
//!
//! Trees for `n >= 5` are built inductively. The base tree for `n = 5` is
//! found by a deterministic search ([`find_base_tree`]); each [`extend`]
//! step embeds `n` copies of `T_n` into the link graph for `n + 1` and
//! glues them together with two small surgeries. The step relies on seven
//! structural properties that it also re-establishes; see
//! [`check_properties`].

mod augment;
mod export;
mod search;

pub use augment::{augmented_base_graphs, AUGMENTING_EDGES};
pub use export::{parse_records, write_graphviz, write_records};
pub use search::{find_base_tree, find_base_tree_with, LabelOrder};

use std::collections::HashSet;

use crate::cycles::LabeledVertex;
use crate::error::{Error, Result};
use crate::linkage::{linkable, LinkSpec};
use crate::pattern::{factorial, Perm, Values, MAX_LEN};

/// Vertices and edges over `H_n`. Usually a tree; the embedded forest of
/// an induction step is also stored in this type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkTree {
    n: usize,
    vertices: Vec<LabeledVertex>,
    edges: Vec<(usize, usize)>,
}

/// Outcome of the seven structural checks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TreeProperties {
    /// One vertex per permutation of `S_{n-1}`.
    pub one_label_per_perm: bool,
    /// `(1 2 ... n-1, 1)` is present.
    pub identity_label_one: bool,
    /// `(2 3 ... k-1 1 k ... n-1, k)` is present for `3 <= k <= n`.
    pub hub_neighbours: bool,
    /// `(3 2 1 4 5 ... n-1, 2)` is present.
    pub reversed_prefix: bool,
    /// `(2 4 3 1 5 6 ... n-1, 3)` is present.
    pub bridge_anchor: bool,
    /// `v(3 1 2 4 5 ... n-1)` is a leaf.
    pub leaf_312: bool,
    /// `v(2 4 1 3 5 ... n-1)` is a leaf.
    pub leaf_2413: bool,
}

impl TreeProperties {
    pub fn all(&self) -> bool {
        self.as_array().iter().all(|&b| b)
    }

    pub fn as_array(&self) -> [bool; 7] {
        [
            self.one_label_per_perm,
            self.identity_label_one,
            self.hub_neighbours,
            self.reversed_prefix,
            self.bridge_anchor,
            self.leaf_312,
            self.leaf_2413,
        ]
    }
}

/// Component counts observed during one induction step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtendTrace {
    /// The `n` embedded copies.
    pub forest_components: usize,
    /// After the identity vertex is rewired to the hub neighbours.
    pub after_hub: usize,
    /// After the second surgery.
    pub after_bridge: usize,
}

impl LinkTree {
    /// Checks shapes and indices only; tree-ness and linkability are
    /// checked by [`LinkTree::validate`].
    pub fn new(n: usize, vertices: Vec<LabeledVertex>, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(v) = vertices.iter().find(|v| v.order() != n) {
            return Err(Error::NotATree(format!(
                "vertex {v} does not belong to H_{n}"
            )));
        }
        for &(i, j) in &edges {
            if i >= vertices.len() || j >= vertices.len() || i == j {
                return Err(Error::NotATree(format!("bad edge ({i}, {j})")));
            }
        }
        Ok(LinkTree { n, vertices, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[LabeledVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertices.len()];
        for &(i, j) in &self.edges {
            d[i] += 1;
            d[j] += 1;
        }
        d
    }

    /// Index of the first vertex carrying `perm`.
    pub fn find(&self, perm: &Perm) -> Option<usize> {
        self.vertices.iter().position(|v| v.perm() == perm)
    }

    pub fn components(&self) -> usize {
        let mut uf = UnionFind::new(self.vertices.len());
        for &(i, j) in &self.edges {
            uf.union(i, j);
        }
        uf.count
    }

    pub fn is_tree(&self) -> bool {
        !self.vertices.is_empty()
            && self.edges.len() + 1 == self.vertices.len()
            && self.components() == 1
    }

    /// Link data for every edge, in edge order.
    pub fn link_specs(&self) -> Result<Vec<LinkSpec>> {
        self.edges
            .iter()
            .enumerate()
            .map(|(e, &(i, j))| {
                linkable(&self.vertices[i], &self.vertices[j]).ok_or(Error::NonLinkableEdge(e))
            })
            .collect()
    }

    /// Full structural check: a tree, every edge linkable, and at each
    /// vertex the incident edges splice at pairwise distinct positions.
    pub fn validate(&self) -> Result<Vec<LinkSpec>> {
        if !self.is_tree() {
            return Err(Error::NotATree(format!(
                "{} vertices, {} edges, {} components",
                self.vertices.len(),
                self.edges.len(),
                self.components()
            )));
        }
        let specs = self.link_specs()?;
        let mut used: HashSet<(usize, usize)> = HashSet::with_capacity(2 * specs.len());
        for (&(i, j), spec) in self.edges.iter().zip(&specs) {
            for v in [i, j] {
                if !used.insert((v, spec.position)) {
                    return Err(Error::SplicePositionClash {
                        vertex: v,
                        position: spec.position as u8,
                    });
                }
            }
        }
        Ok(specs)
    }

    /// Perm rank -> vertex index, when every permutation occurs once.
    pub(crate) fn rank_index(&self) -> Option<Vec<u32>> {
        let m = self.n - 1;
        let size = factorial(m) as usize;
        if self.vertices.len() != size {
            return None;
        }
        let mut idx = vec![u32::MAX; size];
        for (i, v) in self.vertices.iter().enumerate() {
            let slot = &mut idx[v.perm().rank() as usize];
            if *slot != u32::MAX {
                return None;
            }
            *slot = i as u32;
        }
        Some(idx)
    }

    /// Vertex and edge lists with canonical ordering, for comparing trees
    /// built along different routes.
    pub fn canonical(&self) -> (Vec<LabeledVertex>, Vec<(LabeledVertex, LabeledVertex)>) {
        let mut vs = self.vertices.clone();
        vs.sort();
        let mut es: Vec<_> = self
            .edges
            .iter()
            .map(|&(i, j)| {
                let (a, b) = (self.vertices[i].clone(), self.vertices[j].clone());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        es.sort();
        (vs, es)
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    pub(crate) count: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            count: n,
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        self.count -= 1;
        true
    }
}

/// `prefix` followed by `prefix.len()+1, ..., m`.
pub(crate) fn with_tail(prefix: &[u8], m: usize) -> Perm {
    let mut v = Values::from_slice(prefix);
    v.extend(prefix.len() as u8 + 1..=m as u8);
    Perm::from_values_unchecked(v)
}

/// `2 3 ... (k-1) 1 k (k+1) ... m`
pub(crate) fn hub_perm(k: usize, m: usize) -> Perm {
    let mut v: Values = (2..k as u8).collect();
    v.push(1);
    v.extend(k as u8..=m as u8);
    Perm::from_values_unchecked(v)
}

pub fn check_properties(tree: &LinkTree) -> Result<TreeProperties> {
    let n = tree.n;
    if n < 5 {
        return Err(Error::UnsupportedN {
            n,
            reason: "tree properties are defined for n >= 5",
        });
    }
    if !tree.is_tree() {
        return Err(Error::NotATree(format!(
            "{} vertices, {} edges",
            tree.vertices.len(),
            tree.edges.len()
        )));
    }
    let m = n - 1;
    let index = tree.rank_index();
    let degrees = tree.degrees();
    let lookup = |p: &Perm| -> Option<usize> {
        match &index {
            Some(idx) => Some(idx[p.rank() as usize] as usize),
            None => tree.find(p),
        }
    };
    let has = |p: Perm, x: u8| lookup(&p).is_some_and(|i| tree.vertices[i].label() == x);
    let leaf = |p: Perm| lookup(&p).is_some_and(|i| degrees[i] == 1);

    Ok(TreeProperties {
        one_label_per_perm: index.is_some(),
        identity_label_one: has(Perm::identity(m), 1),
        hub_neighbours: (3..=n).all(|k| has(hub_perm(k, m), k as u8)),
        reversed_prefix: has(with_tail(&[3, 2, 1], m), 2),
        bridge_anchor: has(with_tail(&[2, 4, 3, 1], m), 3),
        leaf_312: leaf(with_tail(&[3, 1, 2], m)),
        leaf_2413: leaf(with_tail(&[2, 4, 1, 3], m)),
    })
}

/// Map a vertex of `H_n` into `H_{n+1}` as copy `k` of the induction step.
/// The label grows by one and the value 1 lands at a position that depends
/// only on `k`: position 1 for `k = 0`, 2 for `k = 1`, `k + 1` otherwise.
pub fn embed(v: &LabeledVertex, k: usize) -> Result<LabeledVertex> {
    let n = v.order();
    if n < 5 {
        return Err(Error::UnsupportedN {
            n,
            reason: "embedding needs n >= 5",
        });
    }
    if n + 1 > MAX_LEN {
        return Err(Error::UnsupportedN {
            n,
            reason: "too large",
        });
    }
    if k >= n {
        return Err(Error::InvalidCopyIndex { k, n });
    }
    // a(i) is a_i + 1 with 1-based i
    let a = |i: usize| v.perm()[i - 1] + 1;
    let m = n - 1;
    let mut out = Values::with_capacity(n);
    match k {
        0 => {
            out.extend_from_slice(&[1, a(3), a(1), a(4), a(2)]);
            out.extend((5..=m).map(a));
        }
        1 => {
            out.extend_from_slice(&[a(3), 1, a(2), a(1), a(4)]);
            out.extend((5..=m).map(a));
        }
        _ => {
            out.push(a(k));
            out.extend((1..k).map(a));
            out.push(1);
            out.extend((k + 1..=m).map(a));
        }
    }
    LabeledVertex::new(Perm::from_values_unchecked(out), v.label() + 1)
}

/// The forest of `n` embedded copies, before any surgery. `copies[k]` is
/// the tree placed as copy `k`.
pub fn embedded_forest(copies: &[&LinkTree]) -> Result<LinkTree> {
    let Some(first) = copies.first() else {
        return Err(Error::InductionInvariantViolated("no copies".into()));
    };
    let n = first.n;
    if copies.len() != n {
        return Err(Error::InductionInvariantViolated(format!(
            "{} copies supplied, need {n}",
            copies.len()
        )));
    }
    let total: usize = copies.iter().map(|t| t.len()).sum();
    let mut vertices = Vec::with_capacity(total);
    let mut edges = Vec::with_capacity(total);
    for (k, tree) in copies.iter().enumerate() {
        if tree.n != n {
            return Err(Error::InductionInvariantViolated(format!(
                "copy {k} is for n = {}, expected {n}",
                tree.n
            )));
        }
        let offset = vertices.len();
        for v in &tree.vertices {
            vertices.push(embed(v, k)?);
        }
        edges.extend(tree.edges.iter().map(|&(i, j)| (i + offset, j + offset)));
    }
    Ok(LinkTree {
        n: n + 1,
        vertices,
        edges,
    })
}

/// One induction step: a link tree for `n + 1` from one for `n`.
pub fn extend(tree: &LinkTree) -> Result<LinkTree> {
    extend_traced(tree).map(|(t, _)| t)
}

pub fn extend_traced(tree: &LinkTree) -> Result<(LinkTree, ExtendTrace)> {
    let copies = vec![tree; tree.n];
    extend_mixed_traced(&copies)
}

/// Induction step where copy `k` is built from `copies[k]`. All copies
/// must satisfy the seven properties.
pub fn extend_mixed(copies: &[&LinkTree]) -> Result<LinkTree> {
    extend_mixed_traced(copies).map(|(t, _)| t)
}

pub fn extend_mixed_traced(copies: &[&LinkTree]) -> Result<(LinkTree, ExtendTrace)> {
    let mut checked: Vec<*const LinkTree> = Vec::new();
    for &c in copies {
        if checked.contains(&(c as *const _)) {
            continue;
        }
        let props = check_properties(c)?;
        if !props.all() {
            return Err(Error::InductionInvariantViolated(format!(
                "input tree fails properties {props:?}"
            )));
        }
        checked.push(c);
    }

    let mut forest = embedded_forest(copies)?;
    let copy_size = copies[0].len();
    let forest_components = forest.components();
    let m = forest.n - 1;
    let index = forest
        .rank_index()
        .ok_or_else(|| violated("embedded copies do not cover S_n exactly once"))?;
    let at = |p: &Perm| index[p.rank() as usize] as usize;
    let require = |forest: &LinkTree, p: &Perm, label: u8| -> Result<usize> {
        let i = at(p);
        let got = forest.vertices[i].label();
        if got != label {
            return Err(violated(&format!(
                "expected ({p}, {label}), found label {got}"
            )));
        }
        Ok(i)
    };

    // Replace the leaf v(1 2 ... n) of copy 0 by (1 2 ... n, 1) joined to
    // (2 3 ... k 1 (k+1) ... n, k+1) for 2 <= k <= n.
    let identity = Perm::identity(m);
    let hub = at(&identity);
    if hub >= copy_size {
        return Err(violated("v(1 2 ... n) is not in copy 0"));
    }
    forest.replace_leaf(hub, 1)?;
    for k in 2..=m {
        let target = require(&forest, &hub_perm(k + 1, m), k as u8 + 1)?;
        forest.add_link(hub, target)?;
    }
    let after_hub = forest.components();

    // Replace the leaf v(3 4 2 1 5 ... n) by (3 4 2 1 5 ... n, 1) joined to
    // (3 4 1 2 5 ... n, 3) and (1 4 3 2 5 ... n, 4).
    let bridge = at(&with_tail(&[3, 4, 2, 1], m));
    forest.replace_leaf(bridge, 1)?;
    let left = require(&forest, &with_tail(&[3, 4, 1, 2], m), 3)?;
    let right = require(&forest, &with_tail(&[1, 4, 3, 2], m), 4)?;
    forest.add_link(bridge, left)?;
    forest.add_link(bridge, right)?;
    let after_bridge = forest.components();

    Ok((
        forest,
        ExtendTrace {
            forest_components,
            after_hub,
            after_bridge,
        },
    ))
}

fn violated(msg: &str) -> Error {
    Error::InductionInvariantViolated(msg.to_string())
}

impl LinkTree {
    /// Detach leaf `i` and relabel it.
    fn replace_leaf(&mut self, i: usize, label: u8) -> Result<()> {
        let incident: Vec<usize> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| a == i || b == i)
            .map(|(e, _)| e)
            .collect();
        if incident.len() != 1 {
            return Err(violated(&format!(
                "{} has degree {}, expected a leaf",
                self.vertices[i],
                incident.len()
            )));
        }
        self.edges.remove(incident[0]);
        self.vertices[i] = LabeledVertex::new(self.vertices[i].perm().clone(), label)?;
        Ok(())
    }

    fn add_link(&mut self, i: usize, j: usize) -> Result<()> {
        if linkable(&self.vertices[i], &self.vertices[j]).is_none() {
            return Err(violated(&format!(
                "added edge {} -- {} is not linkable",
                self.vertices[i], self.vertices[j]
            )));
        }
        self.edges.push((i, j));
        Ok(())
    }
}

/// The base tree followed by `n - 5` induction steps.
pub fn build_tree(n: usize) -> Result<LinkTree> {
    if n < 5 {
        return Err(Error::UnsupportedN {
            n,
            reason: "link trees start at n = 5",
        });
    }
    if n > MAX_LEN {
        return Err(Error::UnsupportedN {
            n,
            reason: "too large",
        });
    }
    let mut tree = find_base_tree()?;
    while tree.n < n {
        tree = extend(&tree)?;
    }
    Ok(tree)
}

/// All linkable pairs among `vertices`, as index pairs `i < j`. Quadratic.
pub fn link_graph(vertices: &[LabeledVertex]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if linkable(&vertices[i], &vertices[j]).is_some() {
                out.push((i, j));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(p: &str, x: u8) -> LabeledVertex {
        LabeledVertex::parse(p, x).unwrap()
    }

    #[test]
    fn embed_examples() {
        assert_eq!(embed(&lv("24135", 4), 0).unwrap(), lv("123456", 5));
        assert_eq!(embed(&lv("31245", 2), 1).unwrap(), lv("312456", 3));
        assert_eq!(embed(&lv("31245", 2), 3).unwrap(), lv("342156", 3));
        assert_eq!(embed(&lv("2413", 1), 0).unwrap(), lv("12345", 2));
        assert_eq!(
            embed(&lv("2413", 1), 5),
            Err(Error::InvalidCopyIndex { k: 5, n: 5 })
        );
        assert!(embed(&lv("213", 1), 0).is_err());
    }

    #[test]
    fn embed_puts_one_at_distinct_positions() {
        for n in 5..=7 {
            for a in Perm::all(n - 1) {
                let v = LabeledVertex::new(a, 2).unwrap();
                let positions: HashSet<usize> = (0..n)
                    .map(|k| {
                        embed(&v, k)
                            .unwrap()
                            .perm()
                            .iter()
                            .position(|&x| x == 1)
                            .unwrap()
                    })
                    .collect();
                assert_eq!(positions.len(), n);
            }
        }
    }

    #[test]
    fn hub_perm_shape() {
        assert_eq!(hub_perm(3, 4).to_string(), "2134");
        assert_eq!(hub_perm(5, 4).to_string(), "2341");
        assert_eq!(with_tail(&[2, 4, 3, 1], 6).to_string(), "243156");
    }

    #[test]
    fn validate_rejects_bad_trees() {
        let a = lv("42135", 2);
        let b = lv("23145", 5);
        let c = lv("42135", 3);
        let ok = LinkTree::new(6, vec![a.clone(), b.clone()], vec![(0, 1)]).unwrap();
        assert_eq!(ok.validate().unwrap().len(), 1);
        let bad = LinkTree::new(6, vec![a.clone(), c], vec![(0, 1)]).unwrap();
        assert_eq!(bad.validate(), Err(Error::NonLinkableEdge(0)));
        let forest = LinkTree::new(6, vec![a, b], vec![]).unwrap();
        assert!(matches!(forest.validate(), Err(Error::NotATree(_))));
        assert!(LinkTree::new(5, vec![lv("42135", 2)], vec![]).is_err());
    }

    #[test]
    fn check_properties_requires_tree() {
        let t = LinkTree::new(5, vec![lv("1234", 1), lv("2134", 3)], vec![]).unwrap();
        assert!(matches!(check_properties(&t), Err(Error::NotATree(_))));
    }
}
