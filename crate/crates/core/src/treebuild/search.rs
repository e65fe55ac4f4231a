//! Deterministic search for a base tree `T_5`.
//!
//! Six labeled vertices are forced by the identity, hub, reversed-prefix and
//! bridge-anchor properties. The remaining core permutations are labeled in
//! rank order by backtracking, pruning any partial assignment whose
//! assigned vertices can no longer be connected through vertices that are
//! still available. The two designated leaves are labeled last and hung off
//! the finished core, which is spanned by breadth-first search.

use std::collections::VecDeque;

use super::{hub_perm, with_tail, LinkTree};
use crate::cycles::LabeledVertex;
use crate::error::{Error, Result};
use crate::linkage::linkable;
use crate::pattern::{factorial, Perm};

const N: usize = 5;
const M: usize = N - 1;

/// Order in which candidate labels are tried.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum LabelOrder {
    #[default]
    Ascending,
    Descending,
}

impl LabelOrder {
    fn labels(self) -> Vec<u8> {
        let mut v: Vec<u8> = (1..=N as u8).collect();
        if self == LabelOrder::Descending {
            v.reverse();
        }
        v
    }
}

pub fn find_base_tree() -> Result<LinkTree> {
    find_base_tree_with(LabelOrder::Ascending)
}

pub fn find_base_tree_with(order: LabelOrder) -> Result<LinkTree> {
    Search::new(order).run()
}

// Candidate vertex ids are rank * N + (label - 1).
fn id(rank: usize, label: u8) -> usize {
    rank * N + label as usize - 1
}

struct Search {
    order: LabelOrder,
    perms: Vec<Perm>,
    adj: Vec<Vec<usize>>,
    /// Assigned label per rank, 0 when open.
    labels: Vec<u8>,
    leaves: [usize; 2],
    free: Vec<usize>,
    root: usize,
}

impl Search {
    fn new(order: LabelOrder) -> Self {
        let perms: Vec<Perm> = Perm::all(M).collect();
        let count = factorial(M) as usize;
        let verts: Vec<LabeledVertex> = (0..count * N)
            .map(|i| LabeledVertex::new(perms[i / N].clone(), (i % N) as u8 + 1).unwrap())
            .collect();
        let mut adj = vec![Vec::new(); verts.len()];
        for i in 0..verts.len() {
            for j in i + 1..verts.len() {
                if linkable(&verts[i], &verts[j]).is_some() {
                    adj[i].push(j);
                    adj[j].push(i);
                }
            }
        }

        let rank = |p: Perm| p.rank() as usize;
        let mut labels = vec![0u8; count];
        labels[rank(Perm::identity(M))] = 1;
        for k in 3..=N {
            labels[rank(hub_perm(k, M))] = k as u8;
        }
        labels[rank(with_tail(&[3, 2, 1], M))] = 2;
        labels[rank(with_tail(&[2, 4, 3, 1], M))] = 3;
        let leaves = [
            rank(with_tail(&[3, 1, 2], M)),
            rank(with_tail(&[2, 4, 1, 3], M)),
        ];
        let free = (0..count)
            .filter(|r| labels[*r] == 0 && !leaves.contains(r))
            .collect();
        let root = id(rank(Perm::identity(M)), 1);
        Search {
            order,
            perms,
            adj,
            labels,
            leaves,
            free,
            root,
        }
    }

    fn run(mut self) -> Result<LinkTree> {
        if self.assign(0) {
            Ok(self.into_tree())
        } else {
            Err(Error::BaseCaseNotFound)
        }
    }

    fn is_leaf(&self, rank: usize) -> bool {
        self.leaves.contains(&rank)
    }

    /// Whether candidate `v` is usable as a core vertex under the current
    /// partial assignment.
    fn available(&self, v: usize) -> bool {
        let (rank, label) = (v / N, (v % N) as u8 + 1);
        !self.is_leaf(rank) && (self.labels[rank] == 0 || self.labels[rank] == label)
    }

    /// Core vertices reachable from the root through available vertices.
    fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        let mut queue = VecDeque::from([self.root]);
        seen[self.root] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] && self.available(w) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    fn feasible(&self) -> bool {
        let seen = self.reachable();
        (0..self.labels.len()).all(|r| {
            if self.is_leaf(r) {
                // some label must touch a reachable core vertex
                (1..=N as u8).any(|x| self.adj[id(r, x)].iter().any(|&w| seen[w]))
            } else if self.labels[r] != 0 {
                seen[id(r, self.labels[r])]
            } else {
                (1..=N as u8).any(|x| seen[id(r, x)])
            }
        })
    }

    fn assign(&mut self, depth: usize) -> bool {
        if !self.feasible() {
            return false;
        }
        if depth == self.free.len() {
            return self.attach_leaves();
        }
        let rank = self.free[depth];
        for x in self.order.labels() {
            self.labels[rank] = x;
            if self.assign(depth + 1) {
                return true;
            }
        }
        self.labels[rank] = 0;
        false
    }

    fn attach_leaves(&mut self) -> bool {
        for leaf in self.leaves {
            let core = |w: usize| !self.is_leaf(w / N) && self.labels[w / N] == (w % N) as u8 + 1;
            let Some(x) = self
                .order
                .labels()
                .into_iter()
                .find(|&x| self.adj[id(leaf, x)].iter().any(|&w| core(w)))
            else {
                return false;
            };
            self.labels[leaf] = x;
        }
        true
    }

    fn into_tree(self) -> LinkTree {
        let chosen = |v: usize| self.labels[v / N] == (v % N) as u8 + 1;
        let mut edges = Vec::new();
        let mut seen = vec![false; self.adj.len()];
        let mut queue = VecDeque::from([self.root]);
        seen[self.root] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] && chosen(w) && !self.is_leaf(w / N) {
                    seen[w] = true;
                    edges.push((v / N, w / N));
                    queue.push_back(w);
                }
            }
        }
        for leaf in self.leaves {
            let v = id(leaf, self.labels[leaf]);
            let parent = *self.adj[v]
                .iter()
                .find(|&&w| chosen(w) && !self.is_leaf(w / N))
                .expect("leaf attached during search");
            edges.push((parent / N, leaf));
        }
        let vertices = self
            .perms
            .into_iter()
            .zip(&self.labels)
            .map(|(p, &x)| LabeledVertex::new(p, x).unwrap())
            .collect();
        LinkTree::new(N, vertices, edges).expect("search produces well-formed trees")
    }
}
