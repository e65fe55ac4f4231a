//! Base graphs: labelings of `S_4` whose link graph is a base tree plus
//! three extra edges between named vertices.
//!
//! The six vertices forced by the tree properties are pinned, and so are
//! the six endpoints of [`AUGMENTING_EDGES`]. Every other permutation gets
//! each label in turn, keeping only labelings whose induced link graph is
//! connected with exactly `24 - 1 + 3` edges and contains the three extra
//! edges.

use super::{hub_perm, with_tail, LinkTree};
use crate::cycles::LabeledVertex;
use crate::error::{Error, Result};
use crate::linkage::linkable;
use crate::pattern::{factorial, Perm};

const N: usize = 5;
const M: usize = N - 1;

/// A labeled vertex written as `(perm, label)`.
pub type NamedVertex = (&'static str, u8);

/// The extra edges.
pub const AUGMENTING_EDGES: [(NamedVertex, NamedVertex); 3] = [
    (("1432", 1), ("2143", 5)),
    (("3421", 1), ("4132", 5)),
    (("4231", 2), ("4321", 4)),
];

/// Every labeling whose link graph is a tree plus [`AUGMENTING_EDGES`],
/// in lexicographic order of labels by permutation rank. Each result holds
/// the full induced link graph, so it has 26 edges.
pub fn augmented_base_graphs() -> Result<Vec<LinkTree>> {
    let count = factorial(M) as usize;
    let perms: Vec<Perm> = Perm::all(M).collect();
    let vertex = |r: usize, x: u8| LabeledVertex::new(perms[r].clone(), x).unwrap();

    // adjacency between candidates r * N + (x - 1) as bit sets
    let mut adj = vec![0u128; count * N];
    for i in 0..count * N {
        for j in i + 1..count * N {
            if linkable(
                &vertex(i / N, (i % N) as u8 + 1),
                &vertex(j / N, (j % N) as u8 + 1),
            )
            .is_some()
            {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
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
    for (a, b) in AUGMENTING_EDGES {
        for (p, x) in [a, b] {
            let r = rank(p.parse()?);
            if labels[r] != 0 && labels[r] != x {
                return Err(Error::InductionInvariantViolated(format!(
                    "({p}, {x}) clashes with a pin"
                )));
            }
            labels[r] = x;
        }
    }
    let free: Vec<usize> = (0..count).filter(|&r| labels[r] == 0).collect();
    let chosen: u128 = (0..count)
        .filter(|&r| labels[r] != 0)
        .fold(0, |m, r| m | 1 << (r * N + labels[r] as usize - 1));
    let edges = edge_count(&adj, chosen);

    let target = count - 1 + AUGMENTING_EDGES.len();
    let mut found = Vec::new();
    let mut search = Search {
        adj: &adj,
        free: &free,
        target,
        labels: &mut labels,
        found: &mut found,
    };
    search.assign(0, chosen, edges);

    let mut graphs = Vec::new();
    for labels in found {
        let vertices: Vec<LabeledVertex> = (0..count).map(|r| vertex(r, labels[r])).collect();
        let edges = super::link_graph(&vertices);
        let graph = LinkTree::new(N, vertices, edges)?;
        if graph.components() == 1 {
            graphs.push(graph);
        }
    }
    Ok(graphs)
}

fn edge_count(adj: &[u128], chosen: u128) -> usize {
    (0..adj.len())
        .filter(|&v| chosen >> v & 1 == 1)
        .map(|v| (adj[v] & chosen).count_ones() as usize)
        .sum::<usize>()
        / 2
}

struct Search<'a> {
    adj: &'a [u128],
    free: &'a [usize],
    target: usize,
    labels: &'a mut Vec<u8>,
    found: &'a mut Vec<Vec<u8>>,
}

impl Search<'_> {
    /// Whether every permutation can still be reached from a chosen vertex
    /// through chosen vertices and candidates of open permutations.
    fn connectable(&self, depth: usize, chosen: u128) -> bool {
        let open: u128 = self.free[depth..]
            .iter()
            .fold(0, |m, &r| m | 0b11111 << (r * N));
        let usable = chosen | open;
        let mut reach: u128 = 1 << chosen.trailing_zeros();
        loop {
            let mut next = reach;
            let mut bits = reach;
            while bits != 0 {
                next |= self.adj[bits.trailing_zeros() as usize];
                bits &= bits - 1;
            }
            next &= usable;
            if next == reach {
                break;
            }
            reach = next;
        }
        // every chosen vertex reached, and every open permutation touched
        reach & chosen == chosen
            && self.free[depth..]
                .iter()
                .all(|&r| reach >> (r * N) & 0b11111 != 0)
    }

    fn assign(&mut self, depth: usize, chosen: u128, edges: usize) {
        if edges > self.target || !self.connectable(depth, chosen) {
            return;
        }
        if depth == self.free.len() {
            if edges == self.target {
                self.found.push(self.labels.clone());
            }
            return;
        }
        let r = self.free[depth];
        for x in 1..=N as u8 {
            let v = r * N + x as usize - 1;
            let added = (self.adj[v] & chosen).count_ones() as usize;
            self.labels[r] = x;
            self.assign(depth + 1, chosen | 1 << v, edges + added);
        }
        self.labels[r] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_labelings_differ_only_on_the_leaves() {
        let graphs = augmented_base_graphs().unwrap();
        assert_eq!(graphs.len(), 3);
        let leaves: Vec<Perm> = ["2413", "3124"]
            .iter()
            .map(|p| p.parse().unwrap())
            .collect();
        for g in &graphs {
            assert_eq!(g.edges().len(), 26);
            for (a, b) in AUGMENTING_EDGES {
                let u = LabeledVertex::parse(a.0, a.1).unwrap();
                let v = LabeledVertex::parse(b.0, b.1).unwrap();
                assert!(linkable(&u, &v).is_some());
                assert!(g.vertices().contains(&u) && g.vertices().contains(&v));
            }
            for (v, w) in g.vertices().iter().zip(graphs[0].vertices()) {
                assert!(v == w || leaves.contains(v.perm()));
            }
        }
    }
}
