//! Linking two short cycles into one.
//!
//! Two cycles `C(a, x)` and `C(b, y)` with `1 <= x <= y - 2` are linkable
//! when `b` is the *partner* of `a`: values `x..=y-2` of `a` move up by one,
//! value `y - 1` becomes `x`, and all other values stay put. Then
//! `shift(x, 0 a)` and `shift(y, 0 b)` differ in exactly one coordinate,
//! the position `t` where `a_t = y - 1`, and swapping the successors of the
//! two rotation-`t` vertices merges the cycles into one of length `2n`.
//!
//! Indexing: positions of `a = a_1 ... a_{n-1}` are 1-based, so position 0
//! of the tuple `0 a` holds the prepended zero. Rotation index `k` is `r^k`.
//! With this convention the link position `t` is also the rotation index
//! of the vertex whose outgoing cycle edge is replaced.

use crate::cycles::{cycle_vertex, LabeledVertex};
use crate::error::{Error, Result};
use crate::pattern::{Perm, Tuple, Values};

/// A linkable pair, ordered so that `low.label() < high.label()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkSpec {
    pub low: LabeledVertex,
    pub high: LabeledVertex,
    /// 1-based position where `low` holds `y - 1` and `high` holds `x`.
    pub position: usize,
}

/// A directed transition-graph edge between two tuples.
pub type Arc = (Tuple, Tuple);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splice {
    pub removed: [Arc; 2],
    pub added: [Arc; 2],
}

/// The partner `b` of `a` for labels `x < y`. The value map is the cyclic
/// shift `x -> x+1 -> ... -> y-1 -> x`, so `b` is again in `S_{n-1}`.
pub fn partner(a: &Perm, x: u8, y: u8) -> Result<Perm> {
    let n = a.len() as u8 + 1;
    if y > n {
        return Err(Error::InvalidLabel { label: y, max: n });
    }
    if x < 1 || x.saturating_add(2) > y {
        return Err(Error::NotLinkableLabels { x, y });
    }
    let b: Values = a
        .iter()
        .map(|&v| match v {
            v if v < x => v,
            v if v <= y - 2 => v + 1,
            v if v == y - 1 => x,
            v => v,
        })
        .collect();
    Ok(Perm::from_values_unchecked(b))
}

/// The splice data for `u` and `v` if their cycles are linkable. Symmetric
/// in its arguments.
pub fn linkable(u: &LabeledVertex, v: &LabeledVertex) -> Option<LinkSpec> {
    if u.order() != v.order() {
        return None;
    }
    let (low, high) = if u.label() <= v.label() {
        (u, v)
    } else {
        (v, u)
    };
    let (x, y) = (low.label(), high.label());
    let b = partner(low.perm(), x, y).ok()?;
    if &b != high.perm() {
        return None;
    }
    let position = 1 + low.perm().iter().position(|&p| p == y - 1)?;
    Some(LinkSpec {
        low: low.clone(),
        high: high.clone(),
        position,
    })
}

/// The two cycle edges removed and the two crossing edges added when the
/// cycles of `spec` are joined.
pub fn splice_edges(spec: &LinkSpec) -> Splice {
    let t = spec.position;
    let lo = |k| cycle_vertex(&spec.low, k);
    let hi = |k| cycle_vertex(&spec.high, k);
    Splice {
        removed: [(lo(t), lo(t + 1)), (hi(t), hi(t + 1))],
        added: [(lo(t), hi(t + 1)), (hi(t), lo(t + 1))],
    }
}

/// True if `to` follows `from` in the transition graph.
pub fn is_transition(from: &[u8], to: &[u8]) -> bool {
    from.len() == to.len() && !from.is_empty() && from[1..] == to[..to.len() - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::LabeledVertex;
    use crate::pattern::{shift, Perm};
    use proptest::prelude::*;
    use std::collections::{HashMap, HashSet};

    fn lv(p: &str, x: u8) -> LabeledVertex {
        LabeledVertex::parse(p, x).unwrap()
    }
    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }
    fn t(s: &str) -> Tuple {
        s.parse().unwrap()
    }

    #[test]
    fn partner_examples() {
        assert_eq!(partner(&p("42135"), 2, 5).unwrap(), p("23145"));
        assert_eq!(partner(&p("1234"), 1, 3).unwrap(), p("2134"));
        for n in 5..=9usize {
            let id = Perm::identity(n - 1);
            for k in 2..n {
                // 2 3 ... k 1 (k+1) ... (n-1)
                let mut want: Vec<u8> = (2..=k as u8).collect();
                want.push(1);
                want.extend(k as u8 + 1..n as u8);
                assert_eq!(partner(&id, 1, k as u8 + 1).unwrap().values(), &want[..]);
            }
        }
    }

    #[test]
    fn partner_label_errors() {
        let a = p("42135");
        assert_eq!(
            partner(&a, 2, 3),
            Err(Error::NotLinkableLabels { x: 2, y: 3 })
        );
        assert_eq!(
            partner(&a, 3, 3),
            Err(Error::NotLinkableLabels { x: 3, y: 3 })
        );
        assert_eq!(
            partner(&a, 0, 3),
            Err(Error::NotLinkableLabels { x: 0, y: 3 })
        );
        assert_eq!(
            partner(&a, 1, 7),
            Err(Error::InvalidLabel { label: 7, max: 6 })
        );
    }

    #[test]
    fn linkable_examples() {
        let spec = linkable(&lv("42135", 2), &lv("23145", 5)).unwrap();
        assert_eq!(spec.position, 1);
        assert_eq!(spec.low, lv("42135", 2));
        assert!(linkable(&lv("42135", 2), &lv("42135", 3)).is_none());
        assert!(linkable(&lv("42135", 2), &lv("42135", 2)).is_none());
        assert_eq!(
            linkable(&lv("1234", 1), &lv("2134", 3)).unwrap().position,
            2
        );
        assert!(linkable(&lv("1234", 1), &lv("2143", 3)).is_none());
        assert!(linkable(&lv("1234", 1), &lv("21345", 3)).is_none());
    }

    #[test]
    fn worked_splice() {
        let spec = linkable(&lv("42135", 2), &lv("23145", 5)).unwrap();
        let s = splice_edges(&spec);
        assert_eq!(
            s.added,
            [(t("531460"), t("314602")), (t("231460"), t("314605"))]
        );
        assert_eq!(
            s.removed,
            [(t("531460"), t("314605")), (t("231460"), t("314602"))]
        );
        for (a, b) in s.added.iter().chain(&s.removed) {
            assert!(is_transition(a, b));
            let overlap = (0..5).filter(|&i| a[i + 1] == b[i]).count();
            assert_eq!(overlap, 5);
        }
        assert_eq!(walk_spliced(&spec), 12);
    }

    /// Walk the successor relation of the two spliced cycles from the low
    /// cycle's base and return the number of distinct vertices visited
    /// before returning.
    fn walk_spliced(spec: &LinkSpec) -> usize {
        let n = spec.low.order();
        let mut succ: HashMap<Tuple, Tuple> = HashMap::new();
        for v in [&spec.low, &spec.high] {
            for k in 0..n {
                succ.insert(cycle_vertex(v, k), cycle_vertex(v, k + 1));
            }
        }
        let s = splice_edges(spec);
        for (from, to) in &s.removed {
            assert_eq!(succ.get(from), Some(to));
        }
        for (from, to) in s.added {
            succ.insert(from, to);
        }
        let start = cycle_vertex(&spec.low, 0);
        let mut cur = start.clone();
        let mut seen = HashSet::new();
        loop {
            assert!(seen.insert(cur.clone()));
            let next = succ[&cur].clone();
            assert!(is_transition(&cur, &next));
            cur = next;
            if cur == start {
                return seen.len();
            }
        }
    }

    #[test]
    fn linked_bases_differ_in_one_coordinate() {
        let n = 5usize;
        for a in Perm::all(n - 1) {
            for x in 1..=n as u8 {
                for y in x + 2..=n as u8 {
                    let b = partner(&a, x, y).unwrap();
                    assert!(Perm::new(&b).is_ok());
                    let sa = shift(x, &a.with_leading_zero());
                    let sb = shift(y, &b.with_leading_zero());
                    let diff: Vec<usize> = (0..n).filter(|&i| sa[i] != sb[i]).collect();
                    let spec = linkable(
                        &LabeledVertex::new(a.clone(), x).unwrap(),
                        &LabeledVertex::new(b.clone(), y).unwrap(),
                    )
                    .unwrap();
                    assert_eq!(diff, vec![spec.position]);
                    assert_eq!(a[spec.position - 1], y - 1);
                    assert_eq!(b[spec.position - 1], x);
                    // the value map is the cycle (x x+1 ... y-1)
                    for (&va, &vb) in a.iter().zip(b.iter()) {
                        if va < x || va >= y {
                            assert_eq!(va, vb);
                        } else {
                            assert_eq!(vb, if va == y - 1 { x } else { va + 1 });
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn linkable_is_symmetric_on_h5() {
        let verts: Vec<LabeledVertex> = Perm::all(4)
            .flat_map(|a| (1..=5).map(move |x| LabeledVertex::new(a.clone(), x).unwrap()))
            .collect();
        let mut edges = 0;
        for u in &verts {
            for v in &verts {
                let l = linkable(u, v);
                assert_eq!(l, linkable(v, u));
                edges += l.is_some() as usize;
            }
        }
        // degrees 3, 2, 2, 2, 3 by label
        assert_eq!(edges / 2, 24 * 12 / 2);
    }

    proptest! {
        #[test]
        fn random_splices_form_one_cycle(n in 3usize..=7, rank in 0u64..720, x in 1u8..=7, gap in 2u8..=6) {
            let m = n - 1;
            let a = Perm::unrank(m, rank % crate::pattern::factorial(m)).unwrap();
            let x = 1 + (x - 1) % (n as u8 - 2);
            let y = x + 2 + (gap - 2) % (n as u8 - x - 1);
            prop_assume!(y <= n as u8);
            let b = partner(&a, x, y).unwrap();
            let spec = linkable(
                &LabeledVertex::new(a, x).unwrap(),
                &LabeledVertex::new(b, y).unwrap(),
            ).unwrap();
            prop_assert_eq!(walk_spliced(&spec), 2 * n);
        }
    }
}
