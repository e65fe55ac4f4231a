//! Text formats for link trees.
//!
//! Records format, one record per line:
//!
//! ```text
//! tree <n> <vertex count> <edge count>
//! v <a_1> <a_2> ... <a_{n-1}> <label>      one per vertex, index = order of appearance from 0
//! e <low index> <high index> <t>           one per edge, low has the smaller label
//! ```
//!
//! `t` is the 1-based link position. Lines starting with `#` are ignored.
//! The Graphviz export writes an undirected `graph` with one node per
//! vertex labelled `a / x` and edges labelled with `t`.

use std::io::{self, BufRead, Write};

use super::LinkTree;
use crate::cycles::LabeledVertex;
use crate::error::{Error, Result};
use crate::pattern::Perm;

pub fn write_records<W: Write>(tree: &LinkTree, mut out: W) -> io::Result<()> {
    let specs = tree
        .link_specs()
        .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))?;
    writeln!(
        out,
        "tree {} {} {}",
        tree.n(),
        tree.len(),
        tree.edges().len()
    )?;
    for v in tree.vertices() {
        out.write_all(b"v")?;
        for a in v.perm().iter() {
            write!(out, " {a}")?;
        }
        writeln!(out, " {}", v.label())?;
    }
    for (&(i, j), spec) in tree.edges().iter().zip(&specs) {
        let (lo, hi) = if tree.vertices()[i] == spec.low {
            (i, j)
        } else {
            (j, i)
        };
        writeln!(out, "e {lo} {hi} {}", spec.position)?;
    }
    Ok(())
}

pub fn write_graphviz<W: Write>(tree: &LinkTree, mut out: W) -> io::Result<()> {
    let specs = tree
        .link_specs()
        .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))?;
    writeln!(out, "graph T{} {{", tree.n())?;
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];")?;
    for (i, v) in tree.vertices().iter().enumerate() {
        writeln!(out, "  v{i} [label=\"{} / {}\"];", v.perm(), v.label())?;
    }
    for (&(i, j), spec) in tree.edges().iter().zip(&specs) {
        writeln!(out, "  v{i} -- v{j} [label=\"{}\"];", spec.position)?;
    }
    writeln!(out, "}}")
}

/// Read a tree written by [`write_records`]. Link positions are checked
/// against the vertices.
pub fn parse_records<R: BufRead>(input: R) -> Result<LinkTree> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut positions = Vec::new();
    for (lineno, line) in input.lines().enumerate() {
        let lineno = lineno + 1;
        let line = line.map_err(|e| Error::parse(lineno, e.to_string()))?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let tag = fields.next().unwrap_or_default();
        let nums: Vec<usize> = fields
            .map(|f| {
                f.parse()
                    .map_err(|_| Error::parse(lineno, format!("bad number {f:?}")))
            })
            .collect::<Result<_>>()?;
        match (tag, header) {
            ("tree", None) if nums.len() == 3 => header = Some((nums[0], nums[1], nums[2])),
            ("v", Some((n, _, _))) if nums.len() == n => {
                let perm: Vec<u8> = nums[..n - 1].iter().map(|&a| a as u8).collect();
                let v = LabeledVertex::new(Perm::new(&perm)?, nums[n - 1] as u8)
                    .map_err(|e| Error::parse(lineno, e.to_string()))?;
                vertices.push(v);
            }
            ("e", Some(_)) if nums.len() == 3 => {
                edges.push((nums[0], nums[1]));
                positions.push((lineno, nums[2]));
            }
            _ => return Err(Error::parse(lineno, format!("unexpected record {line:?}"))),
        }
    }
    let Some((n, nv, ne)) = header else {
        return Err(Error::parse(0, "missing tree header"));
    };
    if vertices.len() != nv || edges.len() != ne {
        return Err(Error::parse(0, "record counts do not match header"));
    }
    let tree = LinkTree::new(n, vertices, edges)?;
    let specs = tree.link_specs()?;
    for (spec, (lineno, t)) in specs.iter().zip(positions) {
        if spec.position != t {
            return Err(Error::parse(
                lineno,
                format!("link position {t}, expected {}", spec.position),
            ));
        }
    }
    Ok(tree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::treebuild::find_base_tree;

    #[test]
    fn records_round_trip() {
        let t = find_base_tree().unwrap();
        let mut buf = Vec::new();
        write_records(&t, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("tree 5 24 23\n"));
        assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 24);
        assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 23);
        assert!(text.contains("v 1 2 3 4 1\n"));
        let back = parse_records(&buf[..]).unwrap();
        assert_eq!(back.canonical(), t.canonical());
    }

    #[test]
    fn records_reject_wrong_position() {
        let text = "tree 6 2 1\nv 4 2 1 3 5 2\nv 2 3 1 4 5 5\ne 0 1 3\n";
        assert!(matches!(
            parse_records(text.as_bytes()),
            Err(Error::Parse { line: 4, .. })
        ));
        let good = text.replace("e 0 1 3", "e 0 1 1");
        assert_eq!(parse_records(good.as_bytes()).unwrap().len(), 2);
    }

    #[test]
    fn graphviz_shape() {
        let t = find_base_tree().unwrap();
        let mut buf = Vec::new();
        write_graphviz(&t, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("graph T5 {"));
        assert!(text.trim_end().ends_with('}'));
        assert_eq!(text.matches(" -- ").count(), 23);
        assert!(text.contains("[label=\"1234 / 1\"]"));
    }
}
