//! Write a link tree as records and as Graphviz, then read the records back.
//!
//!     cargo run --example export_tree [n] > t.txt

use ucycle::treebuild::{build_tree, parse_records, write_graphviz, write_records};

fn main() {
    let n: usize = std::env::args().nth(1).map_or(5, |a| a.parse().expect("n"));
    let tree = build_tree(n).unwrap();

    let mut records = Vec::new();
    write_records(&tree, &mut records).unwrap();
    let back = parse_records(&records[..]).unwrap();
    assert_eq!(back.canonical(), tree.canonical());
    eprintln!(
        "records round-trip: {} vertices, {} edges",
        back.len(),
        back.edges().len()
    );

    let mut dot = Vec::new();
    write_graphviz(&tree, &mut dot).unwrap();
    print!("{}", String::from_utf8(dot).unwrap());
}
