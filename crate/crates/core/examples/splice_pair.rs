//! Two short cycles for n = 6 joined into one cycle of length 12.
//!
//!     cargo run --example splice_pair

use std::collections::HashMap;

use ucycle::{cycle_vertex, linkable, short_cycle, splice_edges, LabeledVertex, Tuple};

fn main() {
    let u = LabeledVertex::parse("42135", 2).unwrap();
    let v = LabeledVertex::parse("23145", 5).unwrap();
    for w in [&u, &v] {
        let c = short_cycle(w).unwrap();
        let tuples: Vec<String> = c.vertices().map(|t| t.to_string()).collect();
        println!("C{w}: {}", tuples.join(" -> "));
    }

    let spec = linkable(&u, &v).expect("linkable");
    println!("link position t = {}", spec.position);
    let splice = splice_edges(&spec);
    for (a, b) in &splice.removed {
        println!("  remove {a} -> {b}");
    }
    for (a, b) in &splice.added {
        println!("  add    {a} -> {b}");
    }

    let mut succ: HashMap<Tuple, Tuple> = HashMap::new();
    for w in [&u, &v] {
        for k in 0..6 {
            succ.insert(cycle_vertex(w, k), cycle_vertex(w, k + 1));
        }
    }
    for (a, b) in splice.added {
        succ.insert(a, b);
    }
    let start = cycle_vertex(&u, 0);
    let mut cur = start.clone();
    let mut walk = vec![cur.to_string()];
    loop {
        cur = succ[&cur].clone();
        if cur == start {
            break;
        }
        walk.push(cur.to_string());
    }
    println!("merged cycle ({}): {}", walk.len(), walk.join(" "));
    let word: String = walk.iter().map(|t| &t[..1]).collect();
    println!("as a word: {word}");
}
