//! Search for the n = 5 link tree, and a second one with the labels tried in
//! the opposite order.
//!
//!     cargo run --example base_tree

use std::time::Instant;

use ucycle::check_properties;
use ucycle::treebuild::{find_base_tree_with, LabelOrder};

fn main() {
    for order in [LabelOrder::Ascending, LabelOrder::Descending] {
        let start = Instant::now();
        let tree = find_base_tree_with(order).unwrap();
        println!("{order:?}: found in {:?}", start.elapsed());
        let deg = tree.degrees();
        for (i, v) in tree.vertices().iter().enumerate() {
            println!("  {v}  degree {}", deg[i]);
        }
        let props = check_properties(&tree).unwrap();
        println!("  properties: {:?}", props.as_array());
    }
}
