//! Grow the link tree from n = 5 to n = 9 and watch the surgery join the
//! n copies.
//!
//!     cargo run --release --example induction

use ucycle::check_properties;
use ucycle::treebuild::{extend_traced, find_base_tree};

fn main() {
    let mut tree = find_base_tree().unwrap();
    println!("n = 5: {} vertices", tree.len());
    while tree.n() < 9 {
        let (next, trace) = extend_traced(&tree).unwrap();
        println!(
            "n = {}: {} copies -> {} components after the hub, {} after the bridge; {} vertices",
            next.n(),
            trace.forest_components,
            trace.after_hub,
            trace.after_bridge,
            next.len()
        );
        let props = check_properties(&next).unwrap();
        println!("       properties {:?}", props.as_array());
        tree = next;
    }
    let max_degree = tree.degrees().into_iter().max().unwrap();
    println!("largest degree at n = 9: {max_degree}");
}
