//! Matrix-tree counts, and the small graph behind the factor 420 in the
//! lower bound.
//!
//!     cargo run --release --example spanning_trees

use ucycle::count::{spanning_tree_count, valid_spanning_trees, Multigraph};
use ucycle::treebuild::{augmented_base_graphs, find_base_tree, link_graph, AUGMENTING_EDGES};
use ucycle::LinkTree;

fn as_multigraph(g: &LinkTree) -> Multigraph {
    Multigraph::new(g.len(), g.edges().to_vec()).unwrap()
}

fn main() {
    for k in 2..=8 {
        println!("K{k}: {}", spanning_tree_count(&Multigraph::complete(k)));
    }

    println!("extra edges: {AUGMENTING_EDGES:?}");
    for (i, g) in augmented_base_graphs().unwrap().iter().enumerate() {
        let census = valid_spanning_trees(g).unwrap();
        println!(
            "labeling {i}: {} edges, {} spanning trees, {} usable as a base tree",
            g.edges().len(),
            spanning_tree_count(&as_multigraph(g)),
            census.valid
        );
        let labels: Vec<String> = g.vertices().iter().map(|v| v.to_string()).collect();
        println!("  {}", labels.join(" "));
    }

    // the searched tree labels (4132) with 2, so the edge from (3421, 1) is absent
    let t = find_base_tree().unwrap();
    let g = LinkTree::new(5, t.vertices().to_vec(), link_graph(t.vertices())).unwrap();
    let census = valid_spanning_trees(&g).unwrap();
    println!(
        "link graph on the searched tree's vertices: {} edges, {} spanning trees, {} usable",
        g.edges().len(),
        census.spanning_trees,
        census.valid
    );
}
