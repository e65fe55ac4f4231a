use std::collections::HashSet;

use ucycle::linkage::linkable;
use ucycle::treebuild::{
    build_tree, check_properties, embed, embedded_forest, extend, extend_traced, find_base_tree,
    LinkTree,
};
use ucycle::{LabeledVertex, Perm};

fn lv(p: &str, x: u8) -> LabeledVertex {
    LabeledVertex::parse(p, x).unwrap()
}

fn has(tree: &LinkTree, v: &LabeledVertex) -> bool {
    tree.vertices().contains(v)
}

#[test]
fn base_tree_pins_and_leaves() {
    let t = find_base_tree().unwrap();
    for (p, x) in [
        ("1234", 1),
        ("2134", 3),
        ("2314", 4),
        ("2341", 5),
        ("3214", 2),
        ("2431", 3),
    ] {
        assert!(has(&t, &lv(p, x)), "missing ({p}, {x})");
    }
    let deg = t.degrees();
    for leaf in ["3124", "2413"] {
        let i = t.find(&leaf.parse().unwrap()).unwrap();
        assert_eq!(deg[i], 1, "v({leaf})");
    }
    let props = check_properties(&t).unwrap();
    assert!(props.all(), "{props:?}");
}

#[test]
fn moving_the_identity_label_breaks_property_two() {
    let t = find_base_tree().unwrap();
    let mut vertices = t.vertices().to_vec();
    let i = t.find(&Perm::identity(4)).unwrap();
    vertices[i] = lv("1234", 2);
    let broken = LinkTree::new(5, vertices, t.edges().to_vec()).unwrap();
    let props = check_properties(&broken).unwrap();
    assert!(!props.identity_label_one);
    assert!(props.one_label_per_perm);
}

#[test]
fn embedding_preserves_links_of_the_base_tree() {
    let t = find_base_tree().unwrap();
    assert_eq!(t.edges().len(), 23);
    for k in 0..5 {
        for &(i, j) in t.edges() {
            let u = embed(&t.vertices()[i], k).unwrap();
            let v = embed(&t.vertices()[j], k).unwrap();
            assert!(linkable(&u, &v).is_some(), "copy {k}: {u} -- {v}");
        }
    }
}

#[test]
fn designated_leaves_are_transported() {
    let t = find_base_tree().unwrap();
    let forest = embedded_forest(&[&t; 5]).unwrap();
    let deg = forest.degrees();
    let leaf_at = |p: &str| {
        let i = forest.find(&p.parse().unwrap()).unwrap();
        deg[i] == 1
    };
    // images of v(2413) and v(3124) used by the surgery and by the next level
    assert!(leaf_at("12345"));
    assert!(leaf_at("34215"));
    assert!(leaf_at("31245"));
    assert!(leaf_at("24135"));
    // every embedded leaf of either designated vertex is a leaf
    for leaf in ["3124", "2413"] {
        let v = &t.vertices()[t.find(&leaf.parse().unwrap()).unwrap()];
        for k in 0..5 {
            let img = embed(v, k).unwrap();
            let i = forest.vertices().iter().position(|w| w == &img).unwrap();
            assert_eq!(deg[i], 1, "{img}");
        }
    }
    assert_eq!(forest.components(), 5);
}

#[test]
fn hub_edges_are_linkable() {
    for n in 5..=9usize {
        let id = Perm::identity(n);
        let hub = LabeledVertex::new(id, 1).unwrap();
        for k in 2..=n {
            let mut p: Vec<u8> = (2..=k as u8).collect();
            p.push(1);
            p.extend(k as u8 + 1..=n as u8);
            let v = LabeledVertex::new(Perm::new(&p).unwrap(), k as u8 + 1).unwrap();
            assert!(linkable(&hub, &v).is_some(), "{hub} -- {v}");
        }
    }
}

#[test]
fn induction_keeps_properties_and_component_counts() {
    let mut t = find_base_tree().unwrap();
    for n in 5..=9 {
        assert_eq!(t.n(), n);
        assert!(check_properties(&t).unwrap().all(), "n = {n}");
        t.validate().unwrap();
        if n < 9 {
            let (next, trace) = extend_traced(&t).unwrap();
            assert_eq!(trace.forest_components, n);
            assert_eq!(trace.after_hub, 2);
            assert_eq!(trace.after_bridge, 1);
            t = next;
        }
    }
}

#[test]
fn build_tree_sizes() {
    assert_eq!(build_tree(5).unwrap(), find_base_tree().unwrap());
    let t7 = build_tree(7).unwrap();
    assert_eq!(t7.len(), 720);
    assert_eq!(t7.edges().len(), 719);
    assert_eq!(t7.link_specs().unwrap().len(), 719);
    assert!(has(&build_tree(6).unwrap(), &lv("12345", 1)));
    assert!(build_tree(4).is_err());
}

#[test]
fn degrees_and_splice_positions() {
    for n in 5..=8 {
        let t = build_tree(n).unwrap();
        let specs = t.validate().unwrap();
        let deg = t.degrees();
        assert!(deg.iter().all(|&d| d < n));
        let mut used = HashSet::new();
        for (&(i, j), s) in t.edges().iter().zip(&specs) {
            assert!(used.insert((i, s.position)));
            assert!(used.insert((j, s.position)));
        }
        let perms: HashSet<&Perm> = t.vertices().iter().map(|v| v.perm()).collect();
        assert_eq!(perms.len(), t.len());
    }
}

#[test]
fn extend_rejects_trees_without_the_properties() {
    let t = find_base_tree().unwrap();
    let mut vertices = t.vertices().to_vec();
    let i = t.find(&Perm::identity(4)).unwrap();
    vertices[i] = lv("1234", 2);
    let broken = LinkTree::new(5, vertices, t.edges().to_vec()).unwrap();
    assert!(extend(&broken).is_err());
}
