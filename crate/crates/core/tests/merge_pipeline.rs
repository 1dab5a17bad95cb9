use std::collections::BTreeMap;

use hmotif::merge::{build_merge_graph, component_records, components, export_dot};
use hmotif::{
    canonicalize, max_search, CanonicalHypergraph, Hypergraph, Mode, SearchConfig, Variant, Weight,
};

/// Two planted clusters of four hyperedges each (common cores of 10 and 6
/// nodes) plus a chain of background edges overlapping in single nodes.
fn planted() -> CanonicalHypergraph {
    let mut edges: Vec<Vec<u32>> = Vec::new();
    for i in 0..4 {
        let mut e: Vec<u32> = (1..=10).collect();
        e.extend([50 + 2 * i, 51 + 2 * i]);
        edges.push(e);
    }
    for i in 0..4 {
        let mut e: Vec<u32> = (101..=106).collect();
        e.push(150 + i);
        edges.push(e);
    }
    for i in 0..12 {
        edges.push(vec![300 + 2 * i, 301 + 2 * i, 302 + 2 * i]);
    }
    edges.push(vec![1, 101, 300]);
    edges.push(vec![2, 3, 102]);
    canonicalize(Hypergraph::from_id_edges(edges).0)
}

type DotEdges = BTreeMap<(u32, u32), (u32, f64)>;

/// Minimal reader for the DOT subset the exporter writes: node statements
/// with a quoted label and undirected edge statements with attributes.
fn parse_dot(text: &str) -> (BTreeMap<u32, String>, DotEdges) {
    let mut lines = text.lines();
    assert_eq!(lines.next().map(str::trim), Some("graph merge {"));
    let mut nodes = BTreeMap::new();
    let mut edges = BTreeMap::new();
    let mut closed = false;
    for line in lines {
        let line = line.trim();
        if line == "}" {
            closed = true;
            continue;
        }
        assert!(!closed, "statement after closing brace");
        let stmt = line.strip_suffix(';').expect("statement terminator");
        let (head, attrs) = stmt.split_once('[').expect("attribute list");
        let attrs = attrs.strip_suffix(']').expect("closing bracket");
        if let Some((a, b)) = head.split_once("--") {
            let (a, b): (u32, u32) = (a.trim().parse().unwrap(), b.trim().parse().unwrap());
            let kv: BTreeMap<&str, &str> = attrs
                .split(',')
                .map(|p| p.trim().split_once('=').expect("key=value"))
                .collect();
            let w = kv["weight"].parse().unwrap();
            let pw = kv["penwidth"].parse().unwrap();
            assert!(
                nodes.contains_key(&a) && nodes.contains_key(&b),
                "edge before its nodes"
            );
            assert!(edges.insert((a, b), (w, pw)).is_none(), "duplicate edge");
        } else {
            let id: u32 = head.trim().parse().unwrap();
            let label = attrs
                .strip_prefix("label=\"")
                .and_then(|s| s.strip_suffix('"'))
                .unwrap();
            nodes.insert(id, label.to_owned());
        }
    }
    assert!(closed);
    (nodes, edges)
}

#[test]
fn planted_clusters_become_components() {
    let h = planted();
    let cfg = SearchConfig::new(Variant::Common, Mode::Threshold(Weight::integer(5)));
    let triplets = max_search(&h, &cfg).unwrap();
    assert_eq!(triplets.len(), 8);

    let g = build_merge_graph(&triplets).unwrap();
    assert_eq!(g.total_weight(), 3 * triplets.len() as u64);
    let comps = components(&g);
    assert_eq!(comps.components.len(), 2);
    let mut labels: Vec<Vec<String>> = component_records(&comps, &h)
        .into_iter()
        .map(|r| r.members)
        .collect();
    labels.iter_mut().for_each(|m| m.sort());
    labels.sort();
    let as_strings = |r: std::ops::Range<u32>| r.map(|i| i.to_string()).collect::<Vec<_>>();
    assert_eq!(labels, vec![as_strings(0..4), as_strings(4..8)]);

    let (nodes, edges) = parse_dot(&export_dot(&g, &h));
    assert_eq!(nodes.len(), g.vertex_count());
    assert_eq!(edges.len(), g.edge_count());
    for (a, b, w) in g.edges() {
        let (dw, pw) = edges[&(a, b)];
        assert_eq!(dw, w);
        assert_eq!(pw, w as f64);
    }
    for (&v, label) in &nodes {
        assert_eq!(label, h.edge_label(v));
    }
}

#[test]
fn empty_merge_is_an_error() {
    assert!(build_merge_graph(&[]).is_err());
}
