mod common;

use hmotif::exhaustive::{pairwise_intersection_sizes, pairwise_intersections};
use hmotif::synth::degree_sequence;
use hmotif::{canonicalize, region_sizes, Hypergraph, HypergraphStats, RegionSizes};
use proptest::prelude::*;

#[test]
fn worked_example_construction() {
    let (h, w) = Hypergraph::load_hyperlist(common::WORKED.as_bytes()).unwrap();
    assert_eq!(w.duplicate_tokens, 0);
    assert_eq!(
        h.stats(),
        HypergraphStats {
            node_count: 26,
            edge_count: 3,
            degree_sum: 35,
            max_edge_size: 12
        }
    );
    assert!(h.check_invariants());
    assert_eq!(
        region_sizes(&h, [0, 1, 2]).unwrap(),
        RegionSizes::new(12, 11, 12, 3, 3, 4, 1)
    );
    assert_eq!(degree_sequence(&h).1, vec![12, 11, 12]);

    let index = pairwise_intersections(&h);
    assert_eq!(index.len(), 3);
    assert_eq!(
        (index.size(0, 1), index.size(0, 2), index.size(1, 2)),
        (3, 3, 4)
    );
    assert_eq!(index.get(1, 2).unwrap().nodes.len(), 4);
}

#[test]
fn pair_index_counts_co_memberships() {
    let h = common::chung_lu_instance(3);
    let total: u64 = pairwise_intersection_sizes(&h)
        .iter()
        .map(|(_, e)| e.size as u64)
        .sum();
    let wedges: u64 = (0..h.node_count() as u32)
        .map(|v| {
            let d = h.node_degree(v) as u64;
            d * d.saturating_sub(1) / 2
        })
        .sum();
    assert_eq!(total, wedges);
    for (&(a, b), e) in pairwise_intersections(&h).iter() {
        assert!(a < b && e.size > 0);
        assert_eq!(e.nodes, hmotif::intersect::intersect(h.edge(a), h.edge(b)));
    }
}

#[test]
fn bipartite_and_hyperlist_agree() {
    let (from_list, _) = Hypergraph::load_hyperlist(common::WORKED.as_bytes()).unwrap();
    let mut pairs = Vec::new();
    from_list.write_bipartite(&mut pairs).unwrap();
    let (from_pairs, _) = Hypergraph::load_bipartite(pairs.as_slice()).unwrap();
    assert_eq!(from_list.edges(), from_pairs.edges());
    assert_eq!(
        canonicalize(from_list).edges(),
        canonicalize(from_pairs).edges()
    );
}

#[test]
fn canonical_sizes_are_a_permutation() {
    let (d, s) = hmotif::synth::zipf_sequences(80, 50, 20, 1.2, 9).unwrap();
    let h = hmotif::synth::gen_chung_lu(&d, &s, 9).unwrap().hypergraph;
    let mut before: Vec<usize> = h.edges().iter().map(Vec::len).collect();
    let c = canonicalize(h);
    let after: Vec<usize> = c.edges().iter().map(Vec::len).collect();
    assert!(after.windows(2).all(|w| w[0] >= w[1]));
    before.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(before, after);
    assert!(c.check_invariants());
}

fn arb_edges() -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0u32..40, 1..8), 1..25)
}

proptest! {
    #[test]
    fn export_reload_is_isomorphic(edges in arb_edges()) {
        let (h, _) = Hypergraph::from_id_edges(edges);
        prop_assert!(h.check_invariants());
        let mut text = Vec::new();
        h.write_hyperlist(&mut text).unwrap();
        let (back, w) = Hypergraph::load_hyperlist(text.as_slice()).unwrap();
        prop_assert_eq!(w.duplicate_tokens, 0);
        let label_sets = |g: &Hypergraph| -> Vec<Vec<String>> {
            canonicalize(g.clone())
                .edges()
                .iter()
                .map(|e| {
                    let mut l: Vec<String> = e.iter().map(|&v| g.node_label(v).to_owned()).collect();
                    l.sort();
                    l
                })
                .collect()
        };
        prop_assert_eq!(label_sets(&h), label_sets(&back));
        prop_assert_eq!(h.stats(), back.stats());
    }

    #[test]
    fn canonicalize_idempotent(edges in arb_edges()) {
        let once = canonicalize(Hypergraph::from_id_edges(edges).0);
        let twice = canonicalize(once.graph().clone());
        prop_assert!(twice.rank_to_original().iter().enumerate().all(|(i, &r)| i as u32 == r));
        prop_assert!(once.check_invariants());
    }
}
