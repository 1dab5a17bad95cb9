mod common;

use std::collections::{BTreeMap, BTreeSet};

use hmotif::census::{census, motif_classes};
use hmotif::synth::{gen_chung_lu, zipf_sequences};
use hmotif::Hypergraph;

/// Pattern word of three node sets: bit per region (a, b, c, ab, ac, bc, abc),
/// `a` most significant.
fn pattern(sets: [&BTreeSet<u32>; 3]) -> u8 {
    let mut present = [false; 7];
    let union: BTreeSet<u32> = sets.iter().flat_map(|s| s.iter().copied()).collect();
    for v in union {
        let m = sets.map(|s| s.contains(&v));
        let region = match m {
            [true, false, false] => 0,
            [false, true, false] => 1,
            [false, false, true] => 2,
            [true, true, false] => 3,
            [true, false, true] => 4,
            [false, true, true] => 5,
            _ => 6,
        };
        present[region] = true;
    }
    present.iter().fold(0, |w, &p| (w << 1) | p as u8)
}

/// Independent classifier: canonical word by permuting the sets themselves.
fn brute_census(h: &Hypergraph, max_size: Option<usize>) -> BTreeMap<u8, u64> {
    let sets: Vec<BTreeSet<u32>> = h
        .edges()
        .iter()
        .filter(|e| max_size.is_none_or(|s| e.len() <= s))
        .map(|e| e.iter().copied().collect())
        .collect();
    let n = sets.len();
    let meets = |a: usize, b: usize| !sets[a].is_disjoint(&sets[b]);
    let mut counts = BTreeMap::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let links = [meets(a, b), meets(a, c), meets(b, c)]
                    .iter()
                    .filter(|&&m| m)
                    .count();
                if links < 2 {
                    continue;
                }
                let perms = [
                    [a, b, c],
                    [a, c, b],
                    [b, a, c],
                    [b, c, a],
                    [c, a, b],
                    [c, b, a],
                ];
                let word = perms
                    .iter()
                    .map(|p| pattern([&sets[p[0]], &sets[p[1]], &sets[p[2]]]))
                    .min()
                    .unwrap();
                *counts.entry(word).or_insert(0) += 1;
            }
        }
    }
    counts
}

fn library_census(h: &Hypergraph, max_size: Option<usize>) -> BTreeMap<u8, u64> {
    let report = census(h, max_size);
    let by_word: BTreeMap<u8, u64> = motif_classes()
        .iter()
        .filter(|c| report.count(c) > 0)
        .map(|c| (c.pattern.bits(), report.count(c)))
        .collect();
    assert_eq!(report.counts.iter().sum::<u64>(), report.connected_triplets);
    by_word
}

fn instance(seed: u64) -> Hypergraph {
    let (d, s) = zipf_sequences(35, 30, 12, 1.1, seed).unwrap();
    gen_chung_lu(&d, &s, seed).unwrap().hypergraph
}

#[test]
fn census_matches_brute_force() {
    for seed in 0..50 {
        let h = instance(seed);
        assert_eq!(
            library_census(&h, None),
            brute_census(&h, None),
            "seed {seed}"
        );
        assert_eq!(
            library_census(&h, Some(4)),
            brute_census(&h, Some(4)),
            "seed {seed} filtered"
        );
    }
}

#[test]
fn worked_example_is_one_fully_populated_triplet() {
    let h = common::worked_example();
    let report = census(&h, None);
    assert_eq!(report.connected_triplets, 1);
    let full = motif_classes()
        .iter()
        .find(|c| c.pattern.bits() == 0x7f)
        .unwrap();
    assert_eq!(report.count(full), 1);
}

#[test]
fn census_ignores_edge_order() {
    let h = instance(77);
    let mut edges = h.edges().to_vec();
    edges.reverse();
    let (rev, _) = Hypergraph::from_id_edges(edges);
    assert_eq!(census(&h, None).counts, census(&rev, None).counts);
}
