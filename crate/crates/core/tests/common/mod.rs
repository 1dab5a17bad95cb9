#![allow(dead_code)]

use hmotif::synth::{gen_chung_lu, gen_er, zipf_sequences};
use hmotif::{canonicalize, CanonicalHypergraph, Hypergraph};

/// Three hyperedges with exclusive regions (7, 5, 6 | 2, 2, 3 | 1).
pub const WORKED: &str = "\
1 2 3 4 5 6 7 8 9 10 11 12
8 9 12 13 14 15 16 17 18 19 20
10 11 12 18 19 20 21 22 23 24 25 26
";

pub fn worked_example() -> CanonicalHypergraph {
    canonicalize(Hypergraph::load_hyperlist(WORKED.as_bytes()).unwrap().0)
}

/// Heavy-tailed Chung–Lu instance with at most 60 hyperedges and 80 nodes.
pub fn chung_lu_instance(seed: u64) -> CanonicalHypergraph {
    let edges = 20 + (seed % 41) as usize;
    let nodes = 30 + (seed * 7 % 51) as usize;
    let (d, s) = zipf_sequences(nodes, edges, 16, 1.3, seed).unwrap();
    canonicalize(gen_chung_lu(&d, &s, seed ^ 0x5eed).unwrap().hypergraph)
}

pub fn er_instance(seed: u64) -> CanonicalHypergraph {
    let edges = 15 + (seed % 30) as usize;
    let p = 0.04 + (seed % 5) as f64 * 0.03;
    canonicalize(gen_er(40, edges, p, seed).unwrap().hypergraph)
}

pub fn instances() -> impl Iterator<Item = (String, CanonicalHypergraph)> {
    (0..100u64)
        .map(|s| (format!("chung-lu/{s}"), chung_lu_instance(s)))
        .chain((0..100u64).map(|s| (format!("er/{s}"), er_instance(s))))
        .filter(|(_, h)| h.edge_count() >= 3)
}
