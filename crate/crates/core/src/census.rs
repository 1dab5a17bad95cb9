//! h-motif census: classification of connected triplets by which of their
//! seven regions are non-empty, up to permutation of the three hyperedges.
//!
//! Patterns are 7-bit words over the regions `(a, b, c, ab, ac, bc, abc)`
//! with `a` as the most significant bit, so numeric order equals
//! lexicographic order of the bit string. A class is represented by the
//! smallest word among the six permutations of its pattern. Class ids
//! number the 30 connected classes by ascending canonical word, starting
//! at 1; they do not follow any published numbering.

use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::exhaustive::pairwise_intersections;
use crate::hypergraph::Hypergraph;
use crate::intersect::intersect_count;
use crate::weights::{RegionPartition, RegionSizes};

const REGIONS: usize = 7;
/// Pair regions in bit order: ab, ac, bc.
const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];
const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern(u8);

impl Pattern {
    pub fn from_bits(bits: u8) -> Self {
        assert!(bits < 128);
        Pattern(bits)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    /// Whether region `i` (in `a, b, c, ab, ac, bc, abc` order) is non-empty.
    pub fn has(self, region: usize) -> bool {
        self.0 >> (REGIONS - 1 - region) & 1 == 1
    }

    fn with(regions: [bool; REGIONS]) -> Self {
        Pattern(regions.iter().fold(0, |w, &r| (w << 1) | r as u8))
    }

    fn regions(self) -> [bool; REGIONS] {
        std::array::from_fn(|i| self.has(i))
    }

    /// Relabels hyperedge `i` as `perm[i]`.
    pub fn permute(self, perm: [usize; 3]) -> Self {
        let r = self.regions();
        let mut out = [false; REGIONS];
        for i in 0..3 {
            out[perm[i]] = r[i];
        }
        for (k, &(i, j)) in PAIRS.iter().enumerate() {
            let (pi, pj) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
            let target = PAIRS.iter().position(|&p| p == (pi, pj)).expect("pair");
            out[3 + target] = r[3 + k];
        }
        out[6] = r[6];
        Pattern::with(out)
    }

    pub fn canonical(self) -> Self {
        PERMUTATIONS
            .iter()
            .map(|&p| self.permute(p))
            .min()
            .expect("six permutations")
    }

    fn pair_intersects(self, k: usize) -> bool {
        self.has(3 + k) || self.has(6)
    }

    /// At least two of the three pairs intersect.
    pub fn is_connected(self) -> bool {
        (0..3).filter(|&k| self.pair_intersects(k)).count() >= 2
    }

    pub fn is_closed(self) -> bool {
        (0..3).all(|k| self.pair_intersects(k))
    }

    /// Some pair of hyperedges is forced to be equal as sets: neither has
    /// an exclusive region nor a region shared only with the third edge.
    pub fn forces_duplicate(self) -> bool {
        PAIRS.iter().any(|&(i, j)| {
            let third = 3 - i - j;
            let shared_with_third = |e: usize| {
                let (lo, hi) = (e.min(third), e.max(third));
                3 + PAIRS.iter().position(|&p| p == (lo, hi)).expect("pair")
            };
            !self.has(i)
                && !self.has(j)
                && !self.has(shared_with_third(i))
                && !self.has(shared_with_third(j))
        })
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:07b}", self.0)
    }
}

impl Serialize for Pattern {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn pattern_of(p: &RegionPartition) -> Pattern {
    Pattern::with(p.as_array().map(|s| s > 0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MotifClass {
    /// 1-based, by ascending canonical pattern.
    pub id: usize,
    pub pattern: Pattern,
    pub closed: bool,
    /// Every triplet of this class contains two hyperedges that are equal
    /// as node sets.
    pub forced_duplicate: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Motif(MotifClass),
    Disconnected,
}

struct Table {
    classes: Vec<MotifClass>,
    by_pattern: [Option<usize>; 128],
}

fn table() -> &'static Table {
    static TABLE: OnceLock<Table> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut canon: Vec<Pattern> = (0..128u8)
            .map(Pattern)
            .filter(|p| p.is_connected())
            .map(Pattern::canonical)
            .collect();
        canon.sort();
        canon.dedup();
        let classes: Vec<MotifClass> = canon
            .iter()
            .enumerate()
            .map(|(i, &p)| MotifClass {
                id: i + 1,
                pattern: p,
                closed: p.is_closed(),
                forced_duplicate: p.forces_duplicate(),
            })
            .collect();
        let mut by_pattern = [None; 128];
        for w in 0..128u8 {
            let p = Pattern(w);
            if p.is_connected() {
                by_pattern[w as usize] = canon.binary_search(&p.canonical()).ok();
            }
        }
        Table {
            classes,
            by_pattern,
        }
    })
}

/// All connected h-motif classes, ordered by id.
pub fn motif_classes() -> &'static [MotifClass] {
    &table().classes
}

pub fn canonical_class(p: Pattern) -> Classification {
    let t = table();
    match t.by_pattern[p.0 as usize] {
        Some(i) => Classification::Motif(t.classes[i]),
        None => Classification::Disconnected,
    }
}

pub fn classify(r: &RegionSizes) -> Classification {
    canonical_class(pattern_of(&r.to_partition().expect("consistent regions")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    /// `counts[id - 1]` is the number of triplets in class `id`.
    pub counts: Vec<u64>,
    pub connected_triplets: u64,
    pub closed_triplets: u64,
    /// Triplets in a forced-duplicate class (two set-equal hyperedges).
    pub duplicate_triplets: u64,
    pub max_edge_size: Option<usize>,
    pub edges_considered: usize,
}

impl CensusReport {
    fn empty(max_edge_size: Option<usize>, edges_considered: usize) -> Self {
        CensusReport {
            counts: vec![0; motif_classes().len()],
            connected_triplets: 0,
            closed_triplets: 0,
            duplicate_triplets: 0,
            max_edge_size,
            edges_considered,
        }
    }

    pub fn count(&self, class: &MotifClass) -> u64 {
        self.counts[class.id - 1]
    }

    pub fn record(&mut self, class: &MotifClass) {
        self.counts[class.id - 1] += 1;
        self.connected_triplets += 1;
        self.closed_triplets += class.closed as u64;
        self.duplicate_triplets += class.forced_duplicate as u64;
    }

    fn absorb(mut self, other: CensusReport) -> Self {
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
        self.connected_triplets += other.connected_triplets;
        self.closed_triplets += other.closed_triplets;
        self.duplicate_triplets += other.duplicate_triplets;
        self
    }

    /// `class_id  canonical_pattern_bits  closed_flag  count`, with header.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("class_id\tcanonical_pattern_bits\tclosed_flag\tcount\n");
        for c in motif_classes() {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                c.id,
                c.pattern,
                c.closed as u8,
                self.count(c)
            ));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let classes: Vec<_> = motif_classes()
            .iter()
            .map(|c| {
                serde_json::json!({
                    "class_id": c.id,
                    "canonical_pattern_bits": c.pattern,
                    "closed": c.closed,
                    "forced_duplicate": c.forced_duplicate,
                    "count": self.count(c),
                })
            })
            .collect();
        serde_json::json!({
            "schema_version": crate::report::SCHEMA_VERSION,
            "max_edge_size": self.max_edge_size,
            "edges_considered": self.edges_considered,
            "connected_triplets": self.connected_triplets,
            "closed_triplets": self.closed_triplets,
            "duplicate_triplets": self.duplicate_triplets,
            "classes": classes,
        })
    }
}

/// Counts every connected triplet by class, optionally ignoring hyperedges
/// larger than `max_edge_size`.
///
/// Triplets are enumerated as wedges around a center hyperedge that meets
/// both others. An open triplet has exactly one such center; a closed one
/// is counted only at its lowest-id member.
pub fn census(h: &Hypergraph, max_edge_size: Option<usize>) -> CensusReport {
    let filtered;
    let h = match max_edge_size {
        Some(s) => {
            filtered = h.retain_edges(|e| e.len() <= s);
            &filtered
        }
        None => h,
    };
    let n = h.edge_count();
    let index = pairwise_intersections(h);
    let mut neighbors: Vec<Vec<u32>> = vec![Vec::new(); n];
    for &(a, b) in index.iter().map(|(k, _)| k) {
        neighbors[a as usize].push(b);
        neighbors[b as usize].push(a);
    }
    neighbors.par_iter_mut().for_each(|l| l.sort_unstable());

    (0..n as u32)
        .into_par_iter()
        .fold(
            || CensusReport::empty(max_edge_size, n),
            |mut report, c| {
                let around = &neighbors[c as usize];
                for (i, &a) in around.iter().enumerate() {
                    let ca = index.get(c, a).expect("neighbor pair");
                    for &b in &around[i + 1..] {
                        let ab = index.get(a, b);
                        if ab.is_some() && c > a {
                            continue;
                        }
                        let cb = index.get(c, b).expect("neighbor pair");
                        let common = intersect_count(&ca.nodes, &cb.nodes) as u32;
                        let mut ids = [c, a, b];
                        ids.sort_unstable();
                        let size = |e: u32| h.edge_size(e) as u32;
                        let pair = |p: u32, q: u32| index.size(p, q);
                        let r = RegionSizes {
                            x: size(ids[0]),
                            y: size(ids[1]),
                            z: size(ids[2]),
                            xy: pair(ids[0], ids[1]),
                            xz: pair(ids[0], ids[2]),
                            yz: pair(ids[1], ids[2]),
                            xyz: common,
                        };
                        match classify(&r) {
                            Classification::Motif(class) => report.record(&class),
                            Classification::Disconnected => unreachable!("wedges are connected"),
                        }
                    }
                }
                report
            },
        )
        .reduce(
            || CensusReport::empty(max_edge_size, n),
            CensusReport::absorb,
        )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thirty_classes_twenty_four_closed() {
        let classes = motif_classes();
        assert_eq!(classes.len(), 30);
        assert_eq!(classes.iter().filter(|c| c.closed).count(), 24);
        assert_eq!(classes.iter().filter(|c| c.forced_duplicate).count(), 4);
        let connected = (0..128u8).filter(|&w| Pattern(w).is_connected()).count();
        assert!(connected > 30);
    }

    #[test]
    fn permutation_invariance() {
        for w in 0..128u8 {
            let p = Pattern(w);
            for perm in PERMUTATIONS {
                assert_eq!(canonical_class(p.permute(perm)), canonical_class(p));
                assert_eq!(p.permute(perm).canonical(), p.canonical());
            }
        }
    }

    #[test]
    fn pattern_examples() {
        let worked_example = RegionPartition {
            a: 7,
            b: 5,
            c: 6,
            ab: 2,
            ac: 2,
            bc: 3,
            abc: 1,
        };
        assert_eq!(pattern_of(&worked_example).bits(), 0b111_1111);
        let Classification::Motif(c) = canonical_class(pattern_of(&worked_example)) else {
            panic!()
        };
        assert!(c.closed && !c.forced_duplicate);
        assert_eq!(c.id, 30);

        let apart = RegionPartition {
            a: 2,
            b: 2,
            c: 2,
            ab: 0,
            ac: 0,
            bc: 0,
            abc: 0,
        };
        assert_eq!(pattern_of(&apart).to_string(), "1110000");
        assert_eq!(
            canonical_class(pattern_of(&apart)),
            Classification::Disconnected
        );

        let same = RegionPartition {
            a: 0,
            b: 0,
            c: 0,
            ab: 0,
            ac: 0,
            bc: 0,
            abc: 4,
        };
        assert_eq!(pattern_of(&same).to_string(), "0000001");
    }

    #[test]
    fn forced_duplicate_pairs() {
        // a, b, ac, bc empty: a and b coincide
        let only_ab = Pattern::from_bits(0b001_1000);
        assert!(only_ab.forces_duplicate());
        assert_eq!(canonical_class(only_ab), Classification::Disconnected);
        let with_common = Pattern::from_bits(0b001_1001);
        let Classification::Motif(c) = canonical_class(with_common) else {
            panic!()
        };
        assert!(c.forced_duplicate && c.closed);
    }

    #[test]
    fn identical_edges_form_duplicate_class() {
        let (h, _) = Hypergraph::from_id_edges(vec![vec![1, 2, 3]; 3]);
        let r = census(&h, None);
        assert_eq!((r.connected_triplets, r.duplicate_triplets), (1, 1));
    }

    #[test]
    fn size_filter_drops_large_edges() {
        let (h, _) =
            Hypergraph::from_id_edges(vec![vec![1, 2, 3, 4], vec![1, 5], vec![1, 6], vec![5, 6]]);
        assert_eq!(census(&h, None).connected_triplets, 4);
        let r = census(&h, Some(2));
        assert_eq!((r.connected_triplets, r.edges_considered), (1, 3));
    }
}
