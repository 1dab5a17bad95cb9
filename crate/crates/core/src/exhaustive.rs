//! Exhaustive search over the candidate set of each variant.
//!
//! This is the reference algorithm: it builds every pairwise intersection
//! up front and then scans the candidate triplets in ascending rank order
//! `x < y < z`, stopping a loop as soon as the cardinality bound of the
//! current hyperedge can no longer beat the best weight. Candidates are all
//! triplets for the independent variant and closed triplets otherwise.

use std::collections::HashMap;

use crate::error::SearchError;
use crate::hypergraph::{CanonicalHypergraph, Hypergraph};
use crate::intersect::{intersect3_count, intersect_count};
use crate::pruned::bounds::edge_upper;
use crate::triplet::TripletResult;
use crate::weights::{region_sizes, RegionSizes, Variant};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairEntry {
    pub size: u32,
    /// Sorted intersection; empty when the index stores sizes only.
    pub nodes: Vec<u32>,
}

/// Non-empty pairwise intersections keyed by `(low id, high id)`.
#[derive(Debug, Clone)]
pub struct PairIndex {
    map: HashMap<(u32, u32), PairEntry>,
    partners: Vec<Vec<u32>>,
}

impl PairIndex {
    fn build(h: &Hypergraph, keep_nodes: bool) -> Self {
        let mut map: HashMap<(u32, u32), PairEntry> = HashMap::new();
        for x in 0..h.edge_count() as u32 {
            for &u in h.edge(x) {
                let adj = h.node_edges(u);
                let start = adj.partition_point(|&e| e <= x);
                for &y in &adj[start..] {
                    let entry = map.entry((x, y)).or_insert(PairEntry {
                        size: 0,
                        nodes: Vec::new(),
                    });
                    entry.size += 1;
                    if keep_nodes {
                        entry.nodes.push(u);
                    }
                }
            }
        }
        let mut partners = vec![Vec::new(); h.edge_count()];
        for &(x, y) in map.keys() {
            partners[x as usize].push(y);
        }
        for p in &mut partners {
            p.sort_unstable();
        }
        PairIndex { map, partners }
    }

    pub fn get(&self, a: u32, b: u32) -> Option<&PairEntry> {
        self.map.get(&(a.min(b), a.max(b)))
    }

    pub fn size(&self, a: u32, b: u32) -> u32 {
        self.get(a, b).map_or(0, |e| e.size)
    }

    /// Hyperedges with a higher id than `x` that intersect it, ascending.
    pub fn partners(&self, x: u32) -> &[u32] {
        &self.partners[x as usize]
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32), &PairEntry)> {
        self.map.iter()
    }
}

/// Every non-empty pairwise intersection with its node list.
pub fn pairwise_intersections(h: &Hypergraph) -> PairIndex {
    PairIndex::build(h, true)
}

/// Like [`pairwise_intersections`] but stores only sizes.
pub fn pairwise_intersection_sizes(h: &Hypergraph) -> PairIndex {
    PairIndex::build(h, false)
}

/// Maximum-weight triplet of the candidate set. Among equal weights the
/// lexicographically first `(x, y, z)` wins. Returns `Ok(None)` when the
/// candidate set is empty (no closed triplet for disjoint/common).
pub fn basic_search(
    h: &CanonicalHypergraph,
    v: Variant,
) -> Result<Option<TripletResult>, SearchError> {
    let n = h.edge_count();
    if n < 3 {
        return Err(SearchError::TooFewEdges(n));
    }
    let mut best: Option<TripletResult> = None;
    // strict: a later triplet of equal weight never replaces the incumbent
    let alive = |best: &Option<TripletResult>, e: u32| {
        best.is_none_or(|b| edge_upper(v, h.edge_size(e)) > b.weight)
    };
    let offer = |best: &mut Option<TripletResult>, t: TripletResult| {
        if best.is_none_or(|b| t.weight > b.weight) {
            *best = Some(t);
        }
    };

    match v {
        Variant::Independent => {
            let index = pairwise_intersection_sizes(h);
            let n = n as u32;
            'x: for x in 0..n {
                if !alive(&best, x) {
                    break;
                }
                for y in x + 1..n {
                    if !alive(&best, y) {
                        continue 'x;
                    }
                    let xy = index.size(x, y);
                    for z in y + 1..n {
                        if !alive(&best, z) {
                            break;
                        }
                        let (xz, yz) = (index.size(x, z), index.size(y, z));
                        let xyz = if xy > 0 && xz > 0 && yz > 0 {
                            intersect3_count(h.edge(x), h.edge(y), h.edge(z)) as u32
                        } else {
                            0
                        };
                        let r = sizes_of(h, [x, y, z], xy, xz, yz, xyz);
                        offer(&mut best, TripletResult::new([x, y, z], r, v));
                    }
                }
            }
        }
        Variant::Disjoint | Variant::Common => {
            let index = pairwise_intersections(h);
            'x: for x in 0..n as u32 {
                if !alive(&best, x) {
                    break;
                }
                for &y in index.partners(x) {
                    if !alive(&best, y) {
                        continue 'x;
                    }
                    let nxy = index.get(x, y).expect("partner pair is indexed");
                    for &z in index.partners(y) {
                        if !alive(&best, z) {
                            break;
                        }
                        let Some(nxz) = index.get(x, z) else { continue };
                        let nyz = index.get(y, z).expect("partner pair is indexed");
                        let xyz = intersect_count(&nxy.nodes, &nyz.nodes) as u32;
                        let r = sizes_of(h, [x, y, z], nxy.size, nxz.size, nyz.size, xyz);
                        offer(&mut best, TripletResult::new([x, y, z], r, v));
                    }
                }
            }
        }
    }
    Ok(best)
}

fn sizes_of(h: &Hypergraph, ids: [u32; 3], xy: u32, xz: u32, yz: u32, xyz: u32) -> RegionSizes {
    RegionSizes {
        x: h.edge_size(ids[0]) as u32,
        y: h.edge_size(ids[1]) as u32,
        z: h.edge_size(ids[2]) as u32,
        xy,
        xz,
        yz,
        xyz,
    }
}

pub const DEFAULT_BRUTE_FORCE_CAP: u128 = 5_000_000;

/// Every candidate triplet with its weight, in lexicographic order, computed
/// directly from the hyperedge lists without any pruning.
pub fn brute_force_all(
    h: &Hypergraph,
    v: Variant,
    cap: u128,
) -> Result<Vec<TripletResult>, SearchError> {
    let n = h.edge_count();
    if n < 3 {
        return Err(SearchError::TooFewEdges(n));
    }
    let n128 = n as u128;
    let count = n128 * (n128 - 1) * (n128 - 2) / 6;
    if count > cap {
        return Err(SearchError::CapExceeded { count, cap });
    }
    let n = n as u32;
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                let r = region_sizes(h, [x, y, z]).expect("distinct in-range ids");
                if v.needs_closed() && !r.is_closed() {
                    continue;
                }
                out.push(TripletResult::new([x, y, z], r, v));
            }
        }
    }
    Ok(out)
}

/// Maximum of [`brute_force_all`] under the same tie rule as the searches.
pub fn brute_force_max(
    h: &Hypergraph,
    v: Variant,
    cap: u128,
) -> Result<Option<TripletResult>, SearchError> {
    Ok(brute_force_all(h, v, cap)?
        .into_iter()
        .min_by(TripletResult::rank_cmp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::canonicalize;

    fn canon(edges: Vec<Vec<u32>>) -> CanonicalHypergraph {
        canonicalize(Hypergraph::from_id_edges(edges).0)
    }

    #[test]
    fn disjoint_edges() {
        let h = canon(vec![
            vec![1, 2, 3, 4, 5],
            vec![6, 7, 8, 9],
            vec![10, 11, 12],
            vec![13, 14],
        ]);
        assert!(pairwise_intersections(&h).is_empty());
        let best = basic_search(&h, Variant::Independent).unwrap().unwrap();
        assert_eq!(best.weight.parts(), (3, 1));
        assert_eq!(best.ids, [0, 1, 2]);
        assert_eq!(basic_search(&h, Variant::Disjoint).unwrap(), None);
        assert_eq!(basic_search(&h, Variant::Common).unwrap(), None);
    }

    #[test]
    fn too_few_edges() {
        let h = canon(vec![vec![1], vec![2]]);
        assert_eq!(
            basic_search(&h, Variant::Common),
            Err(SearchError::TooFewEdges(2))
        );
        assert!(brute_force_all(&h, Variant::Common, 10).is_err());
    }

    #[test]
    fn brute_force_counts_and_cap() {
        let h = canon(vec![vec![1, 2], vec![2, 3], vec![3, 1]]);
        assert_eq!(
            brute_force_all(&h, Variant::Independent, 10).unwrap().len(),
            1
        );
        let h = canon((0..6).map(|i| vec![i, i + 1]).collect());
        assert_eq!(
            brute_force_all(&h, Variant::Independent, 100)
                .unwrap()
                .len(),
            20
        );
        assert!(matches!(
            brute_force_all(&h, Variant::Independent, 19),
            Err(SearchError::CapExceeded { count: 20, cap: 19 })
        ));
    }

    #[test]
    fn zero_weight_maximum_is_still_returned() {
        // three identical edges: every independent region is empty
        let h = canon(vec![vec![1, 2, 3, 4]; 3]);
        let best = basic_search(&h, Variant::Independent).unwrap().unwrap();
        assert_eq!(best.weight, crate::weights::Weight::ZERO);
        assert_eq!(
            basic_search(&h, Variant::Common)
                .unwrap()
                .unwrap()
                .weight
                .parts(),
            (4, 1)
        );
    }
}
