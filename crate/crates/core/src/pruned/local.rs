//! Top-k triplets containing a fixed query hyperedge.

use super::bounds::{edge_upper, pair_bound, triplet_bound, PartialRegions};
use super::collector::Collector;
use super::search::complete;
use crate::hypergraph::CanonicalHypergraph;
use crate::intersect::intersect_count;
use crate::triplet::TripletResult;
use crate::weights::Variant;

pub(super) fn local_search(
    h: &CanonicalHypergraph,
    v: Variant,
    q: u32,
    k: usize,
    degree_floor: usize,
) -> Vec<TripletResult> {
    let n = h.edge_count();
    let mut with_q: Vec<Vec<u32>> = vec![Vec::new(); n];
    for &u in h.edge(q) {
        let adj = h.node_edges(u);
        if adj.len() < degree_floor {
            continue;
        }
        for &e in adj {
            if e != q {
                with_q[e as usize].push(u);
            }
        }
    }
    let size = |e: u32| h.edge_size(e);
    let sq = size(q);
    let mut col = Collector::top(k);

    let partners: Vec<u32> = match v {
        Variant::Independent => (0..n as u32).filter(|&e| e != q).collect(),
        Variant::Disjoint | Variant::Common => (0..n as u32)
            .filter(|&e| !with_q[e as usize].is_empty())
            .collect(),
    };
    for (i, &a) in partners.iter().enumerate() {
        if !col.admits(edge_upper(v, sq)) {
            break;
        }
        if !col.admits(edge_upper(v, size(a))) {
            break;
        }
        let qa = &with_q[a as usize];
        if !col.admits(pair_bound(v, sq, size(a), qa.len())) {
            continue;
        }
        for &b in &partners[i + 1..] {
            if !col.admits(edge_upper(v, size(b))) {
                break;
            }
            let qb = &with_q[b as usize];
            if !col.admits(pair_bound(v, sq, size(b), qb.len())) {
                continue;
            }
            let ab = intersect_count(h.edge(a), h.edge(b));
            if v.needs_closed() && ab == 0 {
                continue;
            }
            let (ids, p) = arrange(h, [q, a, b], [qa.len(), qb.len(), ab]);
            if !col.admits_triplet(triplet_bound(v, p), ids) {
                continue;
            }
            let common = intersect_count(qa, qb) as u32;
            col.offer(TripletResult::new(ids, complete(p, common), v));
        }
    }
    col.into_sorted()
}

/// Orders `[q, a, b]` by rank and lays out the pair sizes
/// `[|q∩a|, |q∩b|, |a∩b|]` accordingly.
fn arrange(
    h: &CanonicalHypergraph,
    ids: [u32; 3],
    pairs: [usize; 3],
) -> ([u32; 3], PartialRegions) {
    let pair = |i: usize, j: usize| -> u32 {
        let (i, j) = (i.min(j), i.max(j));
        (match (i, j) {
            (0, 1) => pairs[0],
            (0, 2) => pairs[1],
            _ => pairs[2],
        }) as u32
    };
    let mut order = [0usize, 1, 2];
    order.sort_by_key(|&i| ids[i]);
    let [i, j, k] = order;
    let sorted = [ids[i], ids[j], ids[k]];
    let p = PartialRegions {
        x: h.edge_size(sorted[0]) as u32,
        y: h.edge_size(sorted[1]) as u32,
        z: h.edge_size(sorted[2]) as u32,
        xy: pair(i, j),
        xz: pair(i, k),
        yz: pair(j, k),
    };
    (sorted, p)
}
