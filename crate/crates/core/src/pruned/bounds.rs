//! Upper bounds on triplet weight from partial information.
//!
//! With `x = |e_x|` etc. and `m = min(xy, xz, yz)`:
//!
//! * independent: `W1 <= Ŵ1 <= (min(y, z) - yz) / (yz + 1) <= min(x, y, z)`,
//!   where `Ŵ1` is the closed form evaluated at `xyz = m`;
//! * disjoint: `W2 <= m - xyz <= floor(|e| / 2)` for every member `e`,
//!   and `W2 <= m <= yz`;
//! * common: `W3 = xyz <= m <= yz <= |e|`.
//!
//! Searches keep a candidate only while its bound reaches the current
//! threshold.

use crate::weights::{Variant, Weight};

/// Bound on the weight of any triplet containing a hyperedge of `size`.
pub fn edge_upper(v: Variant, size: usize) -> Weight {
    match v {
        Variant::Disjoint => Weight::integer(size as u64 / 2),
        Variant::Independent | Variant::Common => Weight::integer(size as u64),
    }
}

/// Whether a hyperedge of `size` can still beat `best` strictly.
pub fn edge_bound(v: Variant, size: usize, best: Weight) -> bool {
    edge_upper(v, size) > best
}

/// Bound on any triplet containing two hyperedges of sizes `sy`, `sz`
/// whose intersection has `d` nodes.
pub fn pair_bound(v: Variant, sy: usize, sz: usize, d: usize) -> Weight {
    debug_assert!(d <= sy.min(sz));
    match v {
        Variant::Independent => Weight::new((sy.min(sz) - d) as u64, d as u64 + 1),
        Variant::Disjoint | Variant::Common => Weight::integer(d as u64),
    }
}

/// Cardinalities and pairwise intersection sizes of a triplet whose
/// common region has not been computed yet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartialRegions {
    pub x: u32,
    pub y: u32,
    pub z: u32,
    pub xy: u32,
    pub xz: u32,
    pub yz: u32,
}

pub fn triplet_bound(v: Variant, p: PartialRegions) -> Weight {
    let m = p.xy.min(p.xz).min(p.yz) as i64;
    match v {
        Variant::Independent => {
            let (x, y, z) = (p.x as i64, p.y as i64, p.z as i64);
            let (xy, xz, yz) = (p.xy as i64, p.xz as i64, p.yz as i64);
            // every term is >= 0 for a realizable triplet; clamping only loosens
            let num = (x - xy - xz).min(y - xy - yz).min(z - xz - yz) + m;
            Weight::new(num.max(0) as u64, (xy + xz + yz - 2 * m + 1) as u64)
        }
        Variant::Disjoint | Variant::Common => Weight::integer(m as u64),
    }
}
