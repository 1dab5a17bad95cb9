use std::cmp::Ordering;

use crate::hypergraph::Hypergraph;
use crate::weights::{RegionPartition, RegionSizes, Variant, Weight};

/// A scored triplet. `ids` are canonical ranks in ascending order and
/// `regions` follows the same order (`x` is `ids[0]`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TripletResult {
    pub ids: [u32; 3],
    pub regions: RegionSizes,
    pub weight: Weight,
    pub variant: Variant,
}

impl TripletResult {
    pub fn new(ids: [u32; 3], regions: RegionSizes, variant: Variant) -> Self {
        debug_assert!(ids[0] < ids[1] && ids[1] < ids[2]);
        TripletResult {
            ids,
            regions,
            weight: regions.weight(variant),
            variant,
        }
    }

    pub fn partition(&self) -> RegionPartition {
        self.regions
            .to_partition()
            .expect("stored regions are consistent")
    }

    pub fn labels<'a>(&self, h: &'a Hypergraph) -> [&'a str; 3] {
        self.ids.map(|id| h.edge_label(id))
    }

    pub fn contains(&self, edge: u32) -> bool {
        self.ids.contains(&edge)
    }

    /// Result order: higher weight first, then lexicographically smaller ids.
    pub fn rank_cmp(&self, other: &Self) -> Ordering {
        other
            .weight
            .cmp(&self.weight)
            .then_with(|| self.ids.cmp(&other.ids))
    }
}

/// Sorts best-first under [`TripletResult::rank_cmp`].
pub fn sort_ranked(results: &mut [TripletResult]) {
    results.sort_by(TripletResult::rank_cmp);
}
