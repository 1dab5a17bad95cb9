//! Pruned search for maximum-weight triplets.
//!
//! Hyperedges are visited in rank order as the middle element `y`. For each
//! `y` the intersections with higher-ranked hyperedges are built locally,
//! candidate triplets are screened by edge, pair and triplet upper bounds,
//! and the common region is only computed for triplets whose bound still
//! reaches the current threshold. Surviving intersections are cached for
//! later `y`s.

pub mod bounds;
pub mod collector;
mod local;
mod search;

pub use bounds::{edge_bound, edge_upper, pair_bound, triplet_bound, PartialRegions};
pub use collector::{Collector, SharedFloor};
pub use search::{max_search, max_search_observed, Mode, SearchConfig};
