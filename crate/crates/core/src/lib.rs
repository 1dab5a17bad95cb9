//! Size-aware hypergraph motifs.
//!
//! Finds hyperedge triplets maximizing the independent, disjoint or common
//! weight of their seven-region partition, with an exhaustive reference
//! search and a pruned search supporting top-k, threshold and local
//! queries. Also provides an h-motif census, synthetic hypergraph
//! generators, triplet merging and entropy reports.

pub mod census;
pub mod entropy;
pub mod error;
pub mod exhaustive;
pub mod hypergraph;
pub mod intersect;
pub mod merge;
pub mod pruned;
pub mod report;
pub mod synth;
pub mod triplet;
pub mod weights;

pub use error::{GenError, LoadError, RegionError, ReportError, SearchError};
pub use exhaustive::{basic_search, brute_force_all, pairwise_intersections, PairIndex};
pub use hypergraph::{canonicalize, CanonicalHypergraph, Hypergraph, HypergraphStats};
pub use pruned::{max_search, Mode, SearchConfig};
pub use triplet::TripletResult;
pub use weights::{region_sizes, RegionPartition, RegionSizes, Variant, Weight};
