use thiserror::Error;

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("failed to read input: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: expected `edge_label node_label`, found {tokens} token(s)")]
    MalformedLine { line: usize, tokens: usize },
    #[error("input contains no hyperedges")]
    NoHyperedges,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RegionError {
    #[error("region sizes violate the inclusion-exclusion invariants: {0}")]
    Inconsistent(&'static str),
    #[error("triplet contains a repeated hyperedge id {0}")]
    DuplicateId(u32),
    #[error("hyperedge id {id} out of range (edge count {edge_count})")]
    IdOutOfRange { id: u32, edge_count: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("need at least 3 hyperedges, found {0}")]
    TooFewEdges(usize),
    #[error("unknown hyperedge label `{0}`")]
    UnknownQuery(String),
    #[error("brute force would enumerate {count} triplets, above the cap of {cap}")]
    CapExceeded { count: u128, cap: u128 },
    #[error("top-k requires k >= 1")]
    ZeroK,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenError {
    #[error("membership probability {0} outside [0, 1]")]
    InvalidProbability(f64),
    #[error("degree sum {degrees} differs from size sum {sizes}")]
    SumMismatch { degrees: u64, sizes: u64 },
    #[error("invalid sequence specification: {0}")]
    InvalidSequence(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReportError {
    #[error("entropy is undefined for an all-zero distribution")]
    AllZero,
    #[error("entropy analysis is defined only for the independent and disjoint variants")]
    UnsupportedVariant,
    #[error("merge needs at least one triplet")]
    EmptyMerge,
    #[error("cannot parse weight `{0}`; expected NUM/DEN or NUM")]
    BadWeight(String),
}
