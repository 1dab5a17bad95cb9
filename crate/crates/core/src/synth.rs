//! Random bipartite hypergraph models.
//!
//! Randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64`, so a spec and seed reproduce the same hypergraph on any
//! platform. Memberships are drawn edge-major: for each hyperedge in order,
//! one uniform `f64` in `[0, 1)` per node in order, kept when it falls
//! below the membership probability.

use rand::distributions::{Distribution, WeightedIndex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GenError;
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, PartialEq)]
pub enum Model {
    /// Each (node, hyperedge) membership independently with probability `p`.
    ErdosRenyi { nodes: usize, edges: usize, p: f64 },
    /// Membership `(v, e)` with probability `min(1, d_v * s_e / M)` where
    /// `M` is the common sum of both sequences.
    ChungLu {
        node_degrees: Vec<u64>,
        edge_sizes: Vec<u64>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub model: Model,
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct Generated {
    pub hypergraph: Hypergraph,
    /// Successful membership draws.
    pub memberships: u64,
    /// Generated hyperedges that came out empty and were dropped.
    pub dropped_edges: usize,
}

pub fn generate(spec: &GenSpec) -> Result<Generated, GenError> {
    match &spec.model {
        Model::ErdosRenyi { nodes, edges, p } => gen_er(*nodes, *edges, *p, spec.seed),
        Model::ChungLu {
            node_degrees,
            edge_sizes,
        } => gen_chung_lu(node_degrees, edge_sizes, spec.seed),
    }
}

fn finish(edges: Vec<Vec<u32>>) -> Generated {
    let memberships = edges.iter().map(|e| e.len() as u64).sum();
    let (hypergraph, warnings) = Hypergraph::from_id_edges(edges);
    Generated {
        hypergraph,
        memberships,
        dropped_edges: warnings.empty_edges,
    }
}

pub fn gen_er(nodes: usize, edges: usize, p: f64, seed: u64) -> Result<Generated, GenError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GenError::InvalidProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lists = (0..edges)
        .map(|_| (0..nodes as u32).filter(|_| rng.gen::<f64>() < p).collect())
        .collect();
    Ok(finish(lists))
}

/// Membership probability of the Chung–Lu model, capped at one.
pub fn chung_lu_probability(degree: u64, size: u64, total: u64) -> f64 {
    if total == 0 {
        return 0.0;
    }
    (degree as f64 * size as f64 / total as f64).min(1.0)
}

pub fn gen_chung_lu(
    node_degrees: &[u64],
    edge_sizes: &[u64],
    seed: u64,
) -> Result<Generated, GenError> {
    let degrees: u64 = node_degrees.iter().sum();
    let sizes: u64 = edge_sizes.iter().sum();
    if degrees != sizes {
        return Err(GenError::SumMismatch { degrees, sizes });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lists = edge_sizes
        .iter()
        .map(|&s| {
            (0..node_degrees.len() as u32)
                .filter(|&v| {
                    let p = chung_lu_probability(node_degrees[v as usize], s, sizes);
                    rng.gen::<f64>() < p
                })
                .collect()
        })
        .collect();
    Ok(finish(lists))
}

/// Node degrees (by node id) and hyperedge sizes (by edge id).
pub fn degree_sequence(h: &Hypergraph) -> (Vec<u64>, Vec<u64>) {
    let degrees = (0..h.node_count() as u32)
        .map(|v| h.node_degree(v) as u64)
        .collect();
    let sizes = h.edges().iter().map(|e| e.len() as u64).collect();
    (degrees, sizes)
}

/// Expected number of memberships of a Chung–Lu model.
pub fn chung_lu_expected_memberships(node_degrees: &[u64], edge_sizes: &[u64]) -> f64 {
    let total: u64 = edge_sizes.iter().sum();
    edge_sizes
        .iter()
        .map(|&s| {
            node_degrees
                .iter()
                .map(|&d| chung_lu_probability(d, s, total))
                .sum::<f64>()
        })
        .sum()
}

/// Heavy-tailed Chung–Lu inputs: hyperedge sizes follow a truncated Zipf
/// law on `1..=max_size` with the given exponent, and the resulting
/// membership total is spread over nodes with Zipf-weighted node
/// popularity, so both sequences have the same sum.
pub fn zipf_sequences(
    nodes: usize,
    edges: usize,
    max_size: usize,
    exponent: f64,
    seed: u64,
) -> Result<(Vec<u64>, Vec<u64>), GenError> {
    if nodes == 0 || max_size == 0 || !exponent.is_finite() || exponent < 0.0 {
        return Err(GenError::InvalidSequence(format!(
            "nodes={nodes} max_size={max_size} exponent={exponent}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zipf = |n: usize| {
        WeightedIndex::new((1..=n).map(|r| (r as f64).powf(-exponent))).expect("positive weights")
    };
    let size_dist = zipf(max_size.min(nodes));
    let sizes: Vec<u64> = (0..edges)
        .map(|_| size_dist.sample(&mut rng) as u64 + 1)
        .collect();
    let node_dist = zipf(nodes);
    let mut degrees = vec![0u64; nodes];
    for _ in 0..sizes.iter().sum::<u64>() {
        degrees[node_dist.sample(&mut rng)] += 1;
    }
    Ok((degrees, sizes))
}
