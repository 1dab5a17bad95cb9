//! Merging high-weight triplets into larger hyperedge groups.
//!
//! Each qualifying triplet adds one to the weight of each of its three
//! hyperedge pairs in an undirected co-occurrence graph; the connected
//! components of that graph are the merged groups.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use serde::Serialize;

use crate::error::ReportError;
use crate::hypergraph::Hypergraph;
use crate::triplet::TripletResult;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MergeGraph {
    vertices: BTreeSet<u32>,
    weights: BTreeMap<(u32, u32), u32>,
}

impl MergeGraph {
    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        self.vertices.iter().copied()
    }

    /// Edges `(low, high, weight)` in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32, u32)> + '_ {
        self.weights.iter().map(|(&(a, b), &w)| (a, b, w))
    }

    pub fn weight(&self, a: u32, b: u32) -> u32 {
        self.weights
            .get(&(a.min(b), a.max(b)))
            .copied()
            .unwrap_or(0)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.weights.len()
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.values().map(|&w| w as u64).sum()
    }
}

pub fn build_merge_graph(triplets: &[TripletResult]) -> Result<MergeGraph, ReportError> {
    if triplets.is_empty() {
        return Err(ReportError::EmptyMerge);
    }
    let mut g = MergeGraph::default();
    for t in triplets {
        let [a, b, c] = t.ids;
        g.vertices.extend(t.ids);
        for (p, q) in [(a, b), (a, c), (b, c)] {
            *g.weights.entry((p.min(q), p.max(q))).or_insert(0) += 1;
        }
    }
    Ok(g)
}

struct DisjointSet {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        match self.rank[a].cmp(&self.rank[b]) {
            std::cmp::Ordering::Less => self.parent[a] = b,
            std::cmp::Ordering::Greater => self.parent[b] = a,
            std::cmp::Ordering::Equal => {
                self.parent[b] = a;
                self.rank[a] += 1;
            }
        }
    }
}

/// Connected components, each sorted ascending; components ordered by
/// size descending, then by smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ComponentSet {
    pub components: Vec<Vec<u32>>,
}

pub fn components(g: &MergeGraph) -> ComponentSet {
    let ids: Vec<u32> = g.vertices().collect();
    let pos = |v: u32| ids.binary_search(&v).expect("edge endpoint is a vertex");
    let mut ds = DisjointSet::new(ids.len());
    for (a, b, _) in g.edges() {
        ds.union(pos(a), pos(b));
    }
    let mut groups: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
    for (i, &v) in ids.iter().enumerate() {
        groups.entry(ds.find(i)).or_default().push(v);
    }
    let mut components: Vec<Vec<u32>> = groups.into_values().collect();
    components.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a[0].cmp(&b[0])));
    ComponentSet { components }
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT graph; `penwidth` equals the number of shared triplets.
pub fn export_dot(g: &MergeGraph, h: &Hypergraph) -> String {
    let mut out = String::from("graph merge {\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {} [label={}];", v, dot_id(h.edge_label(v)));
    }
    for (a, b, w) in g.edges() {
        let _ = writeln!(out, "  {a} -- {b} [weight={w}, penwidth={:.1}];", w as f64);
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentRecord {
    pub component_id: usize,
    pub members: Vec<String>,
    pub size: usize,
}

pub fn component_records(c: &ComponentSet, h: &Hypergraph) -> Vec<ComponentRecord> {
    c.components
        .iter()
        .enumerate()
        .map(|(i, members)| ComponentRecord {
            component_id: i,
            members: members
                .iter()
                .map(|&e| h.edge_label(e).to_owned())
                .collect(),
            size: members.len(),
        })
        .collect()
}
