//! Hypergraph storage, text formats and the cardinality-ranked canonical form.
//!
//! A [`Hypergraph`] is kept as a bipartite incidence structure: every
//! hyperedge is a strictly ascending list of dense node ids and every node
//! keeps the ascending list of hyperedges containing it. All searches run on
//! a [`CanonicalHypergraph`], whose hyperedge ids are ranks by non-increasing
//! cardinality.

use std::collections::HashMap;
use std::io::{BufRead, Write};
use std::ops::Deref;

use serde::Serialize;

use crate::error::LoadError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    edges: Vec<Vec<u32>>,
    node_adj: Vec<Vec<u32>>,
    node_labels: Vec<String>,
    edge_labels: Vec<String>,
}

/// Non-fatal irregularities found while loading or building.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct LoadWarnings {
    /// Repeated node tokens within one hyperedge (or repeated membership pairs).
    pub duplicate_tokens: usize,
    /// Hyperedges dropped because they had no nodes.
    pub empty_edges: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HypergraphStats {
    pub node_count: usize,
    pub edge_count: usize,
    /// Sum of hyperedge sizes, equal to the sum of node degrees.
    pub degree_sum: usize,
    pub max_edge_size: usize,
}

#[derive(Default)]
struct Interner {
    ids: HashMap<String, u32>,
    labels: Vec<String>,
}

impl Interner {
    fn intern(&mut self, token: &str) -> u32 {
        if let Some(&id) = self.ids.get(token) {
            return id;
        }
        let id = self.labels.len() as u32;
        self.ids.insert(token.to_owned(), id);
        self.labels.push(token.to_owned());
        id
    }
}

fn content(line: &str) -> &str {
    let line = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    };
    line.trim()
}

impl Hypergraph {
    /// Builds a hypergraph from explicit node-id lists.
    ///
    /// Ids are arbitrary `u32`s; nodes that occur in no hyperedge are not
    /// stored. Node labels are the decimal ids, edge labels the list
    /// positions. Duplicates inside a list are removed and empty lists are
    /// dropped.
    pub fn from_id_edges(edges: Vec<Vec<u32>>) -> (Self, LoadWarnings) {
        let edge_labels = (0..edges.len()).map(|i| i.to_string()).collect();
        let mut remap: HashMap<u32, u32> = HashMap::new();
        let mut node_labels = Vec::new();
        let edges = edges
            .into_iter()
            .map(|e| {
                e.into_iter()
                    .map(|v| {
                        *remap.entry(v).or_insert_with(|| {
                            node_labels.push(v.to_string());
                            (node_labels.len() - 1) as u32
                        })
                    })
                    .collect()
            })
            .collect();
        Self::assemble(edges, node_labels, edge_labels)
    }

    /// Builds a hypergraph from labelled node tokens, interning labels in
    /// first-seen order. Edge labels are the list positions.
    pub fn from_labeled_edges<S: AsRef<str>>(edges: &[Vec<S>]) -> (Self, LoadWarnings) {
        let mut nodes = Interner::default();
        let ids = edges
            .iter()
            .map(|e| e.iter().map(|t| nodes.intern(t.as_ref())).collect())
            .collect();
        let edge_labels = (0..edges.len()).map(|i| i.to_string()).collect();
        Self::assemble(ids, nodes.labels, edge_labels)
    }

    fn assemble(
        edges: Vec<Vec<u32>>,
        node_labels: Vec<String>,
        edge_labels: Vec<String>,
    ) -> (Self, LoadWarnings) {
        let mut warnings = LoadWarnings::default();
        let mut kept_edges = Vec::with_capacity(edges.len());
        let mut kept_labels = Vec::with_capacity(edges.len());
        for (mut e, label) in edges.into_iter().zip(edge_labels) {
            let before = e.len();
            e.sort_unstable();
            e.dedup();
            warnings.duplicate_tokens += before - e.len();
            if e.is_empty() {
                warnings.empty_edges += 1;
                continue;
            }
            kept_edges.push(e);
            kept_labels.push(label);
        }
        if warnings.duplicate_tokens > 0 {
            log::warn!(
                "removed {} duplicate node token(s)",
                warnings.duplicate_tokens
            );
        }
        if warnings.empty_edges > 0 {
            log::warn!("dropped {} empty hyperedge(s)", warnings.empty_edges);
        }
        let node_adj = incidence(&kept_edges, node_labels.len());
        let h = Hypergraph {
            edges: kept_edges,
            node_adj,
            node_labels,
            edge_labels: kept_labels,
        };
        (h, warnings)
    }

    /// Reads the hyperlist format: one hyperedge per line, whitespace
    /// separated node tokens, `#` starts a comment.
    pub fn load_hyperlist<R: BufRead>(reader: R) -> Result<(Self, LoadWarnings), LoadError> {
        let mut nodes = Interner::default();
        let mut edges = Vec::new();
        for line in reader.lines() {
            let line = line?;
            let body = content(&line);
            if body.is_empty() {
                continue;
            }
            edges.push(
                body.split_whitespace()
                    .map(|t| nodes.intern(t))
                    .collect::<Vec<_>>(),
            );
        }
        if edges.is_empty() {
            return Err(LoadError::NoHyperedges);
        }
        let edge_labels = (0..edges.len()).map(|i| i.to_string()).collect();
        Ok(Self::assemble(edges, nodes.labels, edge_labels))
    }

    /// Reads the bipartite format: one `edge_label node_label` pair per line.
    pub fn load_bipartite<R: BufRead>(reader: R) -> Result<(Self, LoadWarnings), LoadError> {
        let mut nodes = Interner::default();
        let mut edge_ids = Interner::default();
        let mut edges: Vec<Vec<u32>> = Vec::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            let body = content(&line);
            if body.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = body.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(LoadError::MalformedLine {
                    line: i + 1,
                    tokens: tokens.len(),
                });
            }
            let e = edge_ids.intern(tokens[0]) as usize;
            let v = nodes.intern(tokens[1]);
            if e == edges.len() {
                edges.push(Vec::new());
            }
            edges[e].push(v);
        }
        if edges.is_empty() {
            return Err(LoadError::NoHyperedges);
        }
        Ok(Self::assemble(edges, nodes.labels, edge_ids.labels))
    }

    pub fn write_hyperlist<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for e in &self.edges {
            let mut first = true;
            for &v in e {
                if !first {
                    out.write_all(b" ")?;
                }
                first = false;
                out.write_all(self.node_labels[v as usize].as_bytes())?;
            }
            out.write_all(b"\n")?;
        }
        Ok(())
    }

    pub fn write_bipartite<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for (e, nodes) in self.edges.iter().enumerate() {
            for &v in nodes {
                writeln!(
                    out,
                    "{} {}",
                    self.edge_labels[e], self.node_labels[v as usize]
                )?;
            }
        }
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.node_adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, e: u32) -> &[u32] {
        &self.edges[e as usize]
    }

    pub fn edge_size(&self, e: u32) -> usize {
        self.edges[e as usize].len()
    }

    pub fn edges(&self) -> &[Vec<u32>] {
        &self.edges
    }

    /// Hyperedges containing `v`, ascending.
    pub fn node_edges(&self, v: u32) -> &[u32] {
        &self.node_adj[v as usize]
    }

    pub fn node_degree(&self, v: u32) -> usize {
        self.node_adj[v as usize].len()
    }

    pub fn node_label(&self, v: u32) -> &str {
        &self.node_labels[v as usize]
    }

    pub fn edge_label(&self, e: u32) -> &str {
        &self.edge_labels[e as usize]
    }

    pub fn edge_labels(&self) -> &[String] {
        &self.edge_labels
    }

    pub fn find_edge(&self, label: &str) -> Option<u32> {
        self.edge_labels
            .iter()
            .position(|l| l == label)
            .map(|i| i as u32)
    }

    pub fn stats(&self) -> HypergraphStats {
        HypergraphStats {
            node_count: self.node_count(),
            edge_count: self.edge_count(),
            degree_sum: self.edges.iter().map(Vec::len).sum(),
            max_edge_size: self.edges.iter().map(Vec::len).max().unwrap_or(0),
        }
    }

    /// Full scan of the structural invariants: ascending duplicate-free
    /// lists, no empty hyperedge, and symmetric incidence.
    pub fn check_invariants(&self) -> bool {
        let ascending = |l: &Vec<u32>| l.windows(2).all(|w| w[0] < w[1]);
        if !self.edges.iter().all(|e| !e.is_empty() && ascending(e)) {
            return false;
        }
        if !self.node_adj.iter().all(ascending) {
            return false;
        }
        if self.node_labels.len() != self.node_adj.len()
            || self.edge_labels.len() != self.edges.len()
        {
            return false;
        }
        let from_edges: usize = self.edges.iter().map(Vec::len).sum();
        let from_nodes: usize = self.node_adj.iter().map(Vec::len).sum();
        from_edges == from_nodes
            && self.edges.iter().enumerate().all(|(e, nodes)| {
                nodes.iter().all(|&v| {
                    self.node_adj
                        .get(v as usize)
                        .is_some_and(|adj| adj.binary_search(&(e as u32)).is_ok())
                })
            })
    }

    /// Keeps only hyperedges satisfying `keep`, preserving order and labels.
    pub fn retain_edges(&self, mut keep: impl FnMut(&[u32]) -> bool) -> Hypergraph {
        let mut edges = Vec::new();
        let mut labels = Vec::new();
        for (e, nodes) in self.edges.iter().enumerate() {
            if keep(nodes) {
                edges.push(nodes.clone());
                labels.push(self.edge_labels[e].clone());
            }
        }
        let node_adj = incidence(&edges, self.node_labels.len());
        Hypergraph {
            edges,
            node_adj,
            node_labels: self.node_labels.clone(),
            edge_labels: labels,
        }
    }
}

fn incidence(edges: &[Vec<u32>], node_count: usize) -> Vec<Vec<u32>> {
    let mut adj = vec![Vec::new(); node_count];
    for (e, nodes) in edges.iter().enumerate() {
        for &v in nodes {
            adj[v as usize].push(e as u32);
        }
    }
    adj
}

/// A hypergraph whose hyperedge ids are ranks: cardinality is
/// non-increasing along ranks, ties keep the original order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalHypergraph {
    graph: Hypergraph,
    rank_to_original: Vec<u32>,
}

impl CanonicalHypergraph {
    pub fn new(h: Hypergraph) -> Self {
        canonicalize(h)
    }

    pub fn graph(&self) -> &Hypergraph {
        &self.graph
    }

    pub fn into_graph(self) -> Hypergraph {
        self.graph
    }

    /// `rank_to_original()[r]` is the id the rank-`r` hyperedge had before
    /// canonicalization.
    pub fn rank_to_original(&self) -> &[u32] {
        &self.rank_to_original
    }
}

impl Deref for CanonicalHypergraph {
    type Target = Hypergraph;

    fn deref(&self) -> &Hypergraph {
        &self.graph
    }
}

pub fn canonicalize(h: Hypergraph) -> CanonicalHypergraph {
    let mut order: Vec<u32> = (0..h.edge_count() as u32).collect();
    // stable: equal sizes keep ascending original id
    order.sort_by_key(|&e| std::cmp::Reverse(h.edges[e as usize].len()));
    let Hypergraph {
        mut edges,
        node_labels,
        edge_labels,
        ..
    } = h;
    let ranked: Vec<Vec<u32>> = order
        .iter()
        .map(|&e| std::mem::take(&mut edges[e as usize]))
        .collect();
    let labels = order
        .iter()
        .map(|&e| edge_labels[e as usize].clone())
        .collect();
    let node_adj = incidence(&ranked, node_labels.len());
    CanonicalHypergraph {
        graph: Hypergraph {
            edges: ranked,
            node_adj,
            node_labels,
            edge_labels: labels,
        },
        rank_to_original: order,
    }
}
