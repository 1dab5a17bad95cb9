use rayon::prelude::*;

use super::bounds::{edge_upper, pair_bound, triplet_bound, PartialRegions};
use super::collector::{Collector, SharedFloor};
use super::local::local_search;
use crate::error::SearchError;
use crate::hypergraph::CanonicalHypergraph;
use crate::intersect::intersect_count;
use crate::triplet::TripletResult;
use crate::weights::{RegionSizes, Variant, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mode {
    /// The single best triplet.
    Max,
    /// The `k` best triplets.
    TopK(usize),
    /// Every candidate with weight at least the given value.
    Threshold(Weight),
    /// The `k` best triplets containing the hyperedge with this label.
    Local { query: String, k: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub variant: Variant,
    pub mode: Mode,
    /// Worker threads; 1 runs the sequential algorithm.
    pub threads: usize,
    /// Nodes of lower degree are skipped when building intersections.
    /// Values up to 2 never change results (such nodes cannot lie in two
    /// hyperedges); larger values trade exactness for speed.
    pub degree_floor: usize,
}

impl SearchConfig {
    pub fn new(variant: Variant, mode: Mode) -> Self {
        SearchConfig {
            variant,
            mode,
            threads: 1,
            degree_floor: 0,
        }
    }

    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub fn degree_floor(mut self, floor: usize) -> Self {
        self.degree_floor = floor;
        self
    }
}

/// Runs the configured search. Results are best first: higher weight, then
/// lexicographically smaller rank triple. The output does not depend on
/// the thread count.
pub fn max_search(
    h: &CanonicalHypergraph,
    cfg: &SearchConfig,
) -> Result<Vec<TripletResult>, SearchError> {
    run(h, cfg, None)
}

/// Sequential search that reports the pruning threshold after every kept
/// result.
pub fn max_search_observed(
    h: &CanonicalHypergraph,
    cfg: &SearchConfig,
    observer: &mut dyn FnMut(Option<Weight>),
) -> Result<Vec<TripletResult>, SearchError> {
    run(h, &cfg.clone().threads(1), Some(observer))
}

fn run(
    h: &CanonicalHypergraph,
    cfg: &SearchConfig,
    observer: Option<&mut dyn FnMut(Option<Weight>)>,
) -> Result<Vec<TripletResult>, SearchError> {
    let n = h.edge_count();
    if n < 3 {
        return Err(SearchError::TooFewEdges(n));
    }
    let collector = match &cfg.mode {
        Mode::Max => Collector::top(1),
        Mode::TopK(0) | Mode::Local { k: 0, .. } => return Err(SearchError::ZeroK),
        Mode::TopK(k) => Collector::top(*k),
        Mode::Threshold(tau) => Collector::above(*tau),
        Mode::Local { query, k } => {
            let q = h
                .find_edge(query)
                .ok_or_else(|| SearchError::UnknownQuery(query.clone()))?;
            return Ok(local_search(h, cfg.variant, q, *k, cfg.degree_floor));
        }
    };
    let search = Search::new(h, cfg.variant, cfg.degree_floor);
    if cfg.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.threads)
            .build()
            .expect("thread pool");
        Ok(pool.install(|| search.parallel(collector)))
    } else {
        Ok(search.sequential(collector, observer))
    }
}

#[derive(Debug, Clone, Copy)]
struct BackEntry {
    other: u32,
    size: u32,
    start: u32,
}

/// Cached intersections with lower-ranked hyperedges: `rows[z]` lists
/// `(x, N_xz)` for `x < z` in ascending `x`.
struct BackIndex {
    rows: Vec<Vec<BackEntry>>,
    pool: Vec<u32>,
    keep_nodes: bool,
}

impl BackIndex {
    fn new(n: usize, keep_nodes: bool) -> Self {
        BackIndex {
            rows: vec![Vec::new(); n],
            pool: Vec::new(),
            keep_nodes,
        }
    }

    fn push(&mut self, z: u32, y: u32, nodes: &[u32]) {
        let start = self.pool.len() as u32;
        if self.keep_nodes {
            self.pool.extend_from_slice(nodes);
        }
        self.rows[z as usize].push(BackEntry {
            other: y,
            size: nodes.len() as u32,
            start,
        });
    }

    fn nodes(&self, e: &BackEntry) -> &[u32] {
        &self.pool[e.start as usize..(e.start + e.size) as usize]
    }
}

#[derive(Debug, Clone, Copy)]
struct FwdEntry {
    z: u32,
    start: u32,
    len: u32,
}

/// Intersections of one hyperedge `y` with higher-ranked hyperedges.
#[derive(Default)]
struct Forward {
    entries: Vec<FwdEntry>,
    pool: Vec<u32>,
    count: Vec<u32>,
    touched: Vec<u32>,
}

impl Forward {
    fn new(n: usize) -> Self {
        Forward {
            count: vec![0; n],
            ..Default::default()
        }
    }

    fn nodes(&self, f: &FwdEntry) -> &[u32] {
        &self.pool[f.start as usize..(f.start + f.len) as usize]
    }

    /// Collects `e_y ∩ e_z` for every `z` in `(y, limit)`.
    fn build(&mut self, h: &CanonicalHypergraph, y: u32, limit: u32, degree_floor: usize) {
        self.entries.clear();
        self.pool.clear();
        self.touched.clear();
        let candidates = |u: u32| {
            let adj = h.node_edges(u);
            if adj.len() < degree_floor {
                return &adj[..0];
            }
            let lo = adj.partition_point(|&e| e <= y);
            let hi = adj.partition_point(|&e| e < limit);
            &adj[lo..hi.max(lo)]
        };
        for &u in h.edge(y) {
            for &z in candidates(u) {
                if self.count[z as usize] == 0 {
                    self.touched.push(z);
                }
                self.count[z as usize] += 1;
            }
        }
        self.touched.sort_unstable();
        let mut offset = 0u32;
        for &z in &self.touched {
            let len = self.count[z as usize];
            self.entries.push(FwdEntry {
                z,
                start: offset,
                len,
            });
            // the counter becomes a write cursor
            self.count[z as usize] = offset;
            offset += len;
        }
        self.pool.resize(offset as usize, 0);
        for &u in h.edge(y) {
            for &z in candidates(u) {
                let cursor = &mut self.count[z as usize];
                self.pool[*cursor as usize] = u;
                *cursor += 1;
            }
        }
        for &z in &self.touched {
            self.count[z as usize] = 0;
        }
    }
}

/// Dense per-worker scratch indexed by hyperedge id.
struct Scratch {
    xy: Vec<u32>,
    xz: Vec<u32>,
    fwd_pos: Vec<u32>,
    forward: Forward,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch {
            xy: vec![0; n],
            xz: vec![0; n],
            fwd_pos: vec![0; n],
            forward: Forward::new(n),
        }
    }
}

struct Search<'h> {
    h: &'h CanonicalHypergraph,
    v: Variant,
    sizes: Vec<u32>,
    degree_floor: usize,
}

impl<'h> Search<'h> {
    fn new(h: &'h CanonicalHypergraph, v: Variant, degree_floor: usize) -> Self {
        let sizes = (0..h.edge_count() as u32)
            .map(|e| h.edge_size(e) as u32)
            .collect();
        Search {
            h,
            v,
            sizes,
            degree_floor,
        }
    }

    fn size(&self, e: u32) -> usize {
        self.sizes[e as usize] as usize
    }

    fn alive(&self, col: &Collector, e: u32) -> bool {
        col.admits(edge_upper(self.v, self.size(e)))
    }

    /// First rank whose edge bound misses the threshold; sizes are
    /// non-increasing so every later rank misses it too.
    fn alive_limit(&self, col: &Collector) -> u32 {
        self.sizes
            .partition_point(|&s| col.admits(edge_upper(self.v, s as usize))) as u32
    }

    fn sequential(
        &self,
        mut col: Collector,
        mut observer: Option<&mut dyn FnMut(Option<Weight>)>,
    ) -> Vec<TripletResult> {
        let n = self.sizes.len();
        let mut back = BackIndex::new(n, self.v.needs_closed());
        let mut scratch = Scratch::new(n);
        let mut forward = std::mem::take(&mut scratch.forward);
        for y in 0..n as u32 {
            if !self.alive(&col, y) {
                break;
            }
            forward.build(self.h, y, self.alive_limit(&col), self.degree_floor);
            self.visit(y, &forward, &back, &mut col, &mut scratch, &mut observer);
            if self.alive(&col, y) {
                for f in &forward.entries {
                    if !self.alive(&col, f.z) {
                        break;
                    }
                    back.push(f.z, y, forward.nodes(f));
                }
            }
        }
        col.into_sorted()
    }

    fn parallel(&self, col: Collector) -> Vec<TripletResult> {
        let n = self.sizes.len();
        let rows: Vec<(Vec<FwdEntry>, Vec<u32>)> = (0..n as u32)
            .into_par_iter()
            .map_init(
                || Forward::new(n),
                |fwd, y| {
                    fwd.build(self.h, y, n as u32, self.degree_floor);
                    (fwd.entries.clone(), fwd.pool.clone())
                },
            )
            .collect();
        let mut back = BackIndex::new(n, self.v.needs_closed());
        for (y, (entries, pool)) in rows.iter().enumerate() {
            for f in entries {
                back.push(
                    f.z,
                    y as u32,
                    &pool[f.start as usize..(f.start + f.len) as usize],
                );
            }
        }
        drop(rows);

        let shared = SharedFloor::new();
        let template = col.with_shared(&shared);
        let back = &back;
        (0..n as u32)
            .into_par_iter()
            .fold(
                || (template.clone(), None::<Scratch>),
                |(mut col, scratch), y| {
                    let mut scratch = scratch.unwrap_or_else(|| Scratch::new(n));
                    if self.alive(&col, y) {
                        let mut forward = std::mem::take(&mut scratch.forward);
                        forward.build(self.h, y, self.alive_limit(&col), self.degree_floor);
                        self.visit(y, &forward, back, &mut col, &mut scratch, &mut None);
                        scratch.forward = forward;
                    }
                    (col, Some(scratch))
                },
            )
            .map(|(col, _)| col)
            .reduce(|| template.clone(), Collector::merge)
            .into_sorted()
    }

    fn offer(
        &self,
        col: &mut Collector,
        t: TripletResult,
        observer: &mut Option<&mut dyn FnMut(Option<Weight>)>,
    ) {
        if col.offer(t) {
            if let Some(obs) = observer.as_mut() {
                obs(col.floor());
            }
        }
    }

    fn visit(
        &self,
        y: u32,
        forward: &Forward,
        back: &BackIndex,
        col: &mut Collector,
        s: &mut Scratch,
        observer: &mut Option<&mut dyn FnMut(Option<Weight>)>,
    ) {
        match self.v {
            Variant::Independent => self.visit_independent(y, forward, back, col, s, observer),
            Variant::Disjoint | Variant::Common => {
                self.visit_closed(y, forward, back, col, observer)
            }
        }
    }

    fn visit_independent(
        &self,
        y: u32,
        forward: &Forward,
        back: &BackIndex,
        col: &mut Collector,
        s: &mut Scratch,
        observer: &mut Option<&mut dyn FnMut(Option<Weight>)>,
    ) {
        let v = self.v;
        let n = self.sizes.len() as u32;
        let sy = self.size(y);
        for e in &back.rows[y as usize] {
            s.xy[e.other as usize] = e.size;
        }
        for (i, f) in forward.entries.iter().enumerate() {
            s.fwd_pos[f.z as usize] = i as u32 + 1;
        }
        for z in y + 1..n {
            let sz = self.size(z);
            if !col.admits(edge_upper(v, sz)) {
                break;
            }
            let n_yz: &[u32] = match s.fwd_pos[z as usize] {
                0 => &[],
                i => forward.nodes(&forward.entries[i as usize - 1]),
            };
            let yz = n_yz.len();
            if !col.admits(pair_bound(v, sy, sz, yz)) {
                continue;
            }
            let row_z = &back.rows[z as usize];
            let below_y = row_z.partition_point(|e| e.other < y);
            for e in &row_z[..below_y] {
                s.xz[e.other as usize] = e.size;
            }
            for x in 0..y {
                let p = PartialRegions {
                    x: self.sizes[x as usize],
                    y: sy as u32,
                    z: sz as u32,
                    xy: s.xy[x as usize],
                    xz: s.xz[x as usize],
                    yz: yz as u32,
                };
                if !col.admits_triplet(triplet_bound(v, p), [x, y, z]) {
                    continue;
                }
                let xyz = if p.xy > 0 && p.xz > 0 && yz > 0 {
                    intersect_count(n_yz, self.h.edge(x)) as u32
                } else {
                    0
                };
                self.offer(
                    col,
                    TripletResult::new([x, y, z], complete(p, xyz), v),
                    observer,
                );
            }
            for e in &row_z[..below_y] {
                s.xz[e.other as usize] = 0;
            }
        }
        for e in &back.rows[y as usize] {
            s.xy[e.other as usize] = 0;
        }
        for f in &forward.entries {
            s.fwd_pos[f.z as usize] = 0;
        }
    }

    fn visit_closed(
        &self,
        y: u32,
        forward: &Forward,
        back: &BackIndex,
        col: &mut Collector,
        observer: &mut Option<&mut dyn FnMut(Option<Weight>)>,
    ) {
        let v = self.v;
        let sy = self.size(y);
        let row_y = &back.rows[y as usize];
        for f in &forward.entries {
            let z = f.z;
            let sz = self.size(z);
            if !col.admits(edge_upper(v, sz)) {
                break;
            }
            let yz = f.len as usize;
            if !col.admits(pair_bound(v, sy, sz, yz)) {
                continue;
            }
            let n_yz = forward.nodes(f);
            let row_z = &back.rows[z as usize];
            let (mut i, mut j) = (0, 0);
            while i < row_y.len() && j < row_z.len() {
                let (exy, exz) = (&row_y[i], &row_z[j]);
                if exy.other < exz.other {
                    i += 1;
                    continue;
                }
                if exz.other < exy.other {
                    j += 1;
                    continue;
                }
                i += 1;
                j += 1;
                let x = exy.other;
                let p = PartialRegions {
                    x: self.sizes[x as usize],
                    y: sy as u32,
                    z: sz as u32,
                    xy: exy.size,
                    xz: exz.size,
                    yz: yz as u32,
                };
                if !col.admits_triplet(triplet_bound(v, p), [x, y, z]) {
                    continue;
                }
                let xyz = intersect_count(back.nodes(exy), n_yz) as u32;
                self.offer(
                    col,
                    TripletResult::new([x, y, z], complete(p, xyz), v),
                    observer,
                );
            }
        }
    }
}

pub(super) fn complete(p: PartialRegions, xyz: u32) -> RegionSizes {
    RegionSizes {
        x: p.x,
        y: p.y,
        z: p.z,
        xy: p.xy,
        xz: p.xz,
        yz: p.yz,
        xyz,
    }
}
