//! Result buffers that also supply the running pruning threshold.

use std::collections::BinaryHeap;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use crate::triplet::TripletResult;
use crate::weights::Weight;

/// Heap entry ordered so that the worst kept result sits on top.
#[derive(Debug, Clone, Copy)]
struct Worst(TripletResult);

impl PartialEq for Worst {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == std::cmp::Ordering::Equal
    }
}

impl Eq for Worst {}

impl PartialOrd for Worst {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Worst {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.rank_cmp(&other.0)
    }
}

#[derive(Debug, Clone)]
enum Kept {
    Top {
        k: usize,
        heap: BinaryHeap<Worst>,
    },
    Above {
        tau: Weight,
        all: Vec<TripletResult>,
    },
}

/// Monotone weight shared by parallel workers, packed as `num << 32 | den`.
/// Zero means "no threshold yet". A stale read only weakens pruning.
#[derive(Debug, Default)]
pub struct SharedFloor(AtomicU64);

impl SharedFloor {
    pub fn new() -> Self {
        SharedFloor(AtomicU64::new(0))
    }

    pub fn get(&self) -> Option<Weight> {
        let packed = self.0.load(AtomicOrdering::Relaxed);
        (packed != 0).then(|| Weight::new(packed >> 32, packed & 0xffff_ffff))
    }

    pub fn raise(&self, w: Weight) {
        if w.num() > u32::MAX as u64 || w.den() > u32::MAX as u64 {
            return;
        }
        let packed = (w.num() << 32) | w.den();
        let _ = self
            .0
            .fetch_update(AtomicOrdering::Relaxed, AtomicOrdering::Relaxed, |cur| {
                let cur_w = (cur != 0).then(|| Weight::new(cur >> 32, cur & 0xffff_ffff));
                match cur_w {
                    Some(c) if c >= w => None,
                    _ => Some(packed),
                }
            });
    }
}

/// Keeps either the `k` best results or every result at or above a fixed
/// weight, and answers whether a bound can still matter.
#[derive(Debug, Clone)]
pub struct Collector<'a> {
    kept: Kept,
    shared: Option<&'a SharedFloor>,
}

impl<'a> Collector<'a> {
    pub fn top(k: usize) -> Self {
        assert!(k >= 1);
        Collector {
            kept: Kept::Top {
                k,
                heap: BinaryHeap::with_capacity(k + 1),
            },
            shared: None,
        }
    }

    pub fn above(tau: Weight) -> Self {
        Collector {
            kept: Kept::Above {
                tau,
                all: Vec::new(),
            },
            shared: None,
        }
    }

    pub fn with_shared(mut self, shared: &'a SharedFloor) -> Self {
        self.shared = Some(shared);
        self
    }

    fn worst_kept(&self) -> Option<&TripletResult> {
        match &self.kept {
            Kept::Top { k, heap } if heap.len() == *k => heap.peek().map(|w| &w.0),
            _ => None,
        }
    }

    /// Lowest weight a result may have and still be kept. `None` while a
    /// top-k buffer is not yet full.
    pub fn floor(&self) -> Option<Weight> {
        let local = match &self.kept {
            Kept::Top { .. } => self.worst_kept().map(|t| t.weight),
            Kept::Above { tau, .. } => Some(*tau),
        };
        match (local, self.shared.and_then(SharedFloor::get)) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        }
    }

    /// True when some triplet with weight `<= bound` could still be kept.
    pub fn admits(&self, bound: Weight) -> bool {
        self.floor().is_none_or(|f| bound >= f)
    }

    /// Like [`Collector::admits`] for a fully identified triplet, which
    /// also resolves a tie against the worst kept result.
    pub fn admits_triplet(&self, bound: Weight, ids: [u32; 3]) -> bool {
        if !self.admits(bound) {
            return false;
        }
        match self.worst_kept() {
            Some(w) if bound == w.weight => ids < w.ids,
            _ => true,
        }
    }

    /// Offers a result; returns whether it was kept.
    pub fn offer(&mut self, t: TripletResult) -> bool {
        let kept = match &mut self.kept {
            Kept::Top { k, heap } => {
                if heap.len() < *k {
                    heap.push(Worst(t));
                    true
                } else if Worst(t) < *heap.peek().expect("full heap") {
                    heap.pop();
                    heap.push(Worst(t));
                    true
                } else {
                    false
                }
            }
            Kept::Above { tau, all } => {
                if t.weight >= *tau {
                    all.push(t);
                    true
                } else {
                    false
                }
            }
        };
        if kept {
            if let (Some(shared), Some(w)) = (self.shared, self.worst_kept().map(|t| t.weight)) {
                shared.raise(w);
            }
        }
        kept
    }

    pub fn merge(mut self, other: Collector<'a>) -> Self {
        for t in other.into_unsorted() {
            self.offer(t);
        }
        self
    }

    fn into_unsorted(self) -> Vec<TripletResult> {
        match self.kept {
            Kept::Top { heap, .. } => heap.into_iter().map(|w| w.0).collect(),
            Kept::Above { all, .. } => all,
        }
    }

    /// Kept results, best first.
    pub fn into_sorted(self) -> Vec<TripletResult> {
        let mut v = self.into_unsorted();
        crate::triplet::sort_ranked(&mut v);
        v
    }
}
