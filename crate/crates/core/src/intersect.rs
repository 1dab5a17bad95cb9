//! Intersections of strictly ascending `u32` lists.
//!
//! Lists of similar length are merged linearly. When one side is much
//! shorter, each of its elements is located in the longer side by
//! exponential (galloping) search, which costs `O(s log(l / s))`.

use std::cmp::Ordering;

const GALLOP_RATIO: usize = 16;

/// Index of the first element `>= target` in `list[from..]`, offset by `from`.
fn gallop(list: &[u32], from: usize, target: u32) -> usize {
    let mut lo = from;
    let mut step = 1;
    let mut hi = from;
    while hi < list.len() && list[hi] < target {
        lo = hi + 1;
        hi += step;
        step <<= 1;
    }
    let hi = hi.min(list.len());
    lo + list[lo..hi].partition_point(|&v| v < target)
}

fn merge_for_each(a: &[u32], b: &[u32], mut f: impl FnMut(u32)) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                f(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
}

fn gallop_for_each(short: &[u32], long: &[u32], mut f: impl FnMut(u32)) {
    let mut pos = 0;
    for &v in short {
        pos = gallop(long, pos, v);
        if pos == long.len() {
            break;
        }
        if long[pos] == v {
            f(v);
            pos += 1;
        }
    }
}

fn for_each_common(a: &[u32], b: &[u32], f: impl FnMut(u32)) {
    let (short, long) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if short.is_empty() || short[short.len() - 1] < long[0] || long[long.len() - 1] < short[0] {
        return;
    }
    if short.len() * GALLOP_RATIO < long.len() {
        gallop_for_each(short, long, f)
    } else {
        merge_for_each(short, long, f)
    }
}

/// Size of `a ∩ b`.
pub fn intersect_count(a: &[u32], b: &[u32]) -> usize {
    let mut n = 0;
    for_each_common(a, b, |_| n += 1);
    n
}

/// Appends `a ∩ b` to `out` in ascending order.
pub fn intersect_into(a: &[u32], b: &[u32], out: &mut Vec<u32>) {
    for_each_common(a, b, |v| out.push(v));
}

pub fn intersect(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    intersect_into(a, b, &mut out);
    out
}

/// Size of `a ∩ b ∩ c` by a single three-way merge.
pub fn intersect3_count(a: &[u32], b: &[u32], c: &[u32]) -> usize {
    let (mut i, mut j, mut k) = (0, 0, 0);
    let mut n = 0;
    while i < a.len() && j < b.len() && k < c.len() {
        let m = a[i].max(b[j]).max(c[k]);
        if a[i] == m && b[j] == m && c[k] == m {
            n += 1;
            i += 1;
            j += 1;
            k += 1;
            continue;
        }
        if a[i] < m {
            i += 1;
        }
        if b[j] < m {
            j += 1;
        }
        if c[k] < m {
            k += 1;
        }
    }
    n
}
