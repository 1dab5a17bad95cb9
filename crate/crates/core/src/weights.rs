//! Region partition of a hyperedge triplet and its three weights.
//!
//! For a triplet `{a, b, c}` the nodes split into seven exclusive regions:
//! three independent (one hyperedge only), three disjoint (exactly two) and
//! one common (all three). The weight of level `j` is the smallest region of
//! level `j` divided by one plus the total size of all deeper regions. All
//! weights are exact rationals.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{RegionError, ReportError};
use crate::hypergraph::Hypergraph;
use crate::intersect::{intersect3_count, intersect_count};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Independent = 1,
    Disjoint = 2,
    Common = 3,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Independent, Variant::Disjoint, Variant::Common];

    pub fn level(self) -> u8 {
        self as u8
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::Independent => "independent",
            Variant::Disjoint => "disjoint",
            Variant::Common => "common",
        }
    }

    /// Closed-triplet variants only consider triplets whose three pairwise
    /// intersections are all non-empty.
    pub fn needs_closed(self) -> bool {
        self != Variant::Independent
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "independent" | "1" => Ok(Variant::Independent),
            "disjoint" | "2" => Ok(Variant::Disjoint),
            "common" | "3" => Ok(Variant::Common),
            _ => Err(format!("unknown variant `{s}`")),
        }
    }
}

/// A nonnegative rational kept unreduced. Equality and ordering are by
/// value (`2/2 == 1/1`); use [`Weight::num`]/[`Weight::den`] for the exact
/// representation.
#[derive(Debug, Clone, Copy)]
pub struct Weight {
    num: u64,
    den: u64,
}

impl Weight {
    pub const ZERO: Weight = Weight { num: 0, den: 1 };

    pub fn new(num: u64, den: u64) -> Self {
        assert!(den >= 1, "weight denominator must be positive");
        Weight { num, den }
    }

    pub fn integer(num: u64) -> Self {
        Weight { num, den: 1 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Exact representation, e.g. `(2, 2)` rather than `(1, 1)`.
    pub fn parts(&self) -> (u64, u64) {
        (self.num, self.den)
    }
}

impl PartialEq for Weight {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Weight {}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Weight {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self, ReportError> {
        let bad = || ReportError::BadWeight(s.to_owned());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: u64 = num.parse().map_err(|_| bad())?;
        let den: u64 = den.parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        Ok(Weight { num, den })
    }
}

/// Cardinalities and intersection sizes of a triplet `(e_x, e_y, e_z)`.
/// Pairwise sizes include the common region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RegionSizes {
    pub x: u32,
    pub y: u32,
    pub z: u32,
    pub xy: u32,
    pub xz: u32,
    pub yz: u32,
    pub xyz: u32,
}

/// Exclusive region sizes `|N(X)|` of a triplet `{a, b, c}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RegionPartition {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub ab: u32,
    pub ac: u32,
    pub bc: u32,
    pub abc: u32,
}

impl RegionSizes {
    pub fn new(x: u32, y: u32, z: u32, xy: u32, xz: u32, yz: u32, xyz: u32) -> Self {
        RegionSizes {
            x,
            y,
            z,
            xy,
            xz,
            yz,
            xyz,
        }
    }

    pub fn validate(&self) -> Result<(), RegionError> {
        let RegionSizes {
            x,
            y,
            z,
            xy,
            xz,
            yz,
            xyz,
        } = *self;
        let (x, y, z, xy, xz, yz, xyz) = (
            x as u64, y as u64, z as u64, xy as u64, xz as u64, yz as u64, xyz as u64,
        );
        if xyz > xy.min(xz).min(yz) {
            return Err(RegionError::Inconsistent(
                "triple intersection exceeds a pairwise one",
            ));
        }
        if xy > x.min(y) || xz > x.min(z) || yz > y.min(z) {
            return Err(RegionError::Inconsistent(
                "pairwise intersection exceeds an edge",
            ));
        }
        if x + xyz < xy + xz || y + xyz < xy + yz || z + xyz < xz + yz {
            return Err(RegionError::Inconsistent("negative independent region"));
        }
        Ok(())
    }

    pub fn to_partition(&self) -> Result<RegionPartition, RegionError> {
        self.validate()?;
        let r = *self;
        Ok(RegionPartition {
            a: r.x + r.xyz - r.xy - r.xz,
            b: r.y + r.xyz - r.xy - r.yz,
            c: r.z + r.xyz - r.xz - r.yz,
            ab: r.xy - r.xyz,
            ac: r.xz - r.xyz,
            bc: r.yz - r.xyz,
            abc: r.xyz,
        })
    }

    pub fn is_closed(&self) -> bool {
        self.xy > 0 && self.xz > 0 && self.yz > 0
    }

    /// Closed-form weight of the given variant.
    pub fn weight(&self, v: Variant) -> Weight {
        debug_assert!(self.validate().is_ok(), "{self:?}");
        let r = *self;
        let (x, y, z, xy, xz, yz, xyz) = (
            r.x as u64,
            r.y as u64,
            r.z as u64,
            r.xy as u64,
            r.xz as u64,
            r.yz as u64,
            r.xyz as u64,
        );
        match v {
            Variant::Independent => {
                let num = (x + xyz - xy - xz)
                    .min(y + xyz - xy - yz)
                    .min(z + xyz - xz - yz);
                Weight::new(num, xy + xz + yz + 1 - 2 * xyz)
            }
            Variant::Disjoint => Weight::new(xy.min(xz).min(yz) - xyz, xyz + 1),
            Variant::Common => Weight::integer(xyz),
        }
    }
}

impl RegionPartition {
    pub fn to_sizes(&self) -> RegionSizes {
        let p = *self;
        RegionSizes {
            x: p.a + p.ab + p.ac + p.abc,
            y: p.b + p.ab + p.bc + p.abc,
            z: p.c + p.ac + p.bc + p.abc,
            xy: p.ab + p.abc,
            xz: p.ac + p.abc,
            yz: p.bc + p.abc,
            xyz: p.abc,
        }
    }

    pub fn as_array(&self) -> [u32; 7] {
        [self.a, self.b, self.c, self.ab, self.ac, self.bc, self.abc]
    }

    pub fn independent(&self) -> [u32; 3] {
        [self.a, self.b, self.c]
    }

    pub fn disjoint(&self) -> [u32; 3] {
        [self.ab, self.ac, self.bc]
    }

    /// Level-`j` weight read directly off the partition: the minimum over
    /// the level-`j` regions, over one plus every deeper region.
    pub fn weight_general(&self, v: Variant) -> Weight {
        let levels: [&[u32]; 3] = [
            &[self.a, self.b, self.c],
            &[self.ab, self.ac, self.bc],
            &[self.abc],
        ];
        let j = v.level() as usize - 1;
        let num = levels[j].iter().copied().min().unwrap_or(0) as u64;
        let deeper: u64 = levels[j + 1..]
            .iter()
            .flat_map(|l| l.iter())
            .map(|&s| s as u64)
            .sum();
        Weight::new(num, 1 + deeper)
    }
}

/// Region sizes of the triplet `(ids[0], ids[1], ids[2])` in `h`.
pub fn region_sizes(h: &Hypergraph, ids: [u32; 3]) -> Result<RegionSizes, RegionError> {
    for &id in &ids {
        if id as usize >= h.edge_count() {
            return Err(RegionError::IdOutOfRange {
                id,
                edge_count: h.edge_count(),
            });
        }
    }
    if ids[0] == ids[1] || ids[0] == ids[2] {
        return Err(RegionError::DuplicateId(ids[0]));
    }
    if ids[1] == ids[2] {
        return Err(RegionError::DuplicateId(ids[1]));
    }
    let (ex, ey, ez) = (h.edge(ids[0]), h.edge(ids[1]), h.edge(ids[2]));
    Ok(RegionSizes {
        x: ex.len() as u32,
        y: ey.len() as u32,
        z: ez.len() as u32,
        xy: intersect_count(ex, ey) as u32,
        xz: intersect_count(ex, ez) as u32,
        yz: intersect_count(ey, ez) as u32,
        xyz: intersect3_count(ex, ey, ez) as u32,
    })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn worked_example() -> RegionSizes {
        RegionSizes::new(12, 11, 12, 3, 3, 4, 1)
    }

    /// Uniform exclusive regions in `[0, 20]`, converted to sizes.
    pub(crate) fn arb_regions() -> impl Strategy<Value = RegionSizes> {
        prop::array::uniform7(0u32..=20).prop_map(|r| {
            RegionPartition {
                a: r[0],
                b: r[1],
                c: r[2],
                ab: r[3],
                ac: r[4],
                bc: r[5],
                abc: r[6],
            }
            .to_sizes()
        })
    }

    #[test]
    fn worked_example_partition_and_weights() {
        let p = worked_example().to_partition().unwrap();
        assert_eq!(p.as_array(), [7, 5, 6, 2, 2, 3, 1]);
        assert_eq!(
            worked_example().weight(Variant::Independent).parts(),
            (5, 9)
        );
        assert_eq!(worked_example().weight(Variant::Disjoint).parts(), (2, 2));
        assert_eq!(worked_example().weight(Variant::Common).parts(), (1, 1));
        assert_eq!(p.weight_general(Variant::Independent).parts(), (5, 9));
        assert_eq!(p.weight_general(Variant::Disjoint).parts(), (2, 2));
        assert_eq!(p.weight_general(Variant::Common).parts(), (1, 1));
    }

    #[test]
    fn trivial_partitions() {
        let same = RegionSizes::new(4, 4, 4, 4, 4, 4, 4);
        assert_eq!(
            same.to_partition().unwrap().as_array(),
            [0, 0, 0, 0, 0, 0, 4]
        );
        let apart = RegionSizes::new(2, 2, 2, 0, 0, 0, 0);
        assert_eq!(
            apart.to_partition().unwrap().as_array(),
            [2, 2, 2, 0, 0, 0, 0]
        );
        assert_eq!(apart.weight(Variant::Independent).parts(), (2, 1));
        assert_eq!(apart.weight(Variant::Disjoint).parts(), (0, 1));
        assert_eq!(apart.weight(Variant::Common).parts(), (0, 1));
    }

    #[test]
    fn invalid_regions_rejected() {
        assert!(RegionSizes::new(3, 3, 3, 1, 1, 1, 2)
            .to_partition()
            .is_err());
        assert!(RegionSizes::new(2, 5, 5, 3, 0, 0, 0)
            .to_partition()
            .is_err());
        assert!(RegionSizes::new(3, 3, 3, 2, 2, 0, 0)
            .to_partition()
            .is_err());
    }

    #[test]
    fn compare_examples() {
        assert!(Weight::new(5, 9) < Weight::new(1, 1));
        assert_eq!(Weight::new(2, 2), Weight::new(1, 1));
        assert!(Weight::new(3, 7) > Weight::new(2, 5));
        assert_eq!("5/9".parse::<Weight>().unwrap().parts(), (5, 9));
        assert_eq!("4".parse::<Weight>().unwrap().parts(), (4, 1));
        assert!("1/0".parse::<Weight>().is_err());
        assert!("x".parse::<Weight>().is_err());
    }

    #[test]
    fn region_sizes_errors() {
        let (h, _) = Hypergraph::from_id_edges(vec![vec![1, 2], vec![2, 3], vec![3, 4]]);
        assert_eq!(
            region_sizes(&h, [0, 1, 1]),
            Err(RegionError::DuplicateId(1))
        );
        assert!(matches!(
            region_sizes(&h, [0, 1, 7]),
            Err(RegionError::IdOutOfRange { id: 7, .. })
        ));
        assert_eq!(
            region_sizes(&h, [0, 1, 2]).unwrap(),
            RegionSizes::new(2, 2, 2, 1, 0, 1, 0)
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]

        #[test]
        fn closed_form_matches_general(r in arb_regions()) {
            let p = r.to_partition().unwrap();
            for v in Variant::ALL {
                prop_assert_eq!(r.weight(v), p.weight_general(v));
            }
        }

        #[test]
        fn compare_matches_rational_value(a in 0u64..1000, b in 1u64..1000, c in 0u64..1000, d in 1u64..1000) {
            let ord = Weight::new(a, b).cmp(&Weight::new(c, d));
            prop_assert_eq!(ord, (a * d).cmp(&(c * b)));
            prop_assert_eq!(ord == Ordering::Equal, a * d == c * b);
        }
    }
}
