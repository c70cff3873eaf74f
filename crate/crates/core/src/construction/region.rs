//! Almost-square regions.
//!
//! Two consecutive almost-horizontal lines of the fan at `l in L` and two
//! consecutive almost-vertical lines of the fan at `d in D` bound one region.
//! Grid points strictly inside a region are found column by column: for a
//! fixed x each boundary line turns into an exact rational bound on y.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::frame::Frame;
use super::params::ConstructionParams;
use super::ConstructionError;
use crate::geom::{ceil_div, floor_div, intersect_lines, orient, rational_ceil, rational_floor};
use crate::geom::{Orientation, Point, RationalPoint};

/// Combinatorial name of a region.
///
/// `l_index` indexes `L` (sorted by y), `r_gap` the gap between `R[r_gap]`
/// and `R[r_gap + 1]`, `d_index` indexes `D` (sorted by x), and `u_gap` the
/// gap between `U[u_gap]` and `U[u_gap + 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RegionKey {
    pub l_index: usize,
    pub r_gap: usize,
    pub d_index: usize,
    pub u_gap: usize,
}

impl RegionKey {
    pub fn new(l_index: usize, r_gap: usize, d_index: usize, u_gap: usize) -> Self {
        RegionKey { l_index, r_gap, d_index, u_gap }
    }

    pub fn is_valid(&self, p: usize) -> bool {
        self.l_index < p && self.r_gap + 1 < p && self.d_index < p && self.u_gap + 1 < p
    }

    pub fn flat_index(&self, p: usize) -> usize {
        ((self.l_index * (p - 1) + self.r_gap) * p + self.d_index) * (p - 1) + self.u_gap
    }

    pub fn from_flat(mut idx: usize, p: usize) -> Self {
        let u_gap = idx % (p - 1);
        idx /= p - 1;
        let d_index = idx % p;
        idx /= p;
        let r_gap = idx % (p - 1);
        let l_index = idx / (p - 1);
        RegionKey { l_index, r_gap, d_index, u_gap }
    }
}

impl fmt::Display for RegionKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "l={} r={} d={} u={}", self.l_index, self.r_gap, self.d_index, self.u_gap)
    }
}

/// Open half-plane `{ q : orient(from, to, q) = side }`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HalfPlane {
    pub from: Point,
    pub to: Point,
    pub side: Orientation,
}

enum ColumnBound {
    All,
    Empty,
    Below(i128),
    Above(i128),
}

impl HalfPlane {
    pub fn contains(&self, q: Point) -> bool {
        orient(self.from, self.to, q) == self.side
    }

    /// Integer y-values of column `x` inside the half-plane.
    fn column(&self, x: i64) -> ColumnBound {
        let (fx, fy) = (self.from.x as i128, self.from.y as i128);
        let a = self.to.x as i128 - fx;
        let b = self.to.y as i128 - fy;
        let dx = x as i128 - fx;
        // orient = a (y - fy) - b dx = a y - c
        let c = a * fy + b * dx;
        if a == 0 {
            return if Orientation::from_sign(-c) == self.side { ColumnBound::All } else { ColumnBound::Empty };
        }
        let (num, den) = if a > 0 { (c, a) } else { (-c, -a) };
        let above = (a > 0) == (self.side == Orientation::Plus);
        if above {
            ColumnBound::Above(floor_div(num, den) + 1)
        } else {
            ColumnBound::Below(ceil_div(num, den) - 1)
        }
    }
}

/// One almost-square region with its four boundary lines and vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub key: RegionKey,
    /// `(l, r1)`, the lower almost-horizontal boundary.
    pub lower: (Point, Point),
    /// `(l, r2)`, the upper almost-horizontal boundary.
    pub upper: (Point, Point),
    /// `(d, u1)`, the left almost-vertical boundary.
    pub left: (Point, Point),
    /// `(d, u2)`, the right almost-vertical boundary.
    pub right: (Point, Point),
    /// Top-left, bottom-left, top-right, bottom-right.
    pub vertices: [RationalPoint; 4],
}

impl Region {
    pub fn top_left(&self) -> &RationalPoint {
        &self.vertices[0]
    }

    pub fn bottom_left(&self) -> &RationalPoint {
        &self.vertices[1]
    }

    pub fn top_right(&self) -> &RationalPoint {
        &self.vertices[2]
    }

    pub fn bottom_right(&self) -> &RationalPoint {
        &self.vertices[3]
    }

    /// The four open half-planes whose intersection is the region interior.
    ///
    /// Above the lower line and below the upper one; right of the left line
    /// (directed upward from `d`, hence `Minus`) and left of the right line.
    pub fn half_planes(&self) -> [HalfPlane; 4] {
        let hp = |(from, to): (Point, Point), side| HalfPlane { from, to, side };
        [
            hp(self.lower, Orientation::Plus),
            hp(self.upper, Orientation::Minus),
            hp(self.left, Orientation::Minus),
            hp(self.right, Orientation::Plus),
        ]
    }

    /// Strict interior membership.
    pub fn contains(&self, q: Point) -> bool {
        self.half_planes().iter().all(|h| h.contains(q))
    }

    /// Integer x-range that can hold interior points.
    pub fn column_range(&self) -> (i64, i64) {
        let lo = self.vertices.iter().map(|v| v.x).min().unwrap();
        let hi = self.vertices.iter().map(|v| v.x).max().unwrap();
        ((rational_floor(&lo) + 1) as i64, (rational_ceil(&hi) - 1) as i64)
    }

    /// Inclusive y-range of interior points in column `x`, if any.
    pub fn column_interval(&self, x: i64) -> Option<(i64, i64)> {
        let mut lo = i128::MIN;
        let mut hi = i128::MAX;
        for h in self.half_planes() {
            match h.column(x) {
                ColumnBound::All => {}
                ColumnBound::Empty => return None,
                ColumnBound::Above(v) => lo = lo.max(v),
                ColumnBound::Below(v) => hi = hi.min(v),
            }
        }
        (lo <= hi).then_some((lo as i64, hi as i64))
    }

    /// Vertical extent between the two left vertices.
    pub fn left_extent(&self) -> BigRational {
        big(&self.top_left().y) - big(&self.bottom_left().y)
    }

    /// Vertical extent between the two right vertices.
    pub fn right_extent(&self) -> BigRational {
        big(&self.top_right().y) - big(&self.bottom_right().y)
    }
}

/// Vertex coordinates carry denominators near `n^8`, so differences of them
/// need more than 128 bits.
fn big(r: &crate::geom::Rational) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

pub fn region_from_key(frame: &Frame, key: RegionKey) -> Result<Region, ConstructionError> {
    let p = frame.p();
    if !key.is_valid(p) {
        return Err(ConstructionError::KeyOutOfRange(key));
    }
    let l = frame.l[key.l_index];
    let lower = (l, frame.r[key.r_gap]);
    let upper = (l, frame.r[key.r_gap + 1]);
    let d = frame.d[key.d_index];
    let left = (d, frame.u[key.u_gap]);
    let right = (d, frame.u[key.u_gap + 1]);
    let meet = |h: (Point, Point), v: (Point, Point)| {
        intersect_lines(h.0, h.1, v.0, v.1).map_err(ConstructionError::Geometry)
    };
    let vertices = [meet(upper, left)?, meet(lower, left)?, meet(upper, right)?, meet(lower, right)?];
    Ok(Region { key, lower, upper, left, right, vertices })
}

/// Number of grid points strictly inside `region`.
pub fn region_grid_count(region: &Region) -> u64 {
    let (x0, x1) = region.column_range();
    (x0..=x1)
        .filter_map(|x| region.column_interval(x))
        .map(|(lo, hi)| (hi - lo + 1) as u64)
        .sum()
}

/// Grid points strictly inside `region`, in lexicographic order.
pub fn iterate_region_points(region: &Region) -> impl Iterator<Item = Point> + '_ {
    let (x0, x1) = region.column_range();
    (x0..=x1).flat_map(move |x| {
        let (lo, hi) = region.column_interval(x).unwrap_or((1, 0));
        (lo..=hi).map(move |y| Point::new(x, y))
    })
}

/// Key of the region whose interior holds `q`, if any.
pub fn locate(frame: &Frame, q: Point) -> Option<RegionKey> {
    let p = frame.p();
    let fan = |apex: Point, ends: &[Point], inside: Orientation| -> Option<usize> {
        // first end on the far side of q; the gap sits just before it
        let sides: Vec<Orientation> = ends.iter().map(|&e| orient(apex, e, q)).collect();
        if sides.contains(&Orientation::Zero) {
            return None;
        }
        let g = sides.iter().position(|&s| s != inside)?;
        (g > 0 && sides[g..].iter().all(|&s| s != inside)).then(|| g - 1)
    };
    let (l_index, r_gap) = (0..p).find_map(|i| fan(frame.l[i], &frame.r, Orientation::Plus).map(|g| (i, g)))?;
    let (d_index, u_gap) = (0..p).find_map(|i| fan(frame.d[i], &frame.u, Orientation::Minus).map(|g| (i, g)))?;
    Some(RegionKey { l_index, r_gap, d_index, u_gap })
}

/// Every region key in flat-index order.
pub fn all_keys(params: &ConstructionParams) -> impl Iterator<Item = RegionKey> {
    let p = params.p as usize;
    (0..params.region_count()).map(move |i| RegionKey::from_flat(i, p))
}
