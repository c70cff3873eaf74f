use std::collections::HashSet;

use rayon::prelude::*;

use super::frame::region_vertices;
use super::VerificationReport;
use crate::construction::{locate, region_grid_count, Construction};
use crate::geom::{ceil_div, floor_div, primitive_direction, rational_ceil, rational_floor, segment_lattice_points};
use crate::geom::{Point, Rational};

/// Point counts at or above this `n` are checked against the asymptotic
/// bounds; below it they are only reported.
pub const HARD_BOUND_MIN_N: u64 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionSummary {
    pub regions: usize,
    pub min: u64,
    pub max: u64,
    pub total: u64,
    /// `(alpha * log_n)^2 / 5`.
    pub threshold: Rational,
}

impl RegionSummary {
    pub fn compute(c: &Construction) -> Self {
        let counts: Vec<u64> = c.regions().par_iter().map(region_grid_count).collect();
        let lg = c.params.alpha as i128 * c.params.log_n as i128;
        RegionSummary {
            regions: counts.len(),
            min: counts.iter().copied().min().unwrap_or(0),
            max: counts.iter().copied().max().unwrap_or(0),
            total: counts.iter().sum(),
            threshold: Rational::new(lg * lg, 5),
        }
    }

    pub fn mean(&self) -> Rational {
        Rational::new(self.total as i128, self.regions.max(1) as i128)
    }

    pub fn threshold_floor(&self) -> i128 {
        rational_floor(&self.threshold)
    }
}

/// Region count and grid-point statistics over the whole catalog.
pub fn region_stats(c: &Construction) -> VerificationReport {
    let s = RegionSummary::compute(c);
    let mut report = VerificationReport::new();
    let p = c.params.p as usize;
    report.hard("regions", s.regions == c.params.region_count(), s.regions, (p * p - p) * (p * p - p));
    let min_ok = Rational::from_integer(s.min as i128) >= s.threshold;
    if c.params.n >= HARD_BOUND_MIN_N {
        report.hard("region_points_min", min_ok, s.min, s.threshold);
    } else {
        report.report("region_points_min", s.min, s.threshold);
    }
    report.report("region_points_mean", s.mean(), s.threshold);
    report.report("region_points_max", s.max, s.threshold);
    let side = c.params.central_lo() as i128 + 1;
    report.hard("region_points_total", (s.total as i128) <= side * side, s.total, side * side);
    report
}

/// First and last lattice points of line(a, b) inside the closed box
/// `[x0, x1] x [y0, y1]`.
pub fn line_lattice_in_box(a: Point, b: Point, (x0, x1): (i64, i64), (y0, y1): (i64, i64)) -> Option<(Point, Point)> {
    let (sx, sy) = primitive_direction(a, b);
    if (sx, sy) == (0, 0) {
        return None;
    }
    let mut lo = i128::MIN;
    let mut hi = i128::MAX;
    for (base, step, min, max) in [(a.x, sx, x0, x1), (a.y, sy, y0, y1)] {
        let (base, step, min, max) = (base as i128, step as i128, min as i128, max as i128);
        if step == 0 {
            if base < min || base > max {
                return None;
            }
            continue;
        }
        // min <= base + t step <= max
        let (t0, t1) = if step > 0 {
            (ceil_div(min - base, step), floor_div(max - base, step))
        } else {
            (ceil_div(base - max, -step), floor_div(base - min, -step))
        };
        lo = lo.max(t0);
        hi = hi.min(t1);
    }
    if lo > hi {
        return None;
    }
    let at = |t: i128| Point::new((a.x as i128 + t * sx as i128) as i64, (a.y as i128 + t * sy as i128) as i64);
    Some((at(lo), at(hi)))
}

fn lattice_count(a: Point, b: Point) -> u64 {
    let (dx, dy) = ((b.x - a.x).unsigned_abs(), (b.y - a.y).unsigned_abs());
    num_integer::gcd(dx, dy) + 1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KillSummary {
    pub lines: usize,
    /// Most lattice points of one line inside the central square.
    pub lattice_max: u64,
    /// Most region grid points killed by one line.
    pub killed_max: u64,
    /// Sum over lines of region grid points killed.
    pub killed_total: u64,
}

impl KillSummary {
    pub fn compute(c: &Construction, placed: &[Point]) -> Self {
        let (c_lo, c_hi) = (c.params.central_lo(), c.params.central_hi());
        let verts = region_vertices(&c.frame);
        let bx = (
            rational_floor(&verts.iter().map(|v| v.x).min().unwrap_or_default()) as i64,
            rational_ceil(&verts.iter().map(|v| v.x).max().unwrap_or_default()) as i64,
        );
        let by = (
            rational_floor(&verts.iter().map(|v| v.y).min().unwrap_or_default()) as i64,
            rational_ceil(&verts.iter().map(|v| v.y).max().unwrap_or_default()) as i64,
        );
        let occupied: HashSet<Point> = placed.iter().copied().collect();
        let pairs: Vec<(Point, Point)> = (0..placed.len())
            .flat_map(|i| (i + 1..placed.len()).map(move |j| (i, j)))
            .map(|(i, j)| (placed[i], placed[j]))
            .collect();
        let per_line: Vec<(u64, u64)> = pairs
            .par_iter()
            .map(|&(a, b)| {
                let lattice = line_lattice_in_box(a, b, (c_lo, c_hi), (c_lo, c_hi))
                    .map_or(0, |(s, e)| lattice_count(s, e));
                let killed = line_lattice_in_box(a, b, bx, by).map_or(0, |(s, e)| {
                    segment_lattice_points(s, e)
                        .into_iter()
                        .filter(|q| !occupied.contains(q) && locate(&c.frame, *q).is_some())
                        .count() as u64
                });
                (lattice, killed)
            })
            .collect();
        KillSummary {
            lines: pairs.len(),
            lattice_max: per_line.iter().map(|v| v.0).max().unwrap_or(0),
            killed_max: per_line.iter().map(|v| v.1).max().unwrap_or(0),
            killed_total: per_line.iter().map(|v| v.1).sum(),
        }
    }
}

/// Grid points killed by the lines through pairs of `placed`.
pub fn kill_stats(c: &Construction, placed: &[Point]) -> VerificationReport {
    let s = KillSummary::compute(c, placed);
    let an2 = c.params.central_lo() as i128;
    let mut report = VerificationReport::new();
    report.report("kill_lines", s.lines, s.lines);
    report.hard("kill_lattice_max", (s.lattice_max as i128) <= an2 + 1, s.lattice_max, an2 + 1);
    report.hard("kill_region_max", (s.killed_max as i128) <= an2, s.killed_max, an2);
    report.report("kill_region_total", s.killed_total, s.lines as i128 * an2);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn box_clipping() {
        assert_eq!(line_lattice_in_box(p(0, 0), p(2, 1), (1, 9), (0, 9)), Some((p(2, 1), p(8, 4))));
        assert_eq!(line_lattice_in_box(p(0, 0), p(1, 0), (-3, 3), (1, 5)), None);
        assert_eq!(line_lattice_in_box(p(5, 5), p(5, 9), (0, 10), (-2, 3)), Some((p(5, -2), p(5, 3))));
        assert_eq!(line_lattice_in_box(p(0, 0), p(-3, 3), (-10, 10), (0, 4)), Some((p(0, 0), p(-4, 4))));
    }

    #[test]
    fn fewer_than_two_points() {
        let c = Construction::new(32).unwrap();
        let s = KillSummary::compute(&c, &c.frame.points()[..1]);
        assert_eq!((s.lines, s.killed_total), (0, 0));
    }

    #[test]
    fn kill_total_monotone() {
        let c = Construction::new(32).unwrap();
        let set = c.place_all(&c.random_placement(3).unwrap()).unwrap();
        let pts = set.points();
        let small = KillSummary::compute(&c, &pts[..24]);
        let large = KillSummary::compute(&c, pts);
        assert!(large.killed_total >= small.killed_total);
        assert!(large.lattice_max <= c.params.central_lo() as u64 + 1);
    }

    #[test]
    fn killed_points_counted() {
        let c = Construction::new(32).unwrap();
        let r = c.region(crate::construction::RegionKey::new(2, 2, 2, 2)).unwrap();
        let q: Vec<Point> = crate::construction::iterate_region_points(&r).take(3).collect();
        // horizontal line through a region row, endpoints outside every region
        let a = p(0, q[0].y);
        let b = p(-1, q[0].y);
        let s = KillSummary::compute(&c, &[a, b]);
        assert_eq!(s.lines, 1);
        assert!(s.killed_max > 0);
    }
}
