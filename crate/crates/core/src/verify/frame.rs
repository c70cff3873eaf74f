use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use super::{VerificationReport, VerifyError};
use crate::construction::{all_keys, build_frame_unchecked, region_from_key, ConstructionParams, Frame};
use crate::geom::{intersect_lines, orient, orient_hom, Orientation, Point, Rational, RationalPoint};

/// All intersections of an `L x R` line with a `D x U` line. Every region
/// vertex is one of these, and every one of these is a region vertex.
pub fn region_vertices(frame: &Frame) -> Vec<RationalPoint> {
    let horizontal: Vec<(Point, Point)> =
        frame.l.iter().flat_map(|&l| frame.r.iter().map(move |&r| (l, r))).collect();
    let vertical: Vec<(Point, Point)> = frame.d.iter().flat_map(|&d| frame.u.iter().map(move |&u| (d, u))).collect();
    horizontal
        .par_iter()
        .flat_map_iter(|&(l, r)| {
            vertical.iter().map(move |&(d, u)| intersect_lines(l, r, d, u).expect("vertices fit in i128 up to MAX_N"))
        })
        .collect()
}

pub fn verify_frame(params: &ConstructionParams) -> Result<VerificationReport, VerifyError> {
    let frame = build_frame_unchecked(params)?;
    Ok(verify_frame_with(params, &frame))
}

fn count_outside(points: &[Point], xs: (i64, i64), ys: (i64, i64)) -> usize {
    points
        .iter()
        .filter(|q| !(xs.0 <= q.x && q.x <= xs.1 && ys.0 <= q.y && q.y <= ys.1))
        .count()
}

/// Point of line(a, b) at abscissa `t`, with the axes swapped when `swap`.
fn line_at(a: Point, b: Point, t: i128, swap: bool) -> BigRational {
    let (a, b) = if swap { ((a.y, a.x), (b.y, b.x)) } else { ((a.x, a.y), (b.x, b.y)) };
    let big = |v: i64| BigInt::from(v);
    BigRational::from_integer(big(a.1))
        + BigRational::new((big(b.1) - big(a.1)) * (BigInt::from(t) - big(a.0)), big(b.0) - big(a.0))
}

fn line_y_at(a: Point, b: Point, x: i128) -> BigRational {
    line_at(a, b, x, false)
}

fn line_x_at(a: Point, b: Point, y: i128) -> BigRational {
    line_at(a, b, y, true)
}

/// Smallest gap between consecutive fans, each fan measured over the
/// widened central band. Negative or zero means two fans overlap.
fn fan_gap(
    apexes: &[Point],
    ends: &[Point],
    eval: impl Fn(Point, Point, i128) -> BigRational,
    band: (i128, i128),
) -> BigRational {
    let extent = |apex: Point| {
        let vals: Vec<BigRational> = [ends[0], ends[ends.len() - 1]]
            .iter()
            .flat_map(|&e| [eval(apex, e, band.0), eval(apex, e, band.1)])
            .collect();
        (vals.iter().min().unwrap().clone(), vals.iter().max().unwrap().clone())
    };
    let ext: Vec<(BigRational, BigRational)> = apexes.iter().map(|&a| extent(a)).collect();
    ext.windows(2).map(|w| &w[1].0 - &w[0].1).min().unwrap_or_default()
}

/// Counts pairs within `copy` whose spanned line fails to have every point of
/// `others` and every vertex on side `side`. Pairs are directed along the
/// copy's sort order.
fn separation_violations(copy: &[Point], others: &[Point], vertices: &[RationalPoint], side: Orientation) -> usize {
    let pairs: Vec<(Point, Point)> = (0..copy.len())
        .flat_map(|i| (i + 1..copy.len()).map(move |j| (i, j)))
        .map(|(i, j)| (copy[i], copy[j]))
        .collect();
    pairs
        .par_iter()
        .map(|&(a, b)| {
            others.iter().filter(|&&q| orient(a, b, q) != side).count()
                + vertices.iter().filter(|v| orient_hom(a, b, v) != side).count()
        })
        .sum()
}

/// Runs every frame invariant against `frame`.
pub fn verify_frame_with(params: &ConstructionParams, frame: &Frame) -> VerificationReport {
    let mut report = VerificationReport::new();
    let p = params.p as usize;
    let n = params.n as i64;
    let (c_lo, c_hi) = (params.central_lo(), params.central_hi());
    let pi = params.p as i64;
    let m = params.m;

    let sizes_ok = [&frame.d, &frame.u, &frame.l, &frame.r].iter().all(|c| c.len() == p);
    report.hard("frame_size", sizes_ok, frame.d.len() + frame.u.len() + frame.l.len() + frame.r.len(), 4 * p);

    report.count("range_d", count_outside(&frame.d, (c_lo, c_hi), (-pi + 1, 0)));
    report.count("range_u", count_outside(&frame.u, (c_lo, c_hi), (m + 1, m + pi)));
    report.count("range_l", count_outside(&frame.l, (-pi + 1, 0), (c_lo, c_hi)));
    report.count("range_r", count_outside(&frame.r, (m + 1, m + pi), (c_lo, c_hi)));

    let bad_steps = |v: &[Point], along_x: bool| {
        v.windows(2)
            .filter(|w| if along_x { w[1].x - w[0].x } else { w[1].y - w[0].y } != params.scale)
            .count()
    };
    let spacing = bad_steps(&frame.d, true) + bad_steps(&frame.u, true) + bad_steps(&frame.l, false) + bad_steps(&frame.r, false);
    report.count("spacing", spacing);

    let slope_lr = frame
        .l
        .iter()
        .flat_map(|&l| frame.r.iter().map(move |&r| (l, r)))
        .filter(|(l, r)| !(((r.y - l.y).abs() as i128 * n as i128) < (r.x - l.x) as i128))
        .count();
    let slope_du = frame
        .d
        .iter()
        .flat_map(|&d| frame.u.iter().map(move |&u| (d, u)))
        .filter(|(d, u)| !(((u.x - d.x).abs() as i128 * n as i128) < (u.y - d.y) as i128))
        .count();
    report.count("slope_lr", slope_lr);
    report.count("slope_du", slope_du);

    let vertices = region_vertices(frame);
    let rest = |skip: usize| -> Vec<Point> {
        [&frame.d, &frame.u, &frame.l, &frame.r]
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .flat_map(|(_, c)| c.iter().copied())
            .collect()
    };
    // D pairs go left to right with everything above; U pairs with everything
    // below; L pairs go upward with everything to the right; R pairs upward
    // with everything to the left.
    report.count("separation_d", separation_violations(&frame.d, &rest(0), &vertices, Orientation::Plus));
    report.count("separation_u", separation_violations(&frame.u, &rest(1), &vertices, Orientation::Minus));
    report.count("separation_l", separation_violations(&frame.l, &rest(2), &vertices, Orientation::Minus));
    report.count("separation_r", separation_violations(&frame.r, &rest(3), &vertices, Orientation::Plus));

    let widen = 2 * params.alpha as i128 * n as i128;
    let band = (c_lo as i128 - widen, c_hi as i128 + widen);
    let zero = BigRational::default();
    let gap_h = fan_gap(&frame.l, &frame.r, line_y_at, band);
    let gap_v = fan_gap(&frame.d, &frame.u, line_x_at, band);
    report.hard("fan_disjoint_horizontal", gap_h > zero, gap_h, 0usize);
    report.hard("fan_disjoint_vertical", gap_v > zero, gap_v, 0usize);

    let degenerate = frame.degeneracy();
    let c = report.count("frame_nondegenerate", degenerate.iter().count());
    if let Some(w) = degenerate {
        c.with_detail(format!("witness={w}"));
    }

    let keys: Vec<_> = all_keys(params).collect();
    let mut distinct = keys.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let valid = distinct.iter().filter(|k| k.is_valid(p)).count();
    report.hard("region_count", valid == params.region_count(), valid, (p * p - p) * (p * p - p));

    // vertical extent between the left (and right) vertices of every region
    let deltas: Vec<(BigRational, BigRational)> = keys
        .par_iter()
        .map(|&k| {
            let r = region_from_key(frame, k).expect("catalog keys are valid");
            let (a, b) = (r.left_extent(), r.right_extent());
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    let lg = params.alpha as i128 * params.log_n as i128;
    let delta_min = deltas.iter().map(|d| &d.0).min().cloned().unwrap_or_default();
    let delta_max = deltas.iter().map(|d| &d.1).max().cloned().unwrap_or_default();
    report.report("delta_min", delta_min, Rational::new(lg, 2));
    report.report("delta_max", delta_max, Rational::from_integer(2 * lg));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::{build_frame, derive_params};
    use crate::verify::Status;

    #[test]
    fn n32_passes() {
        let params = derive_params(32).unwrap();
        let r = verify_frame(&params).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.get("delta_min").unwrap().status, Status::Report);
    }

    #[test]
    fn perturbed_d_fails_range() {
        let params = derive_params(64).unwrap();
        let mut frame = build_frame(&params).unwrap();
        frame.d[3].y += params.p as i64;
        let r = verify_frame_with(&params, &frame);
        assert_eq!(r.get("range_d").unwrap().status, Status::Fail);
        assert!(!r.passed());
    }

    #[test]
    fn vertex_count_is_p4() {
        let params = derive_params(32).unwrap();
        let frame = build_frame(&params).unwrap();
        assert_eq!(region_vertices(&frame).len(), 625);
    }
}
