//! SVG figure of the frame, its segments, and optionally the regions.
//!
//! One uniform scale maps the central square `[alpha n^2, 2 alpha n^2]^2`
//! onto `[0, 1000]^2` (y pointing down); the view box covers the whole grid.
//! Coordinates are rounded to three decimals in exact integer arithmetic, so
//! the output is byte-stable.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::construction::{Construction, Frame, Region};
use crate::geom::{Point, RationalPoint};

const UNITS: i128 = 1000;
const COLORS: [(&str, &str); 4] = [("D", "#1f77b4"), ("U", "#d62728"), ("L", "#2ca02c"), ("R", "#9467bd")];

/// `num / den` rounded half away from zero to three decimals.
fn fixed3(num: impl Into<BigInt>, den: impl Into<BigInt>) -> String {
    let (num, den): (BigInt, BigInt) = (num.into(), den.into());
    debug_assert!(den.is_positive());
    let scaled: BigInt = num * 1000;
    let q: BigInt = (scaled.abs() * 2 + &den) / (den * 2);
    let sign = if scaled.is_negative() && !q.is_zero() { "-" } else { "" };
    let (int, frac) = q.div_rem(&BigInt::from(1000));
    format!("{sign}{int}.{frac:0>3}")
}

/// Affine map from grid coordinates to figure units: the grid corner
/// `(lo, hi)` goes to the origin and `side` grid units become `UNITS`.
#[derive(Debug, Clone, Copy)]
struct View {
    lo: i128,
    hi: i128,
    side: i128,
}

impl View {
    fn x(&self, num: i128, den: i128) -> String {
        let (num, den) = (BigInt::from(num), BigInt::from(den));
        fixed3((num - self.lo * &den) * UNITS, self.side * den)
    }

    fn y(&self, num: i128, den: i128) -> String {
        let (num, den) = (BigInt::from(num), BigInt::from(den));
        fixed3((self.hi * &den - num) * UNITS, self.side * den)
    }

    fn point(&self, q: Point) -> (String, String) {
        (self.x(q.x as i128, 1), self.y(q.y as i128, 1))
    }

    fn rational(&self, q: &RationalPoint) -> (String, String) {
        (self.x(*q.x.numer(), *q.x.denom()), self.y(*q.y.numer(), *q.y.denom()))
    }

    /// Figure length of `len` grid units.
    fn length(&self, len: i128) -> String {
        fixed3(len * UNITS, self.side)
    }
}

fn segments(out: &mut String, view: &View, fans: &[(&[Point], &[Point])], width: &str) {
    for (apexes, ends) in fans {
        for &a in *apexes {
            for &b in *ends {
                let ((x1, y1), (x2, y2)) = (view.point(a), view.point(b));
                let _ = writeln!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke-width="{width}"/>"#);
            }
        }
    }
}

fn regions_group(out: &mut String, view: &View, regions: &[Region], width: &str) {
    let _ = writeln!(out, r##"<g id="regions" fill="none" stroke="#555555" stroke-width="{width}">"##);
    for r in regions {
        // boundary order: top-left, top-right, bottom-right, bottom-left
        let corners = [r.top_left(), r.top_right(), r.bottom_right(), r.bottom_left()];
        let pts: Vec<String> = corners
            .iter()
            .map(|v| {
                let (x, y) = view.rational(v);
                format!("{x},{y}")
            })
            .collect();
        let _ = writeln!(out, r#"<polygon data-key="{}" points="{}"/>"#, r.key, pts.join(" "));
    }
    out.push_str("</g>\n");
}

/// Standalone SVG document: `4p` point markers, `2p^2` frame segments, and
/// with `with_regions` one outline per region.
pub fn render(c: &Construction, with_regions: bool) -> String {
    let params = &c.params;
    let frame: &Frame = &c.frame;
    let view = View { lo: params.grid_lo as i128, hi: params.grid_hi as i128, side: params.central_lo() as i128 };
    let span = view.hi - view.lo;
    let extent = view.length(span);
    let stroke = view.length(span / 2000);
    let radius = view.length(span / 250);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {extent} {extent}" width="1000" height="1000">"#
    );
    let _ = writeln!(
        out,
        "<!-- n={} p={} alpha={} m={}; uniform scale: {} grid units = {UNITS} figure units, y axis flipped -->",
        params.n, params.p, params.alpha, params.m, view.side
    );
    let (cx, cy) = view.point(Point::new(params.central_lo(), params.central_hi()));
    let _ = writeln!(
        out,
        r##"<rect id="central" x="{cx}" y="{cy}" width="{UNITS}" height="{UNITS}" fill="#f0f0f0"/>"##
    );

    let _ = writeln!(out, r##"<g id="segments" stroke="#999999">"##);
    segments(&mut out, &view, &[(&frame.l, &frame.r), (&frame.d, &frame.u)], &stroke);
    out.push_str("</g>\n");

    if with_regions {
        regions_group(&mut out, &view, &c.regions(), &stroke);
    }

    for ((name, color), copy) in COLORS.iter().zip([&frame.d, &frame.u, &frame.l, &frame.r]) {
        let _ = writeln!(out, r#"<g id="{name}" fill="{color}">"#);
        for &q in copy.iter() {
            let (x, y) = view.point(q);
            let _ = writeln!(out, r#"<circle cx="{x}" cy="{y}" r="{radius}"/>"#);
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}
