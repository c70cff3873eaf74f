//! Exact integer geometric kernel.
//!
//! Everything here works on integer coordinates with exact arithmetic. The
//! orientation determinant is evaluated in `i64` when the inputs are small
//! enough that no product can overflow, in checked `i128` otherwise, and falls
//! back to arbitrary precision when even `i128` would overflow. No code path
//! wraps silently.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use thiserror::Error;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
pub type Rational = Ratio<i128>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("lines are parallel or coincident")]
    ParallelOrCoincident,
    #[error("degenerate input: the two points defining a line coincide")]
    DegenerateLine,
    #[error("intermediate value does not fit in 128 bits")]
    Overflow,
}

/// A point of the integer grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

/// Sign of an orientation determinant. `Plus` means counterclockwise, i.e.
/// the third point lies strictly left of the directed line through the first
/// two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Plus,
    Zero,
    Minus,
}

impl Orientation {
    pub fn from_sign<T: Ord + Default>(v: T) -> Self {
        match v.cmp(&T::default()) {
            std::cmp::Ordering::Greater => Orientation::Plus,
            std::cmp::Ordering::Equal => Orientation::Zero,
            std::cmp::Ordering::Less => Orientation::Minus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Orientation::Plus => '+',
            Orientation::Zero => '0',
            Orientation::Minus => '-',
        }
    }
}

impl Neg for Orientation {
    type Output = Orientation;
    fn neg(self) -> Orientation {
        match self {
            Orientation::Plus => Orientation::Minus,
            Orientation::Zero => Orientation::Zero,
            Orientation::Minus => Orientation::Plus,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A point with exact rational coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalPoint {
    pub x: Rational,
    pub y: Rational,
}

impl RationalPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        RationalPoint { x, y }
    }

    pub fn from_point(p: Point) -> Self {
        RationalPoint::new(Rational::from_integer(p.x as i128), Rational::from_integer(p.y as i128))
    }

    /// Coordinates over a common positive denominator: `(X, Y, W)` with
    /// `x = X/W`, `y = Y/W`.
    pub fn homogeneous(&self) -> Option<(i128, i128, i128)> {
        let (xd, yd) = (*self.x.denom(), *self.y.denom());
        let w = (xd / xd.gcd(&yd)).checked_mul(yd)?;
        let xs = self.x.numer().checked_mul(w / self.x.denom())?;
        let ys = self.y.numer().checked_mul(w / self.y.denom())?;
        Some((xs, ys, w))
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

const SMALL: i64 = 1 << 30;

#[inline]
fn small(p: Point) -> bool {
    (-SMALL < p.x && p.x < SMALL) && (-SMALL < p.y && p.y < SMALL)
}

/// Exact sign of `det [[1,1,1],[xa,xb,xc],[ya,yb,yc]]`.
#[inline]
pub fn orient(a: Point, b: Point, c: Point) -> Orientation {
    if small(a) && small(b) && small(c) {
        // differences < 2^31, products < 2^62
        let d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
        return Orientation::from_sign(d);
    }
    orient_wide(a, b, c)
}

#[cold]
fn orient_wide(a: Point, b: Point, c: Point) -> Orientation {
    let (ax, ay) = (a.x as i128, a.y as i128);
    let (bx, by) = (b.x as i128, b.y as i128);
    let (cx, cy) = (c.x as i128, c.y as i128);
    let wide = || -> Option<i128> {
        let l = (bx - ax).checked_mul(cy - ay)?;
        let r = (by - ay).checked_mul(cx - ax)?;
        l.checked_sub(r)
    };
    match wide() {
        Some(d) => Orientation::from_sign(d),
        None => {
            let big = |v: i128| BigInt::from(v);
            let d = (big(bx) - big(ax)) * (big(cy) - big(ay)) - (big(by) - big(ay)) * (big(cx) - big(ax));
            Orientation::from_sign(d)
        }
    }
}

/// Orientation of the triple `(a, b, q)` for a rational point `q`.
///
/// Denominators are cleared with a common positive multiplier, so the sign is
/// the same as the exact rational determinant.
pub fn orient_hom(a: Point, b: Point, q: &RationalPoint) -> Orientation {
    let (ax, ay) = (a.x as i128, a.y as i128);
    let (bx, by) = (b.x as i128, b.y as i128);
    let narrow = || -> Option<i128> {
        let (qx, qy, w) = q.homogeneous()?;
        // (b - a) x (q - a) scaled by w > 0
        let dy = qy.checked_sub(ay.checked_mul(w)?)?;
        let dx = qx.checked_sub(ax.checked_mul(w)?)?;
        (bx - ax).checked_mul(dy)?.checked_sub((by - ay).checked_mul(dx)?)
    };
    if let Some(d) = narrow() {
        return Orientation::from_sign(d);
    }
    let (xn, xd) = (BigInt::from(*q.x.numer()), BigInt::from(*q.x.denom()));
    let (yn, yd) = (BigInt::from(*q.y.numer()), BigInt::from(*q.y.denom()));
    let d = BigInt::from(bx - ax) * (&yn * &xd - BigInt::from(ay) * &xd * &yd)
        - BigInt::from(by - ay) * (&xn * &yd - BigInt::from(ax) * &xd * &yd);
    Orientation::from_sign(d)
}

/// Exact intersection point of line(a1, a2) and line(b1, b2).
pub fn intersect_lines(a1: Point, a2: Point, b1: Point, b2: Point) -> Result<RationalPoint, GeomError> {
    if a1 == a2 || b1 == b2 {
        return Err(GeomError::DegenerateLine);
    }
    let r = (a2.x as i128 - a1.x as i128, a2.y as i128 - a1.y as i128);
    let s = (b2.x as i128 - b1.x as i128, b2.y as i128 - b1.y as i128);
    let w = (b1.x as i128 - a1.x as i128, b1.y as i128 - a1.y as i128);
    let cross = |u: (i128, i128), v: (i128, i128)| -> Option<i128> {
        u.0.checked_mul(v.1)?.checked_sub(u.1.checked_mul(v.0)?)
    };
    let denom = cross(r, s).ok_or(GeomError::Overflow)?;
    if denom == 0 {
        return Err(GeomError::ParallelOrCoincident);
    }
    // a1 + t r with t = (w x s) / (r x s)
    let t = cross(w, s).ok_or(GeomError::Overflow)?;
    let coord = |base: i64, dir: i128| -> Option<Rational> {
        let num = (base as i128).checked_mul(denom)?.checked_add(t.checked_mul(dir)?)?;
        Some(Rational::new(num, denom))
    };
    let x = coord(a1.x, r.0).ok_or(GeomError::Overflow)?;
    let y = coord(a1.y, r.1).ok_or(GeomError::Overflow)?;
    Ok(RationalPoint::new(x, y))
}

/// All lattice points on the closed segment `[a, b]`, ordered from `a` to `b`.
pub fn segment_lattice_points(a: Point, b: Point) -> Vec<Point> {
    let dx = b.x - a.x;
    let dy = b.y - a.y;
    let g = dx.abs().gcd(&dy.abs());
    if g == 0 {
        return vec![a];
    }
    let (sx, sy) = (dx / g, dy / g);
    (0..=g).map(|t| Point::new(a.x + t * sx, a.y + t * sy)).collect()
}

/// Primitive direction of `b - a` (components divided by their gcd).
pub fn primitive_direction(a: Point, b: Point) -> (i64, i64) {
    let dx = b.x - a.x;
    let dy = b.y - a.y;
    let g = dx.abs().gcd(&dy.abs());
    if g == 0 {
        (0, 0)
    } else {
        (dx / g, dy / g)
    }
}

/// `floor(num / den)` for `den > 0`.
#[inline]
pub(crate) fn floor_div(num: i128, den: i128) -> i128 {
    debug_assert!(den > 0);
    num.div_euclid(den)
}

/// `ceil(num / den)` for `den > 0`.
#[inline]
pub(crate) fn ceil_div(num: i128, den: i128) -> i128 {
    debug_assert!(den > 0);
    -((-num).div_euclid(den))
}

pub(crate) fn rational_floor(r: &Rational) -> i128 {
    floor_div(*r.numer(), *r.denom())
}

pub(crate) fn rational_ceil(r: &Rational) -> i128 {
    ceil_div(*r.numer(), *r.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    fn q(xn: i128, xd: i128, yn: i128, yd: i128) -> RationalPoint {
        RationalPoint::new(Rational::new(xn, xd), Rational::new(yn, yd))
    }

    #[test]
    fn orient_examples() {
        assert_eq!(orient(p(0, 0), p(1, 0), p(0, 1)), Orientation::Plus);
        assert_eq!(orient(p(0, 0), p(2, 2), p(1, 1)), Orientation::Zero);
        assert_eq!(orient(p(1, 1), p(3, 2), p(2, 4)), Orientation::Plus);
        assert_eq!(orient(p(0, 0), p(0, 1), p(1, 0)), Orientation::Minus);
    }

    #[test]
    fn orient_near_i64_limits() {
        let big = i64::MAX / 2;
        // (0,0), (big, big), (big-1, big) is left of the diagonal
        assert_eq!(orient(p(0, 0), p(big, big), p(big - 1, big)), Orientation::Plus);
        assert_eq!(orient(p(-big, -big), p(big, big), p(0, 0)), Orientation::Zero);
        assert_eq!(orient(p(i64::MIN, i64::MIN), p(i64::MAX, i64::MIN), p(0, i64::MAX)), Orientation::Plus);
    }

    #[test]
    fn intersect_examples() {
        let r = intersect_lines(p(0, 0), p(2, 2), p(0, 2), p(2, 0)).unwrap();
        assert_eq!(r, q(1, 1, 1, 1));
        assert_eq!(
            intersect_lines(p(0, 0), p(1, 0), p(0, 1), p(1, 1)),
            Err(GeomError::ParallelOrCoincident)
        );
        let r = intersect_lines(p(0, 0), p(3, 1), p(0, 2), p(3, 0)).unwrap();
        assert_eq!(r, q(2, 1, 2, 3));
        assert_eq!(
            intersect_lines(p(0, 0), p(0, 0), p(0, 2), p(3, 0)),
            Err(GeomError::DegenerateLine)
        );
    }

    #[test]
    fn intersect_normalizes() {
        // x = 6/4 must come back as 3/2
        let r = intersect_lines(p(0, 0), p(3, 0), p(1, -1), p(2, 1)).unwrap();
        assert_eq!(*r.x.numer(), 3);
        assert_eq!(*r.x.denom(), 2);
        assert!(*r.y.denom() > 0);
    }

    #[test]
    fn lattice_examples() {
        assert_eq!(segment_lattice_points(p(0, 0), p(6, 4)), vec![p(0, 0), p(3, 2), p(6, 4)]);
        assert_eq!(segment_lattice_points(p(0, 0), p(0, 3)).len(), 4);
        assert_eq!(segment_lattice_points(p(1, 1), p(2, 3)), vec![p(1, 1), p(2, 3)]);
        assert_eq!(segment_lattice_points(p(6, 4), p(0, 0)).first(), Some(&p(6, 4)));
    }

    #[test]
    fn orient_hom_examples() {
        assert_eq!(orient_hom(p(0, 0), p(2, 0), &q(1, 1, 1, 2)), Orientation::Plus);
        assert_eq!(orient_hom(p(0, 0), p(2, 2), &q(1, 1, 1, 1)), Orientation::Zero);
        assert_eq!(orient_hom(p(0, 0), p(3, 1), &q(1, 1, 1, 3)), Orientation::Zero);
        assert_eq!(orient_hom(p(0, 0), p(3, 1), &q(1, 1, 1, 2)), Orientation::Plus);
    }

    #[test]
    fn orient_hom_bigint_fallback() {
        // denominators large enough that the i128 path overflows
        let d = (1i128 << 62) + 1;
        let pt = q(d * 3 + 1, d, 5, 7);
        let a = p(-(1 << 40), -(1 << 40));
        let b = p(1 << 40, -(1 << 40) + 1);
        let expect = {
            let (xn, xd) = (BigInt::from(*pt.x.numer()), BigInt::from(*pt.x.denom()));
            let (yn, yd) = (BigInt::from(*pt.y.numer()), BigInt::from(*pt.y.denom()));
            let (ax, ay, bx, by) = (BigInt::from(a.x), BigInt::from(a.y), BigInt::from(b.x), BigInt::from(b.y));
            let v = (&bx - &ax) * (&yn * &xd - &ay * &xd * &yd) - (&by - &ay) * (&xn * &yd - &ax * &xd * &yd);
            Orientation::from_sign(v)
        };
        assert_eq!(orient_hom(a, b, &pt), expect);
        assert_eq!(orient_hom(a, b, &pt), Orientation::Plus);
    }

    #[test]
    fn rounding_helpers() {
        assert_eq!(floor_div(-7, 2), -4);
        assert_eq!(ceil_div(-7, 2), -3);
        assert_eq!(ceil_div(7, 2), 4);
        assert_eq!(rational_floor(&Rational::new(-1, 3)), -1);
        assert_eq!(rational_ceil(&Rational::new(-1, 3)), 0);
    }
}
