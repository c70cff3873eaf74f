use super::ConstructionError;
use crate::geom::Point;

/// Smallest supported point count. Below it the fans of almost-horizontal
/// lines from distinct points of `L` can touch.
pub const MIN_N: u64 = 32;

/// Largest supported point count: region vertices have numerators near
/// `54 n^12`, which must fit in `i128`.
pub const MAX_N: u64 = 1 << 10;

/// Largest `e` with `2^e <= n`.
pub fn floor_log2(n: u64) -> u32 {
    assert!(n >= 1, "floor_log2 of zero");
    63 - n.leading_zeros()
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Smallest prime `p` with `n / (2 log n) < p < n / log n`, logarithm base 2
/// and floored.
pub fn find_prime(n: u64) -> Result<u64, ConstructionError> {
    if n < 2 {
        return Err(ConstructionError::NoPrimeInRange(n));
    }
    let log = floor_log2(n) as u64;
    // 2 log p > n  and  log p < n
    let first = n / (2 * log) + 1;
    (first..)
        .take_while(|&p| p * log < n)
        .find(|&p| 2 * log * p > n && is_prime(p))
        .ok_or(ConstructionError::NoPrimeInRange(n))
}

/// The `p` points `(x, x^2 mod p)` for `x = 1..=p`, residue 0 written as `p`.
pub fn build_qp(p: u64) -> Result<Vec<Point>, ConstructionError> {
    if !is_prime(p) {
        return Err(ConstructionError::NotPrime(p));
    }
    Ok((1..=p)
        .map(|x| {
            let r = (x * x) % p;
            let y = if r == 0 { p } else { r };
            Point::new(x as i64, y as i64)
        })
        .collect())
}

/// All constants of the construction for a given `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConstructionParams {
    pub n: u64,
    pub log_n: u64,
    pub p: u64,
    pub alpha: i64,
    /// Stretch factor `alpha * n * log_n` applied to the copies of `Q_p`.
    pub scale: i64,
    pub m: i64,
    pub grid_lo: i64,
    pub grid_hi: i64,
    pub grid_side_bound: i64,
}

impl ConstructionParams {
    /// `alpha * n^2`, the lower corner of the central square.
    pub fn central_lo(&self) -> i64 {
        self.alpha * (self.n * self.n) as i64
    }

    /// `2 * alpha * n^2`, the upper corner of the central square.
    pub fn central_hi(&self) -> i64 {
        2 * self.central_lo()
    }

    /// Number of points placed freely inside regions, `n - 4p`.
    pub fn extras(&self) -> usize {
        (self.n - 4 * self.p) as usize
    }

    pub fn frame_size(&self) -> usize {
        4 * self.p as usize
    }

    /// `(p^2 - p)^2`.
    pub fn region_count(&self) -> usize {
        let s = (self.p * self.p - self.p) as usize;
        s * s
    }

    pub fn in_grid(&self, q: Point) -> bool {
        let r = self.grid_lo..=self.grid_hi;
        r.contains(&q.x) && r.contains(&q.y)
    }
}

pub fn derive_params(n: u64) -> Result<ConstructionParams, ConstructionError> {
    if n < MIN_N {
        return Err(ConstructionError::NTooSmall(n));
    }
    if n > MAX_N {
        return Err(ConstructionError::NTooLarge(n));
    }
    let log_n = floor_log2(n) as u64;
    let p = find_prime(n)?;
    let alpha = 2 * n as i64;
    let ni = n as i64;
    let scale = alpha * ni * log_n as i64;
    let m = alpha * (2 * ni * ni + ni * ni * ni);
    let grid_side_bound = 3 * ni.pow(4);
    let params = ConstructionParams {
        n,
        log_n,
        p,
        alpha,
        scale,
        m,
        grid_lo: -(p as i64),
        grid_hi: m + p as i64,
        grid_side_bound,
    };
    if 4 * p > n {
        return Err(ConstructionError::BoundViolation(format!("4p = {} exceeds n = {n}", 4 * p)));
    }
    if m + 2 * p as i64 > grid_side_bound {
        return Err(ConstructionError::BoundViolation(format!(
            "m + 2p = {} exceeds 3n^4 = {grid_side_bound}",
            m + 2 * p as i64
        )));
    }
    Ok(params)
}

/// `ceil(n^4 / (17 log_n^4))`: lower bound on the number of alive regions.
pub fn alive_lower_bound(params: &ConstructionParams) -> u64 {
    let n4 = (params.n as u128).pow(4);
    let d = 17 * (params.log_n as u128).pow(4);
    n4.div_ceil(d) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log2_examples() {
        assert_eq!(floor_log2(64), 6);
        assert_eq!(floor_log2(63), 5);
        assert_eq!(floor_log2(1), 0);
    }

    #[test]
    fn prime_window() {
        assert_eq!(find_prime(64).unwrap(), 7);
        assert_eq!(find_prime(1024).unwrap(), 53);
        assert_eq!(find_prime(32).unwrap(), 5);
        assert_eq!(find_prime(4), Err(ConstructionError::NoPrimeInRange(4)));
    }

    #[test]
    fn prime_window_bounds_are_strict() {
        for n in 4..5000u64 {
            let log = floor_log2(n) as u64;
            if let Ok(p) = find_prime(n) {
                assert!(2 * log * p > n && p * log < n, "n={n} p={p}");
                // nothing smaller qualifies
                for q in 2..p {
                    assert!(!(is_prime(q) && 2 * log * q > n && q * log < n));
                }
            }
        }
    }

    #[test]
    fn qp_examples() {
        let pts = |v: &[(i64, i64)]| v.iter().map(|&p| Point::from(p)).collect::<Vec<_>>();
        assert_eq!(build_qp(3).unwrap(), pts(&[(1, 1), (2, 1), (3, 3)]));
        assert_eq!(build_qp(7).unwrap(), pts(&[(1, 1), (2, 4), (3, 2), (4, 2), (5, 4), (6, 1), (7, 7)]));
        assert_eq!(build_qp(2).unwrap(), pts(&[(1, 1), (2, 2)]));
        assert_eq!(build_qp(9), Err(ConstructionError::NotPrime(9)));
    }

    #[test]
    fn params_n64() {
        let p = derive_params(64).unwrap();
        assert_eq!((p.p, p.alpha, p.scale, p.m), (7, 128, 49152, 34603008));
        assert_eq!((p.grid_lo, p.grid_hi, p.grid_side_bound), (-7, 34603015, 50331648));
        assert_eq!(p.m + 2 * p.p as i64, 34603022);
        assert_eq!(p.region_count(), 1764);
        assert_eq!(p.extras(), 36);
        assert_eq!(p.central_lo(), 524288);
    }

    #[test]
    fn params_n32() {
        let p = derive_params(32).unwrap();
        assert_eq!((p.log_n, p.p, p.alpha, p.scale), (5, 5, 64, 10240));
        // 64 * (2 * 32^2 + 32^3)
        assert_eq!(p.m, 2228224);
        assert_eq!(p.region_count(), 400);
    }

    #[test]
    fn params_too_small() {
        assert_eq!(derive_params(16), Err(ConstructionError::NTooSmall(16)));
        assert_eq!(derive_params(MAX_N + 1), Err(ConstructionError::NTooLarge(MAX_N + 1)));
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(alive_lower_bound(&derive_params(64).unwrap()), 762);
        assert_eq!(alive_lower_bound(&derive_params(32).unwrap()), 99);
    }

    #[test]
    fn params_valid_across_range() {
        for n in MIN_N..=MAX_N {
            let p = derive_params(n).unwrap();
            assert!(p.m + 2 * p.p as i64 <= p.grid_side_bound);
            assert!(4 * p.p <= n);
        }
    }
}
