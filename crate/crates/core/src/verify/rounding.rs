//! Rounding random point sets to the integer grid.
//!
//! Coordinates are drawn as fixed-point numbers with `frac_bits` fractional
//! bits from `[0, N]`, `N = floor(n^(3 + epsilon))`, so the whole experiment
//! runs in exact integer arithmetic. A trial succeeds when rounding every
//! coordinate to the nearest integer (ties toward +infinity) keeps the
//! labeled chirotope.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use super::VerifyError;
use crate::chirotope::{compute_chirotope, LabeledPointSet};
use crate::geom::{Point, Rational};
use crate::rng::SplitMix;

pub const DEFAULT_FRAC_BITS: u32 = 20;

/// Degenerate draws allowed per trial before giving up.
const MAX_REDRAWS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundingParams {
    pub n: usize,
    pub epsilon: Rational,
    pub trials: u64,
    pub seed: u64,
    pub frac_bits: u32,
}

impl RoundingParams {
    pub fn new(n: usize, epsilon: Rational, trials: u64, seed: u64) -> Self {
        RoundingParams { n, epsilon, trials, seed, frac_bits: DEFAULT_FRAC_BITS }
    }

    fn validate(&self) -> Result<(), VerifyError> {
        let bad = |m: &str| Err(VerifyError::InvalidParams(m.to_string()));
        if self.n < 3 {
            return bad("n must be at least 3");
        }
        if self.trials == 0 {
            return bad("trials must be positive");
        }
        if *self.epsilon.numer() < 0 {
            return bad("epsilon must be nonnegative");
        }
        if self.frac_bits > 40 {
            return bad("frac_bits must be at most 40");
        }
        Ok(())
    }
}

/// `floor(n^(3 + epsilon))`, or `None` if it does not fit in 64 bits.
pub fn grid_extent(n: usize, epsilon: Rational) -> Option<u64> {
    let num = epsilon.numer().to_u32()?;
    let den = epsilon.denom().to_u32()?;
    let exponent = 3u32.checked_mul(den)?.checked_add(num)?;
    let power = BigUint::from(n).pow(exponent);
    power.nth_root(den).to_u64()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RoundingOutcome {
    pub preserved: u64,
    pub trials: u64,
    /// `floor(n^(3 + epsilon))`.
    pub extent: u64,
}

impl RoundingOutcome {
    pub fn fraction(&self) -> Rational {
        Rational::new(self.preserved as i128, self.trials as i128)
    }
}

fn round_half_up(v: i64, frac_bits: u32) -> i64 {
    if frac_bits == 0 {
        v
    } else {
        (v + (1 << (frac_bits - 1))) >> frac_bits
    }
}

fn trial(rp: &RoundingParams, max_numerator: u64, index: u64) -> Result<bool, VerifyError> {
    let mut rng = SplitMix::new(rp.seed.wrapping_add(index));
    let modulus = max_numerator + 1;
    for _ in 0..MAX_REDRAWS {
        let pts: Vec<Point> = (0..rp.n)
            .map(|_| {
                let x = rng.next_u64() % modulus;
                let y = rng.next_u64() % modulus;
                Point::new(x as i64, y as i64)
            })
            .collect();
        let Ok(original) = LabeledPointSet::new(pts) else { continue };
        let Ok(chi) = compute_chirotope(&original) else { continue };
        let rounded: Vec<Point> = original
            .points()
            .iter()
            .map(|q| Point::new(round_half_up(q.x, rp.frac_bits), round_half_up(q.y, rp.frac_bits)))
            .collect();
        let same = LabeledPointSet::new(rounded)
            .ok()
            .and_then(|s| compute_chirotope(&s).ok())
            .is_some_and(|c| c == chi);
        return Ok(same);
    }
    Err(VerifyError::InvalidParams(format!("trial {index}: no non-degenerate sample in {MAX_REDRAWS} draws")))
}

/// Fraction of trials whose rounded point set keeps its order type.
pub fn rounding_experiment(rp: &RoundingParams) -> Result<RoundingOutcome, VerifyError> {
    rp.validate()?;
    let extent = grid_extent(rp.n, rp.epsilon)
        .ok_or_else(|| VerifyError::InvalidParams("n^(3+epsilon) does not fit in 64 bits".into()))?;
    let max_numerator = extent
        .checked_mul(1u64 << rp.frac_bits)
        .filter(|&v| v < (1u64 << 62))
        .ok_or_else(|| VerifyError::InvalidParams("fixed-point range exceeds 62 bits".into()))?;
    if max_numerator.is_zero() {
        return Err(VerifyError::InvalidParams("sampling range is a single point".into()));
    }
    let outcomes = (0..rp.trials)
        .into_par_iter()
        .map(|t| trial(rp, max_numerator, t))
        .collect::<Result<Vec<bool>, _>>()?;
    Ok(RoundingOutcome { preserved: outcomes.iter().filter(|&&b| b).count() as u64, trials: rp.trials, extent })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extent_values() {
        assert_eq!(grid_extent(50, Rational::from_integer(1)), Some(6_250_000));
        assert_eq!(grid_extent(10, Rational::from_integer(0)), Some(1000));
        // 4^(7/2) = 128
        assert_eq!(grid_extent(4, Rational::new(1, 2)), Some(128));
        // 10^(3.5) = 3162.27...
        assert_eq!(grid_extent(10, Rational::new(1, 2)), Some(3162));
    }

    #[test]
    fn ties_round_up() {
        assert_eq!(round_half_up(3 << 19, 20), 2); // 1.5
        assert_eq!(round_half_up((1 << 19) - 1, 20), 0);
        assert_eq!(round_half_up(1 << 19, 20), 1); // 0.5
        assert_eq!(round_half_up(7, 0), 7);
    }

    #[test]
    fn deterministic_and_bernoulli() {
        let rp = RoundingParams::new(12, Rational::from_integer(0), 20, 5);
        let a = rounding_experiment(&rp).unwrap();
        assert_eq!(a, rounding_experiment(&rp).unwrap());
        let one = RoundingParams { trials: 1, ..rp };
        let r = rounding_experiment(&one).unwrap();
        assert!(r.preserved <= 1 && r.trials == 1);
    }

    #[test]
    fn invalid_params() {
        let mut rp = RoundingParams::new(2, Rational::from_integer(1), 10, 1);
        assert!(rounding_experiment(&rp).is_err());
        rp.n = 10;
        rp.trials = 0;
        assert!(rounding_experiment(&rp).is_err());
        rp.trials = 1;
        rp.epsilon = Rational::new(-1, 2);
        assert!(rounding_experiment(&rp).is_err());
    }
}
