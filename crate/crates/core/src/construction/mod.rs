//! The polynomial-grid construction.
//!
//! Four stretched copies of the mod-`p` parabola `Q_p` form a frame around
//! a central square. Lines between opposite copies cut the square into
//! `(p^2 - p)^2` almost-square regions, and every choice of regions for the
//! remaining `n - 4p` points yields a different order type.

mod frame;
mod params;
mod placement;
mod region;

use thiserror::Error;

use crate::chirotope::DegeneracyWitness;
use crate::geom::GeomError;

pub use frame::{build_frame, Frame, Side};
pub use params::{
    alive_lower_bound, build_qp, derive_params, find_prime, floor_log2, is_prime, ConstructionParams, MAX_N, MIN_N,
};
pub use placement::{find_alive_point, is_killed, Construction, PlacementState, PlacementVector, MAX_RESAMPLES};
pub use region::{
    all_keys, iterate_region_points, locate, region_from_key, region_grid_count, HalfPlane, Region, RegionKey,
};

pub(crate) use frame::build_frame_unchecked;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("n = {0} is below the supported minimum of 32")]
    NTooSmall(u64),
    #[error("n = {0} is above the supported maximum of 1024")]
    NTooLarge(u64),
    #[error("no prime in the window for n = {0}")]
    NoPrimeInRange(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("bound violated: {0}")]
    BoundViolation(String),
    #[error("frame points {0} are collinear")]
    FrameDegenerate(DegeneracyWitness),
    #[error("region {key} is dead at placement step {step}")]
    RegionDead { step: usize, key: RegionKey },
    #[error("no alive region found after {max} draws at step {step}", max = MAX_RESAMPLES)]
    ExhaustedResampling { step: usize },
    #[error("placement has {got} entries, expected {expected}")]
    PlacementLength { expected: usize, got: usize },
    #[error("region key {0} is out of range")]
    KeyOutOfRange(RegionKey),
    #[error(transparent)]
    Geometry(#[from] GeomError),
}
