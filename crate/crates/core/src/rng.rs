//! Seeded SplitMix64 stream.
//!
//! Every random choice in the crate goes through this stream so that a seed
//! reproduces the same output on any platform and in any implementation of
//! the same generator.

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

#[derive(Debug, Clone)]
pub struct SplitMix(SplitMix64);

impl SplitMix {
    /// The seed is the generator's initial state.
    pub fn new(seed: u64) -> Self {
        SplitMix(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }
}
