use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

/// SplitMix64 (golden-gamma increment `0x9e3779b97f4a7c15`, finalizer
/// multipliers `0xbf58476d1ce4e5b9` and `0x94d049bb133111eb`), seeded with
/// the raw 64-bit state.
///
/// Bounded draws use the multiply-high reduction `(x * bound) >> 64`
/// without rejection, so fixtures are reproducible from the algorithm
/// description alone.
pub struct FixtureRng(SplitMix64);

impl FixtureRng {
    pub fn new(seed: u64) -> Self {
        FixtureRng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform-ish draw from `0..bound`; `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }

    /// Draw from `lo..=hi`.
    pub fn inclusive(&mut self, lo: u64, hi: u64) -> u64 {
        lo + self.below(hi - lo + 1)
    }
}
