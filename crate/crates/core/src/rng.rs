//! Deterministic randomness for sampling and model generation.
//!
//! All draws come from a single splitmix64 stream. Derived quantities use
//! fixed formulas so that another implementation seeded identically draws
//! the same values:
//!
//! * `unit()` is `(next_u64() >> 11) * 2^-53`, uniform in `[0, 1)`;
//! * `below(n)` is `next_u64() % n`.

use rand_xoshiro::rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

#[derive(Debug, Clone)]
pub struct Stream(SplitMix64);

impl Stream {
    pub fn new(seed: u64) -> Self {
        Stream(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// `true` with probability `p`.
    pub fn chance(&mut self, p: f64) -> bool {
        self.unit() < p
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}
