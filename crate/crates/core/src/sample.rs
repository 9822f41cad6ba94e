//! Seeded generators of rational sample points.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{frac, Rational};

const DENOMINATORS: [i64; 7] = [7, 11, 13, 17, 19, 23, 29];

/// Deterministic stream of distinct non-integral rationals.
///
/// Denominators are primes above the small integers that appear as shifts,
/// so points stay clear of the shifted-integer pole sets of the families
/// studied here.
pub struct SamplePoints {
    rng: ChaCha8Rng,
    seen: HashSet<Rational>,
}

impl SamplePoints {
    pub fn new(seed: u64) -> Self {
        SamplePoints { rng: ChaCha8Rng::seed_from_u64(seed), seen: HashSet::new() }
    }

    pub fn next_point(&mut self) -> Rational {
        loop {
            let q = DENOMINATORS[self.rng.gen_range(0..DENOMINATORS.len())];
            let p = self.rng.gen_range(-8 * q..=8 * q);
            let r = frac(p, q);
            if !r.is_integer() && self.seen.insert(r.clone()) {
                return r;
            }
        }
    }

    pub fn take(&mut self, k: usize) -> Vec<Rational> {
        (0..k).map(|_| self.next_point()).collect()
    }
}
