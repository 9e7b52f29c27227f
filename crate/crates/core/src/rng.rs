//! Seeded randomness for the searches that need it.
//!
//! Every randomized routine certifies its answer, so the seed only affects
//! running time, never results.

use std::sync::atomic::{AtomicU64, Ordering};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0x7461_7562;

static SEED: AtomicU64 = AtomicU64::new(DEFAULT_SEED);

pub fn set_seed(seed: u64) {
    SEED.store(seed, Ordering::Relaxed);
}

pub fn seed() -> u64 {
    SEED.load(Ordering::Relaxed)
}

/// A generator for one search; `salt` separates independent searches.
pub fn generator(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed() ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}
