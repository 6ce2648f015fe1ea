//! Seed handling. Every randomized routine takes an explicit seed; trials
//! derive independent ChaCha streams from `(master seed, trial index)` so
//! results do not depend on execution order.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream `index` under `master`.
pub fn trial_rng(master: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    rng.set_stream(index);
    rng
}

/// Derives a child seed for a routine that takes a plain `u64` seed.
pub fn trial_seed(master: u64, index: u64) -> u64 {
    use rand::RngCore;
    trial_rng(master, index).next_u64()
}
