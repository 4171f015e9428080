//! Seeded inputs shared by the criterion benches.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thompson_core::sample::random_element;
use thompson_core::NormalForm;

pub const SEED: u64 = 0x5eed;

/// `count` pseudo-random elements from words of length up to `max_len` with
/// generator indices up to 8.
pub fn elements(count: usize, max_len: usize) -> Vec<NormalForm> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..count).map(|_| random_element(&mut rng, max_len, 8)).collect()
}
