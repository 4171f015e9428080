//! Seeded random words, elements and subsets for the randomized checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::folner::ElementSet;
use crate::words::{reduce_to_normal_form, Letter, NormalForm, Sign, Word};

/// A word of length `0..=max_len` with indices in `0..=max_index`.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, max_len: usize, max_index: u32) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let sign = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
            Letter::new(rng.gen_range(0..=max_index), sign)
        })
        .collect()
}

/// A word over `x0^(+-1), x1^(+-1)` only.
pub fn random_standard_word<R: Rng + ?Sized>(rng: &mut R, max_len: usize) -> Word {
    random_word(rng, max_len, 1)
}

pub fn random_element<R: Rng + ?Sized>(rng: &mut R, max_len: usize, max_index: u32) -> NormalForm {
    reduce_to_normal_form(&random_word(rng, max_len, max_index))
}

/// A uniformly sized random subset of `s` with between `min` and `max`
/// members (clamped to `|s|`).
pub fn random_subset<R: Rng + ?Sized>(rng: &mut R, s: &ElementSet, min: usize, max: usize) -> ElementSet {
    let members: Vec<&NormalForm> = s.iter().collect();
    let max = max.min(members.len());
    let min = min.min(max);
    let size = rng.gen_range(min..=max);
    members.choose_multiple(rng, size).map(|&g| g.clone()).collect()
}
