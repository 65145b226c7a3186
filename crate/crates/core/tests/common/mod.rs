//! Shared helpers for the integration suites: membership oracles that
//! search representations directly over exact rationals, independent of
//! the library's decision procedures, and seeded randomness.

use std::collections::HashMap;

use puiseux_core::exactnum::{lcm_denominators, Rat};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Decides by memoized exhaustive search whether `x` is a finite sum of
/// generators (with repetition). Exact: terminates because every step
/// removes at least the smallest generator. Intended for small
/// denominators; independent of the engine.
pub fn rational_member(gens: &[Rat], x: &Rat) -> bool {
    let sorted = prepared(gens);
    let mut memo = HashMap::new();
    search_exact(&sorted, x.clone(), 0, &mut memo)
}

fn prepared(gens: &[Rat]) -> Vec<Rat> {
    let mut sorted: Vec<Rat> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    sorted.sort();
    sorted.dedup();
    sorted
}

fn search_exact(
    gens: &[Rat],
    remainder: Rat,
    start: usize,
    memo: &mut HashMap<(Rat, usize), bool>,
) -> bool {
    if remainder.is_zero() {
        return true;
    }
    if start >= gens.len() {
        return false;
    }
    let key = (remainder.clone(), start);
    if let Some(&hit) = memo.get(&key) {
        return hit;
    }
    let mut found = false;
    for i in start..gens.len() {
        if gens[i] > remainder {
            break;
        }
        let next = remainder.checked_sub(&gens[i]).expect("generator fits in remainder");
        if search_exact(gens, next, i, memo) {
            found = true;
            break;
        }
    }
    memo.insert(key, found);
    found
}

/// Searches for a representation of `x` using at most `max_terms`
/// generators from the window. Returns false immediately when the
/// window's common denominator cannot clear `x`, since no sum from the
/// window reaches such a value.
pub fn window_member(gens: &[Rat], x: &Rat, max_terms: u64) -> bool {
    let sorted = prepared(gens);
    if sorted.is_empty() {
        return x.is_zero();
    }
    let scale = lcm_denominators(&sorted).expect("nonempty window");
    if x.times_integer_exact(&scale).is_none() {
        return false;
    }
    let largest = sorted.last().expect("nonempty").clone();
    search_bounded(&sorted, &largest, x.clone(), 0, max_terms)
}

fn search_bounded(
    gens: &[Rat],
    largest: &Rat,
    remainder: Rat,
    start: usize,
    terms_left: u64,
) -> bool {
    if remainder.is_zero() {
        return true;
    }
    if terms_left == 0 || remainder > largest.scale(&terms_left.into()) {
        return false;
    }
    for i in start..gens.len() {
        if gens[i] > remainder {
            break;
        }
        let next = remainder.checked_sub(&gens[i]).expect("generator fits in remainder");
        if search_bounded(gens, largest, next, i, terms_left - 1) {
            return true;
        }
    }
    false
}

/// Deterministic RNG for seeded test corpora.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniform positive rational with bounded parts, in lowest terms.
pub fn random_rat(rng: &mut ChaCha8Rng, max_num: u64, max_den: u64) -> Rat {
    let num = rng.gen_range(1..=max_num);
    let den = rng.gen_range(1..=max_den);
    Rat::new(num, den).expect("positive denominator")
}
