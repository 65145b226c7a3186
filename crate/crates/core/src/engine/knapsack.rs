//! Forced-residue search over generator families whose n-th generator is
//! an integer numerator over a product of per-level moduli.
//!
//! Writing a target as sum of c_i * (T_i / (m_1 ... m_i)) and scaling by
//! the full modulus product forces c_i modulo m_i level by level, so the
//! search branches only over how many extra full residue steps each level
//! takes. Failures are memoized per (level, remaining) state.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::exactnum::Rat;
use crate::{Error, Result};

/// One generator level: the generator equals `numer` divided by the
/// product of the moduli of this and all earlier levels. `numer` must be
/// coprime to `modulus`, and `modulus` at least 2.
pub struct Level {
    pub modulus: u64,
    pub numer: BigUint,
}

/// Search result over a fixed level window.
pub enum Search {
    /// A representation: 1-based level index to positive multiplicity.
    Found(BTreeMap<usize, u64>),
    /// No representation exists using these levels.
    Exhausted,
    /// The node budget ran out before the window was decided.
    OutOfBudget,
}

/// Multiplicative inverse of a modulo m, for coprime a and m >= 2.
pub(super) fn inverse_mod(a: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "inverse requires coprime arguments");
    old_s.rem_euclid(m as i128) as u64
}

struct Dfs<'a> {
    levels: &'a [Level],
    excluded: &'a [usize],
    budget: u64,
    failed: HashSet<(usize, BigUint)>,
}

enum Step {
    Found(BTreeMap<usize, u64>),
    Dead,
    Broke,
}

impl Dfs<'_> {
    /// Decides the remaining target scaled by the modulus product of the
    /// first `level` levels.
    fn run(&mut self, remaining: &BigUint, level: usize) -> Step {
        if remaining.is_zero() {
            return Step::Found(BTreeMap::new());
        }
        if level == 0 {
            return Step::Dead;
        }
        if self.budget == 0 {
            return Step::Broke;
        }
        self.budget -= 1;
        let key = (level, remaining.clone());
        if self.failed.contains(&key) {
            return Step::Dead;
        }
        let Level { modulus, numer } = &self.levels[level - 1];
        let m = *modulus;
        let m_big = BigUint::from(m);
        let step = if self.excluded.contains(&level) {
            // The level is barred, so its count is zero and the remaining
            // mass must be divisible one modulus step down.
            let (q, r) = remaining.div_rem(&m_big);
            if r.is_zero() {
                self.run(&q, level - 1)
            } else {
                Step::Dead
            }
        } else {
            let s = (numer % &m_big).to_u64().expect("residue fits u64");
            let x_mod = (remaining % &m_big).to_u64().expect("residue fits u64");
            let forced = (x_mod as u128 * inverse_mod(s, m) as u128 % m as u128) as u64;
            let mut count = BigUint::from(forced);
            let mut outcome = Step::Dead;
            // Smallest count first leaves the most mass for lower levels,
            // so the first hit prefers small indices.
            while &count * numer <= *remaining {
                let after = (remaining - &count * numer) / &m_big;
                match self.run(&after, level - 1) {
                    Step::Found(mut rep) => {
                        if let Some(c) = count.to_u64() {
                            if c > 0 {
                                rep.insert(level, c);
                            }
                            outcome = Step::Found(rep);
                        } else {
                            outcome = Step::Broke;
                        }
                        break;
                    }
                    Step::Broke => {
                        outcome = Step::Broke;
                        break;
                    }
                    Step::Dead => {}
                }
                count += &m_big;
            }
            outcome
        };
        if matches!(step, Step::Dead) {
            self.failed.insert(key);
        }
        step
    }
}

/// Searches for a representation of `target` over the level window, with
/// the listed level indices barred from use. The target must factor over
/// the window's moduli: a target whose scaled form is not an integer has
/// no representation in the window and is reported exhausted.
pub fn forced_residue_search(
    levels: &[Level],
    target: &Rat,
    excluded: &[usize],
    budget: u64,
) -> Result<Search> {
    for (i, level) in levels.iter().enumerate() {
        if level.modulus < 2 {
            return Err(Error::InvalidArgument(format!(
                "search level {} has modulus {}, need at least 2",
                i + 1,
                level.modulus
            )));
        }
        debug_assert_eq!(
            (&level.numer % level.modulus).gcd(&BigUint::from(level.modulus)),
            BigUint::from(1u32),
            "level numerator must be coprime to its modulus"
        );
    }
    let mut scale = BigUint::from(1u32);
    for level in levels {
        scale *= level.modulus;
    }
    let Some(scaled) = target.times_integer_exact(&scale) else {
        return Ok(Search::Exhausted);
    };
    let mut dfs = Dfs { levels, excluded, budget, failed: HashSet::new() };
    Ok(match dfs.run(&scaled, levels.len()) {
        Step::Found(rep) => Search::Found(rep),
        Step::Dead => Search::Exhausted,
        Step::Broke => Search::OutOfBudget,
    })
}
