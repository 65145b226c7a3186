//! Atom computation: closed forms where a family's atom set is known,
//! the increasing-filter route elsewhere, and a brute-force oracle for
//! cross-checking on finite lists.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::descriptors::{MonoidDescriptor, Truncation};
use crate::exactnum::{lcm_denominators, Rat};
use crate::numsgp::NumericalSemigroup;
use crate::{Error, Result};

use super::{member, AtomReport, Budget, Exactness, MembershipVerdict};

/// Hard cap for the brute-force oracle; twelve inputs are the documented
/// comfort zone.
const BRUTE_FORCE_CAP: usize = 16;

/// Node budget for the prefix searches backing the increasing filter.
const FILTER_BUDGET: u64 = 10_000_000;

pub(super) fn compute(d: &MonoidDescriptor, trunc: Truncation) -> Result<AtomReport> {
    let report = match d {
        MonoidDescriptor::Finite { generators } => AtomReport {
            atoms: finite_filter_atoms(generators)?,
            exactness: Exactness::ExactByIncreasingFilter,
            antimatter_flag: false,
        },
        MonoidDescriptor::Geometric { ratio } => {
            let (a, b) = (ratio.numer(), ratio.denom());
            if b.is_one() {
                // Integer ratio: every later power is a multiple of the
                // first, which is therefore the only atom.
                AtomReport {
                    atoms: vec![ratio.clone()],
                    exactness: closed(THM_GEOMETRIC),
                    antimatter_flag: false,
                }
            } else if a.is_one() {
                AtomReport {
                    atoms: Vec::new(),
                    exactness: closed(THM_GEOMETRIC),
                    antimatter_flag: true,
                }
            } else {
                AtomReport {
                    atoms: d.generators_up_to(trunc)?,
                    exactness: closed(THM_GEOMETRIC),
                    antimatter_flag: false,
                }
            }
        }
        MonoidDescriptor::Primary { .. } => AtomReport {
            atoms: d.generators_up_to(trunc)?,
            exactness: closed(TAG_ORACLE_BACKED),
            antimatter_flag: false,
        },
        MonoidDescriptor::PsumsPrimary { .. } => increasing_filter(d, trunc)?,
        MonoidDescriptor::ExampleAb => AtomReport {
            atoms: d.generators_up_to(trunc)?,
            exactness: closed(TAG_EXAMPLE_AB),
            antimatter_flag: false,
        },
        MonoidDescriptor::PrimeFractions { .. } => AtomReport {
            atoms: d.generators_up_to(trunc)?,
            exactness: closed(TAG_PRIME_FRACTIONS),
            antimatter_flag: false,
        },
        MonoidDescriptor::GeoPsums { ratio } => {
            if *ratio == Rat::make(1, 2)? {
                AtomReport {
                    atoms: d.generators_up_to(trunc)?,
                    exactness: closed(TAG_GEO_PSUMS_HALF),
                    antimatter_flag: false,
                }
            } else {
                increasing_filter(d, trunc)?
            }
        }
        MonoidDescriptor::UnboundedGeo { .. } => AtomReport {
            atoms: d.generators_up_to(trunc)?,
            exactness: closed(TAG_UNBOUNDED_GEO),
            antimatter_flag: false,
        },
    };
    Ok(report)
}

const THM_GEOMETRIC: &str = "Thm 6.2";
const TAG_ORACLE_BACKED: &str = "oracle-backed";
const TAG_EXAMPLE_AB: &str = "Ex 3.2";
const TAG_PRIME_FRACTIONS: &str = "Ex 2.1";
const TAG_GEO_PSUMS_HALF: &str = "Ex 6.4";
const TAG_UNBOUNDED_GEO: &str = "Prop 6.5";

fn closed(tag: &str) -> Exactness {
    Exactness::ClosedForm { tag: tag.to_string() }
}

/// Keep generator n exactly when it is outside the monoid generated by
/// its predecessors. Exact for increasing families, where atoms are
/// precisely the generators surviving this filter.
fn increasing_filter(d: &MonoidDescriptor, trunc: Truncation) -> Result<AtomReport> {
    let gens = d.generators_up_to(trunc)?;
    let mut atoms = Vec::new();
    for (i, gen) in gens.iter().enumerate() {
        if i == 0 {
            // A positive element is never in the trivial monoid.
            atoms.push(gen.clone());
            continue;
        }
        match member::decide_prefix(d, gen, i, Budget::new(FILTER_BUDGET))? {
            MembershipVerdict::In { .. } => {}
            MembershipVerdict::NotIn { .. } => atoms.push(gen.clone()),
            MembershipVerdict::UnknownAtDepth { .. } => {
                return Err(Error::Resource("atom filter exceeded its search budget".into()))
            }
        }
    }
    Ok(AtomReport {
        atoms,
        exactness: Exactness::ExactByIncreasingFilter,
        antimatter_flag: false,
    })
}

/// Atoms of the monoid generated by a finite rational list: the sorted
/// prefix filter at a single common scale. Equivalent to testing each
/// element against all others, since larger elements never appear in a
/// representation of a smaller one.
fn finite_filter_atoms(generators: &[Rat]) -> Result<Vec<Rat>> {
    let mut gens = generators.to_vec();
    gens.sort();
    gens.dedup();
    let scale = lcm_denominators(&gens)?;
    let values = scaled_values(&gens, &scale)?;
    let mut atoms = Vec::new();
    let mut kept: Vec<u64> = Vec::new();
    for (gen, value) in gens.iter().zip(&values) {
        // The kept prefix generates the same monoid as the full prefix.
        let representable = !kept.is_empty()
            && NumericalSemigroup::from_integers(&kept)?
                .contains_big(&BigUint::from(*value))?
                .is_some();
        if !representable {
            atoms.push(gen.clone());
            kept.push(*value);
        }
    }
    Ok(atoms)
}

fn scaled_values(gens: &[Rat], scale: &BigUint) -> Result<Vec<u64>> {
    gens.iter()
        .map(|g| {
            let v = g.times_integer_exact(scale).expect("lcm clears denominators");
            v.to_u64()
                .ok_or_else(|| Error::Resource(format!("scaled generator {v} exceeds machine range")))
        })
        .collect()
}

/// Oracle: the elements of R not representable as nonnegative integer
/// combinations of the others, decided by the scaled integer table.
/// Duplicates are collapsed first and the result is sorted ascending.
pub fn brute_force_atoms(rs: &[Rat]) -> Result<Vec<Rat>> {
    if rs.len() > BRUTE_FORCE_CAP {
        return Err(Error::Resource(format!(
            "brute force supports at most {BRUTE_FORCE_CAP} elements, got {}",
            rs.len()
        )));
    }
    if rs.iter().any(|r| r.is_zero()) {
        return Err(Error::InvalidArgument("brute force requires positive elements".into()));
    }
    let mut gens = rs.to_vec();
    gens.sort();
    gens.dedup();
    if gens.len() == 1 {
        return Ok(gens);
    }
    let scale = lcm_denominators(&gens)?;
    let values = scaled_values(&gens, &scale)?;
    let mut atoms = Vec::new();
    for (i, gen) in gens.iter().enumerate() {
        let others: Vec<u64> = values
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, v)| *v)
            .collect();
        let ns = NumericalSemigroup::from_integers(&others)?;
        if ns.contains_big(&BigUint::from(values[i]))?.is_none() {
            atoms.push(gen.clone());
        }
    }
    Ok(atoms)
}
