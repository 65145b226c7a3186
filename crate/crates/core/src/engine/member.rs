//! Per-family membership decision procedures.
//!
//! Sound negative filters (denominator and valuation obstructions) run
//! first; exact closed forms decide the primary-style families; leveled
//! forced-residue search decides the geometric-style families, exactly
//! whenever the usable generator window is finite.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::descriptors::{MonoidDescriptor, Truncation};
use crate::exactnum::{factor_biguint, padic_val, PrimeStream, Rat, StreamKind};
use crate::numsgp::NumericalSemigroup;
use crate::{Error, Result};

use super::knapsack::{forced_residue_search, inverse_mod, Level, Search};
use super::{Budget, MembershipVerdict, NotInReason};

/// Window ceiling when enlarging an increasing family to cover a target.
const WINDOW_CAP: usize = 256;

/// Window ceiling for partial-sums families, whose generators grow only
/// like the log of the prime bound.
const PSUMS_WINDOW_CAP: usize = 64;

fn to_u64(v: &BigUint, what: &str) -> Result<u64> {
    v.to_u64()
        .ok_or_else(|| Error::Resource(format!("{what} {v} exceeds machine range")))
}

pub(super) fn decide(
    d: &MonoidDescriptor,
    x: &Rat,
    trunc: Truncation,
    budget: Budget,
) -> Result<MembershipVerdict> {
    decide_excluding(d, x, &[], trunc, budget)
}

/// Membership with some generator indices barred from use. An empty
/// exclusion list is ordinary membership. Exclusions make BelowMinimum
/// unsound, so that filter only runs unexcluded.
pub(super) fn decide_excluding(
    d: &MonoidDescriptor,
    x: &Rat,
    excluded: &[usize],
    trunc: Truncation,
    budget: Budget,
) -> Result<MembershipVerdict> {
    if x.is_zero() {
        return Ok(MembershipVerdict::found(BTreeMap::new()));
    }
    match d {
        MonoidDescriptor::Finite { generators } => finite_list(generators, x, excluded),
        MonoidDescriptor::Geometric { ratio } => geometric(ratio, x, excluded, trunc, budget),
        MonoidDescriptor::Primary { primes } => {
            require_unexcluded(excluded)?;
            primary(primes, x)
        }
        MonoidDescriptor::PsumsPrimary { primes } => {
            psums_primary(d, primes, x, excluded, budget)
        }
        MonoidDescriptor::ExampleAb => {
            require_unexcluded(excluded)?;
            example_ab(x)
        }
        MonoidDescriptor::PrimeFractions { power } => {
            require_unexcluded(excluded)?;
            prime_fractions(*power, x)
        }
        MonoidDescriptor::GeoPsums { ratio } => geo_psums(d, ratio, x, excluded, trunc, budget),
        MonoidDescriptor::UnboundedGeo { ratio } => {
            unbounded_geo(d, ratio, x, excluded, budget)
        }
    }
}

/// Membership in the submonoid generated by the first `depth` generators
/// only. Exact for every family (the submonoid is finitely generated);
/// UnknownAtDepth arises only from budget exhaustion.
pub(super) fn decide_prefix(
    d: &MonoidDescriptor,
    x: &Rat,
    depth: usize,
    budget: Budget,
) -> Result<MembershipVerdict> {
    if x.is_zero() {
        return Ok(MembershipVerdict::found(BTreeMap::new()));
    }
    if let Some(levels) = build_levels(d, depth)? {
        return Ok(match forced_residue_search(&levels, x, &[], budget.nodes())? {
            Search::Found(rep) => MembershipVerdict::found(rep),
            Search::Exhausted => MembershipVerdict::not_in(NotInReason::ExhaustiveRefutation),
            Search::OutOfBudget => MembershipVerdict::UnknownAtDepth { depth },
        });
    }
    let gens = d.generators_up_to(Truncation::new(depth)?)?;
    finite_list(&gens, x, &[])
}

fn require_unexcluded(excluded: &[usize]) -> Result<()> {
    if excluded.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(
            "generator exclusion is not supported for closed-form families".into(),
        ))
    }
}

/// The per-level moduli of a leveled family window, or None when the
/// family is not leveled (integer ratios, closed-form families).
fn family_moduli(d: &MonoidDescriptor, k: usize) -> Result<Option<Vec<u64>>> {
    match d {
        MonoidDescriptor::Geometric { ratio }
        | MonoidDescriptor::GeoPsums { ratio }
        | MonoidDescriptor::UnboundedGeo { ratio } => {
            if ratio.denom().is_one() {
                return Ok(None);
            }
            let b = to_u64(ratio.denom(), "ratio denominator")?;
            Ok(Some(vec![b; k]))
        }
        MonoidDescriptor::PsumsPrimary { primes } => Ok(Some(primes.take(k)?)),
        _ => Ok(None),
    }
}

/// Levels for the first k generators of a leveled family: generator i
/// equals numer_i over the product of the first i moduli.
fn build_levels(d: &MonoidDescriptor, k: usize) -> Result<Option<Vec<Level>>> {
    let Some(moduli) = family_moduli(d, k)? else {
        return Ok(None);
    };
    let gens = d.generators_up_to(Truncation::new(k)?)?;
    let mut scale = BigUint::one();
    let mut levels = Vec::with_capacity(k);
    for (gen, &modulus) in gens.iter().zip(&moduli) {
        scale *= modulus;
        let numer = gen
            .times_integer_exact(&scale)
            .expect("level scale clears the generator denominator");
        levels.push(Level { modulus, numer });
    }
    Ok(Some(levels))
}

/// Smallest window k with generator k+1 exceeding x, so that any
/// representation of x uses only the first k generators. Returns
/// (k, true) when found below the cap, (cap, false) otherwise.
fn increasing_window(d: &MonoidDescriptor, x: &Rat, cap: usize) -> Result<(usize, bool)> {
    let gens = d.generators_up_to(Truncation::new(cap + 1)?)?;
    for (i, gen) in gens.iter().enumerate() {
        if gen > x {
            return Ok((i, true));
        }
    }
    Ok((cap, false))
}

fn leveled_search(
    d: &MonoidDescriptor,
    x: &Rat,
    k: usize,
    excluded: &[usize],
    budget: Budget,
) -> Result<Search> {
    let levels = build_levels(d, k)?.expect("caller checked the family is leveled");
    forced_residue_search(&levels, x, excluded, budget.nodes())
}

/// Exact membership for an explicit finite generator list, via the lcm
/// scaling to a numerical semigroup. Excluded indices are dropped from
/// the list but keep their index labels in the representation.
fn finite_list(gens: &[Rat], x: &Rat, excluded: &[usize]) -> Result<MembershipVerdict> {
    let usable: Vec<(usize, &Rat)> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| (i + 1, g))
        .filter(|(i, _)| !excluded.contains(i))
        .collect();
    if usable.is_empty() {
        return Ok(MembershipVerdict::not_in(NotInReason::ExhaustiveRefutation));
    }
    let values: Vec<Rat> = usable.iter().map(|(_, g)| (*g).clone()).collect();
    let ns = NumericalSemigroup::from_rationals(&values)?;
    let scale = ns.scale().expect("built from rationals").clone();
    let Some(target) = x.times_integer_exact(&scale) else {
        return Ok(MembershipVerdict::not_in(NotInReason::DenominatorObstruction));
    };
    if excluded.is_empty() {
        let min = values.iter().min().expect("nonempty");
        if x < min {
            return Ok(MembershipVerdict::not_in(NotInReason::BelowMinimum));
        }
    }
    let Some(rep) = ns.contains_big(&target)? else {
        return Ok(MembershipVerdict::not_in(NotInReason::ExhaustiveRefutation));
    };
    // Scaled generator values map back to the first input index holding
    // that value; duplicates collapse to the earliest index.
    let mut value_to_index: BTreeMap<BigUint, usize> = BTreeMap::new();
    for (index, gen) in &usable {
        let v = gen.times_integer_exact(&scale).expect("scale clears denominators");
        value_to_index.entry(v).or_insert(*index);
    }
    let mut representation = BTreeMap::new();
    for (value, mult) in rep {
        let index = value_to_index[&BigUint::from(value)];
        *representation.entry(index).or_insert(0) += mult;
    }
    Ok(MembershipVerdict::found(representation))
}

/// True when every prime of d(x) divides b.
fn denominator_divides(x: &Rat, b: &BigUint) -> Result<bool> {
    for p in factor_biguint(x.denom())?.keys() {
        if !(b % *p).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// First prime p of a with padic_val(p, x) < 1, if any. Sound obstruction
/// for families whose every generator has v_p at least 1 for p dividing
/// the ratio numerator.
fn valuation_obstruction(x: &Rat, a: &BigUint) -> Result<Option<u64>> {
    for p in factor_biguint(a)?.keys() {
        if padic_val(*p, x)? < 1 {
            return Ok(Some(*p));
        }
    }
    Ok(None)
}

fn geometric(
    ratio: &Rat,
    x: &Rat,
    excluded: &[usize],
    trunc: Truncation,
    budget: Budget,
) -> Result<MembershipVerdict> {
    let (a, b) = (ratio.numer(), ratio.denom());
    if b.is_one() {
        // Integer ratio: the monoid is the multiples of a.
        if !x.is_integer() {
            return Ok(MembershipVerdict::not_in(NotInReason::DenominatorObstruction));
        }
        if !excluded.is_empty() {
            if a.is_one() {
                // Ratio one collapses to the single generator 1.
                return finite_list(&[Rat::one()], x, excluded);
            }
            // Exclusions need the generators spelled out; the increasing
            // window keeps the list finite and the decision exact.
            let d = MonoidDescriptor::Geometric { ratio: ratio.clone() };
            let (k, exact) = increasing_window(&d, x, WINDOW_CAP)?;
            if k == 0 {
                return Ok(MembershipVerdict::not_in(NotInReason::BelowMinimum));
            }
            assert!(exact, "integer powers outgrow any bounded target");
            let gens = d.generators_up_to(Truncation::new(k)?)?;
            return finite_list(&gens, x, excluded);
        }
        if x < ratio {
            return Ok(MembershipVerdict::not_in(NotInReason::BelowMinimum));
        }
        for (p, e) in factor_biguint(a)? {
            if padic_val(p, x)? < e as i64 {
                return Ok(MembershipVerdict::not_in(NotInReason::ValuationObstruction {
                    prime: p,
                }));
            }
        }
        let mult = to_u64(&(x.numer() / a), "multiplicity")?;
        return Ok(MembershipVerdict::found(BTreeMap::from([(1, mult)])));
    }
    if !denominator_divides(x, b)? {
        return Ok(MembershipVerdict::not_in(NotInReason::DenominatorObstruction));
    }
    if a.is_one() {
        if !excluded.is_empty() {
            // With generators barred the closed form no longer applies;
            // search the truncation window. Refutation cannot be exact
            // here, since ever smaller generators remain outside it.
            let d = MonoidDescriptor::Geometric { ratio: ratio.clone() };
            let depth = trunc.depth();
            return Ok(match leveled_search(&d, x, depth, excluded, budget)? {
                Search::Found(rep) => MembershipVerdict::found(rep),
                Search::Exhausted | Search::OutOfBudget => {
                    MembershipVerdict::UnknownAtDepth { depth }
                }
            });
        }
        // Antimatter case: x is a multiple of 1/b^k for the least k
        // clearing the denominator of x.
        let vb = factor_biguint(b)?;
        let mut k = 1usize;
        for (p, e_num) in factor_biguint(x.denom())? {
            let e_den = *vb.get(&p).expect("denominator filter passed") as usize;
            k = k.max((e_num as usize).div_ceil(e_den));
        }
        let mut bk = BigUint::one();
        for _ in 0..k {
            bk *= b;
        }
        let mult = x.times_integer_exact(&bk).expect("b^k clears the denominator");
        let mult = to_u64(&mult, "multiplicity")?;
        return Ok(MembershipVerdict::found(BTreeMap::from([(k, mult)])));
    }
    if let Some(prime) = valuation_obstruction(x, a)? {
        return Ok(MembershipVerdict::not_in(NotInReason::ValuationObstruction { prime }));
    }
    let d = MonoidDescriptor::Geometric { ratio: ratio.clone() };
    if a > b {
        if excluded.is_empty() && x < ratio {
            return Ok(MembershipVerdict::not_in(NotInReason::BelowMinimum));
        }
        return increasing_leveled(&d, x, excluded, WINDOW_CAP, budget);
    }
    // Decreasing ratio with both parts above 1: positives are exact, but
    // no full-monoid refutation by search depth is known.
    let depth = trunc.depth();
    Ok(match leveled_search(&d, x, depth, excluded, budget)? {
        Search::Found(rep) => MembershipVerdict::found(rep),
        Search::Exhausted | Search::OutOfBudget => MembershipVerdict::UnknownAtDepth { depth },
    })
}

/// Search an increasing leveled family over the window of generators not
/// exceeding x; the window makes refutation exact for the full monoid.
fn increasing_leveled(
    d: &MonoidDescriptor,
    x: &Rat,
    excluded: &[usize],
    cap: usize,
    budget: Budget,
) -> Result<MembershipVerdict> {
    let (k, exact) = increasing_window(d, x, cap)?;
    if k == 0 {
        return Ok(MembershipVerdict::not_in(NotInReason::BelowMinimum));
    }
    Ok(match leveled_search(d, x, k, excluded, budget)? {
        Search::Found(rep) => MembershipVerdict::found(rep),
        Search::Exhausted if exact => {
            MembershipVerdict::not_in(NotInReason::ExhaustiveRefutation)
        }
        Search::Exhausted | Search::OutOfBudget => MembershipVerdict::UnknownAtDepth { depth: k },
    })
}

/// Exact closed form for primary monoids: the denominator must be a
/// squarefree product of stream primes, and x must reach the sum of the
/// forced residues rho_q / q; the surplus is then an integer handled by
/// bulk copies of the smallest available reciprocal.
fn primary(primes: &PrimeStream, x: &Rat) -> Result<MembershipVerdict> {
    if primes.cardinality()? == Some(0) {
        return Ok(MembershipVerdict::not_in(NotInReason::ExhaustiveRefutation));
    }
    let den_factors = factor_biguint(x.denom())?;
    for (&p, &e) in &den_factors {
        if e > 1 || !primes.contains(p) {
            return Ok(MembershipVerdict::not_in(NotInReason::DenominatorObstruction));
        }
    }
    let mut representation: BTreeMap<usize, u64> = BTreeMap::new();
    if x.is_integer() {
        let q = primes.take(1)?[0];
        let mult = to_u64(&(x.numer() * q), "multiplicity")?;
        representation.insert(1, mult);
        return Ok(MembershipVerdict::found(representation));
    }
    let d = x.denom();
    let mut floor = Rat::zero();
    let mut residues: Vec<(u64, u64)> = Vec::new();
    for &q in den_factors.keys() {
        let cofactor = to_u64(&((d / q) % q), "residue")?;
        let n_mod = to_u64(&(x.numer() % q), "residue")?;
        let rho = (n_mod as u128 * inverse_mod(cofactor, q) as u128 % q as u128) as u64;
        residues.push((q, rho));
        floor = &floor + &Rat::new(rho, q)?;
    }
    if *x < floor {
        return Ok(MembershipVerdict::not_in(NotInReason::ExhaustiveRefutation));
    }
    let surplus = x.checked_sub(&floor).expect("compared above");
    assert!(surplus.is_integer(), "forced residues leave an integer surplus");
    for (q, rho) in &residues {
        if *rho > 0 {
            representation.insert(stream_index(primes, *q)?, *rho);
        }
    }
    if !surplus.is_zero() {
        let q_min = *den_factors.keys().min().expect("denominator above 1");
        let extra = to_u64(&(surplus.numer() * q_min), "multiplicity")?;
        let index = stream_index(primes, q_min)?;
        let slot = representation.entry(index).or_insert(0);
        *slot = slot
            .checked_add(extra)
            .ok_or_else(|| Error::Resource("multiplicity exceeds machine range".into()))?;
    }
    Ok(MembershipVerdict::found(representation))
}

/// 1-based position of prime q within the stream's ascending enumeration.
fn stream_index(primes: &PrimeStream, q: u64) -> Result<usize> {
    match &primes.kind {
        StreamKind::Explicit { primes } => Ok(primes
            .binary_search(&q)
            .expect("prime verified in stream")
            + 1),
        _ => Ok(primes.primes_up_to(q)?.len()),
    }
}

fn psums_primary(
    d: &MonoidDescriptor,
    primes: &PrimeStream,
    x: &Rat,
    excluded: &[usize],
    budget: Budget,
) -> Result<MembershipVerdict> {
    if let Some(n) = primes.cardinality()? {
        // Finite prime set: the whole family is an explicit list.
        require_unexcluded(excluded)?;
        if n == 0 {
            return Ok(MembershipVerdict::not_in(NotInReason::ExhaustiveRefutation));
        }
        let gens = d.generators_up_to(Truncation::new(n)?)?;
        return finite_list(&gens, x, &[]);
    }
    for p in factor_biguint(x.denom())?.keys() {
        if !primes.contains(*p) {
            return Ok(MembershipVerdict::not_in(NotInReason::DenominatorObstruction));
        }
    }
    if excluded.is_empty() {
        let first = Rat::new(1u32, primes.take(1)?[0])?;
        if *x < first {
            return Ok(MembershipVerdict::not_in(NotInReason::BelowMinimum));
        }
    }
    increasing_leveled(d, x, excluded, PSUMS_WINDOW_CAP, budget)
}

/// Exact closed form for the interleaved example family over all primes.
/// The generator with prime denominator q has numerator u_q (1 at even
/// prime positions, q - 1 at odd ones); residues are forced per prime and
/// the integer surplus rides on extra copies of 1/3.
fn example_ab(x: &Rat) -> Result<MembershipVerdict> {
    let den_factors = factor_biguint(x.denom())?;
    if den_factors.values().any(|&e| e > 1) {
        return Ok(MembershipVerdict::not_in(NotInReason::DenominatorObstruction));
    }
    let d = x.denom();
    let mut floor = Rat::zero();
    let mut forced: Vec<(u64, u64, u64, usize)> = Vec::new();
    for &q in den_factors.keys() {
        let position = PrimeStream::all().primes_up_to(q)?.len();
        let (u, index) = if position % 2 == 0 {
            (1u64, position - 1)
        } else {
            (q - 1, position + 1)
        };
        let cofactor = to_u64(&((d / q) % q), "residue")?;
        let n_mod = to_u64(&(x.numer() % q), "residue")?;
        let inv = inverse_mod(cofactor, q) as u128 * inverse_mod(u % q, q) as u128 % q as u128;
        let rho = (n_mod as u128 * inv % q as u128) as u64;
        forced.push((q, u, rho, index));
        floor = &floor + &Rat::new(rho as u128 * u as u128, q)?;
    }
    if *x < floor {
        return Ok(MembershipVerdict::not_in(NotInReason::ExhaustiveRefutation));
    }
    let surplus = x.checked_sub(&floor).expect("compared above");
    assert!(surplus.is_integer(), "forced residues leave an integer surplus");
    let mut representation: BTreeMap<usize, u64> = BTreeMap::new();
    for (_, _, rho, index) in &forced {
        if *rho > 0 {
            representation.insert(*index, *rho);
        }
    }
    if !surplus.is_zero() {
        // 1/3 sits at interleaved index 1; three copies add the integer 1.
        let extra = to_u64(&(surplus.numer() * 3u32), "multiplicity")?;
        let slot = representation.entry(1).or_insert(0);
        *slot = slot
            .checked_add(extra)
            .ok_or_else(|| Error::Resource("multiplicity exceeds machine range".into()))?;
    }
    Ok(MembershipVerdict::found(representation))
}

/// Exact closed form for the (p^e - 1)/p families: residues are forced
/// per denominator prime, and the integer surplus must land in the monoid
/// generated by the integers p^e - 1 (all of N for e = 1, the numerical
/// semigroup generated by 3 and 8 for e = 2).
fn prime_fractions(power: u8, x: &Rat) -> Result<MembershipVerdict> {
    let den_factors = factor_biguint(x.denom())?;
    if den_factors.values().any(|&e| e > 1) {
        return Ok(MembershipVerdict::not_in(NotInReason::DenominatorObstruction));
    }
    let d = x.denom();
    let mut floor = Rat::zero();
    let mut forced: Vec<(u64, u64)> = Vec::new();
    for &q in den_factors.keys() {
        let u = if power == 1 {
            BigUint::from(q - 1)
        } else {
            BigUint::from(q) * q - 1u32
        };
        let cofactor = to_u64(&((d / q) % q), "residue")?;
        let n_mod = to_u64(&(x.numer() % q), "residue")?;
        let u_mod = to_u64(&(&u % q), "residue")?;
        let inv = inverse_mod(cofactor, q) as u128 * inverse_mod(u_mod, q) as u128 % q as u128;
        let rho = (n_mod as u128 * inv % q as u128) as u64;
        forced.push((q, rho));
        floor = &floor + &Rat::new(BigUint::from(rho) * u, q)?;
    }
    if *x < floor {
        return Ok(MembershipVerdict::not_in(NotInReason::ExhaustiveRefutation));
    }
    let surplus = x.checked_sub(&floor).expect("compared above");
    assert!(surplus.is_integer(), "forced residues leave an integer surplus");
    let mut representation: BTreeMap<usize, u64> = BTreeMap::new();
    for (q, rho) in &forced {
        if *rho > 0 {
            representation.insert(stream_index(&PrimeStream::all(), *q)?, *rho);
        }
    }
    let mut add = |index: usize, extra: u64| -> Result<()> {
        if extra == 0 {
            return Ok(());
        }
        let slot = representation.entry(index).or_insert(0);
        *slot = slot
            .checked_add(extra)
            .ok_or_else(|| Error::Resource("multiplicity exceeds machine range".into()))?;
        Ok(())
    };
    if !surplus.is_zero() {
        if power == 1 {
            // t extra copies pairs of 1/2 add the integer t.
            add(1, to_u64(&(surplus.numer() * 2u32), "multiplicity")?)?;
        } else {
            // The surplus must decompose over increments 3 (from p = 2)
            // and 8 (from p = 3).
            let spare = NumericalSemigroup::from_integers(&[3, 8])?;
            let Some(rep) = spare.contains_big(surplus.numer())? else {
                return Ok(MembershipVerdict::not_in(NotInReason::ExhaustiveRefutation));
            };
            let alpha = rep.get(&3).copied().unwrap_or(0);
            let beta = rep.get(&8).copied().unwrap_or(0);
            add(
                1,
                alpha
                    .checked_mul(2)
                    .ok_or_else(|| Error::Resource("multiplicity exceeds machine range".into()))?,
            )?;
            add(
                2,
                beta.checked_mul(3)
                    .ok_or_else(|| Error::Resource("multiplicity exceeds machine range".into()))?,
            )?;
        }
    }
    Ok(MembershipVerdict::found(representation))
}

fn geo_psums(
    d: &MonoidDescriptor,
    ratio: &Rat,
    x: &Rat,
    excluded: &[usize],
    trunc: Truncation,
    budget: Budget,
) -> Result<MembershipVerdict> {
    let (a, b) = (ratio.numer(), ratio.denom());
    if b.is_one() {
        // Integer ratio: increasing integer generators, decided exactly on
        // the window below x via the scaled table.
        if !x.is_integer() {
            return Ok(MembershipVerdict::not_in(NotInReason::DenominatorObstruction));
        }
        if a.is_one() {
            // Generators 1, 2, 3, ...: every positive integer is in.
            require_unexcluded(excluded)?;
            let mult = to_u64(x.numer(), "multiplicity")?;
            return Ok(MembershipVerdict::found(BTreeMap::from([(1, mult)])));
        }
        if excluded.is_empty() && x < ratio {
            return Ok(MembershipVerdict::not_in(NotInReason::BelowMinimum));
        }
        let (k, exact) = increasing_window(d, x, WINDOW_CAP)?;
        if k == 0 {
            return Ok(MembershipVerdict::not_in(NotInReason::BelowMinimum));
        }
        assert!(exact, "integer geometric sums outgrow any bounded target");
        let gens = d.generators_up_to(Truncation::new(k)?)?;
        return finite_list(&gens, x, excluded);
    }
    if !denominator_divides(x, b)? {
        return Ok(MembershipVerdict::not_in(NotInReason::DenominatorObstruction));
    }
    if let Some(prime) = valuation_obstruction(x, a)? {
        return Ok(MembershipVerdict::not_in(NotInReason::ValuationObstruction { prime }));
    }
    if excluded.is_empty() && x < ratio {
        return Ok(MembershipVerdict::not_in(NotInReason::BelowMinimum));
    }
    if a > b {
        return increasing_leveled(d, x, excluded, WINDOW_CAP, budget);
    }
    // Bounded increasing family: negatives beyond the obstructions are
    // undecided at finite depth.
    let depth = trunc.depth();
    Ok(match leveled_search(d, x, depth, excluded, budget)? {
        Search::Found(rep) => MembershipVerdict::found(rep),
        Search::Exhausted | Search::OutOfBudget => MembershipVerdict::UnknownAtDepth { depth },
    })
}

fn unbounded_geo(
    d: &MonoidDescriptor,
    ratio: &Rat,
    x: &Rat,
    excluded: &[usize],
    budget: Budget,
) -> Result<MembershipVerdict> {
    let (a, b) = (ratio.numer(), ratio.denom());
    if !denominator_divides(x, b)? {
        return Ok(MembershipVerdict::not_in(NotInReason::DenominatorObstruction));
    }
    if let Some(prime) = valuation_obstruction(x, a)? {
        return Ok(MembershipVerdict::not_in(NotInReason::ValuationObstruction { prime }));
    }
    if excluded.is_empty() {
        let first = d.generators_up_to(Truncation::new(1)?)?.remove(0);
        if *x < first {
            return Ok(MembershipVerdict::not_in(NotInReason::BelowMinimum));
        }
    }
    increasing_leveled(d, x, excluded, WINDOW_CAP, budget)
}
