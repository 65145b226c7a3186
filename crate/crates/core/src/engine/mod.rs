//! Decision procedures over monoid descriptors: membership with
//! certificates, atom computation, structural classification, and
//! substantiality analysis.
//!
//! Negative membership verdicts are only issued when the refutation is
//! sound for the full monoid; a truncation-limited failure to find a
//! representation is reported as unknown at the searched depth.

mod atoms;
mod classify;
mod knapsack;
mod member;
mod substantial;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::descriptors::{MonoidDescriptor, Truncation};
use crate::exactnum::Rat;
use crate::Result;

pub use atoms::brute_force_atoms;
pub use substantial::is_substantial;

/// Node-count limit for exhaustive searches; exhaustion yields an
/// unknown-at-depth verdict instead of an unsound negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    nodes: u64,
}

impl Budget {
    /// A budget of `nodes` search nodes.
    pub fn new(nodes: u64) -> Self {
        Budget { nodes: nodes.max(1) }
    }

    /// The node allowance.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget { nodes: 1_000_000 }
    }
}

/// Why an element is certainly outside the full monoid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum NotInReason {
    /// The element is positive but below every generator.
    BelowMinimum,
    /// Some prime valuation of the element is smaller than every monoid
    /// element's can be.
    ValuationObstruction { prime: u64 },
    /// The element's denominator contains a prime (or prime power) no
    /// monoid element's denominator can contain.
    DenominatorObstruction,
    /// An exhaustive search over every generator the element could use
    /// found no representation, or a closed form rules it out.
    ExhaustiveRefutation,
}

/// Outcome of a membership query.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum MembershipVerdict {
    /// The element is in the monoid; the representation maps 1-based
    /// generator indices (in the family's canonical order) to positive
    /// multiplicities and re-sums exactly to the element.
    In { representation: BTreeMap<usize, u64> },
    /// The element is certainly not in the full monoid.
    NotIn { reason: NotInReason },
    /// No representation was found within the searched depth, and no sound
    /// full-monoid refutation applies.
    UnknownAtDepth { depth: usize },
}

impl MembershipVerdict {
    fn found(representation: BTreeMap<usize, u64>) -> Self {
        MembershipVerdict::In { representation }
    }

    fn not_in(reason: NotInReason) -> Self {
        MembershipVerdict::NotIn { reason }
    }

    /// Whether the verdict is a positive membership.
    pub fn is_in(&self) -> bool {
        matches!(self, MembershipVerdict::In { .. })
    }
}

/// How an atom report's listing relates to the full atom set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Exactness {
    /// The atom set follows a proved closed form; the tag names the result.
    ClosedForm { tag: String },
    /// The increasing-sequence filter decided every listed index exactly.
    ExactByIncreasingFilter,
    /// Atom status beyond the listed depth is undetermined.
    TruncatedAtDepth { depth: usize },
}

/// The atoms of a monoid, or a truncated window onto them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomReport {
    /// Pairwise distinct positive atoms, in ascending index order.
    pub atoms: Vec<Rat>,
    /// How the listing was obtained.
    pub exactness: Exactness,
    /// True only when the monoid has no atoms at all.
    pub antimatter_flag: bool,
}

/// Which monotone generating sequences exist for the monoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonotoneClass {
    /// Generated by an increasing unbounded sequence.
    StronglyIncreasing,
    /// Generated by an increasing bounded sequence.
    WeaklyIncreasing,
    /// Generated by a decreasing sequence whose sum converges.
    StronglyDecreasing,
    /// Generated by a decreasing sequence, no convergent one.
    WeaklyDecreasing,
    /// Generated by no monotone sequence.
    NotMonotone,
    /// Finitely generated, hence generated both ways.
    Both,
}

/// How far atomicity goes for the monoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Atomicity {
    /// Every element is a sum of atoms.
    Atomic,
    /// No atoms at all.
    Antimatter,
    /// Every submonoid is atomic.
    HereditarilyAtomic,
}

/// Structural flags for a descriptor's monoid, derived symbolically per
/// family, with the results justifying each flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    /// Whether the monoid admits a finite generating set.
    pub is_finitely_generated: bool,
    /// Whether the monoid is isomorphic to a numerical semigroup, which
    /// holds exactly when the denominator set is finite.
    pub iso_to_numerical_semigroup: bool,
    /// Monotone generating-sequence class.
    pub monotone_class: MonotoneClass,
    /// Whether some generating set is bounded.
    pub bounded: bool,
    /// Whether some generating set has bounded numerators.
    pub strongly_bounded: bool,
    /// Atomicity classification.
    pub atomicity: Atomicity,
    /// Result tags justifying the flags.
    pub citations: Vec<String>,
    /// Extra structural remarks.
    pub notes: Vec<String>,
}

/// Whether the reciprocal sum of a prime set diverges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Substantiality {
    /// The sum of reciprocals diverges.
    Substantial,
    /// The sum converges (finite sets).
    Insubstantial,
}

/// Divergence verdict with exact partial reciprocal sums and, for
/// congruence-class streams, floating-point offset estimates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubstantialityReport {
    /// Whether the reciprocal sum diverges.
    pub verdict: Substantiality,
    /// Exact sums S(x) over stream primes p <= x, strictly increasing in
    /// both coordinates; finite streams report their single total.
    pub partial_sums: Vec<(u64, Rat)>,
    /// S(x) minus loglog(x)/phi(n) at the same checkpoints; only for
    /// congruence-class streams. The only floating point in the crate.
    pub mertens_offsets: Vec<(u64, f64)>,
}

/// Decides whether x belongs to the monoid described by `d`.
///
/// Searches may enlarge the truncation internally when exactness requires
/// it (increasing families) and are bounded by the node budget.
pub fn member(
    d: &MonoidDescriptor,
    x: &Rat,
    trunc: Truncation,
    budget: Budget,
) -> Result<MembershipVerdict> {
    d.validate()?;
    let verdict = member::decide(d, x, trunc, budget)?;
    if let MembershipVerdict::In { representation } = &verdict {
        verify_resum(d, x, representation)?;
    }
    Ok(verdict)
}

/// Membership with some generator indices barred from use, for atom
/// verification: is x reachable without the excluded generators?
pub fn member_excluding(
    d: &MonoidDescriptor,
    x: &Rat,
    excluded: &[usize],
    trunc: Truncation,
    budget: Budget,
) -> Result<MembershipVerdict> {
    d.validate()?;
    let verdict = member::decide_excluding(d, x, excluded, trunc, budget)?;
    if let MembershipVerdict::In { representation } = &verdict {
        for index in representation.keys() {
            assert!(!excluded.contains(index), "excluded index used in representation");
        }
        verify_resum(d, x, representation)?;
    }
    Ok(verdict)
}

/// Membership in the submonoid generated by the first `depth` generators
/// only. Exact up to the node budget for every family.
pub fn member_prefix(
    d: &MonoidDescriptor,
    x: &Rat,
    depth: usize,
    budget: Budget,
) -> Result<MembershipVerdict> {
    d.validate()?;
    let verdict = member::decide_prefix(d, x, depth, budget)?;
    if let MembershipVerdict::In { representation } = &verdict {
        assert!(
            representation.keys().all(|&i| i <= depth),
            "prefix representation stays within the prefix"
        );
        verify_resum(d, x, representation)?;
    }
    Ok(verdict)
}

/// Checks that an In representation re-sums exactly to x; a mismatch is a
/// bug in a decision procedure, never a data error.
fn verify_resum(
    d: &MonoidDescriptor,
    x: &Rat,
    representation: &BTreeMap<usize, u64>,
) -> Result<()> {
    let max_index = representation.keys().max().copied().unwrap_or(1);
    let gens = d.generators_up_to(Truncation::new(max_index)?)?;
    let mut sum = Rat::zero();
    for (&index, &mult) in representation {
        assert!(index >= 1 && index <= gens.len(), "representation index out of range");
        assert!(mult > 0, "representation multiplicity must be positive");
        sum = &sum + &gens[index - 1].scale(&mult.into());
    }
    assert_eq!(&sum, x, "representation must re-sum to the queried element");
    Ok(())
}

/// Computes the atom set (or a depth-window onto it) for a descriptor.
pub fn atoms(d: &MonoidDescriptor, trunc: Truncation) -> Result<AtomReport> {
    d.validate()?;
    let report = atoms::compute(d, trunc)?;
    assert!(
        !report.antimatter_flag || report.atoms.is_empty(),
        "antimatter monoids have no atoms"
    );
    let distinct: std::collections::BTreeSet<&Rat> = report.atoms.iter().collect();
    assert!(
        distinct.len() == report.atoms.len() && report.atoms.iter().all(|a| !a.is_zero()),
        "atoms are pairwise distinct and positive"
    );
    Ok(report)
}

/// Derives the structural flags of a descriptor's monoid.
pub fn classify(d: &MonoidDescriptor) -> Result<StructureReport> {
    d.validate()?;
    let report = classify::compute(d)?;
    assert!(
        !report.strongly_bounded || report.bounded,
        "strongly bounded implies bounded"
    );
    Ok(report)
}
