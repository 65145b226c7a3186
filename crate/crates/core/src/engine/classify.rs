//! Symbolic structure classification per family.

use num_traits::One;

use crate::descriptors::MonoidDescriptor;
use crate::exactnum::Rat;
use crate::Result;

use super::{Atomicity, MonotoneClass, StructureReport};

/// A finitely generated monoid: isomorphic to a numerical semigroup,
/// monotone both ways, bounded and strongly bounded.
fn finitely_generated(atomicity: Atomicity, citations: &[&str]) -> StructureReport {
    StructureReport {
        is_finitely_generated: true,
        iso_to_numerical_semigroup: true,
        monotone_class: MonotoneClass::Both,
        bounded: true,
        strongly_bounded: true,
        atomicity,
        citations: tags(citations),
        notes: Vec::new(),
    }
}

fn tags(citations: &[&str]) -> Vec<String> {
    citations.iter().map(|c| c.to_string()).collect()
}

pub(super) fn compute(d: &MonoidDescriptor) -> Result<StructureReport> {
    let report = match d {
        MonoidDescriptor::Finite { .. } => {
            finitely_generated(Atomicity::Atomic, &["Lemma 3.3", "Prop 4.8"])
        }
        MonoidDescriptor::Geometric { ratio } => {
            let (a, b) = (ratio.numer(), ratio.denom());
            if b.is_one() {
                finitely_generated(Atomicity::Atomic, &["Thm 6.2", "Cor 6.3", "Lemma 3.3"])
            } else if a.is_one() {
                StructureReport {
                    is_finitely_generated: false,
                    iso_to_numerical_semigroup: false,
                    monotone_class: MonotoneClass::StronglyDecreasing,
                    bounded: true,
                    strongly_bounded: true,
                    atomicity: Atomicity::Antimatter,
                    citations: tags(&["Thm 6.2", "Cor 6.3"]),
                    notes: Vec::new(),
                }
            } else if *ratio < Rat::one() {
                StructureReport {
                    is_finitely_generated: false,
                    iso_to_numerical_semigroup: false,
                    monotone_class: MonotoneClass::StronglyDecreasing,
                    bounded: true,
                    strongly_bounded: false,
                    atomicity: Atomicity::Atomic,
                    citations: tags(&["Thm 6.2", "Cor 6.3"]),
                    notes: Vec::new(),
                }
            } else {
                StructureReport {
                    is_finitely_generated: false,
                    iso_to_numerical_semigroup: false,
                    monotone_class: MonotoneClass::StronglyIncreasing,
                    bounded: false,
                    strongly_bounded: false,
                    atomicity: Atomicity::Atomic,
                    citations: tags(&["Thm 6.2", "Cor 6.3"]),
                    notes: Vec::new(),
                }
            }
        }
        MonoidDescriptor::Primary { primes } => {
            if primes.cardinality()?.is_some() {
                finitely_generated(
                    Atomicity::HereditarilyAtomic,
                    &["Thm 5.9", "Lemma 3.3", "Prop 4.8"],
                )
            } else {
                StructureReport {
                    is_finitely_generated: false,
                    iso_to_numerical_semigroup: false,
                    monotone_class: MonotoneClass::StronglyDecreasing,
                    bounded: true,
                    strongly_bounded: true,
                    atomicity: Atomicity::HereditarilyAtomic,
                    citations: tags(&["Thm 5.9", "Prop 4.6", "Lemma 3.3", "Cor 5.6"]),
                    notes: vec!["contains an unbounded submonoid".to_string()],
                }
            }
        }
        MonoidDescriptor::PsumsPrimary { primes } => {
            if primes.cardinality()?.is_some() {
                finitely_generated(Atomicity::Atomic, &["Prop 3.2", "Lemma 3.3", "Prop 4.8"])
            } else {
                // Substantial prime set: the partial sums are unbounded.
                StructureReport {
                    is_finitely_generated: false,
                    iso_to_numerical_semigroup: false,
                    monotone_class: MonotoneClass::StronglyIncreasing,
                    bounded: false,
                    strongly_bounded: false,
                    atomicity: Atomicity::Atomic,
                    citations: tags(&["Prop 5.4", "Prop 3.2", "Eq 5.3"]),
                    notes: Vec::new(),
                }
            }
        }
        MonoidDescriptor::ExampleAb => StructureReport {
            is_finitely_generated: false,
            iso_to_numerical_semigroup: false,
            monotone_class: MonotoneClass::NotMonotone,
            bounded: true,
            strongly_bounded: false,
            atomicity: Atomicity::Atomic,
            citations: tags(&["Ex 3.2", "Prop 3.2"]),
            notes: vec!["cluster points 0 and 1".to_string()],
        },
        MonoidDescriptor::PrimeFractions { power } => StructureReport {
            is_finitely_generated: false,
            iso_to_numerical_semigroup: false,
            monotone_class: if *power == 1 {
                MonotoneClass::WeaklyIncreasing
            } else {
                MonotoneClass::StronglyIncreasing
            },
            bounded: *power == 1,
            strongly_bounded: false,
            atomicity: Atomicity::Atomic,
            citations: tags(&["Ex 2.1", "Prop 3.2"]),
            notes: Vec::new(),
        },
        MonoidDescriptor::GeoPsums { ratio } => {
            if ratio.denom().is_one() {
                // Integer ratio r: every partial sum is a multiple of r,
                // so the monoid collapses to the multiples of r.
                finitely_generated(Atomicity::Atomic, &["Lemma 3.3", "Prop 4.8"])
            } else if *ratio < Rat::one() {
                StructureReport {
                    is_finitely_generated: false,
                    iso_to_numerical_semigroup: false,
                    monotone_class: MonotoneClass::WeaklyIncreasing,
                    bounded: true,
                    strongly_bounded: false,
                    atomicity: Atomicity::Atomic,
                    citations: tags(&["Ex 6.4", "Prop 3.2"]),
                    notes: Vec::new(),
                }
            } else {
                StructureReport {
                    is_finitely_generated: false,
                    iso_to_numerical_semigroup: false,
                    monotone_class: MonotoneClass::StronglyIncreasing,
                    bounded: false,
                    strongly_bounded: false,
                    atomicity: Atomicity::Atomic,
                    citations: tags(&["Prop 3.2"]),
                    notes: Vec::new(),
                }
            }
        }
        MonoidDescriptor::UnboundedGeo { .. } => StructureReport {
            is_finitely_generated: false,
            iso_to_numerical_semigroup: false,
            monotone_class: MonotoneClass::StronglyIncreasing,
            bounded: false,
            strongly_bounded: false,
            atomicity: Atomicity::Atomic,
            citations: tags(&["Prop 6.5", "Prop 3.2"]),
            notes: Vec::new(),
        },
    };
    Ok(report)
}
