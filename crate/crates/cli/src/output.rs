//! Rendering of reports as terminal text and as structured documents.
//!
//! Text mode prints one human-readable block per invocation. Structured
//! mode prints a single JSON document with the same fields for every
//! verb: `verb`, `input`, `verdict`, `citations`, `data`. Rationals are
//! always rendered exactly as `a/b`; the only floating-point values are
//! the Mertens offsets, and those are labeled approximate.

use std::collections::BTreeMap;

use serde::Serialize;

use puiseux_core::descriptors::{MonoidDescriptor, Truncation};
use puiseux_core::engine::{
    Atomicity, AtomReport, Exactness, MembershipVerdict, NotInReason, StructureReport,
    Substantiality, SubstantialityReport,
};
use puiseux_core::exactnum::Rat;
use puiseux_core::numsgp::{Frobenius, NumericalSemigroup};
use puiseux_core::witnesses::{WitnessReport, WitnessVerdict};
use puiseux_core::Result;

use crate::suites::SuiteReport;

/// The one structured document every verb emits.
#[derive(Debug, Serialize)]
pub struct Document {
    /// Which verb ran.
    pub verb: String,
    /// The parsed input, re-serialized canonically.
    pub input: String,
    /// One-word outcome, kebab-case.
    pub verdict: String,
    /// Result tags backing the outcome.
    pub citations: Vec<String>,
    /// The full report for the verb.
    pub data: serde_json::Value,
}

/// `[a/b, c/d, ...]` with exact rationals.
pub fn rat_list(rats: &[Rat]) -> String {
    let parts: Vec<String> = rats.iter().map(Rat::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "yes"
    } else {
        "no"
    }
}

/// Display name for the atomicity class.
pub fn atomicity_text(a: Atomicity) -> &'static str {
    match a {
        Atomicity::Atomic => "Atomic",
        Atomicity::Antimatter => "Antimatter",
        Atomicity::HereditarilyAtomic => "Hereditarily atomic",
    }
}

/// Kebab-case verdict word for the atomicity class.
pub fn atomicity_word(a: Atomicity) -> &'static str {
    match a {
        Atomicity::Atomic => "atomic",
        Atomicity::Antimatter => "antimatter",
        Atomicity::HereditarilyAtomic => "hereditarily-atomic",
    }
}

fn monotone_text(class: puiseux_core::engine::MonotoneClass) -> &'static str {
    use puiseux_core::engine::MonotoneClass::*;
    match class {
        StronglyIncreasing => "strongly increasing",
        WeaklyIncreasing => "weakly increasing",
        StronglyDecreasing => "strongly decreasing",
        WeaklyDecreasing => "weakly decreasing",
        NotMonotone => "not monotone",
        Both => "both (finitely generated)",
    }
}

fn boundedness_text(bounded: bool, strongly: bool) -> &'static str {
    match (bounded, strongly) {
        (true, true) => "bounded, strongly bounded",
        (true, false) => "bounded, not strongly bounded",
        (false, _) => "unbounded",
    }
}

/// Text block for `classify`.
pub fn classify_text(d: &MonoidDescriptor, report: &StructureReport) -> String {
    let mut lines = vec![format!("classify {d}")];
    lines.push(format!("  atomicity: {}", atomicity_text(report.atomicity)));
    lines.push(format!(
        "  {}",
        boundedness_text(report.bounded, report.strongly_bounded)
    ));
    lines.push(format!("  monotone class: {}", monotone_text(report.monotone_class)));
    lines.push(format!(
        "  finitely generated: {}",
        yes_no(report.is_finitely_generated)
    ));
    lines.push(format!(
        "  isomorphic to a numerical semigroup: {}",
        yes_no(report.iso_to_numerical_semigroup)
    ));
    for note in &report.notes {
        lines.push(format!("  note: {note}"));
    }
    lines.push(format!("  citations [{}]", report.citations.join(", ")));
    lines.join("\n")
}

/// `1/2 + 1/3`, with `m*(g)` for repeated generators; the empty sum is
/// spelled out. Indices in the representation are 1-based.
pub fn representation_text(
    d: &MonoidDescriptor,
    representation: &BTreeMap<usize, u64>,
) -> Result<String> {
    if representation.is_empty() {
        return Ok("0 (the empty sum)".to_string());
    }
    let deepest = *representation.keys().max().expect("nonempty map");
    let gens = d.generators_up_to(Truncation::new(deepest)?)?;
    let mut parts = Vec::new();
    for (&index, &mult) in representation {
        let g = &gens[index - 1];
        if mult == 1 {
            parts.push(g.to_string());
        } else {
            parts.push(format!("{mult}*({g})"));
        }
    }
    Ok(parts.join(" + "))
}

/// Reason phrase for a negative membership verdict.
pub fn reason_text(reason: &NotInReason) -> String {
    match reason {
        NotInReason::BelowMinimum => "below the minimum positive element".to_string(),
        NotInReason::ValuationObstruction { prime } => {
            format!("valuation obstruction at p={prime}")
        }
        NotInReason::DenominatorObstruction => "denominator obstruction".to_string(),
        NotInReason::ExhaustiveRefutation => "exhaustive refutation".to_string(),
    }
}

/// Text line for `member`.
pub fn member_text(d: &MonoidDescriptor, verdict: &MembershipVerdict) -> Result<String> {
    Ok(match verdict {
        MembershipVerdict::In { representation } => {
            format!("In: {}", representation_text(d, representation)?)
        }
        MembershipVerdict::NotIn { reason } => format!("NotIn: {}", reason_text(reason)),
        MembershipVerdict::UnknownAtDepth { depth } => {
            format!("UnknownAtDepth: undecided within depth {depth}")
        }
    })
}

/// Kebab-case verdict word for a membership verdict.
pub fn member_word(verdict: &MembershipVerdict) -> &'static str {
    match verdict {
        MembershipVerdict::In { .. } => "in",
        MembershipVerdict::NotIn { .. } => "not-in",
        MembershipVerdict::UnknownAtDepth { .. } => "unknown-at-depth",
    }
}

fn exactness_text(e: &Exactness) -> String {
    match e {
        Exactness::ClosedForm { tag } => format!("closed form ({tag})"),
        Exactness::ExactByIncreasingFilter => "exact by the increasing filter".to_string(),
        Exactness::TruncatedAtDepth { depth } => format!("truncated at depth {depth}"),
    }
}

/// Text block for `atoms`.
pub fn atoms_text(d: &MonoidDescriptor, depth: usize, report: &AtomReport) -> String {
    let mut lines = vec![format!("atoms {d} (depth {depth})")];
    lines.push(format!("  atoms {}", rat_list(&report.atoms)));
    lines.push(format!("  exactness: {}", exactness_text(&report.exactness)));
    lines.push(format!("  antimatter: {}", yes_no(report.antimatter_flag)));
    lines.join("\n")
}

/// Kebab-case verdict word for an atom listing.
pub fn atoms_word(report: &AtomReport) -> &'static str {
    match report.exactness {
        Exactness::TruncatedAtDepth { .. } => "truncated",
        _ => "exact",
    }
}

/// Text block for a witness report.
pub fn witness_text(name: &str, report: &WitnessReport) -> String {
    let mut lines = vec![format!("witness {name}")];
    lines.push(format!("  construction: {}", report.construction));
    lines.push(format!("  generators {}", rat_list(&report.generators)));
    lines.push(format!("  claimed atoms {}", rat_list(&report.claimed_atoms)));
    lines.push(format!("  provenance {}", report.provenance));
    match &report.verdict {
        WitnessVerdict::Verified => {
            lines.push(format!("  Verified (depth {})", report.verified_depth));
        }
        WitnessVerdict::FailedAt { index, detail } => {
            lines.push(format!("  FailedAt index {index}: {detail}"));
        }
    }
    lines.join("\n")
}

/// Kebab-case verdict word for a witness report.
pub fn witness_word(report: &WitnessReport) -> &'static str {
    match report.verdict {
        WitnessVerdict::Verified => "verified",
        WitnessVerdict::FailedAt { .. } => "failed-at",
    }
}

/// Exact rational for text output; huge values are summarized by digit
/// counts instead of flooding the terminal (structured output always
/// carries the exact value).
fn rat_brief(x: &Rat) -> String {
    const INLINE_DIGITS: u64 = 72;
    let digits = |b: &num_bigint::BigUint| -> u64 {
        let bits = b.bits();
        if bits <= 240 {
            b.to_string().len() as u64
        } else {
            // floor(bits * log10(2)) + 1 approximates the decimal length.
            (bits as f64 * std::f64::consts::LOG10_2) as u64 + 1
        }
    };
    let (dn, dd) = (digits(x.numer()), digits(x.denom()));
    if dn + dd <= INLINE_DIGITS {
        x.to_string()
    } else {
        format!("exact rational with a {dn}-digit numerator and a {dd}-digit denominator")
    }
}

/// Text block for `substantial`.
pub fn substantial_text(stream_text: &str, report: &SubstantialityReport) -> String {
    let mut lines = vec![format!("substantial {stream_text}")];
    let verdict = match report.verdict {
        Substantiality::Substantial => "substantial (reciprocal sum diverges)",
        Substantiality::Insubstantial => "insubstantial (reciprocal sum converges)",
    };
    lines.push(format!("  verdict: {verdict}"));
    for (x, sum) in &report.partial_sums {
        lines.push(format!("  S({x}) = {}", rat_brief(sum)));
    }
    if !report.mertens_offsets.is_empty() {
        lines.push("  offsets against loglog growth (approximate):".to_string());
        for (x, off) in &report.mertens_offsets {
            lines.push(format!("    x={x}: {off:+.7}"));
        }
    }
    lines.join("\n")
}

/// Kebab-case verdict word for substantiality.
pub fn substantial_word(report: &SubstantialityReport) -> &'static str {
    match report.verdict {
        Substantiality::Substantial => "substantial",
        Substantiality::Insubstantial => "insubstantial",
    }
}

/// Structured data for `ns`, assembled field by field because the
/// semigroup type itself exposes operations rather than serde.
pub fn ns_data(s: &NumericalSemigroup, generators: &[u64]) -> Result<serde_json::Value> {
    let m = s.multiplicity();
    let apery = s.apery(m)?;
    let frobenius = s.frobenius()?;
    let mut doc = serde_json::Map::new();
    doc.insert("generators".into(), serde_json::json!(generators));
    doc.insert("multiplicity".into(), serde_json::json!(m));
    doc.insert(
        "minimal_generators".into(),
        serde_json::json!(s.minimal_generators()?),
    );
    doc.insert("apery".into(), serde_json::json!(apery));
    match frobenius {
        Frobenius::Finite(f) => {
            doc.insert("frobenius".into(), serde_json::json!(f));
            doc.insert("genus".into(), serde_json::json!(s.genus()?));
        }
        Frobenius::Infinite => {
            doc.insert("frobenius".into(), serde_json::json!("infinite"));
            doc.insert("genus".into(), serde_json::json!("infinite"));
        }
    }
    Ok(serde_json::Value::Object(doc))
}

/// Text block for `ns`.
pub fn ns_text(s: &NumericalSemigroup, generators: &[u64]) -> Result<String> {
    let gens: Vec<String> = generators.iter().map(u64::to_string).collect();
    let mut lines = vec![format!("ns <{}>", gens.join(", "))];
    let m = s.multiplicity();
    match s.frobenius()? {
        Frobenius::Finite(f) => {
            lines.push(format!("  multiplicity: {m}"));
            lines.push(format!("  frobenius: {f}"));
            lines.push(format!("  genus: {}", s.genus()?));
        }
        Frobenius::Infinite => {
            lines.push(format!("  multiplicity (reduced): {m}"));
            lines.push("  frobenius: infinite (generators share a common factor)".to_string());
            lines.push("  genus: infinite".to_string());
        }
    }
    let apery: Vec<String> = s.apery(m)?.iter().map(u64::to_string).collect();
    lines.push(format!("  apery({m}): [{}]", apery.join(", ")));
    let minimal: Vec<String> = s.minimal_generators()?.iter().map(u64::to_string).collect();
    lines.push(format!("  minimal generators: [{}]", minimal.join(", ")));
    Ok(lines.join("\n"))
}

/// Text block for a verify suite run: one line per check, then PASS or
/// FAIL with the first counterexample.
pub fn suite_text(report: &SuiteReport) -> String {
    let mut lines = vec![format!("verify {}", report.suite)];
    for check in &report.checks {
        let mark = if check.ok { "ok" } else { "FAIL" };
        lines.push(format!("  [{mark}] {} ({} checks)", check.label, check.count));
        if let Some(cex) = &check.counterexample {
            lines.push(format!("       counterexample: {cex}"));
        }
    }
    if !report.citations.is_empty() {
        lines.push(format!("  citations [{}]", report.citations.join(", ")));
    }
    lines.push(if report.passed { "PASS".to_string() } else { "FAIL".to_string() });
    lines.join("\n")
}
