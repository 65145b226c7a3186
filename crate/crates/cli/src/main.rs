//! pm: exact computation on Puiseux monoids from the command line.
//!
//! Verbs: `classify`, `member`, `atoms`, `witness`, `verify`,
//! `substantial`, `ns`. Exit codes: 0 for success (including In and
//! Verified verdicts), 1 for negative verdicts (NotIn, FailedAt, a
//! failed suite), 2 for undecided outcomes and exhausted resources, 64
//! for usage errors.

mod output;
mod suites;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use puiseux_core::descriptors::{MonoidDescriptor, Truncation};
use puiseux_core::engine::{self, Budget, MembershipVerdict};
use puiseux_core::exactnum::{PrimeStream, Rat};
use puiseux_core::numsgp::NumericalSemigroup;
use puiseux_core::witnesses::{self, WitnessReport};
use puiseux_core::Error;

use output::Document;

const EXIT_NEGATIVE: u8 = 1;
const EXIT_UNDECIDED: u8 = 2;
const EXIT_USAGE: u8 = 64;
const DEFAULT_DEPTH: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable block.
    Text,
    /// One JSON document with verb, input, verdict, citations, data.
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "pm", version, about = "Exact computation on Puiseux monoids")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the result to a file: witnesses emit their generator list
    /// as a finite descriptor, other verbs the structured document.
    #[arg(long, global = true)]
    emit: Option<PathBuf>,
    /// Truncation depth for searches and listings (default 10).
    #[arg(long, global = true)]
    depth: Option<usize>,
    /// Node budget for exhaustive searches.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    budget: u64,
    /// Seed for the randomized verification suites.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Classify a monoid: atomicity, boundedness, monotone class.
    Classify {
        /// Monoid descriptor, e.g. geometric:2/3 or primary:2,3.
        descriptor: String,
    },
    /// Decide whether a rational belongs to a monoid.
    Member {
        /// Monoid descriptor.
        descriptor: String,
        /// The rational to test, as a/b.
        value: String,
    },
    /// List atoms, exactly where a closed form or filter applies.
    Atoms {
        /// Monoid descriptor.
        descriptor: String,
    },
    /// Build a named construction and verify its claimed atoms.
    #[command(subcommand)]
    Witness(WitnessCmd),
    /// Recompute a published claim against an independent oracle.
    Verify {
        /// Suite tag: thm6.2, prop3.2, thm5.9, lemma3.3, ns, prop5.4,
        /// eq5.3, ex6.4, prop6.5, antimatter, lemma5.8, or all.
        suite: String,
        /// Ratio parameter for suites that take one.
        #[arg(long)]
        r: Option<String>,
        /// Number of seeded random trials.
        #[arg(long)]
        trials: Option<u64>,
        /// Progression residue for eq5.3.
        #[arg(long)]
        m: Option<u64>,
        /// Progression modulus for eq5.3.
        #[arg(long)]
        n: Option<u64>,
        /// Largest checkpoint for eq5.3.
        #[arg(long)]
        x: Option<u64>,
        /// Workload for the aggregate suite: desk or deep.
        #[arg(long, default_value = "desk")]
        scale: String,
    },
    /// Decide substantiality of a prime stream and tabulate exact
    /// reciprocal partial sums.
    Substantial {
        /// Prime stream: all, ap(m,n), or a comma list of primes.
        stream: String,
    },
    /// Numerical semigroup facts for integer generators.
    Ns {
        /// Comma-separated positive integers, e.g. 6,9,20.
        generators: String,
    },
}

#[derive(Debug, Subcommand)]
enum WitnessCmd {
    /// Partial sums of reciprocals of primes from a stream.
    Psums {
        /// Prime stream: all, ap(m,n), or a comma list.
        #[arg(long, default_value = "all")]
        primes: String,
        /// Number of terms.
        #[arg(long)]
        n: usize,
    },
    /// The interleaved bounded construction with cluster points 0 and 1.
    ExampleAb {
        /// Number of terms per block.
        #[arg(long)]
        n: usize,
    },
    /// A strictly increasing sequence of atoms inside a monoid that is
    /// not isomorphic to a numerical semigroup.
    InfiniteAtoms {
        /// Descriptor of the ambient monoid.
        #[arg(long)]
        of: String,
        /// Number of atoms to produce.
        #[arg(long)]
        n: usize,
    },
    /// Generators of a non-monotone submonoid of a monotone monoid.
    NonMonotone {
        /// Descriptor of the ambient monoid.
        #[arg(long)]
        of: String,
        /// Number of doubled/tripled atom pairs.
        #[arg(long)]
        n: usize,
    },
    /// Bounded geometric partial sums, every term an atom.
    GeoPsums {
        /// Common ratio in (0, 1).
        #[arg(long)]
        r: String,
        /// Number of terms.
        #[arg(long)]
        n: usize,
    },
    /// Unbounded geometric partial sums, every term an atom above its
    /// index.
    UnboundedGeo {
        /// Common ratio a/b with a, b > 1.
        #[arg(long)]
        r: String,
        /// Number of terms.
        #[arg(long)]
        n: usize,
    },
}

/// A finished invocation: text and structured renderings, the exit
/// code, and an optional override for what `--emit` writes.
struct Outcome {
    text: String,
    doc: Document,
    exit: u8,
    emit_payload: Option<String>,
}

/// A failed invocation, already mapped to an exit code.
struct Failure {
    message: String,
    exit: u8,
}

impl Failure {
    fn usage(message: String) -> Self {
        Failure { message, exit: EXIT_USAGE }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let exit = match &e {
            Error::Resource(_) => EXIT_UNDECIDED,
            _ => EXIT_USAGE,
        };
        Failure { message: e.to_string(), exit }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => i32::from(EXIT_USAGE),
            };
            let _ = e.print();
            process::exit(code);
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            let rendered = match cli.format {
                Format::Text => outcome.text.clone(),
                Format::Structured => {
                    serde_json::to_string_pretty(&outcome.doc).expect("document serializes")
                }
            };
            // A closed pipe downstream is not our error: keep the verdict
            // exit code instead of panicking.
            if let Err(err) = writeln!(io::stdout(), "{rendered}") {
                if err.kind() != io::ErrorKind::BrokenPipe {
                    eprintln!("pm: cannot write to stdout: {err}");
                    process::exit(i32::from(EXIT_UNDECIDED));
                }
            }
            if let Some(path) = &cli.emit {
                let payload = outcome.emit_payload.unwrap_or_else(|| {
                    serde_json::to_string_pretty(&outcome.doc).expect("document serializes")
                });
                if let Err(err) = fs::write(path, payload + "\n") {
                    eprintln!("pm: cannot write {}: {err}", path.display());
                    process::exit(i32::from(EXIT_UNDECIDED));
                }
            }
            process::exit(i32::from(outcome.exit));
        }
        Err(failure) => {
            eprintln!("pm: {}", failure.message);
            process::exit(i32::from(failure.exit));
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let depth = cli.depth.unwrap_or(DEFAULT_DEPTH);
    let budget = Budget::new(cli.budget);
    match &cli.verb {
        Verb::Classify { descriptor } => classify(descriptor),
        Verb::Member { descriptor, value } => member(descriptor, value, depth, budget),
        Verb::Atoms { descriptor } => atoms(descriptor, depth),
        Verb::Witness(cmd) => witness(cmd, cli.depth),
        Verb::Verify { suite, r, trials, m, n, x, scale } => {
            verify(suite, r.as_deref(), *trials, *m, *n, *x, scale, cli.depth, cli.seed)
        }
        Verb::Substantial { stream } => substantial(stream),
        Verb::Ns { generators } => ns(generators),
    }
}

fn parse_descriptor(text: &str) -> Result<MonoidDescriptor, Failure> {
    text.parse::<MonoidDescriptor>().map_err(Failure::from)
}

fn parse_rational(text: &str) -> Result<Rat, Failure> {
    text.parse::<Rat>().map_err(Failure::from)
}

/// Parses a bare prime-stream in the descriptor grammar by wrapping it
/// in a primary descriptor; parse positions are shifted back so they
/// index into the bare stream text.
fn parse_stream(text: &str) -> Result<PrimeStream, Failure> {
    const PREFIX: usize = "primary:".len();
    let parsed = format!("primary:{text}").parse::<MonoidDescriptor>().map_err(|e| match e {
        Error::Parse { position, message } => {
            Failure::from(Error::Parse { position: position.saturating_sub(PREFIX), message })
        }
        other => Failure::from(other),
    })?;
    match parsed {
        MonoidDescriptor::Primary { primes } => Ok(primes),
        _ => unreachable!("primary descriptor parses to the primary variant"),
    }
}

fn truncation(depth: usize) -> Result<Truncation, Failure> {
    Truncation::new(depth).map_err(Failure::from)
}

fn classify(descriptor: &str) -> Result<Outcome, Failure> {
    let d = parse_descriptor(descriptor)?;
    let report = engine::classify(&d).map_err(Failure::from)?;
    let text = output::classify_text(&d, &report);
    let doc = Document {
        verb: "classify".to_string(),
        input: d.serialize_text(),
        verdict: output::atomicity_word(report.atomicity).to_string(),
        citations: report.citations.clone(),
        data: serde_json::to_value(&report).expect("report serializes"),
    };
    Ok(Outcome { text, doc, exit: 0, emit_payload: None })
}

fn member(descriptor: &str, value: &str, depth: usize, budget: Budget) -> Result<Outcome, Failure> {
    let d = parse_descriptor(descriptor)?;
    let x = parse_rational(value)?;
    let verdict = engine::member(&d, &x, truncation(depth)?, budget).map_err(Failure::from)?;
    let exit = match &verdict {
        MembershipVerdict::In { .. } => 0,
        MembershipVerdict::NotIn { .. } => EXIT_NEGATIVE,
        MembershipVerdict::UnknownAtDepth { .. } => EXIT_UNDECIDED,
    };
    let text = output::member_text(&d, &verdict).map_err(Failure::from)?;
    let doc = Document {
        verb: "member".to_string(),
        input: format!("{} in {}", x, d.serialize_text()),
        verdict: output::member_word(&verdict).to_string(),
        citations: Vec::new(),
        data: serde_json::to_value(&verdict).expect("verdict serializes"),
    };
    Ok(Outcome { text, doc, exit, emit_payload: None })
}

fn atoms(descriptor: &str, depth: usize) -> Result<Outcome, Failure> {
    let d = parse_descriptor(descriptor)?;
    let report = engine::atoms(&d, truncation(depth)?).map_err(Failure::from)?;
    let text = output::atoms_text(&d, depth, &report);
    let doc = Document {
        verb: "atoms".to_string(),
        input: d.serialize_text(),
        verdict: output::atoms_word(&report).to_string(),
        citations: Vec::new(),
        data: serde_json::to_value(&report).expect("report serializes"),
    };
    Ok(Outcome { text, doc, exit: 0, emit_payload: None })
}

fn witness(cmd: &WitnessCmd, depth: Option<usize>) -> Result<Outcome, Failure> {
    let (name, input, report): (&str, String, WitnessReport) = match cmd {
        WitnessCmd::Psums { primes, n } => {
            let stream = parse_stream(primes)?;
            let report = match depth {
                Some(d) => witnesses::witness_partial_sums_with_depth(&stream, *n, d),
                None => witnesses::witness_partial_sums(&stream, *n),
            }
            .map_err(Failure::from)?;
            ("psums", format!("primes={primes} n={n}"), report)
        }
        WitnessCmd::ExampleAb { n } => {
            let report = match depth {
                Some(d) => witnesses::witness_example_ab_with_depth(*n, d),
                None => witnesses::witness_example_ab(*n),
            }
            .map_err(Failure::from)?;
            ("example-ab", format!("n={n}"), report)
        }
        WitnessCmd::InfiniteAtoms { of, n } => {
            let d = parse_descriptor(of)?;
            let report = match depth {
                Some(dep) => witnesses::witness_infinite_atoms_with_depth(&d, *n, dep),
                None => witnesses::witness_infinite_atoms(&d, *n),
            }
            .map_err(Failure::from)?;
            ("infinite-atoms", format!("of={} n={n}", d.serialize_text()), report)
        }
        WitnessCmd::NonMonotone { of, n } => {
            let d = parse_descriptor(of)?;
            let report = match depth {
                Some(dep) => witnesses::witness_non_monotone_with_depth(&d, *n, dep),
                None => witnesses::witness_non_monotone_submonoid(&d, *n),
            }
            .map_err(Failure::from)?;
            ("non-monotone", format!("of={} n={n}", d.serialize_text()), report)
        }
        WitnessCmd::GeoPsums { r, n } => {
            let ratio = parse_rational(r)?;
            let report = match depth {
                Some(d) => witnesses::witness_geo_psums_with_depth(&ratio, *n, d),
                None => witnesses::witness_geo_psums(&ratio, *n),
            }
            .map_err(Failure::from)?;
            ("geo-psums", format!("r={ratio} n={n}"), report)
        }
        WitnessCmd::UnboundedGeo { r, n } => {
            let ratio = parse_rational(r)?;
            let report = match depth {
                Some(d) => witnesses::witness_unbounded_geo_with_depth(&ratio, *n, d),
                None => witnesses::witness_unbounded_geo(&ratio, *n),
            }
            .map_err(Failure::from)?;
            ("unbounded-geo", format!("r={ratio} n={n}"), report)
        }
    };
    let exit = if report.is_verified() { 0 } else { EXIT_NEGATIVE };
    let text = output::witness_text(name, &report);
    // Witnesses emit their generators as a reparsable finite descriptor.
    let emit_payload = if report.generators.is_empty() {
        None
    } else {
        let finite = MonoidDescriptor::finite(report.generators.clone()).map_err(Failure::from)?;
        Some(finite.serialize_text())
    };
    let doc = Document {
        verb: format!("witness {name}"),
        input,
        verdict: output::witness_word(&report).to_string(),
        citations: vec![report.provenance.clone()],
        data: serde_json::to_value(&report).expect("report serializes"),
    };
    Ok(Outcome { text, doc, exit, emit_payload })
}

#[allow(clippy::too_many_arguments)]
fn verify(
    suite: &str,
    r: Option<&str>,
    trials: Option<u64>,
    m: Option<u64>,
    n: Option<u64>,
    x: Option<u64>,
    scale: &str,
    depth: Option<usize>,
    seed: u64,
) -> Result<Outcome, Failure> {
    let ratio: Option<Rat> = match r {
        Some(text) => Some(parse_rational(text)?),
        None => None,
    };
    let report = match suite {
        "thm6.2" => suites::thm6_2(ratio.as_ref(), depth.unwrap_or(8)),
        "prop3.2" => suites::prop3_2(trials.unwrap_or(200), seed),
        "thm5.9" => suites::thm5_9(),
        "lemma3.3" => suites::lemma3_3(trials.unwrap_or(500), seed),
        "ns" => suites::ns_consistency(trials.unwrap_or(100), seed),
        "prop5.4" => suites::prop5_4(),
        "eq5.3" => suites::eq5_3(m.unwrap_or(1), n.unwrap_or(4), x.unwrap_or(1_000_000)),
        "ex6.4" => suites::ex6_4(),
        "prop6.5" => suites::prop6_5(),
        "antimatter" => suites::antimatter(),
        "lemma5.8" => suites::lemma5_8(trials.unwrap_or(200), seed),
        "all" => suites::all(scale, seed),
        other => {
            return Err(Failure::usage(format!(
                "unknown verify suite {other:?}; expected one of thm6.2, prop3.2, thm5.9, \
                 lemma3.3, ns, prop5.4, eq5.3, ex6.4, prop6.5, antimatter, lemma5.8, all"
            )))
        }
    }
    .map_err(Failure::from)?;
    let exit = if report.passed { 0 } else { EXIT_NEGATIVE };
    let text = output::suite_text(&report);
    let doc = Document {
        verb: "verify".to_string(),
        input: suite.to_string(),
        verdict: if report.passed { "pass".to_string() } else { "fail".to_string() },
        citations: report.citations.clone(),
        data: serde_json::to_value(&report).expect("report serializes"),
    };
    Ok(Outcome { text, doc, exit, emit_payload: None })
}

fn substantial(stream_text: &str) -> Result<Outcome, Failure> {
    let stream = parse_stream(stream_text)?;
    let checkpoints = [10_000u64, 100_000, 1_000_000];
    let report = engine::is_substantial(&stream, &checkpoints).map_err(Failure::from)?;
    let text = output::substantial_text(stream_text, &report);
    let doc = Document {
        verb: "substantial".to_string(),
        input: stream_text.to_string(),
        verdict: output::substantial_word(&report).to_string(),
        citations: vec!["Eq 5.3".to_string()],
        data: serde_json::to_value(&report).expect("report serializes"),
    };
    Ok(Outcome { text, doc, exit: 0, emit_payload: None })
}

fn ns(generators: &str) -> Result<Outcome, Failure> {
    let mut parsed = Vec::new();
    for part in generators.split(',') {
        let value: u64 = part.trim().parse().map_err(|_| {
            Failure::usage(format!("ns generators must be positive integers, got {part:?}"))
        })?;
        parsed.push(value);
    }
    let s = NumericalSemigroup::from_integers(&parsed).map_err(Failure::from)?;
    let text = output::ns_text(&s, &parsed).map_err(Failure::from)?;
    let data = output::ns_data(&s, &parsed).map_err(Failure::from)?;
    let doc = Document {
        verb: "ns".to_string(),
        input: generators.to_string(),
        verdict: "computed".to_string(),
        citations: vec!["Prop 4.8".to_string()],
        data,
    };
    Ok(Outcome { text, doc, exit: 0, emit_payload: None })
}
