//! Verification suites: each suite recomputes one published claim from
//! first principles and cross-checks the library against an independent
//! route (brute-force search, dynamic programming over integers, direct
//! gap scans, or seeded random instances).
//!
//! Every suite is deterministic for a fixed seed, reports one line per
//! check family with a count, and stops at the first counterexample.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use puiseux_core::descriptors::{MonoidDescriptor, Truncation};
use puiseux_core::engine::{self, Budget, Exactness};
use puiseux_core::exactnum::{lcm_denominators, PrimeStream, Rat};
use puiseux_core::numsgp::{Frobenius, NumericalSemigroup};
use puiseux_core::witnesses;
use puiseux_core::{Error, Result};

use crate::output::rat_list;

/// One family of checks inside a suite.
#[derive(Debug, Serialize)]
pub struct Check {
    /// What was checked.
    pub label: String,
    /// How many individual comparisons the family ran.
    pub count: u64,
    /// Whether every comparison agreed.
    pub ok: bool,
    /// First disagreement, when one was found.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

/// Outcome of one verify suite.
#[derive(Debug, Serialize)]
pub struct SuiteReport {
    /// Suite tag as given on the command line.
    pub suite: String,
    /// Result tags the suite exercises.
    pub citations: Vec<String>,
    /// Check families, in execution order.
    pub checks: Vec<Check>,
    /// True when every check family agreed.
    pub passed: bool,
}

struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    fn new() -> Self {
        Recorder { checks: Vec::new() }
    }

    fn pass(&mut self, label: impl Into<String>, count: u64) {
        self.checks.push(Check { label: label.into(), count, ok: true, counterexample: None });
    }

    fn fail(&mut self, label: impl Into<String>, count: u64, counterexample: String) {
        self.checks.push(Check {
            label: label.into(),
            count,
            ok: false,
            counterexample: Some(counterexample),
        });
    }

    fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    fn finish(self, suite: &str, citations: &[&str]) -> SuiteReport {
        let passed = self.all_ok();
        SuiteReport {
            suite: suite.to_string(),
            citations: citations.iter().map(|c| c.to_string()).collect(),
            checks: self.checks,
            passed,
        }
    }
}

fn trunc(depth: usize) -> Result<Truncation> {
    Truncation::new(depth)
}

fn random_rat(rng: &mut ChaCha8Rng, max_num: u64, max_den: u64) -> Rat {
    let num = rng.gen_range(1..=max_num);
    let den = rng.gen_range(1..=max_den);
    Rat::new(num, den).expect("positive numerator and denominator")
}

/// Geometric trichotomy: the atom listing follows the closed form in all
/// three regimes, agrees with brute force on a window, and each claimed
/// atom resists (or each claimed non-atom yields to) a deep search over
/// the remaining generators.
pub fn thm6_2(ratio: Option<&Rat>, depth: usize) -> Result<SuiteReport> {
    let canonical = ["2", "5", "1/2", "1/5", "2/3", "3/2", "5/4", "4/5"];
    let ratios: Vec<Rat> = match ratio {
        Some(r) => vec![r.clone()],
        None => canonical
            .iter()
            .map(|t| t.parse())
            .collect::<Result<Vec<Rat>>>()?,
    };
    let mut rec = Recorder::new();
    for r in &ratios {
        thm6_2_one(&mut rec, r, depth)?;
    }
    Ok(rec.finish("thm6.2", &["Thm 6.2", "Cor 6.3"]))
}

fn thm6_2_one(rec: &mut Recorder, r: &Rat, depth: usize) -> Result<()> {
    let d = MonoidDescriptor::geometric(r.clone())?;
    let b_is_one = r.denom().is_one();
    let a_is_one = !b_is_one && r.numer().is_one();
    let window_depth = depth.min(8).max(2);
    let gens = d.generators_up_to(trunc(depth)?)?;
    let window = d.generators_up_to(trunc(window_depth)?)?;

    // Closed-form listing, in generator index order.
    let report = engine::atoms(&d, trunc(depth)?)?;
    let expected: Vec<Rat> = if b_is_one {
        vec![r.clone()]
    } else if a_is_one {
        Vec::new()
    } else {
        gens.clone()
    };
    if report.atoms == expected && report.antimatter_flag == a_is_one {
        rec.pass(format!("r={r}: atom listing matches the trichotomy"), 1);
    } else {
        rec.fail(
            format!("r={r}: atom listing matches the trichotomy"),
            1,
            format!("engine listed {}", rat_list(&report.atoms)),
        );
        return Ok(());
    }

    // Brute-force window oracle.
    let brute = engine::brute_force_atoms(&window)?;
    let expected_window: Vec<Rat> = if b_is_one {
        vec![r.clone()]
    } else if a_is_one {
        vec![window.last().expect("window nonempty").clone()]
    } else {
        let mut sorted = window.clone();
        sorted.sort();
        sorted
    };
    if brute == expected_window {
        rec.pass(
            format!("r={r}: brute force on {window_depth} generators agrees"),
            window.len() as u64,
        );
    } else {
        rec.fail(
            format!("r={r}: brute force on {window_depth} generators agrees"),
            window.len() as u64,
            format!("brute force listed {}", rat_list(&brute)),
        );
        return Ok(());
    }

    // Deep searches over the remaining generators: window artifacts must
    // dissolve, and genuine atoms must stay unreachable.
    let deep = trunc(12.max(window_depth + 2))?;
    if a_is_one {
        let artifact = window.last().expect("window nonempty");
        let verdict =
            engine::member_excluding(&d, artifact, &[window_depth], deep, Budget::default())?;
        if verdict.is_in() {
            rec.pass(format!("r={r}: the window artifact dissolves at greater depth"), 1);
        } else {
            rec.fail(
                format!("r={r}: the window artifact dissolves at greater depth"),
                1,
                format!("{artifact} stayed unreachable without index {window_depth}"),
            );
        }
    } else if b_is_one {
        let verdict = engine::member_excluding(&d, r, &[1], deep, Budget::default())?;
        if !verdict.is_in() {
            rec.pass(format!("r={r}: the single atom resists a depth-12 search"), 1);
        } else {
            rec.fail(
                format!("r={r}: the single atom resists a depth-12 search"),
                1,
                format!("{r} was represented without itself"),
            );
        }
    } else {
        let mut checked = 0u64;
        for (i, g) in window.iter().enumerate() {
            let verdict = engine::member_excluding(&d, g, &[i + 1], deep, Budget::default())?;
            if verdict.is_in() {
                rec.fail(
                    format!("r={r}: every generator resists a depth-12 search"),
                    checked,
                    format!("{g} was represented without index {}", i + 1),
                );
                return Ok(());
            }
            checked += 1;
        }
        rec.pass(format!("r={r}: every generator resists a depth-12 search"), checked);
    }
    Ok(())
}

/// Finite atom listings equal an independent brute-force enumeration on
/// seeded random generator lists, and are always reported exact.
pub fn prop3_2(trials: u64, seed: u64) -> Result<SuiteReport> {
    let mut rec = Recorder::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut compared = 0u64;
    for _ in 0..trials {
        let len = rng.gen_range(1..=8);
        let gens: Vec<Rat> = (0..len).map(|_| random_rat(&mut rng, 20, 12)).collect();
        let d = MonoidDescriptor::finite(gens.clone())?;
        let report = engine::atoms(&d, trunc(10)?)?;
        let brute = engine::brute_force_atoms(&gens)?;
        if report.atoms != brute {
            rec.fail(
                "finite atom listings equal brute-force enumeration",
                compared,
                format!(
                    "generators {}: engine {} vs brute force {}",
                    rat_list(&gens),
                    rat_list(&report.atoms),
                    rat_list(&brute)
                ),
            );
            return Ok(rec.finish("prop3.2", &["Prop 3.2"]));
        }
        if !matches!(report.exactness, Exactness::ExactByIncreasingFilter | Exactness::ClosedForm { .. })
        {
            rec.fail(
                "finite atom listings equal brute-force enumeration",
                compared,
                format!("generators {}: listing was not exact", rat_list(&gens)),
            );
            return Ok(rec.finish("prop3.2", &["Prop 3.2"]));
        }
        compared += 1;
    }
    rec.pass("finite atom listings equal brute-force enumeration", compared);
    Ok(rec.finish("prop3.2", &["Prop 3.2"]))
}

/// Primary monoid membership agrees with a dynamic-programming
/// reachability table over integers at the common scale 2310, for every
/// nonempty subset of {2,3,5,7,11}, every divisor denominator, and all
/// numerators up to 60.
pub fn thm5_9() -> Result<SuiteReport> {
    const SCALE: u64 = 2310;
    const MAX_NUM: u64 = 60;
    let base = [2u64, 3, 5, 7, 11];
    let mut divisors = vec![1u64];
    for &p in &base {
        let scaled: Vec<u64> = divisors.iter().map(|v| v * p).collect();
        divisors.extend(scaled);
    }
    divisors.sort_unstable();

    let mut rec = Recorder::new();
    let mut compared = 0u64;
    for mask in 1u32..(1 << base.len()) {
        let subset: Vec<u64> = base
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &p)| p)
            .collect();
        let d = MonoidDescriptor::primary(PrimeStream::explicit(subset.clone())?);

        // Reachability over multiples of 1/SCALE by steps SCALE/q.
        let limit = (MAX_NUM * SCALE) as usize;
        let mut reach = vec![false; limit + 1];
        reach[0] = true;
        for &q in &subset {
            let step = (SCALE / q) as usize;
            for v in step..=limit {
                if reach[v - step] {
                    reach[v] = true;
                }
            }
        }

        for &den in &divisors {
            for num in 0..=MAX_NUM {
                let x = Rat::new(num, den)?;
                let verdict = engine::member(&d, &x, trunc(10)?, Budget::default())?;
                let scaled = (num * (SCALE / den)) as usize;
                if verdict.is_in() != reach[scaled] {
                    rec.fail(
                        "membership agrees with the reachability table",
                        compared,
                        format!(
                            "P={subset:?}, x={x}: engine said {}, table said {}",
                            verdict.is_in(),
                            reach[scaled]
                        ),
                    );
                    return Ok(rec.finish("thm5.9", &["Thm 5.9", "Cor 5.6"]));
                }
                compared += 1;
            }
        }
    }
    rec.pass("membership agrees with the reachability table", compared);
    Ok(rec.finish("thm5.9", &["Thm 5.9", "Cor 5.6"]))
}

/// Scaling by the common denominator preserves membership: the original
/// and the scaled finite monoid answer identically on seeded queries.
pub fn lemma3_3(trials: u64, seed: u64) -> Result<SuiteReport> {
    let mut rec = Recorder::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut compared = 0u64;
    for _ in 0..trials {
        let len = rng.gen_range(1..=6);
        let gens: Vec<Rat> = (0..len).map(|_| random_rat(&mut rng, 12, 9)).collect();
        let x = random_rat(&mut rng, 24, 9);
        let scale = lcm_denominators(&gens)?;
        let scaled_gens: Vec<Rat> = gens.iter().map(|g| g.scale(&scale)).collect();
        let scaled_x = x.scale(&scale);

        let original = MonoidDescriptor::finite(gens.clone())?;
        let image = MonoidDescriptor::finite(scaled_gens)?;
        let a = engine::member(&original, &x, trunc(10)?, Budget::default())?.is_in();
        let b = engine::member(&image, &scaled_x, trunc(10)?, Budget::default())?.is_in();
        if a != b {
            rec.fail(
                "membership is invariant under denominator scaling",
                compared,
                format!("generators {}, x={x}: {a} vs {b} after scaling", rat_list(&gens)),
            );
            return Ok(rec.finish("lemma3.3", &["Lemma 3.3"]));
        }
        compared += 1;
    }
    rec.pass("membership is invariant under denominator scaling", compared);
    Ok(rec.finish("lemma3.3", &["Lemma 3.3"]))
}

/// Numerical semigroup invariants agree with direct definition-level
/// scans: Apery set size, Frobenius number, genus, and eventual
/// membership past the Frobenius number.
pub fn ns_consistency(count: u64, seed: u64) -> Result<SuiteReport> {
    let mut rec = Recorder::new();

    // Fixed landmarks with hand-checked values.
    let s35 = NumericalSemigroup::from_integers(&[3, 5])?;
    let s6920 = NumericalSemigroup::from_integers(&[6, 9, 20])?;
    let landmarks_ok = s35.frobenius()? == Frobenius::Finite(7)
        && s35.genus()? == 4
        && s6920.frobenius()? == Frobenius::Finite(43);
    if landmarks_ok {
        rec.pass("fixed landmarks <3,5> and <6,9,20>", 3);
    } else {
        rec.fail(
            "fixed landmarks <3,5> and <6,9,20>",
            3,
            format!("<3,5>: {:?}, genus {:?}; <6,9,20>: {:?}", s35.frobenius(), s35.genus(), s6920.frobenius()),
        );
        return Ok(rec.finish("ns", &[]));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0u64;
    while done < count {
        let len = rng.gen_range(2..=5);
        let gens: Vec<u64> = (0..len).map(|_| rng.gen_range(2..=50u64)).collect();
        if gens.iter().fold(0u64, |acc, &g| acc.gcd(&g)) != 1 {
            continue;
        }
        let s = NumericalSemigroup::from_integers(&gens)?;
        let m = s.multiplicity();
        let apery = s.apery(m)?;
        let Frobenius::Finite(f) = s.frobenius()? else {
            rec.fail(
                "seeded invariant consistency",
                done,
                format!("{gens:?}: content 1 but Frobenius infinite"),
            );
            return Ok(rec.finish("ns", &[]));
        };
        let apery_max = *apery.iter().max().expect("apery set nonempty") as i64;
        if apery.len() as u64 != m || f != apery_max - m as i64 {
            rec.fail(
                "seeded invariant consistency",
                done,
                format!("{gens:?}: apery {apery:?} vs m={m}, F={f}"),
            );
            return Ok(rec.finish("ns", &[]));
        }

        // Direct scan: the largest gap below F + 2m must be F itself,
        // which simultaneously confirms membership on (F, F+2m], and the
        // number of gaps must be the genus.
        let bound = f.max(0) as u64 + 2 * m;
        let mut largest_gap: i64 = -1;
        let mut gaps = 0u64;
        for v in 0..=bound {
            if s.contains(v)?.is_none() {
                largest_gap = v as i64;
                gaps += 1;
            }
        }
        if largest_gap != f || gaps != s.genus()? {
            rec.fail(
                "seeded invariant consistency",
                done,
                format!("{gens:?}: scan found largest gap {largest_gap}, {gaps} gaps"),
            );
            return Ok(rec.finish("ns", &[]));
        }
        done += 1;
    }
    rec.pass("seeded invariant consistency", done);
    Ok(rec.finish("ns", &[]))
}

/// Partial sums of prime reciprocals: every listed generator is an atom
/// (brute force at the common scale for the first six), the listing is
/// exact, and the sums exceed 2 within the first hundred primes.
pub fn prop5_4() -> Result<SuiteReport> {
    let mut rec = Recorder::new();
    let d = MonoidDescriptor::psums_primary(PrimeStream::all());
    let gens = d.generators_up_to(trunc(6)?)?;

    let report = engine::atoms(&d, trunc(6)?)?;
    let exact = matches!(
        report.exactness,
        Exactness::ExactByIncreasingFilter | Exactness::ClosedForm { .. }
    );
    if report.atoms == gens && exact && !report.antimatter_flag {
        rec.pass("every partial sum is listed as an atom, exactly", gens.len() as u64);
    } else {
        rec.fail(
            "every partial sum is listed as an atom, exactly",
            gens.len() as u64,
            format!("engine listed {}", rat_list(&report.atoms)),
        );
        return Ok(rec.finish("prop5.4", &["Prop 5.4"]));
    }

    let brute = engine::brute_force_atoms(&gens)?;
    let mut sorted = gens.clone();
    sorted.sort();
    if brute == sorted {
        rec.pass("brute force at the common scale agrees", gens.len() as u64);
    } else {
        rec.fail(
            "brute force at the common scale agrees",
            gens.len() as u64,
            format!("brute force listed {}", rat_list(&brute)),
        );
        return Ok(rec.finish("prop5.4", &["Prop 5.4"]));
    }

    // Divergence in practice: the sums pass 2 within the first hundred.
    let deep = d.generators_up_to(trunc(100)?)?;
    let two = Rat::from_integer(2u64);
    match deep.iter().position(|s| *s > two) {
        Some(i) => rec.pass(
            format!("partial sums first exceed 2 at index {}", i + 1),
            (i + 1) as u64,
        ),
        None => rec.fail(
            "partial sums first exceed 2 within 100 terms",
            deep.len() as u64,
            format!("the 100th sum is still {}", deep.last().expect("nonempty")),
        ),
    }
    Ok(rec.finish("prop5.4", &["Prop 5.4"]))
}

/// Reciprocal sums over a coprime progression: the stream is judged
/// substantial and the Mertens offsets stabilize, successive checkpoints
/// differing by less than 0.05.
pub fn eq5_3(m: u64, n: u64, x: u64) -> Result<SuiteReport> {
    let mut rec = Recorder::new();
    let stream = PrimeStream::ap(m, n)?;
    let mut checkpoints = Vec::new();
    let mut c = 10_000u64;
    while c < x {
        checkpoints.push(c);
        c = c.saturating_mul(10);
    }
    checkpoints.push(x.max(2));
    checkpoints.dedup();

    let report = engine::is_substantial(&stream, &checkpoints)?;
    use puiseux_core::engine::Substantiality;
    if report.verdict == Substantiality::Substantial {
        rec.pass(format!("ap({m},{n}) is substantial"), 1);
    } else {
        rec.fail(
            format!("ap({m},{n}) is substantial"),
            1,
            "stream was judged insubstantial".to_string(),
        );
        return Ok(rec.finish("eq5.3", &["Eq 5.3"]));
    }

    for (cp, off) in &report.mertens_offsets {
        rec.pass(format!("approximate offset at x={cp}: {off:+.7}"), 1);
    }
    let mut stable = 0u64;
    for pair in report.mertens_offsets.windows(2) {
        let drift = (pair[1].1 - pair[0].1).abs();
        if drift >= 0.05 {
            rec.fail(
                "successive offsets differ by less than 0.05",
                stable,
                format!(
                    "x={} to x={}: drift {:.4}",
                    pair[0].0, pair[1].0, drift
                ),
            );
            return Ok(rec.finish("eq5.3", &["Eq 5.3"]));
        }
        stable += 1;
    }
    rec.pass("successive offsets differ by less than 0.05", stable);
    Ok(rec.finish("eq5.3", &["Eq 5.3"]))
}

/// Bounded geometric partial sums: all generators stay below the limit,
/// increase strictly, any two of them sum past the largest one, and the
/// atom listing is the full closed-form window.
pub fn ex6_4() -> Result<SuiteReport> {
    let mut rec = Recorder::new();
    let half = Rat::make(1, 2)?;
    let d = MonoidDescriptor::geo_psums(half)?;
    let gens = d.generators_up_to(trunc(20)?)?;
    let one = Rat::one();

    let below = gens.iter().all(|g| *g < one);
    let increasing = gens.windows(2).all(|w| w[0] < w[1]);
    if below && increasing {
        rec.pass("twenty generators increase strictly below the limit 1", gens.len() as u64);
    } else {
        rec.fail(
            "twenty generators increase strictly below the limit 1",
            gens.len() as u64,
            rat_list(&gens),
        );
        return Ok(rec.finish("ex6.4", &["Ex 6.4"]));
    }

    // Pairwise sums leave the window: 2 * smallest >= limit.
    let doubled = &gens[0] + &gens[0];
    if doubled >= one {
        rec.pass("any two generators sum to at least the limit", 1);
    } else {
        rec.fail(
            "any two generators sum to at least the limit",
            1,
            format!("2 * {} = {doubled} < 1", gens[0]),
        );
        return Ok(rec.finish("ex6.4", &["Ex 6.4"]));
    }

    let report = engine::atoms(&d, trunc(20)?)?;
    let closed_form = matches!(report.exactness, Exactness::ClosedForm { .. });
    if report.atoms == gens && closed_form && !report.antimatter_flag {
        rec.pass("the atom listing is the whole window, by closed form", gens.len() as u64);
    } else {
        rec.fail(
            "the atom listing is the whole window, by closed form",
            gens.len() as u64,
            format!("engine listed {}", rat_list(&report.atoms)),
        );
        return Ok(rec.finish("ex6.4", &["Ex 6.4"]));
    }

    let window = &gens[..8];
    let brute = engine::brute_force_atoms(window)?;
    if brute == window {
        rec.pass("brute force confirms the first eight", 8);
    } else {
        rec.fail(
            "brute force confirms the first eight",
            8,
            format!("brute force listed {}", rat_list(&brute)),
        );
    }
    Ok(rec.finish("ex6.4", &["Ex 6.4"]))
}

/// Unbounded geometric partial sums: the witness construction verifies
/// to depth twelve, so the terms increase, outgrow their index, and
/// resist representation by earlier terms along two independent routes.
pub fn prop6_5() -> Result<SuiteReport> {
    let mut rec = Recorder::new();
    let r = Rat::make(2, 3)?;
    let report = witnesses::witness_unbounded_geo(&r, 12)?;
    if report.is_verified() {
        rec.pass("the twelve-term unbounded witness verifies", 12);
    } else {
        rec.fail(
            "the twelve-term unbounded witness verifies",
            12,
            format!("{:?}", report.verdict),
        );
        return Ok(rec.finish("prop6.5", &["Prop 6.5"]));
    }

    let gens = report.generators;
    let unbounded = gens
        .iter()
        .enumerate()
        .all(|(i, s)| *s > Rat::from_integer((i + 1) as u64));
    if unbounded {
        rec.pass("every term exceeds its index", gens.len() as u64);
    } else {
        rec.fail(
            "every term exceeds its index",
            gens.len() as u64,
            rat_list(&gens),
        );
    }
    Ok(rec.finish("prop6.5", &["Prop 6.5"]))
}

/// Antimatter monoids: for several reciprocal ratios, the atom listing
/// is empty with the antimatter flag set, each generator is an exact
/// multiple of the next, and each dissolves into deeper generators.
pub fn antimatter() -> Result<SuiteReport> {
    let mut rec = Recorder::new();
    for b in [2u64, 3, 10] {
        let r = Rat::new(1u64, b)?;
        let d = MonoidDescriptor::geometric(r.clone())?;

        let report = engine::atoms(&d, trunc(12)?)?;
        if report.atoms.is_empty() && report.antimatter_flag {
            rec.pass(format!("r=1/{b}: no atoms, antimatter flag set"), 1);
        } else {
            rec.fail(
                format!("r=1/{b}: no atoms, antimatter flag set"),
                1,
                format!("engine listed {}", rat_list(&report.atoms)),
            );
            continue;
        }

        let gens = d.generators_up_to(trunc(13)?)?;
        let factor = BigUint::from(b);
        let chain = (0..12).all(|k| gens[k] == gens[k + 1].scale(&factor));
        if chain {
            rec.pass(format!("r=1/{b}: each generator is {b} times the next"), 12);
        } else {
            rec.fail(
                format!("r=1/{b}: each generator is {b} times the next"),
                12,
                rat_list(&gens),
            );
            continue;
        }

        let mut dissolved = 0u64;
        for k in 0..12usize {
            let verdict =
                engine::member_excluding(&d, &gens[k], &[k + 1], trunc(13)?, Budget::default())?;
            if !verdict.is_in() {
                rec.fail(
                    format!("r=1/{b}: every generator dissolves without itself"),
                    dissolved,
                    format!("{} stayed unreachable", gens[k]),
                );
                break;
            }
            dissolved += 1;
        }
        if dissolved == 12 {
            rec.pass(format!("r=1/{b}: every generator dissolves without itself"), 12);
        }
    }
    Ok(rec.finish("antimatter", &["Thm 6.2", "Cor 6.3"]))
}

/// Denominator support of sums: the support of a sum of seeded elements
/// stays inside the union of the supports of its parts.
pub fn lemma5_8(trials: u64, seed: u64) -> Result<SuiteReport> {
    use puiseux_core::exactnum::{dp_support, dp_support_union};
    let mut rec = Recorder::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all = PrimeStream::all();
    let mut compared = 0u64;
    for _ in 0..trials {
        let k = rng.gen_range(1..=4);
        let parts: Vec<Rat> = (0..k).map(|_| random_rat(&mut rng, 30, 30)).collect();
        let sum = parts
            .iter()
            .fold(Rat::zero(), |acc, p| &acc + p);
        let union = dp_support_union(&parts, &all)?;
        let support = dp_support(&sum, &all)?;
        if !support.is_subset(&union) {
            rec.fail(
                "the support of a sum stays inside the union",
                compared,
                format!("parts {}: support {support:?} vs union {union:?}", rat_list(&parts)),
            );
            return Ok(rec.finish("lemma5.8", &["Lemma 5.8"]));
        }
        compared += 1;
    }
    rec.pass("the support of a sum stays inside the union", compared);
    Ok(rec.finish("lemma5.8", &["Lemma 5.8"]))
}

/// Run every suite at the given scale and aggregate the check lines.
pub fn all(scale: &str, seed: u64) -> Result<SuiteReport> {
    let factor: u64 = match scale {
        "desk" => 1,
        "deep" => 4,
        other => {
            return Err(Error::InvalidArgument(format!(
                "unknown scale {other:?}; expected desk or deep"
            )))
        }
    };
    let reports = vec![
        thm6_2(None, 8)?,
        prop3_2(200 * factor, seed)?,
        thm5_9()?,
        lemma3_3(500 * factor, seed)?,
        ns_consistency(100 * factor, seed)?,
        prop5_4()?,
        eq5_3(1, 4, 1_000_000)?,
        ex6_4()?,
        prop6_5()?,
        antimatter()?,
        lemma5_8(200 * factor, seed)?,
    ];
    let mut checks = Vec::new();
    let mut citations = BTreeSet::new();
    for report in reports {
        citations.extend(report.citations);
        for check in report.checks {
            checks.push(Check {
                label: format!("{}: {}", report.suite, check.label),
                ..check
            });
        }
    }
    let passed = checks.iter().all(|c| c.ok);
    Ok(SuiteReport {
        suite: format!("all ({scale})"),
        citations: citations.into_iter().collect(),
        checks,
        passed,
    })
}
