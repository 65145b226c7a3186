//! End-to-end tests of the pm binary: documented invocations, exit
//! codes, output grammar, and the emit round trip.

use std::process::Command;

use puiseux_core::descriptors::MonoidDescriptor;
use puiseux_core::exactnum::Rat;

fn pm(args: &[&str]) -> (String, String, i32) {
    let output = Command::new(env!("CARGO_BIN_EXE_pm"))
        .args(args)
        .output()
        .expect("pm binary runs");
    (
        String::from_utf8(output.stdout).expect("stdout is utf-8"),
        String::from_utf8(output.stderr).expect("stderr is utf-8"),
        output.status.code().expect("pm exits normally"),
    )
}

#[test]
fn classify_bounded_geometric_reports_the_trichotomy_flags() {
    let (stdout, _, code) = pm(&["classify", "geometric:2/3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("Atomic"), "missing atomicity: {stdout}");
    assert!(
        stdout.contains("bounded, not strongly bounded"),
        "missing boundedness line: {stdout}"
    );
    assert!(
        stdout.contains("citations [Thm 6.2, Cor 6.3]"),
        "missing citations line: {stdout}"
    );
}

#[test]
fn member_prints_an_explicit_representation() {
    let (stdout, _, code) = pm(&["member", "primary:2,3", "5/6"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "In: 1/2 + 1/3");
}

#[test]
fn member_prints_the_refuting_prime() {
    let (stdout, _, code) = pm(&["member", "geometric:2/3", "1/3"]);
    assert_eq!(code, 1);
    assert_eq!(stdout.trim(), "NotIn: valuation obstruction at p=2");
}

#[test]
fn member_repeated_generator_uses_multiplicity_notation() {
    let (stdout, _, code) = pm(&["member", "finite:1/2", "3/2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "In: 3*(1/2)");
}

#[test]
fn witness_psums_golden() {
    let (stdout, _, code) = pm(&["witness", "psums", "--primes", "all", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("[1/2, 5/6, 31/30]"), "wrong generators: {stdout}");
    assert!(stdout.contains("Verified"), "not verified: {stdout}");
}

#[test]
fn witness_unbounded_geo_golden() {
    let (stdout, _, code) = pm(&["witness", "unbounded-geo", "--r", "2/3", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("[8/3, 76/9, 656/27]"), "wrong generators: {stdout}");
    assert!(stdout.contains("Verified"), "not verified: {stdout}");
}

#[test]
fn witness_infinite_atoms_golden() {
    let (stdout, _, code) =
        pm(&["witness", "infinite-atoms", "--of", "geometric:1/2", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("[1/2, 3/4, 7/8]"), "wrong atoms: {stdout}");
    assert!(stdout.contains("Verified"), "not verified: {stdout}");
}

#[test]
fn witness_example_ab_names_both_cluster_points() {
    let (stdout, _, code) = pm(&["witness", "example-ab", "--n", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("[1/3, 1/7, 1/2, 4/5]"), "wrong generators: {stdout}");
    assert!(
        stdout.contains("cluster points 0 and 1"),
        "narrative must name the cluster points: {stdout}"
    );
}

#[test]
fn verify_trichotomy_at_a_single_ratio_passes() {
    let (stdout, _, code) = pm(&["verify", "thm6.2", "--r", "2/3", "--depth", "8"]);
    assert_eq!(code, 0);
    assert!(stdout.trim_end().ends_with("PASS"), "expected PASS: {stdout}");
}

#[test]
fn verify_seeded_suite_is_deterministic() {
    let first = pm(&["verify", "prop3.2", "--trials", "200", "--seed", "7"]);
    let second = pm(&["verify", "prop3.2", "--trials", "200", "--seed", "7"]);
    assert_eq!(first.2, 0);
    assert!(first.0.trim_end().ends_with("PASS"), "expected PASS: {}", first.0);
    assert_eq!(first.0, second.0, "same seed must reproduce the same report");
}

#[test]
fn verify_mertens_offsets_stabilize_and_are_labeled_approximate() {
    let (stdout, _, code) =
        pm(&["verify", "eq5.3", "--m", "1", "--n", "4", "--x", "100000"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("approximate offset"), "offsets must be labeled: {stdout}");
    assert!(stdout.trim_end().ends_with("PASS"), "expected PASS: {stdout}");
}

#[test]
fn structured_output_is_one_json_document_with_exact_rationals() {
    let (stdout, _, code) = pm(&["member", "primary:2,3", "5/6", "--format", "structured"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout).expect("valid JSON");
    for field in ["verb", "input", "verdict", "citations", "data"] {
        assert!(doc.get(field).is_some(), "missing field {field}: {stdout}");
    }
    assert_eq!(doc["verdict"], "in");

    let (stdout, _, code) = pm(&["atoms", "geometric:2/3", "--format", "structured"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout).expect("valid JSON");
    let atoms = doc["data"]["atoms"].as_array().expect("atoms array");
    assert_eq!(atoms[0], "2/3");
    assert_eq!(atoms[1], "4/9", "rationals must serialize as a/b: {stdout}");
}

#[test]
fn emitted_witness_descriptor_reparses_to_the_same_generators() {
    let dir = std::env::temp_dir().join("pm-emit-test");
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join("psums.descriptor");
    let path_text = path.to_str().expect("utf-8 path");

    let (_, _, code) =
        pm(&["witness", "psums", "--primes", "all", "--n", "4", "--emit", path_text]);
    assert_eq!(code, 0);

    let emitted = std::fs::read_to_string(&path).expect("emitted file");
    let parsed: MonoidDescriptor = emitted.trim().parse().expect("emitted text reparses");
    let MonoidDescriptor::Finite { generators } = parsed else {
        panic!("witness emits a finite descriptor, got {}", emitted.trim());
    };
    let expected: Vec<Rat> = ["1/2", "5/6", "31/30", "247/210"]
        .iter()
        .map(|t| t.parse().expect("rational"))
        .collect();
    assert_eq!(generators, expected);
    std::fs::remove_file(&path).ok();
}

#[test]
fn substantial_reports_exact_totals_for_finite_streams() {
    let (stdout, _, code) = pm(&["substantial", "2,3,5"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("insubstantial"), "finite stream verdict: {stdout}");
    assert!(stdout.contains("31/30"), "exact total must be printed: {stdout}");
}

#[test]
fn ns_reports_the_selmer_invariants() {
    let (stdout, _, code) = pm(&["ns", "6,9,20"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("frobenius: 43"), "wrong Frobenius number: {stdout}");
    assert!(stdout.contains("genus: 22"), "wrong genus: {stdout}");
    assert!(stdout.contains("multiplicity: 6"), "wrong multiplicity: {stdout}");
}

#[test]
fn usage_errors_exit_sixty_four() {
    let cases: &[&[&str]] = &[
        &["classify", "bogus:1"],
        &["member", "primary:2,3", "five"],
        &["verify", "nonsense"],
        &["atoms", "geometric:2/3", "--depth", "0"],
        &["member"],
    ];
    for args in cases {
        let (_, stderr, code) = pm(args);
        assert_eq!(code, 64, "args {args:?} must be a usage error; stderr: {stderr}");
    }
}

#[test]
fn exhausted_budget_exits_two() {
    let (stdout, _, code) = pm(&["member", "geometric:2/3", "100/6561", "--budget", "2"]);
    assert_eq!(code, 2, "tiny budget must leave the query undecided: {stdout}");
    assert!(stdout.contains("UnknownAtDepth"), "verdict line: {stdout}");
}

#[test]
fn text_reports_contain_no_decimal_rationals() {
    // Membership, atoms, classification, and witness reports are exact:
    // the only dotted tokens allowed are result tags like "Thm 6.2". A
    // bare decimal number would mean a float leaked in.
    for args in [
        vec!["classify", "geometric:2/3"],
        vec!["atoms", "geometric:3/2"],
        vec!["member", "primary:2,3", "5/6"],
        vec!["witness", "geo-psums", "--r", "1/2", "--n", "4"],
        vec!["ns", "6,9,20"],
    ] {
        let (stdout, _, _) = pm(&args);
        let tokens: Vec<&str> = stdout.split_whitespace().collect();
        for (i, token) in tokens.iter().enumerate() {
            if !token.contains('.') {
                continue;
            }
            let prev = if i > 0 { tokens[i - 1].trim_start_matches(['[', '(']) } else { "" };
            assert!(
                matches!(prev, "Thm" | "Prop" | "Cor" | "Lemma" | "Eq" | "Ex"),
                "unexpected dotted token {token:?} in {args:?} output: {stdout}"
            );
        }
    }
}
