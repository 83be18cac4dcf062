//! End-to-end tests of the command-line interface: exit codes, report
//! shapes, dump round-trips, and byte-level determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn ultracalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ultracalc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8 output")
}

#[test]
fn validate_fixture_passes() {
    let model = fixture("line_wedge.json");
    let out = ultracalc(&["validate", "--model", model.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("RESULT PASS"));
    assert!(text.contains("poset wedge"));
    assert!(text.contains("functional mixed"));
}

#[test]
fn missing_file_is_usage_error() {
    let out = ultracalc(&["validate", "--model", "/nonexistent/file.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parse_errors_carry_line_and_column() {
    let tmp = std::env::temp_dir().join("ultracalc_broken_model.json");
    std::fs::write(&tmp, "{\n  \"posets\": {\n    \"p\": { oops\n}}").unwrap();
    let out = ultracalc(&["validate", "--model", tmp.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line") && err.contains("column"), "stderr: {err}");
    std::fs::remove_file(&tmp).ok();

    // a syntactically valid file with a bad rational is also a usage error
    let tmp2 = std::env::temp_dir().join("ultracalc_bad_rational.json");
    std::fs::write(
        &tmp2,
        r#"{"forms": {"f": {"matrix": [["1/0"]]}}}"#,
    )
    .unwrap();
    let out2 = ultracalc(&["validate", "--model", tmp2.to_str().unwrap()]);
    assert_eq!(out2.status.code(), Some(2));
    std::fs::remove_file(&tmp2).ok();
}

#[test]
fn unknown_reference_is_usage_error() {
    let model = fixture("line_wedge.json");
    let out = ultracalc(&[
        "colimit",
        "--model",
        model.to_str().unwrap(),
        "--system",
        "no_such_system",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn colimit_of_negated_square_is_zero() {
    let model = fixture("line_wedge.json");
    let out = ultracalc(&[
        "colimit",
        "--model",
        model.to_str().unwrap(),
        "--system",
        "negated_square",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("dim 0"));
}

#[test]
fn colimit_subset_restricts() {
    let model = fixture("line_wedge.json");
    let out = ultracalc(&[
        "colimit",
        "--model",
        model.to_str().unwrap(),
        "--system",
        "coordinate_wedge",
        "--subset",
        "zero,plus",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("dim 2"));
}

#[test]
fn check_broken_system_exits_one_with_counterexample() {
    let model = fixture("line_wedge.json");
    let out = ultracalc(&[
        "check",
        "--model",
        model.to_str().unwrap(),
        "--system",
        "broken_rank",
        "--conditions",
        "I",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL condition I"));
    assert!(text.contains("counterexample"));
    assert!(text.contains("RESULT FAIL"));
}

#[test]
fn check_coordinate_wedge_passes_all_conditions() {
    let model = fixture("line_wedge.json");
    let out = ultracalc(&[
        "check",
        "--model",
        model.to_str().unwrap(),
        "--system",
        "coordinate_wedge",
        "--conditions",
        "I,II,III,IIIprime",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("RESULT PASS"));
}

#[test]
fn fourier_of_unit_mass_prints_canonical_pair() {
    let model = fixture("line_wedge.json");
    let out =
        ultracalc(&["fourier", "--model", model.to_str().unwrap(), "--functional", "unit_mass"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "(1 | 0)");
}

#[test]
fn fourier_of_segment() {
    let model = fixture("line_wedge.json");
    let out = ultracalc(&[
        "fourier",
        "--model",
        model.to_str().unwrap(),
        "--functional",
        "decaying_segment",
    ]);
    assert_eq!(out.status.code(), Some(0));
    // i/(z+i), nothing below
    let text = stdout(&out);
    assert!(text.contains("| 0)"));
    assert!(text.contains("(z-(-1i))"));
}

#[test]
fn pushforward_dump_reparses_to_an_equal_structure() {
    let model = fixture("line_wedge.json");
    let out = ultracalc(&[
        "pushforward",
        "--model",
        model.to_str().unwrap(),
        "--system",
        "coordinate_wedge",
        "--morphism",
        "wedge_inclusion",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    let doc: serde_json::Value = serde_json::from_str(&text).expect("dump is a model document");
    let dims = &doc["systems"]["coordinate_wedge_pushforward"]["dims"];
    assert_eq!(dims["line"], 3);
    assert_eq!(dims["plus"], 2);
    // write the dump to a file and run the CLI on it again
    let tmp = std::env::temp_dir().join("ultracalc_pushforward_roundtrip.json");
    std::fs::write(&tmp, &text).unwrap();
    let out2 = ultracalc(&[
        "colimit",
        "--model",
        tmp.to_str().unwrap(),
        "--system",
        "coordinate_wedge_pushforward",
    ]);
    assert_eq!(out2.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out2.stderr));
    assert!(stdout(&out2).contains("dim 3"));
    std::fs::remove_file(&tmp).ok();
}

#[test]
fn cone_generated_posets_feed_the_pushforward() {
    let model = fixture("line_wedge.json");
    // the derived inclusion morphism between the meet-closure and its
    // union lattice carries the system to the lattice, where the top
    // element (the whole line) gets the glued three-dimensional space
    let out = ultracalc(&[
        "pushforward",
        "--model",
        model.to_str().unwrap(),
        "--system",
        "over_halflines",
        "--morphism",
        "halfline_inclusion",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let dims = &doc["systems"]["over_halflines_pushforward"]["dims"];
    assert_eq!(dims["B0"], 1);
    assert_eq!(dims["B1"], 2);
    assert_eq!(dims["B2"], 2);
    assert_eq!(dims["B3"], 3);
    // validate names the carried cones
    let out2 = ultracalc(&["validate", "--model", model.to_str().unwrap()]);
    let text = stdout(&out2);
    assert!(text.contains("A0={0}"));
    assert!(text.contains("halfline+"));
}

#[test]
fn cover_dump_reparses() {
    let out = ultracalc(&["cover", "--vectors", "1,0;0,1;-1,-1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let tmp = std::env::temp_dir().join("ultracalc_cover_roundtrip.json");
    std::fs::write(&tmp, &text).unwrap();
    let out2 = ultracalc(&["validate", "--model", tmp.to_str().unwrap()]);
    assert_eq!(out2.status.code(), Some(0));
    let validated = stdout(&out2);
    assert!(validated.contains("cone K1"));
    assert!(validated.contains("cone Gamma3"));
    assert!(validated.contains("cone V12"));
    std::fs::remove_file(&tmp).ok();
}

#[test]
fn degenerate_cover_rejected() {
    let out = ultracalc(&["cover", "--vectors", "1,0;1,0;0,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cover_with_a_named_form() {
    let model = fixture("line_wedge.json");
    let out = ultracalc(&[
        "cover",
        "--vectors",
        "1,0;0,1;-1,-1",
        "--model",
        model.to_str().unwrap(),
        "--form",
        "skew",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("Gamma1"));
}

#[test]
fn selftest_is_deterministic() {
    let run = || {
        let out = ultracalc(&[
            "selftest",
            "--suite",
            "sign-algebra",
            "--seed",
            "42",
            "--format",
            "structured",
        ]);
        assert_eq!(out.status.code(), Some(0));
        stdout(&out)
    };
    let first = run();
    let second = run();
    assert_eq!(first, second, "identical flags and seed must give identical bytes");
    assert!(first.contains("\"pass\": true"));
}

#[test]
fn selftest_unknown_suite_is_usage_error() {
    let out = ultracalc(&["selftest", "--suite", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn structured_check_output_is_json() {
    let model = fixture("line_wedge.json");
    let out = ultracalc(&[
        "check",
        "--model",
        model.to_str().unwrap(),
        "--system",
        "coordinate_wedge",
        "--conditions",
        "I",
        "--format",
        "structured",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["pass"], true);
}
