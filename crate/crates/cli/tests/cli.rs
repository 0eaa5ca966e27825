//! End-to-end tests of the `linlog` binary: output shapes, exit codes,
//! and determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let mut path = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    path.push("tests/data");
    path.push(name);
    path.to_string_lossy().into_owned()
}

fn linlog(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linlog"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

#[test]
fn parse_renders_normal_forms() {
    let out = linlog(&["parse", "A -o B", "--nnf"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "A^ | B\n");

    let out = linlog(&["parse", "(A * B)^", "--nnf"]);
    assert_eq!(stdout(&out), "A^ | B^\n");

    let out = linlog(&["parse", "A * (B + C)"]);
    assert_eq!(stdout(&out), "A * (B + C)\n");
}

#[test]
fn parse_syntax_errors_exit_2_with_offset() {
    let out = linlog(&["parse", "A & + B"]);
    assert_eq!(code(&out), 2);
    assert!(
        stderr(&out).contains("offset 5"),
        "stderr: {}",
        stderr(&out)
    );
}

#[test]
fn eval_reproduces_the_survey_values() {
    let env = data("example.env");
    for (formula, expected) in [
        ("rainy & windy", "(0.3, 10)\n"),
        ("rainy + windy", "(0.5, 20)\n"),
        ("rainy * windy", "(0.15, 2)\n"),
        ("rainy | windy", "(0.65, 28)\n"),
    ] {
        let out = linlog(&["eval", formula, &env]);
        assert_eq!(code(&out), 0, "{formula}: {}", stderr(&out));
        assert_eq!(stdout(&out), expected, "{formula}");
    }
}

#[test]
fn eval_unbound_atom_exits_3() {
    let out = linlog(&["eval", "nonsuch", &data("example.env")]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("nonsuch"));
}

#[test]
fn eval_report_shows_subformula_values() {
    let out = linlog(&["eval", "rainy & windy", &data("example.env"), "--report"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("rainy & windy = (0.3, 10)"), "{text}");
    assert!(text.contains("rainy = (0.5, 20)"), "{text}");
}

#[test]
fn eval_rejects_bad_env_files() {
    let out = linlog(&["eval", "rainy", &data("modus_ponens.proof")]);
    assert_eq!(code(&out), 2);
    let out = linlog(&["eval", "rainy", "/no/such/file.env"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn check_accepts_a_valid_proof_and_prints_the_ledger() {
    let out = linlog(&["check", &data("modus_ponens.proof")]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("valid\n"), "{text}");
    assert!(text.contains("consumed: A x1 B x1"), "{text}");
}

#[test]
fn check_verifies_a_two_sided_conclusion() {
    let out = linlog(&[
        "check",
        &data("modus_ponens.proof"),
        "--conclusion",
        "(A -o B) * A |- B",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));

    let out = linlog(&["check", &data("modus_ponens.proof"), "--conclusion", "|- B"]);
    assert_eq!(code(&out), 4);
    assert!(stdout(&out).contains("expected"), "{}", stdout(&out));
}

#[test]
fn check_annotates_with_an_environment() {
    let out = linlog(&[
        "check",
        &data("modus_ponens.proof"),
        "--env",
        &data("abc.env"),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    // |- A^, A at A = (0.3, 10) folds to 0.79 strength over 19 observations.
    assert!(stdout(&out).contains("(0.79, 19)"), "{}", stdout(&out));
}

#[test]
fn check_rejects_an_invalid_proof_with_its_path() {
    let out = linlog(&["check", &data("contract_plain.proof")]);
    assert_eq!(code(&out), 4);
    let text = stdout(&out);
    assert!(text.contains("contract?"), "{text}");
    assert!(text.contains("at root"), "{text}");
}

#[test]
fn check_accepts_the_distributivity_proof() {
    let out = linlog(&[
        "check",
        &data("distributivity.proof"),
        "--env",
        &data("abc.env"),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(
        stdout(&out).contains("consumed: A x2 B x1 C x1"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn oracle_indep_passes_at_the_survey_parameters() {
    let out = linlog(&[
        "oracle", "indep", "--na", "20", "--pa", ".5", "--nb", "10", "--pb", ".3", "--N", "100",
        "--trials", "20000", "--seed", "7",
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("overall: PASS"), "{text}");
    assert_eq!(text.matches("PASS").count(), 5, "{text}");
}

#[test]
fn oracle_rejects_bad_parameters() {
    let out = linlog(&[
        "oracle", "indep", "--na", "20", "--pa", ".5", "--nb", "10", "--pb", ".3", "--N", "100",
        "--trials", "0",
    ]);
    assert_eq!(code(&out), 2);
    let out = linlog(&[
        "oracle", "indep", "--na", "200", "--pa", ".5", "--nb", "10", "--pb", ".3", "--N", "100",
    ]);
    assert_eq!(code(&out), 2);
    let out = linlog(&["oracle", "frob"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn oracle_detector_matches_the_product_reading() {
    let out = linlog(&[
        "oracle", "detector", "--bt", ".7", "--bc", ".8", "--ticks", "500", "--trials", "500",
        "--seed", "7",
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("combined min: 0.7"), "{text}");
    assert!(text.contains("overall: PASS"), "{text}");
}

#[test]
fn selftest_single_suite_passes() {
    let out = linlog(&["selftest", "--suite", "tnorm"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("suite tnorm: PASS"));

    let out = linlog(&["selftest", "--suite", "nonsuch"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn json_reports_are_byte_stable() {
    let args = [
        "oracle", "indep", "--na", "20", "--pa", ".5", "--nb", "10", "--pb", ".3", "--N", "100",
        "--trials", "2000", "--seed", "3", "--json",
    ];
    let first = linlog(&args);
    let second = linlog(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(stdout(&first), stdout(&second));
    let text = stdout(&first);
    assert!(
        text.starts_with('{') && text.trim_end().ends_with('}'),
        "{text}"
    );
    assert!(text.contains("\"command\":\"oracle indep\""), "{text}");
    assert!(text.contains("\"seed\":3"), "{text}");
}

#[test]
fn json_eval_includes_the_value_object() {
    let out = linlog(&["eval", "rainy * windy", &data("example.env"), "--json"]);
    assert_eq!(code(&out), 0);
    assert!(
        stdout(&out).contains("\"value\":{\"strength\":0.15,\"count\":2}"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn help_prints_usage() {
    let out = linlog(&["help"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("usage: linlog"));

    let out = linlog(&[]);
    assert_eq!(code(&out), 2);
}
