use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_unaware");

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}.model", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn eval_unawareness() {
    let three = fixture("three_state");
    let o = run(&["eval", &three, "--op", "U", "--event", "{a}"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{c}\n");
    let o = run(&["eval", &three, "--op", "negK", "--event", "{a}"]);
    assert_eq!(stdout(&o), "{b,c}\n");
}

#[test]
fn eval_revised_aliases() {
    let four = fixture("four_state");
    for op in ["K'", "Krev"] {
        let o = run(&["eval", &four, "--op", op, "--event", "{a,b,c,d}"]);
        assert_eq!(stdout(&o), "{a,b,d}\n", "{op}");
    }
    let o = run(&["eval", &four, "--op", "U'", "--event", "{a}"]);
    assert_eq!(stdout(&o), "{c,d}\n");
}

#[test]
fn eval_verbose_shows_iterates() {
    let o = run(&[
        "eval",
        &fixture("four_state"),
        "--op",
        "Urev",
        "--event",
        "{a}",
        "--verbose",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("repeats"), "{text}");
    let o = run(&[
        "--format",
        "structured",
        "eval",
        &fixture("four_state"),
        "--op",
        "Urev",
        "--event",
        "{a}",
        "--verbose",
    ]);
    let v = json(&o);
    assert_eq!(v["format"], 1);
}

#[test]
fn check_reports_failures_with_exit_one() {
    let o = run(&["check", &fixture("four_state"), "--kind", "rev"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let line = text
        .lines()
        .find(|l| l.starts_with("negative_introspection"))
        .unwrap();
    assert!(line.contains("FAILS"), "{line}");
}

#[test]
fn check_single_property_passes() {
    let o = run(&[
        "check",
        &fixture("four_state"),
        "--kind",
        "rev",
        "--property",
        "r_necessitation",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn check_structured_output() {
    let o = run(&[
        "check",
        &fixture("three_state"),
        "--kind",
        "std",
        "--format",
        "structured",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["format"], 1);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 14);
    let ni = reports
        .iter()
        .find(|r| r["property"] == "negative_introspection")
        .unwrap();
    assert_eq!(ni["holds"], false);
    assert_eq!(ni["kind"], "standard");
    assert_eq!(ni["quantification"]["mode"], "exhaustive");
    assert!(ni["witness"]["event"].is_array());
    assert!(ni["witness"]["lhs"].is_array());
}

#[test]
fn trace_revised_chain_is_preserved() {
    let o = run(&["trace", &fixture("four_state"), "--chain", "rdlr"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("preserved"));
    let o = run(&[
        "trace",
        &fixture("four_state"),
        "--chain",
        "rdlr",
        "--format",
        "structured",
    ]);
    let v = json(&o);
    assert_eq!(v["chain"], "rdlr");
    assert_eq!(v["verdict"], "preserved");
    assert_eq!(v["steps"].as_array().unwrap().len(), 5);
}

#[test]
fn trace_standard_chain_breaks() {
    let o = run(&[
        "trace",
        &fixture("three_state"),
        "--chain",
        "dlr",
        "--event",
        "{a}",
        "--format",
        "structured",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["verdict"], "broken_at");
    assert_eq!(v["broken_at"], 2);
}

#[test]
fn trace_argument_errors() {
    let o = run(&["trace", &fixture("three_state"), "--chain", "dlr"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&[
        "trace",
        &fixture("four_state"),
        "--chain",
        "rdlr",
        "--event",
        "{a}",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn parse_errors_report_positions() {
    let o = run_stdin(
        &["check", "-", "--kind", "std"],
        "states: a b\nP(a) = {a, x}\n",
    );
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("<stdin>:2:12: unknown state"), "{err}");
    assert!(err.lines().count() >= 2, "{err}");
}

#[test]
fn generated_models_parse_back() {
    let o = run(&["gen", "--states", "7", "--seed", "3", "--p-empty", "0.2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("states: s0 s1"));
    let again = run(&["gen", "--states", "7", "--seed", "3", "--p-empty", "0.2"]);
    assert_eq!(stdout(&again), text);
    let o = run_stdin(
        &["check", "-", "--kind", "std", "--property", "monotonicity"],
        &text,
    );
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn gen_rejects_bad_parameters() {
    assert_eq!(
        run(&["gen", "--states", "0", "--seed", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["gen", "--states", "3", "--seed", "1", "--density", "2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn fuzz_dlr_finds_nothing() {
    let o = run(&[
        "fuzz", "--models", "500", "--states", "3", "--seed", "1", "--kind", "std", "--dlr",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8(o.stderr)
        .unwrap()
        .contains("no counterexample"));
}

#[test]
fn fuzz_counterexample_is_a_model_file() {
    let o = run(&[
        "fuzz",
        "--models",
        "200",
        "--states",
        "4",
        "--seed",
        "9",
        "--kind",
        "rev",
        "--property",
        "truth",
        "--p-empty",
        "0.3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().next().unwrap().starts_with('#'));
    let o = run_stdin(
        &["check", "-", "--kind", "rev", "--property", "truth"],
        &text,
    );
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn library_entry_point() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut input = "states: a b c\nP(a) = {a}\nP(b) = {b}\nP(c) = {a b c}\n".as_bytes();
    let code = unaware::cli::run(
        ["unaware", "eval", "-", "--op", "U", "--event", "{a}"],
        &mut input,
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0);
    assert_eq!(String::from_utf8(out).unwrap(), "{c}\n");
}
