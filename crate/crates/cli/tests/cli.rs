use std::process::Command as Process;

use argchange::apx::{parse_framework, serialize_framework};
use argchange::change_syntax::parse_change;
use argchange::run::{run, Command, Input, RunSpec, EXIT_FINDINGS, EXIT_OK, EXIT_USAGE};
use argchange_core::SemanticsKind;

const REFERENCE: &str = "\
% five arguments
arg(A).
arg(B).
arg(C).
arg(D).
arg(F).
att(A,B).
att(B,A).
att(B,C).
att(C,D).
att(D,F).
att(F,C).
";

const RESTRICTIVE: &str = "arg(a).\narg(b).\narg(c).\narg(d).\natt(a,b).\natt(b,a).\natt(b,c).\natt(d,c).\natt(c,d).\n";

fn spec(command: Command, text: &str) -> RunSpec {
    RunSpec { input: Input::Text(text.into()), ..RunSpec::new(command) }
}

#[test]
fn apx_round_trip() {
    let f = parse_framework(REFERENCE).unwrap();
    let text = serialize_framework(&f);
    assert_eq!(parse_framework(&text).unwrap(), f);
    assert_eq!(serialize_framework(&parse_framework(&text).unwrap()), text);
}

#[test]
fn extensions_report() {
    let out = run(&spec(Command::Extensions, REFERENCE));
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(
        out.report,
        "command: extensions
semantics: preferred
arguments: 5
attacks: 6
extensions: [[A],[B,D]]
status:
  A: credulously-accepted
  B: credulously-accepted
  C: rejected
  D: credulously-accepted
  F: rejected
"
    );
}

#[test]
fn classify_report() {
    let s = RunSpec { change: Some(parse_change("add-att:a>d").unwrap()), ..spec(Command::Classify, RESTRICTIVE) };
    let out = run(&s);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(
        out.report,
        "command: classify
semantics: preferred
change: add-att:a>d
before: [[a,c],[a,d],[b,d]]
after: [[a,c],[b,d]]
structural: restrictive
monotony: false
credulous-monotony: true
skeptical-monotony: true
priority-to-recency: n/a
partial-monotony:
  a: true
  b: true
  c: true
  d: true
"
    );
}

#[test]
fn conditions_report_has_no_unmet_guarantees() {
    let s = RunSpec {
        semantics: SemanticsKind::Grounded,
        change: Some(parse_change("add-arg:z:z>B").unwrap()),
        ..spec(Command::Conditions, REFERENCE)
    };
    let out = run(&s);
    assert_eq!(out.code, EXIT_OK, "{}", out.report);
    assert!(out.report.contains("unmet-guarantees: []\n"));
    assert!(out.report.contains("contradicted-exclusions: []\n"));
}

#[test]
fn usage_errors() {
    let stable = RunSpec {
        semantics: SemanticsKind::Stable,
        change: Some(parse_change("add-arg:z:z>B").unwrap()),
        ..spec(Command::Conditions, REFERENCE)
    };
    let not_addition = RunSpec { change: Some(parse_change("del-arg:A").unwrap()), ..spec(Command::Conditions, REFERENCE) };
    let missing = spec(Command::Classify, REFERENCE);
    let bad_file = spec(Command::Extensions, "arg(a).\natt(a,b).\n");
    let unknown_change = RunSpec { change: Some(parse_change("add-att:A>Q").unwrap()), ..spec(Command::Classify, REFERENCE) };
    for s in [stable, not_addition, missing, bad_file, unknown_change] {
        let out = run(&s);
        assert_eq!(out.code, EXIT_USAGE, "{s:?}");
        assert!(out.report.is_empty());
        assert_eq!(out.diagnostics.len(), 1);
    }
}

#[test]
fn whatif_report() {
    let s = RunSpec {
        semantics: SemanticsKind::Grounded,
        target: Some("decisive".parse().unwrap()),
        ..spec(Command::WhatIf, "arg(a).\narg(b).\narg(c).\natt(a,b).\natt(b,c).\natt(c,a).\n")
    };
    let out = run(&s);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.report.ends_with("examined: 6\nhits:\n  - add-arg:z:z>a\n  - add-arg:z:z>b\n  - add-arg:z:z>c\n"));
}

#[test]
fn small_verify_and_oracle_runs_are_clean() {
    let verify = RunSpec { count: 100, seed: 3, kind: None, ..RunSpec::new(Command::Verify) };
    let out = run(&verify);
    assert_eq!(out.code, EXIT_OK, "{}", out.report);
    assert!(out.report.contains("violations: []\n"));
    let oracle = RunSpec { count: 40, max_args: Some(8), ..RunSpec::new(Command::OracleCheck) };
    let out = run(&oracle);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.report.contains("frameworks: 40\n"));
    let too_big = RunSpec { max_args: Some(21), ..RunSpec::new(Command::OracleCheck) };
    assert_eq!(run(&too_big).code, EXIT_USAGE);
}

#[test]
fn exit_code_constants() {
    assert_eq!((EXIT_OK, EXIT_FINDINGS, EXIT_USAGE), (0, 1, 2));
}

fn binary() -> Process {
    Process::new(env!("CARGO_BIN_EXE_argchange"))
}

#[test]
fn binary_reads_files_and_writes_output() {
    let dir = std::env::temp_dir().join(format!("argchange-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("ex1.apx");
    let output = dir.join("report.txt");
    std::fs::write(&input, REFERENCE).unwrap();

    let st = binary()
        .args(["extensions", "-s", "stable", "-o"])
        .arg(&output)
        .arg(&input)
        .status()
        .unwrap();
    assert_eq!(st.code(), Some(0));
    let report = std::fs::read_to_string(&output).unwrap();
    assert!(report.contains("extensions: [[B,D]]\n"));

    let out = binary().args(["classify", "-c", "flip:A>B"]).arg(&input).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown change 'flip'"));

    let out = binary().args(["extensions"]).arg(dir.join("missing.apx")).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());

    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_reads_stdin() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = binary()
        .args(["extensions", "-s", "grounded", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(REFERENCE.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("extensions: [[]]\n"));
}
