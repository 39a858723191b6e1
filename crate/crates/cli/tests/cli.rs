use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use bomi::analysis::{evaluate, AnalysisConfig};
use bomi::model::resolve;
use bomi::syntax::parse;
use bomi_cli::{run, Exit, Streams};

fn corpus(file: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(file)
        .to_string_lossy()
        .into_owned()
}

struct Out {
    exit: Exit,
    stdout: String,
    stderr: String,
}

fn bomi(args: &[&str]) -> Out {
    bomi_with(args, "", false)
}

fn bomi_with(args: &[&str], stdin: &str, color: bool) -> Out {
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut streams = Streams {
        stdin: &mut input,
        stdout: &mut out,
        stderr: &mut err,
        color,
    };
    let exit = run(std::iter::once("bomi").chain(args.iter().copied()), &mut streams);
    Out {
        exit,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

#[test]
fn lint_corpus_reports_critical_unstable_usages() {
    let r = bomi(&["lint", &corpus("company-a.bomi")]);
    assert_eq!(r.exit, Exit::Findings);
    assert_eq!(r.stdout.matches("warning[US-02]").count(), 2, "{}", r.stdout);
    assert!(r.stdout.ends_with("2 warning(s), 3 info finding(s)\n"));
}

#[test]
fn stats_prints_census_row() {
    let r = bomi(&["stats", &corpus("company-a.bomi")]);
    assert_eq!(r.exit, Exit::Clean);
    let row = r.stdout.lines().nth(1).unwrap();
    assert!(row.ends_with("1   2      2       1     2                1        1"), "{row}");
    let r = bomi(&["stats", &corpus("company-d.bomi"), "--format", "json", "--metrics"]);
    let doc: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(doc["census"]["driver"], 2);
    assert_eq!(doc["metrics"]["elementCount"], 11);
}

#[test]
fn broken_reference_exits_2_with_rendered_diagnostic() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "broken.bomi", "model \"b\" {\n  usage Dev -> Story\n}\n");
    let r = bomi(&["check", path.to_str().unwrap()]);
    assert_eq!(r.exit, Exit::Invalid);
    assert!(r.stderr.contains("broken.bomi:2:9: error: `Dev` is not declared"), "{}", r.stderr);
    assert!(r.stderr.contains("        ^^^"));
    assert!(r.stdout.is_empty());
}

#[test]
fn parse_errors_win_over_findings() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "bad.bomi", "model \"b\" {\n  bo B { lifecycle: Shipped }\n}\n");
    let r = bomi(&["lint", path.to_str().unwrap()]);
    assert_eq!(r.exit, Exit::Invalid);
    assert!(r.stderr.contains("hint: expected one of Planning|Operation|Deprecate|Retire|Unknown"));
}

#[test]
fn warnings_do_not_change_the_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "w.bomi", "model \"w\" { mi I { types: [Team, Team] } }\n");
    let r = bomi(&["check", path.to_str().unwrap()]);
    assert_eq!(r.exit, Exit::Clean, "{}", r.stderr);
    assert!(r.stderr.contains("warning:"));
}

#[test]
fn conformance_violations_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "c.bomi", "model \"c\" { mi I { } }\n");
    assert_eq!(bomi(&["check", path.to_str().unwrap()]).exit, Exit::Invalid);
}

#[test]
fn unreadable_and_invalid_utf8_inputs_exit_2() {
    assert_eq!(bomi(&["check", "/nonexistent/model.bomi"]).exit, Exit::Invalid);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bytes.bomi");
    fs::write(&path, b"model \"x\" { bo B { purpose: \"\xff\" } }").unwrap();
    let r = bomi(&["check", path.to_str().unwrap()]);
    assert_eq!(r.exit, Exit::Invalid);
    assert!(r.stderr.contains("UTF-8"), "{}", r.stderr);
}

#[test]
fn usage_errors_exit_3() {
    for args in [&["frobnicate"][..], &["lint"], &["lint", "x.bomi", "--bogus"], &["export", "x.bomi"], &[]] {
        let r = bomi(args);
        assert_eq!(r.exit, Exit::Usage, "{args:?}");
        assert!(r.stderr.contains("Usage:"), "{args:?}: {}", r.stderr);
        assert!(r.stdout.is_empty());
    }
    let r = bomi(&["--help"]);
    assert_eq!(r.exit, Exit::Clean);
    assert!(r.stdout.contains("lint"));
}

#[test]
fn config_controls_rules_and_failure() {
    let dir = tempfile::tempdir().unwrap();
    let file = corpus("company-a.bomi");
    let quiet = write(dir.path(), "quiet.toml", "[rules]\n\"US-02\" = false\n");
    let r = bomi(&["lint", &file, "--config", quiet.to_str().unwrap()]);
    assert_eq!(r.exit, Exit::Clean, "{}", r.stdout);
    assert!(!r.stdout.contains("US-02"));

    let strict = write(dir.path(), "strict.toml", "fail_severity = \"info\"\n[rules]\n\"US-02\" = false\n");
    assert_eq!(bomi(&["lint", &file, "--config", strict.to_str().unwrap()]).exit, Exit::Findings);

    let unknown = write(dir.path(), "unknown.toml", "[rules]\n\"XX-99\" = true\n");
    let r = bomi(&["lint", &file, "--config", unknown.to_str().unwrap()]);
    assert_eq!(r.exit, Exit::Usage);
    assert!(r.stderr.contains("XX-99"));

    let typo = write(dir.path(), "typo.toml", "[thresholds]\nmax_elemnts = 3\n");
    assert_eq!(bomi(&["lint", &file, "--config", typo.to_str().unwrap()]).exit, Exit::Usage);
    assert_eq!(bomi(&["lint", &file, "--config", "/nonexistent.toml"]).exit, Exit::Usage);
}

#[test]
fn lint_json_matches_library_evaluation() {
    let file = corpus("company-a.bomi");
    let r = bomi(&["lint", &file, "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    let (ast, _) = parse(&fs::read_to_string(&file).unwrap(), &file);
    let expected = evaluate(&resolve(&ast).unwrap(), &AnalysisConfig::default()).unwrap();
    let listed = doc["findings"].as_array().unwrap();
    assert_eq!(listed.len(), expected.len());
    for (json, f) in listed.iter().zip(&expected) {
        assert_eq!(json["ruleId"], f.rule_id);
        assert_eq!(json["subjectId"], f.subject_id.as_str());
        assert_eq!(json["message"], f.message.as_str());
        assert_eq!(json["line"], f.span.start.line);
    }
    assert_eq!(doc["summary"]["warning"], 2);
}

#[test]
fn export_json_then_read_it_back() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("a.json");
    let r = bomi(&["export", &corpus("company-a.bomi"), "--to", "json", "--out", json.to_str().unwrap()]);
    assert_eq!(r.exit, Exit::Clean, "{}", r.stderr);
    assert!(r.stdout.is_empty());
    let stats = bomi(&["stats", json.to_str().unwrap()]);
    assert_eq!(stats.exit, Exit::Clean, "{}", stats.stderr);
    assert!(stats.stdout.lines().nth(1).unwrap().starts_with("Company A"));
    let again = bomi(&["export", json.to_str().unwrap(), "--to", "json"]);
    assert_eq!(again.stdout, fs::read_to_string(&json).unwrap());
    assert_eq!(bomi(&["lint", json.to_str().unwrap()]).exit, Exit::Findings);

    let bad = write(dir.path(), "bad.json", "{\"bomiVersion\": 7}");
    let r = bomi(&["check", bad.to_str().unwrap()]);
    assert_eq!(r.exit, Exit::Invalid);
    assert!(r.stderr.contains("bomiVersion 7"), "{}", r.stderr);
}

#[test]
fn export_dot_with_style_flags() {
    let file = corpus("company-a.bomi");
    let r = bomi(&["export", &file, "--to", "dot", "--bo-fill", "#336699", "--notes"]);
    assert_eq!(r.exit, Exit::Clean);
    assert!(r.stdout.contains("fillcolor=\"#336699\""));
    assert!(r.stdout.contains("easily accessible"));
    let r = bomi(&["export", &file, "--to", "dot", "--mi-fill", "greenish"]);
    assert_eq!(r.exit, Exit::Usage);
    assert!(r.stderr.contains("greenish"));
    let r = bomi(&["export", &file, "--to", "dot", "--association-nodes", "--no-attributes"]);
    assert!(r.stdout.starts_with("// BOMI model \"Company A\": 10 nodes"), "{}", r.stdout);
}

#[test]
fn color_only_when_enabled() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "b.bomi", "model \"b\" { bo B { modularity: lowish } }");
    let plain = bomi_with(&["check", path.to_str().unwrap()], "", false);
    assert!(!plain.stderr.contains('\x1b'));
    let colored = bomi_with(&["check", path.to_str().unwrap()], "", true);
    assert!(colored.stderr.contains("\x1b[1;31merror:\x1b[0m"), "{}", colored.stderr);
}

/// 1 BO, 2 roles on 2 islands, no drivers, 1 governance team.
const SCRIPT: &str = "User Story\n\n\n\n\n\n\n\n\n\n\n\n\n\n\n\nDeveloper, Product Owner\nDev Team\n\nPM Team\nteam\n\
    high\nlow\nhigh\n\nR\n\nlow\nhigh\n\nCRUD\nProduct Owner\n\nForum of Product Owners\nProduct Owner\nmeetings\nhigh\n";

#[test]
fn init_scripted_session_census() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("new.bomi");
    let r = bomi_with(&["init", "--out", out.to_str().unwrap()], SCRIPT, false);
    assert_eq!(r.exit, Exit::Clean, "{}", r.stderr);
    assert!(r.stderr.contains("Which BO would you like to focus on?"));
    assert!(r.stderr.contains("What roles interact with the BO"));
    assert!(r.stderr.contains("Which island does Developer belong to"));
    let stats = bomi(&["stats", out.to_str().unwrap()]);
    let row: Vec<&str> = stats.stdout.lines().nth(1).unwrap().split_whitespace().rev().take(7).collect();
    assert_eq!(row, ["1", "1", "2", "0", "2", "2", "1"]);
}

#[test]
fn init_with_only_a_bo_name() {
    let answers = format!("Roadmap\n{}", "\n".repeat(40));
    let r = bomi_with(&["init"], &answers, false);
    assert_eq!(r.exit, Exit::Clean, "{}", r.stderr);
    let (ast, diags) = parse(&r.stdout, "init");
    assert!(diags.is_empty());
    let model = resolve(&ast).unwrap();
    assert_eq!(model.census().to_string(), "1 0 0 0 0 0 0");
    assert_eq!(model.boundary_objects()[0], {
        let mut b = bomi::model::types::BoundaryObject::new("Roadmap");
        b.span = model.boundary_objects()[0].span.clone();
        b
    });
}

#[test]
fn init_abort_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("never.bomi");
    let r = bomi_with(&["init", "--out", out.to_str().unwrap()], "Half\nPlanning\n", false);
    assert_eq!(r.exit, Exit::Usage);
    assert!(!out.exists());
    assert!(r.stderr.contains("aborted"));
}

#[test]
fn binary_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_bomi");
    let status = |args: &[&str]| Command::new(exe).args(args).env("NO_COLOR", "1").output().unwrap();
    let out = status(&["lint", &corpus("company-a.bomi")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("US-02"));
    assert_eq!(status(&["stats", &corpus("company-b.bomi")]).status.code(), Some(0));
    assert_eq!(status(&["check", "/nonexistent.bomi"]).status.code(), Some(2));
    let out = status(&["--nope"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}
