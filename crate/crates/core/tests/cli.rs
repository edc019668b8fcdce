//! End-to-end runs of the command-line tool against the bundled fixtures.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(rel)
}

fn logbench() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_logbench"));
    for var in ["LOGBENCH_CORPUS", "LOGBENCH_ADAPTER", "LOGBENCH_PREDICTIONS", "LOGBENCH_OUT", "LOGBENCH_TRAIN"] {
        cmd.env_remove(var);
    }
    cmd
}

fn run(args: &[&str]) -> Output {
    logbench().args(args).output().unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

/// Asserts the failure shape: non-zero exit and exactly one stderr line
/// `logbench: error code=<Code> message=...`. Returns the code.
fn error_code(out: &Output) -> String {
    assert!(!out.status.success(), "expected failure, stdout: {}", String::from_utf8_lossy(&out.stdout));
    let stderr = String::from_utf8(out.stderr.clone()).unwrap();
    let lines: Vec<&str> = stderr.lines().collect();
    assert_eq!(lines.len(), 1, "{stderr}");
    let rest = lines[0].strip_prefix("logbench: error code=").expect(lines[0]);
    let (code, msg) = rest.split_once(" message=").expect(lines[0]);
    assert!(code.chars().all(|c| c.is_ascii_alphanumeric()) && !code.is_empty());
    assert!(!msg.is_empty());
    code.to_string()
}

fn build_corpus(out: &Path) -> PathBuf {
    let o = run(&[
        "corpus", "build",
        "--corpus", p(&fixture("corpus/ordersvc")),
        "--corpus", p(&fixture("corpus/streamkit")),
        "--out", p(out),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    out.join("corpus.jsonl")
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn corpus_build_writes_instances_and_per_project_reports() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = build_corpus(dir.path());
    assert_eq!(fs::read_to_string(&corpus).unwrap().lines().count(), 450);
    for name in ["ordersvc", "streamkit"] {
        let r = json(&dir.path().join(format!("corpus_report_{name}.json")));
        assert_eq!(r["kind"], "corpus_report");
        assert!(dir.path().join(format!("corpus_report_{name}.md")).exists());
    }
}

#[test]
fn static_oracle_scores_perfectly_and_records_are_stable() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = build_corpus(&dir.path().join("c"));
    let mut records = Vec::new();
    for i in 0..2 {
        let out = dir.path().join(format!("run{i}"));
        let o = run(&["eval", "static", "--corpus", p(&corpus), "--oracle", "--workers", "3", "--out", p(&out)]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        let report = json(&out.join("static_report.json"));
        assert_eq!(report["kind"], "static_report");
        for key in ["pa", "la", "ma", "dea"] {
            assert_eq!(report["overall"][key], 100.0, "{key}");
        }
        assert_eq!(report["overall"]["ald"], 0.0);
        records.push(fs::read(out.join("static_records.jsonl")).unwrap());
    }
    assert_eq!(records[0], records[1]);
}

#[test]
fn records_format_on_stdout_is_json() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = build_corpus(dir.path());
    let o = run(&["eval", "static", "--corpus", p(&corpus), "--oracle", "--format", "records"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n_total"], 450);

    let o = run(&["eval", "static", "--corpus", p(&corpus), "--oracle"]);
    let table = String::from_utf8(o.stdout).unwrap();
    assert!(table.contains("| overall |") || table.contains("overall"), "{table}");
}

#[test]
fn environment_overrides_paths() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = build_corpus(&dir.path().join("c"));
    let out = dir.path().join("env_out");
    let o = logbench()
        .args(["eval", "static", "--oracle"])
        .env("LOGBENCH_CORPUS", &corpus)
        .env("LOGBENCH_OUT", &out)
        .output()
        .unwrap();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(out.join("static_report.json").exists());

    // An explicit flag wins over the environment.
    let o = logbench()
        .args(["eval", "static", "--oracle", "--corpus", p(&corpus)])
        .env("LOGBENCH_CORPUS", "/nonexistent/corpus.jsonl")
        .output()
        .unwrap();
    assert!(o.status.success());
}

#[test]
fn lint_and_contamination() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = build_corpus(&dir.path().join("c"));
    let out = dir.path().join("lint");
    let o = run(&["corpus", "lint", "--corpus", p(&corpus), "--out", p(&out)]);
    assert!(o.status.success());
    let summary = json(&out.join("lint_report.json"));
    assert_eq!(summary["statements"], 450);
    assert!(summary["flagged_statements"].as_u64().unwrap() > 0);
    assert!(out.join("lint_findings.jsonl").exists());

    let o = run(&[
        "corpus", "contamination",
        "--corpus", p(&fixture("contamination/test")),
        "--train", p(&fixture("contamination/train")),
        "--format", "records",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n"], 13);
    assert!((v["rate"].as_f64().unwrap() - 0.2).abs() < 1e-12);
}

#[test]
fn report_renders_saved_records() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = build_corpus(&dir.path().join("c"));
    let out = dir.path().join("s");
    assert!(run(&["eval", "static", "--corpus", p(&corpus), "--oracle", "--out", p(&out)]).status.success());
    let o = run(&["report", p(&out.join("static_report.json")), "--out", p(&out)]);
    assert!(o.status.success());
    let md = fs::read_to_string(out.join("report.md")).unwrap();
    assert_eq!(md, String::from_utf8(o.stdout).unwrap());
    assert_eq!(md, fs::read_to_string(out.join("static_report.md")).unwrap());
}

#[test]
fn prediction_file_errors_have_codes() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = build_corpus(&dir.path().join("c"));
    let first: Value = serde_json::from_str(fs::read_to_string(&corpus).unwrap().lines().next().unwrap()).unwrap();
    let id = first["id"].as_str().unwrap();
    let line = format!(r#"{{"instance_id":"{id}","insert_pos":1,"statements":["LOG.info(\"x\");"],"tool":"t"}}"#);

    let cases = [
        ("malformed", "{not json".to_string(), "MalformedLine"),
        ("dup", format!("{line}\n{line}\n"), "DuplicateInstance"),
        ("unknown", line.replace(id, "nope:1"), "UnknownInstance"),
        ("zero", line.replace("\"insert_pos\":1", "\"insert_pos\":0"), "MalformedLine"),
    ];
    for (name, content, code) in cases {
        let path = dir.path().join(format!("{name}.jsonl"));
        fs::write(&path, content).unwrap();
        let o = run(&["eval", "static", "--corpus", p(&corpus), "--predictions", p(&path)]);
        assert_eq!(error_code(&o), code, "{name}");
        assert_eq!(o.status.code(), Some(1));
    }
}

#[test]
fn failures_print_one_coded_line() {
    let missing = run(&["eval", "static", "--corpus", "/nonexistent.jsonl", "--oracle"]);
    assert_eq!(error_code(&missing), "IoError");

    let usage = run(&["eval", "static", "--oracle"]);
    assert_eq!(error_code(&usage), "UsageError");
    assert_eq!(usage.status.code(), Some(2));

    let unknown = run(&["frobnicate"]);
    assert_eq!(error_code(&unknown), "UsageError");

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("adapter.toml");
    fs::write(&bad, "project = \"x\"\nbogus = 1\n").unwrap();
    let o = run(&["eval", "dynamic", "--adapter", p(&bad), "--oracle"]);
    assert_eq!(error_code(&o), "ConfigError");

    let o = run(&["corpus", "build", "--corpus", "/nonexistent/tree"]);
    assert_eq!(error_code(&o), "IoError");

    assert!(run(&["--help"]).status.success());
}
