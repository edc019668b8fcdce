//! Pairing log statements with the tests that execute them.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::adapter::BuildAdapter;
use super::coverage::{read_coverage, LineCoverage};
use super::logs::{excess_lines, HeaderStripper};
use super::process::run_shell;
use super::workspace::{tree_checksum, Workspace};
use super::{splice_source, DynamicInstance};
use crate::corpus::{extract_file, source_files, ExtractConfig, ExtractedStatement};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcludedStatement {
    pub location: String,
    pub reason: String,
}

/// What instance building found and what it left out.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DynamicBuildReport {
    pub project: String,
    pub tests: Vec<String>,
    /// Tests whose log output differed between two pristine runs.
    pub flaky_tests: Vec<String>,
    /// Tests that failed or timed out on the pristine project.
    pub failing_tests: Vec<String>,
    pub statements: usize,
    pub uncovered_statements: usize,
    pub excluded: Vec<ExcludedStatement>,
    pub instances: usize,
}

struct TestRun {
    body: Vec<String>,
    coverage: LineCoverage,
}

pub(crate) fn run_test(
    adapter: &BuildAdapter,
    header: &HeaderStripper,
    dir: &Path,
    test: &str,
) -> Result<Option<Vec<String>>> {
    if let Some(log) = &adapter.test_log {
        let p = dir.join(log);
        if p.exists() {
            fs::remove_file(&p).map_err(|e| Error::io(&p, e))?;
        }
    }
    let out = run_shell(&adapter.test_command(test), dir, adapter.timeout())?;
    if !out.success() {
        return Ok(None);
    }
    let text = match &adapter.test_log {
        Some(log) => {
            let p = dir.join(log);
            if p.exists() {
                fs::read_to_string(&p).map_err(|e| Error::io(&p, e))?
            } else {
                String::new()
            }
        }
        None => out.stdout,
    };
    Ok(Some(header.body(&text)))
}

fn run_ok(cmd: &str, dir: &Path, adapter: &BuildAdapter, what: &str) -> Result<()> {
    let out = run_shell(cmd, dir, adapter.timeout())?;
    if out.timed_out {
        return Err(Error::Timeout(adapter.timeout_s));
    }
    if !out.success() {
        return Err(Error::BuildFailed(format!("{what} `{cmd}` failed: {}", out.tail())));
    }
    Ok(())
}

pub(crate) fn compile(adapter: &BuildAdapter, dir: &Path) -> Result<()> {
    run_ok(&adapter.compile_cmd, dir, adapter, "compile")
}

fn list_tests(adapter: &BuildAdapter, dir: &Path) -> Result<Vec<String>> {
    let Some(cmd) = &adapter.list_tests_cmd else {
        return Ok(adapter.tests.clone());
    };
    let out = run_shell(cmd, dir, adapter.timeout())?;
    if !out.success() {
        return Err(Error::BuildFailed(format!("listing tests failed: {}", out.tail())));
    }
    Ok(out
        .stdout
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect())
}

fn covered_run(adapter: &BuildAdapter, header: &HeaderStripper, dir: &Path, test: &str) -> Result<Option<TestRun>> {
    if let Some(reset) = &adapter.coverage_reset_cmd {
        run_ok(reset, dir, adapter, "coverage reset")?;
    }
    let Some(body) = run_test(adapter, header, dir, test)? else {
        return Ok(None);
    };
    if let Some(cmd) = &adapter.coverage_cmd {
        run_ok(cmd, dir, adapter, "coverage")?;
    }
    let coverage = read_coverage(&dir.join(&adapter.coverage_report), adapter.coverage_format)?;
    Ok(Some(TestRun { body, coverage }))
}

fn statements(adapter: &BuildAdapter, root: &Path) -> Result<Vec<ExtractedStatement>> {
    let mut cfg = ExtractConfig {
        parser: adapter.parser()?,
        ..ExtractConfig::default()
    };
    if let Some(exts) = &adapter.extensions {
        cfg.extensions = exts.clone();
    }
    let mut files = Vec::new();
    for src in &adapter.sources {
        let path = root.join(src);
        if path.is_file() {
            files.push((src.trim_start_matches("./").to_string(), path));
        } else {
            for (rel, p) in source_files(&path, &cfg.extensions)? {
                files.push((format!("{}/{rel}", src.trim_end_matches('/')), p));
            }
        }
    }
    files.sort();
    files.dedup();
    let mut out = Vec::new();
    for (rel, path) in files {
        let content = fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
        out.extend(extract_file(&rel, &content, &cfg.parser)?.0);
    }
    Ok(out)
}

/// Builds one instance per (log statement, covering test) pair.
///
/// Each test runs twice on the pristine project; tests whose log output
/// differs are excluded as flaky. For every covered statement the project
/// is rebuilt without it to record which lines the statement itself emits.
pub fn build_dynamic_instances(
    adapter: &BuildAdapter,
    workers: usize,
) -> Result<(Vec<DynamicInstance>, DynamicBuildReport)> {
    let root = adapter.root.as_path();
    let pristine = tree_checksum(root)?;
    let header = adapter.header()?;
    let stmts = statements(adapter, root)?;

    let primed = Workspace::copy_of(root)?;
    compile(adapter, primed.path())?;
    let tests = list_tests(adapter, primed.path())?;
    let mut report = DynamicBuildReport {
        project: adapter.project.clone(),
        tests: tests.clone(),
        statements: stmts.len(),
        ..Default::default()
    };

    let mut runs: BTreeMap<&str, TestRun> = BTreeMap::new();
    for test in &tests {
        let Some(first) = covered_run(adapter, &header, primed.path(), test)? else {
            report.failing_tests.push(test.clone());
            continue;
        };
        match run_test(adapter, &header, primed.path(), test)? {
            Some(second) if second == first.body => {
                runs.insert(test, first);
            }
            Some(_) => report.flaky_tests.push(test.clone()),
            None => report.failing_tests.push(test.clone()),
        }
    }

    let pairs: Vec<(&ExtractedStatement, Vec<&str>)> = stmts
        .iter()
        .map(|s| {
            let covering = tests
                .iter()
                .map(String::as_str)
                .filter(|t| {
                    runs.get(t).is_some_and(|r| {
                        r.coverage.any_covered(&s.rel_path, s.stmt.start_line, s.stmt.end_line)
                    })
                })
                .collect();
            (s, covering)
        })
        .collect();
    report.uncovered_statements = pairs.iter().filter(|(_, t)| t.is_empty()).count();
    if pairs.iter().all(|(_, t)| t.is_empty()) {
        return Err(Error::NoCoveredStatements);
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let per_stmt: Vec<Result<std::result::Result<Vec<DynamicInstance>, ExcludedStatement>>> = pool.install(|| {
        pairs
            .par_iter()
            .filter(|(_, t)| !t.is_empty())
            .map(|(s, covering)| baseline_instances(adapter, &header, primed.path(), s, covering, &runs))
            .collect()
    });

    let mut instances = Vec::new();
    for r in per_stmt {
        match r? {
            Ok(v) => instances.extend(v),
            Err(ex) => report.excluded.push(ex),
        }
    }
    if tree_checksum(root)? != pristine {
        return Err(Error::WorkspaceCorrupt(format!("{} changed during instance building", root.display())));
    }
    if instances.is_empty() {
        return Err(Error::NoCoveredStatements);
    }
    report.instances = instances.len();
    Ok((instances, report))
}

fn baseline_instances(
    adapter: &BuildAdapter,
    header: &HeaderStripper,
    primed: &Path,
    s: &ExtractedStatement,
    covering: &[&str],
    runs: &BTreeMap<&str, TestRun>,
) -> Result<std::result::Result<Vec<DynamicInstance>, ExcludedStatement>> {
    let location = format!("{}:{}", s.rel_path, s.stmt.start_line);
    let exclude = |reason: String| Ok(Err(ExcludedStatement { location: location.clone(), reason }));

    let mut proto = DynamicInstance {
        instance_id: String::new(),
        project: adapter.project.clone(),
        source_path: s.rel_path.clone(),
        covering_test: String::new(),
        unit: s.unit,
        stmt: s.stmt,
        log_pos: s.log_pos(),
        oracle_text: s.oracle_text.clone(),
        oracle_log_body: vec![],
        baseline_log_body: vec![],
        expects_logs: false,
    };

    let ws = Workspace::copy_of(primed)?;
    let file = ws.join(&s.rel_path);
    let content = fs::read_to_string(&file).map_err(|e| Error::io(&file, e))?;
    fs::write(&file, splice_source(&content, &proto, proto.log_pos, &[])?).map_err(|e| Error::io(&file, e))?;
    match compile(adapter, ws.path()) {
        Ok(()) => {}
        Err(Error::BuildFailed(msg)) => return exclude(format!("does not build without the statement: {msg}")),
        Err(Error::Timeout(_)) => return exclude("build without the statement timed out".into()),
        Err(e) => return Err(e),
    }

    let mut out = Vec::new();
    for test in covering {
        let Some(baseline) = run_test(adapter, header, ws.path(), test)? else {
            return exclude(format!("test {test} fails without the statement"));
        };
        let oracle = &runs[test].body;
        proto.instance_id = format!("{}:{}:{}@{}", adapter.project, s.rel_path, s.stmt.start_line, test);
        proto.covering_test = test.to_string();
        proto.expects_logs = !excess_lines(oracle, &baseline).is_empty();
        proto.oracle_log_body = oracle.clone();
        proto.baseline_log_body = baseline;
        out.push(proto.clone());
    }
    Ok(Ok(out))
}
