//! Runtime evaluation: put predictions back into a project, build it, run
//! the covering test and compare the logs it emits.

pub mod adapter;
mod build;
pub mod coverage;
mod evaluate;
pub mod logs;
pub mod process;
pub mod workspace;

use std::fs;
use std::io::{BufRead, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{split_lines, Span};

pub use adapter::BuildAdapter;
pub use build::{build_dynamic_instances, DynamicBuildReport, ExcludedStatement};
pub use coverage::{read_coverage, CoverageFormat, LineCoverage};
pub use evaluate::{
    aggregate_dynamic, evaluate_dynamic, evaluate_prediction, lfs_scores, prime_workspace,
    DynamicMetrics, DynamicReport, DynamicResult, LfsScores,
};
pub use logs::{excess_lines, HeaderStripper, DEFAULT_HEADER_PATTERN};

/// A log statement paired with one test that executes it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DynamicInstance {
    pub instance_id: String,
    pub project: String,
    /// `/`-separated, relative to the project root.
    pub source_path: String,
    pub covering_test: String,
    /// Enclosing function, in file lines of the pristine source.
    pub unit: Span,
    /// The statement's lines, in file lines of the pristine source.
    pub stmt: Span,
    /// Where the statement sits in the unit with it removed, as in the
    /// static task. Predictions use the same coordinates.
    pub log_pos: usize,
    pub oracle_text: String,
    /// Header-stripped log lines of the test on the pristine project.
    pub oracle_log_body: Vec<String>,
    /// Same test with the statement removed.
    pub baseline_log_body: Vec<String>,
    /// The oracle statement itself contributed at least one line.
    pub expects_logs: bool,
}

impl DynamicInstance {
    /// The oracle as a prediction: reinserting it reproduces the source.
    pub fn oracle_prediction(&self, tool: &str) -> crate::static_eval::PredictionRecord {
        crate::static_eval::PredictionRecord {
            instance_id: self.instance_id.clone(),
            insert_pos: self.log_pos,
            statements: vec![self.oracle_text.trim_start().to_string()],
            tool: tool.to_string(),
        }
    }

    /// Number of lines in the unit once the statement is removed.
    pub fn unit_len_without(&self) -> usize {
        self.unit.line_count() - self.stmt.line_count()
    }
}

/// Source text with the instance's statement replaced by `statements`.
///
/// Statement lines that are not already indented get the oracle's indent,
/// so the oracle itself reinserts byte for byte.
pub(crate) fn splice_source(
    content: &str,
    inst: &DynamicInstance,
    insert_pos: usize,
    statements: &[String],
) -> Result<String> {
    if insert_pos == 0 || insert_pos > inst.unit_len_without() + 1 {
        return Err(Error::InvalidArgument(format!(
            "insert_pos {insert_pos} outside 1..={}",
            inst.unit_len_without() + 1
        )));
    }
    let lines = split_lines(content);
    if inst.stmt.end_line > lines.len() {
        return Err(Error::WorkspaceCorrupt(format!(
            "{} is shorter than the recorded statement span",
            inst.source_path
        )));
    }
    let indent: String = inst
        .oracle_text
        .chars()
        .take_while(|c| *c == ' ' || *c == '\t')
        .collect();
    let mut without: Vec<String> = lines[..inst.stmt.start_line - 1].to_vec();
    without.extend_from_slice(&lines[inst.stmt.end_line..]);

    let mut inserted = Vec::new();
    for stmt in statements {
        for (i, line) in stmt.split('\n').enumerate() {
            if i == 0 && !line.starts_with([' ', '\t']) {
                inserted.push(format!("{indent}{line}"));
            } else {
                inserted.push(line.to_string());
            }
        }
    }
    let at = inst.unit.start_line - 1 + insert_pos - 1;
    let mut out: Vec<String> = without[..at].to_vec();
    out.extend(inserted);
    out.extend_from_slice(&without[at..]);
    let mut text = out.join("\n");
    if content.ends_with('\n') {
        text.push('\n');
    }
    Ok(text)
}

pub fn write_dynamic_instances<W: Write>(mut out: W, instances: &[DynamicInstance]) -> Result<()> {
    for inst in instances {
        serde_json::to_writer(&mut out, inst)?;
        out.write_all(b"\n").map_err(|e| Error::io("<output>", e))?;
    }
    Ok(())
}

pub fn read_dynamic_instances<R: BufRead>(input: R) -> Result<Vec<DynamicInstance>> {
    let mut out: Vec<DynamicInstance> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (i, line) in input.lines().enumerate() {
        let line = line.map_err(|e| Error::io("<input>", e))?;
        if line.trim().is_empty() {
            continue;
        }
        let inst: DynamicInstance = serde_json::from_str(&line).map_err(|e| Error::MalformedLine {
            line: i + 1,
            message: e.to_string(),
        })?;
        if !seen.insert(inst.instance_id.clone()) {
            return Err(Error::MalformedLine {
                line: i + 1,
                message: format!("duplicate instance id `{}`", inst.instance_id),
            });
        }
        out.push(inst);
    }
    Ok(out)
}

pub fn load_dynamic_instances(path: &Path) -> Result<Vec<DynamicInstance>> {
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    read_dynamic_instances(std::io::BufReader::new(file))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst() -> DynamicInstance {
        DynamicInstance {
            instance_id: "p:a.cpp:3@t".into(),
            project: "p".into(),
            source_path: "a.cpp".into(),
            covering_test: "t".into(),
            unit: Span::new(1, 5),
            stmt: Span::new(3, 3),
            log_pos: 3,
            oracle_text: "    LOG.info(\"x\");".into(),
            oracle_log_body: vec!["x".into()],
            baseline_log_body: vec![],
            expects_logs: true,
        }
    }

    const SRC: &str = "void f() {\n    a();\n    LOG.info(\"x\");\n    b();\n}\n";

    #[test]
    fn oracle_splice_is_identity() {
        let i = inst();
        let p = i.oracle_prediction("o");
        assert_eq!(splice_source(SRC, &i, p.insert_pos, &p.statements).unwrap(), SRC);
    }

    #[test]
    fn splice_moves_and_multiplies() {
        let i = inst();
        let out = splice_source(SRC, &i, 2, &["LOG.debug(\"y\");".into(), "LOG.info(\"z\");".into()]).unwrap();
        assert_eq!(
            out,
            "void f() {\n    LOG.debug(\"y\");\n    LOG.info(\"z\");\n    a();\n    b();\n}\n"
        );
        assert!(splice_source(SRC, &i, 0, &[]).is_err());
        assert!(splice_source(SRC, &i, 6, &[]).is_err());
        assert!(splice_source(SRC, &i, 5, &[]).is_ok());
    }

    #[test]
    fn jsonl_round_trip() {
        let mut buf = Vec::new();
        write_dynamic_instances(&mut buf, &[inst()]).unwrap();
        assert_eq!(read_dynamic_instances(&buf[..]).unwrap(), vec![inst()]);
        let twice = [buf.clone(), buf].concat();
        assert!(matches!(read_dynamic_instances(&twice[..]), Err(Error::MalformedLine { line: 2, .. })));
    }
}
