//! Prediction ingestion and report rendering.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::fs;
use std::io::{BufRead, BufReader};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::corpus::{BadPattern, BadPatternFinding, ContaminationReport, ExtractionReport};
use crate::dynamic::{DynamicMetrics, DynamicReport};
use crate::error::{Error, Result};
use crate::static_eval::{PredictionRecord, StaticMetrics, StaticReport};

/// Reads line-delimited prediction records. Blank lines are ignored; line
/// numbers in errors are 1-based physical lines.
pub fn read_predictions<R: BufRead>(input: R) -> Result<Vec<PredictionRecord>> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for (i, line) in input.lines().enumerate() {
        let line_no = i + 1;
        let line = line.map_err(|e| Error::io("<predictions>", e))?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: PredictionRecord = serde_json::from_str(&line).map_err(|e| Error::MalformedLine {
            line: line_no,
            message: e.to_string(),
        })?;
        if rec.statements.is_empty() {
            return Err(Error::MalformedLine {
                line: line_no,
                message: "statements must not be empty".into(),
            });
        }
        if rec.insert_pos == 0 {
            return Err(Error::MalformedLine {
                line: line_no,
                message: "insert_pos is 1-based".into(),
            });
        }
        if !seen.insert(rec.instance_id.clone()) {
            return Err(Error::DuplicateInstance {
                id: rec.instance_id,
                line: line_no,
            });
        }
        out.push(rec);
    }
    Ok(out)
}

pub fn ingest_predictions(path: &Path) -> Result<Vec<PredictionRecord>> {
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    read_predictions(BufReader::new(file))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    /// Markdown tables for people.
    #[default]
    Table,
    /// JSON with a `kind` field, for machines.
    Records,
}

/// Per-pattern counts over a linted corpus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LintSummary {
    pub statements: usize,
    pub flagged_statements: usize,
    pub counts: Vec<(BadPattern, usize)>,
}

impl LintSummary {
    pub fn new(statements: usize, findings: &[BadPatternFinding]) -> Self {
        let flagged: HashSet<&str> = findings.iter().map(|f| f.instance_id.as_str()).collect();
        LintSummary {
            statements,
            flagged_statements: flagged.len(),
            counts: BadPattern::ALL
                .iter()
                .map(|p| (*p, findings.iter().filter(|f| f.pattern == *p).count()))
                .collect(),
        }
    }
}

/// Anything the tool can report on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Report {
    StaticReport(StaticReport),
    DynamicReport(DynamicReport),
    LintSummary(LintSummary),
    ContaminationReport(ContaminationReport),
    CorpusReport(ExtractionReport),
}

impl Report {
    /// Parses a report previously written with [`OutputFormat::Records`].
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

pub fn emit_report(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Records => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        OutputFormat::Table => match report {
            Report::StaticReport(r) => static_table(r),
            Report::DynamicReport(r) => dynamic_table(r),
            Report::LintSummary(r) => lint_table(r),
            Report::ContaminationReport(r) => contamination_table(r),
            Report::CorpusReport(r) => corpus_table(r),
        },
    }
}

fn table(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let _ = writeln!(out, "| {} |", header.join(" | "));
    let _ = writeln!(out, "|{}", "---|".repeat(header.len()));
    for row in rows {
        let _ = writeln!(out, "| {} |", row.join(" | "));
    }
    out.push('\n');
}

fn tool_suffix(tool: &Option<String>) -> String {
    tool.as_ref().map(|t| format!(" ({t})")).unwrap_or_default()
}

const STATIC_HEADER: [&str; 9] = ["", "N", "PA", "LA", "MA", "ALD", "DEA", "BLEU-4", "ROUGE-L"];

fn static_row(label: &str, m: &StaticMetrics) -> Vec<String> {
    vec![
        label.to_string(),
        m.n.to_string(),
        format!("{:.2}", m.pa),
        format!("{:.2}", m.la),
        format!("{:.2}", m.ma),
        format!("{:.2}", m.ald),
        format!("{:.2}", m.dea),
        format!("{:.2}", m.bleu4),
        format!("{:.2}", m.rouge_l),
    ]
}

pub fn static_table(r: &StaticReport) -> String {
    let mut out = format!("## Static evaluation{}\n\n", tool_suffix(&r.tool));
    table(&mut out, &STATIC_HEADER, &[static_row("overall", &r.overall)]);
    out.push_str("### Per project\n\n");
    let rows: Vec<_> = r.by_project.iter().map(|(p, m)| static_row(p, m)).collect();
    table(&mut out, &STATIC_HEADER, &rows);
    out.push_str("### By length\n\n");
    let rows: Vec<_> = r.by_length.iter().map(|(p, m)| static_row(p, m)).collect();
    table(&mut out, &STATIC_HEADER, &rows);
    out
}

const DYNAMIC_HEADER: [&str; 13] = [
    "", "N", "CSR", "COS", "BLEU-1", "BLEU-2", "BLEU-3", "BLEU-4", "ROUGE-1", "ROUGE-2", "ROUGE-L", "FPLR", "FNLR",
];

fn dynamic_row(label: &str, m: &DynamicMetrics) -> Vec<String> {
    let pct = |v: f64| format!("{:.2}%", 100.0 * v);
    vec![
        label.to_string(),
        m.n.to_string(),
        format!("{:.1}%", m.csr),
        pct(m.lfs.cos),
        pct(m.lfs.bleu1),
        pct(m.lfs.bleu2),
        pct(m.lfs.bleu3),
        pct(m.lfs.bleu4),
        pct(m.lfs.rouge1),
        pct(m.lfs.rouge2),
        pct(m.lfs.rouge_l),
        format!("{:.2}%", m.fplr),
        format!("{:.2}%", m.fnlr),
    ]
}

pub fn dynamic_table(r: &DynamicReport) -> String {
    let mut out = format!("## Dynamic evaluation{}\n\n", tool_suffix(&r.tool));
    table(&mut out, &DYNAMIC_HEADER, &[dynamic_row("overall", &r.overall)]);
    out.push_str("### Per project\n\n");
    let rows: Vec<_> = r.by_project.iter().map(|(p, m)| dynamic_row(p, m)).collect();
    table(&mut out, &DYNAMIC_HEADER, &rows);
    out
}

fn lint_table(r: &LintSummary) -> String {
    let mut out = format!(
        "## Bad logging patterns\n\n{} of {} statements flagged.\n\n",
        r.flagged_statements, r.statements
    );
    let rows: Vec<_> = r.counts.iter().map(|(p, c)| vec![p.to_string(), c.to_string()]).collect();
    table(&mut out, &["Pattern", "Findings"], &rows);
    out
}

fn contamination_table(r: &ContaminationReport) -> String {
    let mut out = String::from("## Contamination\n\n");
    table(
        &mut out,
        &["n", "Test units", "Train units", "Contaminated", "Rate"],
        &[vec![
            r.n.to_string(),
            r.test_units.to_string(),
            r.train_units.to_string(),
            r.contaminated.len().to_string(),
            format!("{:.4}", r.rate),
        ]],
    );
    out
}

fn corpus_table(r: &ExtractionReport) -> String {
    let mut out = format!("## Corpus: {}\n\n", r.project);
    let rows = vec![
        vec!["files scanned".to_string(), r.files_scanned.to_string()],
        vec!["files skipped".to_string(), r.files_skipped.len().to_string()],
        vec!["function units".to_string(), r.units.to_string()],
        vec!["units with logs".to_string(), r.units_with_logs.to_string()],
        vec!["log statements".to_string(), r.statements.to_string()],
        vec!["skipped (inline)".to_string(), r.skipped_inline.to_string()],
        vec!["skipped (outside a function)".to_string(), r.skipped_outside_unit.to_string()],
        vec!["instances".to_string(), r.instances.to_string()],
    ];
    table(&mut out, &["", "Count"], &rows);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use indexmap::IndexMap;

    fn line(id: &str) -> String {
        format!(r#"{{"instance_id":"{id}","insert_pos":2,"statements":["log.info(\"x\");"],"tool":"t"}}"#)
    }

    #[test]
    fn three_lines_three_records() {
        let text = [line("a"), line("b"), String::new(), line("c")].join("\n");
        let recs = read_predictions(text.as_bytes()).unwrap();
        assert_eq!(recs.len(), 3);
        assert_eq!(recs[2].instance_id, "c");
    }

    #[test]
    fn duplicate_names_id_and_line() {
        let text = [line("a"), line("b"), line("a")].join("\n");
        match read_predictions(text.as_bytes()) {
            Err(Error::DuplicateInstance { id, line }) => assert_eq!((id.as_str(), line), ("a", 3)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn empty_statements_and_garbage_are_malformed() {
        let empty = r#"{"instance_id":"a","insert_pos":1,"statements":[],"tool":"t"}"#;
        assert!(matches!(read_predictions(empty.as_bytes()), Err(Error::MalformedLine { line: 1, .. })));
        let text = format!("{}\nnot json", line("a"));
        assert!(matches!(read_predictions(text.as_bytes()), Err(Error::MalformedLine { line: 2, .. })));
    }

    fn metrics(pa: f64) -> StaticMetrics {
        StaticMetrics { n: 2, pa, la: 100.0, ma: 100.0, ald: 0.0, dea: 100.0, bleu4: 1.0, rouge_l: 1.0 }
    }

    #[test]
    fn static_table_rows() {
        let mut by_project = IndexMap::new();
        by_project.insert("zeta".to_string(), metrics(100.0));
        by_project.insert("alpha".to_string(), metrics(50.0));
        let r = StaticReport {
            tool: Some("oracle".into()),
            n_total: 4,
            overall: metrics(100.0),
            by_project,
            by_length: IndexMap::new(),
        };
        let t = emit_report(&Report::StaticReport(r.clone()), OutputFormat::Table);
        assert!(t.contains("| overall | 2 | 100.00 | 100.00 | 100.00 | 0.00 | 100.00 | 1.00 | 1.00 |"), "{t}");
        assert!(t.find("| zeta").unwrap() < t.find("| alpha").unwrap());

        let json = emit_report(&Report::StaticReport(r.clone()), OutputFormat::Records);
        assert!(json.contains("\"kind\": \"static_report\""));
        assert_eq!(Report::from_json(&json).unwrap(), Report::StaticReport(r));
    }
}
