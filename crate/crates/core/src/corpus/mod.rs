//! Evaluation-instance construction from source trees.
//!
//! Every log statement that owns its lines inside a function body becomes one
//! instance: the function with that statement cut out, the insertion line, and
//! the removed text. Statements that share a line with other code cannot be
//! masked line-wise and are counted instead.

mod contamination;
mod lint;
mod qualify;
mod units;

use std::collections::BTreeSet;
use std::fmt;
use std::io::{BufRead, Write};
use std::path::Path;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use walkdir::WalkDir;

use crate::error::{Error, Result};
use crate::model::lexer::lex;
use crate::model::{split_lines, LogCallParser, LogStatement, SourceUnit, Span, Tokenizer, WordPunct};

pub use contamination::{contamination_rate, contamination_report, ContaminationReport};
pub use lint::{lint_bad_patterns, BadPattern, BadPatternFinding, LintConfig};
pub use qualify::RepoQualification;

/// Token budget separating short from long instances.
pub const LONG_THRESHOLD: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthClass {
    Short,
    Long,
}

impl LengthClass {
    pub fn of(token_count: usize) -> Self {
        if token_count <= LONG_THRESHOLD {
            LengthClass::Short
        } else {
            LengthClass::Long
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LengthClass::Short => "short",
            LengthClass::Long => "long",
        }
    }
}

impl fmt::Display for LengthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Static evaluation tuple: code without one statement, where it goes, and
/// what it was.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusInstance {
    pub id: String,
    pub project: String,
    pub code_without: SourceUnit,
    /// 1-based line of `code_without` before which the statement was removed;
    /// `len + 1` means end of unit.
    pub log_pos: usize,
    /// The removed physical lines, byte-exact, joined with `\n`.
    pub oracle_text: String,
    pub oracle: LogStatement,
    pub length_class: LengthClass,
}

impl CorpusInstance {
    /// Puts `text` back at `log_pos`.
    pub fn reinsert(&self, text: &str) -> Vec<String> {
        insert_lines(&self.code_without.lines, self.log_pos, text)
    }

    /// The original unit, reconstructed from the tuple.
    pub fn original_unit(&self) -> Vec<String> {
        self.reinsert(&self.oracle_text)
    }

    pub fn to_record(&self) -> CorpusRecord {
        CorpusRecord {
            id: self.id.clone(),
            project: self.project.clone(),
            code_without: self.code_without.lines.clone(),
            log_pos: self.log_pos,
            oracle_text: self.oracle_text.clone(),
            length_class: self.length_class,
        }
    }

    pub fn from_record(
        record: CorpusRecord,
        parser: &LogCallParser,
        tokenizer: &dyn Tokenizer,
    ) -> Result<Self> {
        if record.log_pos == 0 || record.log_pos > record.code_without.len() + 1 {
            return Err(Error::InvalidArgument(format!(
                "{}: log_pos {} outside 1..={}",
                record.id,
                record.log_pos,
                record.code_without.len() + 1
            )));
        }
        let mut oracle = parser.parse(&record.oracle_text)?;
        let lines = record.oracle_text.split('\n').count();
        oracle.span = Span::new(record.log_pos, record.log_pos + lines - 1);
        let code_without = SourceUnit::new(record.id.clone(), record.code_without, tokenizer);
        Ok(CorpusInstance {
            length_class: LengthClass::of(code_without.token_count),
            id: record.id,
            project: record.project,
            code_without,
            log_pos: record.log_pos,
            oracle_text: record.oracle_text,
            oracle,
        })
    }
}

/// Inserts the lines of `text` before 1-based line `pos` (clamped to the end).
pub fn insert_lines(lines: &[String], pos: usize, text: &str) -> Vec<String> {
    let at = pos.saturating_sub(1).min(lines.len());
    let mut out = Vec::with_capacity(lines.len() + 1);
    out.extend_from_slice(&lines[..at]);
    out.extend(text.split('\n').map(str::to_string));
    out.extend_from_slice(&lines[at..]);
    out
}

/// Line-delimited corpus record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusRecord {
    pub id: String,
    pub project: String,
    pub code_without: Vec<String>,
    pub log_pos: usize,
    pub oracle_text: String,
    pub length_class: LengthClass,
}

/// A masked-out statement located in its file.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtractedStatement {
    /// `/`-separated path relative to the tree root.
    pub rel_path: String,
    /// Enclosing function, in file lines.
    pub unit: Span,
    /// The statement's own lines, in file lines.
    pub stmt: Span,
    pub oracle_text: String,
    /// Parsed statement; its span is relative to the unit.
    pub oracle: LogStatement,
}

impl ExtractedStatement {
    pub fn log_pos(&self) -> usize {
        self.stmt.start_line - self.unit.start_line + 1
    }

    /// The enclosing unit with this statement removed.
    pub fn code_without(&self, file_lines: &[String]) -> Vec<String> {
        let unit = &file_lines[self.unit.start_line - 1..self.unit.end_line];
        let a = self.stmt.start_line - self.unit.start_line;
        let b = self.stmt.end_line - self.unit.start_line + 1;
        unit[..a].iter().chain(&unit[b..]).cloned().collect()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileExtraction {
    pub units: usize,
    pub unit_spans: Vec<Span>,
    /// Log statements sharing a physical line with other code.
    pub skipped_inline: usize,
    /// Log statements outside any function body.
    pub skipped_outside_unit: usize,
}

/// Finds maskable log statements in one file's content.
pub fn extract_file(
    rel_path: &str,
    content: &str,
    parser: &LogCallParser,
) -> Result<(Vec<ExtractedStatement>, FileExtraction)> {
    let normalized = content.replace("\r\n", "\n").replace('\r', "\n");
    let src = normalized.as_str();
    let lines: Vec<&str> = src.split('\n').collect();
    let tokens = lex(src)?;
    let units = units::function_units(src, &tokens)?;
    let calls = parser.find_calls(src, &tokens)?;

    let mut stats = FileExtraction {
        units: units.len(),
        unit_spans: units
            .iter()
            .map(|u| Span::new(tokens[u.first].line, tokens[u.close].end_line))
            .collect(),
        ..Default::default()
    };
    let mut out = Vec::new();

    for call in &calls {
        let first = &tokens[call.chain_start];
        let last = &tokens[call.last];
        let owns_lines = call.has_semicolon()
            && (call.chain_start == 0 || tokens[call.chain_start - 1].end_line < first.line)
            && tokens
                .get(call.last + 1)
                .is_none_or(|next| next.line > last.end_line);
        let Some(unit) = units
            .iter()
            .find(|u| u.first < call.chain_start && call.last < u.close)
        else {
            stats.skipped_outside_unit += 1;
            continue;
        };
        if !owns_lines {
            stats.skipped_inline += 1;
            continue;
        }
        let unit_span = Span::new(tokens[unit.first].line, tokens[unit.close].end_line);
        let stmt_span = Span::new(first.line, last.end_line);
        let oracle_text = lines[stmt_span.start_line - 1..stmt_span.end_line].join("\n");
        let rel_start = stmt_span.start_line - unit_span.start_line + 1;
        let oracle = parser.build(
            src,
            &tokens,
            call,
            Span::new(rel_start, rel_start + stmt_span.line_count() - 1),
        );
        out.push(ExtractedStatement {
            rel_path: rel_path.to_string(),
            unit: unit_span,
            stmt: stmt_span,
            oracle_text,
            oracle,
        });
    }
    Ok((out, stats))
}

#[derive(Clone)]
pub struct ExtractConfig {
    pub parser: LogCallParser,
    pub tokenizer: Arc<dyn Tokenizer>,
    /// File extensions (without the dot) considered source.
    pub extensions: Vec<String>,
}

impl Default for ExtractConfig {
    fn default() -> Self {
        ExtractConfig {
            parser: LogCallParser::default(),
            tokenizer: Arc::new(WordPunct::default()),
            extensions: ["java", "kt", "scala", "c", "cc", "cpp", "cxx", "h", "hpp"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
        }
    }
}

impl fmt::Debug for ExtractConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExtractConfig")
            .field("parser", &self.parser)
            .field("extensions", &self.extensions)
            .finish_non_exhaustive()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedFile {
    pub path: String,
    pub reason: String,
}

/// What extraction saw, including everything it had to leave out.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtractionReport {
    pub project: String,
    pub files_scanned: usize,
    pub files_skipped: Vec<SkippedFile>,
    pub units: usize,
    pub units_with_logs: usize,
    pub statements: usize,
    pub skipped_inline: usize,
    pub skipped_outside_unit: usize,
    pub instances: usize,
}

/// Source files under `root` with a configured extension, sorted by path.
pub fn source_files(root: &Path, extensions: &[String]) -> Result<Vec<(String, std::path::PathBuf)>> {
    if !root.is_dir() {
        return Err(Error::io(
            root,
            std::io::Error::new(std::io::ErrorKind::NotFound, "source tree not found"),
        ));
    }
    let mut files = Vec::new();
    for entry in WalkDir::new(root).sort_by_file_name() {
        let entry = entry.map_err(|e| Error::io(root, e.into()))?;
        if !entry.file_type().is_file() {
            continue;
        }
        let ext = entry.path().extension().and_then(|e| e.to_str()).unwrap_or("");
        if !extensions.iter().any(|e| e == ext) {
            continue;
        }
        let rel = entry
            .path()
            .strip_prefix(root)
            .expect("walkdir yields paths under root")
            .components()
            .map(|c| c.as_os_str().to_string_lossy())
            .collect::<Vec<_>>()
            .join("/");
        files.push((rel, entry.path().to_path_buf()));
    }
    Ok(files)
}

/// Builds one instance per maskable log statement under `tree`.
pub fn extract_instances(
    tree: &Path,
    project: &str,
    config: &ExtractConfig,
) -> Result<(Vec<CorpusInstance>, ExtractionReport)> {
    let files = source_files(tree, &config.extensions)?;

    let per_file: Vec<_> = files
        .par_iter()
        .map(|(rel, path)| {
            let content = match std::fs::read_to_string(path) {
                Ok(c) => c,
                Err(e) => return (rel.clone(), Vec::new(), Err(e.to_string())),
            };
            let lines = split_lines(&content);
            match extract_file(rel, &content, &config.parser) {
                Ok((stmts, stats)) => {
                    let with_logs = stmts
                        .iter()
                        .map(|s| s.unit.start_line)
                        .collect::<BTreeSet<_>>()
                        .len();
                    let instances = stmts
                        .iter()
                        .map(|s| instance_from(project, s, &lines, config.tokenizer.as_ref()))
                        .collect::<Vec<_>>();
                    (rel.clone(), instances, Ok((stats, with_logs)))
                }
                Err(e) => (rel.clone(), Vec::new(), Err(e.to_string())),
            }
        })
        .collect();

    let mut report = ExtractionReport {
        project: project.to_string(),
        files_scanned: files.len(),
        ..Default::default()
    };
    let mut instances = Vec::new();
    for (rel, file_instances, outcome) in per_file {
        match outcome {
            Ok((stats, with_logs)) => {
                report.units += stats.units;
                report.skipped_inline += stats.skipped_inline;
                report.skipped_outside_unit += stats.skipped_outside_unit;
                report.units_with_logs += with_logs;
                report.statements +=
                    file_instances.len() + stats.skipped_inline + stats.skipped_outside_unit;
                instances.extend(file_instances);
            }
            Err(reason) => report.files_skipped.push(SkippedFile { path: rel, reason }),
        }
    }
    report.instances = instances.len();
    Ok((instances, report))
}

fn instance_from(
    project: &str,
    stmt: &ExtractedStatement,
    file_lines: &[String],
    tokenizer: &dyn Tokenizer,
) -> CorpusInstance {
    let id = format!("{project}:{}:{}", stmt.rel_path, stmt.stmt.start_line);
    let code_without = SourceUnit::new(id.clone(), stmt.code_without(file_lines), tokenizer);
    CorpusInstance {
        length_class: LengthClass::of(code_without.token_count),
        project: project.to_string(),
        log_pos: stmt.log_pos(),
        oracle_text: stmt.oracle_text.clone(),
        oracle: stmt.oracle.clone(),
        code_without,
        id,
    }
}

/// Partitions instances into (short, long) preserving order.
pub fn split_by_length(instances: Vec<CorpusInstance>) -> (Vec<CorpusInstance>, Vec<CorpusInstance>) {
    instances
        .into_iter()
        .partition(|i| i.length_class == LengthClass::Short)
}

pub fn write_corpus<W: Write>(mut out: W, instances: &[CorpusInstance]) -> Result<()> {
    for inst in instances {
        serde_json::to_writer(&mut out, &inst.to_record())?;
        out.write_all(b"\n").map_err(|e| Error::io("<corpus output>", e))?;
    }
    Ok(())
}

pub fn read_corpus<R: BufRead>(
    input: R,
    parser: &LogCallParser,
    tokenizer: &dyn Tokenizer,
) -> Result<Vec<CorpusInstance>> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for (idx, line) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| Error::io("<corpus input>", e))?;
        if line.trim().is_empty() {
            continue;
        }
        let record: CorpusRecord =
            serde_json::from_str(&line).map_err(|e| Error::MalformedLine {
                line: line_no,
                message: e.to_string(),
            })?;
        if !seen.insert(record.id.clone()) {
            return Err(Error::MalformedLine {
                line: line_no,
                message: format!("duplicate instance id `{}`", record.id),
            });
        }
        let inst = CorpusInstance::from_record(record, parser, tokenizer).map_err(|e| {
            Error::MalformedLine {
                line: line_no,
                message: e.to_string(),
            }
        })?;
        out.push(inst);
    }
    Ok(out)
}

pub fn load_corpus(path: &Path) -> Result<Vec<CorpusInstance>> {
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    read_corpus(
        std::io::BufReader::new(file),
        &LogCallParser::default(),
        &WordPunct::default(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    const ONE: &str = "\
class A {
    void f(int n) {
        int x = n * 2;
        log.info(\"doubled {}\", x);
        use(x);
    }
}
";

    const THREE: &str = "\
class B {
    void g(String s) {
        LOG.debug(\"start {}\", s);
        if (s.isEmpty()) {
            LOG.warn(\"empty input\");
            return;
        }
        LOG.info(\"done with {}\",
                 s);
    }
}
";

    fn extract(src: &str) -> Vec<CorpusInstance> {
        let parser = LogCallParser::default();
        let (stmts, _) = extract_file("A.java", src, &parser).unwrap();
        let lines = split_lines(src);
        stmts
            .iter()
            .map(|s| instance_from("p", s, &lines, &WordPunct::default()))
            .collect()
    }

    #[test]
    fn single_statement_unit() {
        let inst = extract(ONE);
        assert_eq!(inst.len(), 1);
        let i = &inst[0];
        assert_eq!(i.id, "p:A.java:4");
        assert_eq!(i.log_pos, 3);
        assert_eq!(i.code_without.lines.len(), 4);
        assert!(!i.code_without.text().contains("log.info"));
        assert_eq!(i.oracle_text, "        log.info(\"doubled {}\", x);");
        assert_eq!(i.oracle.span, Span::new(3, 3));
    }

    #[test]
    fn three_statements_three_instances() {
        let inst = extract(THREE);
        assert_eq!(inst.len(), 3);
        for i in &inst {
            let remaining = i
                .code_without
                .lines
                .iter()
                .filter(|l| l.contains("LOG."))
                .count();
            assert_eq!(remaining, 2);
        }
        assert_eq!(inst[2].oracle.span, Span::new(7, 8));
        assert_eq!(inst[2].oracle.dynamic_exprs, vec!["s"]);
    }

    #[test]
    fn reinsertion_restores_the_unit() {
        let lines = split_lines(THREE);
        for i in extract(THREE) {
            let start = i.id.rsplit(':').next().unwrap().parse::<usize>().unwrap() + 1 - i.log_pos;
            let original = &lines[start - 1..start - 1 + i.code_without.lines.len() + i.oracle_text.split('\n').count()];
            assert_eq!(i.original_unit(), original);
        }
    }

    #[test]
    fn inline_and_field_statements_are_counted_not_extracted() {
        let src = "\
class C {
    static final String X = log.info(\"field\");
    void h() {
        if (ok) log.info(\"inline\");
        log.info(\"own line\"); // trailing comment is fine
    }
}
";
        let (stmts, stats) = extract_file("C.java", src, &LogCallParser::default()).unwrap();
        assert_eq!(stmts.len(), 1);
        assert_eq!(stats.skipped_inline, 1);
        assert_eq!(stats.skipped_outside_unit, 1);
    }

    #[test]
    fn unparseable_files_are_errors_at_file_level() {
        assert!(extract_file("D.java", "class D { void f() { log.info(\"x); } }", &LogCallParser::default()).is_err());
    }

    #[test]
    fn length_boundary() {
        assert_eq!(LengthClass::of(511), LengthClass::Short);
        assert_eq!(LengthClass::of(512), LengthClass::Short);
        assert_eq!(LengthClass::of(513), LengthClass::Long);
    }

    #[test]
    fn record_round_trip() {
        let inst = extract(THREE);
        let mut buf = Vec::new();
        write_corpus(&mut buf, &inst).unwrap();
        let back = read_corpus(&buf[..], &LogCallParser::default(), &WordPunct::default()).unwrap();
        assert_eq!(back.len(), 3);
        for (a, b) in inst.iter().zip(&back) {
            assert_eq!(a.code_without, b.code_without);
            assert_eq!(a.log_pos, b.log_pos);
            assert!(a.oracle.same_structure(&b.oracle));
            assert_eq!(a.oracle.span, b.oracle.span);
        }
    }

    #[test]
    fn malformed_corpus_lines_report_line_numbers() {
        let text = "{\"id\":\"x\"}\n";
        let err = read_corpus(text.as_bytes(), &LogCallParser::default(), &WordPunct::default())
            .unwrap_err();
        assert!(matches!(err, Error::MalformedLine { line: 1, .. }));
    }

    #[test]
    fn insert_lines_at_end() {
        let lines = vec!["a".to_string(), "b".to_string()];
        assert_eq!(insert_lines(&lines, 3, "c"), vec!["a", "b", "c"]);
        assert_eq!(insert_lines(&lines, 1, "c\nd"), vec!["c", "d", "a", "b"]);
    }
}
