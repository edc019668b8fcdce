use std::collections::{BTreeMap, HashSet};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use logbench::corpus::{
    contamination_report, extract_instances, lint_bad_patterns, load_corpus, write_corpus, BadPatternFinding,
    CorpusInstance, ExtractConfig, LintConfig, RepoQualification,
};
use logbench::dynamic::{
    aggregate_dynamic, build_dynamic_instances, evaluate_dynamic, load_dynamic_instances, write_dynamic_instances,
    BuildAdapter, DynamicInstance,
};
use logbench::model::{SourceUnit, WordPunct};
use logbench::report::{emit_report, ingest_predictions, LintSummary, OutputFormat, Report};
use logbench::static_eval::{evaluate_static, oracle_predictions, MessageRule, PredictionRecord, StaticConfig};
use logbench::{Error, Result};

#[derive(Parser)]
#[command(name = "logbench", version, about = "Evaluate automatic log-statement generation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build, lint and audit evaluation corpora.
    #[command(subcommand)]
    Corpus(CorpusCmd),
    /// Score predictions.
    #[command(subcommand)]
    Eval(EvalCmd),
    /// Render saved report files.
    Report {
        /// Report files written with `--format records`.
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum CorpusCmd {
    /// Extract masked instances from one or more project trees.
    Build {
        /// Project source tree; repeat for several projects.
        #[arg(long, env = "LOGBENCH_CORPUS", value_delimiter = ',', required = true)]
        corpus: Vec<PathBuf>,
        /// Also build runtime instances for these projects.
        #[arg(long, env = "LOGBENCH_ADAPTER", value_delimiter = ',')]
        adapter: Vec<PathBuf>,
        /// JSON object mapping project name to repository metadata; every
        /// project must pass the qualification thresholds.
        #[arg(long)]
        qualification: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Flag bad logging patterns in a corpus.
    Lint {
        #[arg(long, env = "LOGBENCH_CORPUS")]
        corpus: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Share of test units overlapping the training data on an n-gram.
    Contamination {
        /// Test corpus file or source tree.
        #[arg(long, env = "LOGBENCH_CORPUS")]
        corpus: PathBuf,
        /// Training corpus file or source tree.
        #[arg(long, env = "LOGBENCH_TRAIN")]
        train: PathBuf,
        #[arg(long, default_value_t = 13)]
        ngram: usize,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum EvalCmd {
    /// Position, level, message and text-similarity scores.
    Static {
        #[arg(long, env = "LOGBENCH_CORPUS")]
        corpus: PathBuf,
        #[command(flatten)]
        preds: Predictions,
        #[arg(long, value_enum, default_value_t = MessageArg::Full)]
        message_rule: MessageArg,
        #[command(flatten)]
        common: Common,
    },
    /// Compile, run covering tests and compare emitted logs.
    Dynamic {
        #[arg(long, env = "LOGBENCH_ADAPTER", value_delimiter = ',', required = true)]
        adapter: Vec<PathBuf>,
        /// Saved runtime instances; built from the adapters when omitted.
        #[arg(long, env = "LOGBENCH_CORPUS")]
        corpus: Option<PathBuf>,
        #[command(flatten)]
        preds: Predictions,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Predictions {
    #[arg(long, env = "LOGBENCH_PREDICTIONS", required_unless_present = "oracle")]
    predictions: Option<PathBuf>,
    /// Score the oracle statements themselves.
    #[arg(long, conflicts_with = "predictions")]
    oracle: bool,
}

#[derive(Args)]
struct Common {
    /// Directory for machine-readable outputs.
    #[arg(long, env = "LOGBENCH_OUT")]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = default_workers())]
    workers: usize,
    #[arg(long, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Records,
}

#[derive(Clone, Copy, ValueEnum)]
enum MessageArg {
    Full,
    Template,
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

impl Common {
    fn format(&self) -> OutputFormat {
        match self.format {
            FormatArg::Table => OutputFormat::Table,
            FormatArg::Records => OutputFormat::Records,
        }
    }

    fn out_dir(&self) -> Result<Option<&Path>> {
        if let Some(dir) = &self.out {
            fs::create_dir_all(dir).map_err(|e| Error::Io { path: dir.clone(), source: e })?;
        }
        Ok(self.out.as_deref())
    }
}

fn write(path: &Path, content: &[u8]) -> Result<()> {
    fs::write(path, content).map_err(|e| Error::Io { path: path.to_path_buf(), source: e })
}

fn jsonl<T: serde::Serialize>(items: &[T]) -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    for item in items {
        serde_json::to_writer(&mut buf, item)?;
        buf.push(b'\n');
    }
    Ok(buf)
}

/// Prints `report` and, with `--out`, saves it as `<stem>.json` and `<stem>.md`.
fn finish(report: Report, stem: &str, common: &Common) -> Result<()> {
    if let Some(dir) = common.out_dir()? {
        write(&dir.join(format!("{stem}.json")), emit_report(&report, OutputFormat::Records).as_bytes())?;
        write(&dir.join(format!("{stem}.md")), emit_report(&report, OutputFormat::Table).as_bytes())?;
    }
    emit(&emit_report(&report, common.format()))
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(text: &str) -> Result<()> {
    use std::io::Write;
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Error::Io { path: "<stdout>".into(), source: e }),
        _ => Ok(()),
    }
}

fn project_name(tree: &Path) -> String {
    tree.canonicalize()
        .ok()
        .and_then(|p| p.file_name().map(|n| n.to_string_lossy().into_owned()))
        .unwrap_or_else(|| tree.display().to_string())
}

/// A corpus file, or a source tree extracted on the fly.
fn corpus_from(path: &Path) -> Result<Vec<CorpusInstance>> {
    if path.is_dir() {
        Ok(extract_instances(path, &project_name(path), &ExtractConfig::default())?.0)
    } else {
        load_corpus(path)
    }
}

fn predictions(p: &Predictions, oracle: impl FnOnce() -> Vec<PredictionRecord>) -> Result<Vec<PredictionRecord>> {
    match &p.predictions {
        Some(path) => ingest_predictions(path),
        None => Ok(oracle()),
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Corpus(CorpusCmd::Build { corpus, adapter, qualification, common }) => {
            let names: Vec<String> = corpus.iter().map(|c| project_name(c)).collect();
            if let Some(path) = qualification {
                let text = fs::read_to_string(&path).map_err(|e| Error::Io { path: path.clone(), source: e })?;
                let meta: BTreeMap<String, RepoQualification> = serde_json::from_str(&text)?;
                for name in &names {
                    let failures = match meta.get(name) {
                        Some(q) => q.failures(),
                        None => vec!["no metadata".to_string()],
                    };
                    if !failures.is_empty() {
                        return Err(Error::Unqualified(format!("{name}: {}", failures.join("; "))));
                    }
                }
            }
            let cfg = ExtractConfig::default();
            let mut all = Vec::new();
            let mut seen = HashSet::new();
            for (tree, name) in corpus.iter().zip(&names) {
                if !seen.insert(name.clone()) {
                    return Err(Error::InvalidArgument(format!("project `{name}` given twice")));
                }
                let (instances, report) = extract_instances(tree, name, &cfg)?;
                all.extend(instances);
                finish(Report::CorpusReport(report), &format!("corpus_report_{name}"), &common)?;
            }
            let mut dynamic = Vec::new();
            for path in &adapter {
                let adapter = BuildAdapter::load(path)?;
                let (instances, report) = build_dynamic_instances(&adapter, common.workers)?;
                if let Some(dir) = common.out_dir()? {
                    let file = dir.join(format!("dynamic_build_{}.json", adapter.project));
                    write(&file, serde_json::to_string_pretty(&report)?.as_bytes())?;
                }
                dynamic.extend(instances);
            }
            if let Some(dir) = common.out_dir()? {
                let mut buf = Vec::new();
                write_corpus(&mut buf, &all)?;
                write(&dir.join("corpus.jsonl"), &buf)?;
                if !adapter.is_empty() {
                    let mut buf = Vec::new();
                    write_dynamic_instances(&mut buf, &dynamic)?;
                    write(&dir.join("dynamic_instances.jsonl"), &buf)?;
                }
            }
            Ok(())
        }
        Command::Corpus(CorpusCmd::Lint { corpus, common }) => {
            let instances = corpus_from(&corpus)?;
            let cfg = LintConfig::default();
            let findings: Vec<BadPatternFinding> = instances
                .iter()
                .flat_map(|i| lint_bad_patterns(&i.id, &i.oracle, &cfg))
                .collect();
            if let Some(dir) = common.out_dir()? {
                write(&dir.join("lint_findings.jsonl"), &jsonl(&findings)?)?;
            }
            finish(Report::LintSummary(LintSummary::new(instances.len(), &findings)), "lint_report", &common)
        }
        Command::Corpus(CorpusCmd::Contamination { corpus, train, ngram, common }) => {
            let units = |path: &Path| -> Result<Vec<SourceUnit>> {
                let tok = WordPunct::default();
                Ok(corpus_from(path)?
                    .iter()
                    .map(|i| SourceUnit::new(i.id.clone(), i.original_unit(), &tok))
                    .collect())
            };
            let report = contamination_report(&units(&corpus)?, &units(&train)?, ngram, &WordPunct::default())?;
            finish(Report::ContaminationReport(report), "contamination_report", &common)
        }
        Command::Eval(EvalCmd::Static { corpus, preds, message_rule, common }) => {
            let instances = load_corpus(&corpus)?;
            let preds = predictions(&preds, || oracle_predictions(&instances, "oracle"))?;
            let config = StaticConfig {
                message_rule: match message_rule {
                    MessageArg::Full => MessageRule::FullStatement,
                    MessageArg::Template => MessageRule::TemplateOnly,
                },
                ..StaticConfig::default()
            };
            let (records, report) = evaluate_static(&instances, &preds, &config)?;
            if let Some(dir) = common.out_dir()? {
                write(&dir.join("static_records.jsonl"), &jsonl(&records)?)?;
            }
            finish(Report::StaticReport(report), "static_report", &common)
        }
        Command::Eval(EvalCmd::Dynamic { adapter, corpus, preds, common }) => {
            let adapters = adapter.iter().map(|p| BuildAdapter::load(p)).collect::<Result<Vec<_>>>()?;
            let instances: Vec<DynamicInstance> = match &corpus {
                Some(path) => load_dynamic_instances(path)?,
                None => {
                    let mut all = Vec::new();
                    for a in &adapters {
                        all.extend(build_dynamic_instances(a, common.workers)?.0);
                    }
                    all
                }
            };
            let preds = predictions(&preds, || instances.iter().map(|i| i.oracle_prediction("oracle")).collect())?;
            let known: HashSet<&str> = instances.iter().map(|i| i.instance_id.as_str()).collect();
            if let Some(p) = preds.iter().find(|p| !known.contains(p.instance_id.as_str())) {
                return Err(Error::UnknownInstance(p.instance_id.clone()));
            }
            let mut results = Vec::new();
            for a in &adapters {
                let mine: Vec<DynamicInstance> = instances.iter().filter(|i| i.project == a.project).cloned().collect();
                let ids: HashSet<&str> = mine.iter().map(|i| i.instance_id.as_str()).collect();
                let my_preds: Vec<PredictionRecord> =
                    preds.iter().filter(|p| ids.contains(p.instance_id.as_str())).cloned().collect();
                if !mine.is_empty() {
                    results.extend(evaluate_dynamic(&mine, &my_preds, a, common.workers, &WordPunct::default())?);
                }
            }
            if let Some(orphan) = instances.iter().find(|i| !adapters.iter().any(|a| a.project == i.project)) {
                return Err(Error::Config(format!("no adapter for project `{}`", orphan.project)));
            }
            let mut report = aggregate_dynamic(&results)?;
            let tools: HashSet<&str> = preds.iter().map(|p| p.tool.as_str()).collect();
            if tools.len() == 1 {
                report.tool = tools.into_iter().next().map(str::to_string);
            }
            if let Some(dir) = common.out_dir()? {
                write(&dir.join("dynamic_records.jsonl"), &jsonl(&results)?)?;
            }
            finish(Report::DynamicReport(report), "dynamic_report", &common)
        }
        Command::Report { inputs, common } => {
            let reports = inputs
                .iter()
                .map(|path| {
                    let text = fs::read_to_string(path).map_err(|e| Error::Io { path: path.clone(), source: e })?;
                    Report::from_json(&text)
                })
                .collect::<Result<Vec<_>>>()?;
            let render = |format| reports.iter().map(|r| emit_report(r, format)).collect::<String>();
            if let Some(dir) = common.out_dir()? {
                write(&dir.join("report.md"), render(OutputFormat::Table).as_bytes())?;
            }
            emit(&render(common.format()))
        }
    }
}

fn one_line(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let msg = e.to_string();
            let before_usage = msg.split("\nUsage:").next().unwrap_or("");
            let text = one_line(before_usage.trim_start_matches("error: "));
            eprintln!("logbench: error code=UsageError message={text}");
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("logbench: error code={} message={}", e.code(), one_line(&e.to_string()));
            ExitCode::FAILURE
        }
    }
}
