//! Scoring predictions by what they log at runtime.

use std::collections::{HashMap, HashSet};
use std::fs;
use std::path::Path;

use indexmap::IndexMap;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::adapter::BuildAdapter;
use super::build::{compile, run_test};
use super::logs::{excess_lines, HeaderStripper};
use super::process::run_shell;
use super::workspace::{tree_checksum, Workspace};
use super::{splice_source, DynamicInstance};
use crate::error::{Error, Result};
use crate::metrics::{bleu, rouge_l, rouge_n, tfidf_cosine};
use crate::model::Tokenizer;
use crate::static_eval::{stable_mean, PredictionRecord};

/// Similarity of two log bodies, compared as whole documents.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct LfsScores {
    pub cos: f64,
    pub bleu1: f64,
    pub bleu2: f64,
    pub bleu3: f64,
    pub bleu4: f64,
    pub rouge1: f64,
    pub rouge2: f64,
    pub rouge_l: f64,
}

impl LfsScores {
    fn uniform(v: f64) -> Self {
        LfsScores {
            cos: v,
            bleu1: v,
            bleu2: v,
            bleu3: v,
            bleu4: v,
            rouge1: v,
            rouge2: v,
            rouge_l: v,
        }
    }
}

/// Identical bodies (both empty included) score 1 everywhere; otherwise the
/// unsmoothed kernels apply and an empty side scores 0.
pub fn lfs_scores(predicted: &[String], oracle: &[String], tokenizer: &dyn Tokenizer) -> LfsScores {
    let p = tokenizer.tokenize(&predicted.join("\n"));
    let o = tokenizer.tokenize(&oracle.join("\n"));
    if p == o {
        return LfsScores::uniform(1.0);
    }
    LfsScores {
        cos: tfidf_cosine(&p, &o),
        bleu1: bleu(&p, &o, 1).unwrap_or(0.0),
        bleu2: bleu(&p, &o, 2).unwrap_or(0.0),
        bleu3: bleu(&p, &o, 3).unwrap_or(0.0),
        bleu4: bleu(&p, &o, 4).unwrap_or(0.0),
        rouge1: rouge_n(&p, &o, 1).unwrap_or(0.0),
        rouge2: rouge_n(&p, &o, 2).unwrap_or(0.0),
        rouge_l: rouge_l(&p, &o).unwrap_or(0.0),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DynamicResult {
    pub instance_id: String,
    pub project: String,
    pub compiled: bool,
    pub timed_out: bool,
    /// Empty when the prediction did not compile or the test timed out.
    pub predicted_log_body: Vec<String>,
    pub lfs: LfsScores,
    pub fp: bool,
    #[serde(rename = "fn")]
    pub fn_: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
}

impl DynamicResult {
    fn not_compiled(inst: &DynamicInstance, error: String) -> Self {
        DynamicResult {
            instance_id: inst.instance_id.clone(),
            project: inst.project.clone(),
            compiled: false,
            timed_out: false,
            predicted_log_body: vec![],
            lfs: LfsScores::default(),
            fp: false,
            fn_: inst.expects_logs,
            error: Some(error),
        }
    }
}

/// A compiled copy of the pristine project that per-instance workspaces
/// are cloned from, so each evaluation only rebuilds what it touched.
pub fn prime_workspace(adapter: &BuildAdapter) -> Result<Workspace> {
    let ws = Workspace::copy_of(&adapter.root)?;
    compile(adapter, ws.path())?;
    Ok(ws)
}

/// Runs one prediction in its own copy of `primed`.
pub fn evaluate_prediction(
    inst: &DynamicInstance,
    pred: &PredictionRecord,
    adapter: &BuildAdapter,
    primed: &Path,
    header: &HeaderStripper,
    tokenizer: &dyn Tokenizer,
) -> Result<DynamicResult> {
    if pred.instance_id != inst.instance_id {
        return Err(Error::UnknownInstance(pred.instance_id.clone()));
    }
    let ws = Workspace::copy_of(primed)?;
    let file = ws.join(&inst.source_path);
    let content = fs::read_to_string(&file).map_err(|e| Error::io(&file, e))?;
    let spliced = match splice_source(&content, inst, pred.insert_pos, &pred.statements) {
        Ok(s) => s,
        Err(Error::InvalidArgument(msg)) => return Ok(DynamicResult::not_compiled(inst, msg)),
        Err(e) => return Err(e),
    };
    fs::write(&file, spliced).map_err(|e| Error::io(&file, e))?;

    let out = run_shell(&adapter.compile_cmd, ws.path(), adapter.timeout())?;
    if !out.success() {
        let msg = if out.timed_out {
            format!("compile timed out after {}s", adapter.timeout_s)
        } else {
            format!("compile failed: {}", out.tail())
        };
        return Ok(DynamicResult::not_compiled(inst, msg));
    }

    let (body, timed_out, error) = match run_test_timed(adapter, header, ws.path(), &inst.covering_test)? {
        TestOutcome::Passed(body) => (body, false, None),
        TestOutcome::Failed(body) => (body, false, Some("test failed".to_string())),
        TestOutcome::TimedOut => (vec![], true, Some(format!("test timed out after {}s", adapter.timeout_s))),
    };
    let emitted = !excess_lines(&body, &inst.baseline_log_body).is_empty();
    Ok(DynamicResult {
        instance_id: inst.instance_id.clone(),
        project: inst.project.clone(),
        compiled: true,
        timed_out,
        lfs: lfs_scores(&body, &inst.oracle_log_body, tokenizer),
        fp: emitted && !inst.expects_logs,
        fn_: !emitted && inst.expects_logs,
        predicted_log_body: body,
        error,
    })
}

enum TestOutcome {
    Passed(Vec<String>),
    /// Non-zero exit; whatever was logged still counts.
    Failed(Vec<String>),
    TimedOut,
}

fn run_test_timed(adapter: &BuildAdapter, header: &HeaderStripper, dir: &Path, test: &str) -> Result<TestOutcome> {
    if let Some(body) = run_test(adapter, header, dir, test)? {
        return Ok(TestOutcome::Passed(body));
    }
    // Distinguish a failing test from a hung one by re-running with capture.
    let out = run_shell(&adapter.test_command(test), dir, adapter.timeout())?;
    if out.timed_out {
        return Ok(TestOutcome::TimedOut);
    }
    let text = match &adapter.test_log {
        Some(log) => fs::read_to_string(dir.join(log)).unwrap_or_default(),
        None => out.stdout,
    };
    Ok(TestOutcome::Failed(header.body(&text)))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DynamicMetrics {
    pub n: usize,
    pub compiled: usize,
    /// Percent of predictions that compiled.
    pub csr: f64,
    /// Means over compiled predictions, in `[0, 1]`.
    pub lfs: LfsScores,
    pub fp: usize,
    #[serde(rename = "fn")]
    pub fn_: usize,
    /// Percent of all predictions.
    pub fplr: f64,
    pub fnlr: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DynamicReport {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tool: Option<String>,
    pub n_total: usize,
    pub overall: DynamicMetrics,
    pub by_project: IndexMap<String, DynamicMetrics>,
}

fn metrics_of(results: &[&DynamicResult]) -> DynamicMetrics {
    let n = results.len();
    let compiled: Vec<&&DynamicResult> = results.iter().filter(|r| r.compiled).collect();
    let mean = |f: fn(&LfsScores) -> f64| stable_mean(compiled.iter().map(|r| f(&r.lfs)).collect());
    let fp = results.iter().filter(|r| r.fp).count();
    let fn_ = results.iter().filter(|r| r.fn_).count();
    let pct = |c: usize| 100.0 * c as f64 / n as f64;
    DynamicMetrics {
        n,
        compiled: compiled.len(),
        csr: pct(compiled.len()),
        lfs: LfsScores {
            cos: mean(|l| l.cos),
            bleu1: mean(|l| l.bleu1),
            bleu2: mean(|l| l.bleu2),
            bleu3: mean(|l| l.bleu3),
            bleu4: mean(|l| l.bleu4),
            rouge1: mean(|l| l.rouge1),
            rouge2: mean(|l| l.rouge2),
            rouge_l: mean(|l| l.rouge_l),
        },
        fp,
        fn_,
        fplr: pct(fp),
        fnlr: pct(fn_),
    }
}

/// CSR, mean LFS over compiled predictions, FPLR and FNLR; overall and per
/// project in first-seen order.
pub fn aggregate_dynamic(results: &[DynamicResult]) -> Result<DynamicReport> {
    if results.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut by_project: IndexMap<String, Vec<&DynamicResult>> = IndexMap::new();
    for r in results {
        by_project.entry(r.project.clone()).or_default().push(r);
    }
    let all: Vec<&DynamicResult> = results.iter().collect();
    Ok(DynamicReport {
        tool: None,
        n_total: results.len(),
        overall: metrics_of(&all),
        by_project: by_project.into_iter().map(|(k, v)| (k, metrics_of(&v))).collect(),
    })
}

/// Evaluates every instance of one project with up to `workers` builds at a
/// time. An instance without a prediction counts as not compiled.
pub fn evaluate_dynamic(
    instances: &[DynamicInstance],
    predictions: &[PredictionRecord],
    adapter: &BuildAdapter,
    workers: usize,
    tokenizer: &dyn Tokenizer,
) -> Result<Vec<DynamicResult>> {
    let known: HashSet<&str> = instances.iter().map(|i| i.instance_id.as_str()).collect();
    if let Some(p) = predictions.iter().find(|p| !known.contains(p.instance_id.as_str())) {
        return Err(Error::UnknownInstance(p.instance_id.clone()));
    }
    let by_id: HashMap<&str, &PredictionRecord> =
        predictions.iter().map(|p| (p.instance_id.as_str(), p)).collect();
    let header = adapter.header()?;
    let pristine = tree_checksum(&adapter.root)?;
    let primed = prime_workspace(adapter)?;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let results = pool.install(|| {
        instances
            .par_iter()
            .map(|inst| {
                let result = match by_id.get(inst.instance_id.as_str()) {
                    Some(pred) => evaluate_prediction(inst, pred, adapter, primed.path(), &header, tokenizer)?,
                    None => DynamicResult::not_compiled(inst, "missing prediction".into()),
                };
                if tree_checksum(&adapter.root)? != pristine {
                    return Err(Error::WorkspaceCorrupt(format!(
                        "{} changed while evaluating {}",
                        adapter.root.display(),
                        inst.instance_id
                    )));
                }
                Ok(result)
            })
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(results)
}
