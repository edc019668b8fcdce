//! Code-level scoring of predicted statements against masked instances.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use indexmap::IndexMap;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{CorpusInstance, LengthClass};
use crate::error::{Error, Result};
use crate::metrics::{bleu, rouge_l};
use crate::model::{level_distance, normalize_ws, LogCallParser, LogStatement, Tokenizer, WordPunct};

/// One tool's output for one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictionRecord {
    pub instance_id: String,
    /// 1-based line of the instance's code before which the statement goes.
    pub insert_pos: usize,
    pub statements: Vec<String>,
    pub tool: String,
}

/// What "message accuracy" compares.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MessageRule {
    /// Level, template and dynamic expressions must all agree.
    #[default]
    FullStatement,
    /// Only the template text must agree.
    TemplateOnly,
}

#[derive(Clone)]
pub struct StaticConfig {
    pub parser: LogCallParser,
    pub tokenizer: Arc<dyn Tokenizer>,
    pub message_rule: MessageRule,
}

impl Default for StaticConfig {
    fn default() -> Self {
        StaticConfig {
            parser: LogCallParser::default(),
            tokenizer: Arc::new(WordPunct::default()),
            message_rule: MessageRule::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScoreStatus {
    Scored,
    Unparseable,
    Missing,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceScore {
    pub instance_id: String,
    pub project: String,
    pub length_class: LengthClass,
    pub status: ScoreStatus,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    pub position: bool,
    pub level: bool,
    pub level_distance: u8,
    pub message: bool,
    pub dea: bool,
    pub bleu4: f64,
    pub rouge_l: f64,
}

impl InstanceScore {
    fn zero(instance: &CorpusInstance, status: ScoreStatus, note: Option<String>) -> Self {
        InstanceScore {
            instance_id: instance.id.clone(),
            project: instance.project.clone(),
            length_class: instance.length_class,
            status,
            note,
            position: false,
            level: false,
            level_distance: 5,
            message: false,
            dea: false,
            bleu4: 0.0,
            rouge_l: 0.0,
        }
    }
}

fn check_id(pred: &PredictionRecord, instance: &CorpusInstance) -> Result<()> {
    if pred.instance_id != instance.id {
        return Err(Error::UnknownInstance(pred.instance_id.clone()));
    }
    Ok(())
}

pub fn score_position(pred: &PredictionRecord, instance: &CorpusInstance) -> Result<bool> {
    check_id(pred, instance)?;
    Ok(pred.insert_pos == instance.log_pos)
}

/// BLEU-4 and ROUGE-L of two token sequences. Identical sequences (empty
/// included) score 1; otherwise an empty side scores 0.
pub fn text_similarity(candidate: &[String], reference: &[String]) -> (f64, f64) {
    if candidate == reference {
        return (1.0, 1.0);
    }
    (
        bleu(candidate, reference, 4).unwrap_or(0.0),
        rouge_l(candidate, reference).unwrap_or(0.0),
    )
}

fn message_matches(rule: MessageRule, pred: &LogStatement, oracle: &LogStatement) -> bool {
    let template = normalize_ws(&pred.static_text) == normalize_ws(&oracle.static_text);
    match rule {
        MessageRule::TemplateOnly => template,
        MessageRule::FullStatement => template && pred.same_structure(oracle),
    }
}

/// Scores one prediction. A prediction that does not parse as exactly one
/// log statement scores zero on every metric instead of failing the run.
pub fn score_instance(
    pred: &PredictionRecord,
    instance: &CorpusInstance,
    config: &StaticConfig,
) -> Result<InstanceScore> {
    let position = score_position(pred, instance)?;
    let parsed = match pred.statements.as_slice() {
        [one] => config.parser.parse(one).map_err(|e| e.to_string()),
        [] => Err("no statement".to_string()),
        many => Err(format!("{} statements; static evaluation needs one", many.len())),
    };
    let stmt = match parsed {
        Ok(s) => s,
        Err(reason) => {
            return Ok(InstanceScore::zero(instance, ScoreStatus::Unparseable, Some(reason)));
        }
    };
    let oracle = &instance.oracle;
    let cand = config.tokenizer.tokenize(&stmt.static_text);
    let refs = config.tokenizer.tokenize(&oracle.static_text);
    let (bleu4, rouge_l) = text_similarity(&cand, &refs);
    Ok(InstanceScore {
        instance_id: instance.id.clone(),
        project: instance.project.clone(),
        length_class: instance.length_class,
        status: ScoreStatus::Scored,
        note: None,
        position,
        level: stmt.level == oracle.level,
        level_distance: level_distance(stmt.level, oracle.level),
        message: message_matches(config.message_rule, &stmt, oracle),
        dea: stmt.normalized_exprs() == oracle.normalized_exprs(),
        bleu4,
        rouge_l,
    })
}

/// Metric block for one slice of the corpus. Accuracies are percentages.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StaticMetrics {
    pub n: usize,
    pub pa: f64,
    pub la: f64,
    pub ma: f64,
    pub ald: f64,
    pub dea: f64,
    pub bleu4: f64,
    pub rouge_l: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StaticReport {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tool: Option<String>,
    pub n_total: usize,
    pub overall: StaticMetrics,
    /// Projects in corpus order.
    pub by_project: IndexMap<String, StaticMetrics>,
    /// `short` then `long`, omitting empty classes.
    pub by_length: IndexMap<String, StaticMetrics>,
}

/// Order-independent sum: values are added in sorted order.
pub(crate) fn stable_mean(mut values: Vec<f64>) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    values.sort_by(f64::total_cmp);
    values.iter().sum::<f64>() / values.len() as f64
}

fn metrics_of(records: &[&InstanceScore]) -> StaticMetrics {
    let n = records.len();
    let pct = |count: usize| 100.0 * count as f64 / n as f64;
    StaticMetrics {
        n,
        pa: pct(records.iter().filter(|r| r.position).count()),
        la: pct(records.iter().filter(|r| r.level).count()),
        ma: pct(records.iter().filter(|r| r.message).count()),
        ald: stable_mean(records.iter().map(|r| r.level_distance as f64).collect()),
        dea: pct(records.iter().filter(|r| r.dea).count()),
        bleu4: stable_mean(records.iter().map(|r| r.bleu4).collect()),
        rouge_l: stable_mean(records.iter().map(|r| r.rouge_l).collect()),
    }
}

/// Aggregates per-instance scores overall, per project and per length class.
pub fn aggregate(records: &[InstanceScore], instances: &[CorpusInstance]) -> Result<StaticReport> {
    if records.is_empty() {
        return Err(Error::EmptyInput);
    }
    let known: HashSet<&str> = instances.iter().map(|i| i.id.as_str()).collect();
    if let Some(r) = records.iter().find(|r| !known.contains(r.instance_id.as_str())) {
        return Err(Error::UnknownInstance(r.instance_id.clone()));
    }

    let all: Vec<&InstanceScore> = records.iter().collect();
    let mut by_project = IndexMap::new();
    for inst in instances {
        if by_project.contains_key(&inst.project) {
            continue;
        }
        let slice: Vec<&InstanceScore> = records.iter().filter(|r| r.project == inst.project).collect();
        if !slice.is_empty() {
            by_project.insert(inst.project.clone(), metrics_of(&slice));
        }
    }
    let mut by_length = IndexMap::new();
    for class in [LengthClass::Short, LengthClass::Long] {
        let slice: Vec<&InstanceScore> = records.iter().filter(|r| r.length_class == class).collect();
        if !slice.is_empty() {
            by_length.insert(class.name().to_string(), metrics_of(&slice));
        }
    }
    Ok(StaticReport {
        tool: None,
        n_total: records.len(),
        overall: metrics_of(&all),
        by_project,
        by_length,
    })
}

/// Scores every instance. Instances without a prediction count as misses;
/// predictions naming unknown instances are an error.
pub fn evaluate_static(
    instances: &[CorpusInstance],
    predictions: &[PredictionRecord],
    config: &StaticConfig,
) -> Result<(Vec<InstanceScore>, StaticReport)> {
    let by_id: HashMap<&str, &PredictionRecord> = predictions
        .iter()
        .map(|p| (p.instance_id.as_str(), p))
        .collect();
    let known: HashSet<&str> = instances.iter().map(|i| i.id.as_str()).collect();
    if let Some(p) = predictions.iter().find(|p| !known.contains(p.instance_id.as_str())) {
        return Err(Error::UnknownInstance(p.instance_id.clone()));
    }

    let records = instances
        .par_iter()
        .map(|inst| match by_id.get(inst.id.as_str()) {
            Some(pred) => score_instance(pred, inst, config),
            None => Ok(InstanceScore::zero(inst, ScoreStatus::Missing, None)),
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = aggregate(&records, instances)?;
    let tools: HashSet<&str> = predictions.iter().map(|p| p.tool.as_str()).collect();
    if tools.len() == 1 {
        report.tool = tools.into_iter().next().map(str::to_string);
    }
    Ok((records, report))
}

/// Predictions that reproduce every oracle exactly.
pub fn oracle_predictions(instances: &[CorpusInstance], tool: &str) -> Vec<PredictionRecord> {
    instances
        .iter()
        .map(|i| PredictionRecord {
            instance_id: i.id.clone(),
            insert_pos: i.log_pos,
            statements: vec![i.oracle_text.trim().to_string()],
            tool: tool.to_string(),
        })
        .collect()
}
