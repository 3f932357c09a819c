//! One function per pipeline stage. Each takes the previous stage's data
//! and returns its own; file handling lives in the callers.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use sect_core::causal::{analyze, build_frame, ArmScores, DEFAULT_EPSILON};
use sect_core::dataset::{build_dataset, DatasetParams, MIDataset};
use sect_core::eval::{bootstrap_auc, EvalReport};
use sect_core::ngram::NgramModel;
use sect_core::provider::{LikelihoodProvider, RemoteProvider};
use sect_core::scoring::{score_all, ScoreRecord};
use sect_core::{Method, Report, Row};
use sect_java::{extract_features, parse, CodeFeatures, SourceUnit};
use sect_transform::{applicable, apply_all, apply_rule_to, file_seed, RuleId, TransformRule, RULES};

use crate::CliError;

pub const DEFAULT_K: f64 = 0.2;

pub fn parse_rule(text: &str) -> Result<RuleId, CliError> {
    text.trim().parse().map_err(CliError::config)
}

/// `ALL`, a single rule, or a comma separated list.
pub fn parse_rules(text: &str) -> Result<Vec<RuleId>, CliError> {
    let rules: Vec<RuleId> = text.split(',').map(parse_rule).collect::<Result<_, _>>()?;
    if rules.is_empty() {
        return Err(CliError::config("empty rule list"));
    }
    Ok(rules)
}

/// One line of a transform manifest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformRecord {
    pub id: String,
    pub rule_id: RuleId,
    pub applied: bool,
    pub site_count: usize,
    pub seed: u64,
}

/// Rewrites every unit. Units the rule does not touch come back verbatim.
pub fn transform(units: &[SourceUnit], rule: RuleId, seed: u64) -> Result<Vec<(SourceUnit, TransformRecord)>, CliError> {
    let outcomes = match rule {
        RuleId::Rule(id) => {
            let r = TransformRule::by_id(id).ok_or_else(|| CliError::config(format!("unknown rule {id}")))?;
            units
                .par_iter()
                .map(|u| apply_rule_to(r, &parse(&u.text), file_seed(seed, &u.id), &u.id))
                .collect::<Result<Vec<_>, _>>()
        }
        RuleId::All => {
            let corpus: Vec<(String, _)> = units.par_iter().map(|u| (u.id.clone(), parse(&u.text))).collect();
            apply_all(&corpus, seed)
        }
    }
    .map_err(|e| CliError::stage("transform", e))?;
    Ok(units
        .iter()
        .zip(outcomes)
        .map(|(u, o)| {
            let record = TransformRecord {
                id: u.id.clone(),
                rule_id: rule,
                applied: o.applied,
                site_count: o.site_count,
                seed: o.seed,
            };
            (SourceUnit::new(u.id.clone(), u.path.clone(), o.text), record)
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeatureRecord {
    pub id: String,
    #[serde(flatten)]
    pub features: CodeFeatures,
}

pub fn features(units: &[SourceUnit]) -> Vec<FeatureRecord> {
    units
        .par_iter()
        .map(|u| FeatureRecord {
            id: u.id.clone(),
            features: extract_features(&parse(&u.text)),
        })
        .collect()
}

/// Whether `rule` has a site in `unit`; for `ALL`, whether any rule has.
pub fn is_applicable(rule: RuleId, unit: &SourceUnit) -> bool {
    let tree = parse(&unit.text);
    match rule {
        RuleId::Rule(id) => TransformRule::by_id(id).is_some_and(|r| applicable(r, &tree)),
        RuleId::All => RULES.iter().any(|r| applicable(r, &tree)),
    }
}

pub fn dataset(train: &[SourceUnit], test: &[SourceUnit], rule: RuleId, params: DatasetParams) -> Result<MIDataset, CliError> {
    let flags: Vec<bool> = train.par_iter().map(|u| is_applicable(rule, u)).collect();
    let ok: HashMap<&str, bool> = train.iter().zip(flags).map(|(u, f)| (u.id.as_str(), f)).collect();
    build_dataset(train, test, &rule.to_string(), |u| ok.get(u.id.as_str()).copied().unwrap_or(false), params)
        .map_err(|e| CliError::stage("dataset", e))
}

/// Where per-token likelihoods come from.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ProviderSpec {
    /// n-gram model fitted on a training corpus.
    Surrogate { order: usize, alpha: f64 },
    Remote { endpoint: String },
}

impl ProviderSpec {
    /// Builds the provider; `corpus` is the training set for a surrogate.
    pub fn build(&self, corpus: &[SourceUnit]) -> Result<Box<dyn LikelihoodProvider>, CliError> {
        Ok(match self {
            ProviderSpec::Surrogate { order, alpha } => {
                Box::new(NgramModel::train(corpus, *order, *alpha).map_err(|e| CliError::stage("train", e))?)
            }
            ProviderSpec::Remote { endpoint } => Box::new(RemoteProvider::new(endpoint)),
        })
    }
}

/// LOSS, MIN_K and ZLIB for every member, then every non-member.
pub fn score(ds: &MIDataset, provider: &dyn LikelihoodProvider, k: f64) -> Result<Vec<ScoreRecord>, CliError> {
    if !(k > 0.0 && k <= 1.0) {
        return Err(CliError::config(format!("k must lie in (0, 1], got {k}")));
    }
    let samples: Vec<(&SourceUnit, bool)> = ds
        .members
        .iter()
        .map(|u| (u, true))
        .chain(ds.nonmembers.iter().map(|u| (u, false)))
        .collect();
    let per_sample: Vec<Vec<ScoreRecord>> = samples
        .par_iter()
        .map(|&(u, is_member)| {
            let profile = provider.profile(&u.id, &u.text).map_err(|e| CliError::stage("score", e))?;
            let scores = score_all(&profile, u.text.as_bytes(), k).map_err(|e| CliError::stage("score", format!("{}: {e}", u.id)))?;
            Ok(scores
                .into_iter()
                .map(|s| ScoreRecord {
                    id: u.id.clone(),
                    method: s.method,
                    value: s.value,
                    is_member,
                })
                .collect())
        })
        .collect::<Result<_, CliError>>()?;
    Ok(per_sample.into_iter().flatten().collect())
}

/// One report per method present in `scores`, in LOSS, MIN_K, ZLIB order.
pub fn evaluate(scores: &[ScoreRecord], n_boot: usize, seed: u64) -> Result<Vec<EvalReport>, CliError> {
    if n_boot == 0 {
        return Err(CliError::config("--bootstrap must be positive"));
    }
    let mut reports = Vec::new();
    for m in Method::ALL {
        let pairs: Vec<(f64, bool)> = scores.iter().filter(|s| s.method == m).map(|s| (s.value, s.is_member)).collect();
        if pairs.is_empty() {
            continue;
        }
        let roc = bootstrap_auc(&pairs, n_boot, seed).map_err(|e| CliError::stage("evaluate", format!("{m}: {e}")))?;
        let n_member = pairs.iter().filter(|p| p.1).count();
        reports.push(EvalReport::new(m, &roc, n_member, pairs.len() - n_member));
    }
    if reports.is_empty() {
        return Err(CliError::stage("evaluate", "no scores"));
    }
    Ok(reports)
}

fn arm(ds: &MIDataset, scores: &[ScoreRecord]) -> Result<ArmScores<f64>, CliError> {
    let mut by_key: HashMap<(&str, bool, Method), f64> = HashMap::new();
    for s in scores {
        by_key.insert((&s.id, s.is_member, s.method), s.value);
    }
    let samples = ds.members.iter().map(|u| (u, true)).chain(ds.nonmembers.iter().map(|u| (u, false)));
    let mut out = ArmScores {
        ids: Vec::new(),
        is_member: Vec::new(),
        values: [Vec::new(), Vec::new(), Vec::new()],
    };
    for (u, member) in samples {
        out.ids.push(u.id.clone());
        out.is_member.push(member);
        for (col, m) in Method::ALL.into_iter().enumerate() {
            let v = by_key
                .get(&(u.id.as_str(), member, m))
                .ok_or_else(|| CliError::stage("causal", format!("no {m} score for {}", u.id)))?;
            out.values[col].push(*v);
        }
    }
    Ok(out)
}

/// Causal rows from the scores of the original-trained (T = 0) and the
/// transformed-trained (T = 1) model on the same dataset. Confounders are
/// the features of each member sample.
pub fn causal_frame(ds: &MIDataset, original: &[ScoreRecord], transformed: &[ScoreRecord]) -> Result<Vec<Row>, CliError> {
    let a0 = arm(ds, original)?;
    let a1 = arm(ds, transformed)?;
    let feats: HashMap<String, CodeFeatures> = ds
        .members
        .par_iter()
        .map(|u| (u.id.clone(), extract_features(&parse(&u.text))))
        .collect();
    Ok(build_frame(&a0, &a1, &feats, DEFAULT_EPSILON))
}

pub fn causal(frame: &[Row], rule_id: &str, seed: u64) -> Result<Report, CliError> {
    analyze(frame, rule_id, seed).map_err(|e| CliError::stage("causal", e))
}
