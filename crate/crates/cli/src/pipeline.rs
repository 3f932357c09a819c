//! The end-to-end run: transform, train, sample, score, evaluate and
//! estimate, once per selected rule.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use sect_core::dataset::DatasetParams;
use sect_core::eval::EvalReport;
use sect_core::provider::LikelihoodProvider;
use sect_java::SourceUnit;
use sect_transform::RuleId;

use crate::io::{read_units, sha256_hex, to_json, to_jsonl, write_file};
use crate::stages::{self, ProviderSpec};
use crate::CliError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PipelineConfig {
    pub train: PathBuf,
    pub test: PathBuf,
    pub rules: Vec<RuleId>,
    /// Provider for the model trained on original code.
    pub provider: ProviderSpec,
    /// Remote endpoint of the model trained on transformed code. Surrogates
    /// are fitted on the transformed corpus instead.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transformed_endpoint: Option<String>,
    pub k: f64,
    pub seed: u64,
    pub bootstrap: usize,
    pub max_per_side: usize,
    pub min_words: usize,
    pub max_words: usize,
    /// Not recorded in the manifest, so reruns into other directories
    /// produce the same manifest.
    #[serde(skip)]
    pub out: PathBuf,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Artifact {
    /// Relative to the output directory.
    pub path: String,
    pub sha256: String,
    pub bytes: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub tool: String,
    pub version: String,
    pub config: PipelineConfig,
    pub artifacts: Vec<Artifact>,
}

/// AUC reports of both arms for one rule.
#[derive(Clone, Debug, PartialEq)]
pub struct RuleSummary {
    pub rule_id: RuleId,
    pub original: Vec<EvalReport>,
    pub transformed: Vec<EvalReport>,
}

struct Writer<'a> {
    root: &'a Path,
    artifacts: Vec<Artifact>,
}

impl Writer<'_> {
    fn put(&mut self, rel: &str, contents: &str) -> Result<(), CliError> {
        write_file(&self.root.join(rel), contents)?;
        self.artifacts.push(Artifact {
            path: rel.to_owned(),
            sha256: sha256_hex(contents.as_bytes()),
            bytes: contents.len(),
        });
        Ok(())
    }
}

impl PipelineConfig {
    fn check(&self) -> Result<(), CliError> {
        for p in [&self.train, &self.test] {
            if !p.is_dir() {
                return Err(CliError::config(format!("{} is not a directory", p.display())));
            }
        }
        if self.rules.is_empty() {
            return Err(CliError::config("no rules selected"));
        }
        if matches!(self.provider, ProviderSpec::Remote { .. }) && self.transformed_endpoint.is_none() {
            return Err(CliError::config(
                "a remote provider needs --transformed-endpoint for the model trained on transformed code",
            ));
        }
        if !(self.k > 0.0 && self.k <= 1.0) {
            return Err(CliError::config(format!("k must lie in (0, 1], got {}", self.k)));
        }
        if self.bootstrap == 0 {
            return Err(CliError::config("--bootstrap must be positive"));
        }
        Ok(())
    }

    fn dataset_params(&self) -> DatasetParams {
        DatasetParams {
            max_per_side: self.max_per_side,
            min_words: self.min_words,
            max_words: self.max_words,
            seed: self.seed,
        }
    }

    fn transformed_provider(&self, corpus: &[SourceUnit]) -> Result<Box<dyn LikelihoodProvider>, CliError> {
        match (&self.provider, &self.transformed_endpoint) {
            (ProviderSpec::Remote { .. }, Some(endpoint)) => ProviderSpec::Remote {
                endpoint: endpoint.clone(),
            }
            .build(corpus),
            _ => self.provider.build(corpus),
        }
    }
}

/// Runs every stage for every rule and writes `manifest.json` last.
/// Artifacts of earlier stages stay on disk when a later one fails.
pub fn run_pipeline(cfg: &PipelineConfig) -> Result<(Manifest, Vec<RuleSummary>), CliError> {
    cfg.check()?;
    let train = read_units(&cfg.train)?;
    let test = read_units(&cfg.test)?;
    if train.is_empty() || test.is_empty() {
        return Err(CliError::config("train and test directories need .java files"));
    }
    let mut w = Writer {
        root: &cfg.out,
        artifacts: Vec::new(),
    };
    w.put("features.jsonl", &to_jsonl(&stages::features(&train)))?;
    let original_model = cfg.provider.build(&train)?;
    let mut summaries = Vec::new();
    for &rule in &cfg.rules {
        let dir = format!("rule-{rule}");
        let rewritten = stages::transform(&train, rule, cfg.seed)?;
        let records: Vec<_> = rewritten.iter().map(|(_, r)| r.clone()).collect();
        w.put(&format!("{dir}/transform.jsonl"), &to_jsonl(&records))?;
        let transformed: Vec<SourceUnit> = rewritten.into_iter().map(|(u, _)| u).collect();
        for u in &transformed {
            w.put(&format!("{dir}/transformed/{}", u.id), &u.text)?;
        }

        let ds = stages::dataset(&train, &test, rule, cfg.dataset_params())?;
        w.put(&format!("{dir}/dataset.json"), &to_json(&ds))?;

        let transformed_model = cfg.transformed_provider(&transformed)?;
        let s0 = stages::score(&ds, original_model.as_ref(), cfg.k)?;
        let s1 = stages::score(&ds, transformed_model.as_ref(), cfg.k)?;
        w.put(&format!("{dir}/scores.original.jsonl"), &to_jsonl(&s0))?;
        w.put(&format!("{dir}/scores.transformed.jsonl"), &to_jsonl(&s1))?;

        let e0 = stages::evaluate(&s0, cfg.bootstrap, cfg.seed)?;
        let e1 = stages::evaluate(&s1, cfg.bootstrap, cfg.seed)?;
        w.put(&format!("{dir}/eval.original.jsonl"), &to_jsonl(&e0))?;
        w.put(&format!("{dir}/eval.transformed.jsonl"), &to_jsonl(&e1))?;

        let frame = stages::causal_frame(&ds, &s0, &s1)?;
        w.put(&format!("{dir}/frame.jsonl"), &to_jsonl(&frame))?;
        let report = stages::causal(&frame, &rule.to_string(), cfg.seed)?;
        w.put(&format!("{dir}/ate.json"), &to_json(&report))?;
        summaries.push(RuleSummary {
            rule_id: rule,
            original: e0,
            transformed: e1,
        });
    }
    let manifest = Manifest {
        tool: env!("CARGO_PKG_NAME").to_owned(),
        version: env!("CARGO_PKG_VERSION").to_owned(),
        config: cfg.clone(),
        artifacts: w.artifacts,
    };
    write_file(&cfg.out.join("manifest.json"), &to_json(&manifest))?;
    Ok((manifest, summaries))
}
