//! Curated per-rule snippets and the rule-level equivalence check.

use serde::{Deserialize, Serialize};
use sect_transform::{apply_rule, apply_sequence, applicable_counts, composition_order, RuleId, TransformRule};

use crate::harness::{differential_test, DiffReport};
use crate::snippet::SnippetSpec;
use crate::{EquivError, ExecResult, Value};

const BUILTIN: &str = include_str!("../snippets.toml");

/// One method written to exercise a rule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuratedSnippet {
    pub rule: u8,
    pub name: String,
    pub method: String,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Suite {
    #[serde(rename = "snippet", default)]
    pub snippets: Vec<CuratedSnippet>,
}

impl Suite {
    /// The suite bundled with the crate.
    pub fn builtin() -> Suite {
        Suite::from_toml(BUILTIN).expect("bundled snippet file is valid")
    }

    pub fn from_toml(text: &str) -> Result<Suite, EquivError> {
        toml::from_str(text).map_err(|e| EquivError::SuiteFormat(e.to_string()))
    }

    pub fn for_rule(&self, rule: u8) -> Vec<&CuratedSnippet> {
        self.snippets.iter().filter(|s| s.rule == rule).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnippetFailure {
    pub snippet: String,
    pub trial: usize,
    pub args: Vec<Value>,
    pub original: ExecResult,
    pub transformed: ExecResult,
    pub transformed_body: String,
}

/// Aggregate over every snippet checked for one rule (or the composition).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleReport {
    pub rule_id: RuleId,
    pub snippets: usize,
    pub trials: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub first_failure: Option<SnippetFailure>,
}

impl RuleReport {
    pub fn pass(&self) -> bool {
        self.failed == 0
    }
}

fn snippet_error(rule: u8, s: &CuratedSnippet, reason: impl ToString) -> EquivError {
    EquivError::Snippet {
        rule,
        name: s.name.clone(),
        reason: reason.to_string(),
    }
}

/// Rewrites each snippet with `rule` and differential-tests the pair. A
/// snippet the rule does not touch is an error: it would test nothing.
/// `RuleId::All` applies the composed pipeline to every snippet instead.
pub fn check_rule(
    rule: RuleId,
    snippets: &[&CuratedSnippet],
    trials: usize,
    seed: u64,
) -> Result<RuleReport, EquivError> {
    check_rule_with(rule, snippets, trials, seed, differential_test)
}

/// [`check_rule`] with another execution backend, such as
/// [`crate::jdk::differential_test`].
pub fn check_rule_with<E: From<EquivError>>(
    rule: RuleId,
    snippets: &[&CuratedSnippet],
    trials: usize,
    seed: u64,
    run: impl Fn(&SnippetSpec, &SnippetSpec, usize, u64) -> Result<DiffReport, E>,
) -> Result<RuleReport, E> {
    let mut report = RuleReport {
        rule_id: rule,
        snippets: snippets.len(),
        trials: 0,
        passed: 0,
        failed: 0,
        skipped: 0,
        first_failure: None,
    };
    let specs: Vec<SnippetSpec> = snippets
        .iter()
        .map(|s| SnippetSpec::from_method(&s.method).map_err(|e| snippet_error(s.rule, s, e)))
        .collect::<Result<_, _>>()?;
    let trees: Vec<_> = specs.iter().map(|s| sect_java::parse(&s.to_source())).collect();
    let order = match rule {
        RuleId::All => composition_order(&applicable_counts(&trees.iter().collect::<Vec<_>>())),
        RuleId::Rule(_) => vec![],
    };
    for ((s, spec), tree) in snippets.iter().zip(&specs).zip(&trees) {
        let outcome = match rule {
            RuleId::Rule(id) => {
                let r = TransformRule::by_id(id).ok_or_else(|| EquivError::SuiteFormat(format!("unknown rule {id}")))?;
                apply_rule(r, tree, seed)
            }
            RuleId::All => apply_sequence(&order, tree, seed, &s.name),
        }
        .map_err(|e| snippet_error(s.rule, s, e))?;
        if let RuleId::Rule(id) = rule {
            if !outcome.applied {
                return Err(snippet_error(id, s, "rule does not apply").into());
            }
        }
        let transformed = SnippetSpec::from_source(&outcome.text).map_err(|e| snippet_error(s.rule, s, e))?;
        let diff = run(spec, &transformed, trials, seed)?;
        report.trials += diff.trials;
        report.passed += diff.passed;
        report.failed += diff.failed;
        report.skipped += diff.skipped;
        if report.first_failure.is_none() {
            report.first_failure = diff.first_failure.map(|f| SnippetFailure {
                snippet: s.name.clone(),
                trial: f.trial,
                args: f.args,
                original: f.original,
                transformed: f.transformed,
                transformed_body: transformed.body.clone(),
            });
        }
    }
    Ok(report)
}
