//! Method-by-method comparison of an original and a rewritten source file.

use serde::{Deserialize, Serialize};

use crate::harness::differential_test;
use crate::snippet::SnippetSpec;
use crate::{EquivError, ExecResult, Value};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodFailure {
    pub method: String,
    pub trial: usize,
    pub args: Vec<Value>,
    pub original: ExecResult,
    pub transformed: ExecResult,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileReport {
    /// Methods with a body.
    pub methods: usize,
    /// Methods whose body text changed.
    pub changed: usize,
    /// Changed methods with a signature inside the typed subset.
    pub tested: usize,
    pub trials: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub first_failure: Option<MethodFailure>,
}

impl FileReport {
    pub fn absorb(&mut self, other: FileReport) {
        self.methods += other.methods;
        self.changed += other.changed;
        self.tested += other.tested;
        self.trials += other.trials;
        self.passed += other.passed;
        self.failed += other.failed;
        self.skipped += other.skipped;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
    }
}

/// Pairs the methods of both files by position and differential-tests each
/// changed one. Methods with types outside the subset are counted but not run.
pub fn check_file_pair(original: &str, transformed: &str, trials: usize, seed: u64) -> Result<FileReport, EquivError> {
    let a = SnippetSpec::methods(original);
    let b = SnippetSpec::methods(transformed);
    let names = |ms: &[(String, _)]| ms.iter().map(|(n, _)| n.clone()).collect::<Vec<_>>().join(",");
    if a.len() != b.len() || a.iter().zip(&b).any(|(x, y)| x.0 != y.0) {
        return Err(EquivError::MethodMismatch(names(&a), names(&b)));
    }
    let mut report = FileReport {
        methods: a.len(),
        ..FileReport::default()
    };
    for ((name, sa), (_, sb)) in a.into_iter().zip(b) {
        let (Ok(sa), sb) = (sa, sb) else {
            continue;
        };
        let sb = sb?;
        if sa == sb {
            continue;
        }
        report.changed += 1;
        let diff = differential_test(&sa, &sb, trials, seed)?;
        report.tested += 1;
        report.trials += diff.trials;
        report.passed += diff.passed;
        report.failed += diff.failed;
        report.skipped += diff.skipped;
        if report.first_failure.is_none() {
            report.first_failure = diff.first_failure.map(|f| MethodFailure {
                method: name.clone(),
                trial: f.trial,
                args: f.args,
                original: f.original,
                transformed: f.transformed,
            });
        }
    }
    Ok(report)
}
