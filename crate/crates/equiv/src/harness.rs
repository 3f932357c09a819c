use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::interp::{Program, DEFAULT_STEP_LIMIT};
use crate::snippet::{JType, SnippetSpec};
use crate::{EquivError, ExecResult, Value};

/// Strings handed to `String` parameters. Covers the empty string, case
/// variants and the labels used by the curated snippets.
pub const STRING_POOL: [&str; 8] = ["", "a", "A", "open", "OPEN", "closed", "hello world", "x1"];

const INT_EDGES: [i32; 5] = [i32::MIN, -1, 0, 1, i32::MAX];
const LONG_EDGES: [i64; 5] = [i64::MIN, -1, 0, 1, i64::MAX];

fn draw_int(rng: &mut ChaCha8Rng) -> i32 {
    if rng.random_ratio(1, 5) {
        INT_EDGES[rng.random_range(0..INT_EDGES.len())]
    } else {
        rng.random_range(-100..=100)
    }
}

/// One random argument vector for `params`.
pub fn draw_args(params: &[JType], rng: &mut ChaCha8Rng) -> Vec<Value> {
    params
        .iter()
        .map(|ty| match ty {
            JType::Int => Value::Int(draw_int(rng)),
            JType::Long => Value::Long(if rng.random_ratio(1, 5) {
                LONG_EDGES[rng.random_range(0..LONG_EDGES.len())]
            } else {
                rng.random_range(-100..=100)
            }),
            JType::Boolean => Value::Boolean(rng.random()),
            JType::Str => Value::Str(STRING_POOL[rng.random_range(0..STRING_POOL.len())].to_owned()),
            JType::IntArray => {
                let len = rng.random_range(0..=8);
                Value::IntArray((0..len).map(|_| draw_int(rng)).collect())
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub trial: usize,
    pub args: Vec<Value>,
    pub original: ExecResult,
    pub transformed: ExecResult,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffReport {
    pub trials: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub first_failure: Option<Failure>,
}

impl DiffReport {
    pub fn pass(&self) -> bool {
        self.failed == 0
    }
}

/// Runs both variants on `trials` seeded argument vectors. A trial where
/// either side hits an unsupported construct is skipped, not failed.
pub fn differential_test(
    original: &SnippetSpec,
    transformed: &SnippetSpec,
    trials: usize,
    seed: u64,
) -> Result<DiffReport, EquivError> {
    if trials == 0 {
        return Err(EquivError::NoTrials);
    }
    if original.type_signature() != transformed.type_signature() {
        return Err(EquivError::SignatureMismatch(
            original.type_signature(),
            transformed.type_signature(),
        ));
    }
    let a = Program::new(original)?;
    let b = Program::new(transformed)?;
    let types: Vec<JType> = original.params.iter().map(|p| p.ty).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = DiffReport {
        trials,
        passed: 0,
        failed: 0,
        skipped: 0,
        first_failure: None,
    };
    for trial in 0..trials {
        let args = draw_args(&types, &mut rng);
        let ra = a.run(&args, DEFAULT_STEP_LIMIT)?;
        let rb = b.run(&args, DEFAULT_STEP_LIMIT)?;
        if ra.is_unsupported() || rb.is_unsupported() {
            report.skipped += 1;
        } else if ra == rb {
            report.passed += 1;
        } else {
            report.failed += 1;
            report.first_failure.get_or_insert(Failure {
                trial,
                args,
                original: ra,
                transformed: rb,
            });
        }
    }
    Ok(report)
}
