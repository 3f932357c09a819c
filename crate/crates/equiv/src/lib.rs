//! Differential execution for a small Java subset.
//!
//! [`evaluate`] runs one method body on typed arguments with a step budget;
//! [`differential_test`] runs an original and a rewritten method on the same
//! seeded argument vectors and reports the first disagreement.

mod files;
mod harness;
mod interp;
pub mod jdk;
mod snippet;
pub mod suite;

pub use files::{check_file_pair, FileReport, MethodFailure};
pub use harness::{differential_test, draw_args, DiffReport, Failure, STRING_POOL};
pub use interp::{evaluate, DEFAULT_STEP_LIMIT};
pub use snippet::{JType, Param, SnippetSpec};
pub use suite::{check_rule, check_rule_with, CuratedSnippet, RuleReport, SnippetFailure, Suite};

use serde::{Deserialize, Serialize};

/// A typed argument or result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Value {
    Int(i32),
    Long(i64),
    Boolean(bool),
    #[serde(rename = "String")]
    Str(String),
    #[serde(rename = "int[]")]
    IntArray(Vec<i32>),
}

impl Value {
    pub fn ty(&self) -> JType {
        match self {
            Value::Int(_) => JType::Int,
            Value::Long(_) => JType::Long,
            Value::Boolean(_) => JType::Boolean,
            Value::Str(_) => JType::Str,
            Value::IntArray(_) => JType::IntArray,
        }
    }

    /// Java source literal for this value.
    pub fn java_literal(&self) -> String {
        match self {
            Value::Int(i32::MIN) => "Integer.MIN_VALUE".to_owned(),
            Value::Int(v) => v.to_string(),
            Value::Long(i64::MIN) => "Long.MIN_VALUE".to_owned(),
            Value::Long(v) => format!("{v}L"),
            Value::Boolean(b) => b.to_string(),
            Value::Str(s) => format!("{s:?}"),
            Value::IntArray(xs) => {
                let items: Vec<String> = xs.iter().map(|&x| Value::Int(x).java_literal()).collect();
                format!("new int[]{{{}}}", items.join(", "))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Trap {
    DivByZero,
    IndexOutOfBounds,
    StepLimit,
    Unsupported,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Value,
    Trap,
}

/// Outcome of one execution: a value or a trap, never both.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExecResult {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trap: Option<Trap>,
}

impl ExecResult {
    pub fn value(v: Value) -> Self {
        ExecResult {
            status: Status::Value,
            value: Some(v),
            trap: None,
        }
    }

    pub fn trap(t: Trap) -> Self {
        ExecResult {
            status: Status::Trap,
            value: None,
            trap: Some(t),
        }
    }

    pub fn is_unsupported(&self) -> bool {
        self.trap == Some(Trap::Unsupported)
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum EquivError {
    #[error("no method declaration found in snippet source")]
    NoMethod,
    #[error("snippet does not parse cleanly ({0} error nodes)")]
    Syntax(usize),
    #[error("unsupported type {0:?} in signature")]
    UnsupportedType(String),
    #[error("signatures differ: {0} vs {1}")]
    SignatureMismatch(String, String),
    #[error("method lists differ: [{0}] vs [{1}]")]
    MethodMismatch(String, String),
    #[error("argument list does not match the signature")]
    BadArguments,
    #[error("trials must be positive")]
    NoTrials,
    #[error("rule {rule} snippet {name}: {reason}")]
    Snippet { rule: u8, name: String, reason: String },
    #[error("snippet file: {0}")]
    SuiteFormat(String),
}
