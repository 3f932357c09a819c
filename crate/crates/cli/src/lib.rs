//! Stages of the `sect-audit` tool, usable without the binary.

mod error;
pub mod io;
pub mod pipeline;
pub mod stages;

pub use error::CliError;
pub use pipeline::{run_pipeline, Manifest, PipelineConfig, RuleSummary};
