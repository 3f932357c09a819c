//! Membership-inference scoring, evaluation and causal effect estimation.
//!
//! Numeric routines are generic over [`Scalar`] (any IEEE float); the aliases
//! below pin them to `f64`, which is what the command line tool uses.

pub mod causal;
pub mod dataset;
pub mod eval;
pub mod linalg;
pub mod ngram;
pub mod provider;
pub mod scalar;
pub mod scoring;

pub use scalar::Scalar;
pub use scoring::Method;

pub type Real = f64;
pub type Profile = scoring::LikelihoodProfile<f64>;
pub type Score = scoring::MembershipScore<f64>;
pub type Roc = eval::RocResult<f64>;
pub type Row = causal::CausalRow<f64>;
pub type Report = causal::AteReport<f64>;
