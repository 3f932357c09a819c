//! Sources of per-token likelihoods.

use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::ngram::NgramModel;
use crate::scoring::{LikelihoodProfile, ScoreError};

#[derive(Debug, thiserror::Error)]
pub enum ProviderError {
    #[error("request to {endpoint} failed: {message}")]
    Transport { endpoint: String, message: String },
    #[error("{endpoint} answered with HTTP {status}")]
    Status { endpoint: String, status: u16 },
    #[error("malformed response from {endpoint}: {message}")]
    Protocol { endpoint: String, message: String },
    #[error(transparent)]
    Profile(#[from] ScoreError),
}

/// Anything that can turn text into a [`LikelihoodProfile`].
pub trait LikelihoodProvider: Send + Sync {
    fn name(&self) -> String;

    fn profile(&self, sample_id: &str, text: &str) -> Result<LikelihoodProfile<f64>, ProviderError>;
}

impl LikelihoodProvider for NgramModel {
    fn name(&self) -> String {
        format!("ngram(order={}, alpha={})", self.order(), self.alpha())
    }

    fn profile(&self, sample_id: &str, text: &str) -> Result<LikelihoodProfile<f64>, ProviderError> {
        let (tokens, nll) = self.nll(text);
        Ok(LikelihoodProfile::new(sample_id, tokens, nll)?)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct NllRequest {
    pub text: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct NllResponse {
    pub tokens: Vec<String>,
    pub nll: Vec<f64>,
    pub model_id: String,
    #[serde(default)]
    pub truncated: bool,
}

/// Client for a model server speaking `POST /v1/nll`.
pub struct RemoteProvider {
    endpoint: String,
    agent: ureq::Agent,
}

impl RemoteProvider {
    /// `base` is the server root, e.g. `http://127.0.0.1:8765`.
    pub fn new(base: &str) -> Self {
        Self::with_timeout(base, Duration::from_secs(120))
    }

    pub fn with_timeout(base: &str, timeout: Duration) -> Self {
        let agent = ureq::Agent::config_builder()
            .timeout_global(Some(timeout))
            .build()
            .into();
        RemoteProvider {
            endpoint: format!("{}/v1/nll", base.trim_end_matches('/')),
            agent,
        }
    }

    pub fn endpoint(&self) -> &str {
        &self.endpoint
    }

    pub fn query(&self, text: &str) -> Result<NllResponse, ProviderError> {
        let req = NllRequest { text: text.to_owned() };
        let mut resp = self.agent.post(&self.endpoint).send_json(&req).map_err(|e| match e {
            ureq::Error::StatusCode(status) => ProviderError::Status {
                endpoint: self.endpoint.clone(),
                status,
            },
            other => ProviderError::Transport {
                endpoint: self.endpoint.clone(),
                message: other.to_string(),
            },
        })?;
        resp.body_mut()
            .read_json::<NllResponse>()
            .map_err(|e| ProviderError::Protocol {
                endpoint: self.endpoint.clone(),
                message: e.to_string(),
            })
    }
}

impl LikelihoodProvider for RemoteProvider {
    fn name(&self) -> String {
        format!("remote({})", self.endpoint)
    }

    fn profile(&self, sample_id: &str, text: &str) -> Result<LikelihoodProfile<f64>, ProviderError> {
        let r = self.query(text)?;
        Ok(LikelihoodProfile::new(sample_id, r.tokens, r.nll)?)
    }
}
