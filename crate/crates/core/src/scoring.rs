//! LOSS, MIN_K and ZLIB membership scores. Lower values look more like
//! training members for all three.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use flate2::write::ZlibEncoder;
use flate2::Compression;
use serde::{Deserialize, Serialize};

use crate::scalar::{ordered_sum, Scalar};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ScoreError {
    #[error("likelihood profile is empty")]
    EmptyProfile,
    #[error("profile has {tokens} tokens but {nll} nll values")]
    LengthMismatch { tokens: usize, nll: usize },
    #[error("nll at position {0} is negative or not finite")]
    InvalidNll(usize),
    #[error("k must lie in (0, 1], got {0}")]
    InvalidK(f64),
    #[error("raw text is empty")]
    EmptyText,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Method {
    Loss,
    MinK,
    Zlib,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Loss, Method::MinK, Method::Zlib];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Loss => "LOSS",
            Method::MinK => "MIN_K",
            Method::Zlib => "ZLIB",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "LOSS" => Ok(Method::Loss),
            "MIN_K" | "MINK" => Ok(Method::MinK),
            "ZLIB" => Ok(Method::Zlib),
            _ => Err(format!("unknown scoring method {s:?}")),
        }
    }
}

/// Per-token negative log-likelihoods (nats) of one sample.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LikelihoodProfile<F> {
    pub sample_id: String,
    pub tokens: Vec<String>,
    pub nll: Vec<F>,
}

impl<F: Scalar> LikelihoodProfile<F> {
    pub fn new(sample_id: impl Into<String>, tokens: Vec<String>, nll: Vec<F>) -> Result<Self, ScoreError> {
        let p = LikelihoodProfile {
            sample_id: sample_id.into(),
            tokens,
            nll,
        };
        p.validate()?;
        Ok(p)
    }

    /// Profile with placeholder token texts, handy when only the values matter.
    pub fn from_nll(sample_id: impl Into<String>, nll: Vec<F>) -> Result<Self, ScoreError> {
        let tokens = (0..nll.len()).map(|i| format!("t{i}")).collect();
        Self::new(sample_id, tokens, nll)
    }

    pub fn validate(&self) -> Result<(), ScoreError> {
        if self.nll.is_empty() {
            return Err(ScoreError::EmptyProfile);
        }
        if self.tokens.len() != self.nll.len() {
            return Err(ScoreError::LengthMismatch {
                tokens: self.tokens.len(),
                nll: self.nll.len(),
            });
        }
        match self.nll.iter().position(|&v| !v.is_finite() || v < F::zero()) {
            Some(i) => Err(ScoreError::InvalidNll(i)),
            None => Ok(()),
        }
    }

    pub fn len(&self) -> usize {
        self.nll.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nll.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MembershipScore<F> {
    pub sample_id: String,
    pub method: Method,
    pub value: F,
}

/// Mean token nll.
pub fn score_loss<F: Scalar>(profile: &LikelihoodProfile<F>) -> Result<MembershipScore<F>, ScoreError> {
    profile.validate()?;
    Ok(MembershipScore {
        sample_id: profile.sample_id.clone(),
        method: Method::Loss,
        value: loss_value(&profile.nll),
    })
}

fn loss_value<F: Scalar>(nll: &[F]) -> F {
    ordered_sum(nll.iter().copied()) / F::count(nll.len())
}

/// Indices of the `max(1, floor(k n))` highest-nll tokens, in position order.
/// Ties prefer the earlier position.
pub fn min_k_selection<F: Scalar>(nll: &[F], k: F) -> Result<Vec<usize>, ScoreError> {
    if !(k > F::zero() && k <= F::one()) {
        return Err(ScoreError::InvalidK(k.to_f64().unwrap_or(f64::NAN)));
    }
    let n = nll.len();
    let m = (k * F::count(n)).floor().to_usize().unwrap_or(0).clamp(1, n.max(1));
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| nll[b].partial_cmp(&nll[a]).unwrap().then(a.cmp(&b)));
    order.truncate(m);
    order.sort_unstable();
    Ok(order)
}

/// Mean nll over the least likely `k` fraction of tokens.
///
/// The selected values are summed in position order, so `k = 1` reproduces
/// [`score_loss`] bit for bit.
pub fn score_min_k<F: Scalar>(profile: &LikelihoodProfile<F>, k: F) -> Result<MembershipScore<F>, ScoreError> {
    profile.validate()?;
    let picked = min_k_selection(&profile.nll, k)?;
    let sum = ordered_sum(picked.iter().map(|&i| profile.nll[i]));
    Ok(MembershipScore {
        sample_id: profile.sample_id.clone(),
        method: Method::MinK,
        value: sum / F::count(picked.len()),
    })
}

/// Byte length of the zlib stream (header and checksum included) at level 6.
pub fn zlib_len(bytes: &[u8]) -> usize {
    let mut enc = ZlibEncoder::new(Vec::new(), Compression::new(6));
    enc.write_all(bytes).expect("writing to a Vec cannot fail");
    enc.finish().expect("writing to a Vec cannot fail").len()
}

/// LOSS divided by the compressed length of the raw text.
pub fn score_zlib<F: Scalar>(profile: &LikelihoodProfile<F>, raw_text: &[u8]) -> Result<MembershipScore<F>, ScoreError> {
    if raw_text.is_empty() {
        return Err(ScoreError::EmptyText);
    }
    let loss = score_loss(profile)?.value;
    Ok(MembershipScore {
        sample_id: profile.sample_id.clone(),
        method: Method::Zlib,
        value: loss / F::count(zlib_len(raw_text)),
    })
}

/// All three scores, in [`Method::ALL`] order.
pub fn score_all<F: Scalar>(
    profile: &LikelihoodProfile<F>,
    raw_text: &[u8],
    k: F,
) -> Result<[MembershipScore<F>; 3], ScoreError> {
    Ok([
        score_loss(profile)?,
        score_min_k(profile, k)?,
        score_zlib(profile, raw_text)?,
    ])
}

/// One line of a scores file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScoreRecord {
    pub id: String,
    pub method: Method,
    pub value: f64,
    pub is_member: bool,
}
