//! Additively smoothed n-gram model over Java lexical tokens; the stand-in
//! for a fine-tuned code model.

use std::collections::HashMap;

use sect_java::{lexical_tokens, SourceUnit};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NgramError {
    #[error("training corpus is empty")]
    EmptyCorpus,
    #[error("order must be at least 1")]
    InvalidOrder,
    #[error("alpha must be positive and finite")]
    InvalidAlpha,
}

const UNK: u32 = 0;
const BOS: u32 = 1;

#[derive(Debug, Default, Clone)]
struct Counts {
    total: u64,
    next: HashMap<u32, u64>,
}

#[derive(Debug, Clone)]
pub struct NgramModel {
    order: usize,
    alpha: f64,
    ids: HashMap<String, u32>,
    names: Vec<String>,
    /// Keyed by context length, then by the context itself. Shorter contexts
    /// are only used to back off when predicting, never for likelihoods.
    contexts: Vec<HashMap<Vec<u32>, Counts>>,
}

impl NgramModel {
    pub const DEFAULT_ORDER: usize = 3;
    pub const DEFAULT_ALPHA: f64 = 0.1;

    pub fn train(corpus: &[SourceUnit], order: usize, alpha: f64) -> Result<Self, NgramError> {
        Self::train_texts(corpus.iter().map(|u| u.text.as_str()), order, alpha)
    }

    pub fn train_texts<'a>(
        texts: impl IntoIterator<Item = &'a str>,
        order: usize,
        alpha: f64,
    ) -> Result<Self, NgramError> {
        if order == 0 {
            return Err(NgramError::InvalidOrder);
        }
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(NgramError::InvalidAlpha);
        }
        let mut model = NgramModel {
            order,
            alpha,
            ids: HashMap::new(),
            names: vec!["<unk>".into(), "<s>".into()],
            contexts: vec![HashMap::new(); order],
        };
        let mut docs = 0;
        for text in texts {
            docs += 1;
            let seq: Vec<u32> = lexical_tokens(text).into_iter().map(|t| model.intern(t)).collect();
            let padded = model.pad(&seq);
            for i in order - 1..padded.len() {
                let w = padded[i];
                for len in 0..order {
                    let ctx = padded[i - len..i].to_vec();
                    let c = model.contexts[len].entry(ctx).or_default();
                    c.total += 1;
                    *c.next.entry(w).or_default() += 1;
                }
            }
        }
        if docs == 0 {
            return Err(NgramError::EmptyCorpus);
        }
        Ok(model)
    }

    fn intern(&mut self, tok: String) -> u32 {
        if let Some(&id) = self.ids.get(&tok) {
            return id;
        }
        let id = self.names.len() as u32;
        self.names.push(tok.clone());
        self.ids.insert(tok, id);
        id
    }

    fn pad(&self, seq: &[u32]) -> Vec<u32> {
        let mut v = vec![BOS; self.order - 1];
        v.extend_from_slice(seq);
        v
    }

    fn id_of(&self, tok: &str) -> u32 {
        self.ids.get(tok).copied().unwrap_or(UNK)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Vocabulary size including the unknown-token symbol.
    pub fn vocab_size(&self) -> usize {
        self.ids.len() + 1
    }

    fn nll_ids(&self, ctx: &[u32], w: u32) -> f64 {
        let (total, hit) = match self.contexts[self.order - 1].get(ctx) {
            Some(c) => (c.total, c.next.get(&w).copied().unwrap_or(0)),
            None => (0, 0),
        };
        let num = hit as f64 + self.alpha;
        let den = total as f64 + self.alpha * self.vocab_size() as f64;
        (den / num).ln()
    }

    /// `-ln P(token | previous order-1 tokens)` for every token of `text`.
    pub fn score_tokens(&self, tokens: &[String]) -> Vec<f64> {
        let ids: Vec<u32> = tokens.iter().map(|t| self.id_of(t)).collect();
        let padded = self.pad(&ids);
        (0..ids.len())
            .map(|i| self.nll_ids(&padded[i..i + self.order - 1], padded[i + self.order - 1]))
            .collect()
    }

    /// Tokens of `text` with their nll values.
    pub fn nll(&self, text: &str) -> (Vec<String>, Vec<f64>) {
        let tokens = lexical_tokens(text);
        let nll = self.score_tokens(&tokens);
        (tokens, nll)
    }

    /// Most frequent continuation of `history`, backing off to shorter
    /// contexts when the full one was never seen. Ties go to the token seen
    /// first in training.
    pub fn predict_next(&self, history: &[String]) -> Option<&str> {
        let ids: Vec<u32> = history.iter().map(|t| self.id_of(t)).collect();
        let padded = self.pad(&ids);
        for len in (0..self.order).rev() {
            let ctx = &padded[padded.len() - len..];
            if let Some(c) = self.contexts[len].get(ctx) {
                let best = c
                    .next
                    .iter()
                    .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
                    .map(|(&w, _)| w)?;
                return Some(&self.names[best as usize]);
            }
        }
        None
    }

    /// Reference tokens of `text` and the model's next-token prediction at
    /// each position given the true prefix.
    pub fn completions(&self, text: &str) -> (Vec<String>, Vec<String>) {
        let tokens = lexical_tokens(text);
        let predicted = (0..tokens.len())
            .map(|i| self.predict_next(&tokens[..i]).unwrap_or("").to_owned())
            .collect();
        (tokens, predicted)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn laplace_unigram_hand_value() {
        let m = NgramModel::train_texts(["a a a b"], 1, 1.0).unwrap();
        assert_eq!(m.vocab_size(), 3);
        let nll = m.score_tokens(&toks("a b c"));
        assert!((nll[0] - (7.0f64 / 4.0).ln()).abs() < 1e-15);
        assert!((nll[1] - (7.0f64 / 2.0).ln()).abs() < 1e-15);
        assert!((nll[2] - 7.0f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn vanishing_alpha_unigram() {
        let m = NgramModel::train_texts(["a a a a"], 1, 1e-12).unwrap();
        let nll = m.score_tokens(&toks("a b"));
        assert!(nll[0] < 1e-9);
        assert!(nll[1] > 20.0);
    }

    #[test]
    fn trigram_uses_padded_context() {
        let m = NgramModel::train_texts(["x y z"], 3, 0.5).unwrap();
        // vocab {x, y, z, unk}; context (<s>, <s>) seen once, followed by x
        let nll = m.score_tokens(&toks("x y z"));
        let expect = ((1.0 + 0.5 * 4.0) / 1.5f64).ln();
        for v in nll {
            assert!((v - expect).abs() < 1e-15);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        let none: [&str; 0] = [];
        assert_eq!(NgramModel::train_texts(none, 3, 0.1).unwrap_err(), NgramError::EmptyCorpus);
        assert_eq!(NgramModel::train_texts(["a"], 0, 0.1).unwrap_err(), NgramError::InvalidOrder);
        assert_eq!(NgramModel::train_texts(["a"], 1, 0.0).unwrap_err(), NgramError::InvalidAlpha);
    }

    #[test]
    fn predicts_seen_continuations() {
        let m = NgramModel::train_texts(["int x = 1 ; int x = 2 ; int y"], 3, 0.1).unwrap();
        assert_eq!(m.predict_next(&toks("int")), Some("x"));
        assert_eq!(m.predict_next(&toks("; int")), Some("x"));
        assert_eq!(m.predict_next(&toks("zzz qqq")), Some("int"));
    }
}
