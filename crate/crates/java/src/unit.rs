use serde::{Deserialize, Serialize};

/// One source file as seen by the pipeline.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceUnit {
    pub id: String,
    pub path: String,
    pub text: String,
    pub word_count: usize,
}

impl SourceUnit {
    pub fn new(id: impl Into<String>, path: impl Into<String>, text: impl Into<String>) -> Self {
        let text = text.into();
        SourceUnit {
            id: id.into(),
            path: path.into(),
            word_count: word_count(&text),
            text,
        }
    }

    /// Same unit with its text cut after the first `max_words` words.
    pub fn truncated(&self, max_words: usize) -> SourceUnit {
        SourceUnit::new(self.id.clone(), self.path.clone(), truncate_words(&self.text, max_words))
    }
}

/// Number of maximal non-whitespace runs.
pub fn word_count(text: &str) -> usize {
    text.split_whitespace().count()
}

/// Prefix of `text` ending with its `max_words`-th word. Whitespace between
/// kept words is preserved; trailing whitespace after the last kept word is not.
pub fn truncate_words(text: &str, max_words: usize) -> &str {
    if max_words == 0 {
        return "";
    }
    let mut seen = 0;
    let mut in_word = false;
    for (i, c) in text.char_indices() {
        if c.is_whitespace() {
            if in_word {
                seen += 1;
                if seen == max_words {
                    return &text[..i];
                }
            }
            in_word = false;
        } else {
            in_word = true;
        }
    }
    text
}
