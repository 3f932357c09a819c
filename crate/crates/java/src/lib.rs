//! Lossless Java 8 syntax trees.
//!
//! [`parse`] never fails: malformed regions become `Error` nodes so metrics
//! can always be extracted. Printing an unmodified tree reproduces the input
//! byte for byte, comments and formatting included.

pub mod ast;
pub mod features;
pub mod lexer;
mod parser;
pub mod tree;
pub mod unit;

pub use features::{extract_features, CodeFeatures};
pub use lexer::{is_keyword, tokenize, Token, TokenKind};
pub use parser::is_primitive;
pub use tree::{Element, NodeId, NodeKind, SyntaxTree, TokenId};
pub use unit::{truncate_words, word_count, SourceUnit};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("input is not valid UTF-8 (first bad byte at offset {0})")]
    InvalidUtf8(usize),
    #[error("input is empty")]
    Empty,
}

/// Parses Java source text into a syntax tree.
pub fn parse(text: &str) -> SyntaxTree {
    parser::parse_text(text)
}

/// Parses raw bytes, rejecting empty or non-UTF-8 input.
pub fn parse_bytes(bytes: &[u8]) -> Result<SyntaxTree, ParseError> {
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    let text = std::str::from_utf8(bytes).map_err(|e| ParseError::InvalidUtf8(e.valid_up_to()))?;
    Ok(parse(text))
}

/// Renders a tree back to source.
pub fn print(tree: &SyntaxTree) -> String {
    tree.print()
}

/// Lexical tokens of `text` without trivia; the token stream used by
/// likelihood models.
pub fn lexical_tokens(text: &str) -> Vec<String> {
    tokenize(text)
        .into_iter()
        .filter(|t| t.kind != TokenKind::Eof)
        .map(|t| t.text(text).to_owned())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_class() {
        let t = parse("class A {}");
        let classes: Vec<_> = t
            .descendants(t.root())
            .filter(|&n| t.kind(n) == NodeKind::ClassDecl)
            .collect();
        assert_eq!(classes.len(), 1);
        assert_eq!(t.error_count(), 0);
        assert_eq!(print(&t), "class A {}");
    }

    #[test]
    fn malformed_initializer_yields_error_node() {
        let t = parse("class A { int x = ; }");
        assert!(t.error_count() >= 1);
        assert_eq!(print(&t), "class A { int x = ; }");
    }

    #[test]
    fn rejects_non_utf8() {
        assert_eq!(
            parse_bytes(&[b'c', 0xff, 0xfe]).unwrap_err(),
            ParseError::InvalidUtf8(1)
        );
        assert_eq!(parse_bytes(b"").unwrap_err(), ParseError::Empty);
        assert!(parse_bytes(b"class A {}").is_ok());
    }
}
