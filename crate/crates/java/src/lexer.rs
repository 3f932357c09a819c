//! Lossless Java lexer.
//!
//! Every byte of the input belongs either to a token or to the leading
//! trivia (whitespace and comments) of the token that follows it. The final
//! `Eof` token carries whatever trivia trails the last real token, so the
//! concatenation of `trivia + text` over all tokens reproduces the input.
//!
//! `>` is always emitted as a single-character token; the parser glues
//! adjacent `>` and `=` tokens back into shift and comparison operators so
//! nested generic arguments like `List<List<T>>` need no lexer feedback.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TokenKind {
    Ident,
    Keyword,
    IntLiteral,
    FloatLiteral,
    CharLiteral,
    StringLiteral,
    Punct,
    Unknown,
    Eof,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    /// Start of the leading trivia.
    pub trivia_start: u32,
    pub start: u32,
    pub end: u32,
}

impl Token {
    pub fn text<'a>(&self, src: &'a str) -> &'a str {
        &src[self.start as usize..self.end as usize]
    }

    pub fn trivia<'a>(&self, src: &'a str) -> &'a str {
        &src[self.trivia_start as usize..self.start as usize]
    }

    pub fn has_trivia(&self) -> bool {
        self.trivia_start != self.start
    }
}

pub const KEYWORDS: &[&str] = &[
    "abstract",
    "assert",
    "boolean",
    "break",
    "byte",
    "case",
    "catch",
    "char",
    "class",
    "const",
    "continue",
    "default",
    "do",
    "double",
    "else",
    "enum",
    "extends",
    "final",
    "finally",
    "float",
    "for",
    "goto",
    "if",
    "implements",
    "import",
    "instanceof",
    "int",
    "interface",
    "long",
    "native",
    "new",
    "package",
    "private",
    "protected",
    "public",
    "return",
    "short",
    "static",
    "strictfp",
    "super",
    "switch",
    "synchronized",
    "this",
    "throw",
    "throws",
    "transient",
    "try",
    "void",
    "volatile",
    "while",
    // literals, reserved like keywords
    "true",
    "false",
    "null",
];

pub fn is_keyword(s: &str) -> bool {
    KEYWORDS.contains(&s)
}

// Longest first. `>`-prefixed operators are deliberately absent.
const PUNCTS: &[&str] = &[
    "<<=", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=", "<<", "+=", "-=", "*=",
    "/=", "%=", "&=", "|=", "^=", "(", ")", "{", "}", "[", "]", ";", ",", ".", "@", "=", ">", "<",
    "!", "~", "?", ":", "+", "-", "*", "/", "&", "|", "^", "%",
];

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_' || c == '$'
}

fn is_ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '$'
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn peek_at(&self, n: usize) -> Option<char> {
        self.rest().chars().nth(n)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn eat_while(&mut self, f: impl Fn(char) -> bool) {
        while let Some(c) = self.peek() {
            if !f(c) {
                break;
            }
            self.bump();
        }
    }

    fn skip_trivia(&mut self) {
        loop {
            let rest = self.rest();
            if rest.starts_with("//") {
                self.eat_while(|c| c != '\n');
            } else if let Some(body) = rest.strip_prefix("/*") {
                match body.find("*/") {
                    Some(i) => self.pos += i + 4,
                    None => self.pos = self.src.len(),
                }
            } else if self.peek().is_some_and(char::is_whitespace) {
                self.eat_while(char::is_whitespace);
            } else {
                return;
            }
        }
    }

    fn quoted(&mut self, quote: char) {
        self.bump();
        while let Some(c) = self.peek() {
            match c {
                '\\' => {
                    self.bump();
                    if self.peek().is_some_and(|c| c != '\n') {
                        self.bump();
                    }
                }
                '\n' => return,
                c if c == quote => {
                    self.bump();
                    return;
                }
                _ => {
                    self.bump();
                }
            }
        }
    }

    fn number(&mut self) -> TokenKind {
        let rest = self.rest().as_bytes();
        if rest.len() > 1 && rest[0] == b'0' && matches!(rest[1], b'x' | b'X') {
            self.pos += 2;
            self.eat_while(|c| c.is_ascii_hexdigit() || c == '_');
            let mut float = false;
            if self.peek() == Some('.') {
                float = true;
                self.bump();
                self.eat_while(|c| c.is_ascii_hexdigit() || c == '_');
            }
            if matches!(self.peek(), Some('p' | 'P')) {
                float = true;
                self.bump();
                if matches!(self.peek(), Some('+' | '-')) {
                    self.bump();
                }
                self.eat_while(|c| c.is_ascii_digit());
            }
            return self.suffix(float);
        }
        if rest.len() > 1 && rest[0] == b'0' && matches!(rest[1], b'b' | b'B') {
            self.pos += 2;
            self.eat_while(|c| c == '0' || c == '1' || c == '_');
            return self.suffix(false);
        }
        let mut float = false;
        self.eat_while(|c| c.is_ascii_digit() || c == '_');
        if self.peek() == Some('.') && self.peek_at(1).is_some_and(|c| c.is_ascii_digit()) {
            float = true;
            self.bump();
            self.eat_while(|c| c.is_ascii_digit() || c == '_');
        } else if self.peek() == Some('.') && !self.peek_at(1).is_some_and(is_ident_start) {
            // `1.` is a double literal; `1.foo` is not valid Java anyway
            if self.peek_at(1) != Some('.') {
                float = true;
                self.bump();
            }
        }
        if matches!(self.peek(), Some('e' | 'E')) {
            let save = self.pos;
            self.bump();
            if matches!(self.peek(), Some('+' | '-')) {
                self.bump();
            }
            if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                float = true;
                self.eat_while(|c| c.is_ascii_digit() || c == '_');
            } else {
                self.pos = save;
            }
        }
        self.suffix(float)
    }

    fn suffix(&mut self, float: bool) -> TokenKind {
        match self.peek() {
            Some('l' | 'L') if !float => {
                self.bump();
                TokenKind::IntLiteral
            }
            Some('f' | 'F' | 'd' | 'D') => {
                self.bump();
                TokenKind::FloatLiteral
            }
            _ if float => TokenKind::FloatLiteral,
            _ => TokenKind::IntLiteral,
        }
    }
}

/// Splits `src` into tokens. Never fails; unrecognised characters become
/// `Unknown` tokens.
pub fn tokenize(src: &str) -> Vec<Token> {
    let mut cur = Cursor { src, pos: 0 };
    let mut out = Vec::new();
    loop {
        let trivia_start = cur.pos as u32;
        cur.skip_trivia();
        let start = cur.pos;
        let Some(c) = cur.peek() else {
            out.push(Token {
                kind: TokenKind::Eof,
                trivia_start,
                start: start as u32,
                end: start as u32,
            });
            return out;
        };
        let kind = if is_ident_start(c) {
            cur.eat_while(is_ident_continue);
            if is_keyword(&src[start..cur.pos]) {
                TokenKind::Keyword
            } else {
                TokenKind::Ident
            }
        } else if c.is_ascii_digit()
            || (c == '.' && cur.peek_at(1).is_some_and(|c| c.is_ascii_digit()))
        {
            cur.number()
        } else if c == '"' {
            cur.quoted('"');
            TokenKind::StringLiteral
        } else if c == '\'' {
            cur.quoted('\'');
            TokenKind::CharLiteral
        } else if let Some(p) = PUNCTS.iter().find(|p| cur.rest().starts_with(**p)) {
            cur.pos += p.len();
            TokenKind::Punct
        } else {
            cur.bump();
            TokenKind::Unknown
        };
        out.push(Token {
            kind,
            trivia_start,
            start: start as u32,
            end: cur.pos as u32,
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texts(src: &str) -> Vec<&str> {
        tokenize(src).iter().map(|t| t.text(src)).collect()
    }

    #[test]
    fn lossless_concatenation() {
        let src = "/* c */ int x = 1; // end\n";
        let toks = tokenize(src);
        let rebuilt: String = toks
            .iter()
            .map(|t| format!("{}{}", t.trivia(src), t.text(src)))
            .collect();
        assert_eq!(rebuilt, src);
        assert_eq!(toks.last().unwrap().kind, TokenKind::Eof);
        assert_eq!(toks.last().unwrap().trivia(src), " // end\n");
    }

    #[test]
    fn greater_than_is_never_merged() {
        assert_eq!(texts("a >>>= b"), vec!["a", ">", ">", ">", "=", "b", ""]);
        assert_eq!(texts("x<<=2"), vec!["x", "<<=", "2", ""]);
    }

    #[test]
    fn numeric_literals() {
        let src = "0x1F 10L 3.5f 1e10 .5 0b101 1_000 07 1.";
        let kinds: Vec<_> = tokenize(src).iter().map(|t| t.kind).collect();
        use TokenKind::*;
        assert_eq!(
            kinds,
            vec![
                IntLiteral,
                IntLiteral,
                FloatLiteral,
                FloatLiteral,
                FloatLiteral,
                IntLiteral,
                IntLiteral,
                IntLiteral,
                FloatLiteral,
                Eof
            ]
        );
    }

    #[test]
    fn strings_with_escapes_and_unterminated() {
        assert_eq!(texts(r#""a\"b" 'c'"#), vec![r#""a\"b""#, "'c'", ""]);
        let src = "\"open\nx";
        assert_eq!(texts(src), vec!["\"open", "x", ""]);
    }

    #[test]
    fn unterminated_block_comment_is_trivia() {
        let toks = tokenize("a /* never closed");
        assert_eq!(toks.len(), 2);
        assert_eq!(toks[1].kind, TokenKind::Eof);
    }
}
