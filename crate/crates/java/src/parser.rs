//! Error-tolerant recursive-descent parser for Java 8.
//!
//! Malformed regions become `Error` nodes instead of aborting, so every
//! input produces a tree that still covers every token.

use crate::lexer::{tokenize, Token, TokenKind};
use crate::tree::{NodeKind, SyntaxTree, TreeBuilder};

const MAX_DEPTH: usize = 160;

const PRIMITIVES: &[&str] = &[
    "boolean", "byte", "char", "short", "int", "long", "float", "double",
];

const MODIFIERS: &[&str] = &[
    "public",
    "protected",
    "private",
    "static",
    "abstract",
    "final",
    "native",
    "synchronized",
    "transient",
    "volatile",
    "strictfp",
    "default",
];

const ASSIGN_OPS: &[&str] = &["=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<="];

pub fn is_primitive(s: &str) -> bool {
    PRIMITIVES.contains(&s)
}

/// Parses a compilation unit. Never fails.
pub fn parse_text(text: &str) -> SyntaxTree {
    let tokens = tokenize(text);
    let mut p = Parser {
        src: text,
        tokens: &tokens,
        pos: 0,
        b: TreeBuilder::new(),
        depth: 0,
    };
    let root = p.compilation_unit();
    let b = p.b;
    b.build(text.to_owned(), tokens, root)
}

struct Parser<'a> {
    src: &'a str,
    tokens: &'a [Token],
    pos: usize,
    b: TreeBuilder,
    depth: usize,
}

impl<'a> Parser<'a> {
    // ---- token access -------------------------------------------------

    fn tok(&self, n: usize) -> &Token {
        let i = (self.pos + n).min(self.tokens.len() - 1);
        &self.tokens[i]
    }

    fn nth(&self, n: usize) -> &'a str {
        let i = (self.pos + n).min(self.tokens.len() - 1);
        self.tokens[i].text(self.src)
    }

    fn kind_at(&self, i: usize) -> TokenKind {
        self.tokens[i.min(self.tokens.len() - 1)].kind
    }

    fn text_at(&self, i: usize) -> &'a str {
        self.tokens[i.min(self.tokens.len() - 1)].text(self.src)
    }

    fn at(&self, s: &str) -> bool {
        let t = self.tok(0);
        t.kind != TokenKind::StringLiteral && t.kind != TokenKind::CharLiteral && self.nth(0) == s
    }

    fn at_ident(&self) -> bool {
        self.tok(0).kind == TokenKind::Ident
    }

    fn eof(&self) -> bool {
        self.tok(0).kind == TokenKind::Eof
    }

    /// Token `n` follows token `n - 1` with no trivia in between.
    fn joined(&self, n: usize) -> bool {
        self.pos + n < self.tokens.len() && !self.tok(n).has_trivia()
    }

    fn bump(&mut self) {
        if self.eof() {
            return;
        }
        self.b.token(self.pos as u32);
        self.pos += 1;
    }

    fn bump_n(&mut self, n: usize) {
        for _ in 0..n {
            self.bump();
        }
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.at(s) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn start(&mut self, kind: NodeKind) {
        self.b.start(kind, self.pos as u32);
    }

    fn finish(&mut self) {
        self.b.finish();
    }

    fn checkpoint(&self) -> crate::tree::Checkpoint {
        self.b.checkpoint(self.pos as u32)
    }

    fn error_empty(&mut self) {
        self.start(NodeKind::Error);
        self.finish();
    }

    fn error_bump(&mut self) {
        self.start(NodeKind::Error);
        self.bump();
        self.finish();
    }

    fn expect(&mut self, s: &str) {
        if !self.eat(s) {
            self.error_empty();
        }
    }

    fn expect_ident(&mut self) {
        if self.at_ident() {
            self.bump();
        } else {
            self.error_empty();
        }
    }

    fn at_stop_token(&self) -> bool {
        self.eof() || matches!(self.nth(0), ";" | ")" | "]" | "}" | "," | ":" | "{")
    }

    // ---- operators glued from single `>` tokens -----------------------

    fn gt_op(&self) -> Option<(&'static str, usize)> {
        if !self.at(">") {
            return None;
        }
        let tx = |n: usize| if self.joined(n) { self.nth(n) } else { "" };
        Some(match (tx(1), tx(2), tx(3)) {
            (">", ">", "=") => (">>>=", 4),
            (">", ">", _) => (">>>", 3),
            (">", "=", _) => (">>=", 3),
            (">", _, _) => (">>", 2),
            ("=", _, _) => (">=", 2),
            _ => (">", 1),
        })
    }

    fn assign_op(&self) -> Option<usize> {
        if let Some((op, n)) = self.gt_op() {
            return matches!(op, ">>=" | ">>>=").then_some(n);
        }
        let t = self.tok(0);
        (t.kind == TokenKind::Punct && ASSIGN_OPS.contains(&self.nth(0))).then_some(1)
    }

    fn binary_op(&self) -> Option<(usize, u8)> {
        if let Some((op, n)) = self.gt_op() {
            return match op {
                ">" | ">=" => Some((n, 7)),
                ">>" | ">>>" => Some((n, 8)),
                _ => None,
            };
        }
        let t = self.tok(0);
        if t.kind == TokenKind::Keyword && self.nth(0) == "instanceof" {
            return Some((1, 7));
        }
        if t.kind != TokenKind::Punct {
            return None;
        }
        let prec = match self.nth(0) {
            "||" => 1,
            "&&" => 2,
            "|" => 3,
            "^" => 4,
            "&" => 5,
            "==" | "!=" => 6,
            "<" | "<=" => 7,
            "<<" => 8,
            "+" | "-" => 9,
            "*" | "/" | "%" => 10,
            _ => return None,
        };
        Some((1, prec))
    }

    // ---- speculative scanning ------------------------------------------

    fn scan_type(&self, mut i: usize) -> Option<usize> {
        let t = self.text_at(i);
        if self.kind_at(i) == TokenKind::Keyword && (is_primitive(t) || t == "void") {
            i += 1;
        } else if self.kind_at(i) == TokenKind::Ident {
            i += 1;
            if self.text_at(i) == "<" {
                i = self.scan_type_args(i)?;
            }
            while self.text_at(i) == "." && self.kind_at(i + 1) == TokenKind::Ident {
                i += 2;
                if self.text_at(i) == "<" {
                    i = self.scan_type_args(i)?;
                }
            }
        } else {
            return None;
        }
        while self.text_at(i) == "[" && self.text_at(i + 1) == "]" {
            i += 2;
        }
        Some(i)
    }

    fn scan_type_args(&self, mut i: usize) -> Option<usize> {
        debug_assert_eq!(self.text_at(i), "<");
        i += 1;
        if self.text_at(i) == ">" {
            return Some(i + 1);
        }
        loop {
            if self.text_at(i) == "?" {
                i += 1;
                if matches!(self.text_at(i), "extends" | "super") {
                    i = self.scan_type(i + 1)?;
                }
            } else {
                i = self.scan_type(i)?;
            }
            match self.text_at(i) {
                "," => i += 1,
                ">" => return Some(i + 1),
                _ => return None,
            }
        }
    }

    fn skip_modifiers_scan(&self, mut i: usize) -> usize {
        loop {
            let t = self.text_at(i);
            if t == "final" {
                i += 1;
            } else if t == "@" && self.kind_at(i + 1) == TokenKind::Ident {
                i += 2;
                while self.text_at(i) == "." && self.kind_at(i + 1) == TokenKind::Ident {
                    i += 2;
                }
                if self.text_at(i) == "(" {
                    i = self.skip_balanced(i);
                }
            } else {
                return i;
            }
        }
    }

    fn skip_balanced(&self, mut i: usize) -> usize {
        let mut depth = 0usize;
        loop {
            if self.kind_at(i) == TokenKind::Eof {
                return i;
            }
            match self.text_at(i) {
                "(" => depth += 1,
                ")" => {
                    depth -= 1;
                    if depth == 0 {
                        return i + 1;
                    }
                }
                _ => {}
            }
            i += 1;
        }
    }

    fn is_local_var_decl(&self) -> bool {
        let i = self.skip_modifiers_scan(self.pos);
        if self.text_at(i) == "void" {
            return false;
        }
        let Some(j) = self.scan_type(i) else {
            return false;
        };
        self.kind_at(j) == TokenKind::Ident
            && matches!(self.text_at(j + 1), "=" | ";" | "," | "[" | ":")
    }

    fn at_lambda(&self) -> bool {
        if self.at_ident() && self.nth(1) == "->" {
            return true;
        }
        if self.at("(") {
            let end = self.skip_balanced(self.pos);
            return self.text_at(end) == "->";
        }
        false
    }

    fn is_cast(&self) -> bool {
        let Some(j) = self.scan_type(self.pos + 1) else {
            return false;
        };
        let mut j = j;
        // intersection casts
        while self.text_at(j) == "&" {
            match self.scan_type(j + 1) {
                Some(k) => j = k,
                None => return false,
            }
        }
        if self.text_at(j) != ")" {
            return false;
        }
        let first = self.text_at(self.pos + 1);
        let primitive = is_primitive(first) && j == self.pos + 2;
        let next = j + 1;
        let nk = self.kind_at(next);
        let nt = self.text_at(next);
        if primitive {
            return nk != TokenKind::Eof
                && !matches!(nt, ")" | ";" | "," | "]" | "}" | "." | "=" | "?" | ":" | "*" | "/");
        }
        matches!(
            nk,
            TokenKind::Ident
                | TokenKind::IntLiteral
                | TokenKind::FloatLiteral
                | TokenKind::CharLiteral
                | TokenKind::StringLiteral
        ) || matches!(
            nt,
            "(" | "!" | "~" | "this" | "super" | "new" | "true" | "false" | "null"
        ) || (nk == TokenKind::Keyword && is_primitive(nt))
    }

    // ---- compilation unit ------------------------------------------------

    fn compilation_unit(&mut self) -> crate::tree::NodeId {
        self.start(NodeKind::CompilationUnit);
        if self.at("package") {
            self.start(NodeKind::PackageDecl);
            self.bump();
            self.qualified_name();
            self.expect(";");
            self.finish();
        }
        while self.at("import") {
            self.start(NodeKind::ImportDecl);
            self.bump();
            self.eat("static");
            self.qualified_name();
            self.expect(";");
            self.finish();
        }
        while !self.eof() {
            if self.eat(";") {
                continue;
            }
            let before = self.pos;
            let cp = self.checkpoint();
            self.modifiers();
            if self.at_type_decl_keyword() {
                self.type_decl(cp);
            } else {
                self.b.start_at(cp, NodeKind::Error);
                if self.pos == before || !self.eof() {
                    self.bump();
                }
                self.finish();
            }
        }
        // end-of-file token carries trailing trivia
        self.b.token(self.pos as u32);
        self.b.finish()
    }

    fn qualified_name(&mut self) {
        self.start(NodeKind::QualifiedName);
        self.expect_ident();
        while self.at(".") && (self.tok(1).kind == TokenKind::Ident || self.nth(1) == "*") {
            self.bump_n(2);
        }
        self.finish();
    }

    fn at_type_decl_keyword(&self) -> bool {
        matches!(self.nth(0), "class" | "interface" | "enum")
            && self.tok(0).kind == TokenKind::Keyword
            || (self.at("@") && self.nth(1) == "interface")
    }

    fn modifiers(&mut self) {
        let is_mod = |p: &Self| {
            (p.tok(0).kind == TokenKind::Keyword && MODIFIERS.contains(&p.nth(0)))
                || (p.at("@") && p.nth(1) != "interface")
        };
        if !is_mod(self) {
            return;
        }
        self.start(NodeKind::Modifiers);
        while is_mod(self) {
            if self.at("@") {
                self.annotation();
            } else {
                self.bump();
            }
        }
        self.finish();
    }

    fn annotation(&mut self) {
        self.start(NodeKind::Annotation);
        self.bump();
        self.expect_ident();
        while self.at(".") && self.tok(1).kind == TokenKind::Ident {
            self.bump_n(2);
        }
        if self.at("(") {
            self.start(NodeKind::AnnotationArgs);
            self.bump();
            while !self.at(")") && !self.eof() {
                let before = self.pos;
                if self.at_ident() && self.nth(1) == "=" {
                    self.start(NodeKind::ElementValuePair);
                    self.bump_n(2);
                    self.element_value();
                    self.finish();
                } else {
                    self.element_value();
                }
                if !self.eat(",") {
                    if self.pos == before {
                        self.error_bump();
                    }
                    break;
                }
            }
            self.expect(")");
            self.finish();
        }
        self.finish();
    }

    fn element_value(&mut self) {
        if self.at("@") {
            self.annotation();
        } else if self.at("{") {
            self.start(NodeKind::ElementValueArray);
            self.bump();
            while !self.at("}") && !self.eof() {
                let before = self.pos;
                self.element_value();
                if !self.eat(",") {
                    if self.pos == before {
                        self.error_bump();
                    }
                    break;
                }
            }
            self.expect("}");
            self.finish();
        } else {
            self.conditional();
        }
    }

    fn type_decl(&mut self, cp: crate::tree::Checkpoint) {
        match self.nth(0) {
            "class" => {
                self.b.start_at(cp, NodeKind::ClassDecl);
                self.bump();
                self.expect_ident();
                if self.at("<") {
                    self.type_params();
                }
                if self.at("extends") {
                    self.start(NodeKind::ExtendsClause);
                    self.bump();
                    self.type_();
                    self.finish();
                }
                if self.at("implements") {
                    self.start(NodeKind::ImplementsClause);
                    self.bump();
                    self.type_list();
                    self.finish();
                }
                self.class_body();
                self.finish();
            }
            "interface" => {
                self.b.start_at(cp, NodeKind::InterfaceDecl);
                self.bump();
                self.expect_ident();
                if self.at("<") {
                    self.type_params();
                }
                if self.at("extends") {
                    self.start(NodeKind::ExtendsClause);
                    self.bump();
                    self.type_list();
                    self.finish();
                }
                self.class_body();
                self.finish();
            }
            "enum" => {
                self.b.start_at(cp, NodeKind::EnumDecl);
                self.bump();
                self.expect_ident();
                if self.at("implements") {
                    self.start(NodeKind::ImplementsClause);
                    self.bump();
                    self.type_list();
                    self.finish();
                }
                self.enum_body();
                self.finish();
            }
            _ => {
                self.b.start_at(cp, NodeKind::AnnotationTypeDecl);
                self.bump_n(2);
                self.expect_ident();
                self.class_body();
                self.finish();
            }
        }
    }

    fn type_list(&mut self) {
        loop {
            self.type_();
            if !self.eat(",") {
                break;
            }
        }
    }

    fn type_params(&mut self) {
        self.start(NodeKind::TypeParams);
        self.bump();
        loop {
            self.start(NodeKind::TypeParam);
            while self.at("@") {
                self.annotation();
            }
            self.expect_ident();
            if self.eat("extends") {
                self.type_();
                while self.eat("&") {
                    self.type_();
                }
            }
            self.finish();
            if !self.eat(",") {
                break;
            }
        }
        self.expect(">");
        self.finish();
    }

    fn class_body(&mut self) {
        self.start(NodeKind::ClassBody);
        if !self.eat("{") {
            self.error_empty();
            self.finish();
            return;
        }
        self.members();
        self.expect("}");
        self.finish();
    }

    fn members(&mut self) {
        while !self.at("}") && !self.eof() {
            let before = self.pos;
            self.member();
            if self.pos == before {
                self.error_bump();
            }
        }
    }

    fn enum_body(&mut self) {
        self.start(NodeKind::ClassBody);
        if !self.eat("{") {
            self.error_empty();
            self.finish();
            return;
        }
        while self.at_ident() || self.at("@") {
            self.start(NodeKind::EnumConstant);
            self.modifiers();
            self.expect_ident();
            if self.at("(") {
                self.args();
            }
            if self.at("{") {
                self.class_body();
            }
            self.finish();
            if !self.eat(",") {
                break;
            }
        }
        if self.eat(";") {
            self.members();
        }
        self.expect("}");
        self.finish();
    }

    fn member(&mut self) {
        if self.eat(";") {
            return;
        }
        if self.at("{") || (self.at("static") && self.nth(1) == "{") {
            self.start(NodeKind::Initializer);
            self.eat("static");
            self.block();
            self.finish();
            return;
        }
        let cp = self.checkpoint();
        self.modifiers();
        if self.at_type_decl_keyword() {
            self.type_decl(cp);
            return;
        }
        if self.at("<") {
            self.type_params();
        }
        if self.at_ident() && self.nth(1) == "(" {
            self.b.start_at(cp, NodeKind::ConstructorDecl);
            self.bump();
            self.param_list();
            self.throws_clause();
            self.block();
            self.finish();
            return;
        }
        if self.scan_type(self.pos).is_none() {
            self.b.start_at(cp, NodeKind::Error);
            if !self.at("}") {
                self.bump();
            }
            self.finish();
            return;
        }
        self.type_();
        if self.at_ident() && self.nth(1) == "(" {
            self.b.start_at(cp, NodeKind::MethodDecl);
            self.bump();
            self.param_list();
            while self.at("[") && self.nth(1) == "]" {
                self.bump_n(2);
            }
            self.throws_clause();
            if self.at("{") {
                self.block();
            } else if self.eat("default") {
                self.element_value();
                self.expect(";");
            } else {
                self.expect(";");
            }
            self.finish();
        } else {
            self.b.start_at(cp, NodeKind::FieldDecl);
            self.declarators();
            self.expect(";");
            self.finish();
        }
    }

    fn throws_clause(&mut self) {
        if self.at("throws") {
            self.start(NodeKind::ThrowsClause);
            self.bump();
            self.type_list();
            self.finish();
        }
    }

    fn param_list(&mut self) {
        self.start(NodeKind::ParamList);
        self.expect("(");
        while !self.at(")") && !self.eof() {
            let before = self.pos;
            self.param();
            if !self.eat(",") {
                if self.pos == before {
                    self.error_bump();
                }
                break;
            }
        }
        self.expect(")");
        self.finish();
    }

    fn param(&mut self) {
        self.start(NodeKind::Param);
        self.modifiers();
        self.type_();
        self.eat("...");
        if self.at("this") {
            self.bump();
        } else {
            self.expect_ident();
        }
        while self.at("[") && self.nth(1) == "]" {
            self.bump_n(2);
        }
        self.finish();
    }

    fn declarators(&mut self) {
        loop {
            self.start(NodeKind::VarDeclarator);
            self.expect_ident();
            while self.at("[") && self.nth(1) == "]" {
                self.bump_n(2);
            }
            if self.eat("=") {
                if self.at("{") {
                    self.array_init();
                } else {
                    self.expr();
                }
            }
            self.finish();
            if !self.eat(",") {
                break;
            }
        }
    }

    // ---- types -------------------------------------------------------------

    fn type_(&mut self) {
        self.start(NodeKind::Type);
        while self.at("@") {
            self.annotation();
        }
        let t = self.tok(0);
        if t.kind == TokenKind::Keyword && (is_primitive(self.nth(0)) || self.nth(0) == "void") {
            self.bump();
        } else if self.at_ident() {
            self.bump();
            if self.at("<") {
                self.type_args();
            }
            while self.at(".") && self.tok(1).kind == TokenKind::Ident {
                self.bump_n(2);
                if self.at("<") {
                    self.type_args();
                }
            }
        } else {
            self.error_empty();
        }
        while self.at("[") && self.nth(1) == "]" {
            self.bump_n(2);
        }
        self.finish();
    }

    fn type_args(&mut self) {
        self.start(NodeKind::TypeArgs);
        self.bump();
        if self.eat(">") {
            self.finish();
            return;
        }
        loop {
            if self.at("?") {
                self.start(NodeKind::Wildcard);
                self.bump();
                if self.at("extends") || self.at("super") {
                    self.bump();
                    self.type_();
                }
                self.finish();
            } else {
                self.type_();
            }
            if !self.eat(",") {
                break;
            }
        }
        self.expect(">");
        self.finish();
    }

    // ---- statements -------------------------------------------------------

    fn block(&mut self) {
        self.start(NodeKind::Block);
        if !self.eat("{") {
            self.error_empty();
            self.finish();
            return;
        }
        while !self.at("}") && !self.eof() {
            let before = self.pos;
            self.statement();
            if self.pos == before {
                self.error_bump();
            }
        }
        self.expect("}");
        self.finish();
    }

    fn paren_condition(&mut self) {
        self.expect("(");
        self.expr();
        self.expect(")");
    }

    fn statement(&mut self) {
        if self.depth > MAX_DEPTH {
            self.error_bump();
            return;
        }
        self.depth += 1;
        self.statement_inner();
        self.depth -= 1;
    }

    fn statement_inner(&mut self) {
        let kw = self.tok(0).kind == TokenKind::Keyword;
        match self.nth(0) {
            "{" => self.block(),
            ";" => {
                self.start(NodeKind::EmptyStmt);
                self.bump();
                self.finish();
            }
            "if" if kw => {
                self.start(NodeKind::IfStmt);
                self.bump();
                self.paren_condition();
                self.statement();
                if self.eat("else") {
                    self.statement();
                }
                self.finish();
            }
            "while" if kw => {
                self.start(NodeKind::WhileStmt);
                self.bump();
                self.paren_condition();
                self.statement();
                self.finish();
            }
            "do" if kw => {
                self.start(NodeKind::DoStmt);
                self.bump();
                self.statement();
                self.expect("while");
                self.paren_condition();
                self.expect(";");
                self.finish();
            }
            "for" if kw => self.for_stmt(),
            "switch" if kw => {
                self.start(NodeKind::SwitchStmt);
                self.bump();
                self.paren_condition();
                self.switch_block();
                self.finish();
            }
            "return" if kw => {
                self.start(NodeKind::ReturnStmt);
                self.bump();
                if !self.at(";") {
                    self.expr();
                }
                self.expect(";");
                self.finish();
            }
            "break" | "continue" if kw => {
                let kind = if self.at("break") {
                    NodeKind::BreakStmt
                } else {
                    NodeKind::ContinueStmt
                };
                self.start(kind);
                self.bump();
                if self.at_ident() {
                    self.bump();
                }
                self.expect(";");
                self.finish();
            }
            "throw" if kw => {
                self.start(NodeKind::ThrowStmt);
                self.bump();
                self.expr();
                self.expect(";");
                self.finish();
            }
            "try" if kw => self.try_stmt(),
            "synchronized" if kw && self.nth(1) == "(" => {
                self.start(NodeKind::SyncStmt);
                self.bump();
                self.paren_condition();
                self.block();
                self.finish();
            }
            "assert" if kw => {
                self.start(NodeKind::AssertStmt);
                self.bump();
                self.expr();
                if self.eat(":") {
                    self.expr();
                }
                self.expect(";");
                self.finish();
            }
            _ if self.at_local_class() => {
                self.start(NodeKind::LocalClassDecl);
                let cp = self.checkpoint();
                self.modifiers();
                self.type_decl(cp);
                self.finish();
            }
            _ if self.at_ident() && self.nth(1) == ":" => {
                self.start(NodeKind::LabeledStmt);
                self.bump_n(2);
                self.statement();
                self.finish();
            }
            _ if self.is_local_var_decl() => {
                self.start(NodeKind::LocalVarDecl);
                self.modifiers();
                self.type_();
                self.declarators();
                self.expect(";");
                self.finish();
            }
            _ => {
                self.start(NodeKind::ExprStmt);
                let before = self.pos;
                self.expr();
                if self.pos == before && !self.at(";") && !self.at("}") {
                    self.error_bump();
                }
                self.expect(";");
                self.finish();
            }
        }
    }

    fn at_local_class(&self) -> bool {
        let mut i = self.pos;
        while matches!(self.text_at(i), "abstract" | "final" | "static" | "strictfp")
            || self.text_at(i) == "@" && self.text_at(i + 1) != "interface"
        {
            if self.text_at(i) == "@" {
                let next = self.skip_modifiers_scan(i);
                if next == i {
                    return false;
                }
                i = next;
            } else {
                i += 1;
            }
        }
        self.kind_at(i) == TokenKind::Keyword
            && matches!(self.text_at(i), "class" | "interface" | "enum")
    }

    fn for_stmt(&mut self) {
        let foreach = {
            let i = self.skip_modifiers_scan(self.pos + 2);
            self.text_at(self.pos + 1) == "("
                && self.scan_type(i).is_some_and(|j| {
                    let mut k = j + 1;
                    while self.text_at(k) == "[" && self.text_at(k + 1) == "]" {
                        k += 2;
                    }
                    self.kind_at(j) == TokenKind::Ident && self.text_at(k) == ":"
                })
        };
        if foreach {
            self.start(NodeKind::ForEachStmt);
            self.bump_n(2);
            self.param();
            self.expect(":");
            self.expr();
            self.expect(")");
            self.statement();
            self.finish();
            return;
        }
        self.start(NodeKind::ForStmt);
        self.bump();
        self.expect("(");
        if !self.at(";") {
            self.start(NodeKind::ForInit);
            if self.is_local_var_decl() {
                self.modifiers();
                self.type_();
                self.declarators();
            } else {
                self.expr_list();
            }
            self.finish();
        }
        self.expect(";");
        if !self.at(";") {
            self.expr();
        }
        self.expect(";");
        if !self.at(")") {
            self.start(NodeKind::ForUpdate);
            self.expr_list();
            self.finish();
        }
        self.expect(")");
        self.statement();
        self.finish();
    }

    fn expr_list(&mut self) {
        loop {
            self.expr();
            if !self.eat(",") {
                break;
            }
        }
    }

    fn switch_block(&mut self) {
        if !self.eat("{") {
            self.error_empty();
            return;
        }
        while !self.at("}") && !self.eof() {
            let before = self.pos;
            if self.at("case") || self.at("default") {
                self.start(NodeKind::SwitchGroup);
                while self.at("case") || (self.at("default") && self.nth(1) == ":") {
                    self.start(NodeKind::SwitchLabel);
                    if self.eat("case") {
                        self.conditional();
                    } else {
                        self.bump();
                    }
                    self.expect(":");
                    self.finish();
                }
                while !self.at("case") && !self.at("default") && !self.at("}") && !self.eof() {
                    let b = self.pos;
                    self.statement();
                    if self.pos == b {
                        self.error_bump();
                    }
                }
                self.finish();
            }
            if self.pos == before {
                self.error_bump();
            }
        }
        self.expect("}");
    }

    fn try_stmt(&mut self) {
        self.start(NodeKind::TryStmt);
        self.bump();
        if self.at("(") {
            self.start(NodeKind::ResourceSpec);
            self.bump();
            while !self.at(")") && !self.eof() {
                let before = self.pos;
                self.start(NodeKind::Resource);
                if self.is_local_var_decl() {
                    self.modifiers();
                    self.type_();
                    self.expect_ident();
                    self.expect("=");
                    self.expr();
                } else {
                    self.expr();
                }
                self.finish();
                if !self.eat(";") {
                    if self.pos == before {
                        self.error_bump();
                    }
                    break;
                }
            }
            self.expect(")");
            self.finish();
        }
        self.block();
        while self.at("catch") {
            self.start(NodeKind::CatchClause);
            self.bump();
            self.expect("(");
            self.start(NodeKind::Param);
            self.modifiers();
            self.type_();
            while self.eat("|") {
                self.type_();
            }
            self.expect_ident();
            self.finish();
            self.expect(")");
            self.block();
            self.finish();
        }
        if self.at("finally") {
            self.start(NodeKind::FinallyClause);
            self.bump();
            self.block();
            self.finish();
        }
        self.finish();
    }

    // ---- expressions --------------------------------------------------------

    fn expr(&mut self) {
        if self.depth > MAX_DEPTH {
            self.error_bump();
            return;
        }
        self.depth += 1;
        if self.at_lambda() {
            self.lambda();
        } else {
            let cp = self.checkpoint();
            self.conditional();
            if let Some(n) = self.assign_op() {
                self.b.start_at(cp, NodeKind::AssignExpr);
                self.bump_n(n);
                self.expr();
                self.finish();
            }
        }
        self.depth -= 1;
    }

    fn lambda(&mut self) {
        self.start(NodeKind::LambdaExpr);
        self.start(NodeKind::LambdaParams);
        if self.at_ident() {
            self.bump();
        } else {
            self.bump();
            while !self.at(")") && !self.eof() {
                let before = self.pos;
                if self.at_ident() && matches!(self.nth(1), "," | ")") {
                    self.start(NodeKind::Param);
                    self.bump();
                    self.finish();
                } else {
                    self.param();
                }
                if !self.eat(",") {
                    if self.pos == before {
                        self.error_bump();
                    }
                    break;
                }
            }
            self.expect(")");
        }
        self.finish();
        self.expect("->");
        if self.at("{") {
            self.block();
        } else {
            self.expr();
        }
        self.finish();
    }

    fn conditional(&mut self) {
        let cp = self.checkpoint();
        self.binary(1);
        if self.at("?") {
            self.b.start_at(cp, NodeKind::ConditionalExpr);
            self.bump();
            self.expr();
            self.expect(":");
            if self.at_lambda() {
                self.lambda();
            } else {
                self.conditional();
            }
            self.finish();
        }
    }

    fn binary(&mut self, min_prec: u8) {
        let cp = self.checkpoint();
        self.unary();
        while let Some((n, prec)) = self.binary_op() {
            if prec < min_prec {
                break;
            }
            if self.at("instanceof") {
                self.b.start_at(cp, NodeKind::InstanceOfExpr);
                self.bump();
                self.eat("final");
                self.type_();
                self.finish();
                continue;
            }
            self.b.start_at(cp, NodeKind::BinaryExpr);
            self.bump_n(n);
            self.binary(prec + 1);
            self.finish();
        }
    }

    fn unary(&mut self) {
        if self.depth > MAX_DEPTH {
            self.error_bump();
            return;
        }
        if self.tok(0).kind == TokenKind::Punct
            && matches!(self.nth(0), "+" | "-" | "++" | "--" | "!" | "~")
        {
            self.depth += 1;
            self.start(NodeKind::PrefixExpr);
            self.bump();
            self.unary();
            self.finish();
            self.depth -= 1;
        } else if self.at("(") && self.is_cast() {
            self.depth += 1;
            self.start(NodeKind::CastExpr);
            self.bump();
            self.type_();
            while self.eat("&") {
                self.type_();
            }
            self.expect(")");
            if self.at_lambda() {
                self.lambda();
            } else {
                self.unary();
            }
            self.finish();
            self.depth -= 1;
        } else {
            self.postfix();
        }
    }

    fn postfix(&mut self) {
        let cp = self.checkpoint();
        self.primary();
        loop {
            match self.nth(0) {
                "." if self.tok(0).kind == TokenKind::Punct => {
                    let next = self.tok(1).kind;
                    if next == TokenKind::Ident && self.nth(2) == "(" {
                        self.b.start_at(cp, NodeKind::MethodCall);
                        self.bump_n(2);
                        self.args();
                    } else if next == TokenKind::Ident {
                        self.b.start_at(cp, NodeKind::FieldAccess);
                        self.bump_n(2);
                    } else if self.nth(1) == "<" {
                        self.b.start_at(cp, NodeKind::MethodCall);
                        self.bump();
                        self.type_args();
                        self.expect_ident();
                        self.args();
                    } else if self.nth(1) == "new" {
                        self.b.start_at(cp, NodeKind::NewExpr);
                        self.bump_n(2);
                        self.creator_rest();
                    } else if matches!(self.nth(1), "this" | "class" | "super") {
                        self.b.start_at(cp, NodeKind::FieldAccess);
                        self.bump_n(2);
                    } else {
                        self.b.start_at(cp, NodeKind::FieldAccess);
                        self.bump();
                        self.error_empty();
                        self.finish();
                        break;
                    }
                    self.finish();
                }
                "[" => {
                    if self.nth(1) == "]" {
                        self.b.start_at(cp, NodeKind::ClassLiteral);
                        while self.at("[") && self.nth(1) == "]" {
                            self.bump_n(2);
                        }
                        if self.eat("::") {
                            self.bump();
                        } else {
                            self.expect(".");
                            self.expect("class");
                        }
                        self.finish();
                    } else {
                        self.b.start_at(cp, NodeKind::ArrayAccess);
                        self.bump();
                        self.expr();
                        self.expect("]");
                        self.finish();
                    }
                }
                "::" => {
                    self.b.start_at(cp, NodeKind::MethodRef);
                    self.bump();
                    if self.at("<") {
                        self.type_args();
                    }
                    if self.at_ident() || self.at("new") {
                        self.bump();
                    } else {
                        self.error_empty();
                    }
                    self.finish();
                }
                "++" | "--" if self.tok(0).kind == TokenKind::Punct => {
                    self.b.start_at(cp, NodeKind::PostfixExpr);
                    self.bump();
                    self.finish();
                }
                _ => break,
            }
        }
    }

    fn primary(&mut self) {
        let t = *self.tok(0);
        let text = self.nth(0);
        match t.kind {
            TokenKind::IntLiteral
            | TokenKind::FloatLiteral
            | TokenKind::CharLiteral
            | TokenKind::StringLiteral => {
                self.start(NodeKind::Literal);
                self.bump();
                self.finish();
            }
            TokenKind::Keyword if matches!(text, "true" | "false" | "null") => {
                self.start(NodeKind::Literal);
                self.bump();
                self.finish();
            }
            TokenKind::Keyword if text == "this" || text == "super" => {
                if self.nth(1) == "(" {
                    self.start(NodeKind::MethodCall);
                    self.bump();
                    self.args();
                } else {
                    self.start(if text == "this" {
                        NodeKind::ThisExpr
                    } else {
                        NodeKind::SuperExpr
                    });
                    self.bump();
                }
                self.finish();
            }
            TokenKind::Keyword if text == "new" => {
                let cp = self.checkpoint();
                self.bump();
                let kind = self.creator_rest_kind();
                self.b.start_at(cp, kind);
                self.finish();
            }
            TokenKind::Keyword if is_primitive(text) || text == "void" => {
                self.start(NodeKind::ClassLiteral);
                self.type_();
                if self.eat("::") {
                    self.expect("new");
                } else {
                    self.expect(".");
                    self.expect("class");
                }
                self.finish();
            }
            TokenKind::Ident => {
                if self.nth(1) == "(" {
                    self.start(NodeKind::MethodCall);
                    self.bump();
                    self.args();
                } else {
                    self.start(NodeKind::NameExpr);
                    self.bump();
                }
                self.finish();
            }
            _ if text == "(" && t.kind == TokenKind::Punct => {
                self.start(NodeKind::ParenExpr);
                self.bump();
                self.expr();
                self.expect(")");
                self.finish();
            }
            _ => {
                self.start(NodeKind::Error);
                if !self.at_stop_token() && t.kind != TokenKind::Keyword {
                    self.bump();
                }
                self.finish();
            }
        }
    }

    /// After `.new`: parses the remainder of an inner-class creation.
    fn creator_rest(&mut self) {
        if self.at("<") {
            self.type_args();
        }
        self.type_();
        self.args();
        if self.at("{") {
            self.class_body();
        }
    }

    /// After `new`: parses either an object or array creation and reports
    /// which one it was.
    fn creator_rest_kind(&mut self) -> NodeKind {
        if self.at("<") {
            self.type_args();
        }
        let is_array = self
            .scan_type_no_dims(self.pos)
            .is_some_and(|j| self.text_at(j) == "[");
        if is_array {
            self.start(NodeKind::Type);
            self.type_no_dims();
            self.finish();
            while self.at("[") {
                self.bump();
                if !self.eat("]") {
                    self.expr();
                    self.expect("]");
                }
            }
            if self.at("{") {
                self.array_init();
            }
            NodeKind::ArrayCreation
        } else {
            self.start(NodeKind::Type);
            self.type_no_dims();
            self.finish();
            if self.at("(") {
                self.args();
            } else {
                self.error_empty();
            }
            if self.at("{") {
                self.class_body();
            }
            NodeKind::NewExpr
        }
    }

    fn scan_type_no_dims(&self, mut i: usize) -> Option<usize> {
        if self.kind_at(i) == TokenKind::Keyword && is_primitive(self.text_at(i)) {
            return Some(i + 1);
        }
        if self.kind_at(i) != TokenKind::Ident {
            return None;
        }
        i += 1;
        if self.text_at(i) == "<" {
            i = self.scan_type_args(i)?;
        }
        while self.text_at(i) == "." && self.kind_at(i + 1) == TokenKind::Ident {
            i += 2;
            if self.text_at(i) == "<" {
                i = self.scan_type_args(i)?;
            }
        }
        Some(i)
    }

    fn type_no_dims(&mut self) {
        while self.at("@") {
            self.annotation();
        }
        if self.tok(0).kind == TokenKind::Keyword && is_primitive(self.nth(0)) {
            self.bump();
            return;
        }
        if !self.at_ident() {
            self.error_empty();
            return;
        }
        self.bump();
        if self.at("<") {
            self.type_args();
        }
        while self.at(".") && self.tok(1).kind == TokenKind::Ident {
            self.bump_n(2);
            if self.at("<") {
                self.type_args();
            }
        }
    }

    fn array_init(&mut self) {
        self.start(NodeKind::ArrayInit);
        self.bump();
        while !self.at("}") && !self.eof() {
            let before = self.pos;
            if self.at("{") {
                self.array_init();
            } else {
                self.expr();
            }
            if !self.eat(",") {
                if self.pos == before {
                    self.error_bump();
                }
                break;
            }
        }
        self.expect("}");
        self.finish();
    }

    fn args(&mut self) {
        self.start(NodeKind::ArgList);
        self.expect("(");
        while !self.at(")") && !self.eof() {
            let before = self.pos;
            self.expr();
            if !self.eat(",") {
                if self.pos == before {
                    self.error_bump();
                }
                break;
            }
        }
        self.expect(")");
        self.finish();
    }
}
