//! Code metrics used as confounders by the causal analysis.

use serde::{Deserialize, Serialize};

use crate::ast;
use crate::lexer::TokenKind;
use crate::tree::{NodeId, NodeKind, SyntaxTree};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFeatures {
    /// Lines holding at least one token (blank and comment-only lines excluded).
    pub nloc: u64,
    pub token_count: u64,
    /// Height of the node tree.
    pub ast_levels: u64,
    pub ast_nodes: u64,
    pub identifier_count: u64,
    pub ast_error_count: u64,
    /// Cyclomatic complexity: each method body contributes one plus its
    /// decision points.
    pub code_complexity: u64,
}

impl CodeFeatures {
    pub const NAMES: [&'static str; 7] = [
        "nloc",
        "token_count",
        "ast_levels",
        "ast_nodes",
        "identifier_count",
        "ast_error_count",
        "code_complexity",
    ];

    pub fn as_array(&self) -> [u64; 7] {
        [
            self.nloc,
            self.token_count,
            self.ast_levels,
            self.ast_nodes,
            self.identifier_count,
            self.ast_error_count,
            self.code_complexity,
        ]
    }
}

pub fn extract_features(tree: &SyntaxTree) -> CodeFeatures {
    let src = tree.source();
    let mut lines = std::collections::BTreeSet::new();
    let mut line = 0usize;
    let mut scanned = 0usize;
    let mut token_count = 0;
    let mut identifier_count = 0;
    for tok in tree.tokens() {
        if tok.kind == TokenKind::Eof {
            break;
        }
        token_count += 1;
        if tok.kind == TokenKind::Ident {
            identifier_count += 1;
        }
        let start = tok.start as usize;
        line += src[scanned..start].bytes().filter(|&b| b == b'\n').count();
        lines.insert(line);
        let text = &src[start..tok.end as usize];
        let inner = text.bytes().filter(|&b| b == b'\n').count();
        for l in 1..=inner {
            lines.insert(line + l);
        }
        line += inner;
        scanned = tok.end as usize;
    }

    CodeFeatures {
        nloc: lines.len() as u64,
        token_count,
        ast_levels: tree.height() as u64,
        ast_nodes: tree.node_count() as u64,
        identifier_count,
        ast_error_count: tree.error_count() as u64,
        code_complexity: cyclomatic_complexity(tree),
    }
}

fn is_decision_point(tree: &SyntaxTree, n: NodeId) -> bool {
    use NodeKind::*;
    match tree.kind(n) {
        IfStmt | ForStmt | ForEachStmt | WhileStmt | DoStmt | CatchClause | ConditionalExpr => true,
        SwitchLabel => tree.has_child_token(n, "case"),
        BinaryExpr => matches!(ast::binary_op(tree, n).as_str(), "&&" | "||"),
        _ => false,
    }
}

fn is_callable_body_owner(tree: &SyntaxTree, n: NodeId) -> bool {
    matches!(
        tree.kind(n),
        NodeKind::MethodDecl | NodeKind::ConstructorDecl | NodeKind::Initializer
    ) && tree.child_of_kind(n, NodeKind::Block).is_some()
}

pub fn cyclomatic_complexity(tree: &SyntaxTree) -> u64 {
    let mut callables = 0u64;
    let mut decisions = 0u64;
    for n in tree.descendants(tree.root()) {
        if is_callable_body_owner(tree, n) {
            callables += 1;
        }
        if is_decision_point(tree, n) {
            decisions += 1;
        }
    }
    callables.max(1) + decisions
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse;

    #[test]
    fn minimal_method_has_complexity_one() {
        let f = extract_features(&parse("class A { void f() {} }"));
        assert_eq!(f.code_complexity, 1);
        assert_eq!(f.ast_error_count, 0);
    }

    #[test]
    fn single_if_adds_one() {
        let f = extract_features(&parse("class A { void f(int x) { if (x > 0) x--; } }"));
        assert_eq!(f.code_complexity, 2);
    }

    #[test]
    fn every_decision_kind_counts() {
        let src = r#"class A {
    int f(int x, boolean b) {
        for (int i = 0; i < x; i++) {}
        for (int v : new int[0]) {}
        while (b && x > 0 || b) { x--; }
        do { x++; } while (x < 0);
        switch (x) { case 1: case 2: break; default: break; }
        try { x = 1; } catch (RuntimeException e) {} catch (Error e) {}
        return b ? 1 : 2;
    }
    void g() {}
}"#;
        let f = extract_features(&parse(src));
        // 2 methods + for, foreach, while, &&, ||, do, 2 cases, 2 catches, ternary
        assert_eq!(f.code_complexity, 2 + 11);
    }

    #[test]
    fn nloc_skips_blank_and_comment_lines() {
        let src = "// header\n\nclass A {\n  /* block\n  comment */\n  int x; // trailing\n}\n";
        let f = extract_features(&parse(src));
        assert_eq!(f.nloc, 3);
        assert_eq!(f.token_count, 7);
        assert_eq!(f.identifier_count, 2);
    }

    #[test]
    fn invariants_hold_on_error_input() {
        let f = extract_features(&parse("class A { int x = ; }"));
        assert!(f.ast_error_count >= 1);
        assert!(f.ast_levels <= f.ast_nodes);
        assert!(f.identifier_count <= f.token_count);
    }
}
