//! Site finders and rewrites, one per rule.

use sect_java::ast;
use sect_java::{NodeId, NodeKind, SyntaxTree};

use crate::analysis::is_list_parent;
use crate::render::{reindent, Renderer, INDENT};

mod branches;
mod decls;
mod exprs;
mod loops;

pub(crate) struct Sites {
    pub nodes: Vec<NodeId>,
    /// Rewrites performed; differs from `nodes.len()` when one node hosts
    /// several (a block with two merged runs, say).
    pub count: usize,
}

impl Sites {
    pub fn each(nodes: Vec<NodeId>) -> Self {
        let count = nodes.len();
        Sites { nodes, count }
    }
}

pub(crate) trait Rewriter {
    fn find(&self, tree: &SyntaxTree) -> Sites;
    fn rewrite(&self, r: &Renderer<'_>, site: NodeId) -> String;
}

/// Rewriter for rules 2–23. Rule 1 renames tokens instead.
pub(crate) fn rewriter(id: u8, tree: &SyntaxTree, seed: u64) -> Box<dyn Rewriter> {
    match id {
        2 => Box::new(loops::For2While),
        3 => Box::new(loops::While2For),
        4 => Box::new(loops::Do2While),
        5 => Box::new(branches::IfElseIf2IfElse),
        6 => Box::new(branches::IfElse2IfElseIf),
        7 => Box::new(branches::Switch2If),
        8 => Box::new(exprs::Unary2Add),
        9 => Box::new(exprs::Add2Equal),
        10 => Box::new(decls::DivideVarDecl),
        11 => Box::new(decls::MergeVarDecl),
        12 => Box::new(decls::SwapStatement),
        13 => Box::new(exprs::ModifyConstant),
        14 => Box::new(branches::ReverseIf),
        15 => Box::new(branches::If2CondExp),
        16 => Box::new(branches::CondExp2If),
        17 => Box::new(decls::InfixDividing::new(tree, seed)),
        18 => Box::new(decls::DividePrePostFix),
        19 => Box::new(branches::DividingComposedIf),
        20 => Box::new(loops::LoopIfContinue2Else),
        21 => Box::new(exprs::SwitchEqualExp),
        22 => Box::new(exprs::SwitchStringEqual),
        23 => Box::new(exprs::SwitchRelation),
        _ => unreachable!("rule {id} has no tree rewriter"),
    }
}

/// Error-free nodes of `kind`, in document order.
pub(crate) fn nodes_of(tree: &SyntaxTree, kind: NodeKind) -> impl Iterator<Item = NodeId> + '_ {
    tree.descendants(tree.root())
        .filter(move |&n| tree.kind(n) == kind && !ast::contains_error(tree, n))
}

pub(crate) fn multiline(tree: &SyntaxTree, n: NodeId) -> bool {
    tree.text(n).contains('\n')
}

/// `{ text }`, laid out over several lines when `n` was.
pub(crate) fn braced(tree: &SyntaxTree, n: NodeId, text: &str) -> String {
    if multiline(tree, n) || text.contains('\n') {
        let ind = tree.line_indent(n);
        format!("{{\n{ind}{INDENT}{}\n{ind}}}", reindent(text, INDENT))
    } else {
        format!("{{ {text} }}")
    }
}

/// Braces a multi-statement replacement unless it lands in a statement list.
pub(crate) fn as_statement(tree: &SyntaxTree, n: NodeId, text: String) -> String {
    if is_list_parent(tree, n) {
        text
    } else {
        braced(tree, n, &text)
    }
}

/// A statement rendered as a block: blocks as-is, anything else braced.
pub(crate) fn as_block(r: &Renderer<'_>, s: NodeId) -> String {
    if r.tree.kind(s) == NodeKind::Block {
        r.node(s)
    } else {
        braced(r.tree, s, &r.node(s))
    }
}

/// Modifiers and type of a declaration, as written.
pub(crate) fn decl_prefix(r: &Renderer<'_>, decl: NodeId) -> String {
    let k = r
        .tree
        .children(decl)
        .iter()
        .position(|e| matches!(*e, sect_java::Element::Node(c) if r.tree.kind(c) == NodeKind::VarDeclarator))
        .unwrap_or(0);
    r.part(decl, 0..k)
}

/// The extra indentation `inner` has relative to `outer`.
pub(crate) fn extra_indent<'a>(tree: &'a SyntaxTree, inner: NodeId, outer: &str) -> &'a str {
    tree.line_indent(inner).strip_prefix(outer).unwrap_or("")
}
