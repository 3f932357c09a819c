//! Expression rewrites: rules 8, 9, 13, 21, 22 and 23.

use sect_java::ast;
use sect_java::{NodeId, NodeKind, SyntaxTree};

use super::{nodes_of, Rewriter, Sites};
use crate::analysis::{inner_comment, swappable};
use crate::render::Renderer;
use crate::types::{infer, local_type};

use NodeKind::*;

pub(crate) struct Unary2Add;

impl Rewriter for Unary2Add {
    fn find(&self, tree: &SyntaxTree) -> Sites {
        let sites = tree.descendants(tree.root()).filter(|&n| {
            matches!(tree.kind(n), PostfixExpr | PrefixExpr)
                && matches!(ast::operator(tree, n).as_str(), "++" | "--")
                && tree.parent(n).is_some_and(|p| matches!(tree.kind(p), ExprStmt | ForUpdate))
                && !ast::contains_error(tree, n)
        });
        Sites::each(sites.collect())
    }

    fn rewrite(&self, r: &Renderer<'_>, n: NodeId) -> String {
        let op = if ast::operator(r.tree, n) == "++" { "+=" } else { "-=" };
        let x = ast::operand(r.tree, n).expect("operand");
        format!("{} {op} 1", r.node(x))
    }
}

pub(crate) struct Add2Equal;

impl Add2Equal {
    /// `x += e` keeps its meaning as `x = x + (e)` only when no narrowing
    /// cast is hidden in the compound form.
    fn expandable(tree: &SyntaxTree, n: NodeId) -> bool {
        if ast::operator(tree, n) != "+=" {
            return false;
        }
        let Some((x, e)) = ast::operands(tree, n) else {
            return false;
        };
        if tree.kind(x) != NameExpr {
            return false;
        }
        let (Some(tx), Some(te)) = (local_type(tree, x), infer(tree, e)) else {
            return false;
        };
        let small = matches!(te.as_str(), "int" | "short" | "byte" | "char");
        match tx.as_str() {
            "String" => true,
            "int" => small,
            "long" => small || te == "long",
            "float" => small || matches!(te.as_str(), "long" | "float"),
            "double" => small || matches!(te.as_str(), "long" | "float" | "double"),
            _ => false,
        }
    }
}

impl Rewriter for Add2Equal {
    fn find(&self, tree: &SyntaxTree) -> Sites {
        Sites::each(nodes_of(tree, AssignExpr).filter(|&n| Self::expandable(tree, n)).collect())
    }

    fn rewrite(&self, r: &Renderer<'_>, n: NodeId) -> String {
        let (x, e) = ast::operands(r.tree, n).expect("checked in find");
        let x = r.node(x);
        format!("{x} = {x} + ({})", r.node(e))
    }
}

pub(crate) struct ModifyConstant;

const INT_EDGES: [u128; 2] = [2147483647, 2147483648];
const LONG_EDGES: [u128; 2] = [9223372036854775807, 9223372036854775808];

impl ModifyConstant {
    fn eligible(tree: &SyntaxTree, n: NodeId) -> bool {
        let text = tree.text(n);
        let (digits, long) = match text.strip_suffix(['l', 'L']) {
            Some(d) => (d, true),
            None => (text, false),
        };
        let clean: String = digits.chars().filter(|&c| c != '_').collect();
        if clean.is_empty() || !clean.bytes().all(|b| b.is_ascii_digit()) || (clean.len() > 1 && clean.starts_with('0')) {
            return false;
        }
        let Ok(v) = clean.parse::<u128>() else {
            return false;
        };
        if (long && LONG_EDGES.contains(&v)) || (!long && INT_EDGES.contains(&v)) {
            return false;
        }
        for a in tree.ancestors(n) {
            match tree.kind(a) {
                // A MethodDecl reached before any statement holds an element default.
                SwitchLabel | Annotation | ArrayCreation | MethodDecl => return false,
                k if k.is_statement() || k == ArrayInit => break,
                _ => {}
            }
        }
        true
    }
}

impl Rewriter for ModifyConstant {
    fn find(&self, tree: &SyntaxTree) -> Sites {
        Sites::each(nodes_of(tree, Literal).filter(|&n| Self::eligible(tree, n)).collect())
    }

    fn rewrite(&self, r: &Renderer<'_>, n: NodeId) -> String {
        format!("(({} - 1) + 1)", r.tree.text(n))
    }
}

fn swap_operands(r: &Renderer<'_>, n: NodeId, op: &str) -> String {
    let tree = r.tree;
    let (a, b) = ast::operands(tree, n).expect("binary operands");
    let level = ast::operator_level(&ast::binary_op(tree, n));
    let mut right = r.node(a);
    if ast::precedence(tree, a) <= level {
        right = format!("({right})");
    }
    format!("{} {op} {right}", r.node(b))
}

fn binary_sites(tree: &SyntaxTree, ops: &[&str]) -> Sites {
    let sites = nodes_of(tree, BinaryExpr).filter(|&n| {
        ops.contains(&ast::binary_op(tree, n).as_str())
            && !inner_comment(tree, n)
            && ast::operands(tree, n).is_some_and(|(a, b)| swappable(tree, a, b))
    });
    Sites::each(sites.collect())
}

pub(crate) struct SwitchEqualExp;

impl Rewriter for SwitchEqualExp {
    fn find(&self, tree: &SyntaxTree) -> Sites {
        binary_sites(tree, &["==", "!="])
    }

    fn rewrite(&self, r: &Renderer<'_>, n: NodeId) -> String {
        swap_operands(r, n, &ast::binary_op(r.tree, n))
    }
}

pub(crate) struct SwitchRelation;

impl Rewriter for SwitchRelation {
    fn find(&self, tree: &SyntaxTree) -> Sites {
        binary_sites(tree, &["<", "<=", ">", ">="])
    }

    fn rewrite(&self, r: &Renderer<'_>, n: NodeId) -> String {
        let mirrored = match ast::binary_op(r.tree, n).as_str() {
            "<" => ">",
            "<=" => ">=",
            ">" => "<",
            _ => "<=",
        };
        swap_operands(r, n, mirrored)
    }
}

pub(crate) struct SwitchStringEqual;

impl SwitchStringEqual {
    fn parts(tree: &SyntaxTree, n: NodeId) -> Option<(NodeId, NodeId)> {
        let call = ast::call_parts(tree, n)?;
        if !matches!(tree.token_text(call.name), "equals" | "equalsIgnoreCase") {
            return None;
        }
        let recv = call.receiver?;
        let arg = match call.args.as_slice() {
            [a] => *a,
            _ => return None,
        };
        let is_text = |e: NodeId| tree.kind(e) == Literal && tree.text(e).starts_with('"');
        if !is_text(arg) || matches!(tree.kind(recv), Literal | ThisExpr | SuperExpr) {
            return None;
        }
        (infer(tree, recv).as_deref() == Some("String")).then_some((recv, arg))
    }
}

impl Rewriter for SwitchStringEqual {
    fn find(&self, tree: &SyntaxTree) -> Sites {
        Sites::each(nodes_of(tree, MethodCall).filter(|&n| Self::parts(tree, n).is_some()).collect())
    }

    fn rewrite(&self, r: &Renderer<'_>, n: NodeId) -> String {
        let (recv, lit) = Self::parts(r.tree, n).expect("checked in find");
        let call = ast::call_parts(r.tree, n).expect("checked in find");
        format!("{}.{}({})", r.node(lit), r.tree.token_text(call.name), r.node(recv))
    }
}
