//! Conditional rewrites: rules 5, 6, 7, 14, 15, 16 and 19.

use sect_java::ast;
use sect_java::{NodeId, NodeKind, SyntaxTree};

use super::{as_block, as_statement, braced, decl_prefix, extra_indent, multiline, nodes_of, Rewriter, Sites};
use crate::analysis::{dangling_else_risk, declared_names, has_comment, inner_comment, jumps, mentions};
use crate::render::{dedent, reindent, stmt_sep, Edit, Renderer, INDENT};
use crate::types::{infer, local_type};

use NodeKind::*;

pub(crate) struct IfElseIf2IfElse;

impl Rewriter for IfElseIf2IfElse {
    fn find(&self, tree: &SyntaxTree) -> Sites {
        let sites = nodes_of(tree, IfStmt).filter(|&n| {
            ast::if_parts(tree, n)
                .and_then(|p| p.else_)
                .is_some_and(|e| tree.kind(e) == IfStmt)
        });
        Sites::each(sites.collect())
    }

    fn rewrite(&self, r: &Renderer<'_>, n: NodeId) -> String {
        let tree = r.tree;
        let else_ = ast::if_parts(tree, n).and_then(|p| p.else_).expect("checked in find");
        r.node_edit(n, &|c| {
            if c == else_ {
                Edit::Replace(braced(tree, n, &r.node(c)))
            } else {
                Edit::Keep
            }
        })
    }
}

pub(crate) struct IfElse2IfElseIf;

impl IfElse2IfElseIf {
    /// The lone `if` inside an `else { ... }` block.
    fn nested_if(tree: &SyntaxTree, n: NodeId) -> Option<NodeId> {
        let block = ast::if_parts(tree, n)?.else_?;
        if tree.kind(block) != Block {
            return None;
        }
        let inner = match ast::statements(tree, block).as_slice() {
            [s] if tree.kind(*s) == IfStmt => *s,
            _ => return None,
        };
        let close = tree.last_token(block)?;
        if has_comment(tree.leading_trivia(inner)) || has_comment(tree.token(close).trivia(tree.source())) {
            return None;
        }
        let mut tail = inner;
        while let Some(e) = ast::if_parts(tree, tail)?.else_ {
            if tree.kind(e) != IfStmt {
                return Some(inner);
            }
            tail = e;
        }
        (!dangling_else_risk(tree, n)).then_some(inner)
    }
}

impl Rewriter for IfElse2IfElseIf {
    fn find(&self, tree: &SyntaxTree) -> Sites {
        Sites::each(nodes_of(tree, IfStmt).filter(|&n| Self::nested_if(tree, n).is_some()).collect())
    }

    fn rewrite(&self, r: &Renderer<'_>, n: NodeId) -> String {
        let tree = r.tree;
        let inner = Self::nested_if(tree, n).expect("checked in find");
        let block = ast::if_parts(tree, n).and_then(|p| p.else_).expect("checked in find");
        let extra = extra_indent(tree, inner, tree.line_indent(n));
        let text = dedent(&r.node(inner), extra);
        r.node_edit(n, &|c| if c == block { Edit::Replace(text.clone()) } else { Edit::Keep })
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum LabelKind {
    Text,
    Number,
}

fn case_kind(tree: &SyntaxTree, e: NodeId) -> Option<LabelKind> {
    let lit = match tree.kind(e) {
        Literal => e,
        PrefixExpr if ast::operator(tree, e) == "-" => ast::operand(tree, e).filter(|&o| tree.kind(o) == Literal)?,
        _ => return None,
    };
    match infer(tree, lit)?.as_str() {
        "String" if lit == e => Some(LabelKind::Text),
        "int" | "char" => Some(LabelKind::Number),
        _ => None,
    }
}

struct Arm {
    /// Case expressions; empty for the default arm.
    labels: Vec<NodeId>,
    is_default: bool,
    body: Vec<NodeId>,
}

struct SwitchShape {
    scrutinee: NodeId,
    kind: LabelKind,
    arms: Vec<Arm>,
}

fn ends_in_jump(tree: &SyntaxTree, s: NodeId) -> bool {
    matches!(tree.kind(s), BreakStmt | ReturnStmt | ThrowStmt | ContinueStmt)
}

fn is_plain_break(tree: &SyntaxTree, s: NodeId) -> bool {
    tree.kind(s) == BreakStmt && tree.child_tokens(s).count() == 2
}

fn switch_shape(tree: &SyntaxTree, n: NodeId) -> Option<SwitchShape> {
    if inner_comment(tree, n) {
        return None;
    }
    let scrutinee = tree.child_nodes(n).next()?;
    if !matches!(tree.kind(ast::unparen(tree, scrutinee)), NameExpr | Literal) {
        return None;
    }
    let groups: Vec<NodeId> = tree.children_of_kind(n, SwitchGroup).collect();
    let mut kind = None;
    let mut arms = Vec::new();
    let mut defaults = 0;
    for (gi, &g) in groups.iter().enumerate() {
        let mut arm = Arm {
            labels: vec![],
            is_default: false,
            body: vec![],
        };
        for l in tree.children_of_kind(g, SwitchLabel) {
            if tree.has_child_token(l, "default") {
                arm.is_default = true;
                continue;
            }
            let e = tree.child_nodes(l).next()?;
            let k = case_kind(tree, e)?;
            if kind.is_some_and(|prev| prev != k) {
                return None;
            }
            kind = Some(k);
            arm.labels.push(e);
        }
        let mut stmts = ast::statements(tree, g);
        let last = gi + 1 == groups.len();
        match stmts.last() {
            Some(&s) if ends_in_jump(tree, s) => {
                if is_plain_break(tree, s) {
                    stmts.pop();
                }
            }
            _ if last => {}
            _ => return None,
        }
        if stmts.iter().any(|&s| !jumps(tree, s).breaks.is_empty() || tree.kind(s) == LocalClassDecl) {
            return None;
        }
        defaults += usize::from(arm.is_default);
        arm.body = stmts;
        arms.push(arm);
    }
    if defaults > 1 || arms.iter().all(|a| a.is_default) {
        return None;
    }
    // A local declared in one group is in scope in the following ones.
    for (i, a) in arms.iter().enumerate() {
        let names: Vec<String> = a
            .body
            .iter()
            .filter(|&&s| tree.kind(s) == LocalVarDecl)
            .flat_map(|&s| declared_names(tree, s))
            .collect();
        let others: Vec<NodeId> = arms
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .flat_map(|(_, b)| b.body.iter().copied())
            .collect();
        if names.iter().any(|name| mentions(tree, &others, name)) {
            return None;
        }
    }
    Some(SwitchShape {
        scrutinee,
        kind: kind?,
        arms,
    })
}

pub(crate) struct Switch2If;

impl Rewriter for Switch2If {
    fn find(&self, tree: &SyntaxTree) -> Sites {
        Sites::each(nodes_of(tree, SwitchStmt).filter(|&n| switch_shape(tree, n).is_some()).collect())
    }

    fn rewrite(&self, r: &Renderer<'_>, n: NodeId) -> String {
        let tree = r.tree;
        let shape = switch_shape(tree, n).expect("checked in find");
        let scr = r.node(shape.scrutinee);
        let ml = multiline(tree, n);
        let ind = tree.line_indent(n);
        let target = format!("{ind}{INDENT}");
        let block = |body: &[NodeId]| -> String {
            let Some(&s0) = body.first() else {
                return if ml { format!("{{\n{ind}}}") } else { "{ }".to_owned() };
            };
            let mut text = r.node(s0);
            for &s in &body[1..] {
                text.push_str(&r.spaced(s));
            }
            if ml {
                let extra = extra_indent(tree, s0, &target);
                format!("{{\n{target}{}\n{ind}}}", dedent(&text, extra))
            } else {
                format!("{{ {text} }}")
            }
        };
        let test = |e: NodeId| match shape.kind {
            LabelKind::Text => format!("{scr}.equals({})", r.node(e)),
            LabelKind::Number => format!("{scr} == {}", r.node(e)),
        };
        let mut out = String::new();
        for a in shape.arms.iter().filter(|a| !a.is_default) {
            if !out.is_empty() {
                out.push_str(" else ");
            }
            let cond: Vec<String> = a.labels.iter().map(|&e| test(e)).collect();
            out.push_str(&format!("if ({}) {}", cond.join(" || "), block(&a.body)));
        }
        if let Some(d) = shape.arms.iter().find(|a| a.is_default) {
            out.push_str(&format!(" else {}", block(&d.body)));
        }
        as_statement(tree, n, out)
    }
}

pub(crate) struct ReverseIf;

impl Rewriter for ReverseIf {
    fn find(&self, tree: &SyntaxTree) -> Sites {
        let sites = nodes_of(tree, IfStmt).filter(|&n| ast::if_parts(tree, n).is_some_and(|p| p.else_.is_some()));
        Sites::each(sites.collect())
    }

    fn rewrite(&self, r: &Renderer<'_>, n: NodeId) -> String {
        let p = ast::if_parts(r.tree, n).expect("checked in find");
        let else_ = p.else_.expect("checked in find");
        format!("if (!({})) {} else {}", r.node(p.cond), as_block(r, else_), as_block(r, p.then))
    }
}

/// The `x = e` of a branch holding exactly that one statement.
fn lone_assignment(tree: &SyntaxTree, s: NodeId) -> Option<(NodeId, NodeId)> {
    let stmt = match ast::body_statements(tree, s).as_slice() {
        [x] => *x,
        _ => return None,
    };
    if tree.kind(stmt) != ExprStmt {
        return None;
    }
    let e = tree.child_nodes(stmt).next()?;
    if tree.kind(e) != AssignExpr || ast::operator(tree, e) != "=" {
        return None;
    }
    let (lhs, rhs) = ast::operands(tree, e)?;
    (tree.kind(lhs) == NameExpr).then_some((lhs, rhs))
}

fn same_type(tree: &SyntaxTree, ty: &str, exprs: &[NodeId]) -> bool {
    exprs.iter().all(|&e| infer(tree, e).as_deref() == Some(ty))
}

fn paren_below(r: &Renderer<'_>, e: NodeId, level: u8) -> String {
    let text = r.node(e);
    if ast::precedence(r.tree, e) <= level {
        format!("({text})")
    } else {
        text
    }
}

pub(crate) struct If2CondExp;

impl If2CondExp {
    fn parts(tree: &SyntaxTree, n: NodeId) -> Option<(NodeId, NodeId, NodeId, NodeId)> {
        let p = ast::if_parts(tree, n)?;
        let (x1, e1) = lone_assignment(tree, p.then)?;
        let (x2, e2) = lone_assignment(tree, p.else_?)?;
        if tree.text(x1) != tree.text(x2) || inner_comment(tree, n) {
            return None;
        }
        let ty = local_type(tree, x1)?;
        same_type(tree, &ty, &[e1, e2]).then_some((p.cond, x1, e1, e2))
    }
}

impl Rewriter for If2CondExp {
    fn find(&self, tree: &SyntaxTree) -> Sites {
        Sites::each(nodes_of(tree, IfStmt).filter(|&n| Self::parts(tree, n).is_some()).collect())
    }

    fn rewrite(&self, r: &Renderer<'_>, n: NodeId) -> String {
        let (c, x, a, b) = Self::parts(r.tree, n).expect("checked in find");
        format!(
            "{} = {} ? {} : {};",
            r.node(x),
            paren_below(r, c, 2),
            paren_below(r, a, 1),
            paren_below(r, b, 1)
        )
    }
}

pub(crate) struct CondExp2If;

struct Ternary {
    target: NodeId,
    cond: NodeId,
    a: NodeId,
    b: NodeId,
}

impl CondExp2If {
    fn split(tree: &SyntaxTree, target: NodeId, value: NodeId, ty: &str) -> Option<Ternary> {
        let t = ast::unparen(tree, value);
        if tree.kind(t) != ConditionalExpr {
            return None;
        }
        let mut it = tree.child_nodes(t);
        let (cond, a, b) = (it.next()?, it.next()?, it.next()?);
        same_type(tree, ty, &[a, b]).then_some(Ternary { target, cond, a, b })
    }

    fn parts(tree: &SyntaxTree, n: NodeId) -> Option<Ternary> {
        match tree.kind(n) {
            ExprStmt => {
                let e = tree.child_nodes(n).next()?;
                if tree.kind(e) != AssignExpr || ast::operator(tree, e) != "=" {
                    return None;
                }
                let (lhs, rhs) = ast::operands(tree, e)?;
                if tree.kind(lhs) != NameExpr {
                    return None;
                }
                Self::split(tree, lhs, rhs, &local_type(tree, lhs)?)
            }
            LocalVarDecl => {
                let d = match ast::declarators(tree, n).as_slice() {
                    [d] => *d,
                    _ => return None,
                };
                if ast::declarator_has_dims(tree, d) {
                    return None;
                }
                let ty: String = tree
                    .normalized_text(ast::declared_type(tree, n)?)
                    .chars()
                    .filter(|c| !c.is_whitespace())
                    .collect();
                Self::split(tree, d, ast::declarator_init(tree, d)?, &ty)
            }
            _ => None,
        }
    }
}

impl Rewriter for CondExp2If {
    fn find(&self, tree: &SyntaxTree) -> Sites {
        let sites = tree
            .descendants(tree.root())
            .filter(|&n| matches!(tree.kind(n), ExprStmt | LocalVarDecl) && !ast::contains_error(tree, n))
            .filter(|&n| Self::parts(tree, n).is_some());
        Sites::each(sites.collect())
    }

    fn rewrite(&self, r: &Renderer<'_>, n: NodeId) -> String {
        let tree = r.tree;
        let t = Self::parts(tree, n).expect("checked in find");
        let name = match tree.kind(n) {
            ExprStmt => r.node(t.target),
            _ => ast::name(tree, t.target).expect("declarator name").to_owned(),
        };
        let branches = format!(
            "if ({}) {name} = {}; else {name} = {};",
            r.node(t.cond),
            r.node(t.a),
            r.node(t.b)
        );
        match tree.kind(n) {
            ExprStmt => as_statement(tree, n, branches),
            _ => format!("{} {name};{}{branches}", decl_prefix(r, n), stmt_sep(tree, n)),
        }
    }
}

pub(crate) struct DividingComposedIf;

impl DividingComposedIf {
    fn operands(tree: &SyntaxTree, n: NodeId) -> Option<(NodeId, NodeId, NodeId)> {
        let p = ast::if_parts(tree, n)?;
        if p.else_.is_some() {
            return None;
        }
        let c = ast::unparen(tree, p.cond);
        if tree.kind(c) != BinaryExpr || ast::binary_op(tree, c) != "&&" {
            return None;
        }
        let (a, b) = ast::operands(tree, c)?;
        Some((a, b, p.then))
    }
}

impl Rewriter for DividingComposedIf {
    fn find(&self, tree: &SyntaxTree) -> Sites {
        Sites::each(nodes_of(tree, IfStmt).filter(|&n| Self::operands(tree, n).is_some()).collect())
    }

    fn rewrite(&self, r: &Renderer<'_>, n: NodeId) -> String {
        let tree = r.tree;
        let (a, b, then) = Self::operands(tree, n).expect("checked in find");
        let inner = format!("if ({}){}", r.node(b), r.spaced(then));
        let body = if multiline(tree, n) {
            let ind = tree.line_indent(n);
            format!("{{\n{ind}{INDENT}{}\n{ind}}}", reindent(&inner, INDENT))
        } else {
            format!("{{ {inner} }}")
        };
        format!("if ({}) {body}", r.node(a))
    }
}
