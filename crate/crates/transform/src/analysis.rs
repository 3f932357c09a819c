//! Conservative static checks shared by the rules.

use sect_java::ast;
use sect_java::{NodeId, NodeKind, SyntaxTree, TokenKind};

use NodeKind::*;

pub(crate) fn is_list_parent(tree: &SyntaxTree, n: NodeId) -> bool {
    matches!(tree.parent(n).map(|p| tree.kind(p)), Some(Block | SwitchGroup))
}

pub(crate) fn has_comment(text: &str) -> bool {
    text.contains("//") || text.contains("/*")
}

/// Trivia anywhere inside `n` (not before it) contains a comment.
pub(crate) fn inner_comment(tree: &SyntaxTree, n: NodeId) -> bool {
    let r = tree.token_range(n);
    (r.start + 1..r.end).any(|i| has_comment(tree.token(sect_java::TokenId(i)).trivia(tree.source())))
}

fn is_scope_barrier(k: NodeKind) -> bool {
    matches!(k, LambdaExpr | ClassBody | LocalClassDecl)
}

/// Unlabelled `break` / `continue` statements inside `body` that escape it,
/// i.e. target the loop or switch that owns `body`.
pub(crate) struct Jumps {
    pub breaks: Vec<NodeId>,
    pub continues: Vec<NodeId>,
    pub labelled: bool,
}

pub(crate) fn jumps(tree: &SyntaxTree, body: NodeId) -> Jumps {
    let mut out = Jumps {
        breaks: vec![],
        continues: vec![],
        labelled: false,
    };
    fn walk(tree: &SyntaxTree, n: NodeId, in_loop: bool, in_switch: bool, out: &mut Jumps) {
        match tree.kind(n) {
            BreakStmt | ContinueStmt => {
                let is_break = tree.kind(n) == BreakStmt;
                let labelled = tree.child_tokens(n).any(|t| tree.token_kind(t) == TokenKind::Ident);
                if labelled {
                    out.labelled = true;
                } else if is_break && !in_loop && !in_switch {
                    out.breaks.push(n);
                } else if !is_break && !in_loop {
                    out.continues.push(n);
                }
            }
            k if is_scope_barrier(k) => {}
            k => {
                let loop_here = in_loop || k.is_loop();
                let switch_here = in_switch || k == SwitchStmt;
                for c in tree.child_nodes(n) {
                    walk(tree, c, loop_here, switch_here, out);
                }
            }
        }
    }
    walk(tree, body, false, false, &mut out);
    out
}

fn is_true_literal(tree: &SyntaxTree, n: Option<NodeId>) -> bool {
    match n {
        None => true,
        Some(c) => tree.text(ast::unparen(tree, c)) == "true",
    }
}

/// True unless `stmt` certainly completes normally. Errs toward true.
pub(crate) fn may_not_complete(tree: &SyntaxTree, stmt: NodeId) -> bool {
    match tree.kind(stmt) {
        ExprStmt | LocalVarDecl | EmptyStmt | AssertStmt | LocalClassDecl => false,
        Block => match ast::statements(tree, stmt).last() {
            Some(&last) => {
                ast::statements(tree, stmt).iter().any(|&s| tree.kind(s) == LabeledStmt) || may_not_complete(tree, last)
            }
            None => false,
        },
        IfStmt => match ast::if_parts(tree, stmt) {
            Some(p) => match p.else_ {
                Some(e) => may_not_complete(tree, p.then) && may_not_complete(tree, e),
                None => false,
            },
            None => true,
        },
        WhileStmt => match ast::loop_cond_body(tree, stmt) {
            Some((c, _)) => is_true_literal(tree, Some(c)),
            None => true,
        },
        ForStmt => match ast::for_parts(tree, stmt) {
            Some(p) => is_true_literal(tree, p.cond),
            None => true,
        },
        ForEachStmt => false,
        _ => true,
    }
}

/// Whether rewriting `stmt` into an `if` without `else` could capture an
/// `else` that belongs to an enclosing `if`.
pub(crate) fn dangling_else_risk(tree: &SyntaxTree, stmt: NodeId) -> bool {
    let mut cur = stmt;
    while let Some(p) = tree.parent(cur) {
        match tree.kind(p) {
            Block | SwitchGroup => return false,
            IfStmt => {
                if let Some(parts) = ast::if_parts(tree, p) {
                    if parts.then == cur && parts.else_.is_some() {
                        return true;
                    }
                }
            }
            k if k.is_statement() => {}
            _ => return true,
        }
        cur = p;
    }
    true
}

/// Identifier tokens with text `name` inside any of `nodes`.
pub(crate) fn mentions(tree: &SyntaxTree, nodes: &[NodeId], name: &str) -> bool {
    nodes.iter().any(|&n| {
        tree.token_range(n).any(|i| {
            let t = sect_java::TokenId(i);
            tree.token_kind(t) == TokenKind::Ident && tree.token_text(t) == name
        })
    })
}

/// Statements after `stmt` in its enclosing statement list.
pub(crate) fn later_siblings(tree: &SyntaxTree, stmt: NodeId) -> Vec<NodeId> {
    match tree.parent(stmt) {
        Some(p) if matches!(tree.kind(p), Block | SwitchGroup) => {
            ast::statements(tree, p).into_iter().skip_while(|&s| s != stmt).skip(1).collect()
        }
        _ => vec![],
    }
}

/// Names declared by a `LocalVarDecl` or `ForInit`.
pub(crate) fn declared_names(tree: &SyntaxTree, decl: NodeId) -> Vec<String> {
    ast::declarators(tree, decl)
        .into_iter()
        .filter_map(|d| ast::name(tree, d).map(str::to_owned))
        .collect()
}

/// Free of side effects: no calls, assignments, increments or allocations.
/// String concatenation counts only when the operand types are known, since
/// it may call `toString` on objects.
pub(crate) fn is_pure(tree: &SyntaxTree, e: NodeId) -> bool {
    tree.descendants(e).all(|d| match tree.kind(d) {
        MethodCall | AssignExpr | NewExpr | ArrayCreation | LambdaExpr | MethodRef | Error => false,
        PrefixExpr | PostfixExpr => !matches!(ast::operator(tree, d).as_str(), "++" | "--"),
        BinaryExpr if ast::binary_op(tree, d) == "+" => crate::types::infer(tree, d).is_some(),
        _ => true,
    })
}

/// Exceptions evaluating a pure expression might raise.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub(crate) struct Traps {
    pub null: bool,
    pub other: bool,
}

/// `x / 7` and `x % -3` cannot throw: the divisor is a nonzero literal.
fn constant_divisor(tree: &SyntaxTree, div: NodeId) -> bool {
    let Some((_, d)) = ast::operands(tree, div) else {
        return false;
    };
    let mut d = ast::unparen(tree, d);
    if tree.kind(d) == PrefixExpr && ast::operator(tree, d) == "-" {
        match ast::operand(tree, d) {
            Some(o) => d = ast::unparen(tree, o),
            None => return false,
        }
    }
    if tree.kind(d) != Literal {
        return false;
    }
    let text: String = tree.text(d).chars().filter(|&c| c != '_').collect();
    let digits = text.trim_end_matches(['l', 'L']);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) && digits.bytes().any(|b| b != b'0')
}

/// Array and field access, division, casts and unboxing of names of unknown
/// type may all throw. Unknown names can only fail by unboxing `null`.
pub(crate) fn traps(tree: &SyntaxTree, e: NodeId) -> Traps {
    let mut t = Traps::default();
    for d in tree.descendants(e) {
        match tree.kind(d) {
            ArrayAccess | CastExpr | MethodCall | NewExpr | ArrayCreation => t.other = true,
            FieldAccess => t.null = true,
            BinaryExpr if matches!(ast::binary_op(tree, d).as_str(), "/" | "%") && !constant_divisor(tree, d) => {
                t.other = true
            }
            NameExpr
                if crate::types::local_type(tree, d).is_none_or(|ty| !crate::types::is_primitive_or_string(&ty)) => {
                    t.null = true;
                }
            _ => {}
        }
    }
    t
}

/// Both pure, and reordering them cannot change which exception escapes:
/// at most one side can throw, or both can only throw the same
/// `NullPointerException`.
pub(crate) fn swappable(tree: &SyntaxTree, a: NodeId, b: NodeId) -> bool {
    if !is_pure(tree, a) || !is_pure(tree, b) {
        return false;
    }
    let (ta, tb) = (traps(tree, a), traps(tree, b));
    let quiet = |t: Traps| !t.null && !t.other;
    quiet(ta) || quiet(tb) || (!ta.other && !tb.other)
}
