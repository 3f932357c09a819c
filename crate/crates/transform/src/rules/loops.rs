//! Loop shape rewrites: rules 2, 3, 4 and 20.

use sect_java::ast;
use sect_java::{NodeId, NodeKind, SyntaxTree};

use super::{as_statement, braced, extra_indent, nodes_of, Rewriter, Sites};
use crate::analysis::{declared_names, has_comment, jumps, later_siblings, mentions, may_not_complete};
use crate::render::{dedent, reindent, stmt_sep, Renderer, INDENT};

use NodeKind::*;

fn labelled(tree: &SyntaxTree, n: NodeId) -> bool {
    tree.parent(n).is_some_and(|p| tree.kind(p) == LabeledStmt)
}

fn body_locals(tree: &SyntaxTree, body: NodeId) -> Vec<String> {
    if tree.kind(body) != Block {
        return vec![];
    }
    ast::statements(tree, body)
        .into_iter()
        .filter(|&s| tree.kind(s) == LocalVarDecl)
        .flat_map(|s| declared_names(tree, s))
        .collect()
}

/// Appends statements before the closing brace of `block`.
fn block_append(r: &Renderer<'_>, block: NodeId, extra: &[String]) -> String {
    let tree = r.tree;
    let len = tree.children(block).len();
    let sep = match ast::statements(tree, block).last() {
        Some(&last) => stmt_sep(tree, last),
        None if tree.text(block).contains('\n') => format!("\n{}{INDENT}", tree.line_indent(block)),
        None => " ".to_owned(),
    };
    let mut out = r.part(block, 0..len - 1);
    for s in extra {
        out.push_str(&sep);
        out.push_str(s);
    }
    let close = r.part(block, len - 1..len);
    if close == "}" {
        out.push(' ');
    }
    out.push_str(&close);
    out
}

pub(crate) struct For2While;

impl For2While {
    fn eligible(tree: &SyntaxTree, n: NodeId) -> bool {
        let Some(p) = ast::for_parts(tree, n) else {
            return false;
        };
        if labelled(tree, n) || !jumps(tree, p.body).continues.is_empty() {
            return false;
        }
        if let Some(u) = p.update {
            if may_not_complete(tree, p.body) {
                return false;
            }
            let shadowed = body_locals(tree, p.body);
            if shadowed.iter().any(|name| mentions(tree, &[u], name)) {
                return false;
            }
        }
        true
    }
}

impl Rewriter for For2While {
    fn find(&self, tree: &SyntaxTree) -> Sites {
        Sites::each(nodes_of(tree, ForStmt).filter(|&n| Self::eligible(tree, n)).collect())
    }

    fn rewrite(&self, r: &Renderer<'_>, n: NodeId) -> String {
        let tree = r.tree;
        let p = ast::for_parts(tree, n).expect("checked in find");
        let sep = stmt_sep(tree, n);
        let updates: Vec<String> = p
            .update
            .map(|u| tree.child_nodes(u).map(|e| format!("{};", r.node(e))).collect())
            .unwrap_or_default();
        let body = match tree.kind(p.body) {
            _ if updates.is_empty() => r.node(p.body),
            Block => block_append(r, p.body, &updates),
            EmptyStmt => format!("{{ {} }}", updates.join(" ")),
            _ => format!("{{ {} {} }}", r.node(p.body), updates.join(" ")),
        };
        let cond = p.cond.map_or_else(|| "true".to_owned(), |c| r.node(c));
        let looped = format!("while ({cond}){}", spaced_body(tree, p.body, body));
        let Some(init) = p.init else {
            return looped;
        };
        let init_text = if tree.child_of_kind(init, Type).is_some() {
            format!("{};", r.node(init))
        } else {
            tree.child_nodes(init)
                .map(|e| format!("{};", r.node(e)))
                .collect::<Vec<_>>()
                .join(&sep)
        };
        let text = format!("{init_text}{sep}{looped}");
        let names = declared_names(tree, init);
        let later = later_siblings(tree, n);
        if names.iter().any(|name| mentions(tree, &later, name)) {
            braced(tree, n, &text)
        } else {
            as_statement(tree, n, text)
        }
    }
}

/// Body text with the whitespace that separated it from the loop header.
fn spaced_body(tree: &SyntaxTree, body: NodeId, text: String) -> String {
    let trivia = tree.leading_trivia(body);
    let unchanged_shape = tree.kind(body) == Block || !text.starts_with('{');
    if unchanged_shape && !trivia.is_empty() {
        format!("{trivia}{text}")
    } else {
        format!(" {text}")
    }
}

pub(crate) struct While2For;

impl Rewriter for While2For {
    fn find(&self, tree: &SyntaxTree) -> Sites {
        Sites::each(nodes_of(tree, WhileStmt).collect())
    }

    fn rewrite(&self, r: &Renderer<'_>, n: NodeId) -> String {
        let (cond, body) = ast::loop_cond_body(r.tree, n).expect("well-formed while");
        format!("for (; {}; ){}", r.node(cond), r.spaced(body))
    }
}

pub(crate) struct Do2While;

impl Do2While {
    fn eligible(tree: &SyntaxTree, n: NodeId) -> bool {
        let Some((_, body)) = ast::loop_cond_body(tree, n) else {
            return false;
        };
        let declares = ast::body_statements(tree, body)
            .iter()
            .any(|&s| matches!(tree.kind(s), LocalVarDecl | LocalClassDecl));
        let j = jumps(tree, body);
        !labelled(tree, n)
            && !declares
            && j.breaks.is_empty()
            && j.continues.is_empty()
            && !may_not_complete(tree, body)
    }
}

impl Rewriter for Do2While {
    fn find(&self, tree: &SyntaxTree) -> Sites {
        Sites::each(nodes_of(tree, DoStmt).filter(|&n| Self::eligible(tree, n)).collect())
    }

    fn rewrite(&self, r: &Renderer<'_>, n: NodeId) -> String {
        let tree = r.tree;
        let (cond, body) = ast::loop_cond_body(tree, n).expect("checked in find");
        let first = if tree.kind(body) == Block {
            let stmts = ast::statements(tree, body);
            match stmts.first() {
                Some(&s0) => {
                    let len = tree.children(body).len();
                    let inner = r.part(body, 1..len - 1);
                    let extra = extra_indent(tree, s0, tree.line_indent(n));
                    dedent(&inner, extra).trim().to_owned()
                }
                None => String::new(),
            }
        } else {
            r.node(body)
        };
        let looped = format!("while ({}) {}", r.node(cond), r.node(body));
        if first.is_empty() {
            return looped;
        }
        as_statement(tree, n, format!("{first}{}{looped}", stmt_sep(tree, n)))
    }
}

pub(crate) struct LoopIfContinue2Else;

impl LoopIfContinue2Else {
    /// The loop body block when it starts with `if (c) continue;`.
    fn site(tree: &SyntaxTree, lp: NodeId) -> Option<NodeId> {
        let body = match tree.kind(lp) {
            ForStmt => ast::for_parts(tree, lp)?.body,
            WhileStmt | DoStmt => ast::loop_cond_body(tree, lp)?.1,
            ForEachStmt => tree.child_nodes(lp).last()?,
            _ => return None,
        };
        if tree.kind(body) != Block {
            return None;
        }
        let first = *ast::statements(tree, body).first()?;
        let p = ast::if_parts(tree, first)?;
        if p.else_.is_some() || tree.kind(first) != IfStmt || has_comment(tree.leading_trivia(first)) {
            return None;
        }
        let then = match ast::body_statements(tree, p.then).as_slice() {
            [s] => *s,
            _ => return None,
        };
        let bare = tree.kind(then) == ContinueStmt && tree.child_nodes(then).next().is_none() && tree.child_tokens(then).count() == 2;
        bare.then_some(body)
    }
}

impl Rewriter for LoopIfContinue2Else {
    fn find(&self, tree: &SyntaxTree) -> Sites {
        let loops = tree
            .descendants(tree.root())
            .filter(|&n| tree.kind(n).is_loop() && !ast::contains_error(tree, n));
        Sites::each(loops.filter_map(|l| Self::site(tree, l)).collect())
    }

    fn rewrite(&self, r: &Renderer<'_>, block: NodeId) -> String {
        let tree = r.tree;
        let stmts = ast::statements(tree, block);
        let guard = stmts[0];
        let cond = ast::if_parts(tree, guard).expect("checked in find").cond;
        let lead = tree.leading_trivia(guard);
        let rest: String = stmts[1..].iter().map(|&s| r.spaced(s)).collect();
        let (rest, close) = if lead.contains('\n') {
            (reindent(&rest, INDENT), format!("\n{}", tree.line_indent(guard)))
        } else {
            (rest, " ".to_owned())
        };
        let len = tree.children(block).len();
        format!(
            "{{{lead}if (!({})) {{{rest}{close}}}{}",
            r.node(cond),
            r.part(block, len - 1..len)
        )
    }
}
