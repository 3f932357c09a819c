//! Declaration and statement-order rewrites: rules 10, 11, 12, 17 and 18.

use std::cell::RefCell;
use std::collections::HashMap;

use sect_java::ast;
use sect_java::{NodeId, NodeKind, SyntaxTree};

use super::{as_statement, decl_prefix, nodes_of, Rewriter, Sites};
use crate::analysis::{declared_names, has_comment, is_pure, mentions};
use crate::naming::FreshNames;
use crate::render::{stmt_sep, Edit, Renderer};
use crate::types::{infer, is_local, is_primitive_or_string, local_type};

use NodeKind::*;

fn statement_lists(tree: &SyntaxTree) -> impl Iterator<Item = NodeId> + '_ {
    tree.descendants(tree.root())
        .filter(move |&n| matches!(tree.kind(n), Block | SwitchGroup) && !ast::contains_error(tree, n))
}

fn compact_type(tree: &SyntaxTree, decl: NodeId) -> Option<String> {
    let ty = ast::declared_type(tree, decl)?;
    Some(tree.normalized_text(ty).chars().filter(|c| !c.is_whitespace()).collect())
}

fn has_final(tree: &SyntaxTree, decl: NodeId) -> bool {
    tree.child_of_kind(decl, Modifiers)
        .is_some_and(|m| tree.has_child_token(m, "final"))
}

pub(crate) struct DivideVarDecl;

impl Rewriter for DivideVarDecl {
    fn find(&self, tree: &SyntaxTree) -> Sites {
        let sites = nodes_of(tree, LocalVarDecl).filter(|&n| ast::declarators(tree, n).len() > 1);
        Sites::each(sites.collect())
    }

    fn rewrite(&self, r: &Renderer<'_>, n: NodeId) -> String {
        let prefix = decl_prefix(r, n);
        let sep = stmt_sep(r.tree, n);
        ast::declarators(r.tree, n)
            .into_iter()
            .map(|d| format!("{prefix} {};", r.node(d)))
            .collect::<Vec<_>>()
            .join(&sep)
    }
}

pub(crate) struct MergeVarDecl;

impl MergeVarDecl {
    fn prefix_key(tree: &SyntaxTree, decl: NodeId) -> String {
        let mut key = String::new();
        if let Some(m) = tree.child_of_kind(decl, Modifiers) {
            key.push_str(&tree.normalized_text(m));
        }
        key.push('|');
        key.push_str(&compact_type(tree, decl).unwrap_or_default());
        key
    }

    /// Maximal runs (length ≥ 2) of adjacent declarations sharing modifiers
    /// and type, with no comment between them.
    fn runs(tree: &SyntaxTree, list: NodeId) -> Vec<Vec<NodeId>> {
        let mut runs = Vec::new();
        let mut cur: Vec<NodeId> = Vec::new();
        let mut key = String::new();
        for s in ast::statements(tree, list) {
            let joins = tree.kind(s) == LocalVarDecl
                && !cur.is_empty()
                && Self::prefix_key(tree, s) == key
                && !has_comment(tree.leading_trivia(s))
                && tree
                    .last_token(*cur.last().expect("non-empty"))
                    .is_some_and(|t| !has_comment(tree.token(t).trivia(tree.source())));
            if joins {
                cur.push(s);
                continue;
            }
            if cur.len() > 1 {
                runs.push(std::mem::take(&mut cur));
            }
            cur.clear();
            if tree.kind(s) == LocalVarDecl {
                key = Self::prefix_key(tree, s);
                cur.push(s);
            }
        }
        if cur.len() > 1 {
            runs.push(cur);
        }
        runs
    }
}

impl Rewriter for MergeVarDecl {
    fn find(&self, tree: &SyntaxTree) -> Sites {
        let mut nodes = Vec::new();
        let mut count = 0;
        for list in statement_lists(tree) {
            let k = Self::runs(tree, list).len();
            if k > 0 {
                nodes.push(list);
                count += k;
            }
        }
        Sites { nodes, count }
    }

    fn rewrite(&self, r: &Renderer<'_>, list: NodeId) -> String {
        let tree = r.tree;
        let mut edits: HashMap<NodeId, Option<String>> = HashMap::new();
        for run in Self::runs(tree, list) {
            let decls: Vec<String> = run
                .iter()
                .flat_map(|&s| ast::declarators(tree, s))
                .map(|d| r.node(d))
                .collect();
            edits.insert(run[0], Some(format!("{} {};", decl_prefix(r, run[0]), decls.join(", "))));
            for &s in &run[1..] {
                edits.insert(s, None);
            }
        }
        r.node_edit(list, &|c| match edits.get(&c) {
            Some(Some(text)) => Edit::Replace(text.clone()),
            Some(None) => Edit::Drop,
            None => Edit::Keep,
        })
    }
}

/// Read and write sets of a statement simple enough to reorder.
struct Effects {
    reads: Vec<String>,
    writes: Vec<String>,
}

/// An expression without calls, field or array access, division, allocation
/// or assignment, reading only primitive or String locals. Cannot throw.
fn quiet_reads(tree: &SyntaxTree, e: NodeId) -> Option<Vec<String>> {
    let mut reads = Vec::new();
    for d in tree.descendants(e) {
        match tree.kind(d) {
            Literal | ParenExpr | PrefixExpr | BinaryExpr | ConditionalExpr => {}
            NameExpr => {
                let ty = local_type(tree, d)?;
                if !is_local(tree, d) || !is_primitive_or_string(&ty) {
                    return None;
                }
                reads.push(ast::name(tree, d)?.to_owned());
            }
            _ => return None,
        }
        if tree.kind(d) == BinaryExpr && matches!(ast::binary_op(tree, d).as_str(), "/" | "%") {
            return None;
        }
    }
    is_pure(tree, e).then_some(reads)
}

fn effects(tree: &SyntaxTree, s: NodeId) -> Option<Effects> {
    match tree.kind(s) {
        ExprStmt => {
            let e = tree.child_nodes(s).next()?;
            if tree.kind(e) != AssignExpr {
                return None;
            }
            let (lhs, rhs) = ast::operands(tree, e)?;
            if tree.kind(lhs) != NameExpr || !is_local(tree, lhs) || !is_primitive_or_string(&local_type(tree, lhs)?) {
                return None;
            }
            let target = ast::name(tree, lhs)?.to_owned();
            let mut reads = quiet_reads(tree, rhs)?;
            if ast::operator(tree, e) != "=" {
                reads.push(target.clone());
            }
            Some(Effects {
                reads,
                writes: vec![target],
            })
        }
        LocalVarDecl => {
            if !is_primitive_or_string(&compact_type(tree, s)?) {
                return None;
            }
            let mut reads = Vec::new();
            for d in ast::declarators(tree, s) {
                if ast::declarator_has_dims(tree, d) {
                    return None;
                }
                if let Some(init) = ast::declarator_init(tree, d) {
                    reads.extend(quiet_reads(tree, init)?);
                }
            }
            Some(Effects {
                reads,
                writes: declared_names(tree, s),
            })
        }
        _ => None,
    }
}

fn independent(tree: &SyntaxTree, a: NodeId, b: NodeId) -> bool {
    let (Some(ea), Some(eb)) = (effects(tree, a), effects(tree, b)) else {
        return false;
    };
    let clash = |xs: &[String], ys: &[String]| xs.iter().any(|x| ys.contains(x));
    if clash(&ea.writes, &eb.reads) || clash(&ea.writes, &eb.writes) || clash(&eb.writes, &ea.reads) {
        return false;
    }
    // A declaration must not capture or release a name the other mentions.
    let declared = |s: NodeId| if tree.kind(s) == LocalVarDecl { declared_names(tree, s) } else { vec![] };
    !declared(a).iter().any(|n| mentions(tree, &[b], n)) && !declared(b).iter().any(|n| mentions(tree, &[a], n))
}

pub(crate) struct SwapStatement;

impl SwapStatement {
    fn pairs(tree: &SyntaxTree, list: NodeId) -> Vec<(NodeId, NodeId)> {
        let stmts = ast::statements(tree, list);
        let mut out = Vec::new();
        let mut i = 0;
        while i + 1 < stmts.len() {
            if independent(tree, stmts[i], stmts[i + 1]) {
                out.push((stmts[i], stmts[i + 1]));
                i += 2;
            } else {
                i += 1;
            }
        }
        out
    }
}

impl Rewriter for SwapStatement {
    fn find(&self, tree: &SyntaxTree) -> Sites {
        let mut nodes = Vec::new();
        let mut count = 0;
        for list in statement_lists(tree) {
            let k = Self::pairs(tree, list).len();
            if k > 0 {
                nodes.push(list);
                count += k;
            }
        }
        Sites { nodes, count }
    }

    fn rewrite(&self, r: &Renderer<'_>, list: NodeId) -> String {
        let mut swap = HashMap::new();
        for (a, b) in Self::pairs(r.tree, list) {
            swap.insert(a, b);
            swap.insert(b, a);
        }
        r.node_edit(list, &|c| match swap.get(&c) {
            Some(&other) => Edit::Replace(r.node(other)),
            None => Edit::Keep,
        })
    }
}

pub(crate) struct InfixDividing {
    names: RefCell<FreshNames>,
}

impl InfixDividing {
    pub fn new(tree: &SyntaxTree, seed: u64) -> Self {
        InfixDividing {
            names: RefCell::new(FreshNames::new(tree, seed)),
        }
    }

    /// (declarator, left operand, operator, right operand)
    fn parts(tree: &SyntaxTree, n: NodeId) -> Option<(NodeId, NodeId, String, NodeId)> {
        let d = match ast::declarators(tree, n).as_slice() {
            [d] => *d,
            _ => return None,
        };
        if has_final(tree, n) || ast::declarator_has_dims(tree, d) {
            return None;
        }
        let ty = compact_type(tree, n)?;
        if !is_primitive_or_string(&ty) {
            return None;
        }
        let e = ast::unparen(tree, ast::declarator_init(tree, d)?);
        if tree.kind(e) != BinaryExpr {
            return None;
        }
        let (l, rhs) = ast::operands(tree, e)?;
        let l = ast::unparen(tree, l);
        if tree.kind(l) != BinaryExpr || infer(tree, l).as_deref() != Some(ty.as_str()) {
            return None;
        }
        // An all-literal String initialiser is an interned constant; the
        // split form would not be.
        if ty == "String" && !tree.descendants(e).any(|x| matches!(tree.kind(x), NameExpr | MethodCall)) {
            return None;
        }
        Some((d, l, ast::binary_op(tree, e), rhs))
    }
}

impl Rewriter for InfixDividing {
    fn find(&self, tree: &SyntaxTree) -> Sites {
        Sites::each(nodes_of(tree, LocalVarDecl).filter(|&n| Self::parts(tree, n).is_some()).collect())
    }

    fn rewrite(&self, r: &Renderer<'_>, n: NodeId) -> String {
        let tree = r.tree;
        let (d, l, op, rhs) = Self::parts(tree, n).expect("checked in find");
        let tmp = self.names.borrow_mut().next("tmp_");
        let ty = r.node(ast::declared_type(tree, n).expect("typed declaration"));
        let name = ast::name(tree, d).expect("declarator name");
        format!(
            "{ty} {tmp} = {};{}{} {name} = {tmp} {op} {};",
            r.node(l),
            stmt_sep(tree, n),
            decl_prefix(r, n),
            r.node(rhs)
        )
    }
}

pub(crate) struct DividePrePostFix;

struct Split {
    /// Assignment target (`ExprStmt`) or declarator (`LocalVarDecl`).
    target: NodeId,
    counter: NodeId,
    op: &'static str,
    postfix: bool,
}

impl DividePrePostFix {
    fn step(tree: &SyntaxTree, target_name: &str, value: NodeId) -> Option<(NodeId, &'static str, bool)> {
        let u = ast::unparen(tree, value);
        let postfix = match tree.kind(u) {
            PostfixExpr => true,
            PrefixExpr => false,
            _ => return None,
        };
        let op = match ast::operator(tree, u).as_str() {
            "++" => "+",
            "--" => "-",
            _ => return None,
        };
        let x = ast::operand(tree, u)?;
        if tree.kind(x) != NameExpr || ast::name(tree, x)? == target_name {
            return None;
        }
        matches!(local_type(tree, x)?.as_str(), "int" | "long").then_some((x, op, postfix))
    }

    fn parts(tree: &SyntaxTree, n: NodeId) -> Option<Split> {
        let (target, value, name) = match tree.kind(n) {
            ExprStmt => {
                let e = tree.child_nodes(n).next()?;
                if tree.kind(e) != AssignExpr || ast::operator(tree, e) != "=" {
                    return None;
                }
                let (lhs, rhs) = ast::operands(tree, e)?;
                if tree.kind(lhs) != NameExpr {
                    return None;
                }
                local_type(tree, lhs)?;
                (lhs, rhs, ast::name(tree, lhs)?)
            }
            LocalVarDecl => {
                let d = match ast::declarators(tree, n).as_slice() {
                    [d] => *d,
                    _ => return None,
                };
                (d, ast::declarator_init(tree, d)?, ast::name(tree, d)?)
            }
            _ => return None,
        };
        let (counter, op, postfix) = Self::step(tree, name, value)?;
        Some(Split {
            target,
            counter,
            op,
            postfix,
        })
    }
}

impl Rewriter for DividePrePostFix {
    fn find(&self, tree: &SyntaxTree) -> Sites {
        let sites = tree
            .descendants(tree.root())
            .filter(|&n| matches!(tree.kind(n), ExprStmt | LocalVarDecl) && !ast::contains_error(tree, n))
            .filter(|&n| Self::parts(tree, n).is_some());
        Sites::each(sites.collect())
    }

    fn rewrite(&self, r: &Renderer<'_>, n: NodeId) -> String {
        let tree = r.tree;
        let s = Self::parts(tree, n).expect("checked in find");
        let x = r.node(s.counter);
        let bump = format!("{x} = {x} {} 1;", s.op);
        let read = match tree.kind(n) {
            ExprStmt => format!("{} = {x};", r.node(s.target)),
            _ => {
                let d = r.node_edit(s.target, &|c| {
                    if Some(c) == ast::declarator_init(tree, s.target) {
                        Edit::Replace(x.clone())
                    } else {
                        Edit::Keep
                    }
                });
                format!("{} {d};", decl_prefix(r, n))
            }
        };
        let sep = stmt_sep(tree, n);
        let text = if s.postfix {
            format!("{read}{sep}{bump}")
        } else {
            format!("{bump}{sep}{read}")
        };
        as_statement(tree, n, text)
    }
}
