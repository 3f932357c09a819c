//! Typed accessors over the untyped tree.
//!
//! These helpers assume a well-formed subtree; callers that rewrite code
//! should check [`contains_error`] first.

use crate::lexer::TokenKind;
use crate::tree::{Element, NodeId, NodeKind, SyntaxTree, TokenId};

pub fn contains_error(tree: &SyntaxTree, n: NodeId) -> bool {
    tree.descendants(n).any(|d| tree.kind(d) == NodeKind::Error)
}

/// Operator text of a binary, assignment, prefix or postfix node, with
/// split `>` tokens glued back together.
pub fn operator(tree: &SyntaxTree, n: NodeId) -> String {
    tree.child_tokens(n).map(|t| tree.token_text(t)).collect()
}

pub fn binary_op(tree: &SyntaxTree, n: NodeId) -> String {
    operator(tree, n)
}

pub fn operands(tree: &SyntaxTree, n: NodeId) -> Option<(NodeId, NodeId)> {
    let mut it = tree.child_nodes(n);
    Some((it.next()?, it.next()?))
}

/// Single operand of a prefix/postfix/paren/cast expression (the last child node).
pub fn operand(tree: &SyntaxTree, n: NodeId) -> Option<NodeId> {
    tree.child_nodes(n).last()
}

pub struct IfParts {
    pub cond: NodeId,
    pub then: NodeId,
    pub else_: Option<NodeId>,
}

pub fn if_parts(tree: &SyntaxTree, n: NodeId) -> Option<IfParts> {
    let nodes: Vec<_> = tree.child_nodes(n).collect();
    let has_else = tree.has_child_token(n, "else");
    match (nodes.as_slice(), has_else) {
        ([c, t], false) => Some(IfParts {
            cond: *c,
            then: *t,
            else_: None,
        }),
        ([c, t, e], true) => Some(IfParts {
            cond: *c,
            then: *t,
            else_: Some(*e),
        }),
        _ => None,
    }
}

/// (condition, body) of a while loop or (body, condition) of a do loop,
/// both returned as (condition, body).
pub fn loop_cond_body(tree: &SyntaxTree, n: NodeId) -> Option<(NodeId, NodeId)> {
    let nodes: Vec<_> = tree.child_nodes(n).collect();
    match (tree.kind(n), nodes.as_slice()) {
        (NodeKind::WhileStmt, [c, b]) => Some((*c, *b)),
        (NodeKind::DoStmt, [b, c]) => Some((*c, *b)),
        _ => None,
    }
}

pub struct ForParts {
    pub init: Option<NodeId>,
    pub cond: Option<NodeId>,
    pub update: Option<NodeId>,
    pub body: NodeId,
}

pub fn for_parts(tree: &SyntaxTree, n: NodeId) -> Option<ForParts> {
    let mut semis = 0;
    let mut parts = ForParts {
        init: None,
        cond: None,
        update: None,
        body: NodeId(u32::MAX),
    };
    let mut closed = false;
    for el in tree.children(n) {
        match *el {
            Element::Token(t) => match tree.token_text(t) {
                ";" => semis += 1,
                ")" => closed = true,
                _ => {}
            },
            Element::Node(c) => {
                if closed {
                    parts.body = c;
                } else if tree.kind(c) == NodeKind::ForInit {
                    parts.init = Some(c);
                } else if tree.kind(c) == NodeKind::ForUpdate {
                    parts.update = Some(c);
                } else if semis == 1 {
                    parts.cond = Some(c);
                } else {
                    return None;
                }
            }
        }
    }
    (closed && semis == 2 && parts.body.0 != u32::MAX).then_some(parts)
}

/// Statements of a block or switch group, in order.
pub fn statements(tree: &SyntaxTree, n: NodeId) -> Vec<NodeId> {
    tree.child_nodes(n)
        .filter(|&c| tree.kind(c).is_statement() || tree.kind(c) == NodeKind::Error)
        .collect()
}

/// The identifier token of a declarator, parameter or name expression.
pub fn name_token(tree: &SyntaxTree, n: NodeId) -> Option<TokenId> {
    tree.child_tokens(n)
        .find(|&t| tree.token_kind(t) == TokenKind::Ident)
}

pub fn name(tree: &SyntaxTree, n: NodeId) -> Option<&str> {
    name_token(tree, n).map(|t| tree.token_text(t))
}

/// Initializer expression of a `VarDeclarator`.
pub fn declarator_init(tree: &SyntaxTree, n: NodeId) -> Option<NodeId> {
    if tree.has_child_token(n, "=") {
        tree.child_nodes(n).next()
    } else {
        None
    }
}

/// Whether the declarator carries `[]` after its name.
pub fn declarator_has_dims(tree: &SyntaxTree, n: NodeId) -> bool {
    tree.has_child_token(n, "[")
}

pub fn declared_type(tree: &SyntaxTree, decl: NodeId) -> Option<NodeId> {
    tree.child_of_kind(decl, NodeKind::Type)
}

pub fn declarators(tree: &SyntaxTree, decl: NodeId) -> Vec<NodeId> {
    tree.children_of_kind(decl, NodeKind::VarDeclarator).collect()
}

/// Method call pieces: optional receiver, method name token, argument nodes.
pub struct CallParts {
    pub receiver: Option<NodeId>,
    pub name: TokenId,
    pub args: Vec<NodeId>,
}

pub fn call_parts(tree: &SyntaxTree, n: NodeId) -> Option<CallParts> {
    let arglist = tree.child_of_kind(n, NodeKind::ArgList)?;
    let receiver = tree
        .child_nodes(n)
        .next()
        .filter(|&c| tree.kind(c) != NodeKind::ArgList && tree.kind(c) != NodeKind::TypeArgs);
    let name = tree
        .child_tokens(n)
        .filter(|&t| matches!(tree.token_kind(t), TokenKind::Ident | TokenKind::Keyword))
        .last()?;
    Some(CallParts {
        receiver,
        name,
        args: tree.child_nodes(arglist).collect(),
    })
}

/// Strips redundant parentheses.
pub fn unparen(tree: &SyntaxTree, mut n: NodeId) -> NodeId {
    while tree.kind(n) == NodeKind::ParenExpr {
        match operand(tree, n) {
            Some(inner) => n = inner,
            None => break,
        }
    }
    n
}

/// Block statements when `n` is a block, otherwise `n` itself.
pub fn body_statements(tree: &SyntaxTree, n: NodeId) -> Vec<NodeId> {
    if tree.kind(n) == NodeKind::Block {
        statements(tree, n)
    } else {
        vec![n]
    }
}

/// Binding strength of an expression node; higher binds tighter.
pub fn precedence(tree: &SyntaxTree, n: NodeId) -> u8 {
    use NodeKind::*;
    match tree.kind(n) {
        LambdaExpr => 0,
        AssignExpr => 1,
        ConditionalExpr => 2,
        BinaryExpr => 2 + binary_precedence(&binary_op(tree, n)),
        InstanceOfExpr => 2 + 7,
        PrefixExpr | CastExpr => 14,
        _ => 15,
    }
}

/// Binary operator precedence, 1 (`||`) to 10 (`*`).
pub fn binary_precedence(op: &str) -> u8 {
    match op {
        "||" => 1,
        "&&" => 2,
        "|" => 3,
        "^" => 4,
        "&" => 5,
        "==" | "!=" => 6,
        "<" | ">" | "<=" | ">=" | "instanceof" => 7,
        "<<" | ">>" | ">>>" => 8,
        "+" | "-" => 9,
        "*" | "/" | "%" => 10,
        _ => 0,
    }
}

/// Expression precedence level corresponding to a binary operator.
pub fn operator_level(op: &str) -> u8 {
    2 + binary_precedence(op)
}

/// Whether `n` is the body statement of a loop (directly, not nested in a block).
pub fn enclosing_statement_list(tree: &SyntaxTree, stmt: NodeId) -> Option<NodeId> {
    let p = tree.parent(stmt)?;
    matches!(tree.kind(p), NodeKind::Block | NodeKind::SwitchGroup).then_some(p)
}
