//! Just enough static typing to keep rewrites from changing conversions.
//!
//! Types are compact strings (`int`, `String`, `int[]`, `List<String>`).
//! Anything the resolver is unsure about is `None`, and callers treat `None`
//! as "do not rewrite".

use sect_java::ast;
use sect_java::{is_primitive, NodeId, NodeKind, SyntaxTree, TokenKind};

use NodeKind::*;

pub(crate) fn is_primitive_or_string(t: &str) -> bool {
    t == "String" || is_primitive(t)
}

pub(crate) fn is_integral(t: &str) -> bool {
    matches!(t, "int" | "long" | "short" | "byte" | "char")
}

fn is_numeric(t: &str) -> bool {
    is_integral(t) || matches!(t, "float" | "double")
}

fn type_text(tree: &SyntaxTree, ty: NodeId) -> String {
    tree.normalized_text(ty).chars().filter(|c| !c.is_whitespace()).collect()
}

/// Declared type of a declarator, parameter or resource, `[]` suffixes on the
/// name included. `None` for untyped lambda parameters.
fn declared(tree: &SyntaxTree, owner: NodeId, decl: NodeId) -> Option<String> {
    let ty = tree.child_of_kind(owner, Type)?;
    let mut t = type_text(tree, ty);
    if tree.kind(decl) == Param && tree.has_child_token(decl, "...") {
        t.push_str("[]");
    }
    let dims = tree.child_tokens(decl).filter(|&tk| tree.token_text(tk) == "[").count();
    for _ in 0..dims {
        t.push_str("[]");
    }
    Some(t)
}

enum Found {
    Typed(String),
    /// The name is bound here, but its type is unknown.
    Opaque,
}

fn in_declarators(tree: &SyntaxTree, decl: NodeId, name: &str, before: Option<NodeId>) -> Option<Found> {
    let mut hit = None;
    for d in tree.children_of_kind(decl, VarDeclarator) {
        if Some(d) == before {
            break;
        }
        if ast::name(tree, d) == Some(name) {
            hit = Some(declared(tree, decl, d).map_or(Found::Opaque, Found::Typed));
        }
    }
    hit
}

fn in_param(tree: &SyntaxTree, p: NodeId, name: &str) -> Option<Found> {
    if ast::name(tree, p) != Some(name) {
        return None;
    }
    if tree.children_of_kind(p, Type).count() != 1 {
        return Some(Found::Opaque);
    }
    Some(declared(tree, p, p).map_or(Found::Opaque, Found::Typed))
}

fn in_statements(tree: &SyntaxTree, stmts: impl Iterator<Item = NodeId>, name: &str) -> Option<Found> {
    let mut hit = None;
    for s in stmts {
        match tree.kind(s) {
            LocalVarDecl => {
                if let Some(f) = in_declarators(tree, s, name, None) {
                    hit = Some(f);
                }
            }
            LocalClassDecl if ast::name(tree, s) == Some(name) => hit = Some(Found::Opaque),
            _ => {}
        }
    }
    hit
}

/// Looks `name` up in the declarations `scope` makes visible to its child
/// `from`.
fn lookup_in(tree: &SyntaxTree, scope: NodeId, from: NodeId, name: &str) -> Option<Found> {
    let before = |n: NodeId| tree.child_nodes(scope).take_while(move |&c| c != n);
    match tree.kind(scope) {
        Block | SwitchGroup => in_statements(tree, before(from), name),
        SwitchStmt => in_statements(
            tree,
            before(from)
                .filter(|&g| tree.kind(g) == SwitchGroup)
                .flat_map(|g| tree.child_nodes(g).collect::<Vec<_>>()),
            name,
        ),
        LocalVarDecl | ForInit => in_declarators(tree, scope, name, Some(from)),
        ForStmt => tree
            .child_of_kind(scope, ForInit)
            .filter(|&i| i != from)
            .and_then(|i| in_declarators(tree, i, name, None)),
        ForEachStmt | CatchClause => {
            let p = tree.child_of_kind(scope, Param)?;
            if p == from {
                return None;
            }
            in_param(tree, p, name)
        }
        MethodDecl | ConstructorDecl => {
            let params = tree.child_of_kind(scope, ParamList)?;
            tree.children_of_kind(params, Param).find_map(|p| in_param(tree, p, name))
        }
        LambdaExpr => {
            let params = tree.child_of_kind(scope, LambdaParams)?;
            let bare = tree
                .child_tokens(params)
                .any(|t| tree.token_kind(t) == TokenKind::Ident && tree.token_text(t) == name);
            if bare {
                return Some(Found::Opaque);
            }
            tree.children_of_kind(params, Param).find_map(|p| in_param(tree, p, name))
        }
        ResourceSpec => {
            let mut hit = None;
            for r in before(from).filter(|&r| tree.kind(r) == Resource) {
                if ast::name(tree, r) == Some(name) {
                    hit = Some(declared(tree, r, r).map_or(Found::Opaque, Found::Typed));
                }
            }
            hit
        }
        TryStmt => {
            let spec = tree.child_of_kind(scope, ResourceSpec)?;
            if spec == from {
                return None;
            }
            tree.children_of_kind(spec, Resource)
                .filter(|&r| ast::name(tree, r) == Some(name))
                .last()
                .map(|r| declared(tree, r, r).map_or(Found::Opaque, Found::Typed))
        }
        ClassBody => {
            // Fields of this class only; an inherited field or an outer
            // scope could also supply the name, so a miss is opaque unless
            // the class has no supertype.
            for m in tree.children_of_kind(scope, FieldDecl) {
                if let Some(f) = in_declarators(tree, m, name, None) {
                    return Some(f);
                }
            }
            let owner = tree.parent(scope)?;
            let plain_class = tree.kind(owner) == ClassDecl
                && tree.child_of_kind(owner, ExtendsClause).is_none()
                && tree.child_of_kind(owner, ImplementsClause).is_none();
            (!plain_class).then_some(Found::Opaque)
        }
        _ => None,
    }
}

/// Type of the variable a simple name refers to.
pub(crate) fn local_type(tree: &SyntaxTree, name_expr: NodeId) -> Option<String> {
    let name = ast::name(tree, name_expr)?;
    let mut from = name_expr;
    for scope in tree.ancestors(name_expr) {
        match lookup_in(tree, scope, from, name) {
            Some(Found::Typed(t)) => return Some(t),
            Some(Found::Opaque) => return None,
            None => {}
        }
        from = scope;
    }
    None
}

/// Whether a simple name refers to a local variable or parameter (not a
/// field), and if so its type.
pub(crate) fn is_local(tree: &SyntaxTree, name_expr: NodeId) -> bool {
    let Some(name) = ast::name(tree, name_expr) else {
        return false;
    };
    let mut from = name_expr;
    for scope in tree.ancestors(name_expr) {
        if matches!(tree.kind(scope), ClassBody) {
            return false;
        }
        if lookup_in(tree, scope, from, name).is_some() {
            return true;
        }
        from = scope;
    }
    false
}

fn literal_type(text: &str) -> Option<&'static str> {
    let first = text.chars().next()?;
    if first == '"' {
        return Some("String");
    }
    if first == '\'' {
        return Some("char");
    }
    if text == "true" || text == "false" {
        return Some("boolean");
    }
    if text == "null" {
        return None;
    }
    let lower = text.to_ascii_lowercase();
    let hex = lower.starts_with("0x");
    if lower.ends_with('l') {
        return Some("long");
    }
    if !hex && (lower.ends_with('f')) {
        return Some("float");
    }
    if !hex && (lower.ends_with('d') || lower.contains('.') || lower.contains('e')) {
        return Some("double");
    }
    first.is_ascii_digit().then_some("int")
}

fn unary_promote(t: &str) -> Option<String> {
    match t {
        "byte" | "short" | "char" | "int" => Some("int".into()),
        "long" | "float" | "double" => Some(t.into()),
        _ => None,
    }
}

fn binary_promote(a: &str, b: &str) -> Option<String> {
    if !is_numeric(a) || !is_numeric(b) {
        return None;
    }
    for wide in ["double", "float", "long"] {
        if a == wide || b == wide {
            return Some(wide.into());
        }
    }
    Some("int".into())
}

fn string_method(name: &str) -> Option<&'static str> {
    Some(match name {
        "length" | "indexOf" | "lastIndexOf" | "compareTo" | "compareToIgnoreCase" | "hashCode" => "int",
        "charAt" => "char",
        "equals" | "equalsIgnoreCase" | "isEmpty" | "startsWith" | "endsWith" | "contains" | "matches" => "boolean",
        "substring" | "trim" | "toUpperCase" | "toLowerCase" | "concat" | "replace" | "intern" | "toString" => "String",
        _ => return None,
    })
}

fn static_call(class: &str, method: &str, args: &[Option<String>]) -> Option<String> {
    match (class, method) {
        ("Math", "abs") if args.len() == 1 => args[0].as_deref().and_then(unary_promote),
        ("Math", "max" | "min") if args.len() == 2 => binary_promote(args[0].as_deref()?, args[1].as_deref()?),
        ("Integer", "parseInt") => Some("int".into()),
        ("Long", "parseLong") => Some("long".into()),
        ("String", "valueOf") | ("Integer" | "Long", "toString") => Some("String".into()),
        _ => None,
    }
}

/// Static type of an expression, when it can be determined without a
/// classpath.
pub(crate) fn infer(tree: &SyntaxTree, e: NodeId) -> Option<String> {
    match tree.kind(e) {
        Literal => literal_type(tree.text(e)).map(str::to_owned),
        NameExpr => local_type(tree, e),
        ParenExpr => infer(tree, ast::operand(tree, e)?),
        CastExpr => tree.child_of_kind(e, Type).map(|t| type_text(tree, t)),
        InstanceOfExpr => Some("boolean".into()),
        AssignExpr => infer(tree, tree.child_nodes(e).next()?),
        PostfixExpr => infer(tree, ast::operand(tree, e)?),
        PrefixExpr => {
            let inner = infer(tree, ast::operand(tree, e)?)?;
            match ast::operator(tree, e).as_str() {
                "!" => (inner == "boolean").then_some(inner),
                "++" | "--" => Some(inner),
                _ => unary_promote(&inner),
            }
        }
        BinaryExpr => {
            let (l, r) = ast::operands(tree, e)?;
            let op = ast::binary_op(tree, e);
            match op.as_str() {
                "&&" | "||" | "==" | "!=" | "<" | ">" | "<=" | ">=" => Some("boolean".into()),
                "<<" | ">>" | ">>>" => unary_promote(&infer(tree, l)?),
                _ => {
                    let (a, b) = (infer(tree, l)?, infer(tree, r)?);
                    if op == "+" && (a == "String" || b == "String") {
                        return Some("String".into());
                    }
                    if matches!(op.as_str(), "&" | "|" | "^") && a == "boolean" && b == "boolean" {
                        return Some("boolean".into());
                    }
                    binary_promote(&a, &b)
                }
            }
        }
        ConditionalExpr => {
            let mut it = tree.child_nodes(e).skip(1);
            let (a, b) = (infer(tree, it.next()?)?, infer(tree, it.next()?)?);
            (a == b).then_some(a)
        }
        ArrayAccess => infer(tree, tree.child_nodes(e).next()?)?
            .strip_suffix("[]")
            .map(str::to_owned),
        FieldAccess => {
            let target = tree.child_nodes(e).next()?;
            let field = tree.child_tokens(e).last()?;
            (tree.token_text(field) == "length" && infer(tree, target)?.ends_with("[]")).then(|| "int".into())
        }
        MethodCall => {
            let call = ast::call_parts(tree, e)?;
            let name = tree.token_text(call.name);
            let recv = call.receiver?;
            if let Some(t) = infer(tree, recv) {
                return (t == "String").then(|| string_method(name)).flatten().map(str::to_owned);
            }
            if tree.kind(recv) == NameExpr && local_type(tree, recv).is_none() {
                let class = tree.text(recv);
                if class.starts_with(char::is_uppercase) && !is_bound(tree, recv) {
                    let args: Vec<_> = call.args.iter().map(|&a| infer(tree, a)).collect();
                    return static_call(class, name, &args);
                }
            }
            None
        }
        _ => None,
    }
}

/// Whether any enclosing scope binds the simple name (variable or field).
fn is_bound(tree: &SyntaxTree, name_expr: NodeId) -> bool {
    let Some(name) = ast::name(tree, name_expr) else {
        return true;
    };
    let mut from = name_expr;
    for scope in tree.ancestors(name_expr) {
        if lookup_in(tree, scope, from, name).is_some() {
            return true;
        }
        from = scope;
    }
    false
}
