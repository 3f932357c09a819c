//! Arena-backed concrete syntax tree.
//!
//! Nodes own an ordered list of child elements (nodes or tokens) and cover
//! a contiguous range of the token stream. Trivia lives on tokens, so the
//! tree is lossless: [`SyntaxTree::print`] walks the elements and yields
//! the original text byte for byte.

use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::lexer::{Token, TokenKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum NodeKind {
    CompilationUnit,
    PackageDecl,
    ImportDecl,
    QualifiedName,
    Modifiers,
    Annotation,
    AnnotationArgs,
    ElementValuePair,
    ElementValueArray,
    ClassDecl,
    InterfaceDecl,
    EnumDecl,
    AnnotationTypeDecl,
    TypeParams,
    TypeParam,
    ExtendsClause,
    ImplementsClause,
    ThrowsClause,
    ClassBody,
    EnumConstant,
    FieldDecl,
    MethodDecl,
    ConstructorDecl,
    Initializer,
    ParamList,
    Param,
    Type,
    TypeArgs,
    Wildcard,
    Dims,
    Block,
    LocalVarDecl,
    VarDeclarator,
    LocalClassDecl,
    ExprStmt,
    IfStmt,
    WhileStmt,
    DoStmt,
    ForStmt,
    ForInit,
    ForUpdate,
    ForEachStmt,
    SwitchStmt,
    SwitchGroup,
    SwitchLabel,
    BreakStmt,
    ContinueStmt,
    ReturnStmt,
    ThrowStmt,
    TryStmt,
    ResourceSpec,
    Resource,
    CatchClause,
    FinallyClause,
    SyncStmt,
    LabeledStmt,
    AssertStmt,
    EmptyStmt,
    Literal,
    NameExpr,
    ThisExpr,
    SuperExpr,
    FieldAccess,
    MethodCall,
    ArgList,
    ArrayAccess,
    ParenExpr,
    BinaryExpr,
    InstanceOfExpr,
    AssignExpr,
    ConditionalExpr,
    PrefixExpr,
    PostfixExpr,
    CastExpr,
    NewExpr,
    ArrayCreation,
    ArrayInit,
    LambdaExpr,
    LambdaParams,
    MethodRef,
    ClassLiteral,
    Error,
}

impl NodeKind {
    pub fn is_statement(self) -> bool {
        use NodeKind::*;
        matches!(
            self,
            Block
                | LocalVarDecl
                | LocalClassDecl
                | ExprStmt
                | IfStmt
                | WhileStmt
                | DoStmt
                | ForStmt
                | ForEachStmt
                | SwitchStmt
                | BreakStmt
                | ContinueStmt
                | ReturnStmt
                | ThrowStmt
                | TryStmt
                | SyncStmt
                | LabeledStmt
                | AssertStmt
                | EmptyStmt
        )
    }

    pub fn is_expression(self) -> bool {
        use NodeKind::*;
        matches!(
            self,
            Literal
                | NameExpr
                | ThisExpr
                | SuperExpr
                | FieldAccess
                | MethodCall
                | ArrayAccess
                | ParenExpr
                | BinaryExpr
                | InstanceOfExpr
                | AssignExpr
                | ConditionalExpr
                | PrefixExpr
                | PostfixExpr
                | CastExpr
                | NewExpr
                | ArrayCreation
                | LambdaExpr
                | MethodRef
                | ClassLiteral
        )
    }

    pub fn is_loop(self) -> bool {
        matches!(
            self,
            NodeKind::WhileStmt | NodeKind::DoStmt | NodeKind::ForStmt | NodeKind::ForEachStmt
        )
    }

    pub fn is_type_decl(self) -> bool {
        matches!(
            self,
            NodeKind::ClassDecl
                | NodeKind::InterfaceDecl
                | NodeKind::EnumDecl
                | NodeKind::AnnotationTypeDecl
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TokenId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Element {
    Node(NodeId),
    Token(TokenId),
}

#[derive(Clone, Debug)]
pub(crate) struct NodeData {
    pub(crate) kind: NodeKind,
    pub(crate) children: Vec<Element>,
    pub(crate) parent: Option<NodeId>,
    pub(crate) tokens: Range<u32>,
}

/// A parsed Java compilation unit. Immutable once built.
#[derive(Clone)]
pub struct SyntaxTree {
    pub(crate) source: String,
    pub(crate) tokens: Vec<Token>,
    pub(crate) nodes: Vec<NodeData>,
    pub(crate) root: NodeId,
}

impl fmt::Debug for SyntaxTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(t: &SyntaxTree, id: NodeId, depth: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            writeln!(f, "{:indent$}{:?}", "", t.kind(id), indent = depth * 2)?;
            for el in t.children(id) {
                match *el {
                    Element::Node(n) => go(t, n, depth + 1, f)?,
                    Element::Token(tk) => writeln!(
                        f,
                        "{:indent$}{:?}",
                        "",
                        t.token_text(tk),
                        indent = (depth + 1) * 2
                    )?,
                }
            }
            Ok(())
        }
        go(self, self.root, 0, f)
    }
}

impl SyntaxTree {
    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn kind(&self, id: NodeId) -> NodeKind {
        self.nodes[id.0 as usize].kind
    }

    pub fn children(&self, id: NodeId) -> &[Element] {
        &self.nodes[id.0 as usize].children
    }

    pub fn parent(&self, id: NodeId) -> Option<NodeId> {
        self.nodes[id.0 as usize].parent
    }

    pub fn child_nodes(&self, id: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        self.children(id).iter().filter_map(|e| match e {
            Element::Node(n) => Some(*n),
            Element::Token(_) => None,
        })
    }

    pub fn child_tokens(&self, id: NodeId) -> impl Iterator<Item = TokenId> + '_ {
        self.children(id).iter().filter_map(|e| match e {
            Element::Token(t) => Some(*t),
            Element::Node(_) => None,
        })
    }

    pub fn child_of_kind(&self, id: NodeId, kind: NodeKind) -> Option<NodeId> {
        self.child_nodes(id).find(|&n| self.kind(n) == kind)
    }

    pub fn children_of_kind(&self, id: NodeId, kind: NodeKind) -> impl Iterator<Item = NodeId> + '_ {
        self.child_nodes(id).filter(move |&n| self.kind(n) == kind)
    }

    /// Direct child token whose text equals `text`.
    pub fn child_token(&self, id: NodeId, text: &str) -> Option<TokenId> {
        self.child_tokens(id).find(|&t| self.token_text(t) == text)
    }

    pub fn has_child_token(&self, id: NodeId, text: &str) -> bool {
        self.child_token(id, text).is_some()
    }

    pub fn token(&self, id: TokenId) -> &Token {
        &self.tokens[id.0 as usize]
    }

    pub fn token_text(&self, id: TokenId) -> &str {
        self.token(id).text(&self.source)
    }

    pub fn token_kind(&self, id: TokenId) -> TokenKind {
        self.token(id).kind
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    /// Token index range covered by the node.
    pub fn token_range(&self, id: NodeId) -> Range<u32> {
        self.nodes[id.0 as usize].tokens.clone()
    }

    pub fn first_token(&self, id: NodeId) -> Option<TokenId> {
        let r = self.token_range(id);
        (r.start < r.end).then_some(TokenId(r.start))
    }

    pub fn last_token(&self, id: NodeId) -> Option<TokenId> {
        let r = self.token_range(id);
        (r.start < r.end).then_some(TokenId(r.end - 1))
    }

    /// Byte span of the node excluding the leading trivia of its first token.
    pub fn span(&self, id: NodeId) -> Range<usize> {
        let r = self.token_range(id);
        if r.start == r.end {
            let pos = self
                .tokens
                .get(r.start as usize)
                .map_or(self.source.len(), |t| t.trivia_start as usize);
            return pos..pos;
        }
        self.tokens[r.start as usize].start as usize..self.tokens[r.end as usize - 1].end as usize
    }

    /// Source text of the node without leading trivia.
    pub fn text(&self, id: NodeId) -> &str {
        &self.source[self.span(id)]
    }

    /// Concatenated token texts with single spaces, ignoring the original
    /// trivia. Handy for comparing expressions.
    pub fn normalized_text(&self, id: NodeId) -> String {
        let r = self.token_range(id);
        let mut out = String::new();
        for i in r {
            let t = &self.tokens[i as usize];
            if !out.is_empty() && t.has_trivia() {
                out.push(' ');
            }
            out.push_str(t.text(&self.source));
        }
        out
    }

    /// Leading trivia of the node's first token.
    pub fn leading_trivia(&self, id: NodeId) -> &str {
        match self.first_token(id) {
            Some(t) => self.token(t).trivia(&self.source),
            None => "",
        }
    }

    /// Whitespace that precedes the node on its own line; empty if the node
    /// does not start a line.
    pub fn line_indent(&self, id: NodeId) -> &str {
        let start = self.span(id).start;
        let line_start = self.source[..start].rfind('\n').map_or(0, |i| i + 1);
        let prefix = &self.source[line_start..start];
        if prefix.chars().all(|c| c == ' ' || c == '\t') {
            prefix
        } else {
            let n = prefix.len() - prefix.trim_start_matches([' ', '\t']).len();
            &prefix[..n]
        }
    }

    /// Pre-order traversal of all nodes below (and including) `id`.
    pub fn descendants(&self, id: NodeId) -> Descendants<'_> {
        Descendants {
            tree: self,
            stack: vec![id],
        }
    }

    pub fn ancestors(&self, id: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        std::iter::successors(self.parent(id), move |&n| self.parent(n))
    }

    /// Renders the tree back to source by walking every element.
    pub fn print(&self) -> String {
        let mut out = String::with_capacity(self.source.len());
        self.print_into(self.root, &mut out);
        out
    }

    fn print_into(&self, id: NodeId, out: &mut String) {
        for el in self.children(id) {
            match *el {
                Element::Node(n) => self.print_into(n, out),
                Element::Token(t) => {
                    let tok = self.token(t);
                    out.push_str(tok.trivia(&self.source));
                    out.push_str(tok.text(&self.source));
                }
            }
        }
    }

    /// Height of the node tree (tokens excluded); a lone root has height 1.
    pub fn height(&self) -> usize {
        let mut best = 0;
        let mut stack = vec![(self.root, 1usize)];
        while let Some((n, d)) = stack.pop() {
            best = best.max(d);
            for c in self.child_nodes(n) {
                stack.push((c, d + 1));
            }
        }
        best
    }

    /// Structural identity: same node kinds, same shape, same token kinds and
    /// texts. Trivia is ignored.
    pub fn structurally_eq(&self, other: &SyntaxTree) -> bool {
        fn eq(a: &SyntaxTree, an: NodeId, b: &SyntaxTree, bn: NodeId) -> bool {
            if a.kind(an) != b.kind(bn) {
                return false;
            }
            let (ac, bc) = (a.children(an), b.children(bn));
            ac.len() == bc.len()
                && ac.iter().zip(bc).all(|(x, y)| match (x, y) {
                    (Element::Node(x), Element::Node(y)) => eq(a, *x, b, *y),
                    (Element::Token(x), Element::Token(y)) => {
                        a.token_kind(*x) == b.token_kind(*y) && a.token_text(*x) == b.token_text(*y)
                    }
                    _ => false,
                })
        }
        eq(self, self.root, other, other.root)
    }

    /// Token texts of the whole unit, excluding the end-of-file marker.
    pub fn token_texts(&self) -> impl Iterator<Item = (TokenKind, &str)> + '_ {
        self.tokens
            .iter()
            .filter(|t| t.kind != TokenKind::Eof)
            .map(|t| (t.kind, t.text(&self.source)))
    }

    pub fn error_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.kind == NodeKind::Error).count()
    }

    /// Smallest node whose span contains the byte range.
    pub fn covering_node(&self, span: Range<usize>) -> NodeId {
        let mut cur = self.root;
        'outer: loop {
            for c in self.child_nodes(cur) {
                let s = self.span(c);
                if s.start <= span.start && span.end <= s.end && s != (0..0) && s.start < s.end {
                    cur = c;
                    continue 'outer;
                }
            }
            return cur;
        }
    }
}

pub struct Descendants<'a> {
    tree: &'a SyntaxTree,
    stack: Vec<NodeId>,
}

impl Iterator for Descendants<'_> {
    type Item = NodeId;

    fn next(&mut self) -> Option<NodeId> {
        let n = self.stack.pop()?;
        let children = self.tree.children(n);
        for el in children.iter().rev() {
            if let Element::Node(c) = el {
                self.stack.push(*c);
            }
        }
        Some(n)
    }
}

/// Incremental builder used by the parser.
pub(crate) struct TreeBuilder {
    nodes: Vec<NodeData>,
    stack: Vec<(NodeKind, Vec<Element>, u32)>,
}

#[derive(Clone, Copy)]
pub(crate) struct Checkpoint {
    depth: usize,
    index: usize,
    token_pos: u32,
}

impl TreeBuilder {
    pub(crate) fn new() -> Self {
        TreeBuilder {
            nodes: Vec::new(),
            stack: Vec::new(),
        }
    }

    pub(crate) fn start(&mut self, kind: NodeKind, token_pos: u32) {
        self.stack.push((kind, Vec::new(), token_pos));
    }

    pub(crate) fn token(&mut self, id: u32) {
        self.stack
            .last_mut()
            .expect("token outside node")
            .1
            .push(Element::Token(TokenId(id)));
    }

    pub(crate) fn checkpoint(&self, token_pos: u32) -> Checkpoint {
        Checkpoint {
            depth: self.stack.len(),
            index: self.stack.last().map_or(0, |f| f.1.len()),
            token_pos,
        }
    }

    /// Opens a node that adopts every child added since `cp`.
    pub(crate) fn start_at(&mut self, cp: Checkpoint, kind: NodeKind) {
        assert_eq!(cp.depth, self.stack.len(), "checkpoint from another frame");
        let frame = self.stack.last_mut().expect("checkpoint outside node");
        let adopted = frame.1.split_off(cp.index);
        self.stack.push((kind, adopted, cp.token_pos));
    }

    pub(crate) fn finish(&mut self) -> NodeId {
        let (kind, children, start_pos) = self.stack.pop().expect("unbalanced finish");
        let id = NodeId(self.nodes.len() as u32);
        let range = self.range_of(&children, start_pos);
        for el in &children {
            if let Element::Node(c) = el {
                self.nodes[c.0 as usize].parent = Some(id);
            }
        }
        self.nodes.push(NodeData {
            kind,
            children,
            parent: None,
            tokens: range,
        });
        if let Some(frame) = self.stack.last_mut() {
            frame.1.push(Element::Node(id));
        }
        id
    }

    fn range_of(&self, children: &[Element], start_pos: u32) -> Range<u32> {
        let bounds = |el: &Element| match *el {
            Element::Token(t) => Some(t.0..t.0 + 1),
            Element::Node(n) => {
                let r = self.nodes[n.0 as usize].tokens.clone();
                (r.start < r.end).then_some(r)
            }
        };
        let first = children.iter().find_map(bounds);
        let last = children.iter().rev().find_map(bounds);
        match (first, last) {
            (Some(f), Some(l)) => f.start..l.end,
            _ => start_pos..start_pos,
        }
    }

    pub(crate) fn build(self, source: String, tokens: Vec<Token>, root: NodeId) -> SyntaxTree {
        assert!(self.stack.is_empty(), "unfinished nodes");
        SyntaxTree {
            source,
            tokens,
            nodes: self.nodes,
            root,
        }
    }
}
