//! Re-rendering a tree with some nodes replaced.
//!
//! Off-site regions are emitted token by token with their original trivia, so
//! untouched code survives byte for byte. A site's replacement is built from
//! its children's renderings, which lets nested sites compose in one pass.

use std::collections::{HashMap, HashSet};

use sect_java::{Element, NodeId, SyntaxTree, TokenId};

pub(crate) type RewriteFn<'a> = dyn Fn(&Renderer<'_>, NodeId) -> String + 'a;

pub(crate) struct Renderer<'t> {
    pub tree: &'t SyntaxTree,
    sites: HashSet<NodeId>,
    rewrite: Option<&'t RewriteFn<'t>>,
    renames: HashMap<TokenId, String>,
}

impl<'t> Renderer<'t> {
    pub fn new(tree: &'t SyntaxTree, sites: &[NodeId], rewrite: &'t RewriteFn<'t>) -> Self {
        Renderer {
            tree,
            sites: sites.iter().copied().collect(),
            rewrite: Some(rewrite),
            renames: HashMap::new(),
        }
    }

    pub fn with_renames(tree: &'t SyntaxTree, renames: HashMap<TokenId, String>) -> Self {
        Renderer {
            tree,
            sites: HashSet::new(),
            rewrite: None,
            renames,
        }
    }

    /// Whole file, leading trivia included.
    pub fn file(&self) -> String {
        let root = self.tree.root();
        let mut out = self.tree.leading_trivia(root).to_owned();
        out.push_str(&self.node(root));
        out
    }

    /// Node text without its leading trivia.
    pub fn node(&self, n: NodeId) -> String {
        if self.sites.contains(&n) {
            if let Some(f) = self.rewrite {
                return f(self, n);
            }
        }
        let mut out = String::new();
        let mut first = true;
        self.children_into(n, &mut out, &mut first);
        out
    }

    fn children_into(&self, n: NodeId, out: &mut String, first: &mut bool) {
        for el in self.tree.children(n) {
            match *el {
                Element::Token(t) => self.token_into(t, out, first),
                Element::Node(c) => self.child_into(c, out, first),
            }
        }
    }

    fn child_into(&self, c: NodeId, out: &mut String, first: &mut bool) {
        if self.tree.first_token(c).is_none() {
            return;
        }
        if !*first {
            out.push_str(self.tree.leading_trivia(c));
        }
        *first = false;
        out.push_str(&self.node(c));
    }

    fn token_into(&self, t: TokenId, out: &mut String, first: &mut bool) {
        let tok = self.tree.token(t);
        if !*first {
            out.push_str(tok.trivia(self.tree.source()));
        }
        *first = false;
        match self.renames.get(&t) {
            Some(name) => out.push_str(name),
            None => out.push_str(tok.text(self.tree.source())),
        }
    }

    /// Renders the children of `n` in order, letting `hook` replace or drop
    /// child nodes. A replaced child keeps its leading trivia; a dropped one
    /// loses it.
    pub fn node_edit(&self, n: NodeId, hook: &dyn Fn(NodeId) -> Edit) -> String {
        let mut out = String::new();
        let mut first = true;
        for el in self.tree.children(n) {
            match *el {
                Element::Token(t) => self.token_into(t, &mut out, &mut first),
                Element::Node(c) => match hook(c) {
                    Edit::Keep => self.child_into(c, &mut out, &mut first),
                    Edit::Drop => {}
                    Edit::Replace(text) => {
                        if !first {
                            out.push_str(self.tree.leading_trivia(c));
                        }
                        first = false;
                        out.push_str(&text);
                    }
                },
            }
        }
        out
    }

    /// Children `range` of `n`. Trivia before the first rendered element is
    /// kept unless the range starts at the node's first child.
    pub fn part(&self, n: NodeId, range: std::ops::Range<usize>) -> String {
        let mut out = String::new();
        let mut first = range.start == 0;
        for el in &self.tree.children(n)[range] {
            match *el {
                Element::Token(t) => self.token_into(t, &mut out, &mut first),
                Element::Node(c) => self.child_into(c, &mut out, &mut first),
            }
        }
        out
    }

    /// Leading trivia plus rendering: how `n` appears after its predecessor.
    pub fn spaced(&self, n: NodeId) -> String {
        format!("{}{}", self.tree.leading_trivia(n), self.node(n))
    }
}

pub(crate) enum Edit {
    Keep,
    Replace(String),
    Drop,
}

/// Adds `extra` after every line break of `text`.
pub(crate) fn reindent(text: &str, extra: &str) -> String {
    text.replace('\n', &format!("\n{extra}"))
}

/// Removes `extra` from the start of every continuation line that has it.
pub(crate) fn dedent(text: &str, extra: &str) -> String {
    if extra.is_empty() {
        return text.to_owned();
    }
    text.replace(&format!("\n{extra}"), "\n")
}

/// Separator between statements placed where `n` was: a line break with
/// `n`'s indentation when it starts a line, a single space otherwise.
pub(crate) fn stmt_sep(tree: &SyntaxTree, n: NodeId) -> String {
    let trivia = tree.leading_trivia(n);
    if tree.text(n).contains('\n') || trivia.contains('\n') {
        format!("\n{}", tree.line_indent(n))
    } else {
        " ".to_owned()
    }
}

pub(crate) const INDENT: &str = "    ";
