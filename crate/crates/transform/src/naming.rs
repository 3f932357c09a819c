//! Alpha-renaming of locals and parameters.

use std::collections::{HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sect_java::{ast, is_keyword, Element, NodeId, NodeKind, SyntaxTree, TokenId, TokenKind};

use crate::render::Renderer;

/// Collision-free identifiers: `prefix` plus four base-36 digits drawn from
/// a seeded stream, redrawn while the candidate is already used in the file.
pub(crate) struct FreshNames {
    rng: ChaCha8Rng,
    taken: HashSet<String>,
}

const DIGITS: &[u8; 36] = b"0123456789abcdefghijklmnopqrstuvwxyz";
const SPACE: u32 = 36 * 36 * 36 * 36;

impl FreshNames {
    pub fn new(tree: &SyntaxTree, seed: u64) -> Self {
        let taken = tree
            .token_texts()
            .filter(|(k, _)| *k == TokenKind::Ident)
            .map(|(_, t)| t.to_owned())
            .collect();
        FreshNames {
            rng: ChaCha8Rng::seed_from_u64(seed),
            taken,
        }
    }

    pub fn next(&mut self, prefix: &str) -> String {
        loop {
            let mut v = self.rng.random_range(0..SPACE);
            let mut digits = [b'0'; 4];
            for d in digits.iter_mut().rev() {
                *d = DIGITS[(v % 36) as usize];
                v /= 36;
            }
            let name = format!("{prefix}{}", std::str::from_utf8(&digits).expect("ascii"));
            if !is_keyword(&name) && self.taken.insert(name.clone()) {
                return name;
            }
        }
    }
}

struct Decl {
    name: TokenId,
    uses: Vec<TokenId>,
    keep: bool,
}

enum Scope {
    Names(HashMap<String, usize>),
    /// Class body: names found beyond it are captured by an inner class
    /// whose inherited members we cannot see, so they are left alone.
    Barrier,
}

struct Resolver<'t> {
    tree: &'t SyntaxTree,
    decls: Vec<Decl>,
    scopes: Vec<Scope>,
    frozen: usize,
}

impl<'t> Resolver<'t> {
    fn declare(&mut self, name: TokenId) {
        let keep = self.frozen > 0;
        let idx = self.decls.len();
        self.decls.push(Decl {
            name,
            uses: vec![],
            keep,
        });
        let text = self.tree.token_text(name).to_owned();
        if let Some(Scope::Names(m)) = self.scopes.last_mut() {
            m.insert(text, idx);
        }
    }

    fn resolve(&mut self, tok: TokenId) {
        let text = self.tree.token_text(tok);
        let mut crossed = false;
        for s in self.scopes.iter().rev() {
            match s {
                Scope::Barrier => crossed = true,
                Scope::Names(m) => {
                    if let Some(&i) = m.get(text) {
                        let frozen = self.frozen > 0;
                        let d = &mut self.decls[i];
                        d.uses.push(tok);
                        d.keep |= crossed || frozen;
                        return;
                    }
                }
            }
        }
    }

    fn scoped(&mut self, n: NodeId) {
        self.scopes.push(Scope::Names(HashMap::new()));
        self.children(n);
        self.scopes.pop();
    }

    fn children(&mut self, n: NodeId) {
        for c in self.tree.child_nodes(n).collect::<Vec<_>>() {
            self.walk(c);
        }
    }

    fn walk(&mut self, n: NodeId) {
        use NodeKind::*;
        let tree = self.tree;
        let freeze = matches!(tree.kind(n), MethodDecl | ConstructorDecl | LambdaExpr | Initializer)
            && ast::contains_error(tree, n);
        if freeze {
            self.frozen += 1;
        }
        match tree.kind(n) {
            MethodDecl | ConstructorDecl | LambdaExpr | Block | SwitchStmt | ForStmt | ForEachStmt | CatchClause
            | TryStmt => self.scoped(n),
            ClassBody => {
                self.scopes.push(Scope::Barrier);
                self.scopes.push(Scope::Names(HashMap::new()));
                self.children(n);
                self.scopes.pop();
                self.scopes.pop();
            }
            Param => {
                if let Some(t) = ast::name_token(tree, n) {
                    self.declare(t);
                }
            }
            LambdaParams => {
                for el in tree.children(n) {
                    match *el {
                        Element::Token(t) if tree.token_kind(t) == TokenKind::Ident => self.declare(t),
                        Element::Node(c) => self.walk(c),
                        _ => {}
                    }
                }
            }
            VarDeclarator | Resource => {
                let local = tree.kind(n) == Resource
                    || matches!(tree.parent(n).map(|p| tree.kind(p)), Some(LocalVarDecl | ForInit));
                if local {
                    if let Some(t) = ast::name_token(tree, n) {
                        self.declare(t);
                    }
                }
                self.children(n);
            }
            NameExpr => {
                let in_label = tree.parent(n).is_some_and(|p| tree.kind(p) == SwitchLabel);
                if !in_label {
                    if let Some(t) = ast::name_token(tree, n) {
                        self.resolve(t);
                    }
                }
            }
            _ => self.children(n),
        }
        if freeze {
            self.frozen -= 1;
        }
    }
}

/// Renames every local variable and parameter to a fresh identifier.
/// Returns the new text and the number of renamed declarations.
pub(crate) fn rename_variables(tree: &SyntaxTree, seed: u64) -> (String, usize) {
    let mut r = Resolver {
        tree,
        decls: vec![],
        scopes: vec![Scope::Names(HashMap::new())],
        frozen: 0,
    };
    r.walk(tree.root());
    let mut fresh = FreshNames::new(tree, seed);
    let mut renames = HashMap::new();
    let mut count = 0;
    for d in r.decls.iter().filter(|d| !d.keep) {
        let name = fresh.next("v_");
        for &t in std::iter::once(&d.name).chain(&d.uses) {
            renames.insert(t, name.clone());
        }
        count += 1;
    }
    if count == 0 {
        return (tree.source().to_owned(), 0);
    }
    (Renderer::with_renames(tree, renames).file(), count)
}

pub(crate) fn renameable(tree: &SyntaxTree) -> bool {
    let mut r = Resolver {
        tree,
        decls: vec![],
        scopes: vec![Scope::Names(HashMap::new())],
        frozen: 0,
    };
    r.walk(tree.root());
    r.decls.iter().any(|d| !d.keep)
}
