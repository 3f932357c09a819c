use std::fmt;

use serde::{Deserialize, Serialize};
use sect_java::{NodeId, NodeKind, SyntaxTree};

use crate::EquivError;

/// Parameter and return types admitted by the interpreter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum JType {
    #[serde(rename = "int")]
    Int,
    #[serde(rename = "long")]
    Long,
    #[serde(rename = "boolean")]
    Boolean,
    #[serde(rename = "String")]
    Str,
    #[serde(rename = "int[]")]
    IntArray,
}

impl JType {
    pub fn parse(text: &str) -> Option<JType> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        Some(match compact.as_str() {
            "int" => JType::Int,
            "long" => JType::Long,
            "boolean" => JType::Boolean,
            "String" | "java.lang.String" => JType::Str,
            "int[]" => JType::IntArray,
            _ => return None,
        })
    }

    pub fn as_str(self) -> &'static str {
        match self {
            JType::Int => "int",
            JType::Long => "long",
            JType::Boolean => "boolean",
            JType::Str => "String",
            JType::IntArray => "int[]",
        }
    }
}

impl fmt::Display for JType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Param {
    pub name: String,
    pub ty: JType,
}

/// A static method under test: signature plus body text (without braces).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnippetSpec {
    pub params: Vec<Param>,
    pub ret: JType,
    pub body: String,
}

impl SnippetSpec {
    /// Builds a spec from a signature like `int f(int a, String s)` and a body.
    pub fn new(signature: &str, body: &str) -> Result<SnippetSpec, EquivError> {
        Self::from_method(&format!("{signature} {{{body}}}"))
    }

    /// Parses a single method declaration.
    pub fn from_method(method: &str) -> Result<SnippetSpec, EquivError> {
        Self::from_source(&format!("class Snippet {{\n{method}\n}}\n"))
    }

    /// Reads the first method of a compilation unit.
    pub fn from_source(source: &str) -> Result<SnippetSpec, EquivError> {
        let tree = sect_java::parse(source);
        if tree.error_count() > 0 {
            return Err(EquivError::Syntax(tree.error_count()));
        }
        let m = first_method(&tree).ok_or(EquivError::NoMethod)?;
        Self::from_decl(&tree, m)
    }

    /// Every method of a compilation unit with a body, in source order,
    /// paired with its name. Methods outside the typed subset yield errors.
    pub fn methods(source: &str) -> Vec<(String, Result<SnippetSpec, EquivError>)> {
        let tree = sect_java::parse(source);
        tree.descendants(tree.root())
            .filter(|&n| tree.kind(n) == NodeKind::MethodDecl && tree.child_of_kind(n, NodeKind::Block).is_some())
            .map(|m| {
                let name = sect_java::ast::name(&tree, m).unwrap_or_default().to_owned();
                let spec = if sect_java::ast::contains_error(&tree, m) {
                    Err(EquivError::Syntax(1))
                } else {
                    Self::from_decl(&tree, m)
                };
                (name, spec)
            })
            .collect()
    }

    fn from_decl(tree: &SyntaxTree, m: NodeId) -> Result<SnippetSpec, EquivError> {
        let ret_node = tree.child_of_kind(m, NodeKind::Type).ok_or(EquivError::NoMethod)?;
        let ret = type_of(tree, ret_node)?;
        let list = tree.child_of_kind(m, NodeKind::ParamList).ok_or(EquivError::NoMethod)?;
        let mut params = Vec::new();
        for p in tree.children_of_kind(list, NodeKind::Param) {
            let ty = tree.child_of_kind(p, NodeKind::Type).ok_or(EquivError::NoMethod)?;
            if tree.has_child_token(p, "...") {
                return Err(EquivError::UnsupportedType(format!("{}...", tree.text(ty))));
            }
            let name = sect_java::ast::name(tree, p).ok_or(EquivError::NoMethod)?;
            params.push(Param {
                name: name.to_owned(),
                ty: type_of(tree, ty)?,
            });
        }
        let block = tree.child_of_kind(m, NodeKind::Block).ok_or(EquivError::NoMethod)?;
        let text = tree.text(block);
        let body = text[1..text.len() - 1].to_owned();
        Ok(SnippetSpec { params, ret, body })
    }

    /// `int f(int a, String s)`.
    pub fn signature(&self) -> String {
        let ps: Vec<String> = self.params.iter().map(|p| format!("{} {}", p.ty, p.name)).collect();
        format!("{} f({})", self.ret, ps.join(", "))
    }

    /// Parameter and return types only; names may differ between variants.
    pub fn type_signature(&self) -> String {
        let ps: Vec<&str> = self.params.iter().map(|p| p.ty.as_str()).collect();
        format!("({}) -> {}", ps.join(", "), self.ret)
    }

    /// A compilable class holding the method.
    pub fn to_source(&self) -> String {
        format!("class Snippet {{\n    static {} {{{}}}\n}}\n", self.signature(), self.body)
    }
}

pub(crate) fn first_method(tree: &SyntaxTree) -> Option<NodeId> {
    tree.descendants(tree.root()).find(|&n| tree.kind(n) == NodeKind::MethodDecl)
}

fn type_of(tree: &SyntaxTree, ty: NodeId) -> Result<JType, EquivError> {
    let text = tree.text(ty);
    JType::parse(text).ok_or_else(|| EquivError::UnsupportedType(text.to_owned()))
}
