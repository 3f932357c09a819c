//! Semantically equivalent rewrites of Java source.
//!
//! Each of the 23 rules finds its rewrite sites under conservative
//! conditions and re-renders only those sites; everything else is copied
//! byte for byte. [`apply_all`] composes every rule in ascending order of
//! how many files it applies to.

mod analysis;
mod naming;
mod render;
mod rules;
mod types;

use std::fmt;

use serde::{Deserialize, Serialize};
use sect_java::SyntaxTree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Level {
    Naming,
    Statement,
    Expression,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TransformRule {
    pub id: u8,
    pub name: &'static str,
    pub level: Level,
}

const fn rule(id: u8, name: &'static str, level: Level) -> TransformRule {
    TransformRule { id, name, level }
}

pub const RULES: [TransformRule; 23] = [
    rule(1, "RenameVariable", Level::Naming),
    rule(2, "For2While", Level::Statement),
    rule(3, "While2For", Level::Statement),
    rule(4, "Do2While", Level::Statement),
    rule(5, "IfElseIf2IfElse", Level::Statement),
    rule(6, "IfElse2IfElseIf", Level::Statement),
    rule(7, "Switch2If", Level::Statement),
    rule(8, "Unary2Add", Level::Expression),
    rule(9, "Add2Equal", Level::Expression),
    rule(10, "DivideVarDecl", Level::Expression),
    rule(11, "MergeVarDecl", Level::Expression),
    rule(12, "SwapStatement", Level::Statement),
    rule(13, "ModifyConstant", Level::Expression),
    rule(14, "ReverseIf", Level::Statement),
    rule(15, "If2CondExp", Level::Statement),
    rule(16, "ConfExp2If", Level::Statement),
    rule(17, "InfixDividing", Level::Expression),
    rule(18, "DividePrePostFix", Level::Expression),
    rule(19, "DividingComposedIf", Level::Statement),
    rule(20, "LoopIfContinue2Else", Level::Statement),
    rule(21, "SwitchEqualExp", Level::Expression),
    rule(22, "SwitchStringEqual", Level::Expression),
    rule(23, "SwitchRelation", Level::Expression),
];

/// Rules that remove every site they rewrite, so a second application
/// finds nothing. They are re-run on their own output until that holds.
pub const CONSUMING: [u8; 11] = [2, 3, 4, 5, 6, 7, 10, 11, 15, 16, 20];

const MAX_PASSES: usize = 8;

impl TransformRule {
    pub fn by_id(id: u8) -> Option<&'static TransformRule> {
        RULES.get(usize::from(id).checked_sub(1)?)
    }

    pub fn by_name(name: &str) -> Option<&'static TransformRule> {
        RULES.iter().find(|r| r.name.eq_ignore_ascii_case(name))
    }

    pub fn is_consuming(&self) -> bool {
        CONSUMING.contains(&self.id)
    }
}

impl fmt::Display for TransformRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rule {} ({})", self.id, self.name)
    }
}

/// A single rule or the composed pipeline. Serialises as the rule number or
/// the string `"ALL"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    Rule(u8),
    All,
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleId::Rule(id) => write!(f, "{id}"),
            RuleId::All => f.write_str("ALL"),
        }
    }
}

impl std::str::FromStr for RuleId {
    type Err = TransformError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("all") {
            return Ok(RuleId::All);
        }
        if let Ok(id) = s.parse::<u8>() {
            return TransformRule::by_id(id)
                .map(|r| RuleId::Rule(r.id))
                .ok_or(TransformError::UnknownRule(s.to_owned()));
        }
        TransformRule::by_name(s)
            .map(|r| RuleId::Rule(r.id))
            .ok_or_else(|| TransformError::UnknownRule(s.to_owned()))
    }
}

impl Serialize for RuleId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            RuleId::Rule(id) => s.serialize_u8(*id),
            RuleId::All => s.serialize_str("ALL"),
        }
    }
}

impl<'de> Deserialize<'de> for RuleId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u8),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(id) if TransformRule::by_id(id).is_some() => Ok(RuleId::Rule(id)),
            Raw::Num(id) => Err(serde::de::Error::custom(format!("unknown rule {id}"))),
            Raw::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformOutcome {
    pub rule_id: RuleId,
    pub applied: bool,
    pub site_count: usize,
    pub text: String,
    pub seed: u64,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum TransformError {
    #[error("unknown rule {0:?}")]
    UnknownRule(String),
    #[error("rule {rule} produced unparseable output for {file} ({before} error nodes before, {after} after)")]
    InternalRewrite {
        file: String,
        rule: RuleId,
        before: usize,
        after: usize,
    },
    #[error("empty corpus")]
    EmptyCorpus,
}

fn sites(rule: &TransformRule, tree: &SyntaxTree) -> usize {
    if rule.id == 1 {
        return usize::from(naming::renameable(tree));
    }
    rules::rewriter(rule.id, tree, 0).find(tree).count
}

/// True iff the rule has at least one rewrite site in `tree`.
pub fn applicable(rule: &TransformRule, tree: &SyntaxTree) -> bool {
    sites(rule, tree) > 0
}

fn one_pass(rule: &TransformRule, tree: &SyntaxTree, seed: u64) -> (String, usize) {
    if rule.id == 1 {
        return naming::rename_variables(tree, seed);
    }
    let rw = rules::rewriter(rule.id, tree, seed);
    let found = rw.find(tree);
    if found.nodes.is_empty() {
        return (tree.source().to_owned(), 0);
    }
    let f = |r: &render::Renderer<'_>, n| rw.rewrite(r, n);
    (render::Renderer::new(tree, &found.nodes, &f).file(), found.count)
}

/// Applies one rule at every site. Consuming rules are repeated on their own
/// output (a bounded number of times) so that no site survives.
pub fn apply_rule(rule: &TransformRule, tree: &SyntaxTree, seed: u64) -> Result<TransformOutcome, TransformError> {
    apply_rule_to(rule, tree, seed, "<input>")
}

/// [`apply_rule`] with a file id for error reports.
pub fn apply_rule_to(
    rule: &TransformRule,
    tree: &SyntaxTree,
    seed: u64,
    file: &str,
) -> Result<TransformOutcome, TransformError> {
    let before = tree.error_count();
    let passes = if rule.is_consuming() { MAX_PASSES } else { 1 };
    let mut total = 0;
    let mut current: Option<SyntaxTree> = None;
    for pass in 0..passes {
        let t = current.as_ref().unwrap_or(tree);
        let (text, n) = one_pass(rule, t, seed.wrapping_add(pass as u64));
        if n == 0 {
            break;
        }
        total += n;
        let next = sect_java::parse(&text);
        if next.error_count() > before {
            return Err(TransformError::InternalRewrite {
                file: file.to_owned(),
                rule: RuleId::Rule(rule.id),
                before,
                after: next.error_count(),
            });
        }
        current = Some(next);
    }
    let text = match current {
        Some(t) if total > 0 => t.source().to_owned(),
        _ => tree.source().to_owned(),
    };
    Ok(TransformOutcome {
        rule_id: RuleId::Rule(rule.id),
        applied: total > 0,
        site_count: total,
        text,
        seed,
    })
}

/// Per-file seed derived from a run seed and a file id (FNV-1a over the id).
pub fn file_seed(seed: u64, id: &str) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in id.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x100000001b3);
    }
    h ^ seed
}

/// Number of files each rule applies to, indexed by rule id − 1.
pub fn applicable_counts(trees: &[&SyntaxTree]) -> [usize; 23] {
    let mut counts = [0; 23];
    for (i, r) in RULES.iter().enumerate() {
        counts[i] = trees.iter().filter(|t| applicable(r, t)).count();
    }
    counts
}

/// Rule ids in ascending order of applicable-file count, ties by id.
pub fn composition_order(counts: &[usize; 23]) -> Vec<u8> {
    let mut ids: Vec<u8> = RULES.iter().map(|r| r.id).collect();
    ids.sort_by_key(|&id| (counts[usize::from(id) - 1], id));
    ids
}

/// Applies `order` rule by rule to one file, each rule seeing the previous
/// rule's output.
pub fn apply_sequence(order: &[u8], tree: &SyntaxTree, seed: u64, file: &str) -> Result<TransformOutcome, TransformError> {
    let mut text = tree.source().to_owned();
    let mut total = 0;
    let mut t = tree.clone();
    for &id in order {
        let rule = TransformRule::by_id(id).ok_or_else(|| TransformError::UnknownRule(id.to_string()))?;
        let out = apply_rule_to(rule, &t, seed, file)?;
        if out.applied {
            total += out.site_count;
            text = out.text;
            t = sect_java::parse(&text);
        }
    }
    Ok(TransformOutcome {
        rule_id: RuleId::All,
        applied: total > 0,
        site_count: total,
        text,
        seed,
    })
}

/// The composed pipeline over a corpus of `(id, tree)` pairs. Each file is
/// seeded with [`file_seed`].
pub fn apply_all(corpus: &[(String, SyntaxTree)], seed: u64) -> Result<Vec<TransformOutcome>, TransformError> {
    if corpus.is_empty() {
        return Err(TransformError::EmptyCorpus);
    }
    let trees: Vec<&SyntaxTree> = corpus.iter().map(|(_, t)| t).collect();
    let order = composition_order(&applicable_counts(&trees));
    corpus
        .iter()
        .map(|(id, t)| apply_sequence(&order, t, file_seed(seed, id), id))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_is_indexed_by_id() {
        for (i, r) in RULES.iter().enumerate() {
            assert_eq!(usize::from(r.id), i + 1);
            assert_eq!(TransformRule::by_id(r.id), Some(r));
        }
        assert_eq!(TransformRule::by_id(0), None);
        assert_eq!(TransformRule::by_id(24), None);
    }

    #[test]
    fn rule_id_round_trips_through_json() {
        assert_eq!(serde_json::to_string(&RuleId::Rule(7)).unwrap(), "7");
        assert_eq!(serde_json::to_string(&RuleId::All).unwrap(), "\"ALL\"");
        assert_eq!(serde_json::from_str::<RuleId>("\"ALL\"").unwrap(), RuleId::All);
        assert_eq!(serde_json::from_str::<RuleId>("23").unwrap(), RuleId::Rule(23));
        assert!(serde_json::from_str::<RuleId>("24").is_err());
        assert_eq!("Do2While".parse::<RuleId>().unwrap(), RuleId::Rule(4));
    }

    #[test]
    fn order_ascends_with_ties_by_id() {
        let mut counts = [0; 23];
        counts[3] = 1;
        counts[0] = 3;
        let order = composition_order(&counts);
        let active: Vec<u8> = order.iter().copied().filter(|&id| counts[usize::from(id) - 1] > 0).collect();
        assert_eq!(active, vec![4, 1]);

        let mut counts = [0; 23];
        counts[20] = 5;
        counts[22] = 5;
        let order = composition_order(&counts);
        let p21 = order.iter().position(|&id| id == 21).unwrap();
        let p23 = order.iter().position(|&id| id == 23).unwrap();
        assert!(p21 < p23);
    }
}
