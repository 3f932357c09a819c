use std::time::Instant;

use sect_equiv::{check_rule, Suite};
use sect_transform::{RuleId, RULES};

#[test]
fn every_rule_passes_its_curated_snippets() {
    let suite = Suite::builtin();
    let start = Instant::now();
    let mut problems = Vec::new();
    for r in RULES {
        let snippets = suite.for_rule(r.id);
        assert!(snippets.len() >= 5, "rule {} has only {} snippets", r.id, snippets.len());
        match check_rule(RuleId::Rule(r.id), &snippets, 100, 7) {
            Ok(rep) => {
                if rep.failed > 0 || rep.skipped > 0 {
                    problems.push(format!("{}: {}", r.name, serde_json::to_string(&rep).unwrap()));
                }
                assert_eq!(rep.trials, 100 * snippets.len());
            }
            Err(e) => problems.push(format!("{}: {e}", r.name)),
        }
    }
    assert!(problems.is_empty(), "{}", problems.join("\n"));
    assert!(start.elapsed().as_secs() < 60);
}

#[test]
fn composed_pipeline_preserves_every_snippet() {
    let suite = Suite::builtin();
    let all: Vec<_> = suite.snippets.iter().collect();
    let rep = check_rule(RuleId::All, &all, 20, 7).unwrap();
    assert_eq!(rep.failed, 0, "{rep:?}");
    assert_eq!(rep.skipped, 0, "{rep:?}");
}

#[test]
fn snippet_names_are_unique_per_rule() {
    let suite = Suite::builtin();
    let mut seen = std::collections::HashSet::new();
    for s in &suite.snippets {
        assert!(seen.insert((s.rule, s.name.clone())), "duplicate {} {}", s.rule, s.name);
    }
}
