//! Every rule, and the composed pipeline, over the bundled corpus: each
//! changed method inside the interpreter subset must behave identically.

use std::path::PathBuf;

use sect_equiv::{check_file_pair, FileReport};
use sect_transform::{apply_all, apply_rule_to, file_seed, RULES};

fn corpus() -> Vec<(String, String)> {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    let mut files = Vec::new();
    for split in ["train", "test"] {
        let mut paths: Vec<_> = std::fs::read_dir(root.join(split)).unwrap().map(|e| e.unwrap().path()).collect();
        paths.sort();
        for p in paths {
            let id = format!("{split}/{}", p.file_name().unwrap().to_string_lossy());
            files.push((id, std::fs::read_to_string(&p).unwrap()));
        }
    }
    files
}

const TRIALS: usize = 20;

#[test]
fn single_rules_preserve_corpus_methods() {
    let files = corpus();
    let trees: Vec<_> = files.iter().map(|(_, s)| sect_java::parse(s)).collect();
    let mut problems = Vec::new();
    for r in RULES {
        let mut total = FileReport::default();
        for ((id, src), tree) in files.iter().zip(&trees) {
            let out = apply_rule_to(&r, tree, file_seed(7, id), id).unwrap();
            if !out.applied {
                continue;
            }
            let rep = check_file_pair(src, &out.text, TRIALS, 7).unwrap_or_else(|e| panic!("{id} rule {}: {e}", r.id));
            if rep.failed > 0 {
                problems.push(format!("rule {} {id}: {:?}", r.id, rep.first_failure));
            }
            total.absorb(rep);
        }
        println!(
            "rule {:>2} {:<20} changed {:>4} tested {:>4} passed {:>6} skipped {:>6}",
            r.id, r.name, total.changed, total.tested, total.passed, total.skipped
        );
        assert!(total.passed > 0, "rule {} was never exercised on the corpus", r.id);
    }
    assert!(problems.is_empty(), "{}", problems.join("\n"));
}

#[test]
fn composed_pipeline_preserves_corpus_methods() {
    let files = corpus();
    let parsed: Vec<_> = files.iter().map(|(id, s)| (id.clone(), sect_java::parse(s))).collect();
    let outs = apply_all(&parsed, 7).unwrap();
    let mut total = FileReport::default();
    for ((id, src), out) in files.iter().zip(&outs) {
        let rep = check_file_pair(src, &out.text, TRIALS, 7).unwrap_or_else(|e| panic!("{id}: {e}"));
        assert_eq!(rep.failed, 0, "{id}: {:?}", rep.first_failure);
        total.absorb(rep);
    }
    println!("ALL: {total:?}");
    assert!(total.tested > 100);
}
