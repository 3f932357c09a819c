//! End-to-end behaviour of the `sect-audit` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn audit(args: &[&str]) -> Output {
    audit_env(args, &[])
}

fn audit_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_sect-audit"));
    cmd.args(args).current_dir(root()).env_remove("SECT_AUDIT_JOBS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn read(p: &Path) -> String {
    std::fs::read_to_string(p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn pipeline(out: &Path, seed: &str, extra: &[&str]) -> Output {
    let mut args = vec![
        "pipeline", "--train", "corpus/train", "--test", "corpus/test", "--rule", "1", "--seed", seed,
        "--bootstrap", "100", "--out", s(out),
    ];
    args.extend_from_slice(extra);
    audit(&args)
}

#[test]
fn transform_writes_files_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let o = audit(&["transform", "--input", "corpus/test", "--output", s(dir.path()), "--rule", "2", "--seed", "3"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let manifest = read(&dir.path().join("manifest.jsonl"));
    let lines: Vec<&str> = manifest.lines().collect();
    assert_eq!(lines.len(), std::fs::read_dir(root().join("corpus/test")).unwrap().count());
    for l in &lines {
        assert!(l.starts_with("{\"id\":"), "{l}");
        let keys: Vec<&str> = ["\"id\"", "\"rule_id\"", "\"applied\"", "\"site_count\"", "\"seed\""]
            .into_iter()
            .filter(|k| l.contains(k))
            .collect();
        assert_eq!(keys.len(), 5, "{l}");
        let pos: Vec<usize> = keys.iter().map(|k| l.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]), "key order in {l}");
        let v: Value = serde_json::from_str(l).unwrap();
        assert_eq!(v["rule_id"], 2);
        let id = v["id"].as_str().unwrap();
        let before = read(&root().join("corpus/test").join(id));
        let after = read(&dir.path().join(id));
        assert_eq!(v["applied"].as_bool().unwrap(), before != after, "{id}");
    }
    assert!(manifest.contains("\"applied\":true"));
}

#[test]
fn config_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = s(dir.path());
    let bad_rule = audit(&["transform", "--input", "corpus/test", "--output", out, "--rule", "99"]);
    assert_eq!(code(&bad_rule), 2);
    assert!(stderr(&bad_rule).contains("config error"));
    assert_eq!(code(&audit(&["transform", "--input", "no/such/dir", "--output", out, "--rule", "1"])), 2);
    assert_eq!(code(&audit(&["pipeline", "--train", "corpus/train"])), 2);
    assert_eq!(code(&pipeline(dir.path(), "1", &["--k", "0"])), 2);
    assert_eq!(code(&pipeline(dir.path(), "1", &["--provider", "remote"])), 2);
    let remote = pipeline(dir.path(), "1", &["--provider", "remote", "--endpoint", "http://127.0.0.1:9"]);
    assert_eq!(code(&remote), 2);
    assert!(stderr(&remote).contains("--transformed-endpoint"));
    assert_eq!(code(&audit(&["equivcheck", "--rule", "0"])), 2);
    assert_eq!(code(&audit_env(&["features", "--input", "corpus/test"], &[("SECT_AUDIT_JOBS", "0")])), 2);
    assert_eq!(code(&audit_env(&["features", "--input", "corpus/test"], &[("SECT_AUDIT_JOBS", "many")])), 2);
}

#[test]
fn no_applicable_members_is_a_stage_error() {
    let dir = tempfile::tempdir().unwrap();
    let train = dir.path().join("train");
    let test = dir.path().join("test");
    let body: String = (0..60).map(|i| format!("        int v{i} = {i};\n")).collect();
    let src = format!("class Plain {{\n    int f() {{\n{body}        return 0;\n    }}\n}}\n");
    for d in [&train, &test] {
        std::fs::create_dir_all(d).unwrap();
        std::fs::write(d.join("Plain.java"), &src).unwrap();
    }
    let out = dir.path().join("out");
    let o = audit(&["pipeline", "--train", s(&train), "--test", s(&test), "--rule", "4", "--out", s(&out)]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("no applicable members for rule 4"), "{}", stderr(&o));
    // Artifacts written before the failure are kept.
    assert!(out.join("features.jsonl").exists());
    assert!(out.join("rule-4/transform.jsonl").exists());
    assert!(!out.join("manifest.json").exists());
}

#[test]
fn pipeline_is_reproducible_and_seed_sensitive() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let c = tempfile::tempdir().unwrap();
    assert_eq!(code(&pipeline(a.path(), "4", &[])), 0);
    let jobs = audit_env(
        &["pipeline", "--train", "corpus/train", "--test", "corpus/test", "--rule", "1", "--seed", "4", "--bootstrap", "100", "--out", s(b.path())],
        &[("SECT_AUDIT_JOBS", "3")],
    );
    assert_eq!(code(&jobs), 0, "{}", stderr(&jobs));
    assert_eq!(code(&pipeline(c.path(), "5", &[])), 0);
    let ma = read(&a.path().join("manifest.json"));
    assert_eq!(ma, read(&b.path().join("manifest.json")));
    let (va, vc): (Value, Value) = (serde_json::from_str(&ma).unwrap(), serde_json::from_str(&read(&c.path().join("manifest.json"))).unwrap());
    let paths = |v: &Value| v["artifacts"].as_array().unwrap().iter().map(|a| a["path"].clone()).collect::<Vec<_>>();
    let digests = |v: &Value| v["artifacts"].as_array().unwrap().iter().map(|a| a["sha256"].clone()).collect::<Vec<_>>();
    assert_eq!(paths(&va), paths(&vc));
    assert_ne!(digests(&va), digests(&vc));
    for f in ["eval.original.jsonl", "eval.transformed.jsonl"] {
        assert_eq!(read(&a.path().join("rule-1").join(f)).lines().count(), 3);
    }
    let ate: Value = serde_json::from_str(&read(&a.path().join("rule-1/ate.json"))).unwrap();
    for m in ["LOSS", "MIN_K", "ZLIB"] {
        let refs = &ate["outcomes"][m]["refutations"];
        assert!(["R1", "R2", "R3", "R4"].iter().all(|r| refs[r].is_object()), "{m}");
    }
}

#[test]
fn stages_run_standalone_on_prior_outputs() {
    let p = tempfile::tempdir().unwrap();
    assert_eq!(code(&pipeline(p.path(), "2", &[])), 0);
    let w = tempfile::tempdir().unwrap();
    let f = |name: &str| w.path().join(name);
    let ok = |o: Output| assert_eq!(code(&o), 0, "{}", stderr(&o));
    ok(audit(&["transform", "--input", "corpus/train", "--output", s(&f("tx")), "--rule", "1", "--seed", "2"]));
    ok(audit(&["dataset", "--train", "corpus/train", "--test", "corpus/test", "--rule", "1", "--seed", "2", "--output", s(&f("ds.json"))]));
    ok(audit(&["score", "--dataset", s(&f("ds.json")), "--train-corpus", "corpus/train", "--output", s(&f("s0.jsonl"))]));
    ok(audit(&["score", "--dataset", s(&f("ds.json")), "--train-corpus", s(&f("tx")), "--output", s(&f("s1.jsonl"))]));
    ok(audit(&["evaluate", "--scores", s(&f("s0.jsonl")), "--bootstrap", "100", "--seed", "2", "--output", s(&f("e0.jsonl"))]));
    ok(audit(&[
        "causal", "--dataset", s(&f("ds.json")), "--original-scores", s(&f("s0.jsonl")), "--transformed-scores", s(&f("s1.jsonl")),
        "--frame-output", s(&f("frame.jsonl")), "--seed", "2", "--output", s(&f("ate.json")),
    ]));
    ok(audit(&["causal", "--frame", s(&f("frame.jsonl")), "--rule", "1", "--seed", "2", "--output", s(&f("ate2.json"))]));
    let r = p.path().join("rule-1");
    assert_eq!(read(&f("tx/manifest.jsonl")), read(&r.join("transform.jsonl")));
    assert_eq!(read(&f("ds.json")), read(&r.join("dataset.json")));
    assert_eq!(read(&f("s0.jsonl")), read(&r.join("scores.original.jsonl")));
    assert_eq!(read(&f("s1.jsonl")), read(&r.join("scores.transformed.jsonl")));
    assert_eq!(read(&f("e0.jsonl")), read(&r.join("eval.original.jsonl")));
    assert_eq!(read(&f("frame.jsonl")), read(&r.join("frame.jsonl")));
    assert_eq!(read(&f("ate.json")), read(&r.join("ate.json")));
    assert_eq!(read(&f("ate2.json")), read(&r.join("ate.json")));
}

#[test]
fn equivcheck_suite_report() {
    let o = audit(&["equivcheck", "--rule", "2", "--trials", "20"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let text = String::from_utf8(o.stdout).unwrap();
    let keys = ["rule_id", "snippets", "trials", "passed", "failed", "skipped", "first_failure"];
    let pos: Vec<usize> = keys.iter().map(|k| text.find(&format!("\"{k}\"")).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{text}");
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["rule_id"], 2);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["first_failure"], Value::Null);
    assert_eq!(v["trials"].as_u64().unwrap(), 20 * v["snippets"].as_u64().unwrap());
}

#[test]
fn equivcheck_reports_broken_suite_snippet() {
    let dir = tempfile::tempdir().unwrap();
    let suite = dir.path().join("s.toml");
    std::fs::write(&suite, "[[snippet]]\nrule = 8\nname = \"x\"\nmethod = \"int f(int a) { return a; }\"\n").unwrap();
    let o = audit(&["equivcheck", "--rule", "8", "--suite", s(&suite)]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("rule does not apply"), "{}", stderr(&o));
}

#[test]
fn equivcheck_directory_pairs() {
    let dir = tempfile::tempdir().unwrap();
    let tx = dir.path().join("tx");
    assert_eq!(code(&audit(&["transform", "--input", "corpus/test", "--output", s(&tx), "--rule", "ALL", "--seed", "1"])), 0);
    let o = audit(&["equivcheck", "--original", "corpus/test", "--transformed", s(&tx), "--trials", "5"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["failed"], 0);
    assert!(v["tested"].as_u64().unwrap() > 0);

    let a = dir.path().join("a");
    let b = dir.path().join("b");
    std::fs::create_dir_all(&a).unwrap();
    std::fs::create_dir_all(&b).unwrap();
    std::fs::write(a.join("M.java"), "class M { static int f(int x) { return x + 1; } }").unwrap();
    std::fs::write(b.join("M.java"), "class M { static int f(int x) { return x + 2; } }").unwrap();
    let bad = audit(&["equivcheck", "--original", s(&a), "--transformed", s(&b), "--trials", "5"]);
    assert_eq!(code(&bad), 3);
    let v: Value = serde_json::from_slice(&bad.stdout).unwrap();
    assert_eq!(v["first_failure"]["method"], "f");
}

#[test]
fn features_one_line_per_file() {
    let o = audit(&["features", "--input", "corpus/test"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().count(), std::fs::read_dir(root().join("corpus/test")).unwrap().count());
    let v: Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    for k in ["id", "nloc", "token_count", "ast_levels", "ast_nodes", "identifier_count", "ast_error_count", "code_complexity"] {
        assert!(v.get(k).is_some(), "{k}");
    }
}
