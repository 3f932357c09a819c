use std::path::{Path, PathBuf};

use sect_java::{extract_features, parse, print, NodeKind, SyntaxTree};

fn corpus_files() -> Vec<PathBuf> {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    let mut out = Vec::new();
    for split in ["train", "test"] {
        let mut files: Vec<_> = std::fs::read_dir(root.join(split))
            .unwrap()
            .map(|e| e.unwrap().path())
            .filter(|p| p.extension().is_some_and(|e| e == "java"))
            .collect();
        files.sort();
        out.extend(files);
    }
    out
}

fn first_error(tree: &SyntaxTree) -> Option<String> {
    tree.descendants(tree.root())
        .find(|&n| tree.kind(n) == NodeKind::Error)
        .map(|n| {
            let p = tree.parent(n).unwrap();
            let start = tree.span(n).start;
            let line = tree.source()[..start].lines().count();
            format!("line {line} in {:?}: {:?}", tree.kind(p), tree.text(p))
        })
}

#[test]
fn corpus_round_trips_without_errors() {
    let files = corpus_files();
    assert!(files.len() >= 50);
    for path in files {
        let text = std::fs::read_to_string(&path).unwrap();
        let tree = parse(&text);
        if let Some(e) = first_error(&tree) {
            panic!("{}: {e}", path.display());
        }
        let printed = print(&tree);
        assert_eq!(printed, text, "{}", path.display());
        assert!(parse(&printed).structurally_eq(&tree));
    }
}

#[test]
fn span_nesting_invariant() {
    for path in corpus_files().into_iter().take(20) {
        let text = std::fs::read_to_string(&path).unwrap();
        let tree = parse(&text);
        for n in tree.descendants(tree.root()) {
            let span = tree.span(n);
            let mut prev_end = span.start;
            for c in tree.child_nodes(n) {
                let cs = tree.span(c);
                if cs.is_empty() {
                    continue;
                }
                assert!(span.start <= cs.start && cs.end <= span.end);
                assert!(prev_end <= cs.start, "siblings overlap");
                prev_end = cs.end;
            }
        }
    }
}

/// nloc from a separate comment-stripping script; complexity counted by
/// hand as bodied callables plus decision points.
#[test]
fn features_match_hand_counts() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus/train");
    let cases: [(&str, u64, u64); 5] = [
        // (file, nloc, cyclomatic complexity)
        ("Matrix.java", 80, 11 + 17),
        ("TrafficLight.java", 58, 8 + 4),
        ("Shapes.java", 73, 11 + 4),
        ("FileStats.java", 62, 7 + 9),
        ("EventBus.java", 50, 5 + 6),
    ];
    for (file, nloc, cc) in cases {
        let text = std::fs::read_to_string(root.join(file)).unwrap();
        let f = extract_features(&parse(&text));
        assert_eq!((f.nloc, f.code_complexity), (nloc, cc), "{file}");
    }
}
