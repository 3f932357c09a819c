//! Every rule preserves behaviour on generated int methods.

use proptest::prelude::*;
use sect_equiv::{differential_test, SnippetSpec};
use sect_java::parse;
use sect_transform::{apply_rule_to, RULES};

fn stmt() -> impl Strategy<Value = String> {
    let var = prop::sample::select(vec!["a", "b", "c"]);
    let n = 0i32..9;
    let leaf = prop_oneof![
        (var.clone(), var.clone(), n.clone()).prop_map(|(x, y, k)| format!("{x} = {y} + {k};")),
        var.clone().prop_map(|x| format!("{x}++;")),
        (var.clone(), var.clone()).prop_map(|(x, y)| format!("{x} += {y};")),
        (var.clone(), n.clone()).prop_map(|(x, k)| format!("{x} = {x} % 10; while ({x} < {k}) {{ {x}++; }}")),
        (var.clone(), n.clone()).prop_map(|(x, k)| format!("{x} = {x} % 10; do {{ {x}--; }} while ({x} > {k});")),
        (var.clone(), n.clone()).prop_map(|(x, k)| format!("for (int i = 0; i < {k}; i++) {{ {x} += i; }}")),
        (var.clone(), var.clone()).prop_map(|(x, y)| format!("c = {x} == {y} ? {x} : {y};")),
        var.clone().prop_map(|x| format!("switch ({x}) {{ case 1: c = 2; break; default: c = 3; }}")),
    ];
    leaf.prop_recursive(2, 12, 3, move |inner| {
        (var.clone(), var.clone(), prop::collection::vec(inner.clone(), 1..3), prop::collection::vec(inner, 0..3))
            .prop_map(|(x, y, t, e)| {
                if e.is_empty() {
                    format!("if ({x} > {y}) {{ {} }}", t.join(" "))
                } else {
                    format!("if ({x} >= {y}) {{ {} }} else {{ {} }}", t.join(" "), e.join(" "))
                }
            })
    })
}

fn method() -> impl Strategy<Value = String> {
    prop::collection::vec(stmt(), 1..6).prop_map(|body| {
        format!(
            "class G {{\n    static int f(int a, int b) {{\n        int c = 0;\n        {}\n        return a + b + c;\n    }}\n}}\n",
            body.join("\n        ")
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rules_preserve_generated_methods(src in method(), seed in any::<u64>()) {
        let tree = parse(&src);
        let original = SnippetSpec::from_source(&src).unwrap();
        for r in RULES {
            let out = apply_rule_to(&r, &tree, seed, "g").unwrap();
            if !out.applied {
                continue;
            }
            let transformed = SnippetSpec::from_source(&out.text).unwrap();
            let report = differential_test(&original, &transformed, 20, seed).unwrap();
            prop_assert!(report.pass(), "rule {}:\n{}\n{:?}", r.id, out.text, report.first_failure);
            prop_assert_eq!(report.skipped, 0);
        }
    }
}
