use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sect_equiv::{
    differential_test, draw_args, evaluate, EquivError, ExecResult, JType, SnippetSpec, Suite, Trap, Value,
    DEFAULT_STEP_LIMIT,
};

fn run(sig: &str, body: &str, args: &[Value]) -> ExecResult {
    evaluate(&SnippetSpec::new(sig, body).unwrap(), args, DEFAULT_STEP_LIMIT).unwrap()
}

fn int(body: &str) -> ExecResult {
    run("int f()", body, &[])
}

fn val(v: Value) -> ExecResult {
    ExecResult::value(v)
}

#[test]
fn documented_examples() {
    assert_eq!(
        run("int f(int a, int b)", "return a + b;", &[Value::Int(2), Value::Int(3)]),
        val(Value::Int(5))
    );
    assert_eq!(int("return 2147483647 + 1;"), val(Value::Int(-2147483648)));
    assert_eq!(
        run("int f(int a, int b)", "return a / b;", &[Value::Int(1), Value::Int(0)]),
        ExecResult::trap(Trap::DivByZero)
    );
}

#[test]
fn integer_semantics_follow_java() {
    let cases: [(&str, i32); 12] = [
        ("return -2147483648 / -1;", i32::MIN),
        ("return -2147483648 % -1;", 0),
        ("return -7 / 2;", -3),
        ("return -7 % 2;", -1),
        ("return 7 % -2;", 1),
        ("return 1 << 33;", 2),
        ("return -1 >>> 28;", 15),
        ("return -16 >> 2;", -4),
        ("return (int) 3000000000L;", -1294967296),
        ("return 'a' + 1;", 98),
        ("char c = 'a'; c += 1; return c;", 98),
        ("int x = 5; x += 3.5 > 0 ? 1 : 0; return x;", 0),
    ];
    for (body, want) in &cases[..11] {
        assert_eq!(int(body), val(Value::Int(*want)), "{body}");
    }
    // Floating point is outside the subset.
    assert_eq!(int(cases[11].0), ExecResult::trap(Trap::Unsupported));
    assert_eq!(
        run("long f()", "return 3000000000L * 4;", &[]),
        val(Value::Long(12000000000))
    );
    assert_eq!(
        run("long f()", "int x = 2147483647; return x + 1L;", &[]),
        val(Value::Long(2147483648))
    );
    assert_eq!(
        run("long f()", "long x = 1; return x << 65;", &[]),
        val(Value::Long(2))
    );
}

#[test]
fn string_conversion_and_methods() {
    let s = |body: &str| run("String f()", body, &[]);
    assert_eq!(s("return \"\" + 'a' + 1;"), val(Value::Str("a1".into())));
    assert_eq!(s("return 1 + 2 + \"x\";"), val(Value::Str("3x".into())));
    assert_eq!(s("return \"x\" + 1 + 2;"), val(Value::Str("x12".into())));
    assert_eq!(s("return \"b\" + true + -5L;"), val(Value::Str("btrue-5".into())));
    assert_eq!(s("String t = \"ab\"; t += 'c'; return t;"), val(Value::Str("abc".into())));
    let b = |body: &str, arg: &str| run("boolean f(String s)", body, &[Value::Str(arg.into())]);
    assert_eq!(b("return s.equals(\"open\");", "open"), val(Value::Boolean(true)));
    assert_eq!(b("return \"open\".equals(s);", "OPEN"), val(Value::Boolean(false)));
    assert_eq!(b("return s.equalsIgnoreCase(\"open\");", "OPEN"), val(Value::Boolean(true)));
    assert_eq!(
        run("int f(String s)", "return s.charAt(3);", &[Value::Str("ab".into())]),
        ExecResult::trap(Trap::IndexOutOfBounds)
    );
    // Reference comparison of strings depends on interning; not modelled.
    assert_eq!(b("return s == \"open\";", "open"), ExecResult::trap(Trap::Unsupported));
}

#[test]
fn control_flow() {
    let f = |body: &str, x: i32| run("int f(int x)", body, &[Value::Int(x)]);
    let fallthrough = "int r = 0; switch (x) { case 1: r += 1; case 2: r += 10; break; default: r = -1; } return r;";
    assert_eq!(f(fallthrough, 1), val(Value::Int(11)));
    assert_eq!(f(fallthrough, 2), val(Value::Int(10)));
    assert_eq!(f(fallthrough, 3), val(Value::Int(-1)));
    let labelled = "int n = 0; outer: for (int i = 0; i < 4; i++) { for (int j = 0; j < 4; j++) { if (j == x) continue outer; if (i == 3) break outer; n++; } } return n;";
    assert_eq!(f(labelled, 2), val(Value::Int(6)));
    assert_eq!(f(labelled, 9), val(Value::Int(12)));
    let dowhile = "int n = 0; do { n++; } while (n < x); return n;";
    assert_eq!(f(dowhile, -5), val(Value::Int(1)));
    assert_eq!(f(dowhile, 4), val(Value::Int(4)));
    let strings = "String s = x > 0 ? \"open\" : \"closed\"; switch (s) { case \"open\": return 1; case \"closed\": return 2; } return 0;";
    assert_eq!(f(strings, 1), val(Value::Int(1)));
    assert_eq!(f(strings, -1), val(Value::Int(2)));
}

#[test]
fn arrays_alias_and_trap() {
    let xs = Value::IntArray(vec![1, 2, 3]);
    let f = |body: &str| run("int f(int[] xs)", body, std::slice::from_ref(&xs));
    assert_eq!(f("int[] ys = xs; ys[0] = 9; return xs[0];"), val(Value::Int(9)));
    assert_eq!(f("return xs[3];"), ExecResult::trap(Trap::IndexOutOfBounds));
    assert_eq!(f("return xs[-1];"), ExecResult::trap(Trap::IndexOutOfBounds));
    // The right-hand side runs before the store is bounds-checked.
    assert_eq!(f("int i = 0; xs[5] = 1 / i; return 0;"), ExecResult::trap(Trap::DivByZero));
    // A compound assignment reads the element first.
    assert_eq!(f("int i = 0; xs[5] += 1 / i; return 0;"), ExecResult::trap(Trap::IndexOutOfBounds));
    assert_eq!(f("int[] a = new int[xs.length + 1]; a[3] = xs[2]; return a[3] + a.length;"), val(Value::Int(7)));
    assert_eq!(f("int[] a = {4, 5}; int s = 0; for (int v : a) s += v; return s;"), val(Value::Int(9)));
    assert_eq!(
        run("int[] f(int[] xs)", "xs[1]++; return xs;", std::slice::from_ref(&xs)),
        val(Value::IntArray(vec![1, 3, 3]))
    );
}

#[test]
fn step_limit_and_unsupported() {
    assert_eq!(int("while (true) { } "), ExecResult::trap(Trap::StepLimit));
    assert_eq!(int("int x = 0; for (;;) x++;"), ExecResult::trap(Trap::StepLimit));
    assert_eq!(int("Object o = new Object(); return 1;"), ExecResult::trap(Trap::Unsupported));
    assert_eq!(int("return g();"), ExecResult::trap(Trap::Unsupported));
    assert_eq!(int("int x; return x;"), ExecResult::trap(Trap::Unsupported));
    assert_eq!(int("throw new RuntimeException();"), ExecResult::trap(Trap::Unsupported));
    assert_eq!(int("int x = 1;"), ExecResult::trap(Trap::Unsupported));
    let spec = SnippetSpec::new("int f()", "int s = 0; for (int i = 0; i < 1000; i++) s += i; return s;").unwrap();
    assert_eq!(evaluate(&spec, &[], 100).unwrap(), ExecResult::trap(Trap::StepLimit));
    assert_eq!(evaluate(&spec, &[], DEFAULT_STEP_LIMIT).unwrap(), val(Value::Int(499500)));
}

#[test]
fn rejects_ill_typed_arguments() {
    let spec = SnippetSpec::new("int f(int a)", "return a;").unwrap();
    assert_eq!(evaluate(&spec, &[Value::Long(1)], 10), Err(EquivError::BadArguments));
    assert_eq!(evaluate(&spec, &[], 10), Err(EquivError::BadArguments));
}

#[test]
fn exec_result_json_shape() {
    let v = serde_json::to_value(val(Value::Int(5))).unwrap();
    assert_eq!(v, serde_json::json!({"status": "Value", "value": {"int": 5}}));
    let t = serde_json::to_value(ExecResult::trap(Trap::DivByZero)).unwrap();
    assert_eq!(t, serde_json::json!({"status": "Trap", "trap": "DivByZero"}));
}

#[test]
fn identical_snippets_pass() {
    let s = SnippetSpec::new("int f(int x, String s, int[] xs)", "return x + s.length() + xs.length;").unwrap();
    let rep = differential_test(&s, &s, 100, 7).unwrap();
    assert_eq!((rep.passed, rep.failed, rep.skipped), (100, 0, 0));
    assert!(rep.first_failure.is_none());
}

#[test]
fn forced_mismatch_fails_on_first_trial() {
    let a = SnippetSpec::new("int f(int x)", "return x + 1;").unwrap();
    let b = SnippetSpec::new("int f(int x)", "return x + 2;").unwrap();
    let rep = differential_test(&a, &b, 10, 7).unwrap();
    assert_eq!(rep.failed, 10);
    assert_eq!(rep.first_failure.unwrap().trial, 0);
}

#[test]
fn unsupported_trials_are_skipped() {
    let a = SnippetSpec::new("int f(int x)", "return x;").unwrap();
    let b = SnippetSpec::new("int f(int x)", "return g(x);").unwrap();
    let rep = differential_test(&a, &b, 10, 7).unwrap();
    assert_eq!((rep.passed, rep.failed, rep.skipped), (0, 0, 10));
}

#[test]
fn signature_checks() {
    let a = SnippetSpec::new("int f(int x)", "return x;").unwrap();
    let b = SnippetSpec::new("int f(long x)", "return 0;").unwrap();
    assert!(matches!(differential_test(&a, &b, 10, 7), Err(EquivError::SignatureMismatch(..))));
    assert_eq!(differential_test(&a, &a, 0, 7), Err(EquivError::NoTrials));
    // Parameter names may differ.
    let c = SnippetSpec::new("int f(int y)", "return y;").unwrap();
    assert!(differential_test(&a, &c, 5, 1).unwrap().pass());
}

#[test]
fn argument_draws_cover_the_documented_domain() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut edges, mut lens) = (std::collections::HashSet::new(), std::collections::HashSet::new());
    for _ in 0..2000 {
        let args = draw_args(&[JType::Int, JType::IntArray, JType::Str], &mut rng);
        let Value::Int(x) = args[0] else { panic!() };
        assert!((-100..=100).contains(&x) || x == i32::MIN || x == i32::MAX);
        if x == i32::MIN || x == i32::MAX {
            edges.insert(x);
        }
        let Value::IntArray(xs) = &args[1] else { panic!() };
        lens.insert(xs.len());
        let Value::Str(s) = &args[2] else { panic!() };
        assert!(sect_equiv::STRING_POOL.contains(&s.as_str()));
    }
    assert_eq!(edges.len(), 2);
    assert_eq!(lens, (0..=8).collect());
}

/// Curated snippets with one drawn argument vector each.
fn curated() -> Vec<SnippetSpec> {
    Suite::builtin()
        .snippets
        .iter()
        .map(|s| SnippetSpec::from_method(&s.method).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn raising_the_step_limit_never_turns_a_value_into_a_trap(
        idx in 0usize..1000, seed in any::<u64>(), low in 1u64..400, extra in 0u64..5000
    ) {
        let specs = curated();
        let spec = &specs[idx % specs.len()];
        let types: Vec<JType> = spec.params.iter().map(|p| p.ty).collect();
        let args = draw_args(&types, &mut ChaCha8Rng::seed_from_u64(seed));
        let small = evaluate(spec, &args, low).unwrap();
        let large = evaluate(spec, &args, low + extra).unwrap();
        if small.value.is_some() {
            prop_assert_eq!(&small, &large);
        }
        // Deterministic.
        prop_assert_eq!(&large, &evaluate(spec, &args, low + extra).unwrap());
    }

    #[test]
    fn a_snippet_is_equivalent_to_itself(idx in 0usize..1000, seed in any::<u64>()) {
        let specs = curated();
        let spec = &specs[idx % specs.len()];
        let rep = differential_test(spec, spec, 20, seed).unwrap();
        prop_assert!(rep.pass());
        prop_assert_eq!(rep.passed + rep.skipped, 20);
    }
}
