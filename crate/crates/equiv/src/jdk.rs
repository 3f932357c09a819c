//! Optional cross-check against a real JVM (`javac` and `java` on `PATH`).
//!
//! The snippet is compiled into a driver class that runs every argument
//! vector and prints one line per trial. Exceptions other than the two
//! modelled traps come back as `Unsupported`, so they are skipped just like
//! interpreter gaps.

use std::fmt::Write as _;
use std::path::Path;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::harness::{draw_args, DiffReport, Failure};
use crate::snippet::{JType, SnippetSpec};
use crate::{EquivError, ExecResult, Trap, Value};

const TIMEOUT: Duration = Duration::from_secs(120);

#[derive(Debug, thiserror::Error)]
pub enum JdkError {
    #[error("javac/java not found on PATH")]
    Missing,
    #[error("javac failed:\n{0}")]
    Compile(String),
    #[error("java run failed or timed out: {0}")]
    Run(String),
    #[error("unexpected driver output line {0:?}")]
    Output(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Spec(#[from] EquivError),
}

/// True when both `javac` and `java` can be launched.
pub fn available() -> bool {
    ["javac", "java"].iter().all(|tool| {
        Command::new(tool)
            .arg("-version")
            .stdout(Stdio::null())
            .stderr(Stdio::null())
            .status()
            .is_ok_and(|s| s.success())
    })
}

/// Java source of the driver class running `spec` on every vector in `calls`.
pub fn driver_source(spec: &SnippetSpec, calls: &[Vec<Value>]) -> String {
    let mut out = String::new();
    out.push_str("public class Main {\n");
    let _ = writeln!(out, "    static {} {{{}}}", spec.signature(), spec.body);
    out.push_str(
        r#"    static String show(Object v) {
        if (v instanceof int[]) return "int[]:" + java.util.Arrays.toString((int[]) v);
        if (v instanceof String) return "String:" + ((String) v).replace("\\", "\\\\").replace("\n", "\\n");
        if (v instanceof Integer) return "int:" + v;
        if (v instanceof Long) return "long:" + v;
        return "boolean:" + v;
    }
    interface Call { Object run(); }
    static void trial(Call c) {
        try {
            System.out.println("V " + show(c.run()));
        } catch (ArithmeticException e) {
            System.out.println("T DivByZero");
        } catch (IndexOutOfBoundsException e) {
            System.out.println("T IndexOutOfBounds");
        } catch (Throwable e) {
            System.out.println("T Unsupported");
        }
    }
    public static void main(String[] args) {
"#,
    );
    for args in calls {
        let lits: Vec<String> = args.iter().map(Value::java_literal).collect();
        let _ = writeln!(out, "        trial(() -> f({}));", lits.join(", "));
    }
    out.push_str("    }\n}\n");
    out
}

fn parse_line(line: &str, ret: JType) -> Result<ExecResult, JdkError> {
    let bad = || JdkError::Output(line.to_owned());
    if let Some(trap) = line.strip_prefix("T ") {
        return Ok(ExecResult::trap(match trap {
            "DivByZero" => Trap::DivByZero,
            "IndexOutOfBounds" => Trap::IndexOutOfBounds,
            _ => Trap::Unsupported,
        }));
    }
    let shown = line.strip_prefix("V ").ok_or_else(bad)?;
    let (_, payload) = shown.split_once(':').ok_or_else(bad)?;
    let value = match ret {
        JType::Int => Value::Int(payload.parse().map_err(|_| bad())?),
        JType::Long => Value::Long(payload.parse().map_err(|_| bad())?),
        JType::Boolean => Value::Boolean(payload.parse().map_err(|_| bad())?),
        JType::Str => Value::Str(payload.replace("\\n", "\n").replace("\\\\", "\\")),
        JType::IntArray => {
            let inner = payload.trim_start_matches('[').trim_end_matches(']');
            let items = inner
                .split(", ")
                .filter(|s| !s.is_empty())
                .map(|s| s.parse().map_err(|_| bad()))
                .collect::<Result<_, _>>()?;
            Value::IntArray(items)
        }
    };
    Ok(ExecResult::value(value))
}

fn run_in(dir: &Path, spec: &SnippetSpec, calls: &[Vec<Value>]) -> Result<Vec<ExecResult>, JdkError> {
    std::fs::write(dir.join("Main.java"), driver_source(spec, calls))?;
    let javac = Command::new("javac").arg("Main.java").current_dir(dir).output()?;
    if !javac.status.success() {
        return Err(JdkError::Compile(String::from_utf8_lossy(&javac.stderr).into_owned()));
    }
    let mut child = Command::new("java")
        .args(["-cp", ".", "Main"])
        .current_dir(dir)
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()?;
    let start = Instant::now();
    while child.try_wait()?.is_none() {
        if start.elapsed() > TIMEOUT {
            let _ = child.kill();
            return Err(JdkError::Run("timeout".into()));
        }
        std::thread::sleep(Duration::from_millis(20));
    }
    let out = child.wait_with_output()?;
    if !out.status.success() {
        return Err(JdkError::Run(String::from_utf8_lossy(&out.stderr).into_owned()));
    }
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| parse_line(l, spec.ret))
        .collect()
}

/// Runs `spec` on the JVM once per argument vector.
pub fn run(spec: &SnippetSpec, calls: &[Vec<Value>]) -> Result<Vec<ExecResult>, JdkError> {
    if !available() {
        return Err(JdkError::Missing);
    }
    let dir = tempfile::tempdir()?;
    run_in(dir.path(), spec, calls)
}

/// [`crate::differential_test`] with both variants executed by the JVM.
pub fn differential_test(
    original: &SnippetSpec,
    transformed: &SnippetSpec,
    trials: usize,
    seed: u64,
) -> Result<DiffReport, JdkError> {
    if trials == 0 {
        return Err(EquivError::NoTrials.into());
    }
    if original.type_signature() != transformed.type_signature() {
        return Err(EquivError::SignatureMismatch(original.type_signature(), transformed.type_signature()).into());
    }
    let types: Vec<JType> = original.params.iter().map(|p| p.ty).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let calls: Vec<Vec<Value>> = (0..trials).map(|_| draw_args(&types, &mut rng)).collect();
    let ra = run(original, &calls)?;
    let rb = run(transformed, &calls)?;
    let mut report = DiffReport {
        trials,
        passed: 0,
        failed: 0,
        skipped: 0,
        first_failure: None,
    };
    for (trial, ((a, b), args)) in ra.into_iter().zip(rb).zip(calls).enumerate() {
        if a.is_unsupported() || b.is_unsupported() {
            report.skipped += 1;
        } else if a == b {
            report.passed += 1;
        } else {
            report.failed += 1;
            report.first_failure.get_or_insert(Failure {
                trial,
                args,
                original: a,
                transformed: b,
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn driver_calls_every_vector() {
        let spec = SnippetSpec::new("int f(int a, int[] xs)", "return a;").unwrap();
        let src = driver_source(
            &spec,
            &[
                vec![Value::Int(i32::MIN), Value::IntArray(vec![1, -2])],
                vec![Value::Int(3), Value::IntArray(vec![])],
            ],
        );
        assert!(src.contains("trial(() -> f(Integer.MIN_VALUE, new int[]{1, -2}));"));
        assert!(src.contains("trial(() -> f(3, new int[]{}));"));
        assert!(src.contains("static int f(int a, int[] xs) {return a;}"));
    }

    #[test]
    fn parses_driver_lines() {
        assert_eq!(parse_line("V int:-5", JType::Int).unwrap(), ExecResult::value(Value::Int(-5)));
        assert_eq!(
            parse_line("V int[]:[1, 2]", JType::IntArray).unwrap(),
            ExecResult::value(Value::IntArray(vec![1, 2]))
        );
        assert_eq!(parse_line("V int[]:[]", JType::IntArray).unwrap(), ExecResult::value(Value::IntArray(vec![])));
        assert_eq!(
            parse_line("V String:a\\nb", JType::Str).unwrap(),
            ExecResult::value(Value::Str("a\nb".into()))
        );
        assert_eq!(parse_line("T DivByZero", JType::Int).unwrap(), ExecResult::trap(Trap::DivByZero));
        assert!(parse_line("garbage", JType::Int).is_err());
    }
}
