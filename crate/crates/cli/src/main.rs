use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use sect_audit::io::{emit, read_json, read_jsonl, read_units, to_json, to_jsonl, write_file};
use sect_audit::stages::{self, ProviderSpec, DEFAULT_K};
use sect_audit::{run_pipeline, CliError, PipelineConfig};
use sect_core::dataset::{DatasetParams, MIDataset};
use sect_core::ngram::NgramModel;
use sect_core::Row;
use sect_equiv::{check_file_pair, check_rule, check_rule_with, jdk, FileReport, Suite};
use sect_transform::{file_seed, RuleId};

/// Audits how semantics-preserving code transformations change membership
/// inference on code models.
#[derive(Parser)]
#[command(name = "sect-audit", version)]
struct Cli {
    /// Worker threads for per-file stages.
    #[arg(long, global = true, env = "SECT_AUDIT_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rewrite every .java file of a directory with one rule or ALL.
    Transform {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        #[arg(long)]
        rule: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Manifest path; defaults to OUTPUT/manifest.jsonl.
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
    /// Code metrics of every .java file, as JSON Lines.
    Features {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Differential testing of rewrites: the curated snippet suite, or
    /// original and transformed directories file by file.
    Equivcheck {
        #[arg(long, default_value = "ALL")]
        rule: String,
        /// Snippet file (TOML); the bundled suite by default.
        #[arg(long, conflicts_with = "original")]
        suite: Option<PathBuf>,
        #[arg(long, requires = "transformed")]
        original: Option<PathBuf>,
        #[arg(long, requires = "original")]
        transformed: Option<PathBuf>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Execute with javac/java instead of the built-in interpreter.
        #[arg(long, conflicts_with = "original")]
        jdk: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sample members and non-members.
    Dataset {
        #[arg(long)]
        train: PathBuf,
        #[arg(long)]
        test: PathBuf,
        #[arg(long)]
        rule: String,
        #[command(flatten)]
        sampling: Sampling,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// LOSS, MIN_K and ZLIB scores of a dataset.
    Score {
        #[arg(long)]
        dataset: PathBuf,
        #[command(flatten)]
        provider: ProviderArgs,
        /// Corpus the surrogate is trained on.
        #[arg(long)]
        train_corpus: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_K)]
        k: f64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// AUC with bootstrap interval for every method in a scores file.
    Evaluate {
        #[arg(long)]
        scores: PathBuf,
        #[arg(long, default_value_t = 1000)]
        bootstrap: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Treatment effect of a rule on membership scores.
    Causal {
        /// Causal rows as JSON Lines.
        #[arg(long, conflicts_with_all = ["dataset", "original_scores", "transformed_scores"])]
        frame: Option<PathBuf>,
        #[arg(long, requires_all = ["original_scores", "transformed_scores"])]
        dataset: Option<PathBuf>,
        #[arg(long)]
        original_scores: Option<PathBuf>,
        #[arg(long)]
        transformed_scores: Option<PathBuf>,
        /// Where to write the frame built from scores.
        #[arg(long)]
        frame_output: Option<PathBuf>,
        /// Label for the report; taken from the dataset when omitted.
        #[arg(long)]
        rule: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Every stage end to end, with a digest manifest.
    Pipeline {
        #[arg(long)]
        train: PathBuf,
        #[arg(long)]
        test: PathBuf,
        /// Rule number, comma separated list, or ALL.
        #[arg(long)]
        rule: String,
        #[command(flatten)]
        provider: ProviderArgs,
        /// Endpoint of the model trained on transformed code (remote only).
        #[arg(long)]
        transformed_endpoint: Option<String>,
        #[arg(long, default_value_t = DEFAULT_K)]
        k: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        bootstrap: usize,
        #[command(flatten)]
        sampling: Sampling,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct Sampling {
    #[arg(long, default_value_t = 1000)]
    max_per_side: usize,
    #[arg(long, default_value_t = 100)]
    min_words: usize,
    #[arg(long, default_value_t = 200)]
    max_words: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProviderKind {
    Surrogate,
    Remote,
}

#[derive(Args)]
struct ProviderArgs {
    #[arg(long, value_enum, default_value = "surrogate")]
    provider: ProviderKind,
    #[arg(long, default_value_t = NgramModel::DEFAULT_ORDER)]
    order: usize,
    #[arg(long, default_value_t = NgramModel::DEFAULT_ALPHA)]
    alpha: f64,
    #[arg(long)]
    endpoint: Option<String>,
}

impl ProviderArgs {
    fn spec(&self) -> Result<ProviderSpec, CliError> {
        Ok(match self.provider {
            ProviderKind::Surrogate => ProviderSpec::Surrogate {
                order: self.order,
                alpha: self.alpha,
            },
            ProviderKind::Remote => ProviderSpec::Remote {
                endpoint: self
                    .endpoint
                    .clone()
                    .ok_or_else(|| CliError::config("--provider remote needs --endpoint"))?,
            },
        })
    }
}

/// Report of a directory-pair check.
#[derive(Serialize)]
struct PairReport {
    files: usize,
    #[serde(flatten)]
    report: FileReport,
}

fn require_dir(p: &Path) -> Result<(), CliError> {
    if p.is_dir() {
        Ok(())
    } else {
        Err(CliError::config(format!("{} is not a directory", p.display())))
    }
}

/// Runs the command; `Ok(false)` means it completed but found failures.
fn run(cmd: Command) -> Result<bool, CliError> {
    match cmd {
        Command::Transform {
            input,
            output,
            rule,
            seed,
            manifest,
        } => {
            let rule = stages::parse_rule(&rule)?;
            let units = read_units(&input)?;
            if units.is_empty() {
                return Err(CliError::config(format!("no .java files in {}", input.display())));
            }
            let out = stages::transform(&units, rule, seed)?;
            for (u, _) in &out {
                write_file(&output.join(&u.id), &u.text)?;
            }
            let records: Vec<_> = out.into_iter().map(|(_, r)| r).collect();
            write_file(&manifest.unwrap_or_else(|| output.join("manifest.jsonl")), &to_jsonl(&records))?;
        }
        Command::Features { input, output } => {
            let units = read_units(&input)?;
            emit(output.as_deref(), &to_jsonl(&stages::features(&units)))?;
        }
        Command::Equivcheck {
            rule,
            suite,
            original,
            transformed,
            trials,
            seed,
            jdk: use_jdk,
            output,
        } => {
            if trials == 0 {
                return Err(CliError::config("--trials must be positive"));
            }
            let rule = stages::parse_rule(&rule)?;
            if let (Some(a), Some(b)) = (original, transformed) {
                require_dir(&b)?;
                let left = read_units(&a)?;
                let mut total = PairReport {
                    files: 0,
                    report: FileReport::default(),
                };
                for u in &left {
                    let other = std::fs::read_to_string(b.join(&u.id))
                        .map_err(|e| CliError::config(format!("{}: {e}", b.join(&u.id).display())))?;
                    let r = check_file_pair(&u.text, &other, trials, file_seed(seed, &u.id))
                        .map_err(|e| CliError::stage("equivcheck", format!("{}: {e}", u.id)))?;
                    total.files += 1;
                    total.report.absorb(r);
                }
                emit(output.as_deref(), &to_json(&total))?;
                return Ok(total.report.failed == 0);
            }
            let suite = match suite {
                Some(p) => {
                    let text = std::fs::read_to_string(&p).map_err(|e| CliError::config(format!("{}: {e}", p.display())))?;
                    Suite::from_toml(&text).map_err(CliError::config)?
                }
                None => Suite::builtin(),
            };
            let snippets: Vec<_> = match rule {
                RuleId::Rule(id) => suite.for_rule(id),
                RuleId::All => suite.snippets.iter().collect(),
            };
            if snippets.is_empty() {
                return Err(CliError::config(format!("suite has no snippets for rule {rule}")));
            }
            let report = if use_jdk {
                if !jdk::available() {
                    return Err(CliError::config("--jdk needs javac and java on PATH"));
                }
                check_rule_with(rule, &snippets, trials, seed, jdk::differential_test).map_err(|e| CliError::stage("equivcheck", e))?
            } else {
                check_rule(rule, &snippets, trials, seed).map_err(|e| CliError::stage("equivcheck", e))?
            };
            emit(output.as_deref(), &to_json(&report))?;
            return Ok(report.pass());
        }
        Command::Dataset {
            train,
            test,
            rule,
            sampling,
            seed,
            output,
        } => {
            let rule = stages::parse_rule(&rule)?;
            let params = DatasetParams {
                max_per_side: sampling.max_per_side,
                min_words: sampling.min_words,
                max_words: sampling.max_words,
                seed,
            };
            let ds = stages::dataset(&read_units(&train)?, &read_units(&test)?, rule, params)?;
            emit(output.as_deref(), &to_json(&ds))?;
        }
        Command::Score {
            dataset,
            provider,
            train_corpus,
            k,
            output,
        } => {
            let ds: MIDataset = read_json(&dataset)?;
            let spec = provider.spec()?;
            let corpus = match (&spec, train_corpus) {
                (ProviderSpec::Surrogate { .. }, Some(dir)) => read_units(&dir)?,
                (ProviderSpec::Surrogate { .. }, None) => {
                    return Err(CliError::config("the surrogate provider needs --train-corpus"));
                }
                (ProviderSpec::Remote { .. }, _) => Vec::new(),
            };
            let model = spec.build(&corpus)?;
            emit(output.as_deref(), &to_jsonl(&stages::score(&ds, model.as_ref(), k)?))?;
        }
        Command::Evaluate {
            scores,
            bootstrap,
            seed,
            output,
        } => {
            let reports = stages::evaluate(&read_jsonl(&scores)?, bootstrap, seed)?;
            emit(output.as_deref(), &to_jsonl(&reports))?;
        }
        Command::Causal {
            frame,
            dataset,
            original_scores,
            transformed_scores,
            frame_output,
            rule,
            seed,
            output,
        } => {
            let (rows, label): (Vec<Row>, String) = match (frame, dataset, original_scores, transformed_scores) {
                (Some(f), ..) => (read_jsonl(&f)?, rule.unwrap_or_else(|| "unknown".into())),
                (None, Some(d), Some(a), Some(b)) => {
                    let ds: MIDataset = read_json(&d)?;
                    let rows = stages::causal_frame(&ds, &read_jsonl(&a)?, &read_jsonl(&b)?)?;
                    if let Some(p) = frame_output {
                        write_file(&p, &to_jsonl(&rows))?;
                    }
                    (rows, rule.unwrap_or(ds.rule_id))
                }
                _ => return Err(CliError::config("give --frame, or --dataset with both score files")),
            };
            emit(output.as_deref(), &to_json(&stages::causal(&rows, &label, seed)?))?;
        }
        Command::Pipeline {
            train,
            test,
            rule,
            provider,
            transformed_endpoint,
            k,
            seed,
            bootstrap,
            sampling,
            out,
        } => {
            let cfg = PipelineConfig {
                train,
                test,
                rules: stages::parse_rules(&rule)?,
                provider: provider.spec()?,
                transformed_endpoint,
                k,
                seed,
                bootstrap,
                max_per_side: sampling.max_per_side,
                min_words: sampling.min_words,
                max_words: sampling.max_words,
                out,
            };
            let (_, summaries) = run_pipeline(&cfg)?;
            for s in summaries {
                for (o, t) in s.original.iter().zip(&s.transformed) {
                    eprintln!("rule {} {}: AUC {:.4} -> {:.4}", s.rule_id, o.method, o.auc, t.auc);
                }
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if n == 0 {
            eprintln!("sect-audit: config error: --jobs must be positive");
            return ExitCode::from(2);
        }
        // Only fails if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("sect-audit: equivalence failures found");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("sect-audit: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
