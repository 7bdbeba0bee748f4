//! `apw`: word tools and bound sweeps for almost-palindromic width.
//!
//! Exit status: 0 on success, 1 when a bound violation is detected, 2 on a
//! usage error (bad flags, malformed words, exceeded enumeration caps).

mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use apwidth::delta::DeltaError;
use apwidth::oracle::{lower_bound_reduced, WidthKind};
use apwidth::words::generator_symbol;
use apwidth::{
    check_lemma, check_prop_product, check_prop_single, defect, delta_reduced,
    min_changes_to_palindrome, parse_reduced, parse_word, theorem_table, witness, witness_delta,
    BoundViolation, ReducedWord, SweepMode, WidthBudget, WidthSearch, Word,
};
use clap::{Args, Parser, Subcommand};
use serde_json::json;
use thiserror::Error;

use output::{Emit, Format};

#[derive(Parser, Debug)]
#[command(
    name = "apw",
    version,
    about = "Free-group words, almost-palindromes and the Δ bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args, Debug, Clone)]
struct Opts {
    /// Number of generators (letters a.. in the text form).
    #[arg(long, global = true, default_value_t = 2)]
    rank: u32,
    /// Allowed letter changes in an almost-palindrome.
    #[arg(long, global = true, default_value_t = 0)]
    m: usize,
    /// Witness index, tuple size, factor count or table length, by command.
    #[arg(long, global = true)]
    n: Option<u64>,
    /// Random trials; for check-prop1 its presence selects random mode.
    #[arg(long, global = true)]
    trials: Option<u64>,
    #[arg(long, global = true, env = "APW_SEED", default_value_t = 0)]
    seed: u64,
    /// Letter budget for sampled or enumerated words.
    #[arg(long, global = true)]
    max_len: Option<usize>,
    #[arg(long, global = true, default_value_t = 4)]
    gen_len: usize,
    #[arg(long, global = true, default_value_t = 3)]
    max_c: usize,
    #[arg(long, global = true, default_value_t = 2_000_000)]
    ball_cap: usize,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for sweeps (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Free reduction, printed in canonical form.
    Reduce { word: String },
    /// Δ of a word.
    Delta { word: String },
    /// Syllables of the reduced word, one `generator exponent` per line.
    Syllables { word: String },
    /// Membership in the m-almost-palindromes.
    #[command(name = "appal-check")]
    AppalCheck { word: String },
    /// The witness word a^1 b^1 ... a^n b^n.
    Witness,
    /// Defect |Δ(w_1...w_n) - Σ Δ(w_i)| of a tuple of words.
    Defect { words: Vec<String> },
    /// Randomized sweep of tuple defects against 6n.
    CheckLemma,
    /// Δ of single m-almost-palindromes against 24m + 12.
    #[command(name = "check-prop1")]
    CheckProp1,
    /// Δ of products of --n m-almost-palindromes against (24m + 18)n.
    #[command(name = "check-prop2")]
    CheckProp2,
    /// Budgeted shortest decomposition into m-almost-palindromes.
    Width { word: String },
    /// Δ-based lower bound on the number of factors (a word, or the witness --n).
    LowerBound { word: Option<String> },
    /// Witness table: n, Δ, lower bound, budgeted upper bound.
    TheoremTable,
}

impl Command {
    fn default_format(&self) -> Format {
        match self {
            Command::CheckLemma
            | Command::CheckProp1
            | Command::CheckProp2
            | Command::TheoremTable => Format::Csv,
            _ => Format::Plain,
        }
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("bound violation: {0}")]
    Violation(BoundViolation),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Violation(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

impl From<DeltaError> for CliError {
    fn from(e: DeltaError) -> Self {
        match e {
            DeltaError::Violation(v) => CliError::Violation(v),
            other => usage(other),
        }
    }
}

fn check_rank(max_generator: Option<u32>, text: &str, rank: u32) -> Result<(), CliError> {
    match max_generator {
        Some(g) if g >= rank => Err(usage(format!(
            "word {text:?} uses generator #{g}, outside rank {rank}"
        ))),
        _ => Ok(()),
    }
}

fn word_arg(text: &str, opts: &Opts) -> Result<Word, CliError> {
    let w = parse_word(text).map_err(|e| usage(format!("{text:?}: {e}")))?;
    check_rank(w.max_generator(), text, opts.rank)?;
    Ok(w)
}

fn reduced_arg(text: &str, opts: &Opts) -> Result<ReducedWord, CliError> {
    let w = parse_reduced(text).map_err(|e| usage(format!("{text:?}: {e}")))?;
    check_rank(w.max_generator(), text, opts.rank)?;
    Ok(w)
}

fn need_n(opts: &Opts, what: &str) -> Result<u64, CliError> {
    opts.n
        .ok_or_else(|| usage(format!("--n is required ({what})")))
}

fn budget(opts: &Opts) -> WidthBudget {
    WidthBudget {
        gen_len: opts.gen_len,
        max_c: opts.max_c,
        ball_cap: opts.ball_cap,
    }
}

fn report_emit(report: apwidth::ExperimentReport) -> Emit {
    Emit::custom(
        report.to_string(),
        serde_json::to_value(&report).expect("report serializes"),
        report.to_csv(),
    )
}

fn run(command: &Command, opts: &Opts) -> Result<Emit, CliError> {
    if opts.rank == 0 {
        return Err(usage("--rank must be at least 1"));
    }
    let emit = match command {
        Command::Reduce { word } => {
            let r = reduced_arg(word, opts)?;
            Emit::record(
                r.to_string(),
                json!({
                    "input": word,
                    "reduced": r.to_string(),
                    "length": r.len(),
                    "syllables": r.syllable_count(),
                }),
            )
        }
        Command::Delta { word } => {
            let r = reduced_arg(word, opts)?;
            let d = delta_reduced(&r);
            Emit::record(
                d.to_string(),
                json!({ "word": word, "reduced": r.to_string(), "delta": d }),
            )
        }
        Command::Syllables { word } => {
            let r = reduced_arg(word, opts)?;
            let plain = r
                .syllables()
                .iter()
                .map(|s| format!("{} {}", generator_symbol(s.generator()), s.exponent()))
                .collect::<Vec<_>>()
                .join("\n");
            let rows = r
                .syllables()
                .iter()
                .map(|s| json!({ "generator": generator_symbol(s.generator()), "exponent": s.exponent() }))
                .collect();
            Emit::table(plain, rows)
        }
        Command::AppalCheck { word } => {
            let w = word_arg(word, opts)?;
            let changes = min_changes_to_palindrome(&w);
            let member = changes <= opts.m;
            Emit::record(
                member.to_string(),
                json!({ "word": w.to_string(), "m": opts.m, "min_changes": changes, "member": member }),
            )
        }
        Command::Witness => {
            let n = need_n(opts, "witness index")?;
            let w = witness(n).map_err(usage)?;
            let d = witness_delta(n).map_err(usage)?;
            Emit::record(
                w.to_string(),
                json!({ "n": n, "word": w.to_string(), "length": w.len(), "delta": d }),
            )
        }
        Command::Defect { words } => {
            let factors = words
                .iter()
                .map(|t| word_arg(t, opts))
                .collect::<Result<Vec<_>, _>>()?;
            let sample = defect(&factors);
            if !sample.holds() {
                return Err(CliError::Violation(BoundViolation {
                    check: "lemma".into(),
                    observed: sample.defect as i64,
                    bound: sample.bound as i64,
                    factors,
                }));
            }
            let joined = factors
                .iter()
                .map(|f| f.to_string())
                .collect::<Vec<_>>()
                .join(";");
            let csv = Emit::record(
                "",
                json!({
                    "factors": joined,
                    "delta_product": sample.delta_product,
                    "delta_sum": sample.delta_sum,
                    "defect": sample.defect,
                    "bound": sample.bound,
                }),
            )
            .render(Format::Csv);
            Emit::custom(
                sample.defect.to_string(),
                serde_json::to_value(&sample).expect("sample serializes"),
                csv,
            )
        }
        Command::CheckLemma => {
            let n = opts.n.unwrap_or(2) as usize;
            let report = check_lemma(
                opts.rank,
                n,
                opts.max_len.unwrap_or(30),
                opts.trials.unwrap_or(10_000),
                opts.seed,
            )?;
            report_emit(report)
        }
        Command::CheckProp1 => {
            let mode = match opts.trials {
                None => SweepMode::Exhaustive,
                Some(trials) => SweepMode::Random {
                    trials,
                    seed: opts.seed,
                },
            };
            let report = check_prop_single(opts.m, opts.rank, opts.max_len.unwrap_or(10), mode)?;
            report_emit(report)
        }
        Command::CheckProp2 => {
            let c = opts.n.unwrap_or(2) as usize;
            let report = check_prop_product(
                opts.m,
                c,
                opts.rank,
                opts.max_len.unwrap_or(20),
                opts.trials.unwrap_or(10_000),
                opts.seed,
            )?;
            report_emit(report)
        }
        Command::Width { word } => {
            let g = reduced_arg(word, opts)?;
            let mut search = WidthSearch::new(opts.m, opts.rank, budget(opts)).map_err(usage)?;
            let answer = search.search(&g);
            let plain = match &answer.kind {
                WidthKind::Found { c, .. } => c.to_string(),
                WidthKind::NotFoundWithinBudget { .. } => "not_found_within_budget".to_string(),
            };
            let certificate = answer.certificate().map(|c| {
                c.iter()
                    .map(|w| w.to_string())
                    .collect::<Vec<_>>()
                    .join(";")
            });
            let csv = Emit::record(
                "",
                json!({
                    "query": answer.query.to_string(),
                    "m": answer.m,
                    "found_c": answer.found_c(),
                    "lower_bound": answer.lower_bound,
                    "certificate": certificate,
                }),
            )
            .render(Format::Csv);
            Emit::custom(
                plain,
                serde_json::to_value(&answer).expect("answer serializes"),
                csv,
            )
        }
        Command::LowerBound { word } => {
            let g = match word {
                Some(text) => reduced_arg(text, opts)?,
                None => witness(need_n(opts, "witness index, or pass a word")?).map_err(usage)?,
            };
            let lb = lower_bound_reduced(&g, opts.m);
            Emit::record(
                lb.to_string(),
                json!({
                    "word": g.to_string(),
                    "m": opts.m,
                    "delta": delta_reduced(&g),
                    "lower_bound_c": lb,
                }),
            )
        }
        Command::TheoremTable => {
            let n_max = opts.n.unwrap_or(20);
            let table = theorem_table(opts.m, n_max, Some(budget(opts))).map_err(usage)?;
            let last = table.rows.last().map(|r| r.lower_bound_c).unwrap_or(0);
            Emit::custom(
                last.to_string(),
                serde_json::to_value(&table).expect("table serializes"),
                table.to_csv(),
            )
        }
    };
    Ok(emit)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.opts.threads {
        if threads == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let format = cli.opts.format.unwrap_or(cli.command.default_format());
    let result = run(&cli.command, &cli.opts).and_then(|emit| {
        let text = emit.render(format);
        match &cli.opts.out {
            Some(path) => {
                fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
            }
            None => {
                print!("{text}");
                Ok(())
            }
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
