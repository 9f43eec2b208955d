//! Command-line front end.
//!
//! Subcommands: `apply` (trace one sequence), `evolve-single` and
//! `evolve-multi` (run the search), `verify` (invariant sweep), and `corpus`
//! (list reference knots). Results go to standard output, diagnostics to
//! standard error. Exit codes: 0 success, 1 input error, 2 `apply` did not
//! reduce, 3 `verify` found a violation.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::braid::BraidWord;
use crate::corpus::{builtin_corpus, load_corpus, KnotRecord};
use crate::evolution::{
    best_report, evolve_runs, EvolutionConfig, EvolutionReport, Problem, DEFAULT_SEED,
};
use crate::executor::{run as run_sequence, MoveSequence};
use crate::moves::{AlphabetMode, ApplicationOutcome};
use crate::verify::{alexander, determinant, soundness_sweep};

#[derive(Parser)]
#[command(
    name = "unbraid",
    version,
    about = "Braid-word move calculus and evolutionary search for unknotting sequences",
    after_help = "Braid words are whitespace-separated nonzero integers (k means \
generator |k| with the sign of k); knots may also be named by their corpus \
entry, e.g. 4_1. The default seed is 42."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlphabetArg {
    Generic,
    Signed,
    Extended,
}

impl From<AlphabetArg> for AlphabetMode {
    fn from(a: AlphabetArg) -> AlphabetMode {
        match a {
            AlphabetArg::Generic => AlphabetMode::Generic,
            AlphabetArg::Signed => AlphabetMode::Signed,
            AlphabetArg::Extended => AlphabetMode::Extended,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Apply a move sequence to a braid word and print the step trace.
    Apply {
        /// Corpus knot name or literal braid word.
        target: String,
        /// Move sequence, e.g. "U M1 M1 R3 R2 M2 M2".
        sequence: String,
        /// Pass cap: 1 for single-pass runs, 50 for cycling runs.
        #[arg(long, default_value_t = 1)]
        max_passes: usize,
        #[arg(long, value_enum, default_value = "text")]
        output: OutputArg,
        /// Corpus file used for name lookups instead of the builtin table.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Evolve an unknotting sequence for one knot (single pass per braid).
    EvolveSingle {
        /// Corpus knot name or literal braid word.
        target: String,
        #[command(flatten)]
        opts: EvolveOpts,
    },
    /// Evolve one universal unknotting sequence for a set of knots.
    EvolveMulti {
        /// Corpus knot names or literal braid words; "A..B" expands to a
        /// corpus range, e.g. "3_1..6_3".
        targets: Vec<String>,
        #[command(flatten)]
        opts: EvolveOpts,
    },
    /// Run the move-soundness invariant sweep over a corpus.
    Verify {
        /// Corpus file to check instead of the builtin table.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Randomly derived words checked per corpus word.
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// List the knot corpus with invariants.
    Corpus {
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        output: OutputArg,
    },
}

#[derive(clap::Args)]
struct EvolveOpts {
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Population size (default: 500 single, 200 multi).
    #[arg(long)]
    population: Option<usize>,
    /// Generations (default: 4·len² from the longest target word).
    #[arg(long)]
    generations: Option<usize>,
    /// Pass cap per braid (default: 1 single, 50 multi).
    #[arg(long)]
    max_passes: Option<usize>,
    /// Seeded repetitions; seeds are seed, seed+1, ...
    #[arg(long, default_value_t = 3)]
    runs: usize,
    #[arg(long, value_enum, default_value = "generic")]
    alphabet: AlphabetArg,
    #[arg(long, value_enum, default_value = "text")]
    output: OutputArg,
    /// Corpus file used for name lookups instead of the builtin table.
    #[arg(long)]
    corpus: Option<PathBuf>,
}

/// Parse the process arguments and run; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let benign = matches!(
                err.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            if benign {
                print!("{err}");
                return 0;
            }
            eprint!("{err}");
            return 1;
        }
    };
    match cli.command {
        Command::Apply {
            target,
            sequence,
            max_passes,
            output,
            corpus,
        } => cmd_apply(&target, &sequence, max_passes, output, corpus.as_deref()),
        Command::EvolveSingle { target, opts } => cmd_evolve(Problem::Single, &[target], &opts),
        Command::EvolveMulti { targets, opts } => cmd_evolve(Problem::Multiple, &targets, &opts),
        Command::Verify {
            corpus,
            trials,
            seed,
        } => cmd_verify(corpus.as_deref(), trials, seed),
        Command::Corpus { corpus, output } => cmd_corpus(corpus.as_deref(), output),
    }
}

fn load_records(path: Option<&std::path::Path>) -> Result<Vec<KnotRecord>, String> {
    match path {
        None => Ok(builtin_corpus().to_vec()),
        Some(p) => load_corpus(p).map_err(|e| e.to_string()),
    }
}

/// Resolve a positional target: corpus name first, then literal braid word.
fn resolve_target(
    text: &str,
    records: &[KnotRecord],
) -> Result<(Option<String>, BraidWord), String> {
    if let Some(record) = records.iter().find(|r| r.name == text) {
        return Ok((Some(record.name.clone()), record.word.clone()));
    }
    match text.parse::<BraidWord>() {
        Ok(word) => Ok((None, word)),
        Err(err) => Err(format!(
            "`{text}` is neither a corpus knot nor a braid word ({err})"
        )),
    }
}

/// Expand "A..B" corpus ranges and resolve every target.
fn resolve_targets(
    texts: &[String],
    records: &[KnotRecord],
) -> Result<Vec<(Option<String>, BraidWord)>, String> {
    let mut out = Vec::new();
    for text in texts {
        if let Some((from, to)) = text.split_once("..") {
            let start = records
                .iter()
                .position(|r| r.name == from)
                .ok_or_else(|| format!("range start `{from}` is not in the corpus"))?;
            let end = records
                .iter()
                .position(|r| r.name == to)
                .ok_or_else(|| format!("range end `{to}` is not in the corpus"))?;
            if end < start {
                return Err(format!("range `{text}` runs backwards"));
            }
            for r in &records[start..=end] {
                out.push((Some(r.name.clone()), r.word.clone()));
            }
        } else {
            out.push(resolve_target(text, records)?);
        }
    }
    Ok(out)
}

fn cmd_apply(
    target: &str,
    sequence: &str,
    max_passes: usize,
    output: OutputArg,
    corpus: Option<&std::path::Path>,
) -> i32 {
    let records = match load_records(corpus) {
        Ok(r) => r,
        Err(e) => return input_error(&e),
    };
    let (name, word) = match resolve_target(target, &records) {
        Ok(t) => t,
        Err(e) => return input_error(&e),
    };
    let sequence: MoveSequence = match sequence.parse() {
        Ok(s) => s,
        Err(e) => return input_error(&format!("bad move sequence: {e}")),
    };
    if max_passes == 0 {
        return input_error("--max-passes must be at least 1");
    }

    let trace = run_sequence(&word, &sequence, max_passes);
    match output {
        OutputArg::Text => {
            let mut current = word.clone();
            for step in &trace.steps {
                match &step.outcome {
                    ApplicationOutcome::Applied {
                        variant,
                        site,
                        result,
                    } => {
                        current = result.clone();
                        println!(
                            "{}.{} {} {variant}@{site} | {current}",
                            step.pass,
                            step.index,
                            step.letter.family()
                        );
                    }
                    ApplicationOutcome::Skipped => {
                        println!(
                            "{}.{} {} skip | {current}",
                            step.pass,
                            step.index,
                            step.letter.family()
                        );
                    }
                }
            }
            let verdict = if trace.reduced {
                "reduced"
            } else {
                "not reduced"
            };
            println!(
                "{verdict} after {} pass(es) with {} crossing change(s)",
                trace.passes_used, trace.crossing_changes
            );
        }
        OutputArg::Json => {
            let mut current = word.clone();
            let steps: Vec<serde_json::Value> = trace
                .steps
                .iter()
                .map(|step| match &step.outcome {
                    ApplicationOutcome::Applied {
                        variant,
                        site,
                        result,
                    } => {
                        current = result.clone();
                        serde_json::json!({
                            "pass": step.pass,
                            "index": step.index,
                            "move": step.letter.to_string(),
                            "applied": true,
                            "variant": variant.to_string(),
                            "site": site.start + 1,
                            "word": current.to_string(),
                        })
                    }
                    ApplicationOutcome::Skipped => serde_json::json!({
                        "pass": step.pass,
                        "index": step.index,
                        "move": step.letter.to_string(),
                        "applied": false,
                        "word": current.to_string(),
                    }),
                })
                .collect();
            let doc = serde_json::json!({
                "target": name.unwrap_or_else(|| word.to_string()),
                "word": word.to_string(),
                "sequence": sequence.to_string(),
                "reduced": trace.reduced,
                "passes": trace.passes_used,
                "crossing_changes": trace.crossing_changes,
                "final_word": trace.final_word.to_string(),
                "steps": steps,
            });
            println!("{doc}");
        }
    }
    if trace.reduced {
        0
    } else {
        2
    }
}

fn cmd_evolve(problem: Problem, targets: &[String], opts: &EvolveOpts) -> i32 {
    if targets.is_empty() {
        return input_error("no targets given");
    }
    let records = match load_records(opts.corpus.as_deref()) {
        Ok(r) => r,
        Err(e) => return input_error(&e),
    };
    let resolved = match resolve_targets(targets, &records) {
        Ok(t) => t,
        Err(e) => return input_error(&e),
    };
    let words: Vec<BraidWord> = resolved.iter().map(|(_, w)| w.clone()).collect();

    let mut cfg = EvolutionConfig::for_targets(problem, &words);
    cfg.seed = opts.seed;
    cfg.runs = opts.runs;
    cfg.alphabet = opts.alphabet.into();
    if let Some(p) = opts.population {
        cfg.population = p;
    }
    if let Some(g) = opts.generations {
        cfg.generations = g;
    }
    if let Some(m) = opts.max_passes {
        cfg.max_passes = m;
    }

    let reports = match evolve_runs(&words, &cfg) {
        Ok(r) => r,
        Err(e) => return input_error(&e.to_string()),
    };
    let best = best_report(&reports);

    match opts.output {
        OutputArg::Json => {
            for report in &reports {
                println!("{}", report.to_json());
            }
            eprintln!("best: run {} (seed {})", best.run_index, best.seed);
        }
        OutputArg::Text => {
            for report in &reports {
                print_run_row(report, &resolved);
            }
            println!("---");
            print_best_row(best, &resolved);
        }
    }
    0
}

fn print_run_row(report: &EvolutionReport, targets: &[(Option<String>, BraidWord)]) {
    let m = &report.best_metrics;
    match report.config.problem {
        Problem::Single => println!(
            "run {} (seed {}): {}  | c_S {}  l_opt {}  fitness {:.4}",
            report.run_index,
            report.seed,
            report.best,
            m.crossing_changes,
            m.elided_len,
            report.best_fitness
        ),
        Problem::Multiple => println!(
            "run {} (seed {}): {}  | r_S {}/{}  max_S {}  l {}  fitness {:.4}",
            report.run_index,
            report.seed,
            report.best,
            m.reduced_count,
            targets.len(),
            m.max_passes,
            m.sequence_len,
            report.best_fitness
        ),
    }
}

fn print_best_row(report: &EvolutionReport, targets: &[(Option<String>, BraidWord)]) {
    let m = &report.best_metrics;
    match report.config.problem {
        Problem::Single => {
            let (name, word) = &targets[0];
            let label = name.clone().unwrap_or_else(|| format!("`{word}`"));
            let known = name
                .as_deref()
                .and_then(crate::corpus::find)
                .and_then(|r| r.known_unknotting)
                .map(|u| format!("  u(K) {u}"))
                .unwrap_or_default();
            println!(
                "best {label}: {}  | c(M) {}{known}",
                report.best, m.crossing_changes
            );
        }
        Problem::Multiple => {
            println!(
                "best: {}  | max_S {}  r_S {}  |S| {}",
                report.best,
                m.max_passes,
                m.reduced_count,
                targets.len()
            );
        }
    }
}

fn cmd_verify(corpus: Option<&std::path::Path>, trials: usize, seed: u64) -> i32 {
    let records = match load_records(corpus) {
        Ok(r) => r,
        Err(e) => return input_error(&e),
    };
    let words: Vec<BraidWord> = records.iter().map(|r| r.word.clone()).collect();
    let report = soundness_sweep(&words, trials, seed);
    println!(
        "checked {} words ({} applied moves): component counts, exponent deltas, \
Alexander polynomials, determinants, Burau structure",
        report.words_checked, report.moves_checked
    );
    if report.passed() {
        println!("all invariants hold");
        0
    } else {
        for violation in &report.violations {
            println!("violation: {violation}");
        }
        3
    }
}

fn cmd_corpus(corpus: Option<&std::path::Path>, output: OutputArg) -> i32 {
    let records = match load_records(corpus) {
        Ok(r) => r,
        Err(e) => return input_error(&e),
    };
    match output {
        OutputArg::Text => {
            println!("name\tword\tstrands\tcrossings\tu\tc\tdeterminant\talexander");
            for r in &records {
                let delta = alexander(&r.word).expect("corpus entries are knots");
                let det = determinant(&r.word).expect("corpus entries are knots");
                println!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.name,
                    r.word,
                    r.strands,
                    r.crossings,
                    r.known_unknotting.map_or("-".into(), |u| u.to_string()),
                    r.reference_changes.map_or("-".into(), |c| c.to_string()),
                    det,
                    delta,
                );
            }
        }
        OutputArg::Json => {
            let rows: Vec<serde_json::Value> = records
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "name": r.name,
                        "word": r.word.to_string(),
                        "strands": r.strands,
                        "crossings": r.crossings,
                        "u": r.known_unknotting,
                        "c": r.reference_changes,
                        "determinant": determinant(&r.word).expect("corpus entries are knots"),
                        "alexander": alexander(&r.word).expect("corpus entries are knots").to_string(),
                    })
                })
                .collect();
            println!("{}", serde_json::Value::Array(rows));
        }
    }
    0
}

fn input_error(message: &str) -> i32 {
    eprintln!("error: {message}");
    1
}
