//! `finring`: analyze finite rings given as construction expressions and
//! run the corpus checks.

mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use finring::decide::Method;
use finring::harness::{CorpusSpec, TheoremId};
use finring::{Caps, Error};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "finring",
    version,
    about = "Finite commutative rings and property (A)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Units, zero-divisors, ideals and both (A) properties of a ring.
    Analyze {
        /// Construction expression, e.g. "dup(Z/4, ideal(2))".
        expr: Option<String>,
        /// Analyze every non-empty line of a file instead.
        #[arg(long, conflicts_with = "expr")]
        file: Option<PathBuf>,
        #[arg(long, default_value_t = Method::Fast, value_parser = parse_method)]
        method: Method,
        #[command(flatten)]
        out: Output,
    },
    /// Check the ring axioms on the Cayley tables of a ring.
    Check {
        expr: String,
        /// Check this many random triples instead of all of them.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Run finite-instance checks over a generated corpus.
    Verify {
        /// Check id, or "all".
        #[arg(required_unless_present = "list_corpus")]
        check: Option<String>,
        #[command(flatten)]
        corpus: CorpusFlags,
        /// Print the corpus and exit.
        #[arg(long)]
        list_corpus: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Search the corpus for counterexamples.
    Search {
        target: SearchTarget,
        #[command(flatten)]
        corpus: CorpusFlags,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchTarget {
    /// Strong (A) rings R with a proper ideal I such that R ⋈ I is not strong (A).
    #[value(name = "converse-3.1")]
    DuplicationConverse,
}

#[derive(Args)]
struct CorpusFlags {
    /// Largest ring in the corpus [default: 16]; for `search`, the bound
    /// on |R ⋈ I| [default: 256].
    #[arg(long)]
    max_size: Option<usize>,
    /// Construction nesting depth.
    #[arg(long, default_value_t = 2)]
    depth: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = Method::Fast, value_parser = parse_method)]
    method: Method,
}

impl CorpusFlags {
    fn spec(&self, default_max: usize) -> CorpusSpec {
        CorpusSpec {
            max_size: self.max_size.unwrap_or(default_max),
            depth: self.depth,
            seed: self.seed,
            ..CorpusSpec::default()
        }
    }
}

#[derive(Args)]
struct Output {
    /// JSON output (the default).
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Human-readable output.
    #[arg(long)]
    text: bool,
}

impl Output {
    fn text(&self) -> bool {
        self.text && !self.json
    }
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Exit status for a library error.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => 3,
        Error::ZeroRing => 4,
        _ => 2,
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: exit_code(&e),
            message: e.to_string(),
        }
    }
}

fn usage(message: String) -> Failure {
    Failure { code: 2, message }
}

/// Adds the timing field, which is never part of the compared payload.
/// A closed stdout (e.g. piping into `head`) is not an error.
fn emit(mut payload: Value, started: Instant, text: Option<String>) {
    let body = match text {
        Some(t) => t,
        None => {
            let ms = started.elapsed().as_secs_f64() * 1000.0;
            payload["timing"] = json!({ "elapsed_ms": (ms * 1000.0).round() / 1000.0 });
            let mut s =
                serde_json::to_string_pretty(&payload).expect("JSON values always serialize");
            s.push('\n');
            s
        }
    };
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let caps = Caps::default();
    let started = Instant::now();
    match cli.command {
        Command::Analyze {
            expr,
            file,
            method,
            out,
        } => {
            let Some(path) = file else {
                let expr =
                    expr.ok_or_else(|| usage("an expression or --file is required".into()))?;
                let analysis = report::analyze(&expr, method, &caps)?;
                let text = out.text().then(|| report::analysis_text(&analysis));
                emit(analysis, started, text);
                return Ok(0);
            };
            let source = std::fs::read_to_string(&path)
                .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            let mut code = 0;
            let mut entries = Vec::new();
            for line in source
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
            {
                match report::analyze(line, method, &caps) {
                    Ok(a) => entries.push(a),
                    Err(e) => {
                        let f = Failure::from(e);
                        if code == 0 {
                            code = f.code;
                        }
                        entries.push(
                            json!({ "input": line, "error": f.message, "exit_code": f.code }),
                        );
                    }
                }
            }
            let text = out
                .text()
                .then(|| entries.iter().map(report::analysis_text).collect());
            emit(json!({ "results": entries }), started, text);
            Ok(code)
        }
        Command::Check {
            expr,
            samples,
            seed,
            out,
        } => {
            let (payload, passed) = report::check(&expr, samples, seed, &caps)?;
            let text = out.text().then(|| report::check_text(&payload));
            emit(payload, started, text);
            Ok(if passed { 0 } else { 1 })
        }
        Command::Verify {
            check,
            corpus,
            list_corpus,
            out,
        } => {
            let spec = corpus.spec(16);
            if list_corpus {
                let payload = report::corpus_listing(&spec, &caps)?;
                let text = out.text().then(|| report::corpus_text(&payload));
                emit(payload, started, text);
                return Ok(0);
            }
            let ids = match check.as_deref() {
                Some("all") => TheoremId::ALL.to_vec(),
                Some(id) => vec![id.parse::<TheoremId>().map_err(|e| usage(e.to_string()))?],
                None => unreachable!("clap requires a check id"),
            };
            let (payload, holds) = report::verify(&ids, &spec, corpus.method, &caps)?;
            let text = out.text().then(|| report::verify_text(&payload));
            emit(payload, started, text);
            Ok(if holds { 0 } else { 1 })
        }
        Command::Search {
            target,
            corpus,
            out,
        } => {
            let SearchTarget::DuplicationConverse = target;
            let (payload, found) = report::search(&corpus.spec(256), corpus.method, &caps)?;
            let text = out.text().then(|| report::search_text(&payload));
            emit(payload, started, text);
            Ok(if found { 5 } else { 0 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
