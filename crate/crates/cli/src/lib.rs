//! Command-line front end for `rote-core`.
//!
//! [`run`] takes the arguments and the three standard streams explicitly so
//! the whole program can be driven from tests.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::time::Instant;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

mod commands;
pub mod report;
pub mod source;
pub mod verify;

use report::{Output, RunReport, Status};
use source::Registry;

/// Exit status when an input exceeds `--limit`.
pub const EXIT_LIMIT: i32 = 3;
/// Exit status for usage and parse errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "rote", version, about = "Power-free Rote words: search, generation, structure checks")]
pub struct Cli {
    /// Print one JSON object per line instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Refuse inputs or generated words longer than this many letters.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    pub limit: usize,
    /// Leading letters a properness check may discard when decomposing.
    #[arg(long, global = true, default_value_t = 64)]
    pub seed_trim: usize,
    /// Extra morphism for generator specs, as `name: image0,image1,...`.
    #[arg(long = "morphism-def", global = true, value_name = "DEF")]
    pub morphism_defs: Vec<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Recompute the backtrack table, morphism identities and worked images.
    VerifyPaper(VerifyArgs),
    /// Longest binary word avoiding 5/2+ powers and the given factors.
    Search(SearchArgs),
    /// Classify binary words by their length-4 factors.
    Classify(InputArgs),
    /// Invert g, f or h by block parsing.
    Decode(DecodeArgs),
    /// Peel off g and then repeated f or h, checking each level.
    Decompose(DecomposeArgs),
    /// Print a word from one of the four cases or a generator spec.
    Generate(GenerateArgs),
    /// Factor complexity table.
    Complexity(ComplexityArgs),
    /// Look for a repetition above a threshold.
    CheckPower(CheckPowerArgs),
}

/// Where words come from. Exactly one source may be given.
#[derive(Debug, Args)]
pub struct InputArgs {
    /// Digit-line file; `-` reads standard input.
    #[arg(long, value_name = "PATH")]
    pub input: Option<String>,
    /// Read digit lines from standard input.
    #[arg(long)]
    pub stdin: bool,
    /// Generator spec, e.g. `image:g:fixpoint:f:0:5000`.
    #[arg(long, value_name = "SPEC")]
    pub source: Option<String>,
    /// A word written inline.
    pub word: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Worker threads for the table rows.
    #[arg(long)]
    pub threads: Option<usize>,
    /// Add one to the expected value of this row (1-based); a negative control.
    #[arg(long, hide = true)]
    pub perturb: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Forbidden binary factors.
    pub forbidden: Vec<String>,
    /// Stop once a good word of this length is found.
    #[arg(long, default_value_t = rote_core::search::DEFAULT_TARGET)]
    pub target: usize,
}

#[derive(Debug, Args)]
pub struct DecodeArgs {
    /// g, f or h.
    #[arg(long)]
    pub morphism: String,
    #[command(flatten)]
    pub input: InputArgs,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    /// Number of f or h levels below g.
    #[arg(long, default_value_t = 4)]
    pub depth: usize,
    /// Stop when a preimage gets shorter than this.
    #[arg(long, default_value_t = 10)]
    pub floor: usize,
    /// Check properness on at most this many letters per level.
    #[arg(long, default_value_t = rote_core::properness::DEFAULT_LENGTH_LIMIT)]
    pub check_limit: usize,
    #[command(flatten)]
    pub input: InputArgs,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// F, Fbar, Frev or FbarRev.
    #[arg(long, conflicts_with = "source")]
    pub case: Option<String>,
    #[arg(long, default_value_t = 4)]
    pub depth: usize,
    #[arg(long, default_value_t = 4000)]
    pub length: usize,
    /// Generator spec instead of a case.
    #[arg(long, value_name = "SPEC")]
    pub source: Option<String>,
}

#[derive(Debug, Args)]
pub struct ComplexityArgs {
    #[arg(long, default_value_t = 100)]
    pub max_n: usize,
    /// Expected complexity: `2n`, `2n+1` or `n+1`.
    #[arg(long)]
    pub expect: Option<String>,
    /// Required ratio of word length to max-n.
    #[arg(long, default_value_t = 100)]
    pub safety: usize,
    #[command(flatten)]
    pub input: InputArgs,
}

#[derive(Debug, Args)]
pub struct CheckPowerArgs {
    /// Exponent threshold, `a/b` or an integer.
    #[arg(long, default_value = "5/2")]
    pub threshold: String,
    /// Count exponents equal to the threshold as violations.
    #[arg(long)]
    pub non_strict: bool,
    #[command(flatten)]
    pub input: InputArgs,
}

/// Shared state for one invocation.
pub struct Context<'a> {
    pub limit: usize,
    pub seed_trim: usize,
    pub registry: Registry,
    pub stdin: &'a mut dyn Read,
}

/// Parses `args` and runs the command, returning the process exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let _ =
                if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let started = Instant::now();
    let (name, parameters) = describe(&cli);
    let result = execute(&cli, stdin);
    let elapsed_ms = started.elapsed().as_millis() as u64;
    match result {
        Ok(output) => {
            let report = RunReport {
                command: name.to_string(),
                parameters,
                results: output.results,
                elapsed_ms,
                status: output.status,
            };
            let written = if cli.json {
                write_json(out, &output.checks, &report)
            } else {
                write_plain(out, err, &output.plain, &report)
            };
            if written.is_err() {
                return EXIT_USAGE;
            }
            report.status.exit_code()
        }
        Err(e) => {
            let code = exit_code_for(&e);
            let report = RunReport {
                command: name.to_string(),
                parameters,
                results: json!({ "error": format!("{e:#}") }),
                elapsed_ms,
                status: Status::Error,
            };
            if cli.json {
                let _ = write_json(out, &[], &report);
            } else {
                let _ = writeln!(err, "error: {e:#}");
            }
            code
        }
    }
}

fn exit_code_for(e: &anyhow::Error) -> i32 {
    let over_limit = e
        .chain()
        .any(|c| matches!(c.downcast_ref::<rote_core::Error>(), Some(rote_core::Error::InputTooLong { .. })));
    if over_limit {
        EXIT_LIMIT
    } else {
        EXIT_USAGE
    }
}

fn write_json(out: &mut dyn Write, checks: &[Value], report: &RunReport) -> std::io::Result<()> {
    for c in checks {
        writeln!(out, "{c}")?;
    }
    writeln!(out, "{}", serde_json::to_string(report).expect("reports serialize"))
}

fn write_plain(
    out: &mut dyn Write,
    err: &mut dyn Write,
    lines: &[String],
    report: &RunReport,
) -> std::io::Result<()> {
    for line in lines {
        writeln!(out, "{line}")?;
    }
    // timing goes to stderr so stdout stays byte-stable
    writeln!(err, "{}: {} in {} ms", report.command, report.status.name(), report.elapsed_ms)
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Output> {
    let mut registry = Registry::default();
    for def in &cli.morphism_defs {
        registry.define(def)?;
    }
    let mut ctx = Context { limit: cli.limit, seed_trim: cli.seed_trim, registry, stdin };
    match &cli.command {
        Command::VerifyPaper(a) => commands::verify_paper(a),
        Command::Search(a) => commands::search(&ctx, a),
        Command::Classify(a) => commands::classify(&mut ctx, a),
        Command::Decode(a) => commands::decode(&mut ctx, a),
        Command::Decompose(a) => commands::decompose(&mut ctx, a),
        Command::Generate(a) => commands::generate(&ctx, a),
        Command::Complexity(a) => commands::complexity(&mut ctx, a),
        Command::CheckPower(a) => commands::check_power(&mut ctx, a),
    }
}

fn describe(cli: &Cli) -> (&'static str, Map<String, Value>) {
    let mut p = Map::new();
    let input = |p: &mut Map<String, Value>, a: &InputArgs| {
        if let Some(v) = &a.input {
            p.insert("input".into(), json!(v));
        }
        if a.stdin {
            p.insert("stdin".into(), json!(true));
        }
        if let Some(v) = &a.source {
            p.insert("source".into(), json!(v));
        }
        if let Some(v) = &a.word {
            p.insert("word".into(), json!(v));
        }
    };
    let name = match &cli.command {
        Command::VerifyPaper(a) => {
            if let Some(r) = a.perturb {
                p.insert("perturb".into(), json!(r));
            }
            "verify-paper"
        }
        Command::Search(a) => {
            p.insert("forbidden".into(), json!(a.forbidden));
            p.insert("target".into(), json!(a.target));
            "search"
        }
        Command::Classify(a) => {
            input(&mut p, a);
            "classify"
        }
        Command::Decode(a) => {
            p.insert("morphism".into(), json!(a.morphism));
            input(&mut p, &a.input);
            "decode"
        }
        Command::Decompose(a) => {
            p.insert("depth".into(), json!(a.depth));
            p.insert("floor".into(), json!(a.floor));
            p.insert("check_limit".into(), json!(a.check_limit));
            p.insert("seed_trim".into(), json!(cli.seed_trim));
            input(&mut p, &a.input);
            "decompose"
        }
        Command::Generate(a) => {
            match (&a.case, &a.source) {
                (_, Some(s)) => {
                    p.insert("source".into(), json!(s));
                }
                (c, None) => {
                    p.insert("case".into(), json!(c.as_deref().unwrap_or("F")));
                    p.insert("depth".into(), json!(a.depth));
                    p.insert("length".into(), json!(a.length));
                }
            }
            "generate"
        }
        Command::Complexity(a) => {
            p.insert("max_n".into(), json!(a.max_n));
            if let Some(e) = &a.expect {
                p.insert("expect".into(), json!(e));
            }
            input(&mut p, &a.input);
            "complexity"
        }
        Command::CheckPower(a) => {
            p.insert("threshold".into(), json!(a.threshold));
            p.insert("strict".into(), json!(!a.non_strict));
            input(&mut p, &a.input);
            "check-power"
        }
    };
    p.insert("limit".into(), json!(cli.limit));
    (name, p)
}
