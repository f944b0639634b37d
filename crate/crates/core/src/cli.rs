//! The `pavgen` command line. Parsing and dispatch only; the work is done by
//! the library modules.
//!
//! Exit codes: 0 success, 1 verification failure or a word outside the
//! class, 2 usage error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::generator::{count_by_ones, export_tree, GenerationConfig, Generator, NodeRecord, Traversal, TreeFormat};
use crate::oracle::{check_equivalence, check_parent_uniqueness, check_propositions, check_rules, DEFAULT_GUARD};
use crate::rules::{classify, decompose_negative_suffix, expand, rule_family, SuffixClass};
use crate::word::{occurrences, parse_word, render_ascii, PatternParam, Word};

/// Environment variable overriding the oracle guard of `verify`.
pub const GUARD_ENV: &str = "PAVGEN_GUARD";

/// Longest primitive path examined by `verify`.
const VERIFY_PRIMITIVE_LEN: usize = 16;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "pavgen",
    version,
    about = "Generate binary words with no more 0s than 1s that avoid (10)^j 1"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Pattern {
    /// Pattern parameter: the forbidden factor is (10)^j 1
    #[arg(short = 'j', long = "pattern-j")]
    j: usize,
}

impl Pattern {
    fn param(&self) -> Result<PatternParam> {
        PatternParam::new(self.j)
    }
}

#[derive(Debug, Args)]
struct Sink {
    /// Write to this file instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum WordFormat {
    Text,
    Jsonl,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Jsonl,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Order {
    Dfs,
    Bfs,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every word with exactly n ones
    Generate {
        #[command(flatten)]
        pattern: Pattern,
        /// Number of ones
        #[arg(short = 'n', long = "ones")]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: WordFormat,
        #[arg(long, value_enum, default_value = "dfs")]
        traversal: Order,
        #[command(flatten)]
        sink: Sink,
    },
    /// Print the number of words with 0, 1, ..., n ones
    Count {
        #[command(flatten)]
        pattern: Pattern,
        /// Largest number of ones
        #[arg(short = 'n', long = "ones")]
        n: usize,
        /// One "n count" row per level
        #[arg(long)]
        table: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
        #[command(flatten)]
        sink: Sink,
    },
    /// Check the generator against the brute-force oracle up to n ones
    Verify {
        #[command(flatten)]
        pattern: Pattern,
        /// Largest number of ones
        #[arg(short = 'n', long = "ones")]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
        #[command(flatten)]
        sink: Sink,
    },
    /// Describe a word and list its children
    Classify {
        word: String,
        #[command(flatten)]
        pattern: Pattern,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
        #[command(flatten)]
        sink: Sink,
    },
    /// Export the generating tree down to n ones
    Tree {
        #[command(flatten)]
        pattern: Pattern,
        /// Largest number of ones
        #[arg(short = 'n', long = "ones")]
        n: usize,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
        #[command(flatten)]
        sink: Sink,
    },
    /// Draw a word as an ASCII lattice path
    Render {
        word: String,
        #[command(flatten)]
        sink: Sink,
    },
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{text}");
            return EXIT_OK;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Error::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::InvalidPattern | Error::HOutOfRange { .. } | Error::GuardExceeded { .. } => {
            EXIT_USAGE
        }
        _ => EXIT_FAILURE,
    }
}

/// The oracle guard, from `PAVGEN_GUARD` when set to a number.
pub fn oracle_guard() -> usize {
    std::env::var(GUARD_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_GUARD)
}

fn shown(w: &Word) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        w.to_string()
    }
}

fn with_sink(sink: &Sink, out: &mut dyn Write, body: impl FnOnce(&mut dyn Write) -> Result<i32>) -> Result<i32> {
    let code = match &sink.output {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            let code = body(&mut w)?;
            w.flush()?;
            code
        }
        None => {
            let mut w = BufWriter::new(out);
            let code = body(&mut w)?;
            w.flush()?;
            code
        }
    };
    Ok(code)
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Generate { pattern, n, format, traversal, sink } => {
            let p = pattern.param()?;
            let traversal = match traversal {
                Order::Dfs => Traversal::DepthFirst,
                Order::Bfs => Traversal::BreadthFirst,
            };
            with_sink(&sink, out, |w| cmd_generate(p, n, format, traversal, w))
        }
        Command::Count { pattern, n, table, format, sink } => {
            let p = pattern.param()?;
            with_sink(&sink, out, |w| cmd_count(p, n, table, format, w))
        }
        Command::Verify { pattern, n, format, sink } => {
            let p = pattern.param()?;
            let guard = oracle_guard();
            if n > guard {
                return Err(Error::GuardExceeded { what: "oracle size n", got: n, limit: guard });
            }
            with_sink(&sink, out, |w| cmd_verify(p, n, guard, format, w))
        }
        Command::Classify { word, pattern, format, sink } => {
            let p = pattern.param()?;
            let word = parse_word(&word)?;
            with_sink(&sink, out, |w| cmd_classify(&word, p, format, w))
        }
        Command::Tree { pattern, n, format, sink } => {
            let p = pattern.param()?;
            let format = match format {
                GraphFormat::Dot => TreeFormat::Dot,
                GraphFormat::Jsonl => TreeFormat::Jsonl,
            };
            let text = export_tree(p, n, format)?;
            with_sink(&sink, out, |w| {
                w.write_all(text.as_bytes())?;
                Ok(EXIT_OK)
            })
        }
        Command::Render { word, sink } => {
            let word = parse_word(&word)?;
            with_sink(&sink, out, |w| {
                if word.is_empty() {
                    writeln!(w, "ε")?;
                } else {
                    writeln!(w, "{}", render_ascii(&word))?;
                }
                Ok(EXIT_OK)
            })
        }
    }
}

fn cmd_generate(p: PatternParam, n: usize, format: WordFormat, traversal: Traversal, w: &mut dyn Write) -> Result<i32> {
    for node in Generator::new(GenerationConfig::new(p, n).traversal(traversal)) {
        let node = node?;
        match format {
            WordFormat::Text => writeln!(w, "{}", shown(&node.word))?,
            WordFormat::Jsonl => writeln!(w, "{}", NodeRecord::from(&node).to_json_line())?,
        }
    }
    Ok(EXIT_OK)
}

fn cmd_count(p: PatternParam, n: usize, table: bool, format: ReportFormat, w: &mut dyn Write) -> Result<i32> {
    let counts = count_by_ones(p, n)?;
    match format {
        ReportFormat::Json => writeln!(w, "{}", json!({ "j": p.j(), "counts": counts }))?,
        ReportFormat::Text if table => {
            writeln!(w, "n\tcount")?;
            for (i, c) in counts.iter().enumerate() {
                writeln!(w, "{i}\t{c}")?;
            }
        }
        ReportFormat::Text => {
            let line: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
            writeln!(w, "{}", line.join(" "))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(p: PatternParam, n_max: usize, guard: usize, format: ReportFormat, w: &mut dyn Write) -> Result<i32> {
    let levels = (0..=n_max).map(|n| check_equivalence(p, n, guard)).collect::<Result<Vec<_>>>()?;
    let uniqueness = check_parent_uniqueness(p, n_max)?;
    let rules = check_rules(p, n_max)?;
    let props = check_propositions(p, (2 * n_max).min(VERIFY_PRIMITIVE_LEN))?;
    let passed = levels.iter().all(|r| r.passed()) && uniqueness.passed() && rules.passed() && props.passed();
    match format {
        ReportFormat::Text => {
            for r in &levels {
                writeln!(w, "oracle      {r}")?;
            }
            writeln!(w, "uniqueness  {uniqueness}")?;
            writeln!(w, "rules       {rules}")?;
            writeln!(w, "swap        {props}")?;
            writeln!(w, "verify: {}", if passed { "PASS" } else { "FAIL" })?;
        }
        ReportFormat::Json => {
            let report = json!({
                "j": p.j(),
                "n_max": n_max,
                "passed": passed,
                "levels": levels,
                "uniqueness": uniqueness,
                "rules": rules,
                "propositions": props,
            });
            writeln!(w, "{report}")?;
        }
    }
    Ok(if passed { EXIT_OK } else { EXIT_FAILURE })
}

fn cmd_classify(word: &Word, p: PatternParam, format: ReportFormat, w: &mut dyn Write) -> Result<i32> {
    let case = classify(word, p)?;
    let rho_at = occurrences(word, &p.rho());
    let decomposition = match case.suffix_class {
        SuffixClass::NegSuffixSpecial => Some(decompose_negative_suffix(word, p)?),
        _ => None,
    };
    let expansions = (1..=p.j()).map(|h| expand(word, h, p)).collect::<Result<Vec<_>>>()?;
    match format {
        ReportFormat::Text => {
            let under = if case.underground { ", underground" } else { "" };
            writeln!(w, "k={}, {}{under}", case.k, case.suffix_class)?;
            let positions: Vec<String> = rho_at.iter().map(|i| i.to_string()).collect();
            let positions = if positions.is_empty() { "none".to_string() } else { positions.join(" ") };
            writeln!(w, "(10)^{} at: {positions}", p.j())?;
            writeln!(w, "rule: {}", rule_family(&case))?;
            if let Some(d) = &decomposition {
                writeln!(
                    w,
                    "underground child at h=1: {:?}, {} (head={}, inner={}, blocks={})",
                    d.variant,
                    d.variant.describe(),
                    shown(&d.head),
                    shown(&d.inner),
                    d.blocks.len()
                )?;
            }
            for e in &expansions {
                let children: Vec<String> = e.children.iter().map(|c| format!("{} [{}]", c.word, c.branch)).collect();
                writeln!(w, "h={}: {}", e.h, children.join(", "))?;
            }
        }
        ReportFormat::Json => {
            let children: Vec<_> = expansions
                .iter()
                .flat_map(|e| {
                    e.children.iter().map(move |c| json!({ "h": e.h, "word": c.word, "branch": c.branch.to_string() }))
                })
                .collect();
            let report = json!({
                "word": word,
                "k": case.k,
                "suffix_class": case.suffix_class,
                "underground": case.underground,
                "rho_occurrences": rho_at,
                "rule": rule_family(&case),
                "variant": decomposition.as_ref().map(|d| format!("{:?}", d.variant)),
                "children": children,
            });
            writeln!(w, "{report}")?;
        }
    }
    Ok(EXIT_OK)
}
