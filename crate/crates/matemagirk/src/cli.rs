//! The `matemagirk` command line: solving and verifying the problem
//! collection, printing the arithmetic tables, converting numerals,
//! decomposing fractions, and playing the feast puzzles.
//!
//! [`run`] takes its three streams as arguments, so the entire
//! surface, interactive puzzles included, can be driven byte for byte
//! from tests. The binary in `main.rs` is a thin shim over it.
//!
//! Exit codes: 0 on success, 1 when `verify` finds unexpected
//! discrepancies, 2 for usage and input errors, 3 when a problem
//! cannot be solved at all.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::corpus::{Corpus, RecordedAnswer};
use crate::egyptian::EgyptianFraction;
use crate::exact::{BigInt, Rational, Tie};
use crate::numerals::{self, DecodeMode, NumeralSystem};
use crate::solver::{self, puzzles, VerificationOutcome};
use crate::tables::{self, RenderFormat, TableKind};

#[derive(Parser)]
#[command(
    name = "matemagirk",
    version,
    about = "Anania Shirakatsi's seventh-century arithmetic, runnable"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one problem and print its values and, on request, the
    /// worked derivation
    Solve {
        /// Problem id
        id: u32,
        /// Read problems from this file instead of the bundled set
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Print the derivation steps
        #[arg(long)]
        trace: bool,
        /// Also spell integral values in Armenian numerals
        #[arg(long, value_enum)]
        numerals: Option<SystemArg>,
    },
    /// Solve every problem and compare against the recorded answers
    Verify {
        /// Read problems from this file instead of the bundled set
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Exit 0 only if exactly these ids disagree
        #[arg(long, value_delimiter = ',', value_name = "IDS")]
        allow_discrepancies: Option<Vec<u32>>,
    },
    /// Print one of the reckoning tables
    Tables {
        #[arg(value_enum)]
        table: TableArg,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Render the numbers in Armenian numerals
        #[arg(long, value_enum)]
        numerals: Option<SystemArg>,
        /// How the division table rounds halves
        #[arg(long, value_enum, default_value_t = TieArg::HalfUp)]
        tie: TieArg,
        /// Extend the multiplication table with ten as a second factor
        #[arg(long)]
        b10: bool,
    },
    /// Convert between numbers and Armenian numerals
    Numeral {
        #[arg(value_enum)]
        action: CodecAction,
        #[arg(long, value_enum)]
        system: SystemArg,
        /// Accept only canonically written numerals when decoding
        #[arg(long)]
        strict: bool,
        /// A number to encode, or numeral text to decode
        input: String,
    },
    /// Decompose a fraction into unit fractions, or check a spelling
    Egyptian {
        #[arg(value_enum)]
        action: EgyptianAction,
        /// The value, as p/q
        fraction: String,
        /// For check: the unit-fraction spelling to compare
        text: Option<String>,
    },
    /// Play one of the after-dinner puzzles
    Puzzle {
        #[arg(value_enum)]
        which: PuzzleArg,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SystemArg {
    Traditional,
    Anania,
}

impl From<SystemArg> for NumeralSystem {
    fn from(arg: SystemArg) -> Self {
        match arg {
            SystemArg::Traditional => NumeralSystem::Traditional,
            SystemArg::Anania => NumeralSystem::Anania,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TieArg {
    HalfUp,
    HalfDown,
}

impl From<TieArg> for Tie {
    fn from(arg: TieArg) -> Self {
        match arg {
            TieArg::HalfUp => Tie::HalfUp,
            TieArg::HalfDown => Tie::HalfDown,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TableArg {
    Addition,
    Multiplication,
    Subtraction,
    Division,
    Parity,
}

#[derive(Clone, Copy, ValueEnum)]
enum CodecAction {
    Encode,
    Decode,
}

#[derive(Clone, Copy, ValueEnum)]
enum EgyptianAction {
    Decompose,
    Check,
}

#[derive(Clone, Copy, ValueEnum)]
enum PuzzleArg {
    Dinner,
    Tourists,
    Pouch,
    Eggs,
    Wineskins,
}

/// Parses `argv` and runs the requested command against the given
/// streams, returning the process exit code.
pub fn run<I, T>(
    argv: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render();
            if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
            } else {
                let _ = write!(stdout, "{rendered}");
            }
            return e.exit_code();
        }
    };
    match dispatch(cli.command, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            3
        }
    }
}

fn dispatch(
    command: Command,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> io::Result<i32> {
    match command {
        Command::Solve {
            id,
            corpus,
            trace,
            numerals,
        } => cmd_solve(stdout, stderr, id, &corpus, trace, numerals),
        Command::Verify {
            corpus,
            format,
            allow_discrepancies,
        } => cmd_verify(stdout, stderr, &corpus, format, allow_discrepancies),
        Command::Tables {
            table,
            format,
            numerals,
            tie,
            b10,
        } => cmd_tables(stdout, stderr, table, format, numerals, tie, b10),
        Command::Numeral {
            action,
            system,
            strict,
            input,
        } => cmd_numeral(stdout, stderr, action, system.into(), strict, &input),
        Command::Egyptian {
            action,
            fraction,
            text,
        } => cmd_egyptian(stdout, stderr, action, &fraction, text.as_deref()),
        Command::Puzzle { which } => cmd_puzzle(stdin, stdout, stderr, which),
    }
}

fn usage(stderr: &mut dyn Write, message: &str) -> io::Result<i32> {
    writeln!(stderr, "error: {message}")?;
    Ok(2)
}

fn load_corpus(path: &Option<PathBuf>) -> Result<Corpus, String> {
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| format!("cannot read {}: {e}", p.display()))?;
            Corpus::parse(&text).map_err(|e| e.to_string())
        }
        None => Corpus::bundled().map_err(|e| e.to_string()),
    }
}

fn cmd_solve(
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
    id: u32,
    corpus_path: &Option<PathBuf>,
    trace: bool,
    system: Option<SystemArg>,
) -> io::Result<i32> {
    let corpus = match load_corpus(corpus_path) {
        Ok(c) => c,
        Err(message) => return usage(stderr, &message),
    };
    let Some(problem) = corpus.get(id) else {
        return usage(stderr, &format!("no problem {id} in the corpus"));
    };
    let solution = match solver::solve(&problem.model) {
        Ok(s) => s,
        Err(e) => {
            writeln!(stderr, "error: problem {id} cannot be solved: {e}")?;
            return Ok(3);
        }
    };
    writeln!(stdout, "problem {}: {}", problem.id, problem.title)?;
    let labels = solver::value_labels(&problem.model);
    for (label, quantity) in labels.iter().zip(&solution.values) {
        let mut line = format!("  {label}: {quantity}");
        if let Some(note) = spelling_note(&quantity.value, system) {
            line.push_str(&format!(" ({note})"));
        }
        writeln!(stdout, "{line}")?;
    }
    if trace {
        writeln!(stdout, "derivation:")?;
        for step in &solution.derivation {
            writeln!(stdout, "  {}: {}", step.description, step.value)?;
        }
    }
    Ok(0)
}

/// An alternative spelling worth showing next to a value: the unit
/// fraction form when it is not whole, the Armenian numeral when it
/// is and a system was asked for.
fn spelling_note(value: &Rational, system: Option<SystemArg>) -> Option<String> {
    if !value.is_positive() {
        None
    } else if !value.is_integer() {
        EgyptianFraction::greedy(value).ok().map(|ef| ef.to_string())
    } else {
        let system = system?;
        numerals::encode(value.numer().clone(), system.into(), true).ok()
    }
}

/// Spellings of `value` among the bundled recorded answers that differ
/// from the greedy one, phrased for the decompose note.
fn recorded_spellings(value: &Rational, greedy: &EgyptianFraction) -> Vec<String> {
    let Ok(corpus) = Corpus::bundled() else {
        return Vec::new();
    };
    let mut seen = BTreeSet::new();
    let mut notes = Vec::new();
    for problem in &corpus.problems {
        for answer in &problem.recorded {
            if let RecordedAnswer::Egyptian { value: ef, .. } = answer {
                let spelling = ef.to_string();
                if ef.value() == *value
                    && spelling != greedy.to_string()
                    && seen.insert(spelling.clone())
                {
                    notes.push(format!("as {spelling} (problem {})", problem.id));
                }
            }
        }
    }
    notes
}

fn status_token(outcome: &VerificationOutcome) -> &'static str {
    match outcome {
        VerificationOutcome::Match => "match",
        VerificationOutcome::Discrepancy { .. } => "discrepancy",
        VerificationOutcome::NoRecordedAnswer => "no-recorded-answer",
        VerificationOutcome::Unsolvable(_) => "unsolvable",
    }
}

fn cmd_verify(
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
    corpus_path: &Option<PathBuf>,
    format: OutputFormat,
    allowed: Option<Vec<u32>>,
) -> io::Result<i32> {
    let corpus = match load_corpus(corpus_path) {
        Ok(c) => c,
        Err(message) => return usage(stderr, &message),
    };
    let report = solver::verify_corpus(&corpus);

    let mut rows: Vec<[String; 5]> = Vec::with_capacity(report.len());
    for verification in &report {
        let problem = corpus.get(verification.id).expect("report ids come from the corpus");
        let computed: Vec<String> = verification
            .computed
            .iter()
            .map(|q| match format {
                OutputFormat::Csv => q.value.to_string(),
                OutputFormat::Text => q.to_string(),
            })
            .collect();
        let recorded: Vec<String> = problem
            .recorded
            .iter()
            .map(|r| match format {
                OutputFormat::Csv => r.value().to_string(),
                OutputFormat::Text => format!("{} {}", r.value(), r.unit().name()),
            })
            .collect();
        let joiner = match format {
            OutputFormat::Csv => "|",
            OutputFormat::Text => ", ",
        };
        rows.push([
            verification.id.to_string(),
            status_token(&verification.outcome).to_string(),
            computed.join(joiner),
            recorded.join(joiner),
            if verification.non_integral {
                "non-integral".to_string()
            } else {
                String::new()
            },
        ]);
    }

    match format {
        OutputFormat::Csv => {
            writeln!(stdout, "id,status,computed,recorded,flags")?;
            for row in &rows {
                writeln!(stdout, "{}", row.join(","))?;
            }
        }
        OutputFormat::Text => {
            let header = ["id", "status", "computed", "recorded", "flags"];
            let mut widths = header.map(str::len);
            for row in &rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let print_row = |stdout: &mut dyn Write, cells: [&str; 5]| -> io::Result<()> {
                let mut line = String::new();
                for (i, (cell, width)) in cells.iter().zip(widths).enumerate() {
                    if i > 0 {
                        line.push_str("  ");
                    }
                    if i == 0 {
                        line.push_str(&" ".repeat(width - cell.chars().count()));
                        line.push_str(cell);
                    } else {
                        line.push_str(cell);
                        line.push_str(&" ".repeat(width - cell.chars().count()));
                    }
                }
                writeln!(stdout, "{}", line.trim_end())
            };
            print_row(stdout, header)?;
            for row in &rows {
                print_row(
                    stdout,
                    [&row[0], &row[1], &row[2], &row[3], &row[4]].map(String::as_str),
                )?;
            }

            let count = |wanted: &str| {
                rows.iter().filter(|r| r[1] == wanted).count()
            };
            let mut summary = format!(
                "{} matched, {} discrepant, {} without a recorded answer",
                count("match"),
                count("discrepancy"),
                count("no-recorded-answer"),
            );
            let unsolvable = count("unsolvable");
            if unsolvable > 0 {
                summary.push_str(&format!(", {unsolvable} unsolvable"));
            }
            writeln!(stdout)?;
            writeln!(stdout, "{summary}")?;
        }
    }

    if report
        .iter()
        .any(|v| matches!(v.outcome, VerificationOutcome::Unsolvable(_)))
    {
        writeln!(stderr, "error: some problems could not be solved at all")?;
        return Ok(3);
    }
    let found: BTreeSet<u32> = report
        .iter()
        .filter(|v| matches!(v.outcome, VerificationOutcome::Discrepancy { .. }))
        .map(|v| v.id)
        .collect();
    let tolerated = match allowed {
        Some(ids) => ids.into_iter().collect::<BTreeSet<u32>>() == found,
        None => found.is_empty(),
    };
    Ok(if tolerated { 0 } else { 1 })
}

fn cmd_tables(
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
    table: TableArg,
    format: OutputFormat,
    system: Option<SystemArg>,
    tie: TieArg,
    b10: bool,
) -> io::Result<i32> {
    if b10 && !matches!(table, TableArg::Multiplication) {
        return usage(stderr, "--b10 applies only to the multiplication table");
    }
    let kind = match table {
        TableArg::Addition => TableKind::Addition,
        TableArg::Multiplication => TableKind::Multiplication { include_ten: b10 },
        TableArg::Subtraction => TableKind::Subtraction,
        TableArg::Division => TableKind::Division,
        TableArg::Parity => TableKind::Parity,
    };
    let entries = tables::generate(kind, tie.into());
    let render_format = match format {
        OutputFormat::Text => RenderFormat::Text,
        OutputFormat::Csv => RenderFormat::Csv,
    };
    match tables::render(kind, &entries, render_format, system.map(Into::into)) {
        Ok(rendered) => {
            stdout.write_all(rendered.as_bytes())?;
            Ok(0)
        }
        Err(e) => usage(stderr, &e.to_string()),
    }
}

fn cmd_numeral(
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
    action: CodecAction,
    system: NumeralSystem,
    strict: bool,
    input: &str,
) -> io::Result<i32> {
    match action {
        CodecAction::Encode => {
            let value: BigInt = match input.trim().parse() {
                Ok(v) => v,
                Err(_) => return usage(stderr, &format!("not a whole number: {input}")),
            };
            match numerals::encode(value, system, true) {
                Ok(text) => {
                    writeln!(stdout, "{text}")?;
                    Ok(0)
                }
                Err(e) => usage(stderr, &e.to_string()),
            }
        }
        CodecAction::Decode => {
            let mode = if strict {
                DecodeMode::Strict
            } else {
                DecodeMode::Lenient
            };
            match numerals::decode(input.trim(), system, mode) {
                Ok(value) => {
                    writeln!(stdout, "{value}")?;
                    Ok(0)
                }
                Err(e) => usage(stderr, &e.to_string()),
            }
        }
    }
}

fn cmd_egyptian(
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
    action: EgyptianAction,
    fraction: &str,
    text: Option<&str>,
) -> io::Result<i32> {
    let value: Rational = match fraction.parse() {
        Ok(v) => v,
        Err(e) => return usage(stderr, &format!("bad fraction {fraction}: {e}")),
    };
    match action {
        EgyptianAction::Decompose => {
            if text.is_some() {
                return usage(stderr, "decompose takes only the fraction");
            }
            match EgyptianFraction::greedy(&value) {
                Ok(ef) => {
                    writeln!(stdout, "{value} = {ef}")?;
                    for spelling in recorded_spellings(&value, &ef) {
                        writeln!(
                            stdout,
                            "(the records also spell this value {spelling}, \
                             which checks equal)"
                        )?;
                    }
                    writeln!(
                        stdout,
                        "(any distinct unit fractions of equal value serve; \
                         compare spellings with `egyptian check`)"
                    )?;
                    Ok(0)
                }
                Err(e) => usage(stderr, &e.to_string()),
            }
        }
        EgyptianAction::Check => {
            let Some(text) = text else {
                return usage(stderr, "check needs a unit-fraction text to compare");
            };
            let ef: EgyptianFraction = match text.parse() {
                Ok(ef) => ef,
                Err(e) => return usage(stderr, &e.to_string()),
            };
            if ef.check(&value) {
                writeln!(stdout, "equal: {ef} = {value}")?;
            } else {
                writeln!(stdout, "not equal: {ef} = {}, not {value}", ef.value())?;
            }
            Ok(0)
        }
    }
}

/// Prompts up to three times and returns the first answer `accept`
/// takes; `None` means the attempts ran out or input ended.
fn ask<T>(
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    prompt: &str,
    retry: &str,
    mut accept: impl FnMut(&str) -> Option<T>,
) -> io::Result<Option<T>> {
    for attempt in 0..3 {
        if attempt > 0 {
            writeln!(stdout, "{retry}")?;
        }
        writeln!(stdout, "{prompt}")?;
        let mut line = String::new();
        if stdin.read_line(&mut line)? == 0 {
            return Ok(None);
        }
        if let Some(value) = accept(line.trim()) {
            return Ok(Some(value));
        }
    }
    Ok(None)
}

fn out_of_attempts(stderr: &mut dyn Write) -> io::Result<i32> {
    writeln!(stderr, "error: no usable answer after 3 attempts")?;
    Ok(2)
}

fn cmd_puzzle(
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
    which: PuzzleArg,
) -> io::Result<i32> {
    match which {
        PuzzleArg::Dinner => {
            writeln!(
                stdout,
                "think of the hour you sat down to dinner, one through twenty-four,\n\
                 and how many glasses of wine you drank, up to ninety-nine. then:\n\
                 double the hour, add 5, multiply by 5, add 10, multiply by 10,\n\
                 and add the glasses."
            )?;
            let answer = ask(
                stdin,
                stdout,
                "what number did you get?",
                "that cannot come out of the trick; the smallest honest number is 451.",
                |s| s.parse::<u64>().ok().filter(|n| *n >= 451),
            )?;
            let Some(reported) = answer else {
                return out_of_attempts(stderr);
            };
            match puzzles::dinner_decode(reported).expect("reports below 451 never get here") {
                puzzles::DinnerReading::Dinner { hour, glasses } => {
                    writeln!(
                        stdout,
                        "you sat down to dinner at hour {hour}, {glasses} glasses of wine."
                    )?;
                }
                puzzles::DinnerReading::Refusal => {
                    writeln!(
                        stdout,
                        "the host refuses to believe you: it is not possible to drink \
                         100 glasses of wine at one dinner."
                    )?;
                }
            }
            Ok(0)
        }
        PuzzleArg::Tourists => {
            writeln!(
                stdout,
                "a band of tourists met another band as large, then one half as\n\
                 large, then one quarter as large, and one traveller more; together\n\
                 they made 100."
            )?;
            let answer = ask(
                stdin,
                stdout,
                "how many were in the first band?",
                "a whole number, please.",
                |s| s.parse::<u64>().ok(),
            )?;
            let Some(guess) = answer else {
                return out_of_attempts(stderr);
            };
            if guess == puzzles::tourists() {
                writeln!(stdout, "correct: 36 + 36 + 18 + 9 + 1 = 100.")?;
            } else {
                writeln!(
                    stdout,
                    "no: the first band numbered 36, since 36 + 36 + 18 + 9 + 1 = 100."
                )?;
            }
            Ok(0)
        }
        PuzzleArg::Pouch => {
            writeln!(
                stdout,
                "hold your pouch of drams where I cannot see it. count its contents\n\
                 twice over, double that, add the contents once more, then double\n\
                 the lot."
            )?;
            let answer = ask(
                stdin,
                stdout,
                "what did you reach?",
                "a number, please; halves are allowed.",
                |s| s.parse::<Rational>().ok(),
            )?;
            let Some(reported) = answer else {
                return out_of_attempts(stderr);
            };
            let drams = puzzles::pouch_decode(&reported);
            writeln!(stdout, "the pouch holds {drams} drams.")?;
            Ok(0)
        }
        PuzzleArg::Eggs => {
            writeln!(
                stdout,
                "a hundred courtyards, in each a hundred hens, and every hen laid\n\
                 one egg on each of the 365 days of the year."
            )?;
            let answer = ask(
                stdin,
                stdout,
                "how many eggs in all?",
                "a whole number, please.",
                |s| s.parse::<u64>().ok(),
            )?;
            let Some(guess) = answer else {
                return out_of_attempts(stderr);
            };
            let total = puzzles::eggs_grand_total();
            if guess == total {
                writeln!(stdout, "correct: {} of eggs.", puzzles::myriads(total))?;
            } else {
                writeln!(
                    stdout,
                    "the year brings {total} eggs, {} of them.",
                    puzzles::myriads(total)
                )?;
            }
            Ok(0)
        }
        PuzzleArg::Wineskins => {
            writeln!(
                stdout,
                "sixty wineskins are priced at five skins for two drams."
            )?;
            let answer = ask(
                stdin,
                stdout,
                "how many drams should the sale bring?",
                "a whole number of drams, please.",
                |s| s.parse::<u64>().ok(),
            )?;
            let Some(guess) = answer else {
                return out_of_attempts(stderr);
            };
            let sale = puzzles::wineskins();
            if Rational::from_integer(guess) == sale.fair.value {
                writeln!(stdout, "correct: the fair sale brings {}.", sale.fair)?;
            } else {
                writeln!(stdout, "sold fairly they bring {}.", sale.fair)?;
            }
            writeln!(
                stdout,
                "but split into thirty skins sold three for a dram and thirty sold\n\
                 two for a dram, the same wine brings 10 + 15 = {}.",
                sale.trick
            )?;
            Ok(0)
        }
    }
}
