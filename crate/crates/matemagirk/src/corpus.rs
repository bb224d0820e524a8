//! The problem collection: data model, file format, and the bundled
//! 27-problem dataset.
//!
//! Every problem reduces to a linear equation in one unknown, so instead
//! of storing prose each record stores a small structured model (which
//! fractions were taken, what remained, who moves at what rate) plus the
//! answers recorded in the source, where any were. Problems 25 to 27
//! come from a separately discovered parchment and carry no recorded
//! answers.
//!
//! The file format is line oriented UTF-8: `problem <id> "<title>"`
//! opens a block, `end` closes it, `#` lines are comments, and the keys
//! between depend on the problem class. See `data/anania.corpus` for the
//! bundled dataset, which doubles as the format reference.

use std::fmt::Write as _;

use thiserror::Error;

use crate::egyptian::EgyptianFraction;
use crate::exact::Rational;
use crate::units::{Quantity, Unit};

/// Parse failure, pointing at the offending line (1-based).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct CorpusError {
    pub line: usize,
    pub message: String,
}

impl CorpusError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        CorpusError {
            line,
            message: message.into(),
        }
    }
}

/// Structured statement of one problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProblemModel {
    /// Stated fractions are taken of the original total and a known
    /// remainder is left. `part_prices` optionally prices some of the
    /// parts to support a revenue sub-answer.
    FractionsOfWhole {
        fractions: Vec<Rational>,
        remainder: Quantity,
        part_prices: Vec<(Rational, Quantity)>,
    },
    /// Fractions are taken in stages, each stage out of what the
    /// previous one left.
    FractionsOfRemainder {
        stages: Vec<Vec<Rational>>,
        remainder: Quantity,
    },
    /// A chaser starts `lead` behind and closes the gap at the
    /// difference of the two daily rates.
    CatchUp {
        lead: Quantity,
        rate_leader: Rational,
        rate_chaser: Rational,
    },
    /// Money doubles, then a fixed payment is made, `rounds` times,
    /// ending at `final_amount`.
    DoublingPayment {
        rounds: u32,
        payment: Quantity,
        final_amount: Quantity,
    },
    /// A total split in proportion to integer weights.
    ProportionalShares { total: Quantity, weights: Vec<u64> },
    /// Workers (or pipes) each complete the job in `1/rate` hours.
    CombinedRates { rates: Vec<Rational> },
    /// So many containers of so much each, consumed in equal portions.
    UnitAggregation {
        containers: u64,
        per_container: u64,
        per_consumer: u64,
    },
    /// The unknown plus stated fractions of itself reaches a target.
    SelfReferentialSum {
        self_fractions: Vec<Rational>,
        target: Quantity,
    },
}

impl ProblemModel {
    pub fn class_name(&self) -> &'static str {
        match self {
            ProblemModel::FractionsOfWhole { .. } => "fractions-of-whole",
            ProblemModel::FractionsOfRemainder { .. } => "fractions-of-remainder",
            ProblemModel::CatchUp { .. } => "catch-up",
            ProblemModel::DoublingPayment { .. } => "doubling-payment",
            ProblemModel::ProportionalShares { .. } => "proportional-shares",
            ProblemModel::CombinedRates { .. } => "combined-rates",
            ProblemModel::UnitAggregation { .. } => "unit-aggregation",
            ProblemModel::SelfReferentialSum { .. } => "self-referential-sum",
        }
    }
}

/// An answer as recorded in the source: either a plain quantity or an
/// Egyptian-fraction spelling with its unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecordedAnswer {
    Quantity(Quantity),
    Egyptian { value: EgyptianFraction, unit: Unit },
}

impl RecordedAnswer {
    /// The exact rational the recorded answer denotes.
    pub fn value(&self) -> Rational {
        match self {
            RecordedAnswer::Quantity(q) => q.value.clone(),
            RecordedAnswer::Egyptian { value, .. } => value.value(),
        }
    }

    pub fn unit(&self) -> Unit {
        match self {
            RecordedAnswer::Quantity(q) => q.unit,
            RecordedAnswer::Egyptian { unit, .. } => *unit,
        }
    }
}

impl std::fmt::Display for RecordedAnswer {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RecordedAnswer::Quantity(q) => write!(f, "{q}"),
            RecordedAnswer::Egyptian { value, unit } => write!(f, "{value} {unit}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Problem {
    pub id: u32,
    pub title: String,
    pub model: ProblemModel,
    pub recorded: Vec<RecordedAnswer>,
    /// Source oddity worth preserving (mixed units, wording slips).
    pub note: Option<String>,
    /// Inert documentation tags: people, places.
    pub meta: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    pub problems: Vec<Problem>,
}

const BUNDLED: &str = include_str!("../data/anania.corpus");

impl Corpus {
    pub fn parse(text: &str) -> Result<Self, CorpusError> {
        let mut parser = Parser {
            lines: text.lines().enumerate().peekable(),
        };
        let mut problems: Vec<Problem> = Vec::new();
        while let Some((line, content)) = parser.next_content_line() {
            let problem = parser.parse_problem(line, content)?;
            if problems.iter().any(|p| p.id == problem.id) {
                return Err(CorpusError::new(
                    line,
                    format!("duplicate problem id {}", problem.id),
                ));
            }
            problems.push(problem);
        }
        Ok(Corpus { problems })
    }

    /// The dataset shipped with the crate: all 27 problems, answers
    /// recorded for 1 to 24.
    pub fn bundled() -> Result<Self, CorpusError> {
        Self::parse(BUNDLED)
    }

    pub fn get(&self, id: u32) -> Option<&Problem> {
        self.problems.iter().find(|p| p.id == id)
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (i, problem) in self.problems.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            serialize_problem(problem, &mut out);
        }
        out
    }
}

fn serialize_problem(p: &Problem, out: &mut String) {
    let _ = writeln!(out, "problem {} \"{}\"", p.id, p.title);
    let _ = writeln!(out, "  class {}", p.model.class_name());
    match &p.model {
        ProblemModel::FractionsOfWhole {
            fractions,
            remainder,
            part_prices,
        } => {
            for f in fractions {
                let _ = writeln!(out, "  fraction {f}");
            }
            let _ = writeln!(out, "  remainder {remainder}");
            for (f, price) in part_prices {
                let _ = writeln!(out, "  price {f} {price}");
            }
        }
        ProblemModel::FractionsOfRemainder { stages, remainder } => {
            for stage in stages {
                let joined: Vec<String> = stage.iter().map(Rational::to_string).collect();
                let _ = writeln!(out, "  stage {}", joined.join(","));
            }
            let _ = writeln!(out, "  remainder {remainder}");
        }
        ProblemModel::CatchUp {
            lead,
            rate_leader,
            rate_chaser,
        } => {
            let _ = writeln!(out, "  lead {lead}");
            let _ = writeln!(out, "  rate-leader {rate_leader}");
            let _ = writeln!(out, "  rate-chaser {rate_chaser}");
        }
        ProblemModel::DoublingPayment {
            rounds,
            payment,
            final_amount,
        } => {
            let _ = writeln!(out, "  rounds {rounds}");
            let _ = writeln!(out, "  payment {payment}");
            let _ = writeln!(out, "  final {final_amount}");
        }
        ProblemModel::ProportionalShares { total, weights } => {
            let _ = writeln!(out, "  total {total}");
            for w in weights {
                let _ = writeln!(out, "  weight {w}");
            }
        }
        ProblemModel::CombinedRates { rates } => {
            for r in rates {
                let _ = writeln!(out, "  rate {r}");
            }
        }
        ProblemModel::UnitAggregation {
            containers,
            per_container,
            per_consumer,
        } => {
            let _ = writeln!(out, "  containers {containers}");
            let _ = writeln!(out, "  per-container {per_container}");
            let _ = writeln!(out, "  per-consumer {per_consumer}");
        }
        ProblemModel::SelfReferentialSum {
            self_fractions,
            target,
        } => {
            for f in self_fractions {
                let _ = writeln!(out, "  self-fraction {f}");
            }
            let _ = writeln!(out, "  target {target}");
        }
    }
    for answer in &p.recorded {
        match answer {
            RecordedAnswer::Quantity(q) => {
                let _ = writeln!(out, "  answer {q}");
            }
            RecordedAnswer::Egyptian { value, unit } => {
                let _ = writeln!(out, "  answer-egyptian \"{value}\" {unit}");
            }
        }
    }
    if let Some(note) = &p.note {
        let _ = writeln!(out, "  note \"{note}\"");
    }
    for (key, value) in &p.meta {
        let _ = writeln!(out, "  meta {key} \"{value}\"");
    }
    out.push_str("end\n");
}

struct Parser<'a> {
    lines: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
}

impl<'a> Parser<'a> {
    /// Next line that is neither blank nor a comment, as (1-based line
    /// number, trimmed content).
    fn next_content_line(&mut self) -> Option<(usize, &'a str)> {
        for (idx, raw) in self.lines.by_ref() {
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            return Some((idx + 1, trimmed));
        }
        None
    }

    fn parse_problem(&mut self, header_line: usize, header: &'a str) -> Result<Problem, CorpusError> {
        let rest = header.strip_prefix("problem").ok_or_else(|| {
            CorpusError::new(
                header_line,
                format!("expected `problem <id> \"<title>\"`, found `{header}`"),
            )
        })?;
        let rest = rest.trim_start();
        let (id_token, rest) = split_token(rest);
        let id: u32 = id_token
            .parse()
            .ok()
            .filter(|id| *id >= 1)
            .ok_or_else(|| {
                CorpusError::new(header_line, format!("invalid problem id `{id_token}`"))
            })?;
        let (title, tail) = parse_quoted(rest.trim_start(), header_line)?;
        expect_empty(tail, header_line)?;

        let (class_line, class_content) = self.next_content_line().ok_or_else(|| {
            CorpusError::new(header_line, "problem block is missing its `class` line")
        })?;
        let (class_key, class_rest) = split_token(class_content);
        if class_key != "class" {
            return Err(CorpusError::new(
                class_line,
                format!("expected `class <name>` after the problem header, found `{class_key}`"),
            ));
        }
        let class = class_rest.trim();
        let mut builder = ModelBuilder::for_class(class, class_line)?;

        let mut recorded = Vec::new();
        let mut note = None;
        let mut meta = Vec::new();
        loop {
            let (line, content) = self.next_content_line().ok_or_else(|| {
                CorpusError::new(header_line, format!("problem {id} has no `end`"))
            })?;
            if content == "end" {
                break;
            }
            let (key, rest) = split_token(content);
            let rest = rest.trim();
            match key {
                "answer" => {
                    recorded.push(RecordedAnswer::Quantity(parse_quantity(rest, line)?));
                }
                "answer-egyptian" => {
                    let (text, tail) = parse_quoted(rest, line)?;
                    let value: EgyptianFraction = text.parse().map_err(|e| {
                        CorpusError::new(line, format!("bad egyptian fraction: {e}"))
                    })?;
                    let unit = parse_unit(tail.trim(), line)?;
                    recorded.push(RecordedAnswer::Egyptian { value, unit });
                }
                "note" => {
                    if note.is_some() {
                        return Err(CorpusError::new(line, "note given twice"));
                    }
                    let (text, tail) = parse_quoted(rest, line)?;
                    expect_empty(tail, line)?;
                    note = Some(text);
                }
                "meta" => {
                    let (meta_key, meta_rest) = split_token(rest);
                    let (value, tail) = parse_quoted(meta_rest.trim_start(), line)?;
                    expect_empty(tail, line)?;
                    meta.push((meta_key.to_string(), value));
                }
                _ => builder.take(key, rest, line)?,
            }
        }
        let model = builder.finish(header_line, id)?;
        Ok(Problem {
            id,
            title,
            model,
            recorded,
            note,
            meta,
        })
    }
}

fn split_token(s: &str) -> (&str, &str) {
    match s.split_once(char::is_whitespace) {
        Some((tok, rest)) => (tok, rest),
        None => (s, ""),
    }
}

fn expect_empty(tail: &str, line: usize) -> Result<(), CorpusError> {
    if tail.trim().is_empty() {
        Ok(())
    } else {
        Err(CorpusError::new(
            line,
            format!("unexpected trailing text `{}`", tail.trim()),
        ))
    }
}

/// Reads a `"…"` literal (no escapes) and returns the content and what
/// follows the closing quote.
fn parse_quoted(s: &str, line: usize) -> Result<(String, &str), CorpusError> {
    let rest = s.strip_prefix('"').ok_or_else(|| {
        CorpusError::new(line, format!("expected a quoted string, found `{s}`"))
    })?;
    let close = rest
        .find('"')
        .ok_or_else(|| CorpusError::new(line, "unterminated quoted string"))?;
    Ok((rest[..close].to_string(), &rest[close + 1..]))
}

fn parse_rational(token: &str, line: usize) -> Result<Rational, CorpusError> {
    token
        .parse()
        .map_err(|e| CorpusError::new(line, format!("bad number `{token}`: {e}")))
}

/// A fraction that must lie strictly between 0 and 1.
fn parse_proper_fraction(token: &str, line: usize) -> Result<Rational, CorpusError> {
    let f = parse_rational(token, line)?;
    if !f.is_positive() || f >= Rational::one() {
        return Err(CorpusError::new(
            line,
            format!("fraction {f} is not strictly between 0 and 1"),
        ));
    }
    Ok(f)
}

fn parse_unit(token: &str, line: usize) -> Result<Unit, CorpusError> {
    token
        .parse()
        .map_err(|_| CorpusError::new(line, format!("unknown unit `{token}`")))
}

/// `<value> <unit>` with a nonnegative value.
fn parse_quantity(rest: &str, line: usize) -> Result<Quantity, CorpusError> {
    let mut parts = rest.split_whitespace();
    let (value, unit) = match (parts.next(), parts.next(), parts.next()) {
        (Some(v), Some(u), None) => (v, u),
        _ => {
            return Err(CorpusError::new(
                line,
                format!("expected `<value> <unit>`, found `{rest}`"),
            ))
        }
    };
    let value = parse_rational(value, line)?;
    if value.is_negative() {
        return Err(CorpusError::new(line, format!("negative quantity {value}")));
    }
    Ok(Quantity::new(value, parse_unit(unit, line)?))
}

fn parse_integer(token: &str, line: usize) -> Result<u64, CorpusError> {
    token
        .parse()
        .map_err(|_| CorpusError::new(line, format!("bad integer `{token}`")))
}

/// Accumulates class-specific keys, then checks completeness.
struct ModelBuilder {
    class: Class,
    fractions: Vec<Rational>,
    stages: Vec<Vec<Rational>>,
    prices: Vec<(Rational, Quantity)>,
    weights: Vec<u64>,
    rates: Vec<Rational>,
    quantities: Vec<(String, Quantity)>,
    integers: Vec<(String, u64)>,
    rationals: Vec<(String, Rational)>,
}

#[derive(Clone, Copy, PartialEq)]
enum Class {
    Whole,
    Remainder,
    CatchUp,
    Doubling,
    Shares,
    Rates,
    Aggregation,
    SelfSum,
}

impl ModelBuilder {
    fn for_class(name: &str, line: usize) -> Result<Self, CorpusError> {
        let class = match name {
            "fractions-of-whole" => Class::Whole,
            "fractions-of-remainder" => Class::Remainder,
            "catch-up" => Class::CatchUp,
            "doubling-payment" => Class::Doubling,
            "proportional-shares" => Class::Shares,
            "combined-rates" => Class::Rates,
            "unit-aggregation" => Class::Aggregation,
            "self-referential-sum" => Class::SelfSum,
            other => {
                return Err(CorpusError::new(line, format!("unknown class `{other}`")))
            }
        };
        Ok(ModelBuilder {
            class,
            fractions: Vec::new(),
            stages: Vec::new(),
            prices: Vec::new(),
            weights: Vec::new(),
            rates: Vec::new(),
            quantities: Vec::new(),
            integers: Vec::new(),
            rationals: Vec::new(),
        })
    }

    fn allowed(&self, key: &str) -> bool {
        let keys: &[&str] = match self.class {
            Class::Whole => &["fraction", "remainder", "price"],
            Class::Remainder => &["stage", "remainder"],
            Class::CatchUp => &["lead", "rate-leader", "rate-chaser"],
            Class::Doubling => &["rounds", "payment", "final"],
            Class::Shares => &["total", "weight"],
            Class::Rates => &["rate"],
            Class::Aggregation => &["containers", "per-container", "per-consumer"],
            Class::SelfSum => &["self-fraction", "target"],
        };
        keys.contains(&key)
    }

    fn take(&mut self, key: &str, rest: &str, line: usize) -> Result<(), CorpusError> {
        if !self.allowed(key) {
            return Err(CorpusError::new(
                line,
                format!("key `{key}` is not valid here"),
            ));
        }
        match key {
            "fraction" | "self-fraction" => {
                self.fractions.push(parse_proper_fraction(rest, line)?);
            }
            "stage" => {
                let stage: Vec<Rational> = rest
                    .split(',')
                    .map(|tok| parse_proper_fraction(tok.trim(), line))
                    .collect::<Result<_, _>>()?;
                let levy = stage
                    .iter()
                    .fold(Rational::zero(), |acc, f| acc + f.clone());
                if levy >= Rational::one() {
                    return Err(CorpusError::new(
                        line,
                        format!("stage levies {levy}, leaving nothing"),
                    ));
                }
                self.stages.push(stage);
            }
            "price" => {
                let (fraction, rest) = split_token(rest);
                let fraction = parse_proper_fraction(fraction, line)?;
                let price = parse_quantity(rest.trim(), line)?;
                self.prices.push((fraction, price));
            }
            "weight" => {
                let w = parse_integer(rest, line)?;
                if w == 0 {
                    return Err(CorpusError::new(line, "weight must be positive"));
                }
                self.weights.push(w);
            }
            "rate" => {
                let r = parse_rational(rest, line)?;
                if !r.is_positive() {
                    return Err(CorpusError::new(line, format!("rate {r} must be positive")));
                }
                self.rates.push(r);
            }
            "remainder" | "lead" | "payment" | "final" | "total" | "target" => {
                self.put_quantity(key, parse_quantity(rest, line)?, line)?;
            }
            "rounds" | "containers" | "per-container" | "per-consumer" => {
                self.put_integer(key, parse_integer(rest, line)?, line)?;
            }
            "rate-leader" | "rate-chaser" => {
                let r = parse_rational(rest, line)?;
                if !r.is_positive() {
                    return Err(CorpusError::new(line, format!("rate {r} must be positive")));
                }
                self.put_rational(key, r, line)?;
            }
            _ => unreachable!("allowed() filters keys"),
        }
        Ok(())
    }

    fn put_quantity(&mut self, key: &str, q: Quantity, line: usize) -> Result<(), CorpusError> {
        if self.quantities.iter().any(|(k, _)| k == key) {
            return Err(CorpusError::new(line, format!("`{key}` given twice")));
        }
        self.quantities.push((key.to_string(), q));
        Ok(())
    }

    fn put_integer(&mut self, key: &str, n: u64, line: usize) -> Result<(), CorpusError> {
        if self.integers.iter().any(|(k, _)| k == key) {
            return Err(CorpusError::new(line, format!("`{key}` given twice")));
        }
        self.integers.push((key.to_string(), n));
        Ok(())
    }

    fn put_rational(&mut self, key: &str, r: Rational, line: usize) -> Result<(), CorpusError> {
        if self.rationals.iter().any(|(k, _)| k == key) {
            return Err(CorpusError::new(line, format!("`{key}` given twice")));
        }
        self.rationals.push((key.to_string(), r));
        Ok(())
    }

    fn quantity(&self, key: &str, line: usize, id: u32) -> Result<Quantity, CorpusError> {
        self.quantities
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, q)| q.clone())
            .ok_or_else(|| CorpusError::new(line, format!("problem {id} is missing `{key}`")))
    }

    fn integer(&self, key: &str, line: usize, id: u32) -> Result<u64, CorpusError> {
        self.integers
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, n)| *n)
            .ok_or_else(|| CorpusError::new(line, format!("problem {id} is missing `{key}`")))
    }

    fn rational(&self, key: &str, line: usize, id: u32) -> Result<Rational, CorpusError> {
        self.rationals
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, r)| r.clone())
            .ok_or_else(|| CorpusError::new(line, format!("problem {id} is missing `{key}`")))
    }

    fn require_list<T>(list: Vec<T>, what: &str, line: usize, id: u32) -> Result<Vec<T>, CorpusError> {
        if list.is_empty() {
            return Err(CorpusError::new(
                line,
                format!("problem {id} needs at least one `{what}`"),
            ));
        }
        Ok(list)
    }

    fn finish(self, line: usize, id: u32) -> Result<ProblemModel, CorpusError> {
        Ok(match self.class {
            Class::Whole => ProblemModel::FractionsOfWhole {
                remainder: self.quantity("remainder", line, id)?,
                part_prices: self.prices,
                fractions: Self::require_list(self.fractions, "fraction", line, id)?,
            },
            Class::Remainder => ProblemModel::FractionsOfRemainder {
                remainder: self.quantity("remainder", line, id)?,
                stages: Self::require_list(self.stages, "stage", line, id)?,
            },
            Class::CatchUp => ProblemModel::CatchUp {
                lead: self.quantity("lead", line, id)?,
                rate_leader: self.rational("rate-leader", line, id)?,
                rate_chaser: self.rational("rate-chaser", line, id)?,
            },
            Class::Doubling => ProblemModel::DoublingPayment {
                rounds: u32::try_from(self.integer("rounds", line, id)?).map_err(|_| {
                    CorpusError::new(line, format!("problem {id}: rounds is too large"))
                })?,
                payment: self.quantity("payment", line, id)?,
                final_amount: self.quantity("final", line, id)?,
            },
            Class::Shares => ProblemModel::ProportionalShares {
                total: self.quantity("total", line, id)?,
                weights: Self::require_list(self.weights, "weight", line, id)?,
            },
            Class::Rates => ProblemModel::CombinedRates {
                rates: Self::require_list(self.rates, "rate", line, id)?,
            },
            Class::Aggregation => ProblemModel::UnitAggregation {
                containers: self.integer("containers", line, id)?,
                per_container: self.integer("per-container", line, id)?,
                per_consumer: self.integer("per-consumer", line, id)?,
            },
            Class::SelfSum => ProblemModel::SelfReferentialSum {
                target: self.quantity("target", line, id)?,
                self_fractions: Self::require_list(self.fractions, "self-fraction", line, id)?,
            },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn bundled_corpus_loads() {
        let corpus = Corpus::bundled().unwrap();
        assert_eq!(corpus.problems.len(), 27);
        let mut ids: Vec<u32> = corpus.problems.iter().map(|p| p.id).collect();
        ids.sort_unstable();
        assert_eq!(ids, (1..=27).collect::<Vec<u32>>());
        for problem in &corpus.problems {
            let has_answers = !problem.recorded.is_empty();
            assert_eq!(has_answers, problem.id <= 24, "problem {}", problem.id);
        }
    }

    #[test]
    fn bundled_model_spot_checks() {
        let corpus = Corpus::bundled().unwrap();

        match &corpus.get(1).unwrap().model {
            ProblemModel::FractionsOfWhole {
                fractions,
                remainder,
                part_prices,
            } => {
                assert_eq!(fractions, &[rat("1/2"), rat("1/4"), rat("1/11")]);
                assert_eq!(remainder, &Quantity::count(rat("280")));
                assert!(part_prices.is_empty());
            }
            other => panic!("problem 1: unexpected {}", other.class_name()),
        }

        match &corpus.get(2).unwrap().model {
            ProblemModel::FractionsOfWhole { part_prices, .. } => {
                assert_eq!(
                    part_prices,
                    &[
                        (rat("1/2"), Quantity::new(rat("50"), Unit::Dram)),
                        (rat("1/4"), Quantity::new(rat("70"), Unit::Dram)),
                        (rat("1/12"), Quantity::new(rat("50"), Unit::Dram)),
                    ]
                );
            }
            other => panic!("problem 2: unexpected {}", other.class_name()),
        }

        for (id, expected_stages) in [
            (11, vec![vec![rat("1/2"), rat("1/3")]; 3]),
            (13, vec![vec![rat("1/2"), rat("1/4")]; 3]),
            (
                17,
                vec![vec![rat("1/2")], vec![rat("1/5")], vec![rat("1/8")], vec![rat("1/7")]],
            ),
            (
                21,
                [2, 7, 8, 14, 13, 9, 16, 20]
                    .iter()
                    .map(|d| vec![Rational::ratio(1, *d)])
                    .collect(),
            ),
        ] {
            match &corpus.get(id).unwrap().model {
                ProblemModel::FractionsOfRemainder { stages, .. } => {
                    assert_eq!(stages, &expected_stages, "problem {id}")
                }
                other => panic!("problem {id}: unexpected {}", other.class_name()),
            }
        }

        assert_eq!(
            corpus.get(8).unwrap().model,
            ProblemModel::CatchUp {
                lead: Quantity::new(rat("750"), Unit::Mile),
                rate_leader: rat("50"),
                rate_chaser: rat("80"),
            }
        );
        assert_eq!(
            corpus.get(16).unwrap().model,
            ProblemModel::CatchUp {
                lead: Quantity::count(rat("5460")),
                rate_leader: rat("140"),
                rate_chaser: rat("218"),
            }
        );
        assert_eq!(
            corpus.get(19).unwrap().model,
            ProblemModel::DoublingPayment {
                rounds: 3,
                payment: Quantity::new(rat("25"), Unit::Dahekan),
                final_amount: Quantity::new(rat("0"), Unit::Dahekan),
            }
        );
        assert_eq!(
            corpus.get(23).unwrap().model,
            ProblemModel::UnitAggregation {
                containers: 200,
                per_container: 414_720,
                per_consumer: 80,
            }
        );
        assert_eq!(
            corpus.get(24).unwrap().model,
            ProblemModel::CombinedRates {
                rates: vec![rat("1"), rat("1/2"), rat("1/3")],
            }
        );
        assert_eq!(
            corpus.get(26).unwrap().model,
            ProblemModel::ProportionalShares {
                total: Quantity::new(rat("500"), Unit::Dahekan),
                weights: vec![2, 1, 1],
            }
        );
        assert_eq!(
            corpus.get(27).unwrap().model,
            ProblemModel::SelfReferentialSum {
                self_fractions: vec![rat("1/14"), rat("1/4")],
                target: Quantity::new(rat("24"), Unit::Hour),
            }
        );
    }

    #[test]
    fn twenty_two_lists_ten_egyptian_answers() {
        let corpus = Corpus::bundled().unwrap();
        let p22 = corpus.get(22).unwrap();
        assert_eq!(p22.recorded.len(), 10);
        for (k, answer) in (1..=10).zip(&p22.recorded) {
            match answer {
                RecordedAnswer::Egyptian { value, unit } => {
                    assert_eq!(*unit, Unit::Jug);
                    assert_eq!(value.value(), Rational::ratio(k * 100, 55), "share {k}");
                }
                other => panic!("share {k}: expected egyptian answer, got {other}"),
            }
        }
    }

    #[test]
    fn parse_a_minimal_problem() {
        let text = r#"
# a comment
problem 1 "Cavalry"
  class fractions-of-whole
  fraction 1/2
  fraction 1/4
  fraction 1/11
  remainder 280 count
  answer 1760 count
end
"#;
        let corpus = Corpus::parse(text).unwrap();
        assert_eq!(corpus.problems.len(), 1);
        let p = &corpus.problems[0];
        assert_eq!(p.title, "Cavalry");
        assert_eq!(p.recorded.len(), 1);
        assert_eq!(p.recorded[0].value(), rat("1760"));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let cases: [(&str, usize, &str); 8] = [
            ("problem 1 \"x\"\n  class sorcery\nend\n", 2, "unknown class"),
            (
                "problem 1 \"x\"\n  class fractions-of-whole\n  fraction 3/2\n  remainder 1 count\nend\n",
                3,
                "not strictly between",
            ),
            (
                "problem 1 \"x\"\n  class fractions-of-whole\n  fraction 1/2\n  remainder 280\nend\n",
                4,
                "expected `<value> <unit>`",
            ),
            (
                "problem 1 \"x\"\n  class fractions-of-whole\n  fraction 1/2\n  remainder 280 parsecs\nend\n",
                4,
                "unknown unit",
            ),
            (
                "problem 1 \"x\"\n  class catch-up\n  fraction 1/2\nend\n",
                3,
                "not valid here",
            ),
            (
                "problem 1 \"x\"\n  class fractions-of-remainder\n  stage 1/2,1/2\n  remainder 1 count\nend\n",
                3,
                "leaving nothing",
            ),
            ("problem one \"x\"\nend\n", 1, "invalid problem id"),
            (
                "problem 1 \"x\"\n  class combined-rates\n  rate 1/2\nend\nproblem 1 \"y\"\n  class combined-rates\n  rate 1/3\nend\n",
                5,
                "duplicate problem id",
            ),
        ];
        for (text, line, needle) in cases {
            let err = Corpus::parse(text).unwrap_err();
            assert_eq!(err.line, line, "{text}");
            assert!(
                err.message.contains(needle),
                "`{}` should mention `{needle}`",
                err.message
            );
        }
    }

    #[test]
    fn missing_pieces_are_reported() {
        assert!(Corpus::parse("problem 1 \"x\"\n").unwrap_err().message.contains("class"));
        assert!(Corpus::parse("problem 1 \"x\"\n  class combined-rates\n  rate 1/2\n")
            .unwrap_err()
            .message
            .contains("no `end`"));
        let err = Corpus::parse("problem 1 \"x\"\n  class catch-up\n  lead 5 mile\nend\n")
            .unwrap_err();
        assert!(err.message.contains("missing `rate-leader`"));
    }

    #[test]
    fn serialize_round_trips_the_bundled_corpus() {
        let corpus = Corpus::bundled().unwrap();
        let text = corpus.serialize();
        let back = Corpus::parse(&text).unwrap();
        assert_eq!(back, corpus);
    }

    #[test]
    fn serialize_edge_cases() {
        assert_eq!(Corpus { problems: vec![] }.serialize(), "");

        let one = Corpus {
            problems: vec![Problem {
                id: 5,
                title: "Single".to_string(),
                model: ProblemModel::CombinedRates {
                    rates: vec![rat("1/2")],
                },
                recorded: vec![RecordedAnswer::Quantity(Quantity::new(
                    rat("2"),
                    Unit::Hour,
                ))],
                note: Some("just one".to_string()),
                meta: vec![("kind".to_string(), "test".to_string())],
            }],
        };
        let text = one.serialize();
        assert!(text.starts_with("problem 5 \"Single\"\n"));
        assert!(text.ends_with("end\n"));
        assert_eq!(Corpus::parse(&text).unwrap(), one);
    }
}
