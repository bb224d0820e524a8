//! Reconstructions of the manuscript's reckoning tables.
//!
//! Five kinds survive: addition, multiplication, subtraction, division,
//! and a parity listing. Each is generated from its defining rule over
//! scaled digits (a digit 1..9 times a power of ten), not stored, so the
//! counts and the exact values are checkable. Division is the one table
//! that rounds: it lists the nearest integer to 6000/n, and since no
//! surviving entry decides what happens at an exact half, the tie rule
//! is injectable.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::exact::{BigInt, Rational, Tie};
use crate::numerals::{self, NumeralError, NumeralSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    Addition,
    /// The manuscript's multiplication rows run b = 1..9; a variant
    /// extends the right factor to 10.
    Multiplication { include_ten: bool },
    Subtraction,
    Division,
    Parity,
}

impl TableKind {
    /// Column names, operands first, then the result and optional label.
    fn columns(self) -> &'static [&'static str] {
        match self {
            TableKind::Addition => &["a", "b", "sum"],
            TableKind::Multiplication { .. } => &["a", "b", "product"],
            TableKind::Subtraction => &["minuend", "subtrahend", "difference"],
            TableKind::Division => &["divisor", "quotient"],
            TableKind::Parity => &["value", "parity"],
        }
    }
}

/// Parity in the manuscript's sense: the tag follows the leading digit,
/// so 30 counts as odd because 3 is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry {
    pub operands: Vec<BigInt>,
    pub result: BigInt,
    pub label: Option<Parity>,
}

impl TableEntry {
    fn plain(operands: Vec<u64>, result: u64) -> Self {
        TableEntry {
            operands: operands.into_iter().map(BigInt::from).collect(),
            result: BigInt::from(result),
            label: None,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableError {
    #[error("cannot render {value} as a numeral: {source}")]
    Numeral { value: BigInt, source: NumeralError },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Text,
    Csv,
}

/// All values a·10^n for digits a and the given exponent range, sorted.
fn scaled_digits(exponents: std::ops::RangeInclusive<u32>) -> Vec<u64> {
    let mut values: Vec<u64> = exponents
        .flat_map(|n| (1..=9u64).map(move |a| a * 10u64.pow(n)))
        .collect();
    values.sort_unstable();
    values
}

fn addition_entries() -> Vec<TableEntry> {
    let mut entries = Vec::new();
    for n in 0..=3u32 {
        let scale = 10u64.pow(n);
        for a in 1..=9u64 {
            for b in a..=9 {
                let (x, y) = (a * scale, b * scale);
                entries.push(TableEntry::plain(vec![x, y], x + y));
            }
        }
    }
    entries
}

fn multiplication_entries(include_ten: bool) -> Vec<TableEntry> {
    let left = scaled_digits(0..=3);
    let top_b = if include_ten { 10 } else { 9 };
    let mut right: BTreeSet<u64> = BTreeSet::new();
    for n in 0..=3u32 {
        for b in 1..=top_b {
            right.insert(b * 10u64.pow(n));
        }
    }
    let mut entries = Vec::new();
    for &a in &left {
        for &b in &right {
            entries.push(TableEntry::plain(vec![a, b], a * b));
        }
    }
    entries
}

fn subtraction_entries() -> Vec<TableEntry> {
    // Both complements of every addition fact, deduplicated (the two
    // coincide when the addends are equal).
    let mut seen: BTreeSet<(u64, u64, u64)> = BTreeSet::new();
    for entry in addition_entries() {
        let x = u64::try_from(&entry.operands[0]).unwrap();
        let y = u64::try_from(&entry.operands[1]).unwrap();
        seen.insert((x + y, y, x));
        seen.insert((x + y, x, y));
    }
    seen.into_iter()
        .map(|(s, sub, diff)| TableEntry::plain(vec![s, sub], diff))
        .collect()
}

fn division_entries(tie: Tie) -> Vec<TableEntry> {
    let mut divisors: BTreeSet<u64> = (1..=100).collect();
    for a in 1..=9u64 {
        divisors.insert(a * 100);
        divisors.insert(a * 1000);
    }
    divisors
        .into_iter()
        .map(|n| {
            let quotient = Rational::ratio(6000, n as i64).round_nearest(tie);
            TableEntry {
                operands: vec![BigInt::from(n)],
                result: quotient,
                label: None,
            }
        })
        .collect()
}

fn parity_entries() -> Vec<TableEntry> {
    let mut entries: Vec<TableEntry> = (0..=10u32)
        .flat_map(|n| {
            (1..=9u64).map(move |a| TableEntry {
                operands: Vec::new(),
                result: BigInt::from(a * 10u64.pow(n)),
                label: Some(if a % 2 == 0 { Parity::Even } else { Parity::Odd }),
            })
        })
        .collect();
    entries.sort_by(|l, r| l.result.cmp(&r.result));
    entries
}

/// Generates a table. `tie` only matters for division, where four
/// divisors (32, 96, 800, 4000) hit an exact half.
pub fn generate(kind: TableKind, tie: Tie) -> Vec<TableEntry> {
    let mut entries = match kind {
        TableKind::Addition => addition_entries(),
        TableKind::Multiplication { include_ten } => multiplication_entries(include_ten),
        TableKind::Subtraction => subtraction_entries(),
        TableKind::Division => division_entries(tie),
        TableKind::Parity => return parity_entries(),
    };
    entries.sort_by(|l, r| l.operands.cmp(&r.operands));
    entries
}

fn render_number(
    value: &BigInt,
    numerals: Option<NumeralSystem>,
) -> Result<String, TableError> {
    match numerals {
        None => Ok(value.to_string()),
        Some(system) => {
            numerals::encode(value.clone(), system, true).map_err(|source| TableError::Numeral {
                value: value.clone(),
                source,
            })
        }
    }
}

/// Renders entries as CSV (LF line endings) or aligned text columns,
/// optionally writing every number in a numeral system. Values beyond a
/// numeral system's range (the tail of the parity table) error out.
pub fn render(
    kind: TableKind,
    entries: &[TableEntry],
    format: RenderFormat,
    numerals: Option<NumeralSystem>,
) -> Result<String, TableError> {
    let header: Vec<String> = kind.columns().iter().map(|c| c.to_string()).collect();
    let mut rows = vec![header];
    for entry in entries {
        let mut row = Vec::with_capacity(entry.operands.len() + 2);
        for operand in &entry.operands {
            row.push(render_number(operand, numerals)?);
        }
        row.push(render_number(&entry.result, numerals)?);
        if let Some(label) = entry.label {
            row.push(label.to_string());
        }
        rows.push(row);
    }

    let mut out = String::new();
    match format {
        RenderFormat::Csv => {
            for row in rows {
                out.push_str(&row.join(","));
                out.push('\n');
            }
        }
        RenderFormat::Text => {
            let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
            let widths: Vec<usize> = (0..columns)
                .map(|c| {
                    rows.iter()
                        .filter_map(|row| row.get(c))
                        .map(|cell| cell.chars().count())
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            for row in rows {
                let last = row.len().saturating_sub(1);
                for (c, cell) in row.iter().enumerate() {
                    let pad = widths[c].saturating_sub(cell.chars().count());
                    for _ in 0..pad {
                        out.push(' ');
                    }
                    out.push_str(cell);
                    if c < last {
                        out.push_str("  ");
                    }
                }
                out.push('\n');
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn big(n: u64) -> BigInt {
        BigInt::from(n)
    }

    fn gen(kind: TableKind) -> Vec<TableEntry> {
        generate(kind, Tie::HalfUp)
    }

    const OPERATION_KINDS: [TableKind; 4] = [
        TableKind::Addition,
        TableKind::Multiplication { include_ten: false },
        TableKind::Subtraction,
        TableKind::Division,
    ];

    #[test]
    fn entry_counts() {
        assert_eq!(gen(TableKind::Addition).len(), 180);
        assert_eq!(gen(TableKind::Multiplication { include_ten: false }).len(), 1296);
        assert_eq!(gen(TableKind::Multiplication { include_ten: true }).len(), 1332);
        assert_eq!(gen(TableKind::Subtraction).len(), 324);
        assert_eq!(gen(TableKind::Division).len(), 117);
        assert_eq!(gen(TableKind::Parity).len(), 99);
    }

    #[test]
    fn first_addition_fact() {
        let table = gen(TableKind::Addition);
        assert_eq!(table[0].operands, vec![big(1), big(1)]);
        assert_eq!(table[0].result, big(2));
    }

    #[test]
    fn defining_equations_hold() {
        for entry in gen(TableKind::Addition) {
            assert_eq!(&entry.operands[0] + &entry.operands[1], entry.result);
        }
        for flag in [false, true] {
            for entry in gen(TableKind::Multiplication { include_ten: flag }) {
                assert_eq!(&entry.operands[0] * &entry.operands[1], entry.result);
            }
        }
        for entry in gen(TableKind::Subtraction) {
            assert_eq!(&entry.operands[0] - &entry.operands[1], entry.result);
        }
    }

    #[test]
    fn no_duplicate_operand_tuples() {
        for kind in OPERATION_KINDS {
            let table = gen(kind);
            let tuples: HashSet<Vec<BigInt>> =
                table.iter().map(|e| e.operands.clone()).collect();
            assert_eq!(tuples.len(), table.len(), "{kind:?}");
        }
    }

    #[test]
    fn rows_are_sorted_by_operands() {
        for kind in OPERATION_KINDS {
            let table = gen(kind);
            assert!(
                table.windows(2).all(|w| w[0].operands < w[1].operands),
                "{kind:?}"
            );
        }
    }

    #[test]
    fn multiplication_maxima() {
        let plain = gen(TableKind::Multiplication { include_ten: false });
        assert_eq!(
            plain.iter().map(|e| &e.result).max().unwrap(),
            &big(81_000_000)
        );
        let extended = gen(TableKind::Multiplication { include_ten: true });
        assert_eq!(
            extended.iter().map(|e| &e.result).max().unwrap(),
            &big(90_000_000)
        );
    }

    #[test]
    fn subtraction_complements_addition() {
        // 324 = two complements for each of 180 facts, minus the 36
        // facts with equal addends whose complements coincide.
        let subtraction = gen(TableKind::Subtraction);
        for entry in gen(TableKind::Addition) {
            let (x, y, s) = (&entry.operands[0], &entry.operands[1], &entry.result);
            for (sub, diff) in [(y, x), (x, y)] {
                assert!(subtraction
                    .iter()
                    .any(|e| e.operands == vec![s.clone(), sub.clone()] && &e.result == diff));
            }
        }
    }

    #[test]
    fn division_sample_and_error_bound() {
        let table = gen(TableKind::Division);
        let entry = |n: u64| {
            table
                .iter()
                .find(|e| e.operands[0] == big(n))
                .unwrap_or_else(|| panic!("no divisor {n}"))
                .result
                .clone()
        };
        assert_eq!(entry(17), big(353));
        assert_eq!(entry(1), big(6000));
        assert_eq!(entry(9000), big(1));

        // Nearest-integer rule: the remainder is at most half the divisor.
        for e in &table {
            let n = &e.operands[0];
            let doubled_gap = (big(6000) - n * &e.result) * 2u32;
            assert!(doubled_gap.magnitude() <= (n.magnitude()), "divisor {n}");
        }
    }

    #[test]
    fn division_tie_rule_changes_exactly_four_rows() {
        let up = gen(TableKind::Division);
        let down = generate(TableKind::Division, Tie::HalfDown);
        let mut changed = Vec::new();
        for (u, d) in up.iter().zip(&down) {
            assert_eq!(u.operands, d.operands);
            if u.result != d.result {
                changed.push(u.operands[0].clone());
            }
        }
        assert_eq!(changed, vec![big(32), big(96), big(800), big(4000)]);

        let pick = |table: &[TableEntry], n: u64| {
            table.iter().find(|e| e.operands[0] == big(n)).unwrap().result.clone()
        };
        for (n, hi, lo) in [(32, 188, 187), (96, 63, 62), (800, 8, 7), (4000, 2, 1)] {
            assert_eq!(pick(&up, n), big(hi));
            assert_eq!(pick(&down, n), big(lo));
        }
    }

    #[test]
    fn parity_follows_the_leading_digit() {
        let table = gen(TableKind::Parity);
        assert!(table
            .iter()
            .any(|e| e.result == big(30) && e.label == Some(Parity::Odd)));
        assert_eq!(
            table.iter().map(|e| &e.result).max().unwrap(),
            &big(90_000_000_000)
        );
        for entry in &table {
            let digits = entry.result.to_string();
            let leading = digits.as_bytes()[0] - b'0';
            let expected = if leading % 2 == 0 { Parity::Even } else { Parity::Odd };
            assert_eq!(entry.label, Some(expected), "value {digits}");
            assert!(digits[1..].bytes().all(|b| b == b'0'));
        }
    }

    #[test]
    fn operation_values_fit_the_hatted_numeral_range() {
        use crate::numerals::{decode, DecodeMode};
        for kind in OPERATION_KINDS {
            for entry in gen(kind) {
                for value in entry.operands.iter().chain([&entry.result]) {
                    let text = numerals::encode(value.clone(), NumeralSystem::Anania, true)
                        .unwrap_or_else(|e| panic!("{kind:?} value {value}: {e}"));
                    let back = decode(&text, NumeralSystem::Anania, DecodeMode::Strict).unwrap();
                    assert_eq!(&back, value);
                }
            }
        }
    }

    #[test]
    fn csv_rendering() {
        let table = gen(TableKind::Addition);
        let csv = render(TableKind::Addition, &table, RenderFormat::Csv, None).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 181);
        assert_eq!(lines[0], "a,b,sum");
        assert_eq!(lines[1], "1,1,2");
        assert!(!csv.contains('\r'));

        let division = gen(TableKind::Division);
        let csv = render(TableKind::Division, &division, RenderFormat::Csv, None).unwrap();
        assert!(csv.contains("17,353\n"));

        let parity = gen(TableKind::Parity);
        let csv = render(TableKind::Parity, &parity, RenderFormat::Csv, None).unwrap();
        assert!(csv.starts_with("value,parity\n1,odd\n2,even\n"));
    }

    #[test]
    fn empty_table_renders_header_only() {
        let csv = render(TableKind::Division, &[], RenderFormat::Csv, None).unwrap();
        assert_eq!(csv, "divisor,quotient\n");
        let text = render(TableKind::Division, &[], RenderFormat::Text, None).unwrap();
        assert_eq!(text, "divisor  quotient\n");
    }

    #[test]
    fn numeral_rendering() {
        let division = gen(TableKind::Division);
        let traditional = render(
            TableKind::Division,
            &division,
            RenderFormat::Csv,
            Some(NumeralSystem::Traditional),
        )
        .unwrap();
        assert!(traditional.contains("ժէ,յծգ\n"), "17,353 in letters");

        let anania = render(
            TableKind::Division,
            &division,
            RenderFormat::Csv,
            Some(NumeralSystem::Anania),
        )
        .unwrap();
        assert!(anania.contains("ժէ,գճեժգ\n"));
    }

    #[test]
    fn numeral_rendering_fails_past_the_hat_ceiling() {
        let parity = gen(TableKind::Parity);
        let err = render(
            TableKind::Parity,
            &parity,
            RenderFormat::Csv,
            Some(NumeralSystem::Anania),
        )
        .unwrap_err();
        match &err {
            TableError::Numeral { value, .. } => assert_eq!(value, &big(100_000_000)),
        }
        assert!(err.to_string().contains("100000000"));
    }

    #[test]
    fn text_rendering_is_aligned() {
        let table = gen(TableKind::Division);
        let text = render(TableKind::Division, &table, RenderFormat::Text, None).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 118);
        let width = lines[0].chars().count();
        assert!(lines.iter().all(|l| l.chars().count() == width));
        assert_eq!(lines[1].trim(), "1      6000");
    }
}
