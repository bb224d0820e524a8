//! Armenian alphabetic numerals in two schemes.
//!
//! The traditional scheme assigns the 36 classical letters the values
//! 1..9, 10..90, 100..900, 1000..9000 in alphabet order and writes a
//! number additively, largest value first: 23 is իգ (20 + 3), 1760 is
//! ռչկ (1000 + 700 + 60).
//!
//! The second scheme gets by with 12 letters: the digit letters ա..թ for
//! 1..9 plus the multipliers ժ = 10, ճ = 100, ռ = 1000. A number is a
//! run of digit-times-multiplier terms, largest multiplier first, with
//! two spelling rules: a coefficient of 1 is dropped (10 is bare ժ, not
//! աժ) and the units digit stands alone at the end. So 216 is բճժզ,
//! read 2·100 + 10 + 6.
//!
//! Both schemes stop at 9999. A combining circumflex over a letter
//! multiplies its group by 10,000 ("the hat"), and hatted text precedes
//! unhatted text, which extends the range to 99,999,999. On that reading
//! ք̂ is 9000 · 10,000 = 90,000,000.
//!
//! Decoding is strict or lenient. Strict accepts exactly the canonical
//! spellings the encoder produces. Lenient also takes letters out of
//! canonical order, repeated place classes, and an explicit coefficient
//! of 1 (so աժ decodes as 10).

use std::fmt;
use std::str::FromStr;

use num::Zero;
use thiserror::Error;

use crate::exact::BigInt;

/// Combining circumflex; a letter followed by this mark has its value
/// multiplied by 10,000.
pub const HAT: char = '\u{0302}';

/// Largest value either scheme can write without the hat.
pub const CORE_MAX: u64 = 9_999;

/// Largest value with the hat extension enabled.
pub const HAT_MAX: u64 = 99_999_999;

const LOWER_FIRST: u32 = 0x0561; // ա
const UPPER_FIRST: u32 = 0x0531; // Ա
const LETTER_COUNT: u32 = 36;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumeralSystem {
    Traditional,
    Anania,
}

impl NumeralSystem {
    pub fn name(self) -> &'static str {
        match self {
            NumeralSystem::Traditional => "traditional",
            NumeralSystem::Anania => "anania",
        }
    }
}

impl fmt::Display for NumeralSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NumeralSystem {
    type Err = NumeralError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "traditional" => Ok(NumeralSystem::Traditional),
            "anania" => Ok(NumeralSystem::Anania),
            other => Err(NumeralError::UnknownSystem(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DecodeMode {
    Strict,
    #[default]
    Lenient,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumeralError {
    #[error("unknown numeral system `{0}`")]
    UnknownSystem(String),
    #[error("{0} cannot be written in this system (range 1..={1})")]
    Unrepresentable(BigInt, u64),
    #[error("empty numeral text")]
    Empty,
    #[error("unknown letter `{letter}` at byte {offset}")]
    UnknownLetter { letter: char, offset: usize },
    #[error("hat mark without a letter to sit on at byte {offset}")]
    StrayHat { offset: usize },
    #[error("hatted letter after unhatted text at byte {offset}")]
    HatAfterBody { offset: usize },
    #[error("letter out of canonical order at byte {offset}")]
    OutOfOrder { offset: usize },
    #[error("place class written twice at byte {offset}")]
    RepeatedClass { offset: usize },
    #[error("digit letter with no multiplier or units position at byte {offset}")]
    DanglingDigit { offset: usize },
    #[error("explicit coefficient 1 at byte {offset} is not canonical")]
    ExplicitOne { offset: usize },
}

/// The letter/value assignments of a system, in letter order. Exposed so
/// callers can print reference tables; encoding and decoding use it
/// internally.
pub fn letter_table(system: NumeralSystem) -> Vec<(char, u64)> {
    match system {
        NumeralSystem::Traditional => (0..LETTER_COUNT)
            .map(|i| {
                let letter = char::from_u32(LOWER_FIRST + i).expect("letter block is contiguous");
                let value = u64::from(i % 9 + 1) * 10u64.pow(i / 9);
                (letter, value)
            })
            .collect(),
        NumeralSystem::Anania => {
            let mut table: Vec<(char, u64)> = (0..9)
                .map(|i| {
                    let letter = char::from_u32(LOWER_FIRST + i).expect("digit letters exist");
                    (letter, u64::from(i) + 1)
                })
                .collect();
            table.push(('ժ', 10));
            table.push(('ճ', 100));
            table.push(('ռ', 1000));
            table
        }
    }
}

/// Index 0..36 of a letter in the classical alphabet, folding uppercase
/// onto lowercase.
fn alphabet_index(c: char) -> Option<u32> {
    let code = c as u32;
    let folded = if (UPPER_FIRST..UPPER_FIRST + LETTER_COUNT).contains(&code) {
        code + (LOWER_FIRST - UPPER_FIRST)
    } else {
        code
    };
    (LOWER_FIRST..LOWER_FIRST + LETTER_COUNT)
        .contains(&folded)
        .then(|| folded - LOWER_FIRST)
}

fn traditional_letter(value: u64) -> char {
    let (a, k) = match value {
        1..=9 => (value, 0),
        10..=90 => (value / 10, 1),
        100..=900 => (value / 100, 2),
        _ => (value / 1000, 3),
    };
    char::from_u32(LOWER_FIRST + (a - 1) as u32 + 9 * k).expect("value is a digit times a power")
}

/// Writes 1..=9999 in the traditional additive scheme.
fn encode_traditional_core(n: u64) -> String {
    let mut out = String::new();
    let mut scale = 1000;
    while scale >= 1 {
        let digit = n / scale % 10;
        if digit > 0 {
            out.push(traditional_letter(digit * scale));
        }
        if scale == 1 {
            break;
        }
        scale /= 10;
    }
    out
}

/// Writes 1..=9999 in the 12-letter scheme.
fn encode_anania_core(n: u64) -> String {
    let digit_letter = |d: u64| char::from_u32(LOWER_FIRST + d as u32 - 1).expect("1..=9");
    let mut out = String::new();
    for (scale, multiplier) in [(1000, 'ռ'), (100, 'ճ'), (10, 'ժ')] {
        let coefficient = n / scale % 10;
        if coefficient > 1 {
            out.push(digit_letter(coefficient));
        }
        if coefficient > 0 {
            out.push(multiplier);
        }
    }
    let units = n % 10;
    if units > 0 {
        out.push(digit_letter(units));
    }
    out
}

/// Encodes a positive integer. Without `hat` the range is 1..=9999; with
/// it, values up to 99,999,999 split into a hatted ten-thousands part
/// followed by the remainder.
pub fn encode<N: Into<BigInt>>(
    n: N,
    system: NumeralSystem,
    hat: bool,
) -> Result<String, NumeralError> {
    let n = n.into();
    let max = if hat { HAT_MAX } else { CORE_MAX };
    let in_range = n > BigInt::zero() && n <= BigInt::from(max);
    if !in_range {
        return Err(NumeralError::Unrepresentable(n, max));
    }
    let n = u64::try_from(&n).expect("range checked above");

    let core = match system {
        NumeralSystem::Traditional => encode_traditional_core,
        NumeralSystem::Anania => encode_anania_core,
    };
    let (high, low) = (n / 10_000, n % 10_000);
    let mut out = String::new();
    if high > 0 {
        for letter in core(high).chars() {
            out.push(letter);
            out.push(HAT);
        }
    }
    if low > 0 {
        out.push_str(&core(low));
    }
    Ok(out)
}

/// One letter of input, case-folded, with its hat state and the byte
/// offset where it started.
struct Token {
    index: u32,
    hatted: bool,
    offset: usize,
}

impl Token {
    fn traditional_value(&self) -> u64 {
        u64::from(self.index % 9 + 1) * 10u64.pow(self.index / 9)
    }

    /// Value in the 12-letter scheme, if the letter belongs to it.
    fn anania_value(&self) -> Option<u64> {
        match self.index {
            0..=8 => Some(u64::from(self.index) + 1),
            9 => Some(10),
            18 => Some(100),
            27 => Some(1000),
            _ => None,
        }
    }

    fn is_anania_digit(&self) -> bool {
        self.index <= 8
    }
}

fn tokenize(text: &str, system: NumeralSystem) -> Result<Vec<Token>, NumeralError> {
    let mut tokens: Vec<Token> = Vec::new();
    let mut last_hattable = false;
    for (offset, c) in text.char_indices() {
        if c == HAT {
            if !last_hattable {
                return Err(NumeralError::StrayHat { offset });
            }
            tokens.last_mut().expect("just checked").hatted = true;
            last_hattable = false;
            continue;
        }
        let index =
            alphabet_index(c).ok_or(NumeralError::UnknownLetter { letter: c, offset })?;
        let token = Token {
            index,
            hatted: false,
            offset,
        };
        if system == NumeralSystem::Anania && token.anania_value().is_none() {
            return Err(NumeralError::UnknownLetter { letter: c, offset });
        }
        tokens.push(token);
        last_hattable = true;
    }
    if tokens.is_empty() {
        return Err(NumeralError::Empty);
    }
    Ok(tokens)
}

/// Splits tokens into the hatted prefix and the unhatted rest, insisting
/// (for strict mode) that no hat appears after plain text.
fn split_hat_prefix(tokens: &[Token]) -> Result<(&[Token], &[Token]), NumeralError> {
    let boundary = tokens.iter().position(|t| !t.hatted).unwrap_or(tokens.len());
    if let Some(late) = tokens[boundary..].iter().find(|t| t.hatted) {
        return Err(NumeralError::HatAfterBody {
            offset: late.offset,
        });
    }
    Ok((&tokens[..boundary], &tokens[boundary..]))
}

/// Strict decode of one hat-homogeneous group in the traditional scheme:
/// place classes strictly decreasing, each used once.
fn decode_traditional_group(tokens: &[Token]) -> Result<u64, NumeralError> {
    let mut previous_class: Option<u32> = None;
    let mut total = 0;
    for token in tokens {
        let class = token.index / 9;
        match previous_class {
            Some(p) if class == p => {
                return Err(NumeralError::RepeatedClass {
                    offset: token.offset,
                })
            }
            Some(p) if class > p => {
                return Err(NumeralError::OutOfOrder {
                    offset: token.offset,
                })
            }
            _ => {}
        }
        previous_class = Some(class);
        total += token.traditional_value();
    }
    Ok(total)
}

/// Strict decode of one hat-homogeneous group in the 12-letter scheme:
/// digit·multiplier terms with strictly decreasing multipliers, implied
/// coefficient 1, then at most one bare units digit.
fn decode_anania_group(tokens: &[Token]) -> Result<u64, NumeralError> {
    let mut previous_scale: Option<u64> = None;
    let mut total = 0;
    let mut i = 0;
    while i < tokens.len() {
        let token = &tokens[i];
        let (coefficient, scale, consumed) = if token.is_anania_digit() {
            let digit = token.anania_value().expect("digit letter");
            match tokens.get(i + 1).filter(|t| !t.is_anania_digit()) {
                Some(multiplier) => {
                    if digit == 1 {
                        return Err(NumeralError::ExplicitOne {
                            offset: token.offset,
                        });
                    }
                    (digit, multiplier.anania_value().expect("multiplier"), 2)
                }
                None if i + 1 == tokens.len() => (digit, 1, 1),
                None => {
                    return Err(NumeralError::DanglingDigit {
                        offset: token.offset,
                    })
                }
            }
        } else {
            (1, token.anania_value().expect("multiplier letter"), 1)
        };
        match previous_scale {
            Some(p) if scale == p => {
                return Err(NumeralError::RepeatedClass {
                    offset: token.offset,
                })
            }
            Some(p) if scale > p => {
                return Err(NumeralError::OutOfOrder {
                    offset: token.offset,
                })
            }
            _ => {}
        }
        previous_scale = Some(scale);
        total += coefficient * scale;
        i += consumed;
    }
    Ok(total)
}

/// Lenient decode: sum every term wherever it stands. In the 12-letter
/// scheme a digit binds to a following multiplier of the same hat state;
/// otherwise it counts bare.
fn decode_lenient(tokens: &[Token], system: NumeralSystem) -> BigInt {
    let mut total = BigInt::zero();
    let ten_k = BigInt::from(10_000u32);
    let mut i = 0;
    while i < tokens.len() {
        let token = &tokens[i];
        let (value, consumed) = match system {
            NumeralSystem::Traditional => (token.traditional_value(), 1),
            NumeralSystem::Anania => {
                let digit = token.anania_value().expect("tokenizer filtered");
                match tokens
                    .get(i + 1)
                    .filter(|next| {
                        token.is_anania_digit()
                            && !next.is_anania_digit()
                            && next.hatted == token.hatted
                    })
                    .and_then(Token::anania_value)
                {
                    Some(multiplier) => (digit * multiplier, 2),
                    None => (digit, 1),
                }
            }
        };
        let mut value = BigInt::from(value);
        if token.hatted {
            value *= &ten_k;
        }
        total += value;
        i += consumed;
    }
    total
}

/// Reads numeral text back to its value. Uppercase letters are accepted;
/// see [`DecodeMode`] for how forgiving the reading is.
pub fn decode(
    text: &str,
    system: NumeralSystem,
    mode: DecodeMode,
) -> Result<BigInt, NumeralError> {
    let tokens = tokenize(text, system)?;
    match mode {
        DecodeMode::Lenient => Ok(decode_lenient(&tokens, system)),
        DecodeMode::Strict => {
            let (hatted, plain) = split_hat_prefix(&tokens)?;
            let group = match system {
                NumeralSystem::Traditional => decode_traditional_group,
                NumeralSystem::Anania => decode_anania_group,
            };
            let high = group(hatted)?;
            let low = group(plain)?;
            Ok(BigInt::from(high) * 10_000 + low)
        }
    }
}
