//! Egyptian-fraction representation: a whole part plus a sum of distinct
//! unit fractions with strictly increasing denominators.
//!
//! The source problems write fractional answers this way ("and a half and
//! a quarter and an eighth"), so answers are stored and compared in this
//! form. Decomposition uses the greedy method: repeatedly subtract the
//! largest unit fraction not exceeding what remains. Each step strictly
//! decreases the remainder's numerator, so the loop always terminates in
//! at most as many steps as the starting numerator.

use std::fmt;
use std::str::FromStr;

use num::{Integer, One, Signed, Zero};
use thiserror::Error;

use crate::exact::{BigInt, BinOp, ExactError, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EgyptianError {
    #[error("unit-fraction denominator {0} is less than 2")]
    DenominatorTooSmall(BigInt),
    #[error("denominators must strictly increase, but {0} does not exceed {1}")]
    NotIncreasing(BigInt, BigInt),
    #[error("whole part must not be negative, got {0}")]
    NegativeWhole(BigInt),
    #[error("cannot decompose negative value {0}")]
    NegativeValue(Rational),
    #[error("invalid egyptian fraction text at byte {offset}: `{text}`")]
    Parse { text: String, offset: usize },
    #[error(transparent)]
    Arithmetic(#[from] ExactError),
}

/// `whole + 1/d1 + 1/d2 + ...` with `2 <= d1 < d2 < ...`.
///
/// The fields are private so every constructed value satisfies that
/// invariant; [`EgyptianFraction::new`] validates, [`EgyptianFraction::greedy`]
/// produces it by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgyptianFraction {
    whole: BigInt,
    denominators: Vec<BigInt>,
}

impl EgyptianFraction {
    pub fn new<W, I, D>(whole: W, denominators: I) -> Result<Self, EgyptianError>
    where
        W: Into<BigInt>,
        I: IntoIterator<Item = D>,
        D: Into<BigInt>,
    {
        let whole = whole.into();
        if whole.is_negative() {
            return Err(EgyptianError::NegativeWhole(whole));
        }
        let denominators: Vec<BigInt> = denominators.into_iter().map(Into::into).collect();
        let two = BigInt::from(2);
        for (i, d) in denominators.iter().enumerate() {
            if *d < two {
                return Err(EgyptianError::DenominatorTooSmall(d.clone()));
            }
            if i > 0 && *d <= denominators[i - 1] {
                return Err(EgyptianError::NotIncreasing(
                    d.clone(),
                    denominators[i - 1].clone(),
                ));
            }
        }
        Ok(EgyptianFraction {
            whole,
            denominators,
        })
    }

    /// Greedy decomposition of a nonnegative rational.
    pub fn greedy(value: &Rational) -> Result<Self, EgyptianError> {
        if value.is_negative() {
            return Err(EgyptianError::NegativeValue(value.clone()));
        }
        let whole = value.floor_int();
        let mut rem = value - &Rational::from_integer(whole.clone());
        let mut denominators = Vec::new();
        while !rem.is_zero() {
            // Smallest d with 1/d <= rem, i.e. d = ceil(denom / numer).
            let d = rem.denom().div_ceil(rem.numer());
            rem = rem - Rational::new(BigInt::one(), d.clone()).expect("d >= 1");
            denominators.push(d);
        }
        Ok(EgyptianFraction {
            whole,
            denominators,
        })
    }

    pub fn whole(&self) -> &BigInt {
        &self.whole
    }

    pub fn denominators(&self) -> &[BigInt] {
        &self.denominators
    }

    /// The exact rational this representation stands for.
    pub fn value(&self) -> Rational {
        let mut total = Rational::from_integer(self.whole.clone());
        for d in &self.denominators {
            total = total + Rational::new(BigInt::one(), d.clone()).expect("denominator >= 2");
        }
        total
    }

    /// Does this representation denote exactly `value`? Representation
    /// details do not matter, only the rational value.
    pub fn check(&self, value: &Rational) -> bool {
        self.value() == *value
    }

    /// Applies `op` to the values of two representations and re-expresses
    /// the result in greedy form.
    pub fn combine(&self, op: BinOp, other: &EgyptianFraction) -> Result<Self, EgyptianError> {
        let result = Rational::apply(op, &self.value(), &other.value())?;
        Self::greedy(&result)
    }
}

impl fmt::Display for EgyptianFraction {
    /// `21 + 1/2 + 1/3 + 1/24`; the whole part is omitted when zero
    /// (unless there is nothing else to show).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        if !self.whole.is_zero() || self.denominators.is_empty() {
            write!(f, "{}", self.whole)?;
            wrote = true;
        }
        for d in &self.denominators {
            if wrote {
                f.write_str(" + ")?;
            }
            write!(f, "1/{d}")?;
            wrote = true;
        }
        Ok(())
    }
}

impl FromStr for EgyptianFraction {
    type Err = EgyptianError;

    /// Parses `W + 1/a + 1/b`, where the whole part is optional and terms
    /// may come in any order; duplicate denominators are rejected.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fail = |offset: usize| EgyptianError::Parse {
            text: s.to_string(),
            offset,
        };
        let mut whole: Option<BigInt> = None;
        let mut denominators: Vec<BigInt> = Vec::new();
        let mut offset = 0;
        let mut first = true;
        loop {
            let rest = &s[offset..];
            let skipped = rest.len() - rest.trim_start().len();
            offset += skipped;
            if offset == s.len() {
                if first {
                    return Err(fail(offset));
                }
                break;
            }
            if !first {
                if !s[offset..].starts_with('+') {
                    return Err(fail(offset));
                }
                offset += 1;
                let rest = &s[offset..];
                offset += rest.len() - rest.trim_start().len();
            }
            let term_start = offset;
            let term: String = s[offset..]
                .chars()
                .take_while(|c| c.is_ascii_digit() || *c == '/')
                .collect();
            if term.is_empty() {
                return Err(fail(term_start));
            }
            offset += term.len();
            match term.split_once('/') {
                None => {
                    let n = BigInt::parse_bytes(term.as_bytes(), 10).ok_or_else(|| fail(term_start))?;
                    if whole.is_some() || !denominators.is_empty() {
                        return Err(fail(term_start));
                    }
                    whole = Some(n);
                }
                Some(("1", den)) if !den.is_empty() && !den.contains('/') => {
                    let d = BigInt::parse_bytes(den.as_bytes(), 10).ok_or_else(|| fail(term_start))?;
                    denominators.push(d);
                }
                Some(_) => return Err(fail(term_start)),
            }
            first = false;
        }
        denominators.sort();
        if denominators.windows(2).any(|w| w[0] == w[1]) {
            return Err(fail(0));
        }
        EgyptianFraction::new(whole.unwrap_or_else(BigInt::zero), denominators)
    }
}
