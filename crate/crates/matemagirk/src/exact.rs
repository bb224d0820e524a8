//! Exact unbounded integer and rational arithmetic.
//!
//! Every quantity in this crate is an exact [`Rational`] backed by
//! arbitrary-precision integers. There is no floating point anywhere:
//! greedy unit-fraction denominators grow doubly exponentially (5/121
//! already needs denominators past 10^24), so fixed-width integers are
//! not an option.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::rational::BigRational;
use num::{One, Signed, Zero};
use thiserror::Error;

pub use num::bigint::BigInt;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("denominator must not be zero")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational literal `{0}`")]
    Parse(String),
}

/// How to resolve an exact .5 remainder when rounding to the nearest integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Tie {
    #[default]
    HalfUp,
    HalfDown,
}

/// The four arithmetic operations, used where an operation is data
/// (table generation, Egyptian-fraction combination).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An exact rational number, always stored normalized: the denominator is
/// strictly positive, gcd(|num|, den) = 1, and integers have denominator 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den`, normalizing sign and common factors.
    pub fn new<N: Into<BigInt>, D: Into<BigInt>>(num: N, den: D) -> Result<Self, ExactError> {
        let den = den.into();
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    /// Shorthand for small literal fractions. Panics if `den` is zero.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::new(num, den).expect("ratio literal with zero denominator")
    }

    pub fn from_integer<N: Into<BigInt>>(n: N) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Largest integer not exceeding the value.
    pub fn floor_int(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Division that reports a zero divisor instead of panicking.
    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational, ExactError> {
        if rhs.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Multiplicative inverse; errors on zero.
    pub fn recip(&self) -> Result<Rational, ExactError> {
        Rational::one().checked_div(self)
    }

    /// Applies one of the four operations; only division can fail.
    pub fn apply(op: BinOp, a: &Rational, b: &Rational) -> Result<Rational, ExactError> {
        match op {
            BinOp::Add => Ok(a + b),
            BinOp::Sub => Ok(a - b),
            BinOp::Mul => Ok(a * b),
            BinOp::Div => a.checked_div(b),
        }
    }

    /// Total order; equivalent to comparing `a.num * b.den` with `b.num * a.den`.
    pub fn compare(&self, other: &Rational) -> Ordering {
        self.0.cmp(&other.0)
    }

    /// Nearest integer, with exact .5 remainders resolved by `tie`
    /// (half-up rounds toward +infinity).
    pub fn round_nearest(&self, tie: Tie) -> BigInt {
        let floor = self.floor_int();
        let rem = self - &Rational::from_integer(floor.clone());
        let half = Rational::ratio(1, 2);
        match rem.compare(&half) {
            Ordering::Less => floor,
            Ordering::Greater => floor + 1,
            Ordering::Equal => match tie {
                Tie::HalfUp => floor + 1,
                Tie::HalfDown => floor,
            },
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl fmt::Display for Rational {
    /// Renders `p/q`, omitting the denominator when it is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = ExactError;

    /// Accepts `p` and `p/q`, with an optional leading `-`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ExactError::Parse(s.to_string());
        let trimmed = s.trim();
        let (neg, body) = match trimmed.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, trimmed),
        };
        let parse_uint = |t: &str| -> Result<BigInt, ExactError> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            BigInt::parse_bytes(t.as_bytes(), 10).ok_or_else(err)
        };
        let value = match body.split_once('/') {
            None => Rational::from_integer(parse_uint(body)?),
            Some((num, den)) => {
                let den = parse_uint(den)?;
                if den.is_zero() {
                    return Err(ExactError::ZeroDenominator);
                }
                Rational::new(parse_uint(num)?, den)?
            }
        };
        Ok(if neg { -value } else { value })
    }
}
