//! The five after-dinner puzzles: parlour tricks and riddles rather
//! than worked problems, each with its exact arithmetic behind it.

use thiserror::Error;

use crate::exact::Rational;
use crate::units::{Quantity, Unit};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PuzzleError {
    #[error("the reported number must be at least 451, got {0}")]
    ReportTooSmall(u64),
}

/// What the dinner trick reveals about the guest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DinnerReading {
    /// Dined at `hour` and drank `glasses` glasses.
    Dinner { hour: u64, glasses: u64 },
    /// The guest claims a hundred glasses or more; the host declines
    /// to believe it.
    Refusal,
}

/// The guest's side of the dinner trick: double the hour, add 5,
/// multiply by 5, add 10, multiply by 10, add the glasses drunk.
///
/// The result is `100 * hour + 350 + glasses`, which is why the host
/// can take it apart again.
pub fn dinner_encode(hour: u64, glasses: u64) -> u64 {
    ((2 * hour + 5) * 5 + 10) * 10 + glasses
}

/// The host's side: subtract 350, then the hundreds are the hour and
/// the rest is the glasses. An hour of 1 with a single glass already
/// reports 451, so anything smaller is a slip in the guest's
/// arithmetic. A remainder of zero glasses means the guest claimed a
/// round hundred, which the trick cannot carry and the host will not
/// credit.
pub fn dinner_decode(reported: u64) -> Result<DinnerReading, PuzzleError> {
    if reported < 451 {
        return Err(PuzzleError::ReportTooSmall(reported));
    }
    let folded = reported - 350;
    let (hour, glasses) = (folded / 100, folded % 100);
    if glasses == 0 {
        Ok(DinnerReading::Refusal)
    } else {
        Ok(DinnerReading::Dinner { hour, glasses })
    }
}

/// How many were in the first group of tourists, if the group, the
/// group again, half the group, a quarter of the group, and one
/// straggler together make `total`.
pub fn tourists_for_total(total: u64) -> Rational {
    let stated = Rational::from_integer(total) - Rational::one();
    stated
        .checked_div(&Rational::ratio(11, 4))
        .expect("the group coefficients are fixed")
}

/// The classic asking: how many make 100 this way? (Thirty-six.)
pub fn tourists() -> u64 {
    let n = tourists_for_total(100);
    assert!(n.is_integer());
    u64::try_from(n.numer().clone()).unwrap()
}

/// The pouch trick, forward: take out the contents twice over, double
/// that, add the contents once more, double again. Ten times the
/// pouch.
pub fn pouch_encode(drams: &Rational) -> Rational {
    let twice = drams + drams;
    let doubled = &twice + &twice;
    let with_once_more = doubled + drams.clone();
    &with_once_more + &with_once_more
}

/// The pouch trick, backward: a tenth of the report.
pub fn pouch_decode(reported: &Rational) -> Rational {
    reported
        .checked_div(&Rational::from_integer(10))
        .expect("ten is not zero")
}

/// A courtyard of a hundred hens, an egg per hen per day, for a year
/// of 365 days.
pub fn eggs_total() -> u64 {
    100 * 365
}

/// A hundred such courtyards: the count the riddle wants.
pub fn eggs_grand_total() -> u64 {
    eggs_total() * 100
}

/// Spells a count in myriads, the ten-thousands the answer is
/// traditionally given in.
pub fn myriads(n: u64) -> String {
    let (whole, rest) = (n / 10_000, n % 10_000);
    let plural = if whole == 1 { "myriad" } else { "myriads" };
    match (whole, rest) {
        (0, r) => r.to_string(),
        (w, 0) => format!("{w} {plural}"),
        (w, r) => format!("{w} {plural} and {r}"),
    }
}

/// The two ways of selling sixty wineskins at five for two drams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WineskinSale {
    /// Sold honestly, five at a time.
    pub fair: Quantity,
    /// Split into thirty sold three for a dram and thirty sold two
    /// for a dram.
    pub trick: Quantity,
}

impl WineskinSale {
    /// What the split quietly adds to the till.
    pub fn gap(&self) -> Quantity {
        Quantity::new(&self.trick.value - &self.fair.value, self.trick.unit)
    }
}

pub fn wineskins() -> WineskinSale {
    let five_for_two = Rational::ratio(2, 5);
    let fair = Rational::from_integer(60) * five_for_two;
    let three_per_dram = Rational::from_integer(30)
        .checked_div(&Rational::from_integer(3))
        .unwrap();
    let two_per_dram = Rational::from_integer(30)
        .checked_div(&Rational::from_integer(2))
        .unwrap();
    WineskinSale {
        fair: Quantity::new(fair, Unit::Dram),
        trick: Quantity::new(three_per_dram + two_per_dram, Unit::Dram),
    }
}
