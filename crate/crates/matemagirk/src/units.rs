//! Measurement units that appear in the problem corpus.
//!
//! Problems mix money (dram, dahekan, kendinar), mass (litre), distance
//! (mile), volume (jug, skin, glass), grain measures (grain, basket),
//! time (hour, day), and plain counts of people or things. A quantity is
//! a [`Rational`] magnitude tagged with a [`Unit`]; arithmetic across
//! dimensions is refused rather than silently coerced, and the only
//! registered conversion is the one the sources state outright:
//! 1 kendinar = 7200 dahekans. Dram and dahekan are both money, but no
//! exchange rate between them is attested, so converting errors out
//! instead of inventing one.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::exact::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UnitError {
    #[error("unknown unit `{0}`")]
    Unknown(String),
    #[error("no conversion from {from} to {to}")]
    NoConversion { from: Unit, to: Unit },
    #[error("cannot combine {left} with {right}")]
    DimensionMismatch { left: Unit, right: Unit },
}

/// What kind of thing a unit measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dimension {
    Money,
    Mass,
    Distance,
    Volume,
    Grain,
    Time,
    Count,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Unit {
    /// Small coin, also a weight; no attested rate against the dahekan.
    Dram,
    /// The workaday silver coin of the problems.
    Dahekan,
    /// Large money unit worth 7200 dahekans.
    Kendinar,
    /// Mass unit (a pound).
    Litre,
    Mile,
    Jug,
    /// A wineskin's worth of wine.
    Skin,
    /// One drinking glass.
    Glass,
    /// A single grain of wheat or barley.
    Grain,
    /// Basket of grain.
    Basket,
    Egg,
    Hour,
    Day,
    /// Dimensionless head-count: soldiers, pearls, fish, mice, and so on.
    Count,
}

impl Unit {
    pub fn dimension(self) -> Dimension {
        use Unit::*;
        match self {
            Dram | Dahekan | Kendinar => Dimension::Money,
            Litre => Dimension::Mass,
            Mile => Dimension::Distance,
            Jug | Skin | Glass => Dimension::Volume,
            Grain | Basket => Dimension::Grain,
            Hour | Day => Dimension::Time,
            Egg | Count => Dimension::Count,
        }
    }

    pub fn name(self) -> &'static str {
        use Unit::*;
        match self {
            Dram => "dram",
            Dahekan => "dahekan",
            Kendinar => "kendinar",
            Litre => "litre",
            Mile => "mile",
            Jug => "jug",
            Skin => "skin",
            Glass => "glass",
            Grain => "grain",
            Basket => "basket",
            Egg => "egg",
            Hour => "hour",
            Day => "day",
            Count => "count",
        }
    }

    pub const ALL: [Unit; 14] = [
        Unit::Dram,
        Unit::Dahekan,
        Unit::Kendinar,
        Unit::Litre,
        Unit::Mile,
        Unit::Jug,
        Unit::Skin,
        Unit::Glass,
        Unit::Grain,
        Unit::Basket,
        Unit::Egg,
        Unit::Hour,
        Unit::Day,
        Unit::Count,
    ];

    /// Multiplier taking one `self` to `to`, when the sources define one.
    fn factor_to(self, to: Unit) -> Option<Rational> {
        match (self, to) {
            (a, b) if a == b => Some(Rational::one()),
            (Unit::Kendinar, Unit::Dahekan) => Some(Rational::from_integer(7200)),
            (Unit::Dahekan, Unit::Kendinar) => Some(Rational::ratio(1, 7200)),
            _ => None,
        }
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Unit {
    type Err = UnitError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Unit::ALL
            .into_iter()
            .find(|u| u.name() == s)
            .ok_or_else(|| UnitError::Unknown(s.to_string()))
    }
}

/// An exact magnitude with its unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quantity {
    pub value: Rational,
    pub unit: Unit,
}

impl Quantity {
    pub fn new(value: Rational, unit: Unit) -> Self {
        Quantity { value, unit }
    }

    pub fn count(value: Rational) -> Self {
        Quantity::new(value, Unit::Count)
    }

    /// Re-expresses the quantity in `target` units, or reports that no
    /// conversion exists.
    pub fn convert_to(&self, target: Unit) -> Result<Quantity, UnitError> {
        let factor = self.unit.factor_to(target).ok_or(UnitError::NoConversion {
            from: self.unit,
            to: target,
        })?;
        Ok(Quantity::new(&self.value * &factor, target))
    }

    /// Adds two quantities, expressing the result in `self`'s unit.
    pub fn add(&self, other: &Quantity) -> Result<Quantity, UnitError> {
        if self.unit.dimension() != other.unit.dimension() {
            return Err(UnitError::DimensionMismatch {
                left: self.unit,
                right: other.unit,
            });
        }
        let other = other.convert_to(self.unit)?;
        Ok(Quantity::new(&self.value + &other.value, self.unit))
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.value, self.unit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn q(value: Rational, unit: Unit) -> Quantity {
        Quantity::new(value, unit)
    }

    #[test]
    fn kendinar_dahekan_conversion() {
        let one = q(Rational::one(), Unit::Kendinar);
        assert_eq!(
            one.convert_to(Unit::Dahekan).unwrap(),
            q(Rational::from_integer(7200), Unit::Dahekan)
        );
        assert_eq!(
            q(Rational::from_integer(3600), Unit::Dahekan)
                .convert_to(Unit::Kendinar)
                .unwrap(),
            q(Rational::ratio(1, 2), Unit::Kendinar)
        );
        assert_eq!(
            q(Rational::zero(), Unit::Dahekan)
                .convert_to(Unit::Kendinar)
                .unwrap(),
            q(Rational::zero(), Unit::Kendinar)
        );
    }

    #[test]
    fn conversion_round_trips() {
        let amount = q(Rational::ratio(843, 2), Unit::Kendinar);
        let there = amount.convert_to(Unit::Dahekan).unwrap();
        assert_eq!(there.convert_to(Unit::Kendinar).unwrap(), amount);
    }

    #[test]
    fn mixed_money_sum() {
        let k = q(Rational::from_integer(421), Unit::Kendinar);
        let d = q(Rational::from_integer(3600), Unit::Dahekan);
        assert_eq!(k.add(&d).unwrap(), q(Rational::ratio(843, 2), Unit::Kendinar));

        // Commutative up to the unit of expression.
        let other_way = d.add(&k).unwrap();
        assert_eq!(
            other_way.convert_to(Unit::Kendinar).unwrap().value,
            Rational::ratio(843, 2)
        );
    }

    #[test]
    fn adding_zero_is_identity() {
        let x = q(Rational::from_integer(100), Unit::Jug);
        assert_eq!(x.add(&q(Rational::zero(), Unit::Jug)).unwrap(), x);
    }

    #[test]
    fn unregistered_money_conversion_is_refused() {
        // Dram and dahekan share a dimension but no attested rate.
        let drams = q(Rational::from_integer(42), Unit::Dram);
        assert_eq!(
            drams.convert_to(Unit::Dahekan).unwrap_err(),
            UnitError::NoConversion {
                from: Unit::Dram,
                to: Unit::Dahekan
            }
        );
    }

    #[test]
    fn cross_dimension_is_refused() {
        let wine = q(Rational::from_integer(5), Unit::Skin);
        let coins = q(Rational::from_integer(5), Unit::Dahekan);
        assert_eq!(
            wine.add(&coins).unwrap_err(),
            UnitError::DimensionMismatch {
                left: Unit::Skin,
                right: Unit::Dahekan
            }
        );
    }

    #[test]
    fn every_unit_has_one_dimension_and_a_unique_name() {
        let names: HashSet<&str> = Unit::ALL.iter().map(|u| u.name()).collect();
        assert_eq!(names.len(), Unit::ALL.len());
        let dims: HashSet<Dimension> = Unit::ALL.iter().map(|u| u.dimension()).collect();
        assert_eq!(dims.len(), 7);
    }

    #[test]
    fn names_round_trip() {
        for unit in Unit::ALL {
            assert_eq!(unit.name().parse::<Unit>().unwrap(), unit);
        }
        assert!("parsec".parse::<Unit>().is_err());
    }

    #[test]
    fn display() {
        let q = Quantity::new(Rational::ratio(365, 2), Unit::Litre);
        assert_eq!(q.to_string(), "365/2 litre");
    }
}
