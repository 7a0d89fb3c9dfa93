use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A fraction in lowest terms; used for Farey walls and hook slopes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ReducedFraction {
    num: usize,
    den: usize,
}

impl ReducedFraction {
    pub const ZERO: ReducedFraction = ReducedFraction { num: 0, den: 1 };
    pub const ONE: ReducedFraction = ReducedFraction { num: 1, den: 1 };

    /// Reduces `num/den`; `den` must be positive.
    pub fn new(num: usize, den: usize) -> Self {
        assert!(den > 0, "zero denominator");
        let g = gcd(num, den);
        ReducedFraction {
            num: num / g,
            den: den / g,
        }
    }

    pub fn num(self) -> usize {
        self.num
    }

    pub fn den(self) -> usize {
        self.den
    }

    /// `1 - self`, for fractions in `[0, 1]`.
    pub fn complement(self) -> Self {
        debug_assert!(self.num <= self.den);
        ReducedFraction {
            num: self.den - self.num,
            den: self.den,
        }
    }
}

impl Ord for ReducedFraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for ReducedFraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ReducedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for ReducedFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseFraction(s.to_string());
        let (n, d) = s.trim().split_once('/').ok_or_else(bad)?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        let d: usize = d.trim().parse().map_err(|_| bad())?;
        if d == 0 || gcd(n, d) != 1 {
            return Err(bad());
        }
        Ok(ReducedFraction { num: n, den: d })
    }
}

impl Serialize for ReducedFraction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ReducedFraction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_orders() {
        assert_eq!(ReducedFraction::new(4, 6), ReducedFraction::new(2, 3));
        assert_eq!(ReducedFraction::new(0, 5), ReducedFraction::ZERO);
        assert!(ReducedFraction::new(1, 3) < ReducedFraction::new(2, 5));
        assert!(ReducedFraction::new(3, 4) > ReducedFraction::new(2, 3));
        assert_eq!(
            ReducedFraction::new(2, 7).complement(),
            ReducedFraction::new(5, 7)
        );
    }

    #[test]
    fn text_form() {
        assert_eq!(ReducedFraction::new(3, 5).to_string(), "3/5");
        assert_eq!(
            "0/1".parse::<ReducedFraction>().unwrap(),
            ReducedFraction::ZERO
        );
        assert!("2/4".parse::<ReducedFraction>().is_err());
        assert!("1/0".parse::<ReducedFraction>().is_err());
        assert!("x".parse::<ReducedFraction>().is_err());
    }
}
