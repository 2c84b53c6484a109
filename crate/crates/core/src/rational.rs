use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Non-negative exact rational in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Ratio<u64>);

impl Rational {
    /// Panics on a zero denominator.
    pub fn new(num: u64, den: u64) -> Rational {
        Rational(Ratio::new(num, den))
    }

    pub fn integer(v: u64) -> Rational {
        Rational(Ratio::from_integer(v))
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.numer() == 0
    }

    pub fn scale(&self, k: u64) -> Rational {
        Rational(self.0 * k)
    }

    /// `⌈1/self⌉`, or `None` for zero.
    pub fn ceil_recip(&self) -> Option<u64> {
        (!self.is_zero()).then(|| self.denom().div_ceil(self.numer()))
    }

    /// `self * count` compared against an integer `bound`, exactly.
    pub fn times_at_least(&self, count: u64, bound: u64) -> bool {
        self.numer() as u128 * count as u128 >= bound as u128 * self.denom() as u128
    }
}

impl fmt::Display for Rational {
    /// Always `p/q`, also for integers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational `{0}`")]
pub struct ParseRationalError(String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let (n, d) = match s.trim().split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: u64 = n.parse().map_err(|_| err())?;
        let d: u64 = d.parse().map_err(|_| err())?;
        if d == 0 {
            return Err(err());
        }
        Ok(Rational::new(n, d))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
