//! Exact angles `θ` in the open unit interval, standing for `ω = e^{2πiθ}`.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A reduced fraction strictly between 0 and 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Angle(Rational64);

impl Angle {
    pub const HALF: Angle = Angle(Rational64::new_raw(1, 2));

    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::Parse {
                what: "angle",
                input: format!("{numer}/{denom}"),
            });
        }
        Self::from_rational(Rational64::new(numer, denom))
    }

    pub fn from_rational(r: Rational64) -> Result<Self> {
        if r <= Rational64::zero() || r >= Rational64::one() {
            return Err(Error::AngleOutOfRange(fraction_string(&r)));
        }
        Ok(Angle(r))
    }

    pub fn value(&self) -> Rational64 {
        self.0
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    /// `1 - θ`, i.e. the conjugate root of unity.
    pub fn conjugate(&self) -> Angle {
        Angle(Rational64::one() - self.0)
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for Angle {
    type Err = Error;

    /// Accepts only `a/b` in lowest terms; decimals are rejected.
    fn from_str(s: &str) -> Result<Self> {
        let r = parse_fraction(s)?;
        let angle = Angle::from_rational(r)?;
        if fraction_string(&r) != s.trim() {
            return Err(Error::NotReduced(s.trim().to_string()));
        }
        Ok(angle)
    }
}

impl Serialize for Angle {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Angle {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Canonical `num/den` rendering (`den` is always shown, even when 1).
pub fn fraction_string(r: &Rational64) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `a/b` with optional leading minus on `a`; `b` must be positive.
pub fn parse_fraction(s: &str) -> Result<Rational64> {
    let err = || Error::Parse {
        what: "fraction",
        input: s.to_string(),
    };
    let (a, b) = s.trim().split_once('/').ok_or_else(err)?;
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|c| c.is_ascii_digit());
    let a_digits = a.strip_prefix('-').unwrap_or(a);
    if !digits(a_digits) || !digits(b) {
        return Err(err());
    }
    let numer: i64 = a.parse().map_err(|_| err())?;
    let denom: i64 = b.parse().map_err(|_| err())?;
    if denom == 0 {
        return Err(err());
    }
    Ok(Rational64::new(numer, denom))
}

pub(crate) mod fraction_serde {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational64, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&fraction_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Rational64, D::Error> {
        let s = String::deserialize(d)?;
        parse_fraction(&s).map_err(serde::de::Error::custom)
    }
}

pub(crate) mod fraction_vec_serde {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(
        v: &[Rational64],
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&fraction_string(r))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Rational64>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| parse_fraction(s).map_err(serde::de::Error::custom))
            .collect()
    }
}
