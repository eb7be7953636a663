//! Canonical torus-knot representation and the closed-form invariants
//! derived from the parameters alone.
//!
//! `T(p,q)` and `T(q,p)` are the same knot, so every value is stored with
//! `p <= q`. Any pair containing a 1 is the unknot, stored as `T(1,1)`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest parameter accepted by [`TorusKnot::new`].
pub const DEFAULT_PARAMETER_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusKnot {
    p: u64,
    q: u64,
}

impl TorusKnot {
    pub const UNKNOT: TorusKnot = TorusKnot { p: 1, q: 1 };

    /// Normalizes `(p, q)` under the default parameter limit.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        Self::with_limit(p, q, DEFAULT_PARAMETER_LIMIT)
    }

    pub fn with_limit(p: i64, q: i64, limit: u64) -> Result<Self> {
        if p < 1 || q < 1 {
            return Err(Error::NonPositive(p, q));
        }
        for v in [p, q] {
            if v as u64 > limit {
                return Err(Error::TooLarge {
                    value: v,
                    limit: limit as i64,
                });
            }
        }
        let gcd = p.gcd(&q);
        if gcd != 1 {
            return Err(Error::NotCoprime { p, q, gcd });
        }
        if p == 1 || q == 1 {
            return Ok(Self::UNKNOT);
        }
        let (p, q) = if p <= q { (p, q) } else { (q, p) };
        Ok(TorusKnot {
            p: p as u64,
            q: q as u64,
        })
    }

    /// Smaller parameter (the number of strands of the standard braid).
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_unknot(&self) -> bool {
        self.p == 1
    }

    /// `min(p, q)`; the unknot representative has index 1.
    pub fn index(&self) -> u64 {
        self.p
    }

    /// `(p-1)(q-1)/2`, which is also the slice genus.
    pub fn unknotting_number(&self) -> u64 {
        (self.p - 1) * (self.q - 1) / 2
    }

    pub fn slice_genus(&self) -> u64 {
        self.unknotting_number()
    }

    /// Rasmussen's `s` for a positive torus knot.
    ///
    /// This is the stored identity `s = 2u`, valid for torus knots; no
    /// Khovanov homology is computed.
    pub fn rasmussen_s(&self) -> u64 {
        2 * self.unknotting_number()
    }

    /// `(p-1)(q-1)`, the rank of the first homology of a minimal Seifert
    /// surface and the size of the jump set.
    pub fn seifert_rank(&self) -> u64 {
        (self.p - 1) * (self.q - 1)
    }

    pub fn as_pair(&self) -> [u64; 2] {
        [self.p, self.q]
    }
}

/// Free-function form of [`TorusKnot::new`].
pub fn normalize(p: i64, q: i64) -> Result<TorusKnot> {
    TorusKnot::new(p, q)
}

impl fmt::Display for TorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.p, self.q)
    }
}

impl FromStr for TorusKnot {
    type Err = Error;

    /// Parses `T(p,q)`; whitespace around the numbers is tolerated.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "torus knot",
            input: s.to_string(),
        };
        let inner = s
            .trim()
            .strip_prefix("T(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(err)?;
        let (a, b) = inner.split_once(',').ok_or_else(err)?;
        let p: i64 = a.trim().parse().map_err(|_| err())?;
        let q: i64 = b.trim().parse().map_err(|_| err())?;
        TorusKnot::new(p, q)
    }
}

impl Serialize for TorusKnot {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.as_pair().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TorusKnot {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [p, q] = <[i64; 2]>::deserialize(deserializer)?;
        TorusKnot::new(p, q).map_err(serde::de::Error::custom)
    }
}

/// All torus knots (excluding the unknot) with unknotting number at most
/// `max_u`, sorted by `(p, q)`.
pub fn knots_up_to_unknotting_number(max_u: u64) -> Vec<TorusKnot> {
    let mut out = Vec::new();
    let mut p = 2u64;
    // smallest knot of index p is T(p, p+1) with u = p(p-1)/2
    while p * (p - 1) / 2 <= max_u {
        let mut q = p + 1;
        while (p - 1) * (q - 1) / 2 <= max_u {
            if p.gcd(&q) == 1 {
                out.push(TorusKnot { p, q });
            }
            q += 1;
        }
        p += 1;
    }
    out
}
