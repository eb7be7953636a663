use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `σ_i` (positive) or `σ_i^{-1}` (negative); stored as `±i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Letter(i32);

impl Letter {
    pub fn new(index: u32, positive: bool) -> Letter {
        assert!(index >= 1, "generator indices start at 1");
        let i = index as i32;
        Letter(if positive { i } else { -i })
    }

    pub fn pos(index: u32) -> Letter {
        Letter::new(index, true)
    }

    pub fn neg(index: u32) -> Letter {
        Letter::new(index, false)
    }

    pub fn from_signed(v: i32) -> Option<Letter> {
        (v != 0 && v != i32::MIN).then_some(Letter(v))
    }

    pub fn index(self) -> u32 {
        self.0.unsigned_abs()
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn sign(self) -> i64 {
        self.0.signum() as i64
    }

    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }

    pub fn signed(self) -> i32 {
        self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_positive() {
            write!(f, "s{}", self.index())
        } else {
            write!(f, "s{}^-1", self.index())
        }
    }
}

/// A word in the Artin generators of the braid group on `strands` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<BraidWord> {
        if strands == 0 {
            return Err(Error::InvalidArgument(
                "a braid needs at least one strand".into(),
            ));
        }
        for l in &letters {
            if l.index() as usize >= strands {
                return Err(Error::GeneratorOutOfRange {
                    index: l.index() as i64,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> BraidWord {
        BraidWord::new(strands, Vec::new()).expect("at least one strand")
    }

    /// Builds a word from the `±i` encoding used in certificate files.
    pub fn from_signed(strands: usize, letters: &[i64]) -> Result<BraidWord> {
        let letters = letters
            .iter()
            .map(|&v| {
                i32::try_from(v)
                    .ok()
                    .and_then(Letter::from_signed)
                    .ok_or(Error::GeneratorOutOfRange { index: v, strands })
            })
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(strands, letters)
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.signed() as i64).collect()
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign()).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.is_positive())
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Concatenation; both words must live on the same number of strands.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.strands, other.strands, "strand counts differ");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    pub fn pow(&self, n: usize) -> BraidWord {
        let mut letters = Vec::with_capacity(self.len() * n);
        for _ in 0..n {
            letters.extend_from_slice(&self.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Moves the first `amount` letters to the end (conjugation).
    pub fn rotated(&self, amount: usize) -> BraidWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            letters.rotate_left(amount % self.letters.len());
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    pub(crate) fn letters_mut(&mut self) -> &mut Vec<Letter> {
        &mut self.letters
    }

    /// Strand permutation induced by the word (signs ignored): `perm[i]` is
    /// the final position of the strand starting at position `i`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect(); // at[pos] = strand
        for l in &self.letters {
            let i = l.index() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    /// Number of components of the closure.
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
            }
        }
        cycles
    }

    /// `(σ_1 σ_2 ⋯ σ_{p-1})^q` on `p` strands.
    pub fn torus(p: usize, q: usize) -> BraidWord {
        let block: Vec<Letter> = (1..p as u32).map(Letter::pos).collect();
        BraidWord::new(p, block).expect("valid generators").pow(q)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}[", self.strands)?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Parses the [`Display`](fmt::Display) form, e.g. `B3[s1 s2^-1 s1]`.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "braid word",
            input: s.chars().take(64).collect(),
        };
        let rest = s.trim().strip_prefix('B').ok_or_else(err)?;
        let (n, body) = rest.split_once('[').ok_or_else(err)?;
        let body = body.strip_suffix(']').ok_or_else(err)?;
        let strands: usize = n.parse().map_err(|_| err())?;
        let mut letters = Vec::new();
        for tok in body.split_whitespace() {
            let tok = tok.strip_prefix('s').ok_or_else(err)?;
            let (idx, positive) = match tok.strip_suffix("^-1") {
                Some(i) => (i, false),
                None => (tok, true),
            };
            if idx.is_empty() || !idx.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            let index: u32 = idx.parse().map_err(|_| err())?;
            if index == 0 || index > i32::MAX as u32 {
                return Err(err());
            }
            letters.push(Letter::new(index, positive));
        }
        BraidWord::new(strands, letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form_round_trips() {
        let w = BraidWord::from_signed(3, &[1, -2, 1]).unwrap();
        assert_eq!(w.to_string(), "B3[s1 s2^-1 s1]");
        assert_eq!(w.to_string().parse::<BraidWord>().unwrap(), w);
        assert_eq!("B1[]".parse::<BraidWord>().unwrap(), BraidWord::identity(1));
        assert!("B2[s2]".parse::<BraidWord>().is_err());
        assert!("B2[s0]".parse::<BraidWord>().is_err());
        assert!("B2[t1]".parse::<BraidWord>().is_err());
    }

    #[test]
    fn generator_range_is_checked() {
        assert!(BraidWord::from_signed(2, &[2]).is_err());
        assert!(BraidWord::from_signed(3, &[0]).is_err());
        assert!(BraidWord::from_signed(3, &[i64::MAX]).is_err());
        assert!(BraidWord::new(0, vec![]).is_err());
    }

    #[test]
    fn closure_components() {
        assert_eq!(BraidWord::torus(2, 3).closure_components(), 1);
        assert_eq!(BraidWord::torus(2, 2).closure_components(), 2);
        assert_eq!(BraidWord::torus(3, 4).closure_components(), 1);
        assert_eq!(BraidWord::torus(3, 3).closure_components(), 3);
        assert_eq!(BraidWord::identity(1).closure_components(), 1);
    }

    #[test]
    fn torus_words() {
        assert_eq!(BraidWord::torus(2, 3).to_signed(), vec![1, 1, 1]);
        assert_eq!(
            BraidWord::torus(3, 4).to_signed(),
            vec![1, 2, 1, 2, 1, 2, 1, 2]
        );
        assert!(BraidWord::torus(1, 1).is_empty());
    }
}
