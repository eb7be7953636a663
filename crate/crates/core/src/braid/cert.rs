//! Crossing-change certificates: a step list that carries one braid word to
//! another, where every step is either closure-preserving or a single sign
//! flip.
//!
//! The verifier is a checker, not a prover. It replays the steps literally,
//! requires each one to match the word it is applied to, and accepts the
//! replayed word if it equals the declared final word in the braid group.

use serde::{Deserialize, Serialize};

use super::garside::garside_normal_form;
use super::word::{BraidWord, Letter};
use crate::error::{Error, Result};
use crate::torus::TorusKnot;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// `σ_{i+1} σ_i σ_{i+1} → σ_i σ_{i+1} σ_i`.
    Forward,
    /// `σ_i σ_{i+1} σ_i → σ_{i+1} σ_i σ_{i+1}`.
    Backward,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    fn is_positive(self) -> bool {
        self == Sign::Positive
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CertStep {
    /// Three letters starting at `position`, all of one sign.
    BraidRelation {
        position: usize,
        direction: Direction,
    },
    /// Swaps the letters at `position` and `position + 1` (indices at least 2
    /// apart).
    FarCommutation { position: usize },
    /// Deletes the inverse pair at `position`.
    FreeReduction { position: usize },
    /// Inserts `σ_g^{±1} σ_g^{∓1}` before `position`, with `sign` giving the
    /// first letter.
    FreeInsertion {
        position: usize,
        generator: u32,
        sign: Sign,
    },
    /// Moves the first `amount` letters to the end.
    CyclicShift { amount: usize },
    /// Adds a strand and appends `σ_n^{±1}` on it.
    MarkovStabilize { sign: Sign },
    /// Removes the last strand, which must be crossed exactly once, by the
    /// final letter.
    MarkovDestabilize,
    /// Flips the sign of the letter at `position`.
    CrossingChange { position: usize },
}

impl CertStep {
    /// Whether the closure's knot type is unchanged.
    pub fn preserves_closure(&self) -> bool {
        !matches!(self, CertStep::CrossingChange { .. })
    }
}

fn mismatch(msg: String) -> Error {
    Error::StepFailed {
        index: 0,
        reason: msg,
    }
}

fn letter_at(w: &BraidWord, position: usize, span: usize) -> Result<&[Letter]> {
    position
        .checked_add(span)
        .and_then(|end| w.letters().get(position..end))
        .ok_or_else(|| {
            mismatch(format!(
                "position {position} out of range for a word of length {}",
                w.len()
            ))
        })
}

/// Applies one step. Errors carry index 0; [`verify_certificate`] fills in
/// the real step index.
pub fn apply_step(w: &BraidWord, step: &CertStep) -> Result<BraidWord> {
    let n = w.strands();
    let mut letters = w.letters().to_vec();
    match *step {
        CertStep::BraidRelation {
            position,
            direction,
        } => {
            let s = letter_at(w, position, 3)?;
            let (x, y, z) = (s[0], s[1], s[2]);
            let same_sign = x.sign() == y.sign() && y.sign() == z.sign();
            let (outer, inner) = (x.index() as i64, y.index() as i64);
            let ok_shape = x == z && same_sign && (outer - inner).abs() == 1;
            let ok_dir = match direction {
                Direction::Forward => outer == inner + 1,
                Direction::Backward => outer + 1 == inner,
            };
            if !(ok_shape && ok_dir) {
                return Err(mismatch(format!(
                    "no {direction:?} braid-relation pattern at position {position}: {x} {y} {z}"
                )));
            }
            letters[position..position + 3].copy_from_slice(&[y, x, y]);
        }
        CertStep::FarCommutation { position } => {
            let s = letter_at(w, position, 2)?;
            if (s[0].index() as i64 - s[1].index() as i64).abs() < 2 {
                return Err(mismatch(format!(
                    "letters {} {} at position {position} do not commute",
                    s[0], s[1]
                )));
            }
            letters.swap(position, position + 1);
        }
        CertStep::FreeReduction { position } => {
            let s = letter_at(w, position, 2)?;
            if s[0] != s[1].inverse() {
                return Err(mismatch(format!(
                    "letters {} {} at position {position} are not inverse",
                    s[0], s[1]
                )));
            }
            letters.drain(position..position + 2);
        }
        CertStep::FreeInsertion {
            position,
            generator,
            sign,
        } => {
            if position > letters.len() {
                return Err(mismatch(format!(
                    "insertion position {position} beyond word end"
                )));
            }
            if generator == 0 || generator as usize >= n {
                return Err(mismatch(format!(
                    "generator {generator} out of range for {n} strands"
                )));
            }
            let l = Letter::new(generator, sign.is_positive());
            letters.splice(position..position, [l, l.inverse()]);
        }
        CertStep::CyclicShift { amount } => {
            if amount > letters.len() {
                return Err(mismatch(format!(
                    "shift {amount} exceeds word length {}",
                    letters.len()
                )));
            }
            letters.rotate_left(amount);
        }
        CertStep::MarkovStabilize { sign } => {
            letters.push(Letter::new(n as u32, sign.is_positive()));
            return BraidWord::new(n + 1, letters);
        }
        CertStep::MarkovDestabilize => {
            if n < 2 {
                return Err(mismatch("cannot destabilize a one-strand braid".into()));
            }
            let top = (n - 1) as u32;
            let uses = letters.iter().filter(|l| l.index() == top).count();
            if uses != 1 || letters.last().map(|l| l.index()) != Some(top) {
                return Err(mismatch(format!(
                    "strand {n} must be crossed exactly once, by the last letter"
                )));
            }
            letters.pop();
            return BraidWord::new(n - 1, letters);
        }
        CertStep::CrossingChange { position } => {
            let s = letter_at(w, position, 1)?;
            letters[position] = s[0].inverse();
        }
    }
    BraidWord::new(n, letters)
}

/// JSON certificate as stored on disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub strands: usize,
    pub initial: Vec<i64>,
    pub steps: Vec<CertStep>,
    #[serde(rename = "final")]
    pub final_word: Vec<i64>,
    pub crossing_changes: usize,
}

/// Size limits applied while parsing and replaying untrusted certificates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyLimits {
    pub max_strands: usize,
    pub max_letters: usize,
    pub max_steps: usize,
}

impl Default for VerifyLimits {
    fn default() -> Self {
        VerifyLimits {
            max_strands: 32,
            max_letters: 4096,
            max_steps: 100_000,
        }
    }
}

impl Certificate {
    pub fn from_json_str(s: &str) -> Result<Certificate> {
        serde_json::from_str(s).map_err(|e| Error::Parse {
            what: "certificate",
            input: e.to_string(),
        })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    /// Strand count of the final word implied by the Markov steps.
    pub fn final_strands(&self) -> Option<usize> {
        let mut n = self.strands;
        for s in &self.steps {
            match s {
                CertStep::MarkovStabilize { .. } => n = n.checked_add(1)?,
                CertStep::MarkovDestabilize => n = n.checked_sub(1)?,
                _ => {}
            }
        }
        Some(n)
    }

    pub fn initial_word(&self) -> Result<BraidWord> {
        BraidWord::from_signed(self.strands, &self.initial)
    }

    pub fn declared_final_word(&self) -> Result<BraidWord> {
        let n = self
            .final_strands()
            .filter(|&n| n >= 1)
            .ok_or_else(|| Error::InvalidArgument("Markov steps leave no strands".into()))?;
        BraidWord::from_signed(n, &self.final_word)
    }

    /// Replays the steps and returns every intermediate word, starting with
    /// the initial one.
    pub fn replay(&self, limits: &VerifyLimits) -> Result<Vec<BraidWord>> {
        check_limits(self, limits)?;
        let mut words = vec![self.initial_word()?];
        for (index, step) in self.steps.iter().enumerate() {
            let next = apply_step(words.last().expect("nonempty"), step).map_err(|e| match e {
                Error::StepFailed { reason, .. } => Error::StepFailed { index, reason },
                other => Error::StepFailed {
                    index,
                    reason: other.to_string(),
                },
            })?;
            if next.strands() > limits.max_strands || next.len() > limits.max_letters {
                return Err(Error::LimitExceeded(format!(
                    "word after step {index} is too large"
                )));
            }
            words.push(next);
        }
        Ok(words)
    }
}

fn check_limits(c: &Certificate, limits: &VerifyLimits) -> Result<()> {
    if c.strands == 0 || c.strands > limits.max_strands {
        return Err(Error::LimitExceeded(format!("{} strands", c.strands)));
    }
    if c.initial.len() > limits.max_letters || c.final_word.len() > limits.max_letters {
        return Err(Error::LimitExceeded("word length".into()));
    }
    if c.steps.len() > limits.max_steps {
        return Err(Error::LimitExceeded(format!("{} steps", c.steps.len())));
    }
    match c.final_strands() {
        Some(n) if (1..=limits.max_strands).contains(&n) => Ok(()),
        _ => Err(Error::LimitExceeded(
            "strand count after Markov steps".into(),
        )),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationFailure {
    /// Index of the failing step; `None` for checks on the whole certificate.
    pub step: Option<usize>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub crossing_changes: usize,
    pub negative_to_positive: usize,
    pub positive_to_negative: usize,
    pub initial_closure: Option<TorusKnot>,
    pub final_closure: Option<TorusKnot>,
    pub failure: Option<VerificationFailure>,
}

impl VerificationReport {
    fn invalid(step: Option<usize>, reason: String) -> VerificationReport {
        VerificationReport {
            valid: false,
            crossing_changes: 0,
            negative_to_positive: 0,
            positive_to_negative: 0,
            initial_closure: None,
            final_closure: None,
            failure: Some(VerificationFailure { step, reason }),
        }
    }
}

pub fn verify_certificate(c: &Certificate) -> VerificationReport {
    verify_certificate_with_limits(c, &VerifyLimits::default())
}

pub fn verify_certificate_with_limits(
    c: &Certificate,
    limits: &VerifyLimits,
) -> VerificationReport {
    let words = match c.replay(limits) {
        Ok(w) => w,
        Err(Error::StepFailed { index, reason }) => {
            return VerificationReport::invalid(Some(index), reason)
        }
        Err(e) => return VerificationReport::invalid(None, e.to_string()),
    };
    let declared = match c.declared_final_word() {
        Ok(w) => w,
        Err(e) => return VerificationReport::invalid(None, format!("declared final word: {e}")),
    };
    let mut up = 0;
    let mut down = 0;
    for (step, before) in c.steps.iter().zip(&words) {
        if let CertStep::CrossingChange { position } = *step {
            if before.letters()[position].is_positive() {
                down += 1;
            } else {
                up += 1;
            }
        }
    }
    let mut report = VerificationReport {
        valid: true,
        crossing_changes: up + down,
        negative_to_positive: up,
        positive_to_negative: down,
        initial_closure: recognize_torus_closure(&words[0]),
        final_closure: None,
        failure: None,
    };
    let last = words.last().expect("nonempty");
    if garside_normal_form(last) != garside_normal_form(&declared) {
        report.valid = false;
        report.failure = Some(VerificationFailure {
            step: None,
            reason: "replayed word differs from the declared final word in the braid group".into(),
        });
    } else if up + down != c.crossing_changes {
        report.valid = false;
        report.failure = Some(VerificationFailure {
            step: None,
            reason: format!(
                "declared {} crossing changes, found {}",
                c.crossing_changes,
                up + down
            ),
        });
    }
    report.final_closure = recognize_torus_closure(&declared);
    report
}

/// Recognizes a standard torus-knot closure.
///
/// Last strands crossed exactly once are destabilized greedily; the rest is
/// compared, over all cyclic shifts, with `(σ_1 ⋯ σ_{p-1})^q` in normal
/// form. `None` means "not recognized", not "not a torus knot".
pub fn recognize_torus_closure(w: &BraidWord) -> Option<TorusKnot> {
    if w.closure_components() != 1 {
        return None;
    }
    let mut w = w.clone();
    while w.strands() > 1 {
        let top = (w.strands() - 1) as u32;
        let positions: Vec<usize> = (0..w.len())
            .filter(|&k| w.letters()[k].index() == top)
            .collect();
        if positions.len() != 1 {
            break;
        }
        let mut letters = w.rotated(positions[0] + 1).letters().to_vec();
        letters.pop();
        w = BraidWord::new(w.strands() - 1, letters).expect("lower indices stay in range");
    }
    let p = w.strands();
    if p == 1 {
        return Some(TorusKnot::UNKNOT);
    }
    let e = w.exponent_sum();
    let step = (p - 1) as i64;
    if e <= 0 || e % step != 0 {
        return None;
    }
    let q = e / step;
    let knot = TorusKnot::new(p as i64, q).ok()?;
    let target = garside_normal_form(&BraidWord::torus(p, q as usize));
    (0..w.len().max(1))
        .any(|r| garside_normal_form(&w.rotated(r)) == target)
        .then_some(knot)
}
