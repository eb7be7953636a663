//! Certificates for `T(2, 2k+1) ≤ T(3, ⌊3k/2 + 1⌋)`.
//!
//! Write `a = σ_1`, `b = σ_2` and `D = b a a b a a`, a word for the central
//! full twist `Δ²` of `B_3`. The construction rests on
//!
//! ```text
//! a^n b b a a b a a = a^n b D
//! ```
//!
//! whose left side is `a^{n+2} b a a` (a cyclic shift of `a^{n+4} b`) with
//! one pair `b b⁻¹` inserted and its negative letter flipped. Starting from
//! `a^{2k+1} b`, each round shifts by two, inserts the pair after `a^{n-4}`
//! and flips it, turning `a^n b E` into `a^{n-4} b E'` where `E` and `E'`
//! are central. Rounds stop at `a b`, giving `(ab)^{3j+1}`, or at `a^3 b`,
//! which one more shift turns into a conjugate of `(ab)^2`. Every flip is
//! negative-to-positive and there are `⌊k/2⌋` of them.

use super::cert::{CertStep, Certificate, Sign};
use crate::error::{Error, Result};

/// `⌊3k/2 + 1⌋`.
pub fn prop21_target_parameter(k: u64) -> u64 {
    (3 * k + 2) / 2
}

/// Number of crossing changes the construction uses: `⌊k/2⌋`.
pub fn prop21_crossing_changes(k: u64) -> u64 {
    k / 2
}

pub fn generate_prop21_certificate(k: u64) -> Result<Certificate> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "k = {k}; the construction needs k >= 2"
        )));
    }
    if k > 10_000 {
        return Err(Error::LimitExceeded(format!("k = {k}")));
    }
    let mut steps = vec![CertStep::MarkovStabilize {
        sign: Sign::Positive,
    }];
    let mut n = 2 * k as usize + 1;
    while n >= 5 {
        let at = n - 4;
        steps.push(CertStep::CyclicShift { amount: 2 });
        steps.push(CertStep::FreeInsertion {
            position: at,
            generator: 2,
            sign: Sign::Positive,
        });
        steps.push(CertStep::CrossingChange { position: at + 1 });
        n -= 4;
    }
    if n == 3 {
        steps.push(CertStep::CyclicShift { amount: 1 });
    }
    let m = prop21_target_parameter(k) as usize;
    Ok(Certificate {
        strands: 2,
        initial: vec![1; 2 * k as usize + 1],
        steps,
        final_word: [1, 2].repeat(m),
        crossing_changes: prop21_crossing_changes(k) as usize,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::cert::verify_certificate;
    use crate::torus::TorusKnot;

    #[test]
    fn small_cases_verify() {
        for (k, m, c) in [(2, 4, 1), (3, 5, 1), (4, 7, 2), (5, 8, 2)] {
            let cert = generate_prop21_certificate(k).unwrap();
            let r = verify_certificate(&cert);
            assert!(r.valid, "k={k}: {:?}", r.failure);
            assert_eq!(r.crossing_changes, c);
            assert_eq!(r.negative_to_positive, c);
            assert_eq!(r.initial_closure, TorusKnot::new(2, 2 * k as i64 + 1).ok());
            assert_eq!(r.final_closure, TorusKnot::new(3, m).ok());
        }
    }

    #[test]
    fn rejects_small_k() {
        assert!(generate_prop21_certificate(1).is_err());
        assert!(generate_prop21_certificate(0).is_err());
    }

    #[test]
    fn tampering_is_detected() {
        let mut cert = generate_prop21_certificate(4).unwrap();
        cert.final_word.push(1);
        assert!(!verify_certificate(&cert).valid);
        let mut cert = generate_prop21_certificate(4).unwrap();
        cert.steps
            .retain(|s| !matches!(s, CertStep::CyclicShift { .. }));
        assert!(!verify_certificate(&cert).valid);
    }
}
