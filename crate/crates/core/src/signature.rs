//! Levine-Tristram signatures of torus knots from the jump-set counting
//! formula.
//!
//! For `T(p,q)` the jump set is `S = { k/p + l/q : 1 <= k < p, 1 <= l < q }`
//! and
//!
//! ```text
//! σ_θ(T(p,q)) = #(S ∩ [θ, θ+1]) - #(S \ (θ, θ+1))
//! ```
//!
//! with the sign convention under which positive torus knots have positive
//! signature. Everything here is exact: angles are rationals and the formula
//! is a lattice-point count, evaluated in `O(min(p,q))` without materializing
//! `S`.

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::angle::{fraction_vec_serde, Angle};
use crate::error::{Error, Result};
use crate::torus::TorusKnot;

/// The sorted jump set of a torus knot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpSet {
    pub knot: TorusKnot,
    pub elements: Vec<Rational64>,
}

pub fn jump_set(knot: TorusKnot) -> JumpSet {
    let (p, q) = (knot.p() as i64, knot.q() as i64);
    let mut elements = Vec::with_capacity(knot.seifert_rank() as usize);
    for k in 1..p {
        for l in 1..q {
            elements.push(Rational64::new(k * q + l * p, p * q));
        }
    }
    elements.sort();
    JumpSet { knot, elements }
}

/// Counts pairs `(k, l)` with `lo <= k*q + l*p <= hi`.
fn count_lattice(p: i128, q: i128, lo: i128, hi: i128) -> i128 {
    if lo > hi {
        return 0;
    }
    let mut total = 0;
    for k in 1..p {
        let base = k * q;
        let l_min = Integer::div_ceil(&(lo - base), &p).max(1);
        let l_max = Integer::div_floor(&(hi - base), &p).min(q - 1);
        if l_max >= l_min {
            total += l_max - l_min + 1;
        }
    }
    total
}

/// Counting formula at an arbitrary rational `θ` in `[0, 1]`.
///
/// Defined at nonregular angles too; the closed/open interval asymmetry is
/// kept exactly.
pub fn signature_at(knot: TorusKnot, theta: Rational64) -> i64 {
    if knot.is_unknot() {
        return 0;
    }
    let (p, q) = (knot.p() as i128, knot.q() as i128);
    let (a, b) = (*theta.numer() as i128, *theta.denom() as i128);
    let pq = p * q;
    // θ <= (kq + lp)/pq  <=>  a*pq <= b*x
    let lower = a * pq;
    let upper = (a + b) * pq;
    let closed = count_lattice(
        p,
        q,
        Integer::div_ceil(&lower, &b),
        Integer::div_floor(&upper, &b),
    );
    let open = count_lattice(
        p,
        q,
        Integer::div_floor(&lower, &b) + 1,
        Integer::div_ceil(&upper, &b) - 1,
    );
    let total = (p - 1) * (q - 1);
    (closed - (total - open)) as i64
}

/// `σ_ω(T)` for `ω = e^{2πiθ}`.
pub fn lt_signature(knot: TorusKnot, theta: Angle) -> i64 {
    signature_at(knot, theta.value())
}

/// Whether `ω = e^{2πiθ}` avoids the roots of the Alexander polynomial,
/// i.e. `θ` is not a residue of the jump set mod 1.
///
/// The residues are exactly `j/(pq)` with `p ∤ j` and `q ∤ j`.
pub fn is_regular(knot: TorusKnot, theta: Angle) -> bool {
    if knot.is_unknot() {
        return true;
    }
    let (p, q) = (knot.p() as i128, knot.q() as i128);
    let (a, b) = (theta.numer() as i128, theta.denom() as i128);
    let pq = p * q;
    if pq % b != 0 {
        return true;
    }
    let j = a * (pq / b);
    j % p == 0 || j % q == 0
}

/// `σ_{-1}`, the classical signature.
pub fn classical_signature(knot: TorusKnot) -> i64 {
    lt_signature(knot, Angle::HALF)
}

/// `u(T) - σ_{-1}(T)/2`.
pub fn signature_defect(knot: TorusKnot) -> u64 {
    let u = knot.unknotting_number() as i64;
    let d = u - classical_signature(knot) / 2;
    debug_assert!(d >= 0);
    d as u64
}

/// Piecewise-constant signature function on `(0, 1)`.
///
/// `values[i]` holds on the open interval between `breakpoints[i-1]` and
/// `breakpoints[i]`, with `0` and `1` as the outer ends.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureProfile {
    pub knot: TorusKnot,
    #[serde(with = "fraction_vec_serde")]
    pub breakpoints: Vec<Rational64>,
    pub values: Vec<i64>,
}

/// Builds the profile by sweeping the jump residues `j/(pq)` in order.
///
/// Crossing a residue `x` changes the signature by `-2` if `x ∈ S` (it leaves
/// the window `[θ, θ+1]`) and by `+2` if `x + 1 ∈ S` (it enters).
pub fn signature_profile(knot: TorusKnot) -> SignatureProfile {
    if knot.is_unknot() {
        return SignatureProfile {
            knot,
            breakpoints: Vec::new(),
            values: vec![0],
        };
    }
    let (p, q) = (knot.p() as i64, knot.q() as i64);
    let pq = p * q;
    let q_inv_mod_p = mod_inverse(q, p);
    let p_inv_mod_q = mod_inverse(p, q);
    let mut breakpoints = Vec::with_capacity(knot.seifert_rank() as usize);
    let mut values = Vec::with_capacity(breakpoints.capacity() + 1);
    let mut current = 0i64;
    values.push(current);
    for j in 1..pq {
        if j % p == 0 || j % q == 0 {
            continue;
        }
        let k = (j % p) * q_inv_mod_p % p;
        let l = (j % q) * p_inv_mod_q % q;
        if k * q + l * p == j {
            current -= 2;
        } else {
            current += 2;
        }
        breakpoints.push(Rational64::new(j, pq));
        values.push(current);
    }
    SignatureProfile {
        knot,
        breakpoints,
        values,
    }
}

fn mod_inverse(a: i64, m: i64) -> i64 {
    if m == 1 {
        return 0;
    }
    let e = a.extended_gcd(&m);
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(m)
}

impl SignatureProfile {
    /// Midpoints of all intervals of constancy, in increasing order.
    pub fn midpoints(&self) -> Vec<Rational64> {
        interval_midpoints(&self.breakpoints)
    }

    /// Value at `θ`, or `None` if `θ` is a breakpoint.
    pub fn value_at(&self, theta: Rational64) -> Option<i64> {
        match self.breakpoints.binary_search(&theta) {
            Ok(_) => None,
            Err(i) => Some(self.values[i]),
        }
    }

    pub fn max_value(&self) -> i64 {
        self.values.iter().copied().max().unwrap_or(0)
    }

    /// Structural checks for a profile received from outside.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| {
            Err(Error::InvalidArgument(format!(
                "profile of {}: {msg}",
                self.knot
            )))
        };
        if self.values.len() != self.breakpoints.len() + 1 {
            return bad("expected one more value than breakpoints");
        }
        if !self.breakpoints.windows(2).all(|w| w[0] < w[1]) {
            return bad("breakpoints must be strictly increasing");
        }
        let zero = Rational64::zero();
        let one = Rational64::one();
        if self.breakpoints.iter().any(|b| *b <= zero || *b >= one) {
            return bad("breakpoints must lie in (0,1)");
        }
        if self.values.first() != Some(&0) || self.values.last() != Some(&0) {
            return bad("boundary values must be 0");
        }
        if !self.values.windows(2).all(|w| w[0].abs_diff(w[1]) == 2) {
            return bad("adjacent values must differ by 2");
        }
        Ok(())
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let profile: SignatureProfile = serde_json::from_str(s).map_err(|e| Error::Parse {
            what: "signature profile",
            input: e.to_string(),
        })?;
        profile.validate()?;
        Ok(profile)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("profile serializes")
    }
}

/// Midpoints of `(0, b_0), (b_0, b_1), ..., (b_last, 1)` for sorted points in
/// `(0, 1)`.
pub fn interval_midpoints(breakpoints: &[Rational64]) -> Vec<Rational64> {
    let two = Rational64::from_integer(2);
    let mut out = Vec::with_capacity(breakpoints.len() + 1);
    let mut prev = Rational64::zero();
    for &b in breakpoints
        .iter()
        .chain(std::iter::once(&Rational64::one()))
    {
        out.push((prev + b) / two);
        prev = b;
    }
    out
}

/// Sorted union of the breakpoints of several profiles.
pub fn merged_breakpoints(profiles: &[&SignatureProfile]) -> Vec<Rational64> {
    let mut all: Vec<Rational64> = profiles
        .iter()
        .flat_map(|p| p.breakpoints.iter().copied())
        .collect();
    all.sort();
    all.dedup();
    all
}

/// Linear approximation of `σ_θ(T(b,m))`:
/// `m (2(b - (2l-1))θ + 2l(l-1)/b)` where `(l-1)/b < θ <= l/b`.
pub fn gg_linear_approx(b: i64, m: i64, theta: Angle) -> Result<Rational64> {
    if b < 2 {
        return Err(Error::InvalidArgument(format!(
            "strand parameter b = {b} must be at least 2"
        )));
    }
    if m < 1 || b.gcd(&m) != 1 {
        return Err(Error::InvalidArgument(format!(
            "m = {m} must be positive and coprime to b = {b}"
        )));
    }
    Ok(Rational64::from_integer(m) * gg_slope_form(b, theta.value()))
}

/// The per-unit-`m` linear form `2(b - (2l-1))θ + 2l(l-1)/b`.
pub fn gg_slope_form(b: i64, theta: Rational64) -> Rational64 {
    // l = ceil(θ b) realizes (l-1)/b < θ <= l/b
    let tb = theta * Rational64::from_integer(b);
    let l = tb.ceil().to_integer();
    Rational64::from_integer(2 * (b - (2 * l - 1))) * theta + Rational64::new(2 * l * (l - 1), b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(p: i64, q: i64) -> TorusKnot {
        TorusKnot::new(p, q).unwrap()
    }

    fn r(a: i64, b: i64) -> Rational64 {
        Rational64::new(a, b)
    }

    fn ang(a: i64, b: i64) -> Angle {
        Angle::new(a, b).unwrap()
    }

    /// Direct evaluation of the counting formula on the enumerated set.
    fn brute_signature(knot: TorusKnot, theta: Rational64) -> i64 {
        let s = jump_set(knot).elements;
        let upper = theta + Rational64::one();
        let inside = s.iter().filter(|x| theta <= **x && **x <= upper).count() as i64;
        let outside = s.iter().filter(|x| !(theta < **x && **x < upper)).count() as i64;
        inside - outside
    }

    #[test]
    fn jump_set_examples() {
        assert_eq!(jump_set(t(2, 3)).elements, vec![r(5, 6), r(7, 6)]);
        let expected: Vec<_> = [8, 11, 13, 14, 16, 17, 19, 22]
            .iter()
            .map(|&n| r(n, 15))
            .collect();
        assert_eq!(jump_set(t(3, 5)).elements, expected);
        assert!(jump_set(TorusKnot::UNKNOT).elements.is_empty());
    }

    #[test]
    fn signature_examples() {
        assert_eq!(lt_signature(t(2, 3), Angle::HALF), 2);
        assert_eq!(lt_signature(t(3, 5), Angle::HALF), 8);
        assert_eq!(lt_signature(t(3, 7), Angle::HALF), 8);
        assert_eq!(lt_signature(t(2, 9), ang(3, 20)), 2);
        assert_eq!(lt_signature(TorusKnot::UNKNOT, ang(1, 3)), 0);
        // nonregular angle: the counting formula is still total
        assert_eq!(
            signature_at(t(2, 3), r(5, 6)),
            brute_signature(t(2, 3), r(5, 6))
        );
    }

    #[test]
    fn limit_towards_zero_vanishes() {
        for (p, q) in [(2, 3), (3, 5), (4, 7), (5, 9)] {
            let knot = t(p, q);
            let tiny = Angle::new(1, 10 * p * q).unwrap();
            assert_eq!(lt_signature(knot, tiny), 0);
        }
    }

    #[test]
    fn regularity() {
        assert!(is_regular(t(2, 3), Angle::HALF));
        assert!(!is_regular(t(2, 3), ang(5, 6)));
        assert!(!is_regular(t(2, 3), ang(1, 6)));
        assert!(is_regular(TorusKnot::UNKNOT, ang(1, 6)));
        assert!(is_regular(t(3, 5), ang(1, 5)));
        assert!(!is_regular(t(3, 5), ang(1, 15)));
    }

    #[test]
    fn profile_examples() {
        let p29 = signature_profile(t(2, 9));
        let bp: Vec<_> = [1, 3, 5, 7, 11, 13, 15, 17]
            .iter()
            .map(|&n| r(n, 18))
            .collect();
        assert_eq!(p29.breakpoints, bp);
        assert_eq!(p29.values, vec![0, 2, 4, 6, 8, 6, 4, 2, 0]);

        let p35 = signature_profile(t(3, 5));
        let bp: Vec<_> = [1, 2, 4, 7, 8, 11, 13, 14]
            .iter()
            .map(|&n| r(n, 15))
            .collect();
        assert_eq!(p35.breakpoints, bp);
        assert_eq!(p35.values, vec![0, 2, 4, 6, 8, 6, 4, 2, 0]);

        let unknot = signature_profile(TorusKnot::UNKNOT);
        assert!(unknot.breakpoints.is_empty());
        assert_eq!(unknot.values, vec![0]);
    }

    #[test]
    fn classical_and_defect() {
        for n in (3..=31).step_by(2) {
            assert_eq!(classical_signature(t(2, n)), n - 1);
            assert_eq!(signature_defect(t(2, n)), 0);
        }
        assert_eq!(classical_signature(t(3, 4)), 6);
        assert_eq!(classical_signature(t(3, 7)), 8);
        assert_eq!(signature_defect(t(2, 9)), 0);
        assert_eq!(signature_defect(t(3, 5)), 0);
        assert_eq!(signature_defect(t(3, 7)), 2);
    }

    #[test]
    fn gg_examples() {
        assert_eq!(gg_linear_approx(2, 3, Angle::HALF).unwrap(), r(3, 1));
        assert_eq!(gg_linear_approx(3, 5, Angle::HALF).unwrap(), r(20, 3));
        // l = 1 branch has no constant term
        let theta = ang(1, 100);
        for (b, m) in [(2, 5), (3, 7), (5, 12)] {
            let expected = Rational64::from_integer(2 * (b - 1) * m) * theta.value();
            assert_eq!(gg_linear_approx(b, m, theta).unwrap(), expected);
        }
        // tie at θ = l/b belongs to l
        assert_eq!(gg_slope_form(4, r(1, 2)), r(2, 2) + r(4, 4));
        assert!(gg_linear_approx(1, 3, Angle::HALF).is_err());
        assert!(gg_linear_approx(3, 6, Angle::HALF).is_err());
    }

    #[test]
    fn counting_matches_enumeration() {
        for p in 2..=7i64 {
            for q in (p + 1)..=11 {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let knot = t(p, q);
                let den = 2 * p * q;
                for num in 0..=den {
                    let theta = r(num, den);
                    assert_eq!(
                        signature_at(knot, theta),
                        brute_signature(knot, theta),
                        "{knot} at {theta}"
                    );
                }
            }
        }
    }

    #[test]
    fn profile_matches_midpoint_evaluation() {
        for p in 2..=9i64 {
            for q in (p + 1)..=13 {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let knot = t(p, q);
                let profile = signature_profile(knot);
                profile.validate().unwrap();
                assert_eq!(profile.breakpoints.len() as u64, knot.seifert_rank());
                for (mid, value) in profile.midpoints().iter().zip(&profile.values) {
                    assert_eq!(brute_signature(knot, *mid), *value, "{knot} at {mid}");
                }
            }
        }
    }

    #[test]
    fn profile_json_shape() {
        let json = signature_profile(t(2, 3)).to_json_string();
        assert_eq!(
            json,
            r#"{"knot":[2,3],"breakpoints":["1/6","5/6"],"values":[0,2,0]}"#
        );
        let back = SignatureProfile::from_json_str(&json).unwrap();
        assert_eq!(back, signature_profile(t(2, 3)));
        let tampered = r#"{"knot":[2,3],"breakpoints":["1/6","5/6"],"values":[0,4,0]}"#;
        assert!(SignatureProfile::from_json_str(tampered).is_err());
    }
}
