//! Seifert matrices of braid closures, the associated Hermitian forms and
//! Alexander polynomials.
//!
//! This is an independent path to the signature: it never consults the jump
//! set, so agreement with [`crate::signature`] is a genuine cross-check.
//!
//! The surface is the standard one for a closed braid: one disk per strand,
//! stacked, joined by a twisted band at every crossing. For each gap `i` the
//! loop through two consecutive bands of that gap is a basis element, giving
//! `c - n + 1` loops for a knot with `c` crossings on `n` strands. Linking
//! numbers between a loop and the push-off of another are:
//!
//! * self: `-(ε_a + ε_b)/2` for the two band signs;
//! * consecutive loops in one gap sharing a band of sign `ε`: `+1` in the
//!   (earlier, later) slot when `ε = +1`, `-1` in the (later, earlier) slot
//!   when `ε = -1`;
//! * loops in neighboring gaps `i`, `i+1` whose band intervals interleave:
//!   `+1` in the (gap i, gap i+1) slot when the gap-`i` loop starts first,
//!   `-1` in that slot otherwise.
//!
//! The convention was fixed against Alexander polynomials and conjugation
//! invariance; its global sign is pinned at runtime so that the trefoil has
//! signature `+2` (see [`convention_sign`]).

use std::sync::OnceLock;

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::angle::Angle;
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::torus::TorusKnot;

/// Relative threshold below which an eigenvalue counts as zero.
pub const ZERO_EIGENVALUE_TOLERANCE: f64 = 1e-9;
/// Eigenvalues between the zero threshold and this bound are ambiguous.
pub const AMBIGUOUS_EIGENVALUE_BOUND: f64 = 1e-6;

/// `(σ_1 ⋯ σ_{p-1})^q` on `p` strands; the empty word on one strand for the
/// unknot.
pub fn torus_braid(knot: TorusKnot) -> BraidWord {
    if knot.is_unknot() {
        return BraidWord::identity(1);
    }
    BraidWord::torus(knot.p() as usize, knot.q() as usize)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertMatrix {
    /// Row-major square integer matrix.
    pub entries: Vec<Vec<i64>>,
    pub basis_note: String,
}

impl SeifertMatrix {
    pub fn from_rows(
        entries: Vec<Vec<i64>>,
        basis_note: impl Into<String>,
    ) -> Result<SeifertMatrix> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument(
                "Seifert matrix must be square".into(),
            ));
        }
        Ok(SeifertMatrix {
            entries,
            basis_note: basis_note.into(),
        })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// `det(A - Aᵗ)`, which is `1` for a knot.
    pub fn skew_determinant(&self) -> BigInt {
        let n = self.dim();
        let m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| BigInt::from(self.get(i, j) - self.get(j, i)))
                    .collect()
            })
            .collect();
        bareiss_determinant(m)
    }
}

/// `+1` or `-1`: the factor that makes the trefoil's signature at `θ = 1/2`
/// come out as `+2`. Computed once from the raw construction.
pub fn convention_sign() -> i64 {
    static SIGN: OnceLock<i64> = OnceLock::new();
    *SIGN.get_or_init(|| {
        let trefoil = BraidWord::torus(2, 3);
        let raw = raw_seifert_entries(&trefoil);
        let a = SeifertMatrix::from_rows(raw, "").expect("square");
        let sigma = signature_of_form(&hermitian_form(&a, Angle::HALF)).expect("exact path");
        match sigma {
            2 => 1,
            -2 => -1,
            other => panic!("trefoil signature {other} from the raw construction"),
        }
    })
}

fn raw_seifert_entries(w: &BraidWord) -> Vec<Vec<i64>> {
    let letters = w.letters();
    let sign = |k: usize| letters[k].sign();
    // (gap, first band position, second band position)
    let mut loops = Vec::new();
    for gap in 1..w.strands() as u32 {
        let pos: Vec<usize> = (0..letters.len())
            .filter(|&k| letters[k].index() == gap)
            .collect();
        for pair in pos.windows(2) {
            loops.push((gap, pair[0], pair[1]));
        }
    }
    let d = loops.len();
    let mut a = vec![vec![0i64; d]; d];
    for (x, &(g, a1, a2)) in loops.iter().enumerate() {
        a[x][x] = -(sign(a1) + sign(a2)) / 2;
        for (y, &(h, b1, b2)) in loops.iter().enumerate() {
            if h == g && b1 == a2 {
                if sign(a2) > 0 {
                    a[x][y] += 1;
                } else {
                    a[y][x] -= 1;
                }
            }
            if h == g + 1 {
                if a1 < b1 && b1 < a2 && a2 < b2 {
                    a[x][y] += 1;
                } else if b1 < a1 && a1 < b2 && b2 < a2 {
                    a[x][y] -= 1;
                }
            }
        }
    }
    a
}

/// Seifert matrix of the closure of `w`, which must be a knot.
pub fn seifert_matrix(w: &BraidWord) -> Result<SeifertMatrix> {
    let components = w.closure_components();
    if components != 1 {
        return Err(Error::NotAKnot(components));
    }
    let s = convention_sign();
    let entries = raw_seifert_entries(w)
        .into_iter()
        .map(|row| row.into_iter().map(|v| s * v).collect())
        .collect();
    SeifertMatrix::from_rows(
        entries,
        format!(
            "braid-closure surface on {} strands; basis: loops through consecutive bands of each gap, ordered by gap then position",
            w.strands()
        ),
    )
}

/// `[[-k, 1], [0, -1]]`, a Seifert matrix of the positive twist knot with
/// `2k - 1` half-twists.
pub fn twist_knot_seifert_matrix(k: u32) -> Result<SeifertMatrix> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "twist parameter must be at least 1".into(),
        ));
    }
    SeifertMatrix::from_rows(
        vec![vec![-(k as i64), 1], vec![0, -1]],
        format!("twist knot, k = {k}"),
    )
}

/// `(1-ω)A + (1-ω̄)Aᵗ` for `ω = e^{2πiθ}`.
#[derive(Debug, Clone, PartialEq)]
pub enum HermitianForm {
    /// The real symmetric integer form `2(A + Aᵗ)` at `θ = 1/2`.
    Integer(Vec<Vec<i64>>),
    /// `X + iY` with `X` symmetric and `Y` antisymmetric.
    Complex { re: DMatrix<f64>, im: DMatrix<f64> },
}

impl HermitianForm {
    pub fn dim(&self) -> usize {
        match self {
            HermitianForm::Integer(m) => m.len(),
            HermitianForm::Complex { re, .. } => re.nrows(),
        }
    }
}

/// Exact integer form at `θ = 1/2`, floating-point form elsewhere.
pub fn hermitian_form(a: &SeifertMatrix, theta: Angle) -> HermitianForm {
    if theta == Angle::HALF {
        let n = a.dim();
        HermitianForm::Integer(
            (0..n)
                .map(|i| (0..n).map(|j| 2 * (a.get(i, j) + a.get(j, i))).collect())
                .collect(),
        )
    } else {
        hermitian_form_numeric(a, theta)
    }
}

/// Floating-point form at any `θ`, including `1/2`.
pub fn hermitian_form_numeric(a: &SeifertMatrix, theta: Angle) -> HermitianForm {
    let n = a.dim();
    let phase = 2.0 * std::f64::consts::PI * theta.to_f64();
    let (c, s) = (phase.cos(), phase.sin());
    let re = DMatrix::from_fn(n, n, |i, j| (1.0 - c) * (a.get(i, j) + a.get(j, i)) as f64);
    let im = DMatrix::from_fn(n, n, |i, j| s * (a.get(j, i) - a.get(i, j)) as f64);
    HermitianForm::Complex { re, im }
}

/// Number of negative eigenvalues minus the number of positive ones.
///
/// The integer form is diagonalized exactly by congruence. The complex form
/// `X + iY` is replaced by the real symmetric `[[X, -Y], [Y, X]]`, whose
/// signature is exactly twice that of the original.
pub fn signature_of_form(h: &HermitianForm) -> Result<i64> {
    match h {
        HermitianForm::Integer(m) => Ok(congruence_signature(m)),
        HermitianForm::Complex { re, im } => {
            let n = re.nrows();
            if n == 0 {
                return Ok(0);
            }
            let doubled = DMatrix::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
                (true, true) => re[(i, j)],
                (true, false) => -im[(i, j - n)],
                (false, true) => im[(i - n, j)],
                (false, false) => re[(i - n, j - n)],
            });
            let s = float_signature(doubled)?;
            debug_assert_eq!(s % 2, 0);
            Ok(s / 2)
        }
    }
}

fn float_signature(m: DMatrix<f64>) -> Result<i64> {
    let norm = m.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    if norm == 0.0 {
        return Ok(0);
    }
    let eigen = SymmetricEigen::new(m);
    let mut sig = 0i64;
    for &lambda in eigen.eigenvalues.iter() {
        let rel = lambda.abs() / norm;
        if rel < ZERO_EIGENVALUE_TOLERANCE {
            continue;
        }
        if rel < AMBIGUOUS_EIGENVALUE_BOUND {
            return Err(Error::AmbiguousEigenvalue {
                value: lambda,
                norm,
            });
        }
        sig += if lambda < 0.0 { 1 } else { -1 };
    }
    Ok(sig)
}

/// Exact signature (negatives minus positives) of an integer symmetric
/// matrix by symmetric Gaussian elimination over the rationals.
#[allow(clippy::needless_range_loop)] // row and column updates read clearer indexed
fn congruence_signature(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| {
            r.iter()
                .map(|&v| BigRational::from_integer(v.into()))
                .collect()
        })
        .collect();
    let mut sig = 0i64;
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(p) = (k + 1..n).find(|&p| !a[p][p].is_zero()) {
                a.swap(k, p);
                for row in a.iter_mut() {
                    row.swap(k, p);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // row/col k += row/col j makes the pivot 2 a[k][j] + a[j][j] = 2 a[k][j]
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[k][c] += v;
                }
                for row in a.iter_mut() {
                    let v = row[j].clone();
                    row[k] += v;
                }
            } else {
                continue; // row and column k vanish
            }
        }
        let pivot = a[k][k].clone();
        sig += if pivot.is_negative() { 1 } else { -1 };
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for c in k..n {
                let v = &f * &a[k][c];
                a[i][c] -= v;
            }
            for row in a.iter_mut().skip(k) {
                let v = &f * &row[k];
                row[i] -= v;
            }
        }
    }
    sig
}

/// `σ_ω` of the closure of `w` computed from its Seifert matrix.
pub fn seifert_signature(w: &BraidWord, theta: Angle) -> Result<i64> {
    let a = seifert_matrix(w)?;
    signature_of_form(&hermitian_form(&a, theta))
}

/// A Laurent polynomial `Σ c_i t^{offset + i}` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegerLaurentPolynomial {
    pub offset: i64,
    pub coefficients: Vec<i64>,
}

impl IntegerLaurentPolynomial {
    /// Representative up to units `±t^k`: lowest exponent 0, positive leading
    /// coefficient. The zero polynomial has no coefficients.
    pub fn normalized(coefficients: Vec<i64>) -> IntegerLaurentPolynomial {
        let mut c = coefficients;
        while c.last() == Some(&0) {
            c.pop();
        }
        let lead_zeros = c.iter().take_while(|&&v| v == 0).count();
        c.drain(..lead_zeros);
        if c.last().is_some_and(|&v| v < 0) {
            c.iter_mut().for_each(|v| *v = -*v);
        }
        IntegerLaurentPolynomial {
            offset: 0,
            coefficients: c,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Degree span (highest minus lowest exponent).
    pub fn span(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    /// `|Δ(e^{2πiθ})|`.
    pub fn abs_on_circle(&self, theta: f64) -> f64 {
        let (mut re, mut im) = (0.0, 0.0);
        for (i, &c) in self.coefficients.iter().enumerate() {
            let phase = 2.0 * std::f64::consts::PI * theta * (self.offset + i as i64) as f64;
            re += c as f64 * phase.cos();
            im += c as f64 * phase.sin();
        }
        re.hypot(im)
    }
}

impl std::fmt::Display for IntegerLaurentPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coefficients.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let e = self.offset + i as i64;
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.unsigned_abs();
            match (e, mag) {
                (0, _) => write!(f, "{mag}")?,
                (_, 1) => {}
                _ => write!(f, "{mag}")?,
            }
            match e {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Normalized `det(A - tAᵗ)`.
///
/// The determinant is evaluated exactly at `t = 0, …, dim` and interpolated.
pub fn alexander_polynomial(a: &SeifertMatrix) -> Result<IntegerLaurentPolynomial> {
    let n = a.dim();
    let xs: Vec<i64> = (0..=n as i64).collect();
    let ys: Vec<BigInt> = xs
        .iter()
        .map(|&t| {
            let m = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| BigInt::from(a.get(i, j) - t * a.get(j, i)))
                        .collect()
                })
                .collect();
            bareiss_determinant(m)
        })
        .collect();
    let coeffs = interpolate(&xs, &ys);
    let coeffs = coeffs
        .into_iter()
        .map(|c| {
            if !c.is_integer() {
                return Err(Error::InvalidArgument("non-integral interpolation".into()));
            }
            c.to_integer()
                .to_i64()
                .ok_or_else(|| Error::LimitExceeded("Alexander coefficient exceeds 64 bits".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntegerLaurentPolynomial::normalized(coeffs))
}

/// Coefficients (ascending) of the interpolating polynomial, by Newton's
/// divided differences.
fn interpolate(xs: &[i64], ys: &[BigInt]) -> Vec<BigRational> {
    let n = xs.len();
    let mut dd: Vec<BigRational> = ys
        .iter()
        .map(|y| BigRational::from_integer(y.clone()))
        .collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let denom = BigRational::from_integer((xs[i] - xs[i - level]).into());
            dd[i] = (&dd[i] - &dd[i - 1]) / denom;
        }
    }
    // Horner expansion of the Newton form
    let mut poly = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        // poly = poly * (t - x_i) + dd[i]
        let xi = BigRational::from_integer(xs[i].into());
        let mut next = vec![BigRational::zero(); n];
        for (d, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if d + 1 < n {
                next[d + 1] += c.clone();
            }
            next[d] -= c * &xi;
        }
        next[0] += dd[i].clone();
        poly = next;
    }
    poly
}

/// `θ = 1/2` through the floating-point path, for comparison with the exact
/// path.
pub fn numeric_signature_at_half(a: &SeifertMatrix) -> Result<i64> {
    signature_of_form(&hermitian_form_numeric(a, Angle::HALF))
}
