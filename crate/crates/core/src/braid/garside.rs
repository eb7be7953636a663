//! Left normal form `Δ^p · A_1 ⋯ A_k` of braids.
//!
//! Simple braids are stored as permutations of strand positions; `Δ` is the
//! order-reversing permutation. A negative letter is rewritten as
//! `σ_i^{-1} = Δ^{-1} · (Δ σ_i^{-1})` and the `Δ^{-1}` is pushed to the front
//! through the flip automorphism `τ(σ_i) = σ_{n-i}`. Right multiplication by a
//! simple factor is followed by a single right-to-left left-weighting pass.

use std::fmt;

use super::word::{BraidWord, Letter};

/// Permutation of `0..n`; `(a * b)[x] = a[b[x]]`.
type Perm = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    strands: usize,
    delta_power: i64,
    factors: Vec<Perm>,
}

fn identity(n: usize) -> Perm {
    (0..n).collect()
}

fn delta(n: usize) -> Perm {
    (0..n).rev().collect()
}

fn is_identity(p: &Perm) -> bool {
    p.iter().enumerate().all(|(i, &v)| i == v)
}

fn is_delta(p: &Perm) -> bool {
    let n = p.len();
    p.iter().enumerate().all(|(i, &v)| v == n - 1 - i)
}

fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&x| a[x]).collect()
}

fn inverse(p: &Perm) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

/// Transposition of positions `i` and `i+1` (generator `σ_{i+1}`).
fn transposition(n: usize, i: usize) -> Perm {
    let mut p = identity(n);
    p.swap(i, i + 1);
    p
}

fn flip(p: &Perm) -> Perm {
    let n = p.len();
    p.iter().rev().map(|&v| n - 1 - v).collect()
}

/// `A σ_i` is not simple: `A(i) > A(i+1)`.
fn in_right_descents(a: &Perm, i: usize) -> bool {
    a[i] > a[i + 1]
}

/// Makes the pair `(a, b)` left-weighted; returns whether anything moved.
fn left_weight(a: &mut Perm, b: &mut Perm) -> bool {
    let n = a.len();
    let mut changed = false;
    loop {
        let b_inv = inverse(b);
        let movable =
            (0..n.saturating_sub(1)).find(|&i| b_inv[i] > b_inv[i + 1] && !in_right_descents(a, i));
        match movable {
            Some(i) => {
                a.swap(i, i + 1); // a ← a s_i
                for v in b.iter_mut() {
                    // b ← s_i b
                    if *v == i {
                        *v = i + 1;
                    } else if *v == i + 1 {
                        *v = i;
                    }
                }
                changed = true;
            }
            None => return changed,
        }
    }
}

/// A reduced positive word for a simple braid.
fn simple_to_letters(p: &Perm) -> Vec<Letter> {
    let mut rest = p.clone();
    let mut out = Vec::new();
    loop {
        let inv = inverse(&rest);
        let Some(i) = (0..rest.len().saturating_sub(1)).find(|&i| inv[i] > inv[i + 1]) else {
            return out;
        };
        out.push(Letter::pos(i as u32 + 1));
        for v in rest.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
    }
}

impl NormalForm {
    pub fn identity(strands: usize) -> NormalForm {
        NormalForm {
            strands,
            delta_power: 0,
            factors: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    /// Number of non-`Δ` simple factors (the canonical length).
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    fn multiply_simple(&mut self, x: Perm) {
        if is_identity(&x) {
            return;
        }
        self.factors.push(x);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (head, tail) = self.factors.split_at_mut(j);
            if !left_weight(&mut head[j - 1], &mut tail[0]) {
                break;
            }
            j -= 1;
        }
        let leading_deltas = self.factors.iter().take_while(|f| is_delta(f)).count();
        if leading_deltas > 0 {
            self.factors.drain(..leading_deltas);
            self.delta_power += leading_deltas as i64;
        }
        while self.factors.last().is_some_and(is_identity) {
            self.factors.pop();
        }
    }

    fn multiply_delta_inverse(&mut self) {
        self.delta_power -= 1;
        for f in &mut self.factors {
            *f = flip(f);
        }
    }

    pub fn multiply_letter(&mut self, letter: Letter) {
        let n = self.strands;
        let i = letter.index() as usize - 1;
        if letter.is_positive() {
            self.multiply_simple(transposition(n, i));
        } else {
            self.multiply_delta_inverse();
            self.multiply_simple(compose(&delta(n), &transposition(n, i)));
        }
    }

    /// Positive-power expansion back into a word (`Δ` written as a reduced
    /// positive word; negative powers inverted).
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta_word = BraidWord::new(n, simple_to_letters(&delta(n))).expect("valid");
        let mut out = if self.delta_power >= 0 {
            delta_word.pow(self.delta_power as usize)
        } else {
            delta_word
                .inverse()
                .pow(self.delta_power.unsigned_abs() as usize)
        };
        for f in &self.factors {
            out.letters_mut().extend(simple_to_letters(f));
        }
        out
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.delta_power)?;
        for factor in &self.factors {
            f.write_str(" · (")?;
            for (i, l) in simple_to_letters(factor).iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{l}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Canonical form: two words give the same value iff they are equal in the
/// braid group.
pub fn garside_normal_form(w: &BraidWord) -> NormalForm {
    let mut nf = NormalForm::identity(w.strands());
    for &l in w.letters() {
        nf.multiply_letter(l);
    }
    nf
}

pub fn braid_equal(a: &BraidWord, b: &BraidWord) -> bool {
    a.strands() == b.strands() && garside_normal_form(a) == garside_normal_form(b)
}
