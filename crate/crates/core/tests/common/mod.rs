//! Shared oracles for integration tests.

#![allow(dead_code)]

use std::collections::BTreeMap;

use gordian::braid::garside_normal_form;
use gordian::BraidWord;

/// Laurent polynomial in `t`, exponent to coefficient, no zero entries.
pub type Laurent = BTreeMap<i32, i64>;

fn mul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            *out.entry(ea + eb).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn add(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = a.clone();
    for (e, c) in b {
        *out.entry(*e).or_insert(0) += c;
    }
    out.retain(|_, c| *c != 0);
    out
}

fn mono(e: i32, c: i64) -> Laurent {
    Laurent::from([(e, c)])
}

pub type Mat2 = [[Laurent; 2]; 2];

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let entry = |i: usize, j: usize| add(&mul(&a[i][0], &b[0][j]), &mul(&a[i][1], &b[1][j]));
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

/// Reduced Burau image of a word in `B_3`; the representation is faithful
/// on `B_3`, so equal images mean equal braids.
pub fn burau_b3(letters: &[i64]) -> Mat2 {
    let z = Laurent::new;
    let gen = |l: i64| -> Mat2 {
        match l {
            1 => [[mono(1, -1), mono(0, 1)], [z(), mono(0, 1)]],
            2 => [[mono(0, 1), z()], [mono(1, 1), mono(1, -1)]],
            -1 => [[mono(-1, -1), mono(-1, 1)], [z(), mono(0, 1)]],
            -2 => [[mono(0, 1), z()], [mono(0, 1), mono(-1, -1)]],
            _ => panic!("not a B3 letter: {l}"),
        }
    };
    let mut m: Mat2 = [[mono(0, 1), z()], [z(), mono(0, 1)]];
    for &l in letters {
        m = mat_mul(&m, &gen(l));
    }
    m
}

/// All words over `±σ_1, ±σ_2` of length at most `max_len`.
pub fn b3_words(max_len: usize) -> Vec<Vec<i64>> {
    let mut all = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for l in [1, -1, 2, -2] {
                let mut v: Vec<i64> = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

/// Checks that normal-form equality and Burau equality induce the same
/// partition of all `B_3` words up to `max_len`. Returns the number of
/// words and classes.
pub fn normal_form_matches_burau(max_len: usize) -> Result<(usize, usize), String> {
    let words = b3_words(max_len);
    let mut nf_to_burau = std::collections::HashMap::new();
    let mut burau_to_nf = std::collections::HashMap::new();
    for w in &words {
        let nf = garside_normal_form(&BraidWord::from_signed(3, w).unwrap());
        let b = burau_b3(w);
        let key = format!("{b:?}");
        if let Some(prev) = nf_to_burau.insert(nf.clone(), key.clone()) {
            if prev != key {
                return Err(format!(
                    "normal form identifies braids with different Burau images: {w:?}"
                ));
            }
        }
        if let Some(prev) = burau_to_nf.insert(key, nf.clone()) {
            if prev != nf {
                return Err(format!("equal braids with different normal forms: {w:?}"));
            }
        }
    }
    Ok((words.len(), nf_to_burau.len()))
}
