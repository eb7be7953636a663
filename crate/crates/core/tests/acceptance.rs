//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use num_rational::Rational64;
use num_traits::Signed;

use gordian::adjacency::{
    cbar_upper_bound, check_gordian_adjacency, compare_notions, gordian_distance_bounds,
    index2_candidate_scan, AdjacencyStatus, Provenance,
};
use gordian::braid::{generate_prop21_certificate, theorem1_crossing_budget, verify_certificate};
use gordian::seifert::{
    alexander_polynomial, hermitian_form, numeric_signature_at_half, seifert_matrix,
    seifert_signature, signature_of_form, torus_braid,
};
use gordian::signature::{
    classical_signature, gg_linear_approx, is_regular, jump_set, lt_signature, signature_at,
    signature_profile,
};
use gordian::{Angle, TorusKnot};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn t(p: i64, q: i64) -> TorusKnot {
    TorusKnot::new(p, q).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn coprime_pairs(max_pq: u64) -> Vec<TorusKnot> {
    let mut out = Vec::new();
    for p in 2..=max_pq as i64 {
        for q in p + 1..=max_pq as i64 {
            if (p * q) as u64 <= max_pq {
                if let Ok(k) = TorusKnot::new(p, q) {
                    out.push(k);
                }
            }
        }
    }
    out
}

fn point_values() -> Outcome {
    ensure(classical_signature(t(2, 3)) == 2, || "T(2,3)".into())?;
    for n in (3..=31).step_by(2) {
        let s = classical_signature(t(2, n));
        ensure(s == n - 1, || format!("σ(T(2,{n})) = {s}"))?;
    }
    ensure(classical_signature(t(3, 4)) == 6, || "T(3,4)".into())?;
    ensure(classical_signature(t(3, 5)) == 8, || "T(3,5)".into())?;
    Ok("T(2,n) for odd n <= 31, T(3,4), T(3,5)".into())
}

fn oracle_equivalence() -> Outcome {
    let mut checks = 0;
    for knot in coprime_pairs(40) {
        let w = torus_braid(knot);
        let a = seifert_matrix(&w).map_err(|e| format!("{knot}: {e}"))?;
        for theta in signature_profile(knot).midpoints() {
            let angle = Angle::from_rational(theta).unwrap();
            let oracle =
                seifert_signature(&w, angle).map_err(|e| format!("{knot} at {theta}: {e}"))?;
            let counted = lt_signature(knot, angle);
            ensure(oracle == counted, || {
                format!("{knot} at {theta}: {oracle} vs {counted}")
            })?;
            checks += 1;
        }
        let exact =
            signature_of_form(&hermitian_form(&a, Angle::HALF)).map_err(|e| e.to_string())?;
        let float = numeric_signature_at_half(&a).map_err(|e| e.to_string())?;
        let counted = classical_signature(knot);
        ensure(exact == counted && float == counted, || {
            format!("{knot} at 1/2: exact {exact}, float {float}, counted {counted}")
        })?;
    }
    Ok(format!("{checks} midpoint comparisons"))
}

fn index23_table() -> Outcome {
    let mut decided = 0;
    for n in (1..=31).step_by(2) {
        for m in (1..=23).filter(|m| m % 3 != 0) {
            let v = check_gordian_adjacency(t(2, n), t(3, m));
            let expected = 3 * n <= 4 * m + 1;
            ensure(v.status != AdjacencyStatus::Undetermined, || {
                format!("T(2,{n}) vs T(3,{m}) undetermined")
            })?;
            ensure(v.is_adjacent() == expected, || {
                format!("T(2,{n}) vs T(3,{m}): {:?}", v.status)
            })?;
            decided += 1;
        }
    }
    for (n, m) in [(5, 2), (7, 4), (9, 5)] {
        let v = check_gordian_adjacency(t(2, n), t(3, m));
        ensure(
            v.status == AdjacencyStatus::NotAdjacent
                && matches!(v.provenance, Provenance::UObstruction { .. }),
            || format!("T(2,{n}) vs T(3,{m}) resolved by {:?}", v.provenance),
        )?;
    }
    Ok(format!(
        "{decided} pairs decided, small cases by unknotting number"
    ))
}

fn window_claim() -> Outcome {
    for k in [7i64, 8, 11, 12, 15, 16] {
        let m = (3 * k - 1) / 2; // ⌈3k/2 - 1⌉
        let half = Rational64::new(1, 2);
        let (lo, hi) = if m % 2 == 0 {
            (
                half - Rational64::new(2, 3 * m),
                half - Rational64::new(1, 3 * m),
            )
        } else {
            (
                half - Rational64::new(3, 6 * m),
                half - Rational64::new(1, 6 * m),
            )
        };
        let mid = Angle::from_rational((lo + hi) / 2).unwrap();
        let knot = t(3, m);
        let classical = classical_signature(knot);
        ensure(classical == 2 * k, || {
            format!("σ(T(3,{m})) = {classical}, expected {}", 2 * k)
        })?;
        ensure(is_regular(knot, mid), || {
            format!("window midpoint {mid} is not regular")
        })?;
        let s = lt_signature(knot, mid);
        ensure(s == classical - 2, || format!("k = {k}: σ at {mid} is {s}"))?;
    }
    Ok("k in {7, 8, 11, 12, 15, 16}".into())
}

fn distance_example() -> Outcome {
    let b = gordian_distance_bounds(t(2, 9), t(3, 5), 10);
    ensure(b.lower.value == 2 && b.upper.value == 2, || {
        format!("bounds {} <= d <= {}", b.lower.value, b.upper.value)
    })?;
    ensure(b.upper.common_neighbor == t(2, 7), || {
        format!("neighbor {}", b.upper.common_neighbor)
    })?;
    Ok("2 <= d(T(2,9), T(3,5)) <= 2 through T(2,7)".into())
}

fn certificates() -> Outcome {
    for k in 2..=12u64 {
        let cert = generate_prop21_certificate(k).map_err(|e| e.to_string())?;
        let r = verify_certificate(&cert);
        ensure(r.valid, || format!("k = {k}: {:?}", r.failure))?;
        let m = (3 * k + 2) / 2;
        ensure(r.final_closure == Some(t(3, m as i64)), || {
            format!("k = {k}: ends at {:?}", r.final_closure)
        })?;
        ensure(r.initial_closure == Some(t(2, 2 * k as i64 + 1)), || {
            format!("k = {k}: starts at {:?}", r.initial_closure)
        })?;
        let u_diff = (m - 1) - k;
        ensure(
            r.negative_to_positive as u64 == u_diff
                && r.positive_to_negative == 0
                && u_diff == k / 2,
            || {
                format!(
                    "k = {k}: {} changes, u difference {u_diff}",
                    r.crossing_changes
                )
            },
        )?;
    }
    Ok("k = 2..12 verified".into())
}

fn budget_identity() -> Outcome {
    let mut count = 0;
    for a in 1..=14u64 {
        for b in 1..=14u64 {
            if TorusKnot::new(a as i64, b as i64).is_err() {
                continue;
            }
            for n in 1..=a {
                for m in 1..=b {
                    if TorusKnot::new(n as i64, m as i64).is_err() {
                        continue;
                    }
                    let got = theorem1_crossing_budget(n, m, a, b)
                        .map_err(|e| format!("({n},{m},{a},{b}): {e}"))?;
                    let want = (a - 1) * (b - 1) / 2 - (n - 1) * (m - 1) / 2;
                    ensure(got == want, || {
                        format!("({n},{m},{a},{b}): {got} vs {want}")
                    })?;
                    count += 1;
                }
            }
        }
    }
    for ((n, m, a, b), want) in [((3, 4, 3, 7), 3), ((2, 5, 3, 7), 4)] {
        let got = theorem1_crossing_budget(n, m, a, b).map_err(|e| e.to_string())?;
        ensure(got == want, || {
            format!("T({n},{m}) to T({a},{b}) budget {got}")
        })?;
    }
    Ok(format!("{count} tuples"))
}

fn cbar_values() -> Outcome {
    let r = Rational64::new;
    let fixed = [((2, 3), r(4, 3)), ((3, 4), r(5, 4)), ((2, 4), r(2, 1))];
    for ((a, b), want) in fixed {
        let got = cbar_upper_bound(a, b).map_err(|e| e.to_string())?;
        ensure(got == want, || {
            format!("c̄({a},{b}) bound {got}, expected {want}")
        })?;
    }
    for a in 2..=10 {
        let got = cbar_upper_bound(a, a + 1).map_err(|e| e.to_string())?;
        ensure(got == r(a + 2, a + 1), || {
            format!("c̄({a},{}) bound {got}", a + 1)
        })?;
    }
    for a in 2..=30 {
        for b in a..=30 {
            let got = cbar_upper_bound(a, b).map_err(|e| e.to_string())?;
            let ratio = r(b, a);
            ensure(got <= ratio, || format!("c̄({a},{b}) bound {got} > {ratio}"))?;
            ensure((got == ratio) == (b % a == 0), || {
                format!("equality case wrong at ({a},{b})")
            })?;
        }
    }
    Ok("fixed values and b/a comparison for a <= b <= 30".into())
}

fn gg_property() -> Outcome {
    let mut checks = 0;
    for b in 2..=6i64 {
        for m in (1..=60i64).filter(|m| num_integer::gcd(*m, b) == 1) {
            let knot = t(b, m);
            for theta in signature_profile(knot).midpoints() {
                let angle = Angle::from_rational(theta).unwrap();
                let approx = gg_linear_approx(b, m, angle).map_err(|e| e.to_string())?;
                let diff = (Rational64::from_integer(lt_signature(knot, angle)) - approx).abs();
                ensure(diff <= Rational64::from_integer(2 * b), || {
                    format!("T({b},{m}) at {theta}: deviation {diff}")
                })?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} midpoints"))
}

fn defect_scan() -> Outcome {
    let found = index2_candidate_scan(30);
    let expected = |k: &TorusKnot| k.index() == 2 || *k == t(3, 4) || *k == t(3, 5);
    let extra: Vec<_> = found.iter().filter(|k| !expected(k)).collect();
    ensure(extra.is_empty(), || format!("unexpected {extra:?}"))?;
    let index2 = found.iter().filter(|k| k.index() == 2).count();
    ensure(index2 == 30, || format!("{index2} index-two knots"))?;
    ensure(found.contains(&t(3, 4)) && found.contains(&t(3, 5)), || {
        "missing T(3,4) or T(3,5)".into()
    })?;
    Ok(format!(
        "{} knots, all T(2,n) plus T(3,4), T(3,5)",
        found.len()
    ))
}

fn notion_divergence() -> Outcome {
    let c = compare_notions(t(2, 15), t(3, 10), 4);
    ensure(c.algebraic.derivable, || {
        "algebraic adjacency not derived".into()
    })?;
    ensure(c.gordian.status == AdjacencyStatus::NotAdjacent, || {
        format!("Gordian {:?}", c.gordian.status)
    })?;
    ensure(c.diverge, || "not flagged as divergent".into())?;
    Ok(format!(
        "algebraic chain of {} steps, Gordian not adjacent",
        c.algebraic.chain.len()
    ))
}

fn property_suites() -> Outcome {
    let mut knots = Vec::new();
    for p in 2..=20i64 {
        for q in p + 1..=20 {
            if let Ok(k) = TorusKnot::new(p, q) {
                knots.push(k);
            }
        }
    }
    let two = Rational64::from_integer(2);
    for &knot in &knots {
        let s = jump_set(knot).elements;
        ensure(s.len() as u64 == knot.seifert_rank(), || {
            format!("{knot}: |S| = {}", s.len())
        })?;
        let mirrored: Vec<_> = s.iter().rev().map(|x| two - x).collect();
        ensure(mirrored == s, || format!("{knot}: S not symmetric"))?;
        let profile = signature_profile(knot);
        ensure(
            profile.values.first() == Some(&0) && profile.values.last() == Some(&0),
            || format!("{knot}: nonzero boundary values"),
        )?;
        ensure(
            profile.values.windows(2).all(|w| (w[0] - w[1]).abs() == 2),
            || format!("{knot}: step not ±2"),
        )?;
        for theta in profile.midpoints() {
            ensure(signature_at(knot, theta) % 2 == 0, || {
                format!("{knot}: odd at {theta}")
            })?;
        }
        for den in [31i64, 37, 41, 43, 47] {
            for num in 1..den {
                let angle = Angle::new(num, den).unwrap();
                if is_regular(knot, angle) {
                    ensure(lt_signature(knot, angle) % 2 == 0, || {
                        format!("{knot}: odd at {angle}")
                    })?;
                }
            }
        }
    }
    let (words, classes) = common::normal_form_matches_burau(6)?;
    for knot in coprime_pairs(24) {
        let a = seifert_matrix(&torus_braid(knot)).map_err(|e| e.to_string())?;
        let delta = alexander_polynomial(&a).map_err(|e| e.to_string())?;
        let pq = (knot.p() * knot.q()) as i64;
        for j in 1..pq {
            let root = delta.abs_on_circle(j as f64 / pq as f64) < 1e-6;
            let jump = !is_regular(knot, Angle::new(j, pq).unwrap());
            ensure(root == jump, || {
                format!("{knot}: root/jump mismatch at {j}/{pq}")
            })?;
        }
    }
    Ok(format!(
        "{} knots, {words} B3 words in {classes} classes",
        knots.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("signature point values", point_values),
        (
            "counting formula matches Seifert oracle",
            oracle_equivalence,
        ),
        ("index two versus index three table", index23_table),
        ("signature drop in the window below 1/2", window_claim),
        ("worked distance example", distance_example),
        ("crossing-change certificates", certificates),
        ("crossing budget identity", budget_identity),
        ("c̄ upper bounds", cbar_values),
        ("linear approximation error", gg_property),
        ("zero-defect scan", defect_scan),
        ("notion divergence", notion_divergence),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2}: PASS  {name} ({detail}) [{secs:.2}s]",
                i + 1
            ),
            Err(detail) => {
                failed += 1;
                println!(
                    "criterion {:>2}: FAIL  {name}: {detail} [{secs:.2}s]",
                    i + 1
                );
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
