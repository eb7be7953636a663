//! Gordian adjacency decisions, Gordian-distance bounds, asymptotic bounds
//! on `c̄(a,b)` and sufficient rules for algebraic adjacency.
//!
//! Every verdict carries the rule that produced it. Negative verdicts come
//! only from implemented obstructions: unknotting-number comparison, the
//! signature monotonicity `σ_ω(K_1) ≤ σ_ω(K_2)` for `K_1 ≤_g K_2`, the
//! two-sided signature distance bound, and the exact index-(2,3) criterion.
//! The conjecture that adjacency never lowers the index is reported as an
//! annotation only.

use std::collections::{HashMap, VecDeque};

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::angle::fraction_serde;
use crate::error::{Error, Result};
use crate::signature::{
    gg_slope_form, interval_midpoints, merged_breakpoints, signature_defect, signature_profile,
};
use crate::torus::{knots_up_to_unknotting_number, TorusKnot};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AdjacencyStatus {
    Adjacent,
    NotAdjacent,
    Undetermined,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Notion {
    Gordian,
    Algebraic,
}

/// A signature comparison at one regular angle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureWitness {
    #[serde(with = "fraction_serde")]
    pub theta: Rational64,
    pub sigma1: i64,
    pub sigma2: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum Provenance {
    /// Equal knots, or the unknot on the left.
    Trivial {
        reason: String,
    },
    /// `T(n,m) ≤_g T(a,b)` whenever `n ≤ a` and `m ≤ b`.
    ParameterDomination,
    /// `T(2,n) ≤_g T(3,m)` exactly when `3n ≤ 4m + 1`.
    IndexTwoThree {
        n: u64,
        m: u64,
    },
    IndexTwoThreeNegative {
        n: u64,
        m: u64,
    },
    /// A verified crossing-change certificate.
    Certificate {
        reference: String,
    },
    /// `u(K_1) > u(K_2)`, or equal unknotting numbers for distinct knots.
    UObstruction {
        u1: u64,
        u2: u64,
    },
    /// `σ_θ(K_1) > σ_θ(K_2)` at a regular `θ`.
    SignatureObstruction {
        witness: SignatureWitness,
    },
    /// The signature distance bound exceeds `u(K_2) - u(K_1)`.
    DistanceObstruction {
        lower_bound: u64,
        u_difference: u64,
    },
    /// No implemented rule applies.
    NoRule,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjacencyVerdict {
    pub smaller: TorusKnot,
    pub larger: TorusKnot,
    pub notion: Notion,
    pub status: AdjacencyStatus,
    pub provenance: Provenance,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub annotation: Option<String>,
}

impl AdjacencyVerdict {
    pub fn is_adjacent(&self) -> bool {
        self.status == AdjacencyStatus::Adjacent
    }
}

/// `3n ≤ 4m + 1`.
pub fn index23_criterion(n: u64, m: u64) -> bool {
    3 * n <= 4 * m + 1
}

fn dominated(small: TorusKnot, large: TorusKnot) -> bool {
    small.p() <= large.p() && small.q() <= large.q()
}

/// Decides `T1 ≤_g T2` as far as the implemented rules allow.
pub fn check_gordian_adjacency(t1: TorusKnot, t2: TorusKnot) -> AdjacencyVerdict {
    let verdict = |status, provenance| AdjacencyVerdict {
        smaller: t1,
        larger: t2,
        notion: Notion::Gordian,
        status,
        provenance,
        annotation: None,
    };
    use AdjacencyStatus::*;
    if t1 == t2 {
        return verdict(
            Adjacent,
            Provenance::Trivial {
                reason: "equal knots".into(),
            },
        );
    }
    if t1.is_unknot() {
        return verdict(
            Adjacent,
            Provenance::Trivial {
                reason: "the unknot is adjacent to every knot".into(),
            },
        );
    }
    let (u1, u2) = (t1.unknotting_number(), t2.unknotting_number());
    if u1 >= u2 {
        return verdict(NotAdjacent, Provenance::UObstruction { u1, u2 });
    }
    if dominated(t1, t2) {
        return verdict(Adjacent, Provenance::ParameterDomination);
    }
    if t1.index() == 2 && t2.index() == 3 {
        let (n, m) = (t1.q(), t2.q());
        return if index23_criterion(n, m) {
            verdict(Adjacent, Provenance::IndexTwoThree { n, m })
        } else {
            verdict(NotAdjacent, Provenance::IndexTwoThreeNegative { n, m })
        };
    }
    if let Some(witness) = signature_obstruction_scan(t1, t2) {
        return verdict(NotAdjacent, Provenance::SignatureObstruction { witness });
    }
    let lower = gordian_distance_lower_bound(t1, t2);
    if lower.value > u2 - u1 {
        return verdict(
            NotAdjacent,
            Provenance::DistanceObstruction {
                lower_bound: lower.value,
                u_difference: u2 - u1,
            },
        );
    }
    let mut v = verdict(Undetermined, Provenance::NoRule);
    if t1.index() > t2.index() {
        v.annotation = Some(
            "conjecturally a torus knot is never adjacent to one of smaller index; not used as a verdict".into(),
        );
    }
    v
}

/// Signature differences `σ_θ(T1) - σ_θ(T2)` at the midpoints of the merged
/// profile partition; every such `θ` is regular for both knots.
fn signature_differences(t1: TorusKnot, t2: TorusKnot) -> Vec<SignatureWitness> {
    let (p1, p2) = (signature_profile(t1), signature_profile(t2));
    interval_midpoints(&merged_breakpoints(&[&p1, &p2]))
        .into_iter()
        .map(|theta| SignatureWitness {
            theta,
            sigma1: p1.value_at(theta).expect("midpoint is regular"),
            sigma2: p2.value_at(theta).expect("midpoint is regular"),
        })
        .collect()
}

/// Largest value of `gap`, preferring the angle closest to `1/2`, then the
/// smaller angle.
fn best_witness(
    all: &[SignatureWitness],
    gap: impl Fn(&SignatureWitness) -> i64,
) -> Option<SignatureWitness> {
    let half = Rational64::new(1, 2);
    all.iter()
        .filter(|w| gap(w) > 0)
        .min_by(|a, b| {
            gap(b)
                .cmp(&gap(a))
                .then_with(|| (a.theta - half).abs().cmp(&(b.theta - half).abs()))
                .then_with(|| a.theta.cmp(&b.theta))
        })
        .copied()
}

/// A regular `θ` with `σ_θ(T1) > σ_θ(T2)`, if any.
///
/// Profiles are constant between breakpoints, so scanning the merged
/// midpoints is complete over regular angles. Among witnesses the largest
/// gap is reported, nearest to `1/2` on ties.
pub fn signature_obstruction_scan(t1: TorusKnot, t2: TorusKnot) -> Option<SignatureWitness> {
    best_witness(&signature_differences(t1, t2), |w| w.sigma1 - w.sigma2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBound {
    pub value: u64,
    pub u_difference: u64,
    pub distinct: bool,
    /// `P/2 + N/2` from the two signature gaps.
    pub signature_bound: u64,
    pub positive_gap: Option<SignatureWitness>,
    pub negative_gap: Option<SignatureWitness>,
}

/// Lower bound on `d_g(T1, T2)`.
///
/// Along a crossing-change path every positive-to-negative change lowers each
/// regular `σ_ω` by 0 or 2 and every negative-to-positive change raises it by
/// 0 or 2 (after moving `ω` to a nearby root of unity of prime order, which
/// does not change the signatures of the two endpoints). A path therefore
/// needs at least `P/2` changes of the first kind and `N/2` of the second,
/// where `P` and `N` are the largest gaps `σ(T1) - σ(T2)` and
/// `σ(T2) - σ(T1)`.
pub fn gordian_distance_lower_bound(t1: TorusKnot, t2: TorusKnot) -> LowerBound {
    let diffs = signature_differences(t1, t2);
    let positive_gap = best_witness(&diffs, |w| w.sigma1 - w.sigma2);
    let negative_gap = best_witness(&diffs, |w| w.sigma2 - w.sigma1);
    let gap =
        |w: &Option<SignatureWitness>| w.map_or(0, |w| (w.sigma1 - w.sigma2).unsigned_abs() / 2);
    let signature_bound = gap(&positive_gap) + gap(&negative_gap);
    let u_difference = t1.unknotting_number().abs_diff(t2.unknotting_number());
    let distinct = t1 != t2;
    LowerBound {
        value: u_difference.max(distinct as u64).max(signature_bound),
        u_difference,
        distinct,
        signature_bound,
        positive_gap,
        negative_gap,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpperBound {
    pub value: u64,
    /// Torus knot `K` with `K ≤_g T1` and `K ≤_g T2`.
    pub common_neighbor: TorusKnot,
    pub to_first: Provenance,
    pub to_second: Provenance,
    pub search_budget: u64,
    pub scope: String,
}

/// `min u(T1) + u(T2) - 2u(K)` over torus knots `K` (the unknot included)
/// with `u(K) ≤ search_budget` that are adjacent to both.
///
/// Ties are broken by the enumeration order `(index, q)`.
pub fn gordian_distance_upper_bound(
    t1: TorusKnot,
    t2: TorusKnot,
    search_budget: u64,
) -> UpperBound {
    let (u1, u2) = (t1.unknotting_number(), t2.unknotting_number());
    let mut candidates = vec![TorusKnot::UNKNOT];
    candidates.extend(knots_up_to_unknotting_number(search_budget.min(u1).min(u2)));
    let mut best: Option<UpperBound> = None;
    for k in candidates {
        let a = check_gordian_adjacency(k, t1);
        if !a.is_adjacent() {
            continue;
        }
        let b = check_gordian_adjacency(k, t2);
        if !b.is_adjacent() {
            continue;
        }
        let value = u1 + u2 - 2 * k.unknotting_number();
        if best.as_ref().is_none_or(|b| value < b.value) {
            best = Some(UpperBound {
                value,
                common_neighbor: k,
                to_first: a.provenance,
                to_second: b.provenance,
                search_budget,
                scope: "common neighbors searched among torus knots only".into(),
            });
        }
    }
    best.expect("the unknot is a common neighbor")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceBounds {
    pub first: TorusKnot,
    pub second: TorusKnot,
    pub lower: LowerBound,
    pub upper: UpperBound,
}

pub fn gordian_distance_bounds(t1: TorusKnot, t2: TorusKnot, search_budget: u64) -> DistanceBounds {
    let lower = gordian_distance_lower_bound(t1, t2);
    let upper = gordian_distance_upper_bound(t1, t2, search_budget);
    debug_assert!(lower.value <= upper.value);
    DistanceBounds {
        first: t1,
        second: t2,
        lower,
        upper,
    }
}

/// `(a-1)|b-c|/2 = |u(T(a,b)) - u(T(a,c))|`.
pub fn same_index_distance(a: i64, b: i64, c: i64) -> Result<Rational64> {
    TorusKnot::new(a, b)?;
    TorusKnot::new(a, c)?;
    Ok(Rational64::new((a - 1) * (b - c).abs(), 2))
}

fn check_ab(a: i64, b: i64) -> Result<()> {
    if a < 2 || b < a {
        return Err(Error::InvalidArgument(format!(
            "need 2 <= a <= b, got a = {a}, b = {b}"
        )));
    }
    if b > 1_000_000 {
        return Err(Error::TooLarge {
            value: b,
            limit: 1_000_000,
        });
    }
    Ok(())
}

/// `(a⌈b/a⌉² - (a+2b)⌈b/a⌉ + b(b+1)) / ((a-1)b)`, an upper bound on `c̄(a,b)`.
pub fn cbar_upper_bound(a: i64, b: i64) -> Result<Rational64> {
    check_ab(a, b)?;
    let c = Integer::div_ceil(&b, &a);
    Ok(Rational64::new(
        a * c * c - (a + 2 * b) * c + b * (b + 1),
        (a - 1) * b,
    ))
}

/// The elementary bracket `1 ≤ c̲(a,b)` and `c̄(a,b) ≤ (b-1)/(a-1)`.
pub fn cbar_trivial_bracket(a: i64, b: i64) -> Result<(Rational64, Rational64)> {
    check_ab(a, b)?;
    Ok((Rational64::from_integer(1), Rational64::new(b - 1, a - 1)))
}

/// Result of comparing the `c̄` bound obtained at each grid angle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptimalityReport {
    pub optimal: bool,
    #[serde(with = "fraction_serde")]
    pub bound_at_one_over_a: Rational64,
    #[serde(with = "fraction_serde")]
    pub best_bound: Rational64,
    #[serde(with = "fraction_serde")]
    pub best_theta: Rational64,
}

/// Whether `θ = 1/a` minimizes the leading-order bound
/// `n(m)/m ≤ L_b(θ)/L_a(θ)` over the grid `j/grid`, where `L_x` is the
/// per-unit linear form of the signature approximation.
///
/// Angles where `L_a(θ) ≤ 0` give no bound and are skipped; `1/a` is always
/// included.
pub fn remark52_optimality_check(a: i64, b: i64, grid: i64) -> Result<OptimalityReport> {
    check_ab(a, b)?;
    if grid < a * b {
        return Err(Error::InvalidArgument(format!(
            "grid {grid} must be at least a*b = {}",
            a * b
        )));
    }
    if grid > 1_000_000 {
        return Err(Error::TooLarge {
            value: grid,
            limit: 1_000_000,
        });
    }
    let ratio = |theta: Rational64| {
        let la = gg_slope_form(a, theta);
        (la > Rational64::from_integer(0)).then(|| gg_slope_form(b, theta) / la)
    };
    let reference_theta = Rational64::new(1, a);
    let reference = ratio(reference_theta).expect("L_a(1/a) = 2(a-1)/a > 0");
    let mut best = (reference, reference_theta);
    for j in 1..grid {
        let theta = Rational64::new(j, grid);
        if let Some(v) = ratio(theta) {
            if v < best.0 {
                best = (v, theta);
            }
        }
    }
    Ok(OptimalityReport {
        optimal: best.0 == reference,
        bound_at_one_over_a: reference,
        best_bound: best.0,
        best_theta: best.1,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgebraicRule {
    /// `T(n,m) ≤_a T(a,b)` for `n ≤ a`, `m ≤ b`.
    ParameterDomination,
    /// `T(a,bc) ≤_a T(b,ac)` for `a ≤ b`.
    StrandExchange,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraicStep {
    pub from: TorusKnot,
    pub to: TorusKnot,
    pub rule: AlgebraicRule,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraicDerivation {
    pub smaller: TorusKnot,
    pub larger: TorusKnot,
    pub derivable: bool,
    pub chain: Vec<AlgebraicStep>,
    pub assumption: String,
}

/// Knots reachable from `k` by one strand exchange `T(a,bc) → T(b,ac)`.
fn strand_exchanges(k: TorusKnot) -> Vec<TorusKnot> {
    let mut out = Vec::new();
    if k.is_unknot() {
        return out;
    }
    let (x, y) = (k.p(), k.q());
    for (a, bc) in [(x, y), (y, x)] {
        for b in (a.max(2)..=bc).filter(|b| bc % b == 0) {
            let c = bc / b;
            if let Ok(t) = TorusKnot::new(b as i64, (a * c) as i64) {
                if t != k {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// Whether `T1 ≤_a T2` follows from at most `depth` applications of the
/// sufficient rules. `false` means "not derived", not "not adjacent".
///
/// Chaining assumes `≤_a` is transitive.
pub fn check_algebraic_adjacency_sufficient(
    t1: TorusKnot,
    t2: TorusKnot,
    depth: u32,
) -> AlgebraicDerivation {
    let assumption = "rule chains assume transitivity of algebraic adjacency".to_string();
    let result = |derivable, chain| AlgebraicDerivation {
        smaller: t1,
        larger: t2,
        derivable,
        chain,
        assumption: assumption.clone(),
    };
    if t1 == t2 {
        return result(true, Vec::new());
    }
    // both rules weakly increase u, so only knots up to u(T2) matter
    let u_max = t2.unknotting_number();
    let mut universe = knots_up_to_unknotting_number(u_max);
    universe.push(TorusKnot::UNKNOT);
    let mut parent: HashMap<TorusKnot, AlgebraicStep> = HashMap::new();
    let mut queue = VecDeque::from([(t1, 0u32)]);
    let mut seen = std::collections::HashSet::from([t1]);
    while let Some((k, d)) = queue.pop_front() {
        if k == t2 {
            let mut chain = Vec::new();
            let mut cur = k;
            while let Some(step) = parent.get(&cur) {
                chain.push(step.clone());
                cur = step.from;
            }
            chain.reverse();
            return result(true, chain);
        }
        if d == depth {
            continue;
        }
        let dominating = universe
            .iter()
            .copied()
            .filter(|&t| t != k && dominated(k, t))
            .map(|t| (t, AlgebraicRule::ParameterDomination));
        let exchanged = strand_exchanges(k)
            .into_iter()
            .filter(|t| t.unknotting_number() <= u_max)
            .map(|t| (t, AlgebraicRule::StrandExchange));
        for (t, rule) in dominating.chain(exchanged) {
            if seen.insert(t) {
                parent.insert(
                    t,
                    AlgebraicStep {
                        from: k,
                        to: t,
                        rule,
                    },
                );
                queue.push_back((t, d + 1));
            }
        }
    }
    result(false, Vec::new())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NotionComparison {
    pub gordian: AdjacencyVerdict,
    pub algebraic: AlgebraicDerivation,
    /// Algebraically derivable but Gordian non-adjacent.
    pub diverge: bool,
}

pub fn compare_notions(t1: TorusKnot, t2: TorusKnot, depth: u32) -> NotionComparison {
    let gordian = check_gordian_adjacency(t1, t2);
    let algebraic = check_algebraic_adjacency_sufficient(t1, t2, depth);
    let diverge = algebraic.derivable && gordian.status == AdjacencyStatus::NotAdjacent;
    NotionComparison {
        gordian,
        algebraic,
        diverge,
    }
}

/// Torus knots (unknot excluded) with `u ≤ max_u` and zero signature defect,
/// sorted by `(index, q)`.
///
/// A knot `T` with positive defect is never adjacent to `T(2,n)`: the
/// classical signature gap `(n-1)/2 - σ(T)/2` would exceed `u(T(2,n)) - u(T)`.
pub fn index2_candidate_scan(max_u: u64) -> Vec<TorusKnot> {
    knots_up_to_unknotting_number(max_u)
        .into_iter()
        .filter(|&k| signature_defect(k) == 0)
        .collect()
}
