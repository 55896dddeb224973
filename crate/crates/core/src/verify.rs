//! Exhaustive-search verification and refutation of the Macaulay-Lex property.
//!
//! Untruncated rings are checked with the lower-shadow criterion: revlex
//! segments must minimize `|∂A|` among all spaces of the same size. Truncated
//! rings are checked with the upper-shadow criterion: lex segments must
//! minimize `|R_1 A|`.
//!
//! The search runs degree by degree and, inside a degree, stratum by stratum
//! (`k = |A|` ascending). Each stratum costs `C(N, k)` shadow evaluations and
//! is only entered if it fits in the remaining budget.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::{binomial, mask_positions, Adjacency, MAX_SWEEP_PIECE};
use crate::error::{Error, Result};
use crate::ring::{Ext, RingSpec};
use crate::space::{enumerate_piece, lower_shadow, upper_shadow, MonomialSpace};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Budget {
    /// Degrees whose piece is larger than this are skipped.
    pub max_piece: usize,
    /// Total shadow evaluations allowed per verification run.
    pub max_evaluations: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_piece: 20,
            max_evaluations: 1 << 22,
        }
    }
}

impl Budget {
    fn validate(&self) -> Result<()> {
        if self.max_piece == 0 || self.max_evaluations == 0 {
            return Err(Error::InvalidSpec("budgets must be positive".into()));
        }
        if self.max_piece > MAX_SWEEP_PIECE {
            return Err(Error::OutOfRange {
                what: "max_piece",
                value: self.max_piece,
                max: MAX_SWEEP_PIECE,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    /// `|∂ Revlex(A)| <= |∂ A|` on `W_d`, `d >= 1`.
    LowerShadow,
    /// `|R_1 Lex(A)| <= |R_1 A|` on `W_d`, `d >= 0`.
    UpperShadowLex,
}

impl Criterion {
    pub fn for_ring(ring: &RingSpec) -> Self {
        if ring.is_truncated() {
            Criterion::UpperShadowLex
        } else {
            Criterion::LowerShadow
        }
    }

    fn first_degree(self) -> u32 {
        match self {
            Criterion::LowerShadow => 1,
            Criterion::UpperShadowLex => 0,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    VerifiedUpToBudget,
    Refuted,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DegreeCoverage {
    pub degree: u32,
    pub piece_size: usize,
    /// Largest `k` such that all strata `1..=k` were searched.
    pub max_k_checked: usize,
    pub complete: bool,
}

/// A space beating the segment of its size.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Witness {
    pub degree: u32,
    pub space: Vec<String>,
    /// `|∂A|` or `|R_1 A|`.
    pub shadow: usize,
    /// `|∂ Revlex(A)|` or `|R_1 Lex(A)|`.
    pub segment_shadow: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub ring: RingSpec,
    pub criterion: Criterion,
    pub max_degree: u32,
    pub budget: Budget,
    pub verdict: Verdict,
    /// Every degree up to `max_degree` was searched completely.
    pub exhaustive: bool,
    pub evaluations: u64,
    pub coverage: Vec<DegreeCoverage>,
    pub witness: Option<Witness>,
}

/// Minimum lower shadow over all `k`-subsets of `W_d(phi)`.
#[derive(Clone, Debug)]
pub struct ShadowMinimum {
    pub min: usize,
    pub minimizer: MonomialSpace,
}

/// Exact minimum of `|∂A|` over `|A| = k`, with the first minimizer in sweep
/// order. Fails when the piece exceeds `budget.max_piece`.
pub fn min_shadow_oracle(
    ring: &RingSpec,
    degree: u32,
    k: usize,
    budget: &Budget,
) -> Result<ShadowMinimum> {
    budget.validate()?;
    if degree == 0 {
        return Err(Error::DegreeZeroShadow);
    }
    let piece = enumerate_piece(ring, degree);
    if piece.len() > budget.max_piece {
        return Err(Error::BudgetExceeded(format!(
            "piece of degree {degree} has {} members (max {})",
            piece.len(),
            budget.max_piece
        )));
    }
    if k > piece.len() {
        return Err(Error::OutOfRange {
            what: "subset size",
            value: k,
            max: piece.len(),
        });
    }
    let below = enumerate_piece(ring, degree - 1);
    let adj = Adjacency::lower(&piece, &below);
    let (min, mask) = adj.min_image(k);
    Ok(ShadowMinimum {
        min,
        minimizer: piece.space_from_positions(mask_positions(mask)),
    })
}

/// Minimum of `|R_1 A|` over `|A| = k`; the upper-shadow analogue of
/// [`min_shadow_oracle`].
pub fn min_upper_shadow_oracle(
    ring: &RingSpec,
    degree: u32,
    k: usize,
    budget: &Budget,
) -> Result<ShadowMinimum> {
    budget.validate()?;
    let piece = enumerate_piece(ring, degree);
    if piece.len() > budget.max_piece {
        return Err(Error::BudgetExceeded(format!(
            "piece of degree {degree} has {} members (max {})",
            piece.len(),
            budget.max_piece
        )));
    }
    if k > piece.len() {
        return Err(Error::OutOfRange {
            what: "subset size",
            value: k,
            max: piece.len(),
        });
    }
    let above = enumerate_piece(ring, degree + 1);
    let adj = Adjacency::upper(&piece, &above);
    let (min, mask) = adj.min_image(k);
    Ok(ShadowMinimum {
        min,
        minimizer: piece.space_from_positions(mask_positions(mask)),
    })
}

/// Searches for a violation of the criterion matching the ring (lower shadow
/// for `W`, upper shadow for `W(phi)`) in degrees up to `max_degree`.
pub fn verify_macaulay_lex(
    ring: &RingSpec,
    max_degree: u32,
    budget: &Budget,
) -> Result<VerificationReport> {
    verify_with(ring, Criterion::for_ring(ring), max_degree, budget)
}

/// As [`verify_macaulay_lex`] with an explicit criterion. The lower-shadow
/// criterion on a truncated ring can only refute, never verify.
pub fn verify_with(
    ring: &RingSpec,
    criterion: Criterion,
    max_degree: u32,
    budget: &Budget,
) -> Result<VerificationReport> {
    budget.validate()?;
    let mut evaluations = 0u64;
    let mut coverage = Vec::new();
    let mut witness = None;

    for degree in criterion.first_degree()..=max_degree {
        let piece = enumerate_piece(ring, degree);
        let n = piece.len();
        if n > budget.max_piece {
            coverage.push(DegreeCoverage {
                degree,
                piece_size: n,
                max_k_checked: 0,
                complete: false,
            });
            continue;
        }
        let adj = match criterion {
            Criterion::LowerShadow => Adjacency::lower(&piece, &enumerate_piece(ring, degree - 1)),
            Criterion::UpperShadowLex => {
                Adjacency::upper(&piece, &enumerate_piece(ring, degree + 1))
            }
        };
        // Strata that fit the remaining budget, in order.
        let mut affordable = Vec::new();
        let mut spent = evaluations;
        for k in 1..=n {
            let cost = binomial(n, k);
            if spent.saturating_add(cost) > budget.max_evaluations {
                break;
            }
            spent += cost;
            affordable.push(k);
        }
        let results: Vec<(usize, u64)> = affordable.par_iter().map(|&k| adj.min_image(k)).collect();

        let mut max_k_checked = 0;
        for (&k, &(min, mask)) in affordable.iter().zip(&results) {
            evaluations += binomial(n, k);
            max_k_checked = k;
            let segment = match criterion {
                Criterion::LowerShadow => adj.image_of(0..k).len(),
                Criterion::UpperShadowLex => adj.image_of(n - k..n).len(),
            };
            if min < segment {
                witness = Some(Witness {
                    degree,
                    space: piece
                        .space_from_positions(mask_positions(mask))
                        .to_strings(),
                    shadow: min,
                    segment_shadow: segment,
                });
                break;
            }
        }
        coverage.push(DegreeCoverage {
            degree,
            piece_size: n,
            max_k_checked,
            complete: max_k_checked == n,
        });
        if witness.is_some() {
            break;
        }
    }

    let exhaustive = witness.is_none() && coverage.iter().all(|c| c.complete);
    Ok(VerificationReport {
        ring: ring.clone(),
        criterion,
        max_degree,
        budget: *budget,
        verdict: if witness.is_some() {
            Verdict::Refuted
        } else {
            Verdict::VerifiedUpToBudget
        },
        exhaustive,
        evaluations,
        coverage,
        witness,
    })
}

/// Recomputes a witness from scratch with the space operations and checks
/// its strict inequality.
pub fn check_witness(ring: &RingSpec, criterion: Criterion, witness: &Witness) -> Result<()> {
    let lines: Vec<&str> = witness.space.iter().map(String::as_str).collect();
    let space = MonomialSpace::parse(ring, witness.degree, &lines)?;
    let piece = enumerate_piece(ring, witness.degree);
    let (shadow, segment) = match criterion {
        Criterion::LowerShadow => (
            lower_shadow(&space)?.len(),
            lower_shadow(&piece.revlex_segment(space.len())?)?.len(),
        ),
        Criterion::UpperShadowLex => (
            upper_shadow(&space).len(),
            upper_shadow(&piece.lex_segment(space.len())?).len(),
        ),
    };
    if shadow != witness.shadow || segment != witness.segment_shadow {
        return Err(Error::ReplayMismatch(format!(
            "recorded shadows ({}, {}) but recomputed ({shadow}, {segment})",
            witness.shadow, witness.segment_shadow
        )));
    }
    if shadow >= segment {
        return Err(Error::ReplayMismatch(format!(
            "witness does not beat the segment: {shadow} >= {segment}"
        )));
    }
    Ok(())
}

/// Whether `<x_1..x_n>^(a+1) + <x_i^(alpha_i+1)>` is Macaulay-Lex, with
/// `alpha_1` the cap of the largest variable: `min(a, alpha_i)` must be
/// nondecreasing.
pub fn truncated_univariate_predicate(a: Ext, alpha: &[Ext]) -> bool {
    alpha.windows(2).all(|w| w[0].min(a) <= w[1].min(a))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_examples() {
        let r = RingSpec::finite(&[1, 1], &[2, 2]).unwrap();
        let b = Budget::default();
        let m = min_shadow_oracle(&r, 2, 2, &b).unwrap();
        assert_eq!(m.min, 3);
        assert_eq!(m.minimizer.len(), 2);
        assert_eq!(min_shadow_oracle(&r, 2, 0, &b).unwrap().min, 0);
        // The full piece: every variable divides something.
        assert_eq!(min_shadow_oracle(&r, 2, 4, &b).unwrap().min, 4);
        assert!(matches!(
            min_shadow_oracle(&r, 2, 5, &b),
            Err(Error::OutOfRange { .. })
        ));
        let tight = Budget {
            max_piece: 3,
            ..Budget::default()
        };
        assert!(matches!(
            min_shadow_oracle(&r, 2, 1, &tight),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn refutes_decreasing_clements_lindstrom_type() {
        let r = RingSpec::finite(&[2, 1], &[1, 1]).unwrap();
        let rep = verify_macaulay_lex(&r, 3, &Budget::default()).unwrap();
        assert_eq!(rep.verdict, Verdict::Refuted);
        let w = rep.witness.as_ref().unwrap();
        assert_eq!(w.degree, 2);
        assert_eq!(w.space, ["x[1,1]^2"]);
        assert_eq!((w.shadow, w.segment_shadow), (1, 2));
        check_witness(&r, rep.criterion, w).unwrap();
    }

    #[test]
    fn verifies_colored_squarefree_ring() {
        let r = RingSpec::finite(&[1, 1, 1], &[2, 2, 3]).unwrap();
        let rep = verify_macaulay_lex(&r, 3, &Budget::default()).unwrap();
        assert_eq!(rep.verdict, Verdict::VerifiedUpToBudget);
        assert!(rep.exhaustive);
        assert!(rep.witness.is_none());
    }

    #[test]
    fn refutes_neither_ring_with_wide_second_color() {
        let r = RingSpec::finite(&[1, 2], &[1, 2]).unwrap();
        let rep = verify_macaulay_lex(&r, 3, &Budget::default()).unwrap();
        assert_eq!(rep.verdict, Verdict::Refuted);
        check_witness(&r, rep.criterion, rep.witness.as_ref().unwrap()).unwrap();
    }

    #[test]
    fn budget_exhaustion_is_reported_not_hidden() {
        let r = RingSpec::untruncated(vec![Ext::Inf], vec![4]).unwrap();
        let b = Budget {
            max_piece: 20,
            max_evaluations: 100,
        };
        let rep = verify_macaulay_lex(&r, 3, &b).unwrap();
        assert_eq!(rep.verdict, Verdict::VerifiedUpToBudget);
        assert!(!rep.exhaustive);
        assert!(rep.evaluations <= 100);
        assert!(rep.coverage.iter().any(|c| !c.complete));
    }

    #[test]
    fn reruns_are_identical() {
        let r = RingSpec::finite(&[1, 2], &[1, 2]).unwrap();
        let a = verify_macaulay_lex(&r, 4, &Budget::default()).unwrap();
        let b = verify_macaulay_lex(&r, 4, &Budget::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn univariate_predicate_examples() {
        let f = Ext::Fin;
        assert!(truncated_univariate_predicate(f(2), &[f(1), f(2)]));
        assert!(!truncated_univariate_predicate(f(2), &[f(2), f(1)]));
        assert!(truncated_univariate_predicate(
            Ext::Inf,
            &[f(3), f(3), f(3)]
        ));
        assert!(truncated_univariate_predicate(f(1), &[f(3), f(2)]));
    }

    #[test]
    fn tampered_witness_fails_replay() {
        let r = RingSpec::finite(&[2, 1], &[1, 1]).unwrap();
        let rep = verify_macaulay_lex(&r, 3, &Budget::default()).unwrap();
        let mut w = rep.witness.unwrap();
        w.space = vec!["x[1,1]*x[2,1]".into()];
        assert!(check_witness(&r, rep.criterion, &w).is_err());
    }
}

#[cfg(test)]
mod properties {
    use super::*;
    use crate::classify::classify;
    use crate::space::{lower_shadow, revlex_segment};
    use crate::strategies;
    use proptest::prelude::*;

    const SMALL: Budget = Budget {
        max_piece: 12,
        max_evaluations: 1 << 16,
    };

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn oracle_minimizer_attains_the_minimum(r in strategies::ring(), d in 1u32..=3, k in 0usize..16) {
            let piece = enumerate_piece(&r, d);
            prop_assume!(piece.len() <= SMALL.max_piece);
            let k = k % (piece.len() + 1);
            let m = min_shadow_oracle(&r, d, k, &SMALL).unwrap();
            prop_assert_eq!(m.minimizer.len(), k);
            prop_assert_eq!(lower_shadow(&m.minimizer).unwrap().len(), m.min);
            let seg = lower_shadow(&revlex_segment(&r, d, k).unwrap()).unwrap().len();
            prop_assert!(m.min <= seg);
            if classify(&r).unwrap().is_macaulay_lex() {
                prop_assert_eq!(m.min, seg);
            }
        }

        #[test]
        fn oracle_is_below_any_subset(a in strategies::space()) {
            let piece = enumerate_piece(a.ring(), a.degree());
            prop_assume!(piece.len() <= SMALL.max_piece);
            let m = min_shadow_oracle(a.ring(), a.degree(), a.len(), &SMALL).unwrap();
            prop_assert!(m.min <= lower_shadow(&a).unwrap().len());
        }

        #[test]
        fn reports_replay_and_ignore_worker_count(r in strategies::truncated_ring()) {
            let report = verify_macaulay_lex(&r, 3, &SMALL).unwrap();
            if let Some(w) = &report.witness {
                prop_assert!(check_witness(&r, report.criterion, w).is_ok());
            }
            let json = serde_json::to_string(&report).unwrap();
            prop_assert_eq!(&serde_json::from_str::<VerificationReport>(&json).unwrap(), &report);
            let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
            let single = pool.install(|| verify_macaulay_lex(&r, 3, &SMALL).unwrap());
            prop_assert_eq!(single, report);
        }
    }
}
