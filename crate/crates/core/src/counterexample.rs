//! Explicit spaces beating the revlex segment in truncated colored rings.
//!
//! [`build_counterexample`] follows a fixed recipe: it picks a color `s`
//! with small type, assembles a degree `d - 1` monomial `q` from the
//! revlex-largest admissible blocks of the other colors, moves one unit of
//! `q` to a neighboring variable to get `q~`, and removes the multiples of
//! `q` from a revlex initial segment. The result `A` has a strictly smaller
//! lower shadow than the revlex segment of the same size.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Ext, Monomial, RingSpec, Variable};
use crate::space::{enumerate_piece, lower_shadow, MonomialSpace};

#[derive(Clone, Copy, Default, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CounterexampleOptions {
    /// Only require `lambda >= 2 * 1_n`; the extra box in the last color is
    /// then demanded only if the chosen `s` is 1.
    pub weak_composition: bool,
}

/// Every intermediate object of the construction, as canonical text.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CounterexampleArtifact {
    pub ring: RingSpec,
    pub degree: u32,
    /// The type with infinite entries replaced by `d + 1`; same pieces in
    /// degrees `d - 1` and `d`.
    pub effective_type: Vec<u32>,
    pub weak_composition: bool,
    pub s: usize,
    /// `m^_t` per color.
    pub m_hat: Vec<String>,
    pub p_hat: String,
    pub gamma: Vec<usize>,
    pub m_tilde: String,
    pub m_prime: String,
    pub q: String,
    pub x_dagger: String,
    pub q_tilde: String,
    pub x_tilde: String,
    pub a_tilde: Vec<String>,
    pub a_q: Vec<String>,
    pub a_q_tilde: Vec<String>,
    /// The output space `A = A~ - A_q`.
    pub space: Vec<String>,
    pub x_0: String,
    /// The revlex segment of size `|A|`, `(A~ - A_q~) + {q~ x_0}`.
    pub segment: Vec<String>,
    /// `|∂A|`
    pub shadow: usize,
    /// `|∂ Revlex(A)|`
    pub segment_shadow: usize,
}

fn ext_sum(xs: impl IntoIterator<Item = Ext>) -> Ext {
    xs.into_iter().fold(Ext::Fin(0), |acc, x| match (acc, x) {
        (Ext::Fin(a), Ext::Fin(b)) => Ext::Fin(a.saturating_add(b)),
        _ => Ext::Inf,
    })
}

fn hypothesis(ok: bool, name: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Hypothesis(name.to_string()))
    }
}

/// Monomials supported on `X_color` of the given degree, within `phi`, with
/// per-index exponent bounds `bound(j)` (exclusive, `None` for no bound).
fn color_monomials(
    ring: &RingSpec,
    color: usize,
    degree: u32,
    bound: impl Fn(usize) -> Option<u32>,
) -> Vec<Monomial> {
    let lambda = ring.lambda()[color - 1];
    let caps: Vec<u32> = (1..=lambda)
        .map(|j| {
            let slot = ring
                .slot(Variable::new(color, j))
                .expect("variable in ring");
            let phi_cap = ring.slot_cap(slot).cap(degree);
            match bound(j) {
                Some(b) => phi_cap.min(b.saturating_sub(1)),
                None => phi_cap,
            }
        })
        .collect();
    let mut out = Vec::new();
    let mut exps = vec![0u32; lambda];
    fn go(j: usize, left: u32, caps: &[u32], exps: &mut [u32], out: &mut Vec<Vec<u32>>) {
        if j == caps.len() {
            if left == 0 {
                out.push(exps.to_vec());
            }
            return;
        }
        for e in 0..=caps[j].min(left) {
            exps[j] = e;
            go(j + 1, left - e, caps, exps, out);
        }
        exps[j] = 0;
    }
    let mut raw = Vec::new();
    go(0, degree, &caps, &mut exps, &mut raw);
    for e in raw {
        let factors: Vec<(Variable, u32)> = e
            .iter()
            .enumerate()
            .map(|(j, &x)| (Variable::new(color, j + 1), x))
            .collect();
        out.push(
            ring.monomial_from_factors(&factors)
                .expect("variables in ring"),
        );
    }
    out
}

/// Revlex-largest of a nonempty set of same-degree monomials.
fn revlex_max(ms: impl IntoIterator<Item = Monomial>) -> Option<Monomial> {
    ms.into_iter()
        .min_by(|x, y| x.exponents().cmp(y.exponents()))
}

fn revlex_min(ms: impl IntoIterator<Item = Monomial>) -> Option<Monomial> {
    ms.into_iter()
        .max_by(|x, y| x.exponents().cmp(y.exponents()))
}

/// Divisors of `m` of the given degree.
fn divisors_of_degree(ring: &RingSpec, m: &Monomial, degree: u32) -> Vec<Monomial> {
    fn go(slot: usize, left: u32, max: &[u32], exps: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slot == max.len() {
            if left == 0 {
                out.push(exps.clone());
            }
            return;
        }
        for e in 0..=max[slot].min(left) {
            exps[slot] = e;
            go(slot + 1, left - e, max, exps, out);
        }
        exps[slot] = 0;
    }
    let mut raw = Vec::new();
    go(
        0,
        degree,
        m.exponents(),
        &mut vec![0; m.exponents().len()],
        &mut raw,
    );
    raw.into_iter()
        .map(|e| ring.monomial(e).expect("slot count matches"))
        .collect()
}

fn internal(what: &str) -> Error {
    Error::Internal(format!("counterexample construction: {what}"))
}

/// Builds a `W_d(phi)`-space `A` with `|∂A| < |∂ Revlex(A)|`.
///
/// Requires `n, d > 1`, `lambda >= 2 * 1_n + delta_n`, some `a_i < d`,
/// `a != 1_n`, `|a| > d`, and `sum(phi(x) : x in X_t - x[t,1]) >= a_t` for
/// every color. Violations are reported by name.
pub fn build_counterexample(
    ring: &RingSpec,
    degree: u32,
    options: CounterexampleOptions,
) -> Result<CounterexampleArtifact> {
    let n = ring.n();
    let d = degree;
    let a = ring.a();
    let lambda = ring.lambda();
    hypothesis(n > 1, "n > 1")?;
    hypothesis(d > 1, "d > 1")?;
    if options.weak_composition {
        hypothesis(lambda.iter().all(|&l| l >= 2), "lambda >= 2*1_n")?;
    } else {
        hypothesis(
            lambda.iter().all(|&l| l >= 2) && lambda[n - 1] >= 3,
            "lambda >= 2*1_n + delta_n",
        )?;
    }
    hypothesis(a.iter().any(|&x| x < Ext::Fin(d)), "a not >= d*1_n")?;
    hypothesis(a.iter().any(|&x| x != Ext::Fin(1)), "a != 1_n")?;
    hypothesis(ext_sum(a.iter().copied()) > Ext::Fin(d), "|a| > d")?;
    for t in 1..=n {
        let tail = ext_sum(
            (2..=lambda[t - 1])
                .map(|j| ring.phi_of(Variable::new(t, j)).expect("variable in ring")),
        );
        hypothesis(
            tail >= a[t - 1],
            "sum of phi over X_t minus x[t,1] >= a_t for every t",
        )?;
    }

    let b: Vec<u32> = a.iter().map(|x| x.finite().unwrap_or(d + 1)).collect();
    let w = ring.with_type(b.iter().map(|&x| Ext::Fin(x)).collect())?;
    let prev = |s: usize| if s == 1 { n } else { s - 1 };
    let admissible = |s: usize| b[s - 1] < d && b[prev(s) - 1] >= 2;
    let s = if options.weak_composition {
        match (2..=n).find(|&s| admissible(s)) {
            Some(s) => s,
            None => {
                hypothesis(lambda[n - 1] >= 3, "lambda_n >= 3 when s = 1")?;
                1
            }
        }
    } else {
        (1..=n)
            .find(|&s| admissible(s))
            .ok_or_else(|| internal("no admissible color s"))?
    };
    let sp = prev(s);

    // m^_t: revlex-largest degree-b_t monomial on X_t avoiding x[t,1].
    let mut m_hat = Vec::with_capacity(n);
    for t in 1..=n {
        let cands = color_monomials(&w, t, b[t - 1], |j| (j == 1).then_some(1));
        m_hat.push(revlex_max(cands).ok_or_else(|| internal("empty X^_t"))?);
    }

    let cap_of = |t: usize, j: usize| -> u32 {
        let phi = w.phi_of(Variable::new(t, j)).expect("variable in ring");
        phi.cap(b[t - 1])
    };
    let y_hat = if s > 1 {
        let c = s - 1;
        let cap2 = cap_of(c, 2);
        color_monomials(&w, c, b[c - 1] - 2, |j| match j {
            1 => Some(1),
            2 => Some(cap2),
            _ => None,
        })
    } else {
        let (cap2, cap3) = (cap_of(n, 2), cap_of(n, 3));
        color_monomials(&w, n, b[n - 1] - 2, |j| match j {
            1 => Some(1),
            2 => Some(cap2),
            3 => Some(cap3),
            _ => None,
        })
    };
    let p_hat = revlex_max(y_hat).ok_or_else(|| internal("empty Y^"))?;

    let gamma: Vec<usize> = (1..=n).filter(|&t| t != s && t != sp).collect();
    let m_tilde = gamma
        .iter()
        .fold(p_hat.clone(), |acc, &t| w.multiply(&acc, &m_hat[t - 1]));
    if !w.contains(&m_tilde) {
        return Err(internal("m~ is not in W(phi)"));
    }
    let prime_degree = (d - 1)
        .checked_sub(b[s - 1])
        .ok_or_else(|| internal("a_s > d - 1"))?;
    let m_prime = revlex_min(
        divisors_of_degree(&w, &m_tilde, prime_degree)
            .into_iter()
            .filter(|m| w.contains(m)),
    )
    .ok_or_else(|| internal("m~ has no divisor of degree d - 1 - a_s"))?;
    let q = w.multiply(&m_prime, &m_hat[s - 1]);

    let xs2 = w.slot(Variable::new(s, 2))?;
    let x_dagger = xs2
        .checked_sub(1)
        .ok_or_else(|| internal("x[s,2] has no successor"))?;
    if w.slot_color(x_dagger) != sp {
        return Err(internal("x[s,2]† is not in the preceding color"));
    }
    let q_tilde = w
        .divide_slot(&q, xs2)
        .and_then(|m| w.multiply_slot(&m, x_dagger))
        .ok_or_else(|| internal("q~ is not in W(phi)"))?;
    if !w.contains(&q) || q.degree() != d - 1 {
        return Err(internal("q is not in W_{d-1}(phi)"));
    }

    let (x_tilde, top) = (xs2 + 1..w.num_vars())
        .find_map(|slot| w.multiply_slot(&q_tilde, slot).map(|m| (slot, m)))
        .ok_or_else(|| internal("no variable x~"))?;

    let piece = enumerate_piece(&w, d);
    let end = piece
        .position(&top)
        .ok_or_else(|| internal("q~x~ is not in the piece"))?;
    let a_tilde = &piece.members()[..=end];
    let a_q: Vec<Monomial> = a_tilde.iter().filter(|m| q.divides(m)).cloned().collect();
    let a_qt: Vec<Monomial> = a_tilde
        .iter()
        .filter(|m| q_tilde.divides(m))
        .cloned()
        .collect();
    if a_q.len() + 1 != a_qt.len() {
        return Err(internal(&format!(
            "|A_q| = {} but |A_q~| = {}",
            a_q.len(),
            a_qt.len()
        )));
    }
    let space: Vec<Monomial> = a_tilde.iter().filter(|m| !q.divides(m)).cloned().collect();
    let top_qt = &a_qt[0];
    let x0 = (0..w.num_vars())
        .find(|&slot| w.divide_slot(top_qt, slot).as_ref() == Some(&q_tilde))
        .ok_or_else(|| internal("no variable x_0"))?;
    let mut segment: Vec<Monomial> = a_tilde
        .iter()
        .filter(|m| !q_tilde.divides(m))
        .cloned()
        .collect();
    segment.push(top_qt.clone());

    // Everything below is measured in the caller's ring.
    let space = MonomialSpace::new(ring, d, space)?;
    let segment = MonomialSpace::new(ring, d, segment)?;
    let revlex = enumerate_piece(ring, d).revlex_segment(space.len())?;
    if segment != revlex {
        return Err(internal("I is not the revlex segment of size |A|"));
    }
    let shadow = lower_shadow(&space)?.len();
    let segment_shadow = lower_shadow(&revlex)?.len();
    if shadow >= segment_shadow {
        return Err(internal(&format!(
            "shadow inequality fails: {shadow} >= {segment_shadow}"
        )));
    }

    let show = |m: &Monomial| w.format_monomial(m);
    let show_all = |ms: &[Monomial]| ms.iter().map(show).collect::<Vec<_>>();
    Ok(CounterexampleArtifact {
        ring: ring.clone(),
        degree: d,
        effective_type: b,
        weak_composition: options.weak_composition,
        s,
        m_hat: m_hat.iter().map(show).collect(),
        p_hat: show(&p_hat),
        gamma,
        m_tilde: show(&m_tilde),
        m_prime: show(&m_prime),
        q: show(&q),
        x_dagger: w.variable(x_dagger).to_string(),
        q_tilde: show(&q_tilde),
        x_tilde: w.variable(x_tilde).to_string(),
        a_tilde: show_all(a_tilde),
        a_q: show_all(&a_q),
        a_q_tilde: show_all(&a_qt),
        space: space.to_strings(),
        x_0: w.variable(x0).to_string(),
        segment: segment.to_strings(),
        shadow,
        segment_shadow,
    })
}

/// Recomputes the shadows of a recorded artifact from its space alone.
pub fn check_counterexample(artifact: &CounterexampleArtifact) -> Result<()> {
    let ring = &artifact.ring;
    let lines: Vec<&str> = artifact.space.iter().map(String::as_str).collect();
    let space = MonomialSpace::parse(ring, artifact.degree, &lines)?;
    let shadow = lower_shadow(&space)?.len();
    let segment = enumerate_piece(ring, artifact.degree).revlex_segment(space.len())?;
    let segment_shadow = lower_shadow(&segment)?.len();
    if (shadow, segment_shadow) != (artifact.shadow, artifact.segment_shadow) {
        return Err(Error::ReplayMismatch(format!(
            "recorded shadows ({}, {}) but recomputed ({shadow}, {segment_shadow})",
            artifact.shadow, artifact.segment_shadow
        )));
    }
    if shadow >= segment_shadow {
        return Err(Error::ReplayMismatch(format!(
            "space does not beat the revlex segment: {shadow} >= {segment_shadow}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{min_shadow_oracle, Budget};

    fn build(a: &[u32], lambda: &[usize], d: u32) -> Result<CounterexampleArtifact> {
        build_counterexample(
            &RingSpec::finite(a, lambda).unwrap(),
            d,
            CounterexampleOptions::default(),
        )
    }

    #[test]
    fn two_colors_degree_two() {
        let art = build(&[1, 2], &[2, 3], 2).unwrap();
        assert_eq!(art.s, 1);
        assert!(art.shadow < art.segment_shadow);
        assert_eq!(art.a_q.len() + 1, art.a_q_tilde.len());
        check_counterexample(&art).unwrap();

        // The oracle agrees that the revlex segment is not optimal.
        let ring = RingSpec::finite(&[1, 2], &[2, 3]).unwrap();
        let best = min_shadow_oracle(&ring, 2, art.space.len(), &Budget::default()).unwrap();
        assert!(best.min < art.segment_shadow);
        assert!(best.min <= art.shadow);
    }

    #[test]
    fn hypotheses_are_named() {
        let err = build(&[1, 1], &[2, 3], 2).unwrap_err();
        assert!(
            matches!(err, Error::Hypothesis(ref h) if h == "a != 1_n"),
            "{err}"
        );
        let err = build(&[2, 2], &[2, 3], 2).unwrap_err();
        assert!(
            matches!(err, Error::Hypothesis(ref h) if h == "a not >= d*1_n"),
            "{err}"
        );
        let err = build(&[1, 2], &[2, 2], 2).unwrap_err();
        assert!(
            matches!(err, Error::Hypothesis(ref h) if h.starts_with("lambda")),
            "{err}"
        );
        let err = build(&[1, 2], &[2, 3], 1).unwrap_err();
        assert!(
            matches!(err, Error::Hypothesis(ref h) if h == "d > 1"),
            "{err}"
        );
        let err = build(&[1, 1], &[2, 3], 1).unwrap_err();
        assert!(matches!(err, Error::Hypothesis(_)));
    }

    #[test]
    fn phi_hypothesis_is_checked() {
        // a_2 = 3 but the tail of color 2 only carries 1 + 1.
        let ring = RingSpec::finite(&[1, 3], &[2, 3])
            .unwrap()
            .with_phi(Some(vec![Ext::Fin(1); 5]))
            .unwrap();
        let err = build_counterexample(&ring, 2, CounterexampleOptions::default()).unwrap_err();
        assert!(matches!(err, Error::Hypothesis(ref h) if h.starts_with("sum of phi")));
    }

    #[test]
    fn squarefree_truncation() {
        let ring = RingSpec::finite(&[1, 2], &[2, 3])
            .unwrap()
            .with_phi(Some(vec![Ext::Fin(1); 5]))
            .unwrap();
        let art = build_counterexample(&ring, 2, CounterexampleOptions::default()).unwrap();
        check_counterexample(&art).unwrap();
    }

    #[test]
    fn infinite_type_is_capped() {
        let ring =
            RingSpec::untruncated(vec![Ext::Fin(1), Ext::Inf, Ext::Fin(2)], vec![2, 2, 3]).unwrap();
        let art = build_counterexample(&ring, 3, CounterexampleOptions::default()).unwrap();
        assert_eq!(art.effective_type, [1, 4, 2]);
        check_counterexample(&art).unwrap();
    }

    #[test]
    fn weak_composition_prefers_later_colors() {
        let ring = RingSpec::finite(&[2, 1], &[2, 2]).unwrap();
        let err = build_counterexample(&ring, 2, CounterexampleOptions::default()).unwrap_err();
        assert!(matches!(err, Error::Hypothesis(_)));
        let art = build_counterexample(
            &ring,
            2,
            CounterexampleOptions {
                weak_composition: true,
            },
        )
        .unwrap();
        assert_eq!(art.s, 2);
        check_counterexample(&art).unwrap();
    }

    #[test]
    fn tampered_artifact_fails_replay() {
        let mut art = build(&[1, 2], &[2, 3], 2).unwrap();
        art.shadow -= 1;
        assert!(check_counterexample(&art).is_err());
    }
}
