//! Mixed / hinged classification of untruncated colored quotient rings.
//!
//! A ring is Macaulay-Lex exactly when it is mixed or hinged, so the verdict
//! doubles as a decision procedure for the untruncated family.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Ext, RingSpec};

/// Why a ring is neither mixed nor hinged.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum NeitherReason {
    /// `a_t > a_{t+1}` for this (1-based) `t`.
    TypeDecreasing { t: usize },
    /// `s` is the last color with `lambda_s >= 2`, `s >= 2`, and `a_s > 1`.
    WideColorAboveUnitType { s: usize },
}

impl NeitherReason {
    pub fn code(&self) -> &'static str {
        match self {
            NeitherReason::TypeDecreasing { .. } => "type-decreasing",
            NeitherReason::WideColorAboveUnitType { .. } => "wide-color-above-unit-type",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Classification {
    Mixed { r: usize },
    Hinged,
    Neither { witness: NeitherReason },
}

impl Classification {
    pub fn kind(&self) -> &'static str {
        match self {
            Classification::Mixed { .. } => "Mixed",
            Classification::Hinged => "Hinged",
            Classification::Neither { .. } => "Neither",
        }
    }

    pub fn is_macaulay_lex(&self) -> bool {
        !matches!(self, Classification::Neither { .. })
    }
}

fn nondecreasing(xs: &[Ext]) -> bool {
    xs.windows(2).all(|w| w[0] <= w[1])
}

/// Whether the ring is mixed with split index `r` (`0 <= r <= n`).
pub fn is_mixed_at(a: &[Ext], lambda: &[usize], r: usize) -> bool {
    r <= a.len()
        && a[..r].iter().all(|&x| x == Ext::Fin(1))
        && lambda[r..].iter().all(|&l| l == 1)
        && nondecreasing(&a[r..])
}

pub fn is_hinged(a: &[Ext], lambda: &[usize]) -> bool {
    nondecreasing(a) && lambda.iter().skip(1).all(|&l| l == 1)
}

/// Classifies an untruncated ring; `Mixed` wins over `Hinged` and reports
/// the smallest valid split index.
pub fn classify(ring: &RingSpec) -> Result<Classification> {
    if ring.is_truncated() {
        return Err(Error::TruncatedClassification);
    }
    let (a, lambda) = (ring.a(), ring.lambda());
    if let Some(r) = (0..=a.len()).find(|&r| is_mixed_at(a, lambda, r)) {
        return Ok(Classification::Mixed { r });
    }
    if is_hinged(a, lambda) {
        return Ok(Classification::Hinged);
    }
    let witness = match a.windows(2).position(|w| w[0] > w[1]) {
        Some(i) => NeitherReason::TypeDecreasing { t: i + 1 },
        None => {
            let s = lambda
                .iter()
                .rposition(|&l| l >= 2)
                .map(|i| i + 1)
                .ok_or_else(|| Error::Internal("neither verdict without a wide color".into()))?;
            NeitherReason::WideColorAboveUnitType { s }
        }
    };
    Ok(Classification::Neither { witness })
}
