//! Bitmask machinery for exhaustive sweeps over subsets of a graded piece.
//!
//! Subsets of a piece of size `N <= 64` are `u64` masks where bit `i` is the
//! member at position `i` in descending revlex order. Masks of a fixed weight
//! are visited in increasing numeric order (colex order of the subsets).

use crate::space::GradedPiece;

pub const MAX_SWEEP_PIECE: usize = 64;

/// Iterates all `k`-subsets of `[n]` as masks, in increasing numeric order.
pub fn masks_of_weight(n: usize, k: usize) -> impl Iterator<Item = u64> {
    debug_assert!(n <= MAX_SWEEP_PIECE);
    let limit: u128 = 1u128 << n;
    let start: u128 = if k > n { limit } else { (1u128 << k) - 1 };
    let mut next = Some(start).filter(|&m| m < limit);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack.
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let nx = (((r ^ cur) >> 2) / c) | r;
            Some(nx).filter(|&m| m < limit)
        };
        Some(cur as u64)
    })
}

/// `C(n, k)`, saturating.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// For each member of a source piece, the set of related members of a target
/// piece (divisors one degree down, or multiples one degree up) as bit rows.
#[derive(Clone, Debug)]
pub struct Adjacency {
    sources: usize,
    targets: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Adjacency {
    fn build(source: &GradedPiece, target: &GradedPiece, up: bool) -> Self {
        let ring = source.ring();
        let words = target.len().div_ceil(64).max(1);
        let mut rows = vec![0u64; source.len() * words];
        for (i, m) in source.members().iter().enumerate() {
            for slot in 0..ring.num_vars() {
                let other = if up {
                    ring.multiply_slot(m, slot)
                } else {
                    ring.divide_slot(m, slot)
                };
                if let Some(j) = other.and_then(|o| target.position(&o)) {
                    rows[i * words + j / 64] |= 1 << (j % 64);
                }
            }
        }
        Adjacency {
            sources: source.len(),
            targets: target.len(),
            words,
            rows,
        }
    }

    /// Divisors: `piece` at degree `d`, `below` at degree `d - 1`.
    pub fn lower(piece: &GradedPiece, below: &GradedPiece) -> Self {
        Self::build(piece, below, false)
    }

    /// Multiples: `piece` at degree `d`, `above` at degree `d + 1`.
    pub fn upper(piece: &GradedPiece, above: &GradedPiece) -> Self {
        Self::build(piece, above, true)
    }

    pub fn sources(&self) -> usize {
        self.sources
    }

    pub fn targets(&self) -> usize {
        self.targets
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words..(i + 1) * self.words]
    }

    /// Size of the union of the rows selected by `mask`.
    pub fn image_size(&self, mask: u64, scratch: &mut [u64]) -> usize {
        if self.words == 1 {
            let mut acc = 0u64;
            let mut m = mask;
            while m != 0 {
                acc |= self.rows[m.trailing_zeros() as usize];
                m &= m - 1;
            }
            return acc.count_ones() as usize;
        }
        scratch.iter_mut().for_each(|w| *w = 0);
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            for (s, r) in scratch.iter_mut().zip(self.row(i)) {
                *s |= r;
            }
            m &= m - 1;
        }
        scratch.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Image of an arbitrary set of source positions.
    pub fn image_of(&self, positions: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut acc = vec![0u64; self.words];
        for i in positions {
            for (s, r) in acc.iter_mut().zip(self.row(i)) {
                *s |= r;
            }
        }
        (0..self.targets)
            .filter(|&j| acc[j / 64] & (1 << (j % 64)) != 0)
            .collect()
    }

    pub fn scratch(&self) -> Vec<u64> {
        vec![0; self.words]
    }

    /// Minimum image size over all `k`-subsets of the sources, with the first
    /// minimizing mask in sweep order.
    pub fn min_image(&self, k: usize) -> (usize, u64) {
        let mut scratch = self.scratch();
        let mut best = (usize::MAX, 0u64);
        for mask in masks_of_weight(self.sources, k) {
            let size = self.image_size(mask, &mut scratch);
            if size < best.0 {
                best = (size, mask);
            }
        }
        best
    }
}

pub fn mask_positions(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let i = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(i)
    })
}

pub fn positions_mask(positions: impl IntoIterator<Item = usize>) -> u64 {
    positions.into_iter().fold(0, |acc, i| acc | (1 << i))
}


#[cfg(test)]
mod properties {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn masks_of_weight_enumerates_every_subset_once(n in 0usize..=14, k in 0usize..=14) {
            let masks: Vec<u64> = masks_of_weight(n, k).collect();
            prop_assert_eq!(masks.len() as u64, binomial(n, k));
            prop_assert!(masks.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(masks.iter().all(|m| m.count_ones() as usize == k && *m >> n == 0));
        }

        #[test]
        fn positions_round_trip(mask in any::<u64>()) {
            prop_assert_eq!(positions_mask(mask_positions(mask)), mask);
        }
    }
}
