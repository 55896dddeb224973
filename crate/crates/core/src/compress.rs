//! Per-color compression `C_t` and the quasi-compression fixpoint.
//!
//! `C_t` splits a space by the `X_t`-part `q` of its members and replaces
//! each fiber `A[t; q] / q` by the revlex segment of the same size in the
//! ring with color `t` deleted.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::bits::mask_positions;
use crate::error::{Error, Result};
use crate::ring::{Monomial, RingSpec};
use crate::space::{enumerate_piece, GradedPiece, MonomialSpace};

/// The ring on `X_lambda - X_t` with the inherited order, type and truncation.
#[derive(Clone, Debug)]
pub struct DeletedRing {
    parent: RingSpec,
    t: usize,
    ring: RingSpec,
    /// parent slot of each slot of `ring`
    parent_slot: Vec<usize>,
}

impl DeletedRing {
    pub fn new(parent: &RingSpec, t: usize) -> Result<Self> {
        let n = parent.n();
        if t == 0 || t > n {
            return Err(Error::InvalidColor(t));
        }
        if n < 2 {
            return Err(Error::SingleColor);
        }
        let keep = |c: usize| c != t;
        let a = (1..=n)
            .filter(|&c| keep(c))
            .map(|c| parent.a()[c - 1])
            .collect();
        let lambda = (1..=n)
            .filter(|&c| keep(c))
            .map(|c| parent.lambda()[c - 1])
            .collect();
        let phi = parent.phi().map(|phi| {
            let mut out = Vec::new();
            let mut offset = 0;
            for (c, &l) in parent.lambda().iter().enumerate() {
                if keep(c + 1) {
                    out.extend_from_slice(&phi[offset..offset + l]);
                }
                offset += l;
            }
            out
        });
        let ring = RingSpec::new(a, lambda, phi)?;
        let parent_slot = ring
            .variables()
            .iter()
            .map(|v| {
                let color = if v.color >= t { v.color + 1 } else { v.color };
                parent.slot(crate::ring::Variable::new(color, v.index))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DeletedRing {
            parent: parent.clone(),
            t,
            ring,
            parent_slot,
        })
    }

    pub fn parent(&self) -> &RingSpec {
        &self.parent
    }

    pub fn deleted_color(&self) -> usize {
        self.t
    }

    /// The deleted-color ring itself (colors renumbered consecutively).
    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    /// `m` with its `X_t`-part removed, as a monomial of the deleted ring.
    pub fn restrict(&self, m: &Monomial) -> Monomial {
        let exps = self.parent_slot.iter().map(|&p| m.exponents()[p]).collect();
        self.ring.monomial(exps).expect("slot count matches")
    }

    /// `q * m` for `q` supported on `X_t` and `m` in the deleted ring.
    pub fn lift(&self, q: &Monomial, m: &Monomial) -> Monomial {
        let mut exps = q.exponents().to_vec();
        for (s, &p) in self.parent_slot.iter().enumerate() {
            exps[p] += m.exponents()[s];
        }
        self.parent.monomial(exps).expect("slot count matches")
    }
}

fn check_color(ring: &RingSpec, t: usize) -> Result<()> {
    if t == 0 || t > ring.n() {
        return Err(Error::InvalidColor(t));
    }
    Ok(())
}

/// `A[t; q] / q` as a space of the deleted ring.
pub fn fiber(space: &MonomialSpace, t: usize, q: &Monomial) -> Result<MonomialSpace> {
    let ring = space.ring();
    check_color(ring, t)?;
    if q.exponents().len() != ring.num_vars() {
        return Err(Error::RingMismatch);
    }
    if !ring.supported_on(q, t) {
        return Err(Error::NotColorSupported(ring.format_monomial(q)));
    }
    if q.degree() > space.degree() {
        return Err(Error::DegreeMismatch {
            left: q.degree(),
            right: space.degree(),
        });
    }
    let deleted = DeletedRing::new(ring, t)?;
    let members = space
        .members()
        .iter()
        .filter(|m| &ring.color_part(m, t) == q)
        .map(|m| deleted.restrict(m));
    MonomialSpace::new(deleted.ring(), space.degree() - q.degree(), members)
}

/// Applies `C_t`. For a single-color ring this is the identity.
pub fn compress(space: &MonomialSpace, t: usize) -> Result<MonomialSpace> {
    let ring = space.ring();
    check_color(ring, t)?;
    if ring.n() == 1 {
        return Ok(space.clone());
    }
    let deleted = DeletedRing::new(ring, t)?;
    let mut fibers: BTreeMap<Vec<u32>, (Monomial, usize)> = BTreeMap::new();
    for m in space.members() {
        let q = ring.color_part(m, t);
        fibers
            .entry(q.exponents().to_vec())
            .or_insert_with(|| (q, 0))
            .1 += 1;
    }
    let mut pieces: HashMap<u32, GradedPiece> = HashMap::new();
    let mut out = Vec::with_capacity(space.len());
    for (q, count) in fibers.into_values() {
        let degree = space.degree() - q.degree();
        let piece = pieces
            .entry(degree)
            .or_insert_with(|| enumerate_piece(deleted.ring(), degree));
        let segment = piece.revlex_segment(count)?;
        out.extend(segment.members().iter().map(|m| deleted.lift(&q, m)));
    }
    MonomialSpace::new(ring, space.degree(), out)
}

/// Whether `C_t(A) = A` for every color `t`.
pub fn is_quasi_compressed(space: &MonomialSpace) -> Result<bool> {
    for t in 1..=space.ring().n() {
        if &compress(space, t)? != space {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One step of the quasi-compression run: the color applied and the norm after.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TraceStep {
    pub t: usize,
    pub norm: u64,
}

#[derive(Clone, Debug)]
pub struct QuasiCompression {
    pub space: MonomialSpace,
    pub initial_norm: u64,
    pub trace: Vec<TraceStep>,
}

/// Repeatedly applies the first `C_t` (scanning `t = 1..n`) that strictly
/// lowers the norm, until none does.
pub fn quasi_compress(space: &MonomialSpace) -> Result<QuasiCompression> {
    let piece = enumerate_piece(space.ring(), space.degree());
    let initial_norm = piece.norm(space)?;
    let mut current = space.clone();
    let mut current_norm = initial_norm;
    let mut trace = Vec::new();
    'outer: loop {
        for t in 1..=space.ring().n() {
            let next = compress(&current, t)?;
            let next_norm = piece.norm(&next)?;
            if next_norm < current_norm {
                current = next;
                current_norm = next_norm;
                trace.push(TraceStep { t, norm: next_norm });
                continue 'outer;
            }
            if next_norm > current_norm {
                return Err(Error::Internal(format!("C_{t} increased the norm")));
            }
        }
        break;
    }
    Ok(QuasiCompression {
        space: current,
        initial_norm,
        trace,
    })
}

/// `C_t` on position masks of one graded piece (size at most 64).
///
/// Members sharing an `X_t`-part form a group; inside a group the revlex
/// order of the parent agrees with the revlex order of the quotients, so
/// `C_t` keeps the first `c` members of each group.
#[derive(Clone, Debug)]
pub struct CompressionTable {
    /// per group, the prefix masks of sizes `0..=len`
    prefixes: Vec<Vec<u64>>,
    group_masks: Vec<u64>,
}

impl CompressionTable {
    pub fn new(piece: &GradedPiece, t: usize) -> Result<Self> {
        let ring = piece.ring();
        check_color(ring, t)?;
        if piece.len() > crate::bits::MAX_SWEEP_PIECE {
            return Err(Error::OutOfRange {
                what: "piece size",
                value: piece.len(),
                max: crate::bits::MAX_SWEEP_PIECE,
            });
        }
        let mut groups: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
        for (i, m) in piece.members().iter().enumerate() {
            let key = if ring.n() == 1 {
                // C_1 is the identity: every member is its own group.
                vec![i as u32]
            } else {
                ring.color_part(m, t).exponents().to_vec()
            };
            groups.entry(key).or_default().push(i);
        }
        let mut prefixes = Vec::new();
        let mut group_masks = Vec::new();
        for members in groups.into_values() {
            let mut acc = 0u64;
            let mut pre = vec![0u64];
            for &i in &members {
                acc |= 1 << i;
                pre.push(acc);
            }
            group_masks.push(acc);
            prefixes.push(pre);
        }
        Ok(CompressionTable {
            prefixes,
            group_masks,
        })
    }

    pub fn apply(&self, mask: u64) -> u64 {
        self.group_masks
            .iter()
            .zip(&self.prefixes)
            .fold(0, |acc, (&g, pre)| {
                acc | pre[(mask & g).count_ones() as usize]
            })
    }
}

/// Norm of a mask: the sum of 1-based ranks.
pub fn mask_norm(mask: u64) -> u64 {
    mask_positions(mask).map(|i| i as u64 + 1).sum()
}
