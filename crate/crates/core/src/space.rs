//! Graded pieces, monomial spaces, segments, shadows and the revlex norm.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::ring::{revlex_desc_key, Monomial, RingSpec};

/// All monomials of `W_d(phi)`, sorted in descending revlex order.
///
/// Rank 1 is the revlex-largest monomial.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    ring: RingSpec,
    degree: u32,
    members: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

/// Enumerates the graded piece `W_d(phi)`.
pub fn enumerate_piece(ring: &RingSpec, degree: u32) -> GradedPiece {
    let caps: Vec<u32> = ring.a().iter().map(|a| a.cap(degree)).collect();
    let mut out = Vec::new();
    let mut exps = vec![0u32; ring.num_vars()];
    let mut color_left = caps;
    fill(ring, 0, degree, &mut exps, &mut color_left, &mut out);
    out.sort_by(|x, y| revlex_desc_key(x).cmp(revlex_desc_key(y)));
    GradedPiece::from_sorted(ring.clone(), degree, out)
}

fn fill(
    ring: &RingSpec,
    slot: usize,
    left: u32,
    exps: &mut Vec<u32>,
    color_left: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    if slot == exps.len() {
        if left == 0 {
            out.push(ring.monomial(exps.clone()).expect("slot count matches"));
        }
        return;
    }
    let color = ring.slot_color(slot) - 1;
    let max = ring.slot_cap(slot).cap(left).min(color_left[color]);
    for e in 0..=max {
        exps[slot] = e;
        color_left[color] -= e;
        fill(ring, slot + 1, left - e, exps, color_left, out);
        color_left[color] += e;
    }
    exps[slot] = 0;
}

impl GradedPiece {
    fn from_sorted(ring: RingSpec, degree: u32, members: Vec<Monomial>) -> Self {
        let index = members
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        GradedPiece {
            ring,
            degree,
            members,
            index,
        }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Monomial] {
        &self.members
    }

    /// 0-based position in descending revlex order.
    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// The revlex norm of a single monomial: its 1-based rank.
    pub fn rank(&self, m: &Monomial) -> Option<usize> {
        self.position(m).map(|i| i + 1)
    }

    /// The whole piece as a space.
    pub fn full(&self) -> MonomialSpace {
        self.space_from_positions(0..self.len())
    }

    pub fn revlex_segment(&self, k: usize) -> Result<MonomialSpace> {
        self.check_size(k)?;
        Ok(self.space_from_positions(0..k))
    }

    pub fn lex_segment(&self, k: usize) -> Result<MonomialSpace> {
        self.check_size(k)?;
        Ok(self.space_from_positions(self.len() - k..self.len()))
    }

    fn check_size(&self, k: usize) -> Result<()> {
        if k > self.len() {
            return Err(Error::OutOfRange {
                what: "segment size",
                value: k,
                max: self.len(),
            });
        }
        Ok(())
    }

    /// The space spanned by the members at the given positions.
    pub fn space_from_positions(
        &self,
        positions: impl IntoIterator<Item = usize>,
    ) -> MonomialSpace {
        let mut pos: Vec<usize> = positions.into_iter().collect();
        pos.sort_unstable();
        pos.dedup();
        MonomialSpace {
            ring: self.ring.clone(),
            degree: self.degree,
            members: pos.into_iter().map(|i| self.members[i].clone()).collect(),
        }
    }

    /// Positions of the members of `space`; fails on a foreign monomial.
    pub fn positions(&self, space: &MonomialSpace) -> Result<Vec<usize>> {
        self.check_degree(space)?;
        space
            .members
            .iter()
            .map(|m| {
                self.position(m)
                    .ok_or_else(|| Error::NotInPiece(self.ring.format_monomial(m)))
            })
            .collect()
    }

    fn check_degree(&self, space: &MonomialSpace) -> Result<()> {
        if space.degree != self.degree {
            return Err(Error::DegreeMismatch {
                left: space.degree,
                right: self.degree,
            });
        }
        if space.ring != self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// Sum of the ranks of the members of `space`.
    pub fn norm(&self, space: &MonomialSpace) -> Result<u64> {
        Ok(self.positions(space)?.iter().map(|&i| i as u64 + 1).sum())
    }

    pub fn is_revlex_segment(&self, space: &MonomialSpace) -> Result<bool> {
        let k = space.len();
        Ok(self.positions(space)?.iter().all(|&i| i < k))
    }

    pub fn is_lex_segment(&self, space: &MonomialSpace) -> Result<bool> {
        let cut = self.len() - space.len();
        Ok(self.positions(space)?.iter().all(|&i| i >= cut))
    }
}

/// A set of monomials of one graded piece `W_d(phi)`, kept in strictly
/// descending revlex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSpace {
    ring: RingSpec,
    degree: u32,
    members: Vec<Monomial>,
}

impl MonomialSpace {
    /// Builds a space, rejecting monomials of the wrong degree or outside
    /// `W(phi)`. Duplicates collapse.
    pub fn new(
        ring: &RingSpec,
        degree: u32,
        members: impl IntoIterator<Item = Monomial>,
    ) -> Result<Self> {
        let mut ms: Vec<Monomial> = Vec::new();
        for m in members {
            if m.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: m.degree(),
                    right: degree,
                });
            }
            if !ring.contains(&m) {
                return Err(Error::NotInPiece(ring.format_monomial(&m)));
            }
            ms.push(m);
        }
        Ok(Self::from_unsorted(ring.clone(), degree, ms))
    }

    pub fn empty(ring: &RingSpec, degree: u32) -> Self {
        MonomialSpace {
            ring: ring.clone(),
            degree,
            members: Vec::new(),
        }
    }

    pub(crate) fn from_unsorted(ring: RingSpec, degree: u32, mut members: Vec<Monomial>) -> Self {
        members.sort_by(|x, y| revlex_desc_key(x).cmp(revlex_desc_key(y)));
        members.dedup();
        MonomialSpace {
            ring,
            degree,
            members,
        }
    }

    pub fn parse(ring: &RingSpec, degree: u32, lines: &[&str]) -> Result<Self> {
        let ms = lines
            .iter()
            .map(|l| ring.parse_monomial(l))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, degree, ms)
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Monomial] {
        &self.members
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.members
            .binary_search_by(|x| revlex_desc_key(x).cmp(revlex_desc_key(m)))
            .is_ok()
    }

    pub fn is_subset(&self, other: &MonomialSpace) -> bool {
        self.degree == other.degree && self.members.iter().all(|m| other.contains(m))
    }

    /// Members in canonical text form, one per entry.
    pub fn to_strings(&self) -> Vec<String> {
        self.members
            .iter()
            .map(|m| self.ring.format_monomial(m))
            .collect()
    }
}

/// The `k` revlex-largest monomials of `W_d(phi)`.
pub fn revlex_segment(ring: &RingSpec, degree: u32, k: usize) -> Result<MonomialSpace> {
    enumerate_piece(ring, degree).revlex_segment(k)
}

/// The `k` lex-largest monomials of `W_d(phi)`.
pub fn lex_segment(ring: &RingSpec, degree: u32, k: usize) -> Result<MonomialSpace> {
    enumerate_piece(ring, degree).lex_segment(k)
}

/// All degree `d-1` monomials dividing some member.
pub fn lower_shadow(space: &MonomialSpace) -> Result<MonomialSpace> {
    if space.degree == 0 {
        return Err(Error::DegreeZeroShadow);
    }
    let ring = &space.ring;
    let mut out = BTreeSet::new();
    for m in &space.members {
        for slot in 0..ring.num_vars() {
            if let Some(d) = ring.divide_slot(m, slot) {
                out.insert(d.exponents().to_vec());
            }
        }
    }
    let members = out
        .into_iter()
        .map(|e| ring.monomial(e))
        .collect::<Result<Vec<_>>>()?;
    Ok(MonomialSpace::from_unsorted(
        ring.clone(),
        space.degree - 1,
        members,
    ))
}

/// All nonzero products `x * m` with `m` a member.
pub fn upper_shadow(space: &MonomialSpace) -> MonomialSpace {
    let ring = &space.ring;
    let mut out = BTreeSet::new();
    for m in &space.members {
        for slot in 0..ring.num_vars() {
            if let Some(p) = ring.multiply_slot(m, slot) {
                out.insert(p.exponents().to_vec());
            }
        }
    }
    let members = out
        .into_iter()
        .map(|e| ring.monomial(e).expect("slot count matches"))
        .collect();
    MonomialSpace::from_unsorted(ring.clone(), space.degree + 1, members)
}

/// Sum of the 1-based revlex ranks of the members.
pub fn norm(space: &MonomialSpace) -> Result<u64> {
    enumerate_piece(&space.ring, space.degree).norm(space)
}

pub fn is_revlex_segment(space: &MonomialSpace) -> Result<bool> {
    enumerate_piece(&space.ring, space.degree).is_revlex_segment(space)
}

pub fn is_lex_segment(space: &MonomialSpace) -> Result<bool> {
    enumerate_piece(&space.ring, space.degree).is_lex_segment(space)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ext;

    fn ring(a: &[u32], lambda: &[usize]) -> RingSpec {
        RingSpec::finite(a, lambda).unwrap()
    }

    fn space(r: &RingSpec, d: u32, ms: &[&str]) -> MonomialSpace {
        MonomialSpace::parse(r, d, ms).unwrap()
    }

    #[test]
    fn enumerate_examples() {
        let r = ring(&[1, 2], &[2, 1]);
        assert_eq!(enumerate_piece(&r, 0).full().to_strings(), ["1"]);
        assert_eq!(
            enumerate_piece(&r, 2).full().to_strings(),
            ["x[2,1]^2", "x[1,1]*x[2,1]", "x[1,2]*x[2,1]"]
        );
        assert_eq!(
            enumerate_piece(&r, 1).full().to_strings(),
            ["x[2,1]", "x[1,1]", "x[1,2]"]
        );
        assert!(enumerate_piece(&r, 4).is_empty());
    }

    #[test]
    fn segment_examples() {
        let r = ring(&[1, 2], &[2, 1]);
        assert_eq!(
            revlex_segment(&r, 2, 2).unwrap().to_strings(),
            ["x[2,1]^2", "x[1,1]*x[2,1]"]
        );
        assert!(revlex_segment(&r, 2, 0).unwrap().is_empty());
        assert_eq!(revlex_segment(&r, 2, 3).unwrap().len(), 3);
        assert_eq!(
            lex_segment(&r, 2, 1).unwrap().to_strings(),
            ["x[1,2]*x[2,1]"]
        );
        assert!(lex_segment(&r, 2, 0).unwrap().is_empty());
        assert_eq!(
            lex_segment(&r, 2, 3).unwrap(),
            enumerate_piece(&r, 2).full()
        );
        assert!(matches!(
            revlex_segment(&r, 2, 4),
            Err(Error::OutOfRange {
                value: 4,
                max: 3,
                ..
            })
        ));
    }

    #[test]
    fn lower_shadow_examples() {
        let r = ring(&[1, 1], &[2, 2]);
        assert_eq!(
            enumerate_piece(&r, 2).full().to_strings(),
            [
                "x[1,1]*x[2,1]",
                "x[1,1]*x[2,2]",
                "x[1,2]*x[2,1]",
                "x[1,2]*x[2,2]"
            ]
        );
        let a = space(&r, 2, &["x[1,1]*x[2,1]", "x[1,1]*x[2,2]"]);
        assert_eq!(
            lower_shadow(&a).unwrap().to_strings(),
            ["x[2,1]", "x[1,1]", "x[2,2]"]
        );
        let b = space(&r, 2, &["x[1,1]*x[2,1]", "x[1,2]*x[2,1]"]);
        assert_eq!(
            lower_shadow(&b).unwrap().to_strings(),
            ["x[2,1]", "x[1,1]", "x[1,2]"]
        );
        assert!(lower_shadow(&MonomialSpace::empty(&r, 2))
            .unwrap()
            .is_empty());
        let one = space(&r, 1, &["x[2,2]"]);
        assert_eq!(lower_shadow(&one).unwrap().to_strings(), ["1"]);
        assert!(matches!(
            lower_shadow(&MonomialSpace::empty(&r, 0)),
            Err(Error::DegreeZeroShadow)
        ));
    }

    #[test]
    fn upper_shadow_examples() {
        let r = ring(&[2], &[2]);
        let a = space(&r, 1, &["x[1,1]"]);
        assert_eq!(upper_shadow(&a).to_strings(), ["x[1,1]^2", "x[1,1]*x[1,2]"]);
        assert!(upper_shadow(&enumerate_piece(&r, 2).full()).is_empty());
        assert!(upper_shadow(&MonomialSpace::empty(&r, 1)).is_empty());
    }

    #[test]
    fn norm_examples() {
        let r = ring(&[1, 1], &[2, 2]);
        for k in 0..=4 {
            let seg = revlex_segment(&r, 2, k).unwrap();
            assert_eq!(norm(&seg).unwrap(), (k * (k + 1) / 2) as u64);
            assert!(is_revlex_segment(&seg).unwrap());
        }
        let a = space(&r, 2, &["x[1,1]*x[2,2]", "x[1,2]*x[2,1]"]);
        assert_eq!(norm(&a).unwrap(), 5);
        assert!(!is_revlex_segment(&a).unwrap());
        assert!(!is_lex_segment(&a).unwrap());
        assert_eq!(norm(&MonomialSpace::empty(&r, 2)).unwrap(), 0);
        assert!(is_revlex_segment(&MonomialSpace::empty(&r, 2)).unwrap());
        assert!(is_lex_segment(&lex_segment(&r, 2, 3).unwrap()).unwrap());
    }

    #[test]
    fn spaces_reject_foreign_monomials() {
        let r = ring(&[1, 1], &[2, 2]);
        let m = r.parse_monomial("x[1,1]*x[1,2]").unwrap();
        assert!(matches!(
            MonomialSpace::new(&r, 2, [m]),
            Err(Error::NotInPiece(_))
        ));
        let m = r.parse_monomial("x[1,1]").unwrap();
        assert!(matches!(
            MonomialSpace::new(&r, 2, [m]),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn truncation_caps_pieces() {
        let r = RingSpec::new(
            vec![Ext::Inf],
            vec![2],
            Some(vec![Ext::Fin(1), Ext::Fin(2)]),
        )
        .unwrap();
        assert_eq!(
            enumerate_piece(&r, 2).full().to_strings(),
            ["x[1,1]*x[1,2]", "x[1,2]^2"]
        );
        assert_eq!(
            enumerate_piece(&r, 3).full().to_strings(),
            ["x[1,1]*x[1,2]^2"]
        );
        assert!(enumerate_piece(&r, 4).is_empty());
    }
}
