//! Proptest strategies shared by the unit tests.

use proptest::prelude::*;

use crate::ring::{Ext, RingSpec};
use crate::space::{enumerate_piece, MonomialSpace};

pub fn ext() -> impl Strategy<Value = Ext> {
    prop_oneof![(1u32..=3).prop_map(Ext::Fin), Just(Ext::Inf)]
}

/// Untruncated rings with at most three colors and five variables.
pub fn ring() -> impl Strategy<Value = RingSpec> {
    (1usize..=3)
        .prop_flat_map(|n| {
            (
                prop::collection::vec(ext(), n),
                prop::collection::vec(1usize..=3, n),
            )
        })
        .prop_filter("at most five variables", |(_, lambda)| {
            lambda.iter().sum::<usize>() <= 5
        })
        .prop_map(|(a, lambda)| RingSpec::untruncated(a, lambda).unwrap())
}

/// Rings with an optional truncation.
pub fn truncated_ring() -> impl Strategy<Value = RingSpec> {
    (ring(), any::<bool>()).prop_flat_map(|(r, truncate)| {
        let n = r.num_vars();
        prop::collection::vec(ext(), n)
            .prop_map(move |phi| r.with_phi(truncate.then_some(phi)).unwrap())
    })
}

/// A ring, a degree in `1..=3` and a random subset of that graded piece.
pub fn space() -> impl Strategy<Value = MonomialSpace> {
    (ring(), 1u32..=3).prop_flat_map(|(r, d)| {
        let piece = enumerate_piece(&r, d);
        let len = piece.len();
        prop::collection::vec(any::<bool>(), len)
            .prop_map(move |keep| piece.space_from_positions((0..len).filter(|&i| keep[i])))
    })
}
