//! Mixed / hinged classification of a few rings.
//!
//! Run with `cargo run --example classify`.

use colored_quotient::classify::classify;
use colored_quotient::{Ext, RingSpec};

fn main() -> colored_quotient::Result<()> {
    let cases: [(Vec<Ext>, Vec<usize>); 5] = [
        (vec![Ext::Fin(1); 3], vec![3, 2, 4]),
        (vec![Ext::Fin(2), Ext::Fin(3)], vec![4, 1]),
        (vec![Ext::Fin(2), Ext::Fin(1)], vec![1, 1]),
        (vec![Ext::Fin(1), Ext::Fin(2)], vec![1, 2]),
        (vec![Ext::Fin(1), Ext::Inf], vec![2, 1]),
    ];
    for (a, lambda) in cases {
        let ring = RingSpec::untruncated(a, lambda)?;
        let c = classify(&ring)?;
        println!("{ring}: {c:?} (Macaulay-Lex: {})", c.is_macaulay_lex());
    }
    Ok(())
}
