//! Exhaustive Macaulay-Lex search with a replayable witness.
//!
//! Run with `cargo run --release --example verify`.

use colored_quotient::verify::{check_witness, min_shadow_oracle, verify_macaulay_lex, Budget};
use colored_quotient::RingSpec;

fn main() -> colored_quotient::Result<()> {
    let budget = Budget::default();

    let ring = RingSpec::finite(&[1, 1], &[2, 2])?;
    let m = min_shadow_oracle(&ring, 2, 2, &budget)?;
    println!(
        "{ring}: min |shadow| over 2-subsets of W_2 is {}, attained by {:?}",
        m.min,
        m.minimizer.to_strings()
    );

    for ring in [
        RingSpec::finite(&[1, 1, 1], &[2, 2, 3])?,
        RingSpec::finite(&[2, 1], &[1, 1])?,
    ] {
        let report = verify_macaulay_lex(&ring, 3, &budget)?;
        println!(
            "{ring}: {:?}, exhaustive {}, {} shadow evaluations",
            report.verdict, report.exhaustive, report.evaluations
        );
        if let Some(w) = &report.witness {
            check_witness(&ring, report.criterion, w)?;
            println!(
                "  witness in degree {}: {:?} has shadow {} < {}",
                w.degree, w.space, w.shadow, w.segment_shadow
            );
        }
    }
    Ok(())
}
