//! Explicit space whose shadow beats the revlex segment of the same size.
//!
//! Run with `cargo run --example counterexample`.

use colored_quotient::counterexample::{
    build_counterexample, check_counterexample, CounterexampleOptions,
};
use colored_quotient::RingSpec;

fn main() -> colored_quotient::Result<()> {
    let ring = RingSpec::finite(&[1, 2], &[2, 3])?;
    let art = build_counterexample(&ring, 2, CounterexampleOptions::default())?;
    check_counterexample(&art)?;
    println!("{ring}, d = 2, s = {}", art.s);
    println!("q = {}, q~ = {}", art.q, art.q_tilde);
    println!("A = {:?}", art.space);
    println!("Revlex(A) = {:?}", art.segment);
    println!(
        "|shadow A| = {} < |shadow Revlex(A)| = {}",
        art.shadow, art.segment_shadow
    );

    let refused = build_counterexample(
        &RingSpec::finite(&[1, 1], &[2, 3])?,
        2,
        CounterexampleOptions::default(),
    );
    println!("a = (1,1): {}", refused.unwrap_err());
    Ok(())
}
