//! Variable and monomial orders, graded pieces and segments.
//!
//! Run with `cargo run --example orders`.

use colored_quotient::ring::{compare_lex, compare_revlex};
use colored_quotient::space::enumerate_piece;
use colored_quotient::{RingSpec, Variable};

fn main() -> colored_quotient::Result<()> {
    // W = k[x11, x12, x21] / Q_(1,2)
    let ring = RingSpec::finite(&[1, 2], &[2, 1])?;
    let order: Vec<String> = ring.variables().iter().map(Variable::to_string).collect();
    println!("variables, largest first: {}", order.join(" > "));

    let piece = enumerate_piece(&ring, 2);
    println!("W_2 in descending revlex order:");
    for m in piece.members() {
        println!("  {}", ring.show(m));
    }

    let (first, last) = (&piece.members()[0], &piece.members()[piece.len() - 1]);
    println!(
        "{} vs {}: lex {:?}, revlex {:?}",
        ring.show(first),
        ring.show(last),
        compare_lex(first, last)?,
        compare_revlex(first, last)?
    );

    for k in 0..=piece.len() {
        println!(
            "revlex segment of size {k}: {:?}",
            piece.revlex_segment(k)?.to_strings()
        );
        println!(
            "   lex segment of size {k}: {:?}",
            piece.lex_segment(k)?.to_strings()
        );
    }
    Ok(())
}
