//! Lower and upper shadows, and the shadow of a revlex segment.
//!
//! Run with `cargo run --example shadows`.

use colored_quotient::space::{
    is_revlex_segment, lower_shadow, revlex_segment, upper_shadow, MonomialSpace,
};
use colored_quotient::RingSpec;

fn main() -> colored_quotient::Result<()> {
    let ring = RingSpec::finite(&[1, 1], &[2, 2])?;
    let a = MonomialSpace::parse(&ring, 2, &["x[1,1]*x[2,1]", "x[1,1]*x[2,2]"])?;
    println!("A        = {:?}", a.to_strings());
    println!("lower(A) = {:?}", lower_shadow(&a)?.to_strings());

    let single = MonomialSpace::parse(&ring, 1, &["x[1,1]"])?;
    println!(
        "upper({:?}) = {:?}",
        single.to_strings(),
        upper_shadow(&single).to_strings()
    );

    for k in 0..=4 {
        let seg = revlex_segment(&ring, 2, k)?;
        let shadow = lower_shadow(&seg)?;
        println!(
            "k = {k}: |shadow| = {}, shadow is a revlex segment: {}",
            shadow.len(),
            is_revlex_segment(&shadow)?
        );
    }
    Ok(())
}
