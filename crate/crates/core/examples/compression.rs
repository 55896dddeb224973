//! Color compressions `C_t` and the quasi-compression loop.
//!
//! Run with `cargo run --example compression`.

use colored_quotient::compress::{compress, is_quasi_compressed, quasi_compress};
use colored_quotient::space::{is_revlex_segment, lower_shadow, norm, MonomialSpace};
use colored_quotient::RingSpec;

fn main() -> colored_quotient::Result<()> {
    let ring = RingSpec::finite(&[1, 1], &[2, 2])?;
    let a = MonomialSpace::parse(&ring, 2, &["x[1,1]*x[2,2]", "x[1,2]*x[2,1]"])?;
    println!("A = {:?}, norm {}", a.to_strings(), norm(&a)?);

    for t in 1..=ring.n() {
        let c = compress(&a, t)?;
        println!(
            "C_{t}(A) = {:?}, norm {}, |shadow| {} -> {}",
            c.to_strings(),
            norm(&c)?,
            lower_shadow(&a)?.len(),
            lower_shadow(&c)?.len()
        );
    }

    let q = quasi_compress(&a)?;
    for step in &q.trace {
        println!("step: C_{} brings the norm to {}", step.t, step.norm);
    }
    println!(
        "result {:?}: quasi-compressed {}, revlex segment {}",
        q.space.to_strings(),
        is_quasi_compressed(&q.space)?,
        is_revlex_segment(&q.space)?
    );
    Ok(())
}
