//! Colored multicomplexes, f-vectors and the revlex witness hunt.
//!
//! Run with `cargo run --release --example multicomplex`.

use colored_quotient::multicomplex::{
    build_compressed, search_realizable, witness_hunt, ColoredMulticomplex, FVector,
};
use colored_quotient::RingSpec;

fn main() -> colored_quotient::Result<()> {
    let squarefree = RingSpec::finite(&[1, 1], &[2, 2])?;
    let m = ColoredMulticomplex::generated_by(
        &squarefree,
        [squarefree.parse_monomial("x[1,2]*x[2,2]")?],
    )?;
    println!(
        "generated by x[1,2]*x[2,2]: {:?}, f = {}",
        m.to_strings(),
        m.f_vector()
    );
    let revlex = build_compressed(&squarefree, &m.f_vector())?;
    println!("revlex realization: {:?}", revlex.to_strings());

    let ambient = RingSpec::finite(&[1, 2], &[2, 3])?;
    let f: FVector = "1,2,3".parse()?;
    match build_compressed(&ambient, &f) {
        Ok(c) => println!("f = {f} is realized by revlex: {:?}", c.to_strings()),
        Err(e) => println!("f = {f} has no revlex realization: {e}"),
    }
    if let Some(found) = search_realizable(&ambient, &f, 1_000_000)? {
        println!("but search finds {:?}", found.to_strings());
    }

    if let Some(w) = witness_hunt(&ambient, 3, 1_000_000)? {
        println!(
            "hunt: f = {} after {} candidates, missing {}",
            w.f, w.candidates, w.missing
        );
    }
    Ok(())
}
