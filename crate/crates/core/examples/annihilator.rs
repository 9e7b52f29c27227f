//! Annihilators, faithfulness and the factor algebra A/ann M.

use std::sync::Arc;

use taubound::algebra::{factor_algebra, ideal_from_generators, nilpotency_index, parse_algebra};
use taubound::rep::Rep;

fn main() -> taubound::Result<()> {
    let a = Arc::new(parse_algebra(include_str!("../data/exA.alg"))?);
    let t = Rep::projective(&a, 0).direct_sum(&Rep::simple(&a, 0));

    let ann = ideal_from_generators(&a, &t.annihilator());
    println!("dim ann(P1+S1) = {}", ann.dim());
    for x in ann.basis() {
        println!("  {}", a.element_display(x));
    }
    println!("nilpotency index r = {}", nilpotency_index(&a, &ann)?);
    println!("sincere {}, faithful {}", t.is_sincere(), t.is_faithful());

    let c = factor_algebra(&a, &ann)?;
    println!(
        "A/ann T: dimension {}, {} arrows, {} relations",
        c.dim(),
        c.quiver().arrows().len(),
        c.relations().len()
    );

    let regular = Rep::projective(&a, 0).direct_sum(&Rep::projective(&a, 1));
    println!("regular module faithful: {}", regular.is_faithful());
    Ok(())
}
