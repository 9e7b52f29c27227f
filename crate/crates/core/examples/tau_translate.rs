//! Minimal presentations, the Nakayama functor and τ-rigidity.

use std::sync::Arc;

use taubound::algebra::parse_algebra;
use taubound::rep::{is_isomorphic, minimal_presentation, Rep};
use taubound::tau::{is_tau_rigid, tau};

fn main() -> taubound::Result<()> {
    let a = Arc::new(parse_algebra(include_str!("../data/exA.alg"))?);
    let s1 = Rep::simple(&a, 0);

    let pres = minimal_presentation(&s1);
    println!("P1 -> P0 -> S1 -> 0 with P0 = P{:?}, P1 = P{:?}", pres.p0, pres.p1);

    let t = tau(&s1);
    println!("τS1 has dims {:?}", t.dims());
    println!("τS1 ≅ P2: {}", is_isomorphic(&t, &Rep::projective(&a, 1))?);

    for (name, m) in [
        ("P1", Rep::projective(&a, 0)),
        ("S1", s1.clone()),
        ("S2", Rep::simple(&a, 1)),
        ("P1+S1", Rep::projective(&a, 0).direct_sum(&s1)),
    ] {
        println!("{name:6} τ-rigid: {}", is_tau_rigid(&m));
    }
    Ok(())
}
