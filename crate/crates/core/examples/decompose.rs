//! Split a module into indecomposables and compare summands up to isomorphism.

use std::sync::Arc;

use taubound::algebra::parse_algebra;
use taubound::rep::{decompose, hom_dim, is_isomorphic, parse_module_expr, parse_modules};

fn main() -> taubound::Result<()> {
    let a = Arc::new(parse_algebra(include_str!("../data/exA.alg"))?);
    let lib = parse_modules(include_str!("../data/exA.mod"), std::slice::from_ref(&a))?;
    let m = parse_module_expr("T+P2+S1", &a, &lib)?;
    println!("M has dimension vector {:?}", m.dims());

    let d = decompose(&m)?;
    for s in &d.summands {
        println!("summand with dims {:?}", s.module.dims());
    }
    for class in &d.classes {
        println!("isomorphism class {class:?}");
    }
    println!("basic: {}", d.is_basic());

    let s1 = lib.get("S1").expect("S1 in library");
    let p2 = parse_module_expr("P2", &a, &lib)?;
    println!("dim Hom(P2, S1) = {}", hom_dim(&p2, s1));
    println!(
        "S1 ≅ S(1): {}",
        is_isomorphic(s1, &parse_module_expr("S(1)", &a, &lib)?)?
    );
    Ok(())
}
