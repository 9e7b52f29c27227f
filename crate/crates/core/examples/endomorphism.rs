//! End(T) as a bound quiver algebra, with its derived dimension estimate.

use std::sync::Arc;

use taubound::algebra::parse_algebra;
use taubound::endo::{
    derdim_estimate, dynkin_type, endo_algebra, is_hereditary, quiver_presentation, Registry, GLDIM_CAP,
};
use taubound::rep::Rep;

fn main() -> taubound::Result<()> {
    let a = Arc::new(parse_algebra(include_str!("../data/exA.alg"))?);
    let t = [Rep::projective(&a, 0), Rep::simple(&a, 0)];

    let e = endo_algebra(&t, "B")?;
    println!("dim End(P1+S1) = {}", e.dim());
    for (i, j, _) in &e.basis {
        println!("  basis map T{} -> T{}", j + 1, i + 1);
    }

    let b = Arc::new(quiver_presentation(&e)?);
    let q = b.quiver();
    for arr in q.arrows() {
        println!(
            "arrow {}: {} -> {}",
            arr.label,
            q.vertices()[arr.source],
            q.vertices()[arr.target]
        );
    }
    println!("relations: {}", b.relations().len());
    println!("hereditary: {}", is_hereditary(&b, GLDIM_CAP)?);
    if let Some(t) = dynkin_type(q) {
        println!("Dynkin type {t}");
    }
    println!("der.dim B = {}", derdim_estimate(&b, &Registry::default())?);
    Ok(())
}
