//! Parse a bound quiver algebra and print its path basis and radical layers.
//!
//!     cargo run --example parse_algebra [file.alg]

use taubound::algebra::{loewy_length, parse_algebra, radical};

fn main() -> taubound::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(&path).expect("readable algebra file"),
        None => include_str!("../data/exA.alg").to_string(),
    };
    let a = parse_algebra(&text)?;
    let q = a.quiver();
    println!(
        "{}: {} vertices, {} arrows, dimension {}",
        a.name(),
        a.vertex_count(),
        q.arrows().len(),
        a.dim()
    );
    for p in a.basis() {
        println!("  {}", p.display(q));
    }
    for r in a.relations() {
        println!("relation {}", r.display(q));
    }
    println!("dim rad = {}, Loewy length = {}", radical(&a).dim(), loewy_length(&a)?);
    Ok(())
}
