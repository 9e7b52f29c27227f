//! Enumerate the support τ-tilting exchange graph and print it as DOT.
//!
//!     cargo run --example exchange_graph [file.alg] | dot -Tsvg > graph.svg

use std::sync::Arc;

use taubound::algebra::parse_algebra;
use taubound::tau::{enumerate_stt, DEFAULT_MAX_NODES};

fn main() -> taubound::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(&path).expect("readable algebra file"),
        None => include_str!("../data/exA.alg").to_string(),
    };
    let a = Arc::new(parse_algebra(&text)?);
    let g = enumerate_stt(&a, DEFAULT_MAX_NODES)?;
    eprintln!("{} nodes, {} edges", g.nodes.len(), g.edges.len());
    for n in &g.nodes {
        eprintln!("  {:12} {}", n.name, n.class);
    }
    print!("{}", g.to_dot());
    Ok(())
}
