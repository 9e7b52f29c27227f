//! The bound der.dim A <= r(1 + der.dim B) - 1 at every node of the exchange
//! graph, together with the tilting check over A/ann M.
//!
//!     cargo run --example bound_report [file.alg] [file.reg]

use std::sync::Arc;

use taubound::algebra::parse_algebra;
use taubound::endo::Registry;
use taubound::report::{bound_report, tilting_proxy_check};
use taubound::tau::{enumerate_stt, DEFAULT_MAX_NODES};

fn main() -> taubound::Result<()> {
    let mut args = std::env::args().skip(1);
    let read = |p: String| std::fs::read_to_string(p).expect("readable file");
    let alg = args
        .next()
        .map(read)
        .unwrap_or_else(|| include_str!("../data/exA.alg").into());
    let reg = args
        .next()
        .map(read)
        .unwrap_or_else(|| include_str!("../data/known.reg").into());
    let a = Arc::new(parse_algebra(&alg)?);
    let registry = Registry::parse(&reg)?;

    let g = enumerate_stt(&a, DEFAULT_MAX_NODES)?;
    println!(
        "{:14} {:24} {:>3} {:>5} {:>6}  {:12} proxy",
        "pair", "class", "r", "rhs", "lhs", "status"
    );
    for n in &g.nodes {
        let m = n.pair.module_sum(&a);
        let rep = bound_report(&m, &n.pair.support, &registry)?;
        let proxy = tilting_proxy_check(&m, &n.pair.support)?;
        let r = rep.r.map_or("-".into(), |r| r.to_string());
        let rhs = rep.rhs.map_or("-".into(), |v| v.value.to_string());
        let lhs = if rep.lhs.is_exact() {
            rep.lhs.value.to_string()
        } else {
            format!("<={}", rep.lhs.value)
        };
        let ok = if proxy.passed { "ok" } else { "FAILED" };
        println!(
            "{:14} {:24} {r:>3} {rhs:>5} {lhs:>6}  {:12} {ok}",
            n.name,
            rep.classification.to_string(),
            rep.status.to_string()
        );
    }

    let red = g.node("P1+S1").map(|n| n.pair.module_sum(&a));
    if let Some(t) = red {
        println!("\n{}", bound_report(&t, &Default::default(), &registry)?.to_json());
    }
    Ok(())
}
