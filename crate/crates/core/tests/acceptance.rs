//! One PASS/FAIL line per acceptance criterion.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::oracle::{count_support_tau_tilting, intervals, simples_by_hand};
use common::suites::{self, Check};
use common::{algebra, graph, registry};
use taubound::algebra::{ideal_from_generators, nilpotency_index, Path};
use taubound::endo::Registry;
use taubound::endo::{
    derdim_estimate, dynkin_type, endo_algebra, is_hereditary, quiver_presentation, EstimateKind, GLDIM_CAP,
};
use taubound::rep::Rep;
use taubound::report::{bound_report, BoundStatus};
use taubound::tau::PairClass;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

type Criterion = (&'static str, fn() -> Check);

fn timed(limit: Duration, f: impl FnOnce() -> Check) -> Check {
    let start = Instant::now();
    f()?;
    let took = start.elapsed();
    ensure!(took < limit, "took {took:?}, limit {limit:?}");
    Ok(())
}

fn red_node() -> Rep {
    let a = algebra("exA");
    Rep::projective(&a, 0).direct_sum(&Rep::simple(&a, 0))
}

fn exchange_graph() -> Check {
    timed(Duration::from_secs(1), || {
        let g = graph(&algebra("exA"));
        let mut nodes = g.node_names();
        nodes.sort();
        ensure!(nodes == ["0", "P1+P2", "P1+S1", "P2", "S1"], "nodes {nodes:?}");
        let mut edges = g.edge_names();
        edges.sort();
        let expected = [
            ("P1+P2", "P1+S1"),
            ("P1+P2", "P2"),
            ("P1+S1", "S1"),
            ("P2", "0"),
            ("S1", "0"),
        ];
        ensure!(edges == expected, "edges {edges:?}");
        Ok(())
    })
}

fn annihilator() -> Check {
    let a = algebra("exA");
    let ann = ideal_from_generators(&a, &red_node().annihilator());
    ensure!(ann.dim() == 1, "dim ann = {}", ann.dim());
    let beta = a.path_element(&Path::arrow(a.quiver(), a.quiver().arrow_index("β").unwrap()));
    ensure!(ann.contains(&a, &beta), "β ∉ ann");
    let r = nilpotency_index(&a, &ann).map_err(|e| e.to_string())?;
    ensure!(r == 2, "r = {r}");
    Ok(())
}

fn endomorphism() -> Check {
    let a = algebra("exA");
    let t = [Rep::projective(&a, 0), Rep::simple(&a, 0)];
    let e = endo_algebra(&t, "B").map_err(|e| e.to_string())?;
    ensure!(e.dim() == 3, "dim End = {}", e.dim());
    let b = std::sync::Arc::new(quiver_presentation(&e).map_err(|e| e.to_string())?);
    let q = b.quiver();
    ensure!(
        q.vertex_count() == 2 && q.arrows().len() == 1,
        "quiver {:?}",
        q.arrows()
    );
    ensure!(
        !q.has_oriented_cycle() && b.relations().is_empty(),
        "cycle or relations"
    );
    ensure!(
        is_hereditary(&b, GLDIM_CAP).map_err(|e| e.to_string())?,
        "not hereditary"
    );
    let ty = dynkin_type(q).map(|t| t.to_string());
    ensure!(ty.as_deref() == Some("A2"), "type {ty:?}");
    let d = derdim_estimate(&b, &Registry::default()).map_err(|e| e.to_string())?;
    ensure!(d.kind == EstimateKind::Exact && d.value == 0, "estimate {d}");
    Ok(())
}

fn bound() -> Check {
    let rep = bound_report(&red_node(), &BTreeSet::new(), &registry()).map_err(|e| e.to_string())?;
    let rhs = rep.rhs.ok_or("no rhs")?;
    ensure!(rep.r == Some(2), "r = {:?}", rep.r);
    ensure!(
        rep.d_b.map(|d| (d.kind, d.value)) == Some((EstimateKind::Exact, 0)),
        "d_B {:?}",
        rep.d_b
    );
    ensure!(
        rhs.value == 1 && rep.lhs.value == 1,
        "rhs {} lhs {}",
        rhs.value,
        rep.lhs.value
    );
    ensure!(rep.status == BoundStatus::Tight, "status {}", rep.status);
    let json = rep.to_json();
    let back = taubound::report::BoundReport::from_json(&json).map_err(|e| e.to_string())?;
    ensure!(back.to_json() == json, "JSON round trip differs");
    Ok(())
}

fn classification() -> Check {
    let g = graph(&algebra("exA"));
    let red: Vec<&str> = g
        .nodes
        .iter()
        .filter(|n| n.class == PairClass::TauTiltingNotTilting)
        .map(|n| n.name.as_str())
        .collect();
    ensure!(red == ["P1+S1"], "tau-tilting-not-tilting nodes {red:?}");
    ensure!(
        g.nodes[0].name == "P1+P2" && g.nodes[0].class == PairClass::Tilting,
        "root {}",
        g.nodes[0].class
    );
    suites::classification_consistency()
}

fn counting_oracles() -> Check {
    timed(Duration::from_secs(1), || {
        let a2 = algebra("a2");
        let k2 = algebra("k2");
        let (oa, ok) = (
            count_support_tau_tilting(&a2, &intervals(&a2)),
            count_support_tau_tilting(&k2, &simples_by_hand(&k2)),
        );
        ensure!(oa == 5 && ok == 4, "oracle counts {oa}, {ok}");
        Ok(())
    })?;
    let (ga, gk) = (graph(&algebra("a2")).nodes.len(), graph(&algebra("k2")).nodes.len());
    ensure!(ga == 5 && gk == 4, "enumerated counts {ga}, {gk}");
    Ok(())
}

fn property_suites() -> Check {
    let limit = Duration::from_secs(10);
    let suites: [Criterion; 7] = [
        ("Krull-Schmidt", suites::krull_schmidt),
        ("Yoneda", suites::yoneda),
        ("τ(projective) = 0", suites::tau_of_projectives),
        ("mutation involution", suites::mutation_involution),
        ("n-regularity", suites::regularity),
        ("Loewy bound", suites::loewy_consistency),
        ("byte-identical reruns", suites::byte_identical_reruns),
    ];
    for (name, f) in suites {
        timed(limit, f).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("exchange graph of exA", exchange_graph),
        ("annihilator and nilpotency", annihilator),
        ("endomorphism presentation", endomorphism),
        ("derived dimension bound report", bound),
        ("classification", classification),
        ("tilting proxy suite", suites::tilting_proxy),
        ("counting oracles", counting_oracles),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("PASS {name} ({:.0?})", start.elapsed()),
            Err(e) => {
                failed += 1;
                println!("FAIL {name}: {e}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
