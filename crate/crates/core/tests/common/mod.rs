#![allow(dead_code)]

pub mod oracle;
pub mod suites;

use std::sync::Arc;

use taubound::algebra::{parse_algebra, BoundQuiverAlgebra};
use taubound::endo::Registry;
use taubound::rep::{is_isomorphic, Rep};
use taubound::tau::{enumerate_stt, ExchangeGraph, DEFAULT_MAX_NODES};

pub const CORPUS: &[(&str, &str)] = &[
    ("exA", include_str!("../../data/exA.alg")),
    ("a2", include_str!("../../data/a2.alg")),
    ("k2", include_str!("../../data/k2.alg")),
    ("a3", include_str!("../../data/a3.alg")),
    ("a3_rad2", include_str!("../../data/a3_rad2.alg")),
    ("dual", include_str!("../../data/dual.alg")),
    ("nakayama2", include_str!("../../data/nakayama2.alg")),
];

pub const REGISTRY: &str = include_str!("../../data/known.reg");
pub const EXA_MODULES: &str = include_str!("../../data/exA.mod");

pub fn algebra(name: &str) -> Arc<BoundQuiverAlgebra> {
    let (_, text) = CORPUS.iter().find(|(n, _)| *n == name).expect("corpus algebra");
    Arc::new(parse_algebra(text).unwrap())
}

pub fn corpus() -> Vec<Arc<BoundQuiverAlgebra>> {
    CORPUS.iter().map(|(n, _)| algebra(n)).collect()
}

pub fn registry() -> Registry {
    Registry::parse(REGISTRY).unwrap()
}

pub fn graph(a: &Arc<BoundQuiverAlgebra>) -> ExchangeGraph {
    enumerate_stt(a, DEFAULT_MAX_NODES).unwrap()
}

/// Projectives, injectives, simples and every summand met in the exchange
/// graph.
pub fn module_pool(a: &Arc<BoundQuiverAlgebra>) -> Vec<Rep> {
    let mut pool = Vec::new();
    for v in 0..a.vertex_count() {
        pool.push(Rep::projective(a, v));
        pool.push(Rep::injective(a, v));
        pool.push(Rep::simple(a, v));
    }
    for n in graph(a).nodes {
        pool.extend(n.pair.module);
    }
    pool
}

/// Equal as multisets of isomorphism classes.
pub fn same_multiset(x: &[Rep], y: &[Rep]) -> bool {
    if x.len() != y.len() {
        return false;
    }
    let mut used = vec![false; y.len()];
    for m in x {
        let hit = (0..y.len()).find(|&j| !used[j] && m.dims() == y[j].dims() && is_isomorphic(m, &y[j]).unwrap());
        match hit {
            Some(j) => used[j] = true,
            None => return false,
        }
    }
    true
}
