mod common;

use std::sync::Arc;

use proptest::prelude::*;
use taubound::algebra::BoundQuiverAlgebra;
use taubound::matrix::Matrix;
use taubound::rep::{decompose, hom_dim, Rep};

use common::{algebra, module_pool, same_multiset, suites};

fn summands(m: &Rep) -> Vec<Rep> {
    decompose(m).unwrap().summands.into_iter().map(|s| s.module).collect()
}

fn sum_of(a: &Arc<BoundQuiverAlgebra>, pool: &[Rep], picks: &[usize]) -> Rep {
    let chosen: Vec<Rep> = picks.iter().map(|&i| pool[i % pool.len()].clone()).collect();
    Rep::direct_sum_all(a, &chosen)
}

/// A representation of the unbound `a3` quiver with entries in `0..3`.
fn random_a3(entries: &[i64], d: [usize; 3]) -> Rep {
    let a = algebra("a3");
    let f = a.field();
    let mut it = entries.iter().cycle();
    let mut mat = |rows: usize, cols: usize| {
        let data = (0..rows)
            .map(|_| (0..cols).map(|_| f.from_i64(*it.next().unwrap())).collect())
            .collect();
        Matrix::from_rows(f, rows, cols, data)
    };
    let maps = vec![mat(d[1], d[0]), mat(d[2], d[1])];
    Rep::new(a, d.to_vec(), maps).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn krull_schmidt(alg in 0..common::CORPUS.len(), xs in prop::collection::vec(0usize..64, 1..3), ys in prop::collection::vec(0usize..64, 1..3)) {
        let a = algebra(common::CORPUS[alg].0);
        let pool = module_pool(&a);
        let m = sum_of(&a, &pool, &xs);
        let n = sum_of(&a, &pool, &ys);
        let mut parts = summands(&m);
        parts.extend(summands(&n));
        prop_assert!(same_multiset(&summands(&m.direct_sum(&n)), &parts));
    }

    #[test]
    fn krull_schmidt_random_representations(
        e in prop::collection::vec(0i64..3, 12),
        d in prop::array::uniform3(0usize..3),
        g in prop::collection::vec(0i64..3, 12),
        h in prop::array::uniform3(0usize..3),
    ) {
        let m = random_a3(&e, d);
        let n = random_a3(&g, h);
        let mut parts = summands(&m);
        parts.extend(summands(&n));
        let whole = summands(&m.direct_sum(&n));
        prop_assert_eq!(whole.iter().map(Rep::dim).sum::<usize>(), m.dim() + n.dim());
        prop_assert!(same_multiset(&whole, &parts));
    }

    #[test]
    fn yoneda(alg in 0..common::CORPUS.len(), xs in prop::collection::vec(0usize..64, 1..4)) {
        let a = algebra(common::CORPUS[alg].0);
        let m = sum_of(&a, &module_pool(&a), &xs);
        for i in 0..a.vertex_count() {
            prop_assert_eq!(hom_dim(&Rep::projective(&a, i), &m), m.dims()[i]);
        }
    }
}

#[test]
fn krull_schmidt_on_pool() {
    suites::krull_schmidt().unwrap();
}

#[test]
fn yoneda_on_pool() {
    suites::yoneda().unwrap();
}

#[test]
fn tau_of_projectives_vanishes() {
    suites::tau_of_projectives().unwrap();
}

#[test]
fn mutation_is_an_involution() {
    suites::mutation_involution().unwrap();
}

#[test]
fn exchange_graphs_are_regular() {
    suites::regularity().unwrap();
}

#[test]
fn registry_values_respect_loewy_bound() {
    suites::loewy_consistency().unwrap();
}

#[test]
fn reports_hold_on_every_node() {
    suites::reports_on_every_node().unwrap();
}

#[test]
fn classification_matches_faithfulness_and_sincerity() {
    suites::classification_consistency().unwrap();
}

#[test]
fn reruns_are_byte_identical() {
    suites::byte_identical_reruns().unwrap();
}
