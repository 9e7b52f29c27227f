//! The Nakayama functor, the AR translate and the transpose.

use std::sync::Arc;

use crate::algebra::{BoundQuiverAlgebra, Element};
use crate::matrix::Matrix;
use crate::rep::{cokernel, hom_dim, kernel, minimal_presentation, ModMap, ProjMap, Rep};

/// `ν P(i) = D(A e_i)`, graded by the paths ending at `i`.
pub fn nakayama_projective(algebra: &Arc<BoundQuiverAlgebra>, i: usize) -> Rep {
    Rep::injective(algebra, i)
}

/// `ν f` for a map of projectives. The component `I(i_a) → I(j_b)` at
/// vertex `k` is the transpose of right multiplication by the entry `x`,
/// `e_k A e_{j_b} → e_k A e_{i_a}`.
pub fn nakayama(algebra: &Arc<BoundQuiverAlgebra>, f: &ProjMap) -> ModMap {
    let a = algebra.as_ref();
    let fld = a.field();
    let sum = |vs: &[usize]| {
        let reps: Vec<Rep> = vs.iter().map(|&v| Rep::injective(algebra, v)).collect();
        Rep::direct_sum_all(algebra, &reps)
    };
    let src = sum(&f.source);
    let tgt = sum(&f.target);
    let blocks = (0..a.vertex_count())
        .map(|k| {
            let mut mat = Matrix::zeros(fld, tgt.dims()[k], src.dims()[k]);
            let mut c0 = 0;
            for (ai, &i) in f.source.iter().enumerate() {
                let cols = a.paths_between(k, i);
                let mut r0 = 0;
                for (bi, &j) in f.target.iter().enumerate() {
                    let rows = a.paths_between(k, j);
                    // transpose: entry (row z, col w) = coefficient of w in z·x
                    for (r, &z) in rows.iter().enumerate() {
                        let prod = a.mul(&a.basis_element(z), &f.entries[bi][ai]);
                        for (c, &w) in cols.iter().enumerate() {
                            mat[(r0 + r, c0 + c)] = prod[w].clone();
                        }
                    }
                    r0 += rows.len();
                }
                c0 += cols.len();
            }
            mat
        })
        .collect();
    ModMap {
        source: src,
        target: tgt,
        blocks,
    }
}

/// `τ M = ker(ν P1 → ν P0)` for a minimal presentation of `M`.
pub fn tau(m: &Rep) -> Rep {
    if m.is_zero() {
        return m.clone();
    }
    let pres = minimal_presentation(m);
    let f = nakayama(m.algebra(), &pres.d1_entries());
    kernel(&f).0
}

pub fn is_tau_rigid(m: &Rep) -> bool {
    hom_dim(m, &tau(m)) == 0
}

/// Coordinates over `op` of an element of `a`, where `op` is the opposite
/// algebra of `a`.
pub fn opposite_element(a: &BoundQuiverAlgebra, op: &BoundQuiverAlgebra, x: &[crate::field::Scalar]) -> Element {
    let mut out = op.zero_element();
    for (k, c) in x.iter().enumerate() {
        if !c.is_zero() {
            let idx = op.basis_index(&a.basis()[k].reversed()).expect("reversed basis path");
            out[idx] = c.clone();
        }
    }
    out
}

/// The transpose `Tr M` over the opposite algebra: the cokernel of
/// `Hom(P0, A) → Hom(P1, A)` for a minimal presentation of `M`.
pub fn transpose(m: &Rep, op: &Arc<BoundQuiverAlgebra>) -> Rep {
    if m.is_zero() {
        return Rep::zero(op);
    }
    let a = m.algebra();
    let pres = minimal_presentation(m);
    let d1 = pres.d1_entries();
    let entries = (0..d1.source.len())
        .map(|i| {
            (0..d1.target.len())
                .map(|j| opposite_element(a, op, &d1.entries[j][i]))
                .collect()
        })
        .collect();
    let dual = ProjMap {
        source: d1.target.clone(),
        target: d1.source.clone(),
        entries,
    };
    cokernel(&dual.to_modmap(op)).0
}
