//! Reference computations that avoid the Nakayama functor.

use std::sync::Arc;

use taubound::algebra::BoundQuiverAlgebra;
use taubound::matrix::Matrix;
use taubound::rep::{minimal_presentation, Rep};
use taubound::Scalar;

/// `Hom(N, τM) = 0` iff `Hom(P0, N) → Hom(P1, N)` is onto, for a minimal
/// presentation `P1 → P0 → M`.
pub fn hom_into_tau_vanishes(m: &Rep, n: &Rep) -> bool {
    if m.is_zero() || n.is_zero() {
        return true;
    }
    let pres = minimal_presentation(m);
    let d1 = pres.d1_entries();
    let d = n.dims();
    let rows: usize = d1.source.iter().map(|&i| d[i]).sum();
    let cols: usize = d1.target.iter().map(|&j| d[j]).sum();
    let mut big = Matrix::zeros(n.field(), rows, cols);
    let mut r0 = 0;
    for (a, &i) in d1.source.iter().enumerate() {
        let mut c0 = 0;
        for (b, &j) in d1.target.iter().enumerate() {
            let act = n.element_action(&d1.entries[b][a]);
            big.set_block(r0, c0, &act.block(n.offset(i), n.offset(j), d[i], d[j]));
            c0 += d[j];
        }
        r0 += d[i];
    }
    big.rank() == rows
}

pub fn tau_rigid(m: &Rep) -> bool {
    hom_into_tau_vanishes(m, m)
}

/// Pairs `(M, P)` with `M` a sum of distinct members of `indecomposables`,
/// `Hom(P, M) = 0`, `M` τ-rigid and `|M| + |P| = n`.
pub fn count_support_tau_tilting(a: &Arc<BoundQuiverAlgebra>, indecomposables: &[Rep]) -> usize {
    let n = a.vertex_count();
    let k = indecomposables.len();
    let mut count = 0;
    for support in 0u32..(1 << n) {
        for subset in 0u32..(1 << k) {
            if support.count_ones() + subset.count_ones() != n as u32 {
                continue;
            }
            let chosen: Vec<Rep> = (0..k)
                .filter(|&i| subset >> i & 1 == 1)
                .map(|i| indecomposables[i].clone())
                .collect();
            let m = Rep::direct_sum_all(a, &chosen);
            let hom_p_m_zero = (0..n).all(|v| support >> v & 1 == 0 || m.dims()[v] == 0);
            if hom_p_m_zero && tau_rigid(&m) {
                count += 1;
            }
        }
    }
    count
}

fn scalar_matrix(a: &BoundQuiverAlgebra, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
    let f = a.field();
    let data: Vec<Vec<Scalar>> = (0..rows)
        .map(|r| (0..cols).map(|c| f.from_i64(entries[r * cols + c])).collect())
        .collect();
    Matrix::from_rows(f, rows, cols, data)
}

/// Interval modules of a linearly oriented `A_n` path algebra: `[i, j]`
/// with one-dimensional spaces on `i..=j` and identity maps.
pub fn intervals(a: &Arc<BoundQuiverAlgebra>) -> Vec<Rep> {
    let n = a.vertex_count();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            let dims: Vec<usize> = (0..n).map(|v| usize::from(i <= v && v <= j)).collect();
            let maps = a
                .quiver()
                .arrows()
                .iter()
                .map(|arr| {
                    let (s, t) = (dims[arr.source], dims[arr.target]);
                    scalar_matrix(a, t, s, &vec![1; s * t])
                })
                .collect();
            out.push(Rep::new(a.clone(), dims, maps).unwrap());
        }
    }
    out
}

/// The simples of a semisimple algebra.
pub fn simples_by_hand(a: &Arc<BoundQuiverAlgebra>) -> Vec<Rep> {
    let n = a.vertex_count();
    (0..n)
        .map(|i| Rep::new(a.clone(), (0..n).map(|v| usize::from(v == i)).collect(), vec![]).unwrap())
        .collect()
}

/// `Φ = -C^{-1} C^T` for the Cartan matrix `C` whose rows are the dimension
/// vectors of the projectives, over the integers. Requires `C`
/// unitriangular (an acyclic quiver with vertices in path order).
pub fn coxeter(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    // C upper unitriangular: solve C X = C^T by back substitution
    let ct: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| cartan[j][i]).collect()).collect();
    let mut x = vec![vec![0i64; n]; n];
    for i in (0..n).rev() {
        for j in 0..n {
            let s: i64 = (i + 1..n).map(|k| cartan[i][k] * x[k][j]).sum();
            x[i][j] = ct[i][j] - s;
        }
    }
    x.iter().map(|row| row.iter().map(|v| -v).collect()).collect()
}

pub fn row_times(v: &[i64], m: &[Vec<i64>]) -> Vec<i64> {
    (0..m[0].len())
        .map(|j| v.iter().zip(m).map(|(a, row)| a * row[j]).sum())
        .collect()
}
