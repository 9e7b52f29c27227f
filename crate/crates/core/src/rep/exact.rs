//! Kernels, images and cokernels of homomorphisms.

use crate::matrix::Matrix;

use super::{ModMap, Rep};

/// The submodule spanned by the columns of `bases[i]` at each vertex, with
/// its inclusion. The columns must be independent and stable under the
/// arrows.
pub(crate) fn submodule(m: &Rep, bases: Vec<Matrix>) -> (Rep, ModMap) {
    let q = m.algebra().quiver();
    let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, arr)| {
            let moved = m.map(k).mul(&bases[arr.source]);
            bases[arr.target].solve(&moved).expect("subspace is a submodule")
        })
        .collect();
    let sub = Rep::from_parts(m.algebra().clone(), dims, maps);
    let incl = ModMap {
        source: sub.clone(),
        target: m.clone(),
        blocks: bases,
    };
    (sub, incl)
}

/// The quotient by the common kernel of `rows[i]` (full row rank), with its
/// projection `m ↦ rows[i]·m`.
pub(crate) fn quotient(m: &Rep, rows: Vec<Matrix>) -> (Rep, ModMap) {
    let q = m.algebra().quiver();
    let dims: Vec<usize> = rows.iter().map(Matrix::rows).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, arr)| {
            // C_a Y_s = Y_t M_a
            let rhs = rows[arr.target].mul(m.map(k));
            rows[arr.source]
                .transpose()
                .solve(&rhs.transpose())
                .expect("kernel is a submodule")
                .transpose()
        })
        .collect();
    let quo = Rep::from_parts(m.algebra().clone(), dims, maps);
    let proj = ModMap {
        source: m.clone(),
        target: quo.clone(),
        blocks: rows,
    };
    (quo, proj)
}

pub fn kernel(f: &ModMap) -> (Rep, ModMap) {
    let field = f.source.field();
    let bases = f
        .blocks
        .iter()
        .zip(f.source.dims())
        .map(|(b, &d)| {
            let ns = if b.rows() == 0 {
                Matrix::identity(field, d).columns()
            } else {
                b.nullspace()
            };
            Matrix::from_columns(field, d, &ns)
        })
        .collect();
    submodule(&f.source, bases)
}

pub fn image(f: &ModMap) -> (Rep, ModMap) {
    let bases = f.blocks.iter().map(Matrix::column_space).collect();
    submodule(&f.target, bases)
}

pub fn cokernel(f: &ModMap) -> (Rep, ModMap) {
    let rows = f.blocks.iter().map(Matrix::left_nullspace).collect();
    quotient(&f.target, rows)
}
