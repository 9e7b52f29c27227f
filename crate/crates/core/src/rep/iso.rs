//! Isomorphism testing.

use crate::error::Result;
use crate::rng::generator;

use super::decompose::random_combination;
use super::{decompose, hom_basis, hom_dim, is_indecomposable, top_dims, Rep};

const RANDOM_TRIALS: usize = 64;

/// For indecomposable `M ≅ N` the non-isomorphisms form a proper subspace
/// of `Hom(M, N)`, so some basis element is an isomorphism.
fn indecomposables_isomorphic(m: &Rep, n: &Rep) -> bool {
    m.dims() == n.dims() && hom_basis(m, n).iter().any(|f| f.is_isomorphism())
}

pub fn is_isomorphic(m: &Rep, n: &Rep) -> Result<bool> {
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    if top_dims(m) != top_dims(n) {
        return Ok(false);
    }
    let basis = hom_basis(m, n);
    if basis.is_empty() {
        return Ok(false);
    }
    if hom_dim(m, m) != basis.len() || hom_dim(n, n) != basis.len() {
        return Ok(false);
    }
    if basis.iter().any(|f| f.is_isomorphism()) {
        return Ok(true);
    }
    let mut rng = generator(0x150);
    for _ in 0..RANDOM_TRIALS {
        if random_combination(&basis, &mut rng).is_some_and(|f| f.is_isomorphism()) {
            return Ok(true);
        }
    }
    if is_indecomposable(m)? {
        return Ok(false);
    }
    // compare multisets of indecomposable summands
    let dm = decompose(m)?;
    let dn = decompose(n)?;
    if dm.summands.len() != dn.summands.len() {
        return Ok(false);
    }
    let mut used = vec![false; dn.summands.len()];
    for s in &dm.summands {
        let hit =
            (0..dn.summands.len()).find(|&k| !used[k] && indecomposables_isomorphic(&s.module, &dn.summands[k].module));
        match hit {
            Some(k) => used[k] = true,
            None => return Ok(false),
        }
    }
    Ok(true)
}
