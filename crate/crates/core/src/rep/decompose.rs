//! Krull–Schmidt decomposition.
//!
//! `M` is indecomposable exactly when `End(M)` is local. The radical of
//! `End(M)` is read off from the trace form, which is exact when the
//! characteristic exceeds `dim End(M)`. Otherwise an endomorphism `x` with an
//! eigenvalue `λ` such that `x - λ` is neither nilpotent nor invertible
//! splits `M` by Fitting's lemma: `M = ker (x-λ)^N ⊕ im (x-λ)^N`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::{Coordinates, Matrix, Span};
use crate::poly::splitting_root;
use crate::rng::generator;

use super::exact::{image, kernel};
use super::{hom_basis, is_isomorphic, ModMap, Rep};

const SPLIT_ATTEMPTS: usize = 64;

#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Rep,
    pub inclusion: ModMap,
    pub projection: ModMap,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
    /// Indices of summands grouped by isomorphism class, in order of first
    /// appearance.
    pub classes: Vec<Vec<usize>>,
}

impl Decomposition {
    pub fn is_basic(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }

    /// One representative per isomorphism class.
    pub fn representatives(&self) -> Vec<&Rep> {
        self.classes.iter().map(|c| &self.summands[c[0]].module).collect()
    }
}

fn check_field(m: &Rep, dim_end: usize) -> Result<()> {
    if let Some(p) = m.field().characteristic() {
        if p <= dim_end as u64 {
            return Err(Error::FieldTooSmall { p, dim: dim_end });
        }
    }
    Ok(())
}

/// `dim End(M) / rad End(M)` from the trace form of the regular
/// representation.
fn semisimple_rank(m: &Rep, basis: &[ModMap]) -> usize {
    let f = m.field();
    let n = basis.len();
    let flat: Vec<_> = basis.iter().map(ModMap::flatten).collect();
    let coords = Coordinates::new(f, flat[0].len(), &flat).expect("hom basis is independent");
    // left[i] is the matrix of y ↦ b_i ∘ y
    let left: Vec<Matrix> = basis
        .iter()
        .map(|x| {
            let cols: Vec<_> = basis
                .iter()
                .map(|y| coords.of(&y.then(x).flatten()).expect("closed"))
                .collect();
            Matrix::from_columns(f, n, &cols)
        })
        .collect();
    let rows: Vec<Vec<Scalar>> = (0..n)
        .map(|i| (0..n).map(|j| left[i].mul(&left[j]).trace()).collect())
        .collect();
    Matrix::from_rows(f, n, n, rows).rank()
}

pub fn is_indecomposable(m: &Rep) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    let basis = hom_basis(m, m);
    check_field(m, basis.len())?;
    Ok(semisimple_rank(m, &basis) == 1)
}

/// Minimal polynomial of an endomorphism, lowest degree first and monic.
fn minimal_polynomial(x: &ModMap) -> Vec<Scalar> {
    let f = x.source.field();
    let id = ModMap::identity(&x.source);
    let len = id.flatten().len();
    let mut span = Span::new(f, len);
    let mut power = id;
    loop {
        let v = power.flatten();
        if let Some(c) = span.coordinates(&v) {
            let mut poly: Vec<Scalar> = c.iter().map(|x| -x).collect();
            poly.push(f.one());
            return poly;
        }
        span.insert(&v);
        power = power.then(x);
    }
}

fn power(x: &ModMap, n: usize) -> ModMap {
    let mut acc = ModMap::identity(&x.source);
    for _ in 0..n {
        acc = acc.then(x);
    }
    acc
}

/// Splits a decomposable module into two nonzero summands with inclusions.
fn split_once(m: &Rep, basis: &[ModMap], salt: u64) -> Result<((Rep, ModMap), (Rep, ModMap))> {
    let f = m.field();
    let mut rng = generator(salt);
    let id = ModMap::identity(m);
    for attempt in 0..basis.len() + SPLIT_ATTEMPTS {
        let x = if attempt < basis.len() {
            basis[attempt].clone()
        } else {
            basis
                .iter()
                .fold(ModMap::zero(m, m), |acc, b| acc.add(&b.scale(&f.random(&mut rng))))
        };
        let mu = minimal_polynomial(&x);
        let Some(lambda) = splitting_root(&mu, &mut rng) else {
            continue;
        };
        let phi = power(&x.add(&id.scale(&-lambda)), m.dim());
        let k = kernel(&phi);
        let i = image(&phi);
        if k.0.is_zero() || i.0.is_zero() {
            return Err(Error::internal("decompose", "Fitting decomposition is trivial"));
        }
        return Ok((k, i));
    }
    Err(Error::NonSplit { op: "decompose" })
}

fn split(m: &Rep, salt: u64, out: &mut Vec<(Rep, ModMap)>, incl: ModMap) -> Result<()> {
    let basis = hom_basis(m, m);
    check_field(m, basis.len())?;
    if semisimple_rank(m, &basis) == 1 {
        out.push((m.clone(), incl));
        return Ok(());
    }
    let ((k, ik), (i, ii)) = split_once(m, &basis, salt)?;
    split(&k, salt.wrapping_mul(31).wrapping_add(1), out, ik.then(&incl))?;
    split(&i, salt.wrapping_mul(31).wrapping_add(2), out, ii.then(&incl))
}

/// Decomposes `M` into indecomposables, with inclusions and projections
/// satisfying `Σ ι_k π_k = id`.
pub fn decompose(m: &Rep) -> Result<Decomposition> {
    let mut parts = Vec::new();
    if !m.is_zero() {
        split(m, 1, &mut parts, ModMap::identity(m))?;
    }
    let f = m.field();
    // projections from the inverse of [ι_1 | ι_2 | ...] at each vertex
    let inverses: Vec<Matrix> = (0..m.dims().len())
        .map(|v| {
            let cols: Vec<_> = parts.iter().flat_map(|(_, i)| i.blocks[v].columns()).collect();
            Matrix::from_columns(f, m.dims()[v], &cols)
                .inverse()
                .expect("summands span the module")
        })
        .collect();
    let mut row0 = vec![0; m.dims().len()];
    let mut summands = Vec::new();
    for (module, inclusion) in parts {
        let blocks = (0..m.dims().len())
            .map(|v| {
                let d = module.dims()[v];
                let b = inverses[v].block(row0[v], 0, d, m.dims()[v]);
                row0[v] += d;
                b
            })
            .collect();
        let projection = ModMap {
            source: m.clone(),
            target: module.clone(),
            blocks,
        };
        summands.push(Summand {
            module,
            inclusion,
            projection,
        });
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for k in 0..summands.len() {
        let mut placed = false;
        for class in &mut classes {
            if is_isomorphic(&summands[class[0]].module, &summands[k].module)? {
                class.push(k);
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(vec![k]);
        }
    }
    Ok(Decomposition { summands, classes })
}

/// A random element of `Hom(M, N)`; used by the isomorphism search.
pub(crate) fn random_combination<R: Rng>(basis: &[ModMap], rng: &mut R) -> Option<ModMap> {
    let first = basis.first()?;
    let f = first.source.field();
    Some(basis.iter().fold(ModMap::zero(&first.source, &first.target), |acc, b| {
        acc.add(&b.scale(&f.random(rng)))
    }))
}
