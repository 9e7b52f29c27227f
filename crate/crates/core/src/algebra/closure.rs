//! Degree-by-degree computation of a path basis for `KQ/I`.
//!
//! Relations are homogeneous in path length, so `I` is graded and
//! `I_d = span{ p·r : |p| + |r| = d } + I_{d-1}·KQ_1`. Candidates in degree
//! `d` are the survivors of degree `d-1` extended by one arrow; the image of
//! `I_d` among the candidates is row reduced with pivots on the latest
//! candidates, so the earliest candidates survive.

use std::collections::{BTreeMap, HashMap};

use super::{Path, Quiver, Relation, Table};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Span;

pub const DEFAULT_MAX_LEN: usize = 32;

pub struct Closure {
    pub basis: Vec<Path>,
    pub table: Table,
}

type Sparse = Vec<(usize, Scalar)>;

struct Layer {
    survivors: Vec<Path>,
    /// For each survivor of the previous layer and each arrow, the
    /// normal form of the extended path as survivor coordinates.
    extend: HashMap<(usize, usize), Sparse>,
}

fn validate(quiver: &Quiver, relations: &[Relation]) -> Result<()> {
    for r in relations {
        let Some((_, first)) = r.terms.first() else {
            return Err(Error::invalid("parse_algebra", "empty relation"));
        };
        for (_, p) in &r.terms {
            if p.len() < 2 {
                return Err(Error::invalid(
                    "parse_algebra",
                    "relation must lie in the square of the arrow ideal",
                ));
            }
            if p.source != first.source || p.target != first.target {
                return Err(Error::invalid("parse_algebra", "relation summands are not parallel"));
            }
            if p.len() != first.len() {
                return Err(Error::invalid(
                    "parse_algebra",
                    "relation must be homogeneous in path length",
                ));
            }
            if Path::from_arrows(quiver, p.arrows.clone()).as_ref() != Some(p) {
                return Err(Error::invalid("parse_algebra", "relation term is not a path"));
            }
        }
    }
    Ok(())
}

fn add_into(acc: &mut BTreeMap<usize, Scalar>, k: usize, c: &Scalar) {
    let e = acc.entry(k).or_insert_with(|| c.field().zero());
    *e += c;
    if e.is_zero() {
        acc.remove(&k);
    }
}

/// Computes the normal-form basis and multiplication table of `KQ/I`.
pub fn basis_closure(quiver: &Quiver, relations: &[Relation], field: Field, max_len: usize) -> Result<Closure> {
    validate(quiver, relations)?;
    let mut by_degree: BTreeMap<usize, Vec<&Relation>> = BTreeMap::new();
    for r in relations {
        by_degree.entry(r.degree()).or_default().push(r);
    }

    let lazies: Vec<Path> = (0..quiver.vertex_count()).map(Path::lazy).collect();
    let mut layers = vec![Layer {
        survivors: lazies,
        extend: HashMap::new(),
    }];
    // span of the left ideal generated by relations, degree by degree, as
    // combinations of honest paths
    let mut left_gens: Vec<BTreeMap<Vec<usize>, Scalar>> = Vec::new();
    let mut finished = false;

    for d in 1..=max_len {
        let prev = &layers[d - 1];
        let mut cands: Vec<(usize, usize, Path)> = Vec::new();
        for (s, sp) in prev.survivors.iter().enumerate() {
            for (a, arr) in quiver.arrows().iter().enumerate() {
                if arr.source == sp.target {
                    let p = sp.compose(&Path::arrow(quiver, a)).expect("composable");
                    cands.push((s, a, p));
                }
            }
        }
        cands.sort_by_key(|x| x.2.order_key());
        let cand_index: HashMap<(usize, usize), usize> =
            cands.iter().enumerate().map(|(i, (s, a, _))| ((*s, *a), i)).collect();
        let nc = cands.len();

        // left ideal generators in degree d
        let mut gens: Vec<BTreeMap<Vec<usize>, Scalar>> = Vec::new();
        for y in &left_gens {
            for (a, arr) in quiver.arrows().iter().enumerate() {
                let mut z = BTreeMap::new();
                for (w, c) in y {
                    let src = quiver.arrows()[w[0]].source;
                    if arr.target == src {
                        let mut aw = vec![a];
                        aw.extend_from_slice(w);
                        z.insert(aw, c.clone());
                    }
                }
                if !z.is_empty() {
                    gens.push(z);
                }
            }
        }
        for r in by_degree.get(&d).into_iter().flatten() {
            let mut z = BTreeMap::new();
            for (c, p) in &r.terms {
                let e = z.entry(p.arrows.clone()).or_insert_with(|| field.zero());
                *e += c;
            }
            z.retain(|_, c: &mut Scalar| !c.is_zero());
            if !z.is_empty() {
                gens.push(z);
            }
        }
        // reduce the generators to a basis in the free path space
        let mut keys: Vec<Vec<usize>> = gens.iter().flat_map(|g| g.keys().cloned()).collect();
        keys.sort();
        keys.dedup();
        let key_index: HashMap<&Vec<usize>, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let mut free_span = Span::new(field, keys.len());
        let mut basis_gens = Vec::new();
        for g in gens {
            let mut v = vec![field.zero(); keys.len()];
            for (k, c) in &g {
                v[key_index[k]] = c.clone();
            }
            if free_span.insert(&v) {
                basis_gens.push(g);
            }
        }

        // image of the ideal among candidates, reversed coordinates
        let mut ideal_span = Span::new(field, nc);
        for g in &basis_gens {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (w, c) in g {
                let prefix = Path::from_arrows(quiver, w[..d - 1].to_vec())
                    .unwrap_or_else(|| Path::lazy(quiver.arrows()[w[0]].source));
                let last = w[d - 1];
                for (s, cs) in normal_form(&layers, &prefix, field) {
                    if let Some(&ci) = cand_index.get(&(s, last)) {
                        add_into(&mut acc, nc - 1 - ci, &(c * &cs));
                    }
                }
            }
            let mut v = vec![field.zero(); nc];
            for (k, c) in acc {
                v[k] = c;
            }
            ideal_span.insert(&v);
        }
        let rows = ideal_span.rref_basis();
        let mut pivot_row: HashMap<usize, usize> = HashMap::new();
        for (i, row) in rows.iter().enumerate() {
            let p = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
            pivot_row.insert(nc - 1 - p, i);
        }
        let survivor_cands: Vec<usize> = (0..nc).filter(|c| !pivot_row.contains_key(c)).collect();
        let surv_pos: HashMap<usize, usize> = survivor_cands.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut extend = HashMap::new();
        for (ci, (s, a, _)) in cands.iter().enumerate() {
            let nf: Sparse = if let Some(&sp) = surv_pos.get(&ci) {
                vec![(sp, field.one())]
            } else {
                let row = &rows[pivot_row[&ci]];
                survivor_cands
                    .iter()
                    .enumerate()
                    .filter_map(|(i, &sc)| {
                        let x = &row[nc - 1 - sc];
                        (!x.is_zero()).then(|| (i, -x))
                    })
                    .collect()
            };
            extend.insert((*s, *a), nf);
        }
        let survivors: Vec<Path> = survivor_cands.iter().map(|&c| cands[c].2.clone()).collect();
        let empty = survivors.is_empty();
        layers.push(Layer { survivors, extend });
        left_gens = basis_gens;
        if empty {
            finished = true;
            break;
        }
    }
    if !finished {
        return Err(Error::NotFiniteDimensional { max_len });
    }

    let mut offsets = Vec::new();
    let mut basis = Vec::new();
    for layer in &layers {
        offsets.push(basis.len());
        basis.extend(layer.survivors.iter().cloned());
    }
    let n = basis.len();
    let mut position: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
    for (i, p) in basis.iter().enumerate() {
        position.insert((p.source, p.arrows.clone()), i);
    }
    let mut table: Table = vec![Vec::new(); n * n];
    for (i, p) in basis.iter().enumerate() {
        let dp = p.len();
        let local = i - offsets[dp];
        for (j, q) in basis.iter().enumerate() {
            if p.target != q.source {
                continue;
            }
            let mut coords: Sparse = vec![(local, field.one())];
            let mut deg = dp;
            for &a in &q.arrows {
                coords = extend_once(&layers, deg, &coords, a);
                deg += 1;
                if coords.is_empty() {
                    break;
                }
            }
            if deg < layers.len() {
                table[i * n + j] = coords.into_iter().map(|(k, c)| (offsets[deg] + k, c)).collect();
            }
        }
    }
    Ok(Closure { basis, table })
}

fn extend_once(layers: &[Layer], deg: usize, coords: &Sparse, a: usize) -> Sparse {
    if deg + 1 >= layers.len() {
        return Vec::new();
    }
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (s, c) in coords {
        if let Some(nf) = layers[deg + 1].extend.get(&(*s, a)) {
            for (k, x) in nf {
                add_into(&mut acc, *k, &(c * x));
            }
        }
    }
    acc.into_iter().collect()
}

/// Survivor coordinates of an honest path in its own degree.
fn normal_form(layers: &[Layer], path: &Path, field: Field) -> Sparse {
    let mut coords: Sparse = vec![(path.source, field.one())];
    for (deg, &a) in path.arrows.iter().enumerate() {
        coords = extend_once(layers, deg, &coords, a);
        if coords.is_empty() {
            break;
        }
    }
    coords
}
