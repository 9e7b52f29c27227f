//! Tops, projective covers, minimal presentations and homological
//! dimensions.

use std::sync::Arc;

use crate::algebra::{BoundQuiverAlgebra, Element};
use crate::matrix::{Matrix, Span, Vector};

use super::exact::kernel;
use super::{hom_basis, hom_dim, Bounded, ModMap, Rep};

/// For each vertex, vectors of `M e_i` whose classes form a basis of the top.
fn top_vectors(m: &Rep) -> Vec<Vec<Vector>> {
    let f = m.field();
    let q = m.algebra().quiver();
    (0..m.dims().len())
        .map(|i| {
            let d = m.dims()[i];
            let mut span = Span::new(f, d);
            for (k, arr) in q.arrows().iter().enumerate() {
                if arr.target == i {
                    for c in m.map(k).columns() {
                        span.insert(&c);
                    }
                }
            }
            let mut out = Vec::new();
            for e in Matrix::identity(f, d).columns() {
                if span.insert(&e) {
                    out.push(e);
                }
            }
            out
        })
        .collect()
}

pub fn top_dims(m: &Rep) -> Vec<usize> {
    top_vectors(m).iter().map(Vec::len).collect()
}

/// `⊕_b P(vertices[b])`.
pub(crate) fn projective_sum(algebra: &Arc<BoundQuiverAlgebra>, vertices: &[usize]) -> Rep {
    let ps: Vec<Rep> = vertices.iter().map(|&v| Rep::projective(algebra, v)).collect();
    Rep::direct_sum_all(algebra, &ps)
}

/// The map `⊕ P(i_b) → M` sending each `e_{i_b}` to `vectors[b]`.
fn map_from_projectives(m: &Rep, gens: &[(usize, Vector)]) -> ModMap {
    let a = m.algebra();
    let f = m.field();
    let vertices: Vec<usize> = gens.iter().map(|(v, _)| *v).collect();
    let p = projective_sum(a, &vertices);
    let blocks = (0..m.dims().len())
        .map(|k| {
            let mut cols = Vec::new();
            for (i, v) in gens {
                for path in a.paths_between(*i, k) {
                    cols.push(m.path_action(&a.basis()[path]).mul_vec(v));
                }
            }
            Matrix::from_columns(f, m.dims()[k], &cols)
        })
        .collect();
    ModMap {
        source: p,
        target: m.clone(),
        blocks,
    }
}

/// The projective cover, as the list of vertices of its summands and the
/// covering map.
pub fn projective_cover(m: &Rep) -> (Vec<usize>, ModMap) {
    let gens: Vec<(usize, Vector)> = top_vectors(m)
        .into_iter()
        .enumerate()
        .flat_map(|(i, vs)| vs.into_iter().map(move |v| (i, v)))
        .collect();
    let cover = map_from_projectives(m, &gens);
    (gens.into_iter().map(|(v, _)| v).collect(), cover)
}

/// A map `⊕_a P(i_a) → ⊕_b P(j_b)` with component `b, a` given by left
/// multiplication with `entries[b][a] ∈ e_{j_b} A e_{i_a}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjMap {
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub entries: Vec<Vec<Element>>,
}

impl ProjMap {
    pub(crate) fn from_modmap(algebra: &BoundQuiverAlgebra, source: &[usize], target: &[usize], f: &ModMap) -> ProjMap {
        let entries = (0..target.len())
            .map(|b| {
                (0..source.len())
                    .map(|a| {
                        let ia = source[a];
                        let col = source[..a]
                            .iter()
                            .map(|&s| algebra.paths_between(s, ia).len())
                            .sum::<usize>()
                            + algebra
                                .paths_between(ia, ia)
                                .iter()
                                .position(|&p| algebra.basis()[p].is_lazy())
                                .expect("lazy path");
                        let row0: usize = target[..b].iter().map(|&t| algebra.paths_between(t, ia).len()).sum();
                        let mut x = algebra.zero_element();
                        for (r, p) in algebra.paths_between(target[b], ia).into_iter().enumerate() {
                            x[p] = f.blocks[ia][(row0 + r, col)].clone();
                        }
                        x
                    })
                    .collect()
            })
            .collect();
        ProjMap {
            source: source.to_vec(),
            target: target.to_vec(),
            entries,
        }
    }

    pub fn to_modmap(&self, algebra: &Arc<BoundQuiverAlgebra>) -> ModMap {
        let a = algebra.as_ref();
        let f = a.field();
        let src = projective_sum(algebra, &self.source);
        let tgt = projective_sum(algebra, &self.target);
        let blocks = (0..a.vertex_count())
            .map(|k| {
                let mut mat = Matrix::zeros(f, tgt.dims()[k], src.dims()[k]);
                let mut c0 = 0;
                for (ai, &i) in self.source.iter().enumerate() {
                    let cols = a.paths_between(i, k);
                    let mut r0 = 0;
                    for (bi, &j) in self.target.iter().enumerate() {
                        let rows = a.paths_between(j, k);
                        for (c, &p) in cols.iter().enumerate() {
                            let prod = a.mul(&self.entries[bi][ai], &a.basis_element(p));
                            for (r, &q) in rows.iter().enumerate() {
                                mat[(r0 + r, c0 + c)] = prod[q].clone();
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
}

/// `P1 --d1--> P0 --d0--> M --> 0` with both maps minimal.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub p0: Vec<usize>,
    pub p1: Vec<usize>,
    pub d0: ModMap,
    pub d1: ModMap,
    pub syzygy: Rep,
    pub syzygy_inclusion: ModMap,
}

impl Presentation {
    pub fn d1_entries(&self) -> ProjMap {
        ProjMap::from_modmap(self.d0.target.algebra(), &self.p1, &self.p0, &self.d1)
    }
}

pub fn minimal_presentation(m: &Rep) -> Presentation {
    let (p0, d0) = projective_cover(m);
    let (syzygy, incl) = kernel(&d0);
    let (p1, cover) = projective_cover(&syzygy);
    let d1 = cover.then(&incl);
    Presentation {
        p0,
        p1,
        d0,
        d1,
        syzygy,
        syzygy_inclusion: incl,
    }
}

/// `dim Ext¹(M, N)` as `dim Hom(ΩM, N)` minus the maps that extend to the
/// projective cover.
pub fn ext1_dim(m: &Rep, n: &Rep) -> usize {
    let pres = minimal_presentation(m);
    let restricted: Vec<Vector> = hom_basis(&pres.d0.source, n)
        .iter()
        .map(|g| pres.syzygy_inclusion.then(g).flatten())
        .collect();
    let len = restricted.first().map_or(0, Vec::len);
    let rank = Span::from_vectors(m.field(), len, &restricted).dim();
    hom_dim(&pres.syzygy, n) - rank
}

/// Projective dimension, searched up to `cap` syzygies.
pub fn proj_dim(m: &Rep, cap: usize) -> Bounded {
    let mut cur = m.clone();
    for k in 0..=cap {
        let (_, cover) = projective_cover(&cur);
        let (next, _) = kernel(&cover);
        if next.is_zero() {
            return Bounded::Exact(k);
        }
        cur = next;
    }
    Bounded::AtLeast(cap + 1)
}

/// `max_i pd S(i)`.
pub fn global_dimension(algebra: &Arc<BoundQuiverAlgebra>, cap: usize) -> Bounded {
    let mut best = Bounded::Exact(0);
    for i in 0..algebra.vertex_count() {
        match (proj_dim(&Rep::simple(algebra, i), cap), best) {
            (Bounded::AtLeast(n), _) => return Bounded::AtLeast(n),
            (Bounded::Exact(n), Bounded::Exact(b)) if n > b => best = Bounded::Exact(n),
            _ => {}
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::super::test_reps::*;
    use super::*;

    #[test]
    fn covers_and_tops() {
        let a = ex_a();
        let s1 = Rep::simple(&a, 0);
        let (p0, d0) = projective_cover(&s1);
        assert_eq!(p0, [0]);
        assert!(d0.is_surjective() && d0.is_homomorphism());
        assert_eq!(top_dims(&Rep::projective(&a, 1)), [0, 1]);
        let pres = minimal_presentation(&s1);
        assert_eq!(pres.p1, [1]);
        assert!(pres.d1.is_homomorphism());
        let entries = pres.d1_entries();
        assert_eq!(entries.to_modmap(&a), pres.d1);
        let alpha = a.path_element(&crate::algebra::Path::arrow(a.quiver(), 0));
        assert_eq!(entries.entries[0][0], alpha);
    }

    #[test]
    fn dimensions() {
        let a = ex_a();
        assert_eq!(proj_dim(&Rep::projective(&a, 0), 5), Bounded::Exact(0));
        // S2 has a periodic resolution through P2
        assert_eq!(proj_dim(&Rep::simple(&a, 1), 5), Bounded::AtLeast(6));
        assert_eq!(global_dimension(&a2(), 5), Bounded::Exact(1));
        assert_eq!(global_dimension(&k2(), 5), Bounded::Exact(0));
    }

    #[test]
    fn ext_groups() {
        let a = a2();
        let (s1, s2) = (Rep::simple(&a, 0), Rep::simple(&a, 1));
        assert_eq!(ext1_dim(&s1, &s2), 1);
        assert_eq!(ext1_dim(&s2, &s1), 0);
        assert_eq!(ext1_dim(&Rep::projective(&a, 0), &s2), 0);
    }
}
