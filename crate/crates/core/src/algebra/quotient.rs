//! Structure-constant algebras and their quiver presentations; factor
//! algebras, vertex deletion and opposite algebras.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use serde::Serialize;

use super::{
    ideal_from_generators, loewy_length, Arrow, BoundQuiverAlgebra, Element, Ideal, Path, Quiver, Relation, Table,
};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{is_zero_vec, Coordinates, Matrix, Span};

/// Paths enumerated while presenting an algebra; a guard against quivers
/// whose path count explodes before the radical vanishes.
const MAX_PRESENTATION_PATHS: usize = 200_000;

/// A basic algebra given by structure constants, a complete set of
/// primitive orthogonal idempotents and a spanning set of its radical.
#[derive(Clone, Debug)]
pub struct ScAlgebra {
    pub name: String,
    pub field: Field,
    pub dim: usize,
    pub table: Table,
    pub vertex_labels: Vec<String>,
    pub idempotents: Vec<Element>,
    /// Spanning set of the radical; labelled elements become arrows with
    /// that label when they survive modulo the radical square.
    pub radical: Vec<(Element, Option<String>)>,
}

impl ScAlgebra {
    pub fn zero_element(&self) -> Element {
        vec![self.field.zero(); self.dim]
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Element {
        let mut out = self.zero_element();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in &self.table[i * self.dim + j] {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut x = self.zero_element();
        x[i] = self.field.one();
        x
    }

    pub fn is_associative(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                (0..self.dim).all(|k| {
                    let (x, y, z) = (self.basis_element(i), self.basis_element(j), self.basis_element(k));
                    self.mul(&self.mul(&x, &y), &z) == self.mul(&x, &self.mul(&y, &z))
                })
            })
        })
    }
}

fn sparse(v: Element) -> Vec<(usize, Scalar)> {
    v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

/// Presents a structure-constant algebra as a bound quiver algebra.
///
/// Arrows are chosen block by block as a basis of `rad / rad²`; the path
/// basis is the first-surviving family of paths in length-lexicographic
/// order; relations generate the kernel of `KQ → B` and are computed up to
/// the Loewy length.
pub fn present(sc: &ScAlgebra) -> Result<BoundQuiverAlgebra> {
    const OP: &str = "present";
    let f = sc.field;
    let n = sc.dim;
    if n == 0 {
        return Ok(BoundQuiverAlgebra::zero(sc.name.clone(), f));
    }
    let m = sc.vertex_labels.len();
    let rad = Span::from_vectors(f, n, sc.radical.iter().map(|(x, _)| x));
    let rad_basis = rad.rref_basis();
    let mut powers = vec![rad_basis.clone()];
    while !powers.last().expect("nonempty").is_empty() {
        let prev = powers.last().expect("nonempty");
        let mut next = Span::new(f, n);
        for x in prev {
            for y in &rad_basis {
                next.insert(&sc.mul(x, y));
            }
        }
        if next.dim() >= prev.len() {
            return Err(Error::internal(OP, "radical is not nilpotent"));
        }
        powers.push(next.rref_basis());
    }
    let loewy = powers.len();
    let rad_sq: &[Element] = powers.get(1).map_or(&[], |v| v.as_slice());

    let mut acc = Span::from_vectors(f, n, rad_sq);
    let mut chosen: Vec<(usize, usize, Element, Option<String>)> = Vec::new();
    let mut used: HashSet<String> = HashSet::new();
    for (x, label) in &sc.radical {
        for s in 0..m {
            for t in 0..m {
                let y = sc.mul(&sc.mul(&sc.idempotents[s], x), &sc.idempotents[t]);
                if is_zero_vec(&y) || !acc.insert(&y) {
                    continue;
                }
                let lab = label.clone().filter(|l| &y == x && !used.contains(l));
                if let Some(l) = &lab {
                    used.insert(l.clone());
                }
                chosen.push((s, t, y, lab));
            }
        }
    }
    if acc.dim() != rad.dim() {
        return Err(Error::internal(OP, "arrows do not span rad/rad²"));
    }
    let mut counter = 0;
    let mut arrows = Vec::new();
    let mut arrow_elems = Vec::new();
    for (s, t, y, lab) in chosen {
        let label = lab.unwrap_or_else(|| loop {
            counter += 1;
            let l = format!("a{counter}");
            if !used.contains(&l) {
                break l;
            }
        });
        arrows.push(Arrow {
            label,
            source: s,
            target: t,
        });
        arrow_elems.push(y);
    }
    let quiver = Quiver::new(sc.vertex_labels.clone(), arrows)?;

    // paths of length 0..=loewy with their images
    let mut levels: Vec<Vec<(Path, Element)>> =
        vec![(0..m).map(|v| (Path::lazy(v), sc.idempotents[v].clone())).collect()];
    let mut total = m;
    for _ in 1..=loewy {
        let mut next = Vec::new();
        for (p, img) in levels.last().expect("nonempty") {
            for (a, arr) in quiver.arrows().iter().enumerate() {
                if arr.source == p.target {
                    let q = p.compose(&Path::arrow(&quiver, a)).expect("composable");
                    next.push((q, sc.mul(img, &arrow_elems[a])));
                }
            }
        }
        next.sort_by_key(|x| x.0.order_key());
        total += next.len();
        if total > MAX_PRESENTATION_PATHS {
            return Err(Error::internal(OP, "too many paths"));
        }
        levels.push(next);
    }

    let mut span = Span::new(f, n);
    let mut basis = Vec::new();
    let mut images = Vec::new();
    for level in &levels {
        for (p, img) in level {
            if span.insert(img) {
                basis.push(p.clone());
                images.push(img.clone());
            }
        }
    }
    if basis.len() != n {
        return Err(Error::internal(OP, "paths do not span the algebra"));
    }
    let coords = Coordinates::new(f, n, &images).expect("independent by construction");
    let mut table: Table = vec![Vec::new(); n * n];
    for i in 0..n {
        for j in 0..n {
            if basis[i].target == basis[j].source {
                let prod = sc.mul(&images[i], &images[j]);
                table[i * n + j] = sparse(coords.of(&prod).expect("closed under products"));
            }
        }
    }

    let relations = kernel_generators(sc, &quiver, &levels, loewy);
    Ok(BoundQuiverAlgebra::from_parts(
        sc.name.clone(),
        f,
        quiver,
        basis,
        table,
        relations,
    ))
}

/// Generators of `ker(KQ → B)` among paths of length `2..=loewy`,
/// chosen degree by degree modulo the ideal generated so far.
fn kernel_generators(sc: &ScAlgebra, quiver: &Quiver, levels: &[Vec<(Path, Element)>], loewy: usize) -> Vec<Relation> {
    let f = sc.field;
    let paths: Vec<&(Path, Element)> = levels.iter().skip(2).flatten().collect();
    let index: HashMap<(usize, Vec<usize>), usize> = paths
        .iter()
        .enumerate()
        .map(|(i, (p, _))| ((p.source, p.arrows.clone()), i))
        .collect();
    let np = paths.len();
    let mut chosen: Vec<BTreeMap<usize, Scalar>> = Vec::new();
    let mut blocks: Vec<(usize, usize)> = paths.iter().map(|(p, _)| (p.source, p.target)).collect();
    blocks.sort();
    blocks.dedup();

    let multiply = |g: &BTreeMap<usize, Scalar>, a: usize, left: bool, d: usize| -> Option<BTreeMap<usize, Scalar>> {
        let arr = Path::arrow(quiver, a);
        let mut out = BTreeMap::new();
        for (&k, c) in g {
            let p = &paths[k].0;
            let q = if left { arr.compose(p) } else { p.compose(&arr) }?;
            if q.len() > d {
                return None;
            }
            out.insert(index[&(q.source, q.arrows.clone())], c.clone());
        }
        Some(out)
    };
    let dense = |g: &BTreeMap<usize, Scalar>| {
        let mut v = vec![f.zero(); np];
        for (&k, c) in g {
            v[k] = c.clone();
        }
        v
    };

    for d in 2..=loewy {
        let mut generated = Span::new(f, np);
        let mut queue: Vec<BTreeMap<usize, Scalar>> = chosen.clone();
        for g in &queue {
            generated.insert(&dense(g));
        }
        while let Some(g) = queue.pop() {
            for a in 0..quiver.arrows().len() {
                for left in [true, false] {
                    if let Some(h) = multiply(&g, a, left, d) {
                        if !h.is_empty() && generated.insert(&dense(&h)) {
                            queue.push(h);
                        }
                    }
                }
            }
        }
        for &(s, t) in &blocks {
            let cols: Vec<usize> = (0..np)
                .filter(|&k| {
                    let p = &paths[k].0;
                    p.source == s && p.target == t && p.len() <= d
                })
                .collect();
            if cols.is_empty() {
                continue;
            }
            let imgs: Vec<Element> = cols.iter().map(|&k| paths[k].1.clone()).collect();
            let mat = Matrix::from_columns(f, sc.dim, &imgs);
            for v in mat.nullspace() {
                let mut g = BTreeMap::new();
                for (i, c) in v.into_iter().enumerate() {
                    if !c.is_zero() {
                        g.insert(cols[i], c);
                    }
                }
                if generated.insert(&dense(&g)) {
                    let lead = g.values().last().expect("nonzero").inv().expect("nonzero");
                    for c in g.values_mut() {
                        *c *= &lead;
                    }
                    chosen.push(g);
                }
            }
        }
    }
    chosen
        .into_iter()
        .map(|g| Relation {
            terms: g.into_iter().map(|(k, c)| (c, paths[k].0.clone())).collect(),
        })
        .collect()
}

/// Structural data compared when two presentations should agree:
/// vertex count, arrow multiplicities, dimension of the relation space
/// among paths of length `2..=d` for each `d`, and total dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationInvariants {
    pub vertices: usize,
    pub dimension: usize,
    pub arrow_matrix: Vec<Vec<usize>>,
    pub relation_dims: Vec<usize>,
}

impl PresentationInvariants {
    pub fn of(a: &BoundQuiverAlgebra) -> Result<PresentationInvariants> {
        let m = a.vertex_count();
        let mut arrow_matrix = vec![vec![0; m]; m];
        for arr in a.quiver().arrows() {
            arrow_matrix[arr.source][arr.target] += 1;
        }
        let mut relation_dims = Vec::new();
        if !a.is_zero() {
            let ll = loewy_length(a)?;
            let q = a.quiver();
            let mut level: Vec<Path> = (0..m).map(Path::lazy).collect();
            let mut images: Vec<Element> = Vec::new();
            let mut count = 0usize;
            for d in 1..=ll {
                let mut next = Vec::new();
                for p in &level {
                    for (k, arr) in q.arrows().iter().enumerate() {
                        if arr.source == p.target {
                            next.push(p.compose(&Path::arrow(q, k)).expect("composable"));
                        }
                    }
                }
                level = next;
                if d >= 2 {
                    for p in &level {
                        images.push(a.path_element(p));
                    }
                    count += level.len();
                    let rank = if images.is_empty() {
                        0
                    } else {
                        Matrix::from_columns(a.field(), a.dim(), &images).rank()
                    };
                    relation_dims.push(count - rank);
                }
            }
        }
        Ok(PresentationInvariants {
            vertices: m,
            dimension: a.dim(),
            arrow_matrix,
            relation_dims,
        })
    }
}

fn quotient_sc(a: &BoundQuiverAlgebra, ideal: &Ideal, surviving: &[usize], name: String) -> ScAlgebra {
    let f = a.field();
    let n = a.dim();
    let mut span = Span::from_vectors(f, n, ideal.basis());
    let kept: Vec<usize> = (0..n).filter(|&i| span.insert(&a.basis_element(i))).collect();
    let k = kept.len();
    let mut family: Vec<Element> = kept.iter().map(|&i| a.basis_element(i)).collect();
    family.extend(ideal.basis().iter().cloned());
    let coords = Coordinates::new(f, n, &family).expect("complement plus ideal basis");
    let project = |x: &[Scalar]| -> Element {
        let mut c = coords.of(x).expect("full rank");
        c.truncate(k);
        c
    };
    let mut table: Table = vec![Vec::new(); k * k];
    for (i, &ki) in kept.iter().enumerate() {
        for (j, &kj) in kept.iter().enumerate() {
            let prod = a.mul(&a.basis_element(ki), &a.basis_element(kj));
            table[i * k + j] = sparse(project(&prod));
        }
    }
    let idempotents = surviving.iter().map(|&v| project(&a.idempotent(v))).collect();
    let radical = (0..n)
        .filter(|&i| !a.basis()[i].is_lazy())
        .map(|i| {
            let p = &a.basis()[i];
            let label = (p.len() == 1).then(|| a.quiver().arrows()[p.arrows[0]].label.clone());
            (project(&a.basis_element(i)), label)
        })
        .collect();
    ScAlgebra {
        name,
        field: f,
        dim: k,
        table,
        vertex_labels: surviving.iter().map(|&v| a.quiver().vertices()[v].clone()).collect(),
        idempotents,
        radical,
    }
}

/// `A / I` for an ideal inside the radical.
pub fn factor_algebra(a: &BoundQuiverAlgebra, ideal: &Ideal) -> Result<BoundQuiverAlgebra> {
    if ideal.is_zero() {
        return Ok(a.clone());
    }
    if (0..a.vertex_count()).any(|v| ideal.contains(a, &a.idempotent(v))) {
        return Err(Error::SupportQuotient);
    }
    let all: Vec<usize> = (0..a.vertex_count()).collect();
    let sc = quotient_sc(a, ideal, &all, format!("{}/I", a.name()));
    present(&sc)
}

/// `A / ⟨Σ_{i∈e} e_i⟩`.
pub fn delete_vertices(a: &BoundQuiverAlgebra, deleted: &BTreeSet<usize>) -> Result<BoundQuiverAlgebra> {
    if deleted.is_empty() {
        return Ok(a.clone());
    }
    if let Some(&v) = deleted.iter().find(|&&v| v >= a.vertex_count()) {
        return Err(Error::invalid(
            "delete_vertices",
            format!("vertex index {v} out of range"),
        ));
    }
    let labels: Vec<&str> = deleted.iter().map(|&v| a.quiver().vertices()[v].as_str()).collect();
    let name = format!("{}/<e{}>", a.name(), labels.join(",e"));
    if deleted.len() == a.vertex_count() {
        return Ok(BoundQuiverAlgebra::zero(name, a.field()));
    }
    let gens: Vec<Element> = deleted.iter().map(|&v| a.idempotent(v)).collect();
    let ideal = ideal_from_generators(a, &gens);
    let surviving: Vec<usize> = (0..a.vertex_count()).filter(|v| !deleted.contains(v)).collect();
    present(&quotient_sc(a, &ideal, &surviving, name))
}

/// The opposite algebra on the opposite quiver; basis paths are reversed.
pub fn opposite(a: &BoundQuiverAlgebra) -> BoundQuiverAlgebra {
    let quiver = a.quiver().opposite();
    let mut order: Vec<(Path, usize)> = a.basis().iter().enumerate().map(|(i, p)| (p.reversed(), i)).collect();
    order.sort_by_key(|x| x.0.order_key());
    let n = a.dim();
    let mut to_op = vec![0; n];
    for (k, (_, i)) in order.iter().enumerate() {
        to_op[*i] = k;
    }
    let mut table: Table = vec![Vec::new(); n * n];
    for (k, (_, i)) in order.iter().enumerate() {
        for (l, (_, j)) in order.iter().enumerate() {
            let mut terms: Vec<(usize, Scalar)> =
                a.product(*j, *i).iter().map(|(t, c)| (to_op[*t], c.clone())).collect();
            terms.sort_by_key(|(t, _)| *t);
            table[k * n + l] = terms;
        }
    }
    let relations = a
        .relations()
        .iter()
        .map(|r| Relation {
            terms: r.terms.iter().map(|(c, p)| (c.clone(), p.reversed())).collect(),
        })
        .collect();
    let name = match a.name().strip_suffix("^op") {
        Some(base) => base.to_string(),
        None => format!("{}^op", a.name()),
    };
    BoundQuiverAlgebra::from_parts(
        name,
        a.field(),
        quiver,
        order.into_iter().map(|(p, _)| p).collect(),
        table,
        relations,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::test_algebras::*;
    use crate::algebra::{parse_algebra, radical};

    fn beta_ideal(a: &BoundQuiverAlgebra) -> Ideal {
        ideal_from_generators(a, &[a.path_element(&Path::arrow(a.quiver(), 1))])
    }

    #[test]
    fn example_mod_beta_is_a2() {
        let a = ex_a();
        let c = factor_algebra(&a, &beta_ideal(&a)).unwrap();
        assert_eq!(c.dim(), 3);
        assert_eq!(c.quiver().arrows().len(), 1);
        assert_eq!(c.quiver().arrows()[0].label, "α");
        assert!(c.relations().is_empty());
        c.check_invariants().unwrap();
    }

    #[test]
    fn factor_by_zero_is_identity() {
        let a = ex_a();
        assert_eq!(factor_algebra(&a, &Ideal::zero(&a)).unwrap(), a);
    }

    #[test]
    fn factor_by_radical_is_semisimple() {
        let a = ex_a();
        let s = factor_algebra(&a, &radical(&a)).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.quiver().arrows().is_empty());
    }

    #[test]
    fn factor_rejects_idempotents() {
        let a = ex_a();
        let i = ideal_from_generators(&a, &[a.idempotent(1)]);
        assert_eq!(factor_algebra(&a, &i), Err(Error::SupportQuotient));
    }

    #[test]
    fn vertex_deletion() {
        let a = ex_a();
        let d1 = delete_vertices(&a, &BTreeSet::from([0])).unwrap();
        assert_eq!(d1.dim(), 2);
        assert_eq!(d1.quiver().vertices(), ["2"]);
        assert_eq!(d1.relations().len(), 1);
        let d2 = delete_vertices(&a, &BTreeSet::from([1])).unwrap();
        assert_eq!(d2.dim(), 1);
        assert_eq!(delete_vertices(&a, &BTreeSet::new()).unwrap(), a);
        let z = delete_vertices(&a, &BTreeSet::from([0, 1])).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn opposite_is_an_involution() {
        for a in [ex_a(), a2(), k2()] {
            let op = opposite(&a);
            op.check_invariants().unwrap();
            assert_eq!(opposite(&op), a);
        }
    }

    #[test]
    fn dimension_drops_by_ideal_dimension() {
        let text = "algebra a3\nvertices 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\nend\n";
        let a = parse_algebra(text).unwrap();
        let ab = a.path_element(&Path::from_arrows(a.quiver(), vec![0, 1]).unwrap());
        let i = ideal_from_generators(&a, &[ab]);
        let c = factor_algebra(&a, &i).unwrap();
        assert_eq!(c.dim(), a.dim() - i.dim());
        assert_eq!(c.relations().len(), 1);
        c.check_invariants().unwrap();
    }
}
