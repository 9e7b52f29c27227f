//! Finite-dimensional right modules as quiver representations.
//!
//! A module `M` is the family of spaces `M e_i` together with one matrix per
//! arrow. For `a: i -> j` the matrix `M_a` has shape `dims[j] × dims[i]` and
//! sends `m` to `m·a`; a path `p·q` therefore acts as `M_q M_p`.

mod decompose;
mod exact;
mod hom;
mod iso;
mod parse;
mod resolution;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{BoundQuiverAlgebra, Element, Path};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{Matrix, Span};

pub use decompose::{decompose, is_indecomposable, Decomposition, Summand};
pub use exact::{cokernel, image, kernel};
pub use hom::{hom_basis, hom_dim, ModMap};
pub use iso::is_isomorphic;
pub use parse::{parse_module_expr, parse_modules, ModuleLibrary};
pub use resolution::{
    ext1_dim, global_dimension, minimal_presentation, proj_dim, projective_cover, top_dims, Presentation, ProjMap,
};

/// A value known exactly, or only bounded below because a search cap was hit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "kebab-case")]
pub enum Bounded {
    Exact(usize),
    AtLeast(usize),
}

impl fmt::Display for Bounded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bounded::Exact(n) => write!(f, "{n}"),
            Bounded::AtLeast(n) => write!(f, ">= {n}"),
        }
    }
}

#[derive(Clone)]
pub struct Rep {
    algebra: Arc<BoundQuiverAlgebra>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl PartialEq for Rep {
    fn eq(&self, other: &Rep) -> bool {
        *self.algebra == *other.algebra && self.dims == other.dims && self.maps == other.maps
    }
}

impl fmt::Debug for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Rep")
            .field("algebra", &self.algebra.name())
            .field("dims", &self.dims)
            .field("maps", &self.maps)
            .finish()
    }
}

impl Rep {
    /// Builds a module and checks matrix shapes and every relation.
    pub fn new(algebra: Arc<BoundQuiverAlgebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Rep> {
        const OP: &str = "Rep::new";
        let q = algebra.quiver();
        if dims.len() != q.vertex_count() {
            return Err(Error::invalid(
                OP,
                format!("expected {} dimensions, got {}", q.vertex_count(), dims.len()),
            ));
        }
        if maps.len() != q.arrows().len() {
            return Err(Error::invalid(
                OP,
                format!("expected {} matrices, got {}", q.arrows().len(), maps.len()),
            ));
        }
        for (arr, m) in q.arrows().iter().zip(&maps) {
            if m.rows() != dims[arr.target] || m.cols() != dims[arr.source] {
                return Err(Error::invalid(
                    OP,
                    format!(
                        "matrix for {} must be {}×{}, got {}×{}",
                        arr.label,
                        dims[arr.target],
                        dims[arr.source],
                        m.rows(),
                        m.cols()
                    ),
                ));
            }
            if m.field() != algebra.field() {
                return Err(Error::invalid(
                    OP,
                    format!("matrix for {} is over the wrong field", arr.label),
                ));
            }
        }
        let rep = Rep { algebra, dims, maps };
        for r in rep.algebra.relations() {
            let mut acc = Matrix::zeros(
                rep.field(),
                rep.dims[r.terms[0].1.target],
                rep.dims[r.terms[0].1.source],
            );
            for (c, p) in &r.terms {
                acc = acc.add(&rep.path_action(p).scale(c));
            }
            if !acc.is_zero() {
                return Err(Error::invalid(
                    OP,
                    format!("relation {} does not vanish", r.display(rep.algebra.quiver())),
                ));
            }
        }
        Ok(rep)
    }

    pub(crate) fn from_parts(algebra: Arc<BoundQuiverAlgebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Rep {
        debug_assert!(Rep::new(algebra.clone(), dims.clone(), maps.clone()).is_ok());
        Rep { algebra, dims, maps }
    }

    pub fn zero(algebra: &Arc<BoundQuiverAlgebra>) -> Rep {
        let dims = vec![0; algebra.vertex_count()];
        let f = algebra.field();
        let maps = algebra
            .quiver()
            .arrows()
            .iter()
            .map(|_| Matrix::zeros(f, 0, 0))
            .collect();
        Rep {
            algebra: algebra.clone(),
            dims,
            maps,
        }
    }

    /// `P(i) = e_i A`, with basis at `j` the basis paths from `i` to `j`.
    pub fn projective(algebra: &Arc<BoundQuiverAlgebra>, i: usize) -> Rep {
        let a = algebra.as_ref();
        let f = a.field();
        let m = a.vertex_count();
        let spaces: Vec<Vec<usize>> = (0..m).map(|j| a.paths_between(i, j)).collect();
        let maps = a
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, arr)| {
                let ai = a.basis_index(&Path::arrow(a.quiver(), k)).expect("arrow in basis");
                let src = &spaces[arr.source];
                let tgt = &spaces[arr.target];
                let mut mat = Matrix::zeros(f, tgt.len(), src.len());
                for (c, &p) in src.iter().enumerate() {
                    for (t, x) in a.product(p, ai) {
                        let r = tgt.iter().position(|q| q == t).expect("path lands in target space");
                        mat[(r, c)] = x.clone();
                    }
                }
                mat
            })
            .collect();
        Rep::from_parts(algebra.clone(), spaces.iter().map(Vec::len).collect(), maps)
    }

    /// `I(i) = D(A e_i)`; at `j` the dual of `e_j A e_i`.
    pub fn injective(algebra: &Arc<BoundQuiverAlgebra>, i: usize) -> Rep {
        let a = algebra.as_ref();
        let f = a.field();
        let m = a.vertex_count();
        let spaces: Vec<Vec<usize>> = (0..m).map(|j| a.paths_between(j, i)).collect();
        let maps = a
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, arr)| {
                let ai = a.basis_index(&Path::arrow(a.quiver(), k)).expect("arrow in basis");
                // left multiplication by the arrow, e_t A e_i -> e_s A e_i, transposed
                let src = &spaces[arr.source];
                let tgt = &spaces[arr.target];
                let mut mat = Matrix::zeros(f, tgt.len(), src.len());
                for (c, &x) in tgt.iter().enumerate() {
                    for (t, v) in a.product(ai, x) {
                        let r = src.iter().position(|q| q == t).expect("path lands in source space");
                        mat[(c, r)] = v.clone();
                    }
                }
                mat
            })
            .collect();
        Rep::from_parts(algebra.clone(), spaces.iter().map(Vec::len).collect(), maps)
    }

    pub fn simple(algebra: &Arc<BoundQuiverAlgebra>, i: usize) -> Rep {
        let f = algebra.field();
        let mut dims = vec![0; algebra.vertex_count()];
        dims[i] = 1;
        let maps = algebra
            .quiver()
            .arrows()
            .iter()
            .map(|arr| Matrix::zeros(f, dims[arr.target], dims[arr.source]))
            .collect();
        Rep::from_parts(algebra.clone(), dims, maps)
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    /// Vertices with `M e_i ≠ 0`.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&i| self.dims[i] > 0).collect()
    }

    pub fn is_sincere(&self) -> bool {
        self.dims.iter().all(|&d| d > 0)
    }

    /// Offset of `M e_i` inside the total space `⊕ M e_i`.
    pub fn offset(&self, i: usize) -> usize {
        self.dims[..i].iter().sum()
    }

    pub fn path_action(&self, p: &Path) -> Matrix {
        let mut acc = Matrix::identity(self.field(), self.dims[p.source]);
        for &a in &p.arrows {
            acc = self.maps[a].mul(&acc);
        }
        acc
    }

    /// Action of an algebra element on the total space.
    pub fn element_action(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut out = Matrix::zeros(self.field(), n, n);
        for (k, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = &self.algebra.basis()[k];
            let block = self.path_action(p).scale(c);
            let (r0, c0) = (self.offset(p.target), self.offset(p.source));
            let cur = out.block(r0, c0, block.rows(), block.cols());
            out.set_block(r0, c0, &cur.add(&block));
        }
        out
    }

    pub fn direct_sum(&self, other: &Rep) -> Rep {
        assert!(Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra);
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        Rep {
            algebra: self.algebra.clone(),
            dims,
            maps,
        }
    }

    pub fn direct_sum_all<'a>(algebra: &Arc<BoundQuiverAlgebra>, reps: impl IntoIterator<Item = &'a Rep>) -> Rep {
        reps.into_iter().fold(Rep::zero(algebra), |acc, r| acc.direct_sum(r))
    }

    /// The annihilator as a subspace of the algebra, in reduced echelon form.
    pub fn annihilator(&self) -> Vec<Element> {
        let a = &self.algebra;
        let n = a.dim();
        // one matrix column per basis path, rows indexed by the entries of its block
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        let mut blocks: Vec<(usize, usize)> = a.basis().iter().map(|p| (p.source, p.target)).collect();
        blocks.sort();
        blocks.dedup();
        let mut columns: Vec<Vec<Scalar>> = vec![Vec::new(); n];
        for (s, t) in blocks {
            let size = self.dims[s] * self.dims[t];
            for (k, p) in a.basis().iter().enumerate() {
                if (p.source, p.target) == (s, t) {
                    columns[k].extend(self.path_action(p).entries().iter().cloned());
                } else {
                    columns[k].extend(std::iter::repeat_n(self.field().zero(), size));
                }
            }
        }
        let total = columns.first().map_or(0, Vec::len);
        for r in 0..total {
            rows.push(columns.iter().map(|c| c[r].clone()).collect());
        }
        let mat = Matrix::from_rows(self.field(), total, n, rows);
        let span = Span::from_vectors(self.field(), n, &mat.nullspace());
        span.rref_basis()
    }

    pub fn is_faithful(&self) -> bool {
        self.annihilator().is_empty()
    }

    /// Moves the module to another algebra sharing vertex and arrow labels.
    /// Vertices missing from `target` must carry zero spaces; every arrow of
    /// `target` must have a counterpart.
    pub fn transport(&self, target: &Arc<BoundQuiverAlgebra>) -> Result<Rep> {
        const OP: &str = "transport";
        let src_q = self.algebra.quiver();
        let tgt_q = target.quiver();
        for (i, label) in src_q.vertices().iter().enumerate() {
            if self.dims[i] > 0 && tgt_q.vertex_index(label).is_none() {
                return Err(Error::invalid(
                    OP,
                    format!("module is nonzero at deleted vertex {label}"),
                ));
            }
        }
        let dims: Vec<usize> = tgt_q
            .vertices()
            .iter()
            .map(|l| src_q.vertex_index(l).map_or(0, |i| self.dims[i]))
            .collect();
        let mut maps = Vec::new();
        for arr in tgt_q.arrows() {
            let k = src_q.arrow_index(&arr.label).ok_or_else(|| Error::UnknownArrow {
                op: OP,
                label: arr.label.clone(),
            })?;
            let s = &src_q.arrows()[k];
            if src_q.vertices()[s.source] != tgt_q.vertices()[arr.source]
                || src_q.vertices()[s.target] != tgt_q.vertices()[arr.target]
            {
                return Err(Error::invalid(OP, format!("arrow {} changes endpoints", arr.label)));
            }
            maps.push(self.maps[k].clone());
        }
        Rep::new(target.clone(), dims, maps)
    }

    pub fn to_json(&self) -> Value {
        let q = self.algebra.quiver();
        let maps: serde_json::Map<String, Value> = q
            .arrows()
            .iter()
            .zip(&self.maps)
            .map(|(arr, m)| {
                let rows: Vec<Vec<String>> = (0..m.rows())
                    .map(|r| m.row(r).iter().map(|x| x.to_string()).collect())
                    .collect();
                (arr.label.clone(), json!(rows))
            })
            .collect();
        json!({
            "algebra": self.algebra.name(),
            "dims": self.dims,
            "maps": maps,
        })
    }

    /// The module in the text format read by [`parse_modules`].
    pub fn to_text(&self, name: &str) -> String {
        let q = self.algebra.quiver();
        let mut out = format!("module {name} over {}\n", self.algebra.name());
        let dims: Vec<String> = self.dims.iter().map(usize::to_string).collect();
        out.push_str(&format!("dims {}\n", dims.join(" ")));
        for (arr, m) in q.arrows().iter().zip(&self.maps) {
            if m.is_zero() {
                continue;
            }
            let rows: Vec<String> = (0..m.rows())
                .map(|r| {
                    format!(
                        "[{}]",
                        m.row(r).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
                    )
                })
                .collect();
            out.push_str(&format!("map {} = [{}]\n", arr.label, rows.join(", ")));
        }
        out.push_str("end\n");
        out
    }
}


#[cfg(test)]
mod tests {
    use super::test_reps::*;
    use super::*;

    #[test]
    fn projectives_of_example() {
        let a = ex_a();
        let p1 = Rep::projective(&a, 0);
        let p2 = Rep::projective(&a, 1);
        assert_eq!(p1.dims(), [1, 1]);
        assert_eq!(p2.dims(), [0, 2]);
        assert_eq!(Rep::injective(&a, 1).dims(), [1, 2]);
        assert_eq!(Rep::injective(&a, 0).dims(), [1, 0]);
        let total = p1.direct_sum(&p2);
        assert_eq!(total.dim(), a.dim());
        assert!(total.is_faithful());
    }

    #[test]
    fn relations_are_checked() {
        let a = ex_a();
        let f = a.field();
        let one = Matrix::identity(f, 1);
        let err = Rep::new(a.clone(), vec![1, 1], vec![one.clone(), one]).unwrap_err();
        assert!(err.to_string().contains("does not vanish"), "{err}");
    }

    #[test]
    fn annihilator_of_p1_plus_s1() {
        let a = ex_a();
        let t = Rep::projective(&a, 0).direct_sum(&Rep::simple(&a, 0));
        let ann = t.annihilator();
        assert_eq!(ann.len(), 1);
        let beta = a.path_element(&Path::arrow(a.quiver(), 1));
        assert_eq!(ann[0], beta);
    }

    #[test]
    fn transport_to_factor() {
        let a = ex_a();
        let c = Arc::new(crate::algebra::delete_vertices(&a, &[1].into()).unwrap());
        let s1 = Rep::simple(&a, 0).transport(&c).unwrap();
        assert_eq!(s1.dims(), [1]);
        assert!(Rep::projective(&a, 0).transport(&c).is_err());
    }

    #[test]
    fn text_round_trip() {
        let a = ex_a();
        let p2 = Rep::projective(&a, 1);
        let lib = parse_modules(&p2.to_text("P2"), std::slice::from_ref(&a)).unwrap();
        assert_eq!(lib.get("P2").unwrap(), &p2);
    }
}
