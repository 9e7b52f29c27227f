//! Bound quiver algebras `KQ/I` realised as a basis of path normal forms with
//! a multiplication table.
//!
//! Paths compose left to right: `p·q` traverses `p` then `q` and is defined
//! when `target(p) = source(q)`. Modules are right modules, so the
//! indecomposable projective at `i` is spanned by the basis paths starting at
//! `i`.

mod closure;
mod ideal;
mod parse;
mod quotient;

use std::collections::HashMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{axpy, is_zero_vec, Vector};

pub use closure::{basis_closure, Closure, DEFAULT_MAX_LEN};
pub use ideal::{ideal_from_generators, loewy_length, nilpotency_index, radical, Ideal};
pub(crate) use parse::strip_comment;
pub use parse::{parse_algebra, parse_algebra_with};
pub use quotient::{delete_vertices, factor_algebra, opposite, present, PresentationInvariants, ScAlgebra};

/// Coordinates of an algebra element in the ordered basis.
pub type Element = Vector;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Quiver> {
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::invalid("quiver", format!("duplicate vertex '{v}'")));
            }
        }
        for (i, a) in arrows.iter().enumerate() {
            if arrows[..i].iter().any(|b| b.label == a.label) {
                return Err(Error::invalid("quiver", format!("duplicate arrow '{}'", a.label)));
            }
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::invalid(
                    "quiver",
                    format!("arrow '{}' has an undeclared endpoint", a.label),
                ));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    /// The same vertices with every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    label: a.label.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }

    pub fn has_oriented_cycle(&self) -> bool {
        // Kahn's algorithm
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    stack.push(a.target);
                }
            }
        }
        seen < n
    }
}

/// A path of the quiver: a lazy path `e_i` when `arrows` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn lazy(v: usize) -> Path {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn arrow(quiver: &Quiver, a: usize) -> Path {
        let arr = &quiver.arrows[a];
        Path {
            source: arr.source,
            target: arr.target,
            arrows: vec![a],
        }
    }

    /// Checks that consecutive arrows compose and that the endpoints match.
    pub fn from_arrows(quiver: &Quiver, arrows: Vec<usize>) -> Option<Path> {
        let first = *arrows.first()?;
        let mut at = quiver.arrows[first].source;
        let source = at;
        for &a in &arrows {
            if quiver.arrows[a].source != at {
                return None;
            }
            at = quiver.arrows[a].target;
        }
        Some(Path {
            source,
            target: at,
            arrows,
        })
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_lazy(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn compose(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            source: self.source,
            target: other.target,
            arrows,
        })
    }

    pub fn reversed(&self) -> Path {
        Path {
            source: self.target,
            target: self.source,
            arrows: self.arrows.iter().rev().copied().collect(),
        }
    }

    /// Length-then-lexicographic key in arrow declaration order.
    pub fn order_key(&self) -> (usize, Vec<usize>, usize) {
        (self.arrows.len(), self.arrows.clone(), self.source)
    }

    pub fn display(&self, quiver: &Quiver) -> String {
        if self.is_lazy() {
            format!("e{}", quiver.vertices[self.source])
        } else {
            self.arrows
                .iter()
                .map(|&a| quiver.arrows[a].label.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

/// A linear combination of parallel paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Path)>,
}

impl Relation {
    pub fn display(&self, quiver: &Quiver) -> String {
        let mut out = String::new();
        for (i, (c, p)) in self.terms.iter().enumerate() {
            let neg = c.is_negative_rational() || matches!(c, Scalar::Fp { v, p } if *v > p / 2);
            let mag = if neg { -c } else { c.clone() };
            if i > 0 {
                out.push_str(if neg { " - " } else { " + " });
            } else if neg {
                out.push('-');
            }
            if !mag.is_one() {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&p.display(quiver));
        }
        out
    }

    /// Largest term length.
    pub fn degree(&self) -> usize {
        self.terms.iter().map(|(_, p)| p.len()).max().unwrap_or(0)
    }
}

pub(crate) type Table = Vec<Vec<(usize, Scalar)>>;

/// A finite-dimensional algebra `KQ/I` with an explicit path basis.
#[derive(Clone)]
pub struct BoundQuiverAlgebra {
    name: String,
    field: Field,
    quiver: Quiver,
    basis: Vec<Path>,
    table: Table,
    relations: Vec<Relation>,
    index: HashMap<(usize, Vec<usize>), usize>,
}

impl PartialEq for BoundQuiverAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.field == other.field
            && self.quiver == other.quiver
            && self.basis == other.basis
            && self.table == other.table
            && self.relations == other.relations
    }
}

impl Eq for BoundQuiverAlgebra {}

impl fmt::Debug for BoundQuiverAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BoundQuiverAlgebra")
            .field("name", &self.name)
            .field("field", &self.field)
            .field("vertices", &self.quiver.vertices)
            .field("dim", &self.dim())
            .finish()
    }
}

impl BoundQuiverAlgebra {
    pub(crate) fn from_parts(
        name: String,
        field: Field,
        quiver: Quiver,
        basis: Vec<Path>,
        table: Table,
        relations: Vec<Relation>,
    ) -> BoundQuiverAlgebra {
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, p)| ((p.source, p.arrows.clone()), i))
            .collect();
        BoundQuiverAlgebra {
            name,
            field,
            quiver,
            basis,
            table,
            relations,
            index,
        }
    }

    /// The algebra `KQ/I` for the given relations.
    pub fn new(
        name: impl Into<String>,
        field: Field,
        quiver: Quiver,
        relations: Vec<Relation>,
        max_len: usize,
    ) -> Result<BoundQuiverAlgebra> {
        let closure = basis_closure(&quiver, &relations, field, max_len)?;
        Ok(BoundQuiverAlgebra::from_parts(
            name.into(),
            field,
            quiver,
            closure.basis,
            closure.table,
            relations,
        ))
    }

    /// The zero algebra left after deleting every vertex.
    pub fn zero(name: impl Into<String>, field: Field) -> BoundQuiverAlgebra {
        BoundQuiverAlgebra::from_parts(name.into(), field, Quiver::default(), vec![], vec![], vec![])
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn basis_index(&self, path: &Path) -> Option<usize> {
        self.index.get(&(path.source, path.arrows.clone())).copied()
    }

    /// Structure constants of `b_i · b_j`.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    pub fn zero_element(&self) -> Element {
        vec![self.field.zero(); self.dim()]
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut x = self.zero_element();
        x[i] = self.field.one();
        x
    }

    /// The lazy path `e_v`.
    pub fn idempotent(&self, v: usize) -> Element {
        self.basis_element(self.basis_index(&Path::lazy(v)).expect("lazy paths are basis elements"))
    }

    pub fn one(&self) -> Element {
        let mut x = self.zero_element();
        for v in 0..self.vertex_count() {
            axpy(&mut x, &self.field.one(), &self.idempotent(v));
        }
        x
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
                for (k, c) in self.product(i, j) {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    /// The element represented by an arbitrary (possibly non-normal) path.
    pub fn path_element(&self, path: &Path) -> Element {
        let mut x = self.idempotent(path.source);
        for &a in &path.arrows {
            let ai = self
                .basis_index(&Path::arrow(&self.quiver, a))
                .expect("arrows are basis elements");
            x = self.mul(&x, &self.basis_element(ai));
        }
        x
    }

    pub fn relation_element(&self, r: &Relation) -> Element {
        let mut x = self.zero_element();
        for (c, p) in &r.terms {
            axpy(&mut x, c, &self.path_element(p));
        }
        x
    }

    /// Indices of basis paths from `i` to `j`.
    pub fn paths_between(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&k| self.basis[k].source == i && self.basis[k].target == j)
            .collect()
    }

    /// Checks associativity, the idempotent identities and that each
    /// relation evaluates to zero.
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.dim();
        let unit = self.one();
        for i in 0..n {
            let b = self.basis_element(i);
            if self.mul(&unit, &b) != b || self.mul(&b, &unit) != b {
                return Err(Error::internal("check_invariants", "unit law fails"));
            }
        }
        for u in 0..self.vertex_count() {
            for v in 0..self.vertex_count() {
                let prod = self.mul(&self.idempotent(u), &self.idempotent(v));
                let expected = if u == v {
                    self.idempotent(u)
                } else {
                    self.zero_element()
                };
                if prod != expected {
                    return Err(Error::internal("check_invariants", "idempotents not orthogonal"));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.mul(&self.basis_element(i), &self.basis_element(j));
                for k in 0..n {
                    let bk = self.basis_element(k);
                    let left = self.mul(&ij, &bk);
                    let right = self.mul(&self.basis_element(i), &self.mul(&self.basis_element(j), &bk));
                    if left != right {
                        return Err(Error::internal("check_invariants", "multiplication is not associative"));
                    }
                }
            }
        }
        for r in &self.relations {
            if !is_zero_vec(&self.relation_element(r)) {
                return Err(Error::internal("check_invariants", "relation does not vanish"));
            }
        }
        Ok(())
    }

    /// Canonical JSON document (keys sorted, basis in construction order).
    pub fn to_json(&self) -> Value {
        let table: Vec<Value> = (0..self.dim())
            .flat_map(|i| (0..self.dim()).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.product(i, j).is_empty())
            .map(|(i, j)| {
                let terms: Vec<Value> = self.product(i, j).iter().map(|(k, c)| json!([k, c])).collect();
                json!([i, j, terms])
            })
            .collect();
        json!({
            "name": self.name,
            "field": self.field.to_string(),
            "vertices": self.quiver.vertices,
            "arrows": self.quiver.arrows.iter().map(|a| json!({
                "label": a.label,
                "source": self.quiver.vertices[a.source],
                "target": self.quiver.vertices[a.target],
            })).collect::<Vec<_>>(),
            "basis": self.basis.iter().map(|p| p.display(&self.quiver)).collect::<Vec<_>>(),
            "table": table,
            "relations": self.relations.iter().map(|r| r.display(&self.quiver)).collect::<Vec<_>>(),
            "dimension": self.dim(),
        })
    }

    pub fn element_display(&self, x: &[Scalar]) -> String {
        let terms: Vec<(Scalar, Path)> = x
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), self.basis[i].clone()))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            Relation { terms }.display(&self.quiver)
        }
    }
}

#[cfg(test)]
pub(crate) mod test_algebras {
    use super::*;

    pub const EX_A: &str =
        "algebra exA\nfield Fp 32003\nvertices 1 2\narrow α: 1 -> 2\narrow β: 2 -> 2\nrelations\n  α*β\n  β*β\nend\n";
    pub const A2: &str = "algebra a2\nvertices 1 2\narrow a: 1 -> 2\nend\n";
    pub const K2: &str = "algebra k2\nvertices 1 2\nend\n";

    pub fn ex_a() -> BoundQuiverAlgebra {
        parse_algebra(EX_A).unwrap()
    }

    pub fn a2() -> BoundQuiverAlgebra {
        parse_algebra(A2).unwrap()
    }

    pub fn k2() -> BoundQuiverAlgebra {
        parse_algebra(K2).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::test_algebras::*;

    #[test]
    fn example_algebra_basis() {
        let a = ex_a();
        let names: Vec<String> = a.basis().iter().map(|p| p.display(a.quiver())).collect();
        assert_eq!(names, ["e1", "e2", "α", "β"]);
        a.check_invariants().unwrap();
    }

    #[test]
    fn serialization_is_deterministic() {
        let x = serde_json::to_string(&ex_a().to_json()).unwrap();
        let y = serde_json::to_string(&ex_a().to_json()).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn oriented_cycles() {
        assert!(ex_a().quiver().has_oriented_cycle());
        assert!(!a2().quiver().has_oriented_cycle());
    }
}
