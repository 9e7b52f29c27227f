//! Two-sided ideals as subspaces of the algebra.

use serde_json::{json, Value};

use super::{BoundQuiverAlgebra, Element};
use crate::error::{Error, Result};
use crate::matrix::{is_zero_vec, Span};

/// A two-sided ideal, stored by its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    algebra_dim: usize,
    basis: Vec<Element>,
}

impl Ideal {
    pub fn zero(a: &BoundQuiverAlgebra) -> Ideal {
        Ideal {
            algebra_dim: a.dim(),
            basis: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Element] {
        &self.basis
    }

    fn span(&self, a: &BoundQuiverAlgebra) -> Span {
        Span::from_vectors(a.field(), self.algebra_dim, &self.basis)
    }

    pub fn contains(&self, a: &BoundQuiverAlgebra, x: &[crate::field::Scalar]) -> bool {
        self.span(a).contains(x)
    }

    /// Closure under left and right multiplication by every basis element.
    pub fn is_closed(&self, a: &BoundQuiverAlgebra) -> bool {
        let span = self.span(a);
        self.basis.iter().all(|x| {
            (0..a.dim()).all(|i| {
                let b = a.basis_element(i);
                span.contains(&a.mul(&b, x)) && span.contains(&a.mul(x, &b))
            })
        })
    }

    /// `I·J = span{ x·y }`.
    pub fn product(&self, other: &Ideal, a: &BoundQuiverAlgebra) -> Ideal {
        let mut span = Span::new(a.field(), a.dim());
        for x in &self.basis {
            for y in &other.basis {
                span.insert(&a.mul(x, y));
            }
        }
        Ideal {
            algebra_dim: a.dim(),
            basis: span.rref_basis(),
        }
    }

    pub fn to_json(&self, a: &BoundQuiverAlgebra) -> Value {
        json!({
            "algebra": a.name(),
            "dimension": self.dim(),
            "basis": self.basis.iter().map(|x| a.element_display(x)).collect::<Vec<_>>(),
        })
    }
}

/// The smallest ideal containing `gens`.
pub fn ideal_from_generators(a: &BoundQuiverAlgebra, gens: &[Element]) -> Ideal {
    let mut span = Span::new(a.field(), a.dim());
    let mut queue: Vec<Element> = Vec::new();
    for g in gens {
        if span.insert(g) {
            queue.push(g.clone());
        }
    }
    while let Some(x) = queue.pop() {
        for i in 0..a.dim() {
            let b = a.basis_element(i);
            for y in [a.mul(&b, &x), a.mul(&x, &b)] {
                if !is_zero_vec(&y) && span.insert(&y) {
                    queue.push(y);
                }
            }
        }
    }
    Ideal {
        algebra_dim: a.dim(),
        basis: span.rref_basis(),
    }
}

/// Least `r ≥ 1` with `I^r = 0`.
pub fn nilpotency_index(a: &BoundQuiverAlgebra, ideal: &Ideal) -> Result<usize> {
    let mut power = ideal.clone();
    let mut r = 1;
    while !power.is_zero() {
        let next = power.product(ideal, a);
        if next.dim() == power.dim() {
            return Err(Error::NotNilpotent);
        }
        power = next;
        r += 1;
    }
    Ok(r)
}

/// Span of the basis paths of positive length.
pub fn radical(a: &BoundQuiverAlgebra) -> Ideal {
    let basis = (0..a.dim())
        .filter(|&i| !a.basis()[i].is_lazy())
        .map(|i| a.basis_element(i))
        .collect();
    Ideal {
        algebra_dim: a.dim(),
        basis,
    }
}

pub fn loewy_length(a: &BoundQuiverAlgebra) -> Result<usize> {
    if a.is_zero() {
        return Err(Error::ZeroAlgebra { op: "loewy_length" });
    }
    nilpotency_index(a, &radical(a))
}
