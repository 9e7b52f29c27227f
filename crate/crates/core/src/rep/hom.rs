//! Module homomorphisms and `Hom` spaces.

use crate::field::Scalar;
use crate::matrix::{Matrix, Vector};

use super::Rep;

/// A homomorphism given by one matrix per vertex; `blocks[i]` has shape
/// `target.dims[i] × source.dims[i]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModMap {
    pub source: Rep,
    pub target: Rep,
    pub blocks: Vec<Matrix>,
}

impl ModMap {
    pub fn zero(source: &Rep, target: &Rep) -> ModMap {
        let f = source.field();
        let blocks = (0..source.dims().len())
            .map(|i| Matrix::zeros(f, target.dims()[i], source.dims()[i]))
            .collect();
        ModMap {
            source: source.clone(),
            target: target.clone(),
            blocks,
        }
    }

    pub fn identity(m: &Rep) -> ModMap {
        let f = m.field();
        ModMap {
            source: m.clone(),
            target: m.clone(),
            blocks: m.dims().iter().map(|&d| Matrix::identity(f, d)).collect(),
        }
    }

    /// Checks `f_j M_a = N_a f_i` for every arrow `a: i -> j`.
    pub fn is_homomorphism(&self) -> bool {
        self.source
            .algebra()
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .all(|(k, arr)| {
                self.blocks[arr.target].mul(self.source.map(k)) == self.target.map(k).mul(&self.blocks[arr.source])
            })
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ModMap) -> ModMap {
        ModMap {
            source: self.source.clone(),
            target: other.target.clone(),
            blocks: self.blocks.iter().zip(&other.blocks).map(|(f, g)| g.mul(f)).collect(),
        }
    }

    pub fn add(&self, other: &ModMap) -> ModMap {
        ModMap {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self.blocks.iter().zip(&other.blocks).map(|(f, g)| f.add(g)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> ModMap {
        ModMap {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self.blocks.iter().map(|f| f.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.dims() == self.target.dims() && self.is_injective()
    }

    /// All entries, vertex by vertex in row-major order.
    pub fn flatten(&self) -> Vector {
        self.blocks.iter().flat_map(|b| b.entries().iter().cloned()).collect()
    }

    pub(crate) fn unflatten(source: &Rep, target: &Rep, v: &[Scalar]) -> ModMap {
        let f = source.field();
        let mut at = 0;
        let blocks = (0..source.dims().len())
            .map(|i| {
                let (r, c) = (target.dims()[i], source.dims()[i]);
                let rows = (0..r).map(|x| v[at + x * c..at + (x + 1) * c].to_vec()).collect();
                at += r * c;
                Matrix::from_rows(f, r, c, rows)
            })
            .collect();
        ModMap {
            source: source.clone(),
            target: target.clone(),
            blocks,
        }
    }
}

/// A basis of `Hom(M, N)`.
pub fn hom_basis(m: &Rep, n: &Rep) -> Vec<ModMap> {
    let f = m.field();
    let q = m.algebra().quiver();
    let verts = m.dims().len();
    // unknown (i, r, c) is entry (r, c) of f_i
    let mut offset = vec![0; verts + 1];
    for i in 0..verts {
        offset[i + 1] = offset[i] + n.dims()[i] * m.dims()[i];
    }
    let unknowns = offset[verts];
    if unknowns == 0 {
        return Vec::new();
    }
    let var = |i: usize, r: usize, c: usize| offset[i] + r * m.dims()[i] + c;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (k, arr) in q.arrows().iter().enumerate() {
        let (s, t) = (arr.source, arr.target);
        let (ma, na) = (m.map(k), n.map(k));
        // (f_t M_a - N_a f_s)[r][c] = 0 for r < dims_N[t], c < dims_M[s]
        for r in 0..n.dims()[t] {
            for c in 0..m.dims()[s] {
                let mut row = vec![f.zero(); unknowns];
                for x in 0..m.dims()[t] {
                    row[var(t, r, x)] += &ma[(x, c)];
                }
                for y in 0..n.dims()[s] {
                    row[var(s, y, c)] -= &na[(r, y)];
                }
                if row.iter().any(|e| !e.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let sol = if rows.is_empty() {
        Matrix::identity(f, unknowns).columns()
    } else {
        Matrix::from_rows(f, rows.len(), unknowns, rows).nullspace()
    };
    sol.iter().map(|v| ModMap::unflatten(m, n, v)).collect()
}

pub fn hom_dim(m: &Rep, n: &Rep) -> usize {
    hom_basis(m, n).len()
}

#[cfg(test)]
mod tests {
    use super::super::test_reps::*;
    use super::*;

    #[test]
    fn yoneda_dimensions() {
        let a = ex_a();
        let s1 = Rep::simple(&a, 0);
        let p1 = Rep::projective(&a, 0);
        let p2 = Rep::projective(&a, 1);
        for m in [&s1, &p1, &p2] {
            for i in 0..2 {
                assert_eq!(hom_dim(&Rep::projective(&a, i), m), m.dims()[i]);
            }
        }
        assert_eq!(hom_dim(&p2, &p1), 1);
        assert_eq!(hom_dim(&p1, &p2), 0);
        assert_eq!(hom_dim(&p2, &p2), 2);
        for h in hom_basis(&p2, &p1) {
            assert!(h.is_homomorphism());
        }
    }

    #[test]
    fn hom_with_zero_module() {
        let a = a2();
        assert_eq!(hom_dim(&Rep::zero(&a), &Rep::projective(&a, 0)), 0);
        assert!(ModMap::identity(&Rep::projective(&a, 0)).is_isomorphism());
    }
}
