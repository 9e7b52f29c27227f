//! Dense exact matrices and the handful of echelon-form routines the rest of
//! the crate is built on.

use std::fmt;

use crate::field::{Field, Scalar};

pub type Vector = Vec<Scalar>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(field: Field, rows: usize, cols: usize, entries: Vec<Vec<Scalar>>) -> Matrix {
        assert_eq!(entries.len(), rows);
        let mut data = Vec::with_capacity(rows * cols);
        for row in entries {
            assert_eq!(row.len(), cols);
            data.extend(row);
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, x) in col.iter().enumerate() {
                m[(r, c)] = x.clone();
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, r: usize) -> Vector {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for (c, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc += &(&self[(r, c)] * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut m = Matrix::zeros(self.field, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(r, c)] = self[(r, c)].clone();
            }
            for c in 0..other.cols {
                m[(r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        m
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m[(row, col)].inv().expect("nonzero pivot");
            for c in col..m.cols {
                m[(row, c)] *= &inv;
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in col..m.cols {
                    let delta = &factor * &m[(row, c)];
                    m[(r, c)] -= &delta;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Basis of `{x : self·x = 0}`, one vector per free column in order.
    pub fn nullspace(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let mut out = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -&r[(i, free)];
            }
            out.push(v);
        }
        out
    }

    /// Rows spanning `{y : y·self = 0}`.
    pub fn left_nullspace(&self) -> Matrix {
        let basis = self.transpose().nullspace();
        let mut m = Matrix::zeros(self.field, basis.len(), self.rows);
        for (i, v) in basis.into_iter().enumerate() {
            for (j, x) in v.into_iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    /// Columns of `self` at the pivot positions: a basis of the column space.
    pub fn column_space(&self) -> Matrix {
        let (_, pivots) = self.rref();
        let cols: Vec<Vector> = pivots.iter().map(|&c| self.column(c)).collect();
        Matrix::from_columns(self.field, self.rows, &cols)
    }

    /// Some `X` with `self·X = rhs`, if one exists.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows);
        let (r, pivots) = self.hstack(rhs).rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.field, self.cols, rhs.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x[(p, c)] = r[(i, self.cols + c)].clone();
            }
        }
        Some(x)
    }

    pub fn solve_vec(&self, rhs: &[Scalar]) -> Option<Vector> {
        let b = Matrix::from_columns(self.field, self.rows, &[rhs.to_vec()]);
        self.solve(&b).map(|x| x.column(0))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let x = self.solve(&Matrix::identity(self.field, self.rows))?;
        if self.mul(&x) == Matrix::identity(self.field, self.rows) {
            Some(x)
        } else {
            None
        }
    }

    pub fn trace(&self) -> Scalar {
        let mut t = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            t += &self[(i, i)];
        }
        t
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(r, c)] = self[(r, c)].clone();
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                m[(self.rows + r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        m
    }

    /// Sub-block copy.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(self.field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = self[(r0 + r, c0 + c)].clone();
            }
        }
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, src: &Matrix) {
        for r in 0..src.rows {
            for c in 0..src.cols {
                self[(r0 + r, c0 + c)] = src[(r, c)].clone();
            }
        }
    }
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn axpy(acc: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    if a.is_zero() {
        return;
    }
    for (y, xi) in acc.iter_mut().zip(x) {
        if !xi.is_zero() {
            *y += &(a * xi);
        }
    }
}

/// An incrementally built subspace in echelon form, optionally tracking how
/// each echelon row is expressed in the vectors that were inserted.
///
/// Row `k` vanishes at the pivots of rows `0..k`, so one forward pass of
/// eliminations reduces any vector against the whole span.
#[derive(Clone, Debug)]
pub struct Span {
    field: Field,
    len: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
    combos: Vec<Vector>,
    inserted: usize,
}

impl Span {
    pub fn new(field: Field, len: usize) -> Span {
        Span {
            field,
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
            combos: Vec::new(),
            inserted: 0,
        }
    }

    pub fn from_vectors<'a>(field: Field, len: usize, vs: impl IntoIterator<Item = &'a Vector>) -> Span {
        let mut s = Span::new(field, len);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.len
    }

    /// Reduces `v`, returning the remainder and the coefficients used on
    /// each echelon row.
    fn reduce_full(&self, v: &[Scalar]) -> (Vector, Vec<Scalar>) {
        let mut r = v.to_vec();
        let mut used = Vec::with_capacity(self.rows.len());
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = r[p].clone();
            if !c.is_zero() {
                for (x, y) in r.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &(&c * y);
                    }
                }
            }
            used.push(c);
        }
        (r, used)
    }

    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        self.reduce_full(v).0
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Inserts `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.len);
        let idx = self.inserted;
        self.inserted += 1;
        for c in &mut self.combos {
            c.push(self.field.zero());
        }
        let (mut r, used) = self.reduce_full(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        // combo of r: e_idx - sum used_k * combo_k
        let mut combo = vec![self.field.zero(); self.inserted];
        combo[idx] = self.field.one();
        for (c, k) in used.iter().zip(&self.combos) {
            if !c.is_zero() {
                for (x, y) in combo.iter_mut().zip(k) {
                    if !y.is_zero() {
                        *x -= &(c * y);
                    }
                }
            }
        }
        let inv = r[p].inv().expect("nonzero");
        for x in r.iter_mut() {
            *x *= &inv;
        }
        for x in combo.iter_mut() {
            *x *= &inv;
        }
        self.rows.push(r);
        self.pivots.push(p);
        self.combos.push(combo);
        true
    }

    /// Coefficients expressing `v` in the inserted vectors (dependent
    /// insertions receive zero), or `None` when `v` lies outside the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        let (r, used) = self.reduce_full(v);
        if !is_zero_vec(&r) {
            return None;
        }
        let mut out = vec![self.field.zero(); self.inserted];
        for (c, k) in used.iter().zip(&self.combos) {
            axpy(&mut out[..k.len()], c, k);
        }
        Some(out)
    }

    /// Fully reduced basis sorted by pivot.
    pub fn rref_basis(&self) -> Vec<Vector> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let mut rows: Vec<Vector> = order.iter().map(|&i| self.rows[i].clone()).collect();
        let pivots: Vec<usize> = order.iter().map(|&i| self.pivots[i]).collect();
        for i in (0..rows.len()).rev() {
            for j in 0..i {
                let c = rows[j][pivots[i]].clone();
                if !c.is_zero() {
                    let ri = rows[i].clone();
                    for (x, y) in rows[j].iter_mut().zip(&ri) {
                        *x -= &(&c * y);
                    }
                }
            }
        }
        rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
}

/// Coordinates with respect to a fixed linearly independent family.
#[derive(Clone, Debug)]
pub struct Coordinates {
    span: Span,
    size: usize,
}

impl Coordinates {
    /// `None` when the family is dependent.
    pub fn new(field: Field, len: usize, family: &[Vector]) -> Option<Coordinates> {
        let mut span = Span::new(field, len);
        for v in family {
            if !span.insert(v) {
                return None;
            }
        }
        Some(Coordinates {
            span,
            size: family.len(),
        })
    }

    pub fn of(&self, v: &[Scalar]) -> Option<Vector> {
        self.span.coordinates(v).map(|mut c| {
            c.truncate(self.size);
            c
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Matrix {
        let f = Field::Rationals;
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Matrix::from_rows(
            f,
            r,
            c,
            rows.iter()
                .map(|row| row.iter().map(|&x| f.from_i64(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn nullspace_of_rank_one() {
        let m = q(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(is_zero_vec(&m.mul_vec(&v)));
        }
    }

    #[test]
    fn inverse_round_trip() {
        let m = q(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(Field::Rationals, 2));
        assert!(q(&[&[1, 1], &[1, 1]]).inverse().is_none());
    }

    #[test]
    fn left_nullspace_annihilates() {
        let m = q(&[&[1, 0], &[0, 0], &[1, 0]]);
        let y = m.left_nullspace();
        assert_eq!(y.rows(), 2);
        assert!(y.mul(&m).is_zero());
    }

    #[test]
    fn span_coordinates() {
        let f = Field::Fp(7);
        let v = |xs: &[i64]| xs.iter().map(|&x| f.from_i64(x)).collect::<Vector>();
        let c = Coordinates::new(f, 3, &[v(&[1, 1, 0]), v(&[0, 1, 1])]).unwrap();
        assert_eq!(c.of(&v(&[2, 5, 3])).unwrap(), v(&[2, 3]));
        assert!(c.of(&v(&[1, 0, 0])).is_none());
        assert!(Coordinates::new(f, 3, &[v(&[1, 1, 0]), v(&[2, 2, 0])]).is_none());
    }

    #[test]
    fn solve_inconsistent() {
        let m = q(&[&[1, 0], &[0, 0]]);
        assert!(m.solve_vec(&q(&[&[0], &[1]]).column(0)).is_none());
    }
}
