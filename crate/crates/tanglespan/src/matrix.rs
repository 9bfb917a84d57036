//! Dense exact linear algebra over a field-like scalar.
//!
//! Everything here is generic over [`Field`]; the crate instantiates it at
//! Q(t) and at Q.  Zero-dimensional matrices are first-class citizens: empty
//! boundaries and empty apexes of spans are represented by 0 x n and n x 0
//! matrices, and all algorithms must handle them.

use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Div, Neg, Sub};

/// Scalars that support exact Gaussian elimination.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
{
}

impl<T> Field for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + Neg<Output = Self>
        + Sub<Output = Self>
        + Div<Output = Self>
{
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn new(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Applies a fallible entrywise map, as used by specialization of t.
    pub fn try_map<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<Matrix<G>, E> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>, E>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let term = a.clone() * b.clone();
                    let cur = std::mem::replace(&mut out[(i, j)], F::zero());
                    out[(i, j)] = cur + term;
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn hstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.rows, rhs.rows);
        let mut rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut row: Vec<F> = self.row(i).to_vec();
            row.extend_from_slice(rhs.row(i));
            rows.push(row);
        }
        let mut m = Self::from_rows(rows);
        if self.rows == 0 {
            m.cols = self.cols + rhs.cols;
        }
        m
    }

    pub fn vstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.cols);
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Matrix { rows: self.rows + rhs.rows, cols: self.cols, data }
    }

    pub fn block_diag(blocks: &[&Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    /// Keeps rows `lo..hi`.
    pub fn row_slice(&self, lo: usize, hi: usize) -> Self {
        assert!(lo <= hi && hi <= self.rows);
        Matrix {
            rows: hi - lo,
            cols: self.cols,
            data: self.data[lo * self.cols..hi * self.cols].to_vec(),
        }
    }

    /// Removes one row and one column.
    pub fn minor(&self, drop_row: usize, drop_col: usize) -> Self {
        assert!(drop_row < self.rows && drop_col < self.cols);
        let mut rows = Vec::with_capacity(self.rows - 1);
        for i in 0..self.rows {
            if i == drop_row {
                continue;
            }
            let mut row = Vec::with_capacity(self.cols - 1);
            for j in 0..self.cols {
                if j != drop_col {
                    row.push(self[(i, j)].clone());
                }
            }
            rows.push(row);
        }
        let mut m = Self::from_rows(rows);
        m.rows = self.rows - 1;
        m.cols = self.cols - 1;
        m
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = F::one() / self[(r, c)].clone();
            for j in c..self.cols {
                self[(r, j)] = self[(r, j)].clone() * inv.clone();
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let factor = self[(i, c)].clone();
                    for j in c..self.cols {
                        let sub = factor.clone() * self[(r, j)].clone();
                        self[(i, j)] = self[(i, j)].clone() - sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the null space, one column per free column of the reduced
    /// form, ordered by ascending free-column index.
    pub fn kernel_basis(&self) -> Self {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Self::zeros(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis[(fc, k)] = F::one();
            for (r, &pc) in pivots.iter().enumerate() {
                basis[(pc, k)] = -m[(r, fc)].clone();
            }
        }
        basis
    }

    /// Reduced column echelon form with zero columns dropped: the unique
    /// canonical basis of the column space.
    pub fn column_space_basis(&self) -> Self {
        let mut t = self.transpose();
        let pivots = t.rref();
        let rank = pivots.len();
        t.row_slice(0, rank).transpose()
    }

    /// Determinant by fraction-aware elimination.
    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return F::one();
        }
        let mut m = self.clone();
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return F::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det = det * pivot.clone();
            let inv = F::one() / pivot;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone() * inv.clone();
                for j in c..n {
                    let sub = factor.clone() * m[(c, j)].clone();
                    m[(i, j)] = m[(i, j)].clone() - sub;
                }
            }
        }
        det
    }

    /// Inverse via elimination on an augmented identity; `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = self.hstack(&Self::identity(n));
        let pivots = aug.rref();
        if pivots.len() < n || pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::BigRat;

    fn m(rows: Vec<Vec<i64>>) -> Matrix<BigRat> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(|x| BigRat::from_integer(x.into())).collect())
                .collect(),
        )
    }

    #[test]
    fn product_and_identity() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        let i = Matrix::<BigRat>::identity(2);
        assert_eq!(a.mul(&i), a);
        assert_eq!(i.mul(&a), a);
        let b = m(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&b), m(vec![vec![2, 1], vec![4, 3]]));
    }

    #[test]
    fn kernel_of_rank_one() {
        // [[1, -1], [2, -2]] has kernel spanned by (1, 1)
        let a = m(vec![vec![1, -1], vec![2, -2]]);
        let k = a.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(a.mul(&k), Matrix::zeros(2, 1));
        assert_eq!(k, m(vec![vec![1], vec![1]]));
    }

    #[test]
    fn kernel_ordering_by_free_column() {
        let a = m(vec![vec![1, 2, 0, 3]]);
        let k = a.kernel_basis();
        assert_eq!(k.cols(), 3);
        assert_eq!(a.mul(&k), Matrix::zeros(1, 3));
        // free columns 1, 2, 3 in order
        assert_eq!(k[(1, 0)], BigRat::from_integer(1.into()));
        assert_eq!(k[(2, 1)], BigRat::from_integer(1.into()));
        assert_eq!(k[(3, 2)], BigRat::from_integer(1.into()));
    }

    #[test]
    fn column_space_basis_is_invariant() {
        let a = m(vec![vec![1, 2], vec![0, 1], vec![1, 3]]);
        // same column space, different generators (and an extra zero column)
        let b = m(vec![vec![3, 1, 0], vec![1, 1, 0], vec![4, 2, 0]]);
        assert_eq!(a.column_space_basis(), b.column_space_basis());
        assert_eq!(a.column_space_basis().cols(), 2);
    }

    #[test]
    fn determinant_and_inverse() {
        let a = m(vec![vec![2, 1], vec![7, 4]]);
        assert_eq!(a.det(), BigRat::from_integer(1.into()));
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert_eq!(m(vec![vec![1, 2], vec![2, 4]]).inverse(), None);
        assert_eq!(m(vec![vec![1, 2], vec![2, 4]]).det(), BigRat::zero());
        assert_eq!(Matrix::<BigRat>::identity(0).det(), BigRat::from_integer(1.into()));
    }

    #[test]
    fn zero_dimensional_matrices() {
        let a = Matrix::<BigRat>::zeros(0, 3);
        assert_eq!(a.kernel_basis().cols(), 3);
        assert_eq!(a.rank(), 0);
        let b = Matrix::<BigRat>::zeros(3, 0);
        assert_eq!(b.kernel_basis().cols(), 0);
        assert_eq!(a.mul(&b).rows(), 0);
        let c = Matrix::<BigRat>::zeros(0, 0);
        assert_eq!(c.mul(&c), c);
        assert_eq!(a.column_space_basis().cols(), 0);
    }

    #[test]
    fn minor_drops_row_and_column() {
        let a = m(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]);
        assert_eq!(a.minor(0, 0), m(vec![vec![5, 6], vec![8, 9]]));
        assert_eq!(a.minor(1, 2), m(vec![vec![1, 2], vec![7, 8]]));
    }

    #[test]
    fn works_over_rational_functions() {
        use crate::Qt;
        let t = Qt::t();
        let one = <Qt as num_traits::One>::one();
        // [[t, 1], [0, 1/t]] has determinant 1 over Q(t)
        let a = Matrix::from_rows(vec![
            vec![t.clone(), one.clone()],
            vec![<Qt as num_traits::Zero>::zero(), t.inv().unwrap()],
        ]);
        assert!(a.det().is_one());
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
    }
}
