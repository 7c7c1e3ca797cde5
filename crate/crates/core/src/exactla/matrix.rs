//! Dense row-major matrices over 𝔽_p.

use super::echelon::{Echelon, Solver};
use super::field::PrimeField;
use super::sparse::{densify, sparsify, SVec};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over F_{}", self.rows, self.cols, self.field.p())?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Entries are reduced modulo p.
    pub fn from_i64(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix");
            for (j, &x) in r.iter().enumerate() {
                m.data[i * cols + j] = field.from_i64(x);
            }
        }
        m
    }

    pub fn from_data(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { field, rows, cols, data }
    }

    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, &x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x;
            }
        }
        m
    }

    pub fn from_sparse_columns(field: PrimeField, rows: usize, columns: &[SVec]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        let cols = columns.len();
        for (j, c) in columns.iter().enumerate() {
            for &(i, x) in c {
                m.data[i as usize * cols + j] = x;
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: u32) {
        self.data[i * self.cols + j] = x;
    }
    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [u32] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn set_column(&mut self, j: usize, v: &[u32]) {
        for (i, &x) in v.iter().enumerate() {
            self.set(i, j, x);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    /// Matrix product, skipping zero entries of `self`.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = self.field;
        let p = f.p() as u64;
        let mut acc = vec![0u64; other.cols];
        let mut out = Self::zeros(f, self.rows, other.cols);
        // Accumulate without reduction while the sum cannot overflow.
        let limit = (u64::MAX / ((p - 1) * (p - 1)).max(1)).max(1) as usize;
        for i in 0..self.rows {
            let mut pending = 0usize;
            for (k, &a) in self.row(i).iter().enumerate() {
                if a == 0 {
                    continue;
                }
                if pending + 1 >= limit {
                    for x in acc.iter_mut() {
                        *x %= p;
                    }
                    pending = 0;
                }
                let a = a as u64;
                for (x, &b) in acc.iter_mut().zip(other.row(k)) {
                    *x += a * b as u64;
                }
                pending += 1;
            }
            for (o, x) in out.row_mut(i).iter_mut().zip(acc.iter_mut()) {
                *o = (*x % p) as u32;
                *x = 0;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let p = self.field.p() as u64;
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u64;
                for (&a, &b) in self.row(i).iter().zip(v) {
                    acc = (acc + a as u64 * b as u64) % p;
                }
                acc as u32
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut m = Self::zeros(self.field, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            m.row_mut(i)[..self.cols].copy_from_slice(self.row(i));
            m.row_mut(i)[self.cols..].copy_from_slice(other.row(i));
        }
        m
    }

    /// `[self ; other]`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Block diagonal `diag(self, other)`.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut m = Self::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, self.cols, other);
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        for i in 0..b.rows {
            self.row_mut(r0 + i)[c0..c0 + b.cols].copy_from_slice(b.row(i));
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Matrix { field: self.field, rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut m = Self::zeros(self.field, self.rows, idx.len());
        for i in 0..self.rows {
            for (k, &j) in idx.iter().enumerate() {
                m.data[i * idx.len() + k] = self.get(i, j);
            }
        }
        m
    }

    pub fn sparse_rows(&self) -> Vec<SVec> {
        (0..self.rows).map(|i| sparsify(self.row(i))).collect()
    }

    pub fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.field, self.cols);
        for i in 0..self.rows {
            e.insert(&sparsify(self.row(i)));
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Columns form a basis of `{x : self·x = 0}`.
    pub fn kernel_basis(&self) -> Matrix {
        let k = self.echelon().kernel();
        Self::from_sparse_columns(self.field, self.cols, &k)
    }

    pub fn solver(&self) -> Solver {
        Solver::new(self.field, self.cols, &self.sparse_rows())
    }

    /// Solve `self·X = B` column by column.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows);
        let s = self.solver();
        let mut cols = Vec::with_capacity(b.cols);
        for j in 0..b.cols {
            cols.push(s.solve(&b.column(j))?);
        }
        Some(Self::from_columns(self.field, self.cols, &cols))
    }

    pub fn solve_vec(&self, b: &[u32]) -> Option<Vec<u32>> {
        self.solver().solve(b)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        self.solve(&Self::identity(self.field, self.rows))
    }

    /// Rows as signed integers in the symmetric range.
    pub fn to_signed_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|&x| self.field.to_signed(x)).collect()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn from_sparse_rows(field: PrimeField, cols: usize, rows: &[SVec]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            data.extend(densify(r, cols));
        }
        Matrix { field, rows: rows.len(), cols, data }
    }
}

/// Rank of `a`.
pub fn rank(a: &Matrix) -> usize {
    a.rank()
}

/// Basis of the null space of `a`, as columns.
pub fn kernel_basis(a: &Matrix) -> Matrix {
    a.kernel_basis()
}

/// Some `x` with `a·x = b`, free variables set to zero.
pub fn solve(a: &Matrix, b: &[u32]) -> Option<Vec<u32>> {
    a.solve_vec(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f101() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    #[test]
    fn rank_of_dependent_rows() {
        let a = Matrix::from_i64(f101(), &[vec![1, 2], vec![2, 4]]);
        assert_eq!(rank(&a), 1);
        assert_eq!(kernel_basis(&a).cols(), 1);
        assert_eq!(solve(&a, &[1, 1]), None);
        assert!(solve(&a, &[3, 6]).is_some());
    }

    #[test]
    fn inverse_roundtrip() {
        let f = f101();
        let a = Matrix::from_i64(f, &[vec![2, 1, 0], vec![0, 1, 5], vec![7, 0, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(f, 3));
    }

    #[test]
    fn product_with_large_prime() {
        let f = PrimeField::new(2_147_483_647).unwrap();
        let a = Matrix::from_i64(f, &[vec![-1, -1, -1]]);
        let b = Matrix::from_i64(f, &[vec![-1], vec![-1], vec![-1]]);
        assert_eq!(a.mul(&b).get(0, 0), 3);
    }
}
