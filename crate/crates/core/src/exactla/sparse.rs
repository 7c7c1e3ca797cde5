//! Sparse vectors and compressed-row matrices over 𝔽_p.

use super::field::PrimeField;
use super::matrix::Matrix;

/// A sparse vector: strictly increasing indices, no stored zeros.
pub type SVec = Vec<(u32, u32)>;

/// Collect the nonzero entries of a dense vector.
pub fn sparsify(v: &[u32]) -> SVec {
    v.iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(i, &x)| (i as u32, x))
        .collect()
}

pub fn densify(v: &[(u32, u32)], len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for &(i, x) in v {
        out[i as usize] = x;
    }
    out
}

/// `a - f*b` for sorted sparse vectors.
pub fn axpy_sub(field: PrimeField, a: &[(u32, u32)], f: u32, b: &[(u32, u32)]) -> SVec {
    let nf = field.neg(f);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, field.mul(nf, b[j].1)));
            j += 1;
        } else {
            let x = field.mul_add(a[i].1, nf, b[j].1);
            if x != 0 {
                out.push((a[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Dense accumulation `out += f*v`.
#[inline]
pub fn axpy_into(field: PrimeField, out: &mut [u32], f: u32, v: &[(u32, u32)]) {
    if f == 0 {
        return;
    }
    for &(i, x) in v {
        let o = &mut out[i as usize];
        *o = field.mul_add(*o, f, x);
    }
}

/// Compressed sparse row matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    row_ptr: Vec<usize>,
    entries: Vec<(u32, u32)>,
}

impl SparseMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        SparseMatrix { field, rows, cols, row_ptr: vec![0; rows + 1], entries: Vec::new() }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let rows = (0..n).map(|i| vec![(i as u32, 1)]).collect();
        Self::from_rows(field, n, rows)
    }

    pub fn from_rows(field: PrimeField, cols: usize, rows: Vec<SVec>) -> Self {
        let mut row_ptr = Vec::with_capacity(rows.len() + 1);
        row_ptr.push(0);
        let mut entries = Vec::with_capacity(rows.iter().map(Vec::len).sum());
        for r in &rows {
            debug_assert!(r.iter().all(|&(c, x)| (c as usize) < cols && x != 0));
            entries.extend_from_slice(r);
            row_ptr.push(entries.len());
        }
        SparseMatrix { field, rows: rows.len(), cols, row_ptr, entries }
    }

    /// Build from sparse columns.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[SVec]) -> Self {
        let mut counts = vec![0usize; rows];
        for c in columns {
            for &(i, _) in c {
                counts[i as usize] += 1;
            }
        }
        let mut row_ptr = vec![0usize; rows + 1];
        for i in 0..rows {
            row_ptr[i + 1] = row_ptr[i] + counts[i];
        }
        let mut fill = row_ptr.clone();
        let mut entries = vec![(0u32, 0u32); row_ptr[rows]];
        for (j, c) in columns.iter().enumerate() {
            for &(i, x) in c {
                entries[fill[i as usize]] = (j as u32, x);
                fill[i as usize] += 1;
            }
        }
        SparseMatrix { field, rows, cols: columns.len(), row_ptr, entries }
    }

    pub fn from_dense(m: &Matrix) -> Self {
        let rows = (0..m.rows()).map(|i| sparsify(m.row(i))).collect();
        Self::from_rows(m.field(), m.cols(), rows)
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows, self.cols);
        for i in 0..self.rows {
            for &(j, x) in self.row(i) {
                m.set(i, j as usize, x);
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
    pub fn nnz(&self) -> usize {
        self.entries.len()
    }
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[(u32, u32)] {
        &self.entries[self.row_ptr[i]..self.row_ptr[i + 1]]
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        let r = self.row(i);
        match r.binary_search_by_key(&(j as u32), |e| e.0) {
            Ok(k) => r[k].1,
            Err(_) => 0,
        }
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        let f = self.field;
        let p = f.p() as u64;
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u64;
                for &(j, x) in self.row(i) {
                    acc = (acc + x as u64 * v[j as usize] as u64) % p;
                }
                acc as u32
            })
            .collect()
    }

    /// Product with a sparse vector, returned dense.
    pub fn mul_svec(&self, v: &[(u32, u32)]) -> Vec<u32> {
        let t = self.transpose();
        let mut out = vec![0u32; self.rows];
        for &(j, x) in v {
            axpy_into(self.field, &mut out, x, t.row(j as usize));
        }
        out
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols: Vec<SVec> = vec![Vec::new(); self.cols];
        for i in 0..self.rows {
            for &(j, x) in self.row(i) {
                cols[j as usize].push((i as u32, x));
            }
        }
        SparseMatrix::from_rows(self.field, self.rows, cols)
    }

    /// `self * other`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in sparse product");
        let f = self.field;
        let mut acc = vec![0u32; other.cols];
        let mut touched: Vec<u32> = Vec::new();
        let mut mark = vec![false; other.cols];
        let mut rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            for &(k, x) in self.row(i) {
                for &(j, y) in other.row(k as usize) {
                    let ju = j as usize;
                    if !mark[ju] {
                        mark[ju] = true;
                        touched.push(j);
                    }
                    acc[ju] = f.mul_add(acc[ju], x, y);
                }
            }
            touched.sort_unstable();
            let mut r = Vec::with_capacity(touched.len());
            for &j in &touched {
                let ju = j as usize;
                if acc[ju] != 0 {
                    r.push((j, acc[ju]));
                }
                acc[ju] = 0;
                mark[ju] = false;
            }
            touched.clear();
            rows.push(r);
        }
        SparseMatrix::from_rows(f, other.cols, rows)
    }

    /// Linear combination `sum_l c_l * M_l` of equally shaped matrices.
    pub fn combination(field: PrimeField, rows: usize, cols: usize, terms: &[(u32, &SparseMatrix)]) -> SparseMatrix {
        let mut acc = vec![0u32; cols];
        let mut mark = vec![false; cols];
        let mut touched: Vec<u32> = Vec::new();
        let mut out = Vec::with_capacity(rows);
        for i in 0..rows {
            for &(c, m) in terms {
                if c == 0 {
                    continue;
                }
                for &(j, x) in m.row(i) {
                    let ju = j as usize;
                    if !mark[ju] {
                        mark[ju] = true;
                        touched.push(j);
                    }
                    acc[ju] = field.mul_add(acc[ju], c, x);
                }
            }
            touched.sort_unstable();
            let mut r = Vec::with_capacity(touched.len());
            for &j in &touched {
                let ju = j as usize;
                if acc[ju] != 0 {
                    r.push((j, acc[ju]));
                }
                acc[ju] = 0;
                mark[ju] = false;
            }
            touched.clear();
            out.push(r);
        }
        SparseMatrix::from_rows(field, cols, out)
    }

    /// Submatrix keeping the listed rows, in order.
    pub fn select_rows(&self, idx: &[usize]) -> SparseMatrix {
        let rows = idx.iter().map(|&i| self.row(i).to_vec()).collect();
        SparseMatrix::from_rows(self.field, self.cols, rows)
    }

    pub fn into_rows(self) -> Vec<SVec> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_matches_dense() {
        let f = PrimeField::new(7).unwrap();
        let a = Matrix::from_i64(f, &[vec![1, 2, 0], vec![0, 3, 4]]);
        let b = Matrix::from_i64(f, &[vec![1, 0], vec![5, 6], vec![0, 2]]);
        let sa = SparseMatrix::from_dense(&a);
        let sb = SparseMatrix::from_dense(&b);
        assert_eq!(sa.mul(&sb).to_dense(), a.mul(&b));
        assert_eq!(sa.transpose().to_dense(), a.transpose());
        assert_eq!(sa.mul_vec(&[1, 1, 1]), a.mul_vec(&[1, 1, 1]));
    }

    #[test]
    fn axpy_cancels() {
        let f = PrimeField::new(5).unwrap();
        let a = vec![(0, 1), (3, 2)];
        let b = vec![(0, 1), (2, 4), (3, 2)];
        assert_eq!(axpy_sub(f, &a, 1, &b), vec![(2, 1)]);
    }
}

/// Dense scratch accumulator producing sorted sparse vectors.
#[derive(Clone, Debug)]
pub struct Accumulator {
    field: PrimeField,
    vals: Vec<u32>,
    mark: Vec<bool>,
    touched: Vec<u32>,
}

impl Accumulator {
    pub fn new(field: PrimeField, len: usize) -> Self {
        Accumulator { field, vals: vec![0; len], mark: vec![false; len], touched: Vec::new() }
    }

    #[inline]
    pub fn add(&mut self, i: u32, x: u32) {
        let iu = i as usize;
        if !self.mark[iu] {
            self.mark[iu] = true;
            self.touched.push(i);
        }
        self.vals[iu] = self.field.add(self.vals[iu], x);
    }

    #[inline]
    pub fn add_scaled(&mut self, c: u32, v: &[(u32, u32)]) {
        for &(i, x) in v {
            let iu = i as usize;
            if !self.mark[iu] {
                self.mark[iu] = true;
                self.touched.push(i);
            }
            self.vals[iu] = self.field.mul_add(self.vals[iu], c, x);
        }
    }

    /// Take the accumulated vector and reset.
    pub fn take(&mut self) -> SVec {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            let iu = i as usize;
            if self.vals[iu] != 0 {
                out.push((i, self.vals[iu]));
            }
            self.vals[iu] = 0;
            self.mark[iu] = false;
        }
        self.touched.clear();
        out
    }
}
