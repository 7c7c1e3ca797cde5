//! Incremental reduced row echelon form over sparse rows.
//!
//! Rows are kept fully reduced: every stored row has a leading 1 and zeros in
//! all other pivot columns. The reduced echelon form of a row space is unique,
//! so results do not depend on insertion order.

use super::field::PrimeField;
use super::sparse::{axpy_into, axpy_sub, SVec};

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    ncols: usize,
    rows: Vec<SVec>,
    pivot_row: Vec<u32>,
    scratch: Vec<u32>,
    mark: Vec<bool>,
    touched: Vec<u32>,
}

impl Echelon {
    pub fn new(field: PrimeField, ncols: usize) -> Self {
        Echelon {
            field,
            ncols,
            rows: Vec::new(),
            pivot_row: vec![NONE; ncols],
            scratch: Vec::new(),
            mark: Vec::new(),
            touched: Vec::new(),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }
    pub fn ncols(&self) -> usize {
        self.ncols
    }
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pivot column of every stored row, ascending, with the row index.
    pub fn pivots(&self) -> Vec<(usize, usize)> {
        (0..self.ncols)
            .filter(|&c| self.pivot_row[c] != NONE)
            .map(|c| (c, self.pivot_row[c] as usize))
            .collect()
    }

    pub fn pivot_cols(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_row[c] != NONE).collect()
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivot_row[c] != NONE
    }

    pub fn row(&self, r: usize) -> &SVec {
        &self.rows[r]
    }

    /// Rows sorted by pivot column (the reduced echelon form).
    pub fn rref_rows(&self) -> Vec<&SVec> {
        self.pivots().into_iter().map(|(_, r)| &self.rows[r]).collect()
    }

    /// Columns without pivots, ascending.
    pub fn free_cols(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_row[c] == NONE).collect()
    }

    fn ensure_scratch(&mut self) {
        if self.scratch.len() != self.ncols {
            self.scratch = vec![0; self.ncols];
            self.mark = vec![false; self.ncols];
        }
    }

    /// Reduce `v` against the stored rows, returning the residual.
    fn residual(&mut self, v: &[(u32, u32)]) -> SVec {
        self.ensure_scratch();
        let f = self.field;
        for &(c, x) in v {
            self.scratch[c as usize] = x;
            self.mark[c as usize] = true;
            self.touched.push(c);
        }
        for &(c, _) in v {
            let r = self.pivot_row[c as usize];
            if r == NONE {
                continue;
            }
            let coef = self.scratch[c as usize];
            if coef == 0 {
                continue;
            }
            let row = &self.rows[r as usize];
            let nf = f.neg(coef);
            for &(j, y) in row {
                let ju = j as usize;
                if !self.mark[ju] {
                    self.mark[ju] = true;
                    self.touched.push(j);
                }
                self.scratch[ju] = f.mul_add(self.scratch[ju], nf, y);
            }
        }
        self.touched.sort_unstable();
        let mut out = Vec::new();
        for &j in &self.touched {
            let ju = j as usize;
            if self.scratch[ju] != 0 {
                out.push((j, self.scratch[ju]));
            }
            self.scratch[ju] = 0;
            self.mark[ju] = false;
        }
        self.touched.clear();
        out
    }

    /// Insert a row; returns `true` when it enlarged the row space.
    pub fn insert(&mut self, v: &[(u32, u32)]) -> bool {
        let mut r = self.residual(v);
        if r.is_empty() {
            return false;
        }
        let f = self.field;
        let (c0, lead) = r[0];
        if lead != 1 {
            let inv = f.inv(lead);
            for e in r.iter_mut() {
                e.1 = f.mul(e.1, inv);
            }
        }
        for row in self.rows.iter_mut() {
            if let Ok(k) = row.binary_search_by_key(&c0, |e| e.0) {
                let coef = row[k].1;
                *row = axpy_sub(f, row, coef, &r);
            }
        }
        self.pivot_row[c0 as usize] = self.rows.len() as u32;
        self.rows.push(r);
        true
    }

    pub fn insert_dense(&mut self, v: &[u32]) -> bool {
        self.insert(&super::sparse::sparsify(v))
    }

    /// Residual of a sparse vector without changing the stored rows.
    pub fn reduce(&mut self, v: &[(u32, u32)]) -> SVec {
        self.residual(v)
    }

    /// Reduce a dense vector in place against the stored rows.
    pub fn reduce_dense(&self, v: &mut [u32]) {
        for (c, &r) in self.pivot_row.iter().enumerate() {
            if r == NONE || v[c] == 0 {
                continue;
            }
            let coef = self.field.neg(v[c]);
            axpy_into(self.field, v, coef, &self.rows[r as usize]);
        }
    }

    pub fn contains_dense(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce_dense(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Basis of the null space `{x : row·x = 0 for all rows}`, one vector
    /// per free column, ascending; each has a 1 at its free column.
    pub fn kernel(&self) -> Vec<SVec> {
        let f = self.field;
        let mut slot = vec![NONE; self.ncols];
        let free = self.free_cols();
        let mut out: Vec<SVec> = Vec::with_capacity(free.len());
        for (k, &c) in free.iter().enumerate() {
            slot[c] = k as u32;
            out.push(Vec::new());
        }
        for (pc, r) in self.pivots() {
            for &(j, x) in &self.rows[r] {
                if j as usize != pc {
                    out[slot[j as usize] as usize].push((pc as u32, f.neg(x)));
                }
            }
        }
        for (k, &c) in free.iter().enumerate() {
            out[k].push((c as u32, 1));
            out[k].sort_unstable_by_key(|e| e.0);
        }
        out
    }
}

/// Factored form of a linear system `m x = b` for repeated right-hand sides.
///
/// Solutions put zero in every free variable, so the returned solution is a
/// linear function of `b`.
#[derive(Clone, Debug)]
pub struct Solver {
    field: PrimeField,
    nrows: usize,
    ncols: usize,
    /// (pivot column, transform row over the right-hand side).
    solution_rows: Vec<(u32, SVec)>,
    /// Left kernel rows: consistency conditions on the right-hand side.
    conditions: Vec<SVec>,
}

impl Solver {
    /// Factor the matrix whose rows are given.
    pub fn new(field: PrimeField, ncols: usize, rows: &[SVec]) -> Self {
        let nrows = rows.len();
        let mut e = Echelon::new(field, ncols + nrows);
        for (i, r) in rows.iter().enumerate() {
            let mut v = r.clone();
            v.push(((ncols + i) as u32, 1));
            e.insert(&v);
        }
        let mut solution_rows = Vec::new();
        let mut conditions = Vec::new();
        for (pc, r) in e.pivots() {
            let row = &e.rows[r];
            let t: SVec = row
                .iter()
                .filter(|x| x.0 as usize >= ncols)
                .map(|&(j, x)| (j - ncols as u32, x))
                .collect();
            if pc < ncols {
                solution_rows.push((pc as u32, t));
            } else {
                conditions.push(t);
            }
        }
        Solver { field, nrows, ncols, solution_rows, conditions }
    }

    pub fn rank(&self) -> usize {
        self.solution_rows.len()
    }
    pub fn nrows(&self) -> usize {
        self.nrows
    }
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    fn dot(&self, t: &[(u32, u32)], b: &[u32]) -> u32 {
        let p = self.field.p() as u64;
        let mut acc = 0u64;
        for &(j, x) in t {
            acc = (acc + x as u64 * b[j as usize] as u64) % p;
        }
        acc as u32
    }

    pub fn is_consistent(&self, b: &[u32]) -> bool {
        self.conditions.iter().all(|t| self.dot(t, b) == 0)
    }

    /// Solve `m x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(b.len(), self.nrows, "right-hand side has wrong length");
        if !self.is_consistent(b) {
            return None;
        }
        Some(self.solve_unchecked(b))
    }

    /// Particular solution assuming consistency.
    pub fn solve_unchecked(&self, b: &[u32]) -> Vec<u32> {
        let mut x = vec![0u32; self.ncols];
        for (pc, t) in &self.solution_rows {
            x[*pc as usize] = self.dot(t, b);
        }
        x
    }
}

/// Basis of `{c : Σ c_i v_i = 0}` for sparse vectors `v_i`. Only the
/// coordinates that occur are materialized, so the ambient length may be
/// huge.
pub fn linear_relations(field: PrimeField, vectors: &[SVec]) -> Vec<Vec<u32>> {
    let mut used: Vec<u32> = vectors.iter().flat_map(|v| v.iter().map(|e| e.0)).collect();
    used.sort_unstable();
    used.dedup();
    let n = used.len();
    let k = vectors.len();
    let mut e = Echelon::new(field, n + k);
    for (i, v) in vectors.iter().enumerate() {
        let mut row: SVec = v.iter().map(|&(c, x)| (used.binary_search(&c).unwrap() as u32, x)).collect();
        row.push(((n + i) as u32, 1));
        e.insert(&row);
    }
    e.rref_rows()
        .into_iter()
        .filter(|r| r[0].0 as usize >= n)
        .map(|r| {
            let mut c = vec![0u32; k];
            for &(j, x) in r {
                c[j as usize - n] = x;
            }
            c
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::sparse::sparsify;

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    #[test]
    fn rref_is_order_independent() {
        let f = f7();
        let rows = [vec![1, 2, 3, 0], vec![2, 4, 1, 1], vec![0, 0, 5, 1]];
        let mut a = Echelon::new(f, 4);
        let mut b = Echelon::new(f, 4);
        for r in &rows {
            a.insert_dense(r);
        }
        for r in rows.iter().rev() {
            b.insert_dense(r);
        }
        assert_eq!(a.rref_rows(), b.rref_rows());
        assert_eq!(a.rank(), 3);
    }

    #[test]
    fn kernel_is_annihilated() {
        let f = f7();
        let rows = [vec![1, 2, 3, 0, 1], vec![0, 1, 1, 1, 0]];
        let mut e = Echelon::new(f, 5);
        for r in &rows {
            e.insert_dense(r);
        }
        let k = e.kernel();
        assert_eq!(k.len(), 3);
        for v in &k {
            for r in &rows {
                let s: u64 = v.iter().map(|&(j, x)| x as u64 * r[j as usize] as u64).sum();
                assert_eq!(s % 7, 0);
            }
        }
    }

    #[test]
    fn solver_detects_inconsistency() {
        let f = f7();
        let rows: Vec<SVec> = [vec![1, 2], vec![2, 4]].iter().map(|r| sparsify(r)).collect();
        let s = Solver::new(f, 2, &rows);
        assert_eq!(s.solve(&[1, 1]), None);
        let x = s.solve(&[1, 2]).unwrap();
        assert_eq!(x, vec![1, 0]);
    }
}
