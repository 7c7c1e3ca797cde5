//! Subspaces of 𝔽_p^n held in reduced echelon form.

use super::echelon::Echelon;
use super::field::PrimeField;
use super::matrix::Matrix;
use super::sparse::{densify, sparsify, SVec};

#[derive(Clone, Debug)]
pub struct Subspace {
    ech: Echelon,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient() == other.ambient() && self.ech.rref_rows() == other.ech.rref_rows()
    }
}
impl Eq for Subspace {}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace { ech: Echelon::new(field, ambient) }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        let mut s = Self::zero(field, ambient);
        for i in 0..ambient {
            s.ech.insert(&[(i as u32, 1)]);
        }
        s
    }

    pub fn span<'a, I: IntoIterator<Item = &'a [u32]>>(field: PrimeField, ambient: usize, vectors: I) -> Self {
        let mut s = Self::zero(field, ambient);
        for v in vectors {
            s.add_dense(v);
        }
        s
    }

    pub fn span_sparse<'a, I: IntoIterator<Item = &'a SVec>>(field: PrimeField, ambient: usize, vectors: I) -> Self {
        let mut s = Self::zero(field, ambient);
        for v in vectors {
            s.ech.insert(v);
        }
        s
    }

    /// Span of the columns of `m`.
    pub fn column_space(m: &Matrix) -> Self {
        let cols = m.columns();
        Self::span(m.field(), m.rows(), cols.iter().map(Vec::as_slice))
    }

    /// Null space of `m`.
    pub fn kernel_of(m: &Matrix) -> Self {
        let k = m.echelon().kernel();
        Self::span_sparse(m.field(), m.cols(), k.iter())
    }

    pub fn field(&self) -> PrimeField {
        self.ech.field()
    }
    pub fn ambient(&self) -> usize {
        self.ech.ncols()
    }
    pub fn dim(&self) -> usize {
        self.ech.rank()
    }
    pub fn codim(&self) -> usize {
        self.ambient() - self.dim()
    }
    pub fn echelon(&self) -> &Echelon {
        &self.ech
    }

    /// Returns `true` if the vector was new.
    pub fn add_dense(&mut self, v: &[u32]) -> bool {
        self.ech.insert(&sparsify(v))
    }
    pub fn add_sparse(&mut self, v: &[(u32, u32)]) -> bool {
        self.ech.insert(v)
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.ech.contains_dense(v)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_sparse().iter().all(|v| self.contains(&densify(v, self.ambient())))
    }

    /// Basis in reduced echelon order.
    pub fn basis_sparse(&self) -> Vec<SVec> {
        self.ech.rref_rows().into_iter().cloned().collect()
    }

    pub fn basis(&self) -> Vec<Vec<u32>> {
        self.ech.rref_rows().into_iter().map(|r| densify(r, self.ambient())).collect()
    }

    /// Basis vectors as the columns of a matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_sparse_columns(self.field(), self.ambient(), &self.basis_sparse())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in other.ech.rref_rows() {
            s.ech.insert(v);
        }
        s
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let f = self.field();
        let n = self.ambient();
        let a = self.basis_sparse();
        let b = other.basis_sparse();
        let (da, db) = (a.len(), b.len());
        // Rows of [A | -B]; kernel vectors give the common elements.
        let mut rows: Vec<SVec> = vec![Vec::new(); n];
        for (j, v) in a.iter().enumerate() {
            for &(i, x) in v {
                rows[i as usize].push((j as u32, x));
            }
        }
        for (j, v) in b.iter().enumerate() {
            for &(i, x) in v {
                rows[i as usize].push(((da + j) as u32, f.neg(x)));
            }
        }
        let mut e = Echelon::new(f, da + db);
        for r in &rows {
            e.insert(r);
        }
        let mut out = Subspace::zero(f, n);
        for k in e.kernel() {
            let mut x = vec![0u32; n];
            for &(j, c) in k.iter().filter(|e| (e.0 as usize) < da) {
                super::sparse::axpy_into(f, &mut x, c, &a[j as usize]);
            }
            out.add_dense(&x);
        }
        out
    }

    /// Coordinates indexing a complement: the non-pivot positions.
    pub fn complement_indices(&self) -> Vec<usize> {
        self.ech.free_cols()
    }

    /// Image of `v` in the quotient, in the coordinates of
    /// [`complement_indices`](Self::complement_indices).
    pub fn quotient_coords(&self, v: &[u32]) -> Vec<u32> {
        let mut w = v.to_vec();
        self.ech.reduce_dense(&mut w);
        self.complement_indices().into_iter().map(|i| w[i]).collect()
    }

    pub fn reduce(&self, v: &mut [u32]) {
        self.ech.reduce_dense(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sum_and_intersection_dimensions() {
        let f = PrimeField::new(101).unwrap();
        let u = Subspace::span(f, 3, [&[1u32, 0, 0][..], &[0, 1, 0]]);
        let w = Subspace::span(f, 3, [&[0u32, 1, 0][..], &[0, 0, 1]]);
        assert_eq!(u.sum(&w).dim(), 3);
        let i = u.intersection(&w);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[0, 5, 0]));
    }

    #[test]
    fn quotient_coordinates_vanish_on_subspace() {
        let f = PrimeField::new(7).unwrap();
        let s = Subspace::span(f, 3, [&[1u32, 1, 0][..]]);
        assert_eq!(s.quotient_coords(&[2, 2, 0]), vec![0, 0]);
        assert_eq!(s.complement_indices(), vec![1, 2]);
    }
}
