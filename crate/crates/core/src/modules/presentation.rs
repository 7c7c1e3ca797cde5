//! Matrices over R, presentations, and the transpose.

use super::cover::free_act;
use super::{ops, Module, Morphism};
use crate::algebra::{Algebra, RingElement};
use crate::error::{Error, Result};
use crate::exactla::{Accumulator, Matrix, SVec, Subspace};
use std::sync::Arc;

/// A matrix with entries in R; as a map it sends `R^cols → R^rows`.
#[derive(Clone, Debug)]
pub struct RingMatrix {
    ring: Arc<Algebra>,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<u32>>,
}

/// A presentation `R^{r₁} → R^{r₀}`; the module presented is the cokernel.
pub type PresentationMatrix = RingMatrix;

impl PartialEq for RingMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

impl RingMatrix {
    pub fn zero(ring: &Arc<Algebra>, rows: usize, cols: usize) -> Self {
        RingMatrix { ring: ring.clone(), rows, cols, entries: vec![vec![0; ring.dim()]; rows * cols] }
    }

    pub fn identity(ring: &Arc<Algebra>, n: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i][0] = 1;
        }
        m
    }

    pub fn from_elements(ring: &Arc<Algebra>, rows: usize, cols: usize, entries: Vec<RingElement>) -> Result<Self> {
        if entries.len() != rows * cols || entries.iter().any(|e| e.coeffs.len() != ring.dim()) {
            return Err(Error::Parse("ring matrix has wrong shape".into()));
        }
        Ok(RingMatrix { ring: ring.clone(), rows, cols, entries: entries.into_iter().map(|e| e.coeffs).collect() })
    }

    /// Parse rows of element strings. `cols` is needed when there are no rows.
    pub fn from_strings(ring: &Arc<Algebra>, rows: &[Vec<String>], cols: Option<usize>) -> Result<Self> {
        let c = rows.first().map(Vec::len).or(cols).unwrap_or(0);
        if rows.iter().any(|r| r.len() != c) {
            return Err(Error::Parse("presentation rows have different lengths".into()));
        }
        let mut entries = Vec::with_capacity(rows.len() * c);
        for r in rows {
            for s in r {
                entries.push(ring.parse_element(s)?.coeffs);
            }
        }
        Ok(RingMatrix { ring: ring.clone(), rows: rows.len(), cols: c, entries })
    }

    /// Build from columns given as vectors of `R^rows`.
    pub fn from_columns(ring: &Arc<Algebra>, rows: usize, columns: &[SVec]) -> Self {
        let d = ring.dim();
        let mut m = Self::zero(ring, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            for &(idx, x) in c {
                let (i, l) = (idx as usize / d, idx as usize % d);
                m.entries[i * m.cols + j][l] = x;
            }
        }
        m
    }

    pub fn ring(&self) -> &Arc<Algebra> {
        &self.ring
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn get(&self, i: usize, j: usize) -> &[u32] {
        &self.entries[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, r: Vec<u32>) {
        self.entries[i * self.cols + j] = r;
    }

    pub fn transpose(&self) -> RingMatrix {
        let mut t = Self::zero(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).to_vec();
            }
        }
        t
    }

    pub fn mul(&self, other: &RingMatrix) -> RingMatrix {
        assert_eq!(self.cols, other.rows, "ring matrix product shape mismatch");
        let f = self.ring.field();
        let mut out = Self::zero(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = vec![0u32; self.ring.dim()];
                for k in 0..self.cols {
                    let p = self.ring.mul(self.get(i, k), other.get(k, j));
                    for (a, x) in acc.iter_mut().zip(p) {
                        *a = f.add(*a, x);
                    }
                }
                out.entries[i * other.cols + j] = acc;
            }
        }
        out
    }

    /// All entries lie in 𝔪.
    pub fn is_minimal(&self) -> bool {
        self.entries.iter().all(|e| e[0] == 0)
    }

    /// Column `j` as a vector of `R^rows`.
    pub fn column(&self, j: usize) -> SVec {
        let d = self.ring.dim();
        let mut out = Vec::new();
        for i in 0..self.rows {
            for (l, &x) in self.get(i, j).iter().enumerate() {
                if x != 0 {
                    out.push(((i * d + l) as u32, x));
                }
            }
        }
        out
    }

    /// Image of `v ∈ R^cols`.
    pub fn apply(&self, v: &[(u32, u32)]) -> SVec {
        let d = self.ring.dim();
        let mut acc = Accumulator::new(self.ring.field(), self.rows * d);
        let mut blocks: Vec<Vec<u32>> = vec![vec![0; d]; self.cols];
        for &(idx, x) in v {
            blocks[idx as usize / d][idx as usize % d] = x;
        }
        for (j, b) in blocks.iter().enumerate() {
            if b.iter().all(|&x| x == 0) {
                continue;
            }
            for i in 0..self.rows {
                let p = self.ring.mul(self.get(i, j), b);
                for (l, x) in p.into_iter().enumerate() {
                    if x != 0 {
                        acc.add((i * d + l) as u32, x);
                    }
                }
            }
        }
        acc.take()
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.ring.format_element(self.get(i, j))).collect()).collect()
    }
}

impl Module {
    /// The cokernel of a presentation.
    pub fn from_presentation(p: &PresentationMatrix) -> Arc<Module> {
        Module::presentation_cokernel(p).0
    }

    /// The cokernel of `p` with its projection from `R^rows`. Basis vector
    /// `t` of the cokernel is the class of a standard basis vector of the
    /// free module (a non-pivot column of the relation space).
    pub fn presentation_cokernel(p: &PresentationMatrix) -> (Arc<Module>, Morphism) {
        let ring = p.ring();
        let f = ring.field();
        let n = p.rows() * ring.dim();
        let mut s = Subspace::zero(f, n);
        let mut acc = Accumulator::new(f, n);
        for j in 0..p.cols() {
            let c = p.column(j);
            for l in 0..ring.dim() {
                s.add_sparse(&free_act(ring, l, &c, &mut acc));
            }
        }
        let free = Module::free(ring, p.rows());
        ops::quotient(&free, &s)
    }

    /// The module presented by the minimal presentation of `self`, with
    /// the isomorphism onto `self` induced by the cover.
    pub fn presented(self: &Arc<Self>) -> (Arc<Module>, Morphism) {
        let (q, proj) = Module::presentation_cokernel(&self.minimal_presentation());
        let cover = self.free_cover();
        // Basis vector t of q is the class of the free basis vector at
        // the unit entry of column t of the projection.
        let mut cols = vec![Vec::new(); q.dim()];
        for c in 0..proj.source().dim() {
            let col = proj.matrix().column(c);
            if let [(t, 1)] = crate::exactla::sparsify(&col)[..] {
                if cols[t as usize].is_empty() {
                    cols[t as usize] = cover.matrix().column(c);
                }
            }
        }
        let mat = Matrix::from_columns(self.field(), self.dim(), &cols);
        (q.clone(), Morphism::new_unchecked(q, self.clone(), mat))
    }

    /// `μ(X) × μ(ΩX)` presentation with entries in 𝔪.
    pub fn minimal_presentation(&self) -> PresentationMatrix {
        let rel: Vec<SVec> = self.relations().into_iter().cloned().collect();
        RingMatrix::from_columns(self.ring(), self.mu(), &rel)
    }

    /// `Tr X`, computed from the minimal presentation.
    pub fn transpose(&self) -> Arc<Module> {
        Module::from_presentation(&self.minimal_presentation().transpose())
    }
}
