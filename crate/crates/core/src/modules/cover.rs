//! Minimal free covers and syzygies.

use super::{Module, Morphism};
use crate::exactla::{Accumulator, Echelon, Matrix, SVec, Solver, Subspace};
use std::sync::Arc;

const NONE: u32 = u32::MAX;

/// Top of a module: `𝔪X` and a minimal generating set of basis vectors.
#[derive(Clone, Debug)]
pub struct Top {
    pub(crate) radical: Subspace,
    /// Basis indices whose classes form a basis of `X/𝔪X`.
    pub(crate) gens: Vec<usize>,
    /// Rows of the cover `π : R^μ → X`; column `j*d + l` is `b_l·x_j`.
    pub(crate) cover_rows: Vec<SVec>,
}

/// The kernel of the minimal cover, with its embedding into `R^μ`.
#[derive(Clone, Debug)]
pub struct Syzygy {
    pub(crate) module: Arc<Module>,
    /// Basis of ΩX as vectors of `R^μ`.
    pub(crate) embedding: Vec<SVec>,
    /// Position of the unit entry of each basis vector.
    pub(crate) coords: Vec<u32>,
    /// Inverse of `coords`.
    pub(crate) slot: Vec<u32>,
}

impl Syzygy {
    pub fn module(&self) -> &Arc<Module> {
        &self.module
    }
    pub fn embedding(&self) -> &[SVec] {
        &self.embedding
    }
    /// Coordinates in ΩX of a vector of `R^μ` known to lie in ΩX.
    pub fn read(&self, v: &[(u32, u32)]) -> SVec {
        v.iter().filter(|e| self.slot[e.0 as usize] != NONE).map(|&(i, x)| (self.slot[i as usize], x)).collect()
    }
    pub fn read_dense(&self, v: &[u32]) -> Vec<u32> {
        self.coords.iter().map(|&c| v[c as usize]).collect()
    }
}

/// `b_l · v` for `v ∈ R^r` (blockwise regular action).
pub(crate) fn free_act(module_ring: &crate::algebra::Algebra, l: usize, v: &[(u32, u32)], acc: &mut Accumulator) -> SVec {
    let d = module_ring.dim();
    for &(idx, x) in v {
        let (j, m) = (idx as usize / d, idx as usize % d);
        let base = (j * d) as u32;
        for &(q, c) in module_ring.product_sparse(l, m) {
            acc.add(base + q, module_ring.field().mul(x, c));
        }
    }
    acc.take()
}

impl Module {
    pub fn top(&self) -> &Top {
        self.cache.top.get_or_init(|| self.compute_top())
    }

    fn compute_top(&self) -> Top {
        let f = self.field();
        let d = self.ring.dim();
        let mut e = Echelon::new(f, self.dim);
        for l in 1..d {
            let t = &self.transposed_actions()[l];
            for c in 0..self.dim {
                e.insert(t.row(c));
            }
        }
        let gens = e.free_cols();
        let radical = Subspace::span_sparse(f, self.dim, e.rref_rows());
        let mut genpos = vec![NONE; self.dim];
        for (j, &g) in gens.iter().enumerate() {
            genpos[g] = j as u32;
        }
        let mut cover_rows = Vec::with_capacity(self.dim);
        for q in 0..self.dim {
            let mut row: SVec = Vec::new();
            for l in 0..d {
                for &(c, x) in self.actions[l].row(q) {
                    let j = genpos[c as usize];
                    if j != NONE {
                        row.push((j * d as u32 + l as u32, x));
                    }
                }
            }
            row.sort_unstable_by_key(|e| e.0);
            cover_rows.push(row);
        }
        Top { radical, gens, cover_rows }
    }

    /// `μ(X) = dim X/𝔪X`.
    pub fn mu(&self) -> usize {
        self.top().gens.len()
    }

    /// Basis indices used as minimal generators.
    pub fn generator_indices(&self) -> &[usize] {
        &self.top().gens
    }

    /// Minimal generators as dense vectors.
    pub fn generators(&self) -> Vec<Vec<u32>> {
        self.top()
            .gens
            .iter()
            .map(|&g| {
                let mut v = vec![0; self.dim];
                v[g] = 1;
                v
            })
            .collect()
    }

    /// Rows of the cover matrix `R^μ → X`.
    pub fn cover_rows(&self) -> &[SVec] {
        &self.top().cover_rows
    }

    /// Ambient dimension `μ·d` of the cover.
    pub fn cover_dim(&self) -> usize {
        self.mu() * self.ring.dim()
    }

    pub fn syzygy_data(&self) -> &Syzygy {
        self.cache.syzygy.get_or_init(|| self.compute_syzygy())
    }

    fn compute_syzygy(&self) -> Syzygy {
        let f = self.field();
        let d = self.ring.dim();
        let n = self.cover_dim();
        let mut e = Echelon::new(f, n);
        for r in self.cover_rows() {
            e.insert(r);
        }
        let embedding = e.kernel();
        let coords: Vec<u32> = e.free_cols().into_iter().map(|c| c as u32).collect();
        let mut slot = vec![NONE; n];
        for (t, &c) in coords.iter().enumerate() {
            slot[c as usize] = t as u32;
        }
        let s = embedding.len();
        let mut acc = Accumulator::new(f, n);
        let mut actions = Vec::with_capacity(d);
        actions.push(crate::exactla::SparseMatrix::identity(f, s));
        for l in 1..d {
            let cols: Vec<SVec> = embedding
                .iter()
                .map(|z| {
                    let w = free_act(&self.ring, l, z, &mut acc);
                    w.iter().filter(|e| slot[e.0 as usize] != NONE).map(|&(i, x)| (slot[i as usize], x)).collect()
                })
                .collect();
            actions.push(crate::exactla::SparseMatrix::from_columns(f, s, &cols));
        }
        let module = Arc::new(Module::from_sparse(self.ring.clone(), s, actions));
        Syzygy { module, embedding, coords, slot }
    }

    /// Solver for the cover `R^μ → X`.
    pub fn cover_solver(&self) -> &Solver {
        self.cache.section.get_or_init(|| Solver::new(self.field(), self.cover_dim(), self.cover_rows()))
    }

    /// Some `w ∈ R^μ` mapping to `x` under the cover.
    pub fn lift_to_cover(&self, x: &[u32]) -> Vec<u32> {
        self.cover_solver().solve_unchecked(x)
    }

    /// Relations: the generators of ΩX inside `R^μ`.
    pub fn relations(&self) -> Vec<&SVec> {
        let syz = self.syzygy_data();
        syz.module.generator_indices().iter().map(|&g| &syz.embedding[g]).collect()
    }
}

/// Ω^n of a shared module.
pub fn syzygy(m: &Arc<Module>, n: usize) -> Arc<Module> {
    let mut cur = m.clone();
    for _ in 0..n {
        cur = cur.syzygy_data().module.clone();
    }
    cur
}

impl Module {
    /// The minimal cover as a morphism `R^μ → X`.
    pub fn free_cover(self: &Arc<Self>) -> Morphism {
        let fm = Module::free(&self.ring, self.mu());
        let mat = Matrix::from_sparse_rows(self.field(), self.cover_dim(), self.cover_rows());
        Morphism::new_unchecked(fm, self.clone(), mat)
    }

    /// `Ω^n X`.
    pub fn syzygy(self: &Arc<Self>, n: usize) -> Arc<Module> {
        syzygy(self, n)
    }

    /// Inclusion `ΩX → R^μ`.
    pub fn syzygy_inclusion(self: &Arc<Self>) -> Morphism {
        let syz = self.syzygy_data();
        let fm = Module::free(&self.ring, self.mu());
        let mat = Matrix::from_sparse_columns(self.field(), self.cover_dim(), &syz.embedding);
        Morphism::new_unchecked(syz.module.clone(), fm, mat)
    }
}
