//! Splitting off free summands and decomposing into cyclic pieces.

use super::{direct_sum, ops, DirectSum, Module, Morphism};
use crate::exactla::{Accumulator, Echelon, Matrix, SVec, Solver, Subspace};
use std::sync::Arc;

/// `X ≅ X' ⊕ R^a` with `a` maximal.
#[derive(Clone, Debug)]
pub struct FreeSplit {
    /// `X'`, which has no free summand.
    pub rest: Arc<Module>,
    /// Inclusion `X' → X`.
    pub rest_inclusion: Morphism,
    /// Rank `a` of the free part.
    pub rank: usize,
    /// `X' ⊕ R^a`.
    pub sum: DirectSum,
    /// `X → X' ⊕ R^a`.
    pub to_sum: Morphism,
    /// `X' ⊕ R^a → X`, inverse of `to_sum`.
    pub from_sum: Morphism,
    /// The splitting `Φ : X → R^a`.
    pub projection: Morphism,
    /// The section `σ : R^a → X` with `Φσ = 1`.
    pub section: Morphism,
}

/// Residues in `k^μ` of the dual basis: row `t` is `π∘f_t` on generators.
pub(crate) fn dual_residues(x: &Module) -> Vec<Vec<u32>> {
    let d = x.ring().dim();
    let mu = x.mu();
    x.dual_data()
        .functionals
        .iter()
        .map(|v| {
            let mut r = vec![0u32; mu];
            for &(idx, c) in v {
                if (idx as usize).is_multiple_of(d) {
                    r[idx as usize / d] = c;
                }
            }
            r
        })
        .collect()
}

/// Number of free summands, as the rank of `X* → Hom(X, k)`.
pub fn free_rank(x: &Module) -> usize {
    let mut e = Echelon::new(x.field(), x.mu());
    for r in dual_residues(x) {
        e.insert_dense(&r);
    }
    e.rank()
}

impl Module {
    /// Split off a maximal free summand.
    pub fn free_summand_split(self: &Arc<Self>) -> &FreeSplit {
        self.cache.free_split.get_or_init(|| compute_free_split(self))
    }

    /// Rank of the largest free summand.
    pub fn free_rank(&self) -> usize {
        free_rank(self)
    }
}

fn compute_free_split(x: &Arc<Module>) -> FreeSplit {
    let f = x.field();
    let ring = x.ring().clone();
    let d = ring.dim();
    let dual = x.dual_data();
    let residues = dual_residues(x);
    let mut e = Echelon::new(f, x.mu());
    let mut chosen: Vec<&SVec> = Vec::new();
    for (t, r) in residues.iter().enumerate() {
        if e.insert_dense(r) {
            chosen.push(&dual.functionals[t]);
        }
    }
    let a = chosen.len();
    // Φ : X → R^a, rows grouped by functional.
    let mut phi = Matrix::zeros(f, a * d, x.dim());
    for (i, func) in chosen.iter().enumerate() {
        let m = x.functional_morphism(func);
        phi.set_block(i * d, 0, m.matrix());
    }
    let free_a = Module::free(&ring, a);
    let projection = Morphism::new_unchecked(x.clone(), free_a.clone(), phi.clone());
    let solver = Solver::new(f, x.dim(), &phi.sparse_rows());
    let mut acc = Accumulator::new(f, x.dim());
    let mut sigma_cols: Vec<SVec> = Vec::with_capacity(a * d);
    for i in 0..a {
        let mut unit = vec![0u32; a * d];
        unit[i * d] = 1;
        let m_i = solver.solve(&unit).expect("splitting functional is surjective");
        let m_i = crate::exactla::sparsify(&m_i);
        for l in 0..d {
            sigma_cols.push(x.act_sparse(l, &m_i, &mut acc));
        }
    }
    let sigma = Matrix::from_sparse_columns(f, x.dim(), &sigma_cols);
    let section = Morphism::new_unchecked(free_a.clone(), x.clone(), sigma.clone());
    let ker = Subspace::kernel_of(&phi);
    let (rest, rest_inclusion) = ops::submodule(x, &ker);
    let sum = direct_sum(&rest, &free_a).expect("same ring");
    // x ↦ (coords(x − σΦx), Φx)
    let proj_rest = Matrix::identity(f, x.dim()).sub(&sigma.mul(&phi));
    let pivots: Vec<usize> = ker.basis_sparse().iter().map(|v| v[0].0 as usize).collect();
    let to_rest = proj_rest.select_rows(&pivots);
    let to_sum_mat = to_rest.vstack(&phi);
    let from_sum_mat = rest_inclusion.matrix().hstack(&sigma);
    let to_sum = Morphism::new_unchecked(x.clone(), sum.module.clone(), to_sum_mat);
    let from_sum = Morphism::new_unchecked(sum.module.clone(), x.clone(), from_sum_mat);
    FreeSplit { rest, rest_inclusion, rank: a, sum, to_sum, from_sum, projection, section }
}

/// A cyclic summand `R·g ≅ R/I`.
#[derive(Clone, Debug)]
pub struct CyclicPiece {
    pub generator: SVec,
    /// `I = ann(g)`.
    pub ideal: Subspace,
}

/// One summand of a direct sum decomposition of a module.
#[derive(Clone, Debug)]
pub enum Piece {
    Cyclic(CyclicPiece),
    /// A summand with no cheap cyclic description.
    General { module: Arc<Module>, inclusion: Morphism },
}

impl Piece {
    pub fn dim(&self, ring_dim: usize) -> usize {
        match self {
            Piece::Cyclic(c) => ring_dim - c.ideal.dim(),
            Piece::General { module, .. } => module.dim(),
        }
    }
}

impl Module {
    /// Internal direct sum decomposition: copies of k split off the socle,
    /// then the rest as a sum of copies of one `R/I` when the dimension
    /// count allows, otherwise as a single general piece.
    pub fn pieces(self: &Arc<Self>) -> &[Piece] {
        self.cache.pieces.get_or_init(|| compute_pieces(self))
    }
}

fn compute_pieces(x: &Arc<Module>) -> Vec<Piece> {
    let f = x.field();
    let n = x.dim();
    let d = x.ring().dim();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let maximal = x.ring().maximal_ideal().clone();
    let mut span = x.radical().clone();
    for v in x.socle().basis_sparse() {
        if span.add_sparse(&v) {
            out.push(Piece::Cyclic(CyclicPiece { generator: v, ideal: maximal.clone() }));
        }
    }
    let mut rest = x.radical().clone();
    for q in 0..n {
        if span.add_sparse(&[(q as u32, 1)]) {
            rest.add_sparse(&[(q as u32, 1)]);
        }
    }
    if rest.dim() == 0 {
        return out;
    }
    let (sub, incl) = ops::submodule(x, &rest);
    let mu = sub.mu();
    let ann = sub.annihilator();
    if sub.dim() == mu * (d - ann.dim()) {
        for &g in sub.generator_indices() {
            let generator = crate::exactla::sparsify(&incl.matrix().column(g));
            out.push(Piece::Cyclic(CyclicPiece { generator, ideal: ann.clone() }));
        }
    } else {
        out.push(Piece::General { module: sub, inclusion: incl });
    }
    let _ = f;
    out
}
