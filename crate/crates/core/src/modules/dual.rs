//! Hom into R, the R-dual, and the evaluation map `X → X**`.

use super::{ops, Module, Morphism};
use crate::exactla::{Accumulator, Echelon, Matrix, SVec, Subspace};
use std::sync::Arc;

/// Basis of `{y ∈ N^μ : Σ_j z_ij y_j = 0 for every relation z_i of M}`,
/// i.e. homomorphisms `M → N` recorded by their values on generators.
pub(crate) fn hom_solutions(m: &Module, n: &Module) -> Vec<SVec> {
    let f = m.field();
    let d = m.ring().dim();
    let dn = n.dim();
    let mu = m.mu();
    let mut e = Echelon::new(f, mu * dn);
    for z in m.relations() {
        let mut blocks: Vec<Vec<u32>> = vec![vec![0; d]; mu];
        for &(idx, x) in z {
            blocks[idx as usize / d][idx as usize % d] = x;
        }
        let acts: Vec<(usize, crate::exactla::SparseMatrix)> = blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.iter().any(|&x| x != 0))
            .map(|(j, b)| (j, n.element_action(b)))
            .collect();
        for q in 0..dn {
            let mut row: SVec = Vec::new();
            for (j, a) in &acts {
                let off = (j * dn) as u32;
                row.extend(a.row(q).iter().map(|&(c, x)| (c + off, x)));
            }
            if !row.is_empty() {
                e.insert(&row);
            }
        }
    }
    e.kernel()
}

/// Matrix of the homomorphism `M → N` sending generator `j` to `y_j`.
pub(crate) fn hom_matrix(m: &Module, n: &Module, y: &[(u32, u32)]) -> Matrix {
    let f = m.field();
    let d = m.ring().dim();
    let dn = n.dim();
    let mu = m.mu();
    let mut ys: Vec<SVec> = vec![Vec::new(); mu];
    for &(idx, x) in y {
        ys[idx as usize / dn].push((idx % dn as u32, x));
    }
    let mut acc = Accumulator::new(f, dn);
    // images[j*d + l] = A_l y_j
    let images: Vec<SVec> = (0..mu * d).map(|jl| n.act_sparse(jl % d, &ys[jl / d], &mut acc)).collect();
    let solver = m.cover_solver();
    let mut cols = Vec::with_capacity(m.dim());
    for c in 0..m.dim() {
        let mut e = vec![0u32; m.dim()];
        e[c] = 1;
        let w = solver.solve_unchecked(&e);
        for (jl, &x) in w.iter().enumerate() {
            if x != 0 {
                acc.add_scaled(x, &images[jl]);
            }
        }
        cols.push(acc.take());
    }
    Matrix::from_sparse_columns(f, dn, &cols)
}

/// `X* = Hom(X, R)` as a submodule of `R^μ`: a functional is recorded by
/// its values on the minimal generators.
#[derive(Clone, Debug)]
pub struct Dual {
    pub module: Arc<Module>,
    /// Basis of X* inside `R^μ(X)`.
    pub functionals: Vec<SVec>,
    pivots: Vec<u32>,
}

impl Dual {
    /// Coordinates in X* of an element of `R^μ` lying in X*.
    pub fn read(&self, v: &[u32]) -> Vec<u32> {
        self.pivots.iter().map(|&p| v[p as usize]).collect()
    }
}

/// Result of the evaluation map `φ_X : X → X**`.
#[derive(Clone, Debug)]
pub struct Evaluation {
    pub phi: Morphism,
    pub torsionless: bool,
    pub reflexive: bool,
}

impl Module {
    pub fn dual_data(&self) -> &Dual {
        self.cache.dual.get_or_init(|| {
            let r = Module::regular(self.ring());
            let sol = hom_solutions(self, &r);
            let ambient = Module::free(self.ring(), self.mu());
            let s = Subspace::span_sparse(self.field(), ambient.dim(), sol.iter());
            let functionals = s.basis_sparse();
            let pivots = functionals.iter().map(|v| v[0].0).collect();
            let module = ops::submodule(&ambient, &s).0;
            Dual { module, functionals, pivots }
        })
    }

    /// `X*`.
    pub fn dual(&self) -> Arc<Module> {
        self.dual_data().module.clone()
    }

    /// `f(x)` for a functional given by its values on the generators.
    pub fn evaluate_functional(&self, functional: &[(u32, u32)], x: &[u32]) -> Vec<u32> {
        let d = self.ring().dim();
        let f = self.field();
        let w = self.lift_to_cover(x);
        let mut out = vec![0u32; d];
        let mut vals: Vec<Vec<u32>> = vec![vec![0; d]; self.mu()];
        for &(idx, c) in functional {
            vals[idx as usize / d][idx as usize % d] = c;
        }
        for (j, v) in vals.iter().enumerate() {
            if v.iter().all(|&c| c == 0) {
                continue;
            }
            let p = self.ring().mul(&w[j * d..(j + 1) * d], v);
            for (o, x) in out.iter_mut().zip(p) {
                *o = f.add(*o, x);
            }
        }
        out
    }

    /// The functional as a morphism `X → R`.
    pub fn functional_morphism(self: &Arc<Self>, functional: &[(u32, u32)]) -> Morphism {
        let cols: Vec<Vec<u32>> = (0..self.dim())
            .map(|c| {
                let mut e = vec![0u32; self.dim()];
                e[c] = 1;
                self.evaluate_functional(functional, &e)
            })
            .collect();
        let mat = Matrix::from_columns(self.field(), self.ring().dim(), &cols);
        Morphism::new_unchecked(self.clone(), Module::regular(self.ring()), mat)
    }

    /// `φ_X : X → X**`, `φ(x)(f) = f(x)`.
    pub fn evaluation_map(self: &Arc<Self>) -> Evaluation {
        let d = self.ring().dim();
        let dual = self.dual_data();
        let xs = &dual.module;
        let ddual = xs.dual_data();
        let gens: Vec<&SVec> = xs.generator_indices().iter().map(|&g| &dual.functionals[g]).collect();
        let cols: Vec<Vec<u32>> = (0..self.dim())
            .map(|c| {
                let mut e = vec![0u32; self.dim()];
                e[c] = 1;
                let mut v = vec![0u32; gens.len() * d];
                for (u, g) in gens.iter().enumerate() {
                    v[u * d..(u + 1) * d].copy_from_slice(&self.evaluate_functional(g, &e));
                }
                ddual.read(&v)
            })
            .collect();
        let mat = Matrix::from_columns(self.field(), ddual.module.dim(), &cols);
        let phi = Morphism::new_unchecked(self.clone(), ddual.module.clone(), mat);
        let r = phi.rank();
        let torsionless = r == self.dim();
        let reflexive = torsionless && r == ddual.module.dim();
        Evaluation { phi, torsionless, reflexive }
    }
}
