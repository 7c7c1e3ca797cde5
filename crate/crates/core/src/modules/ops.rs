//! Submodules, quotients, direct sums, kernels and cokernels.

use super::{Module, Morphism};
use crate::error::{Error, Result};
use crate::exactla::{Accumulator, Matrix, SVec, SparseMatrix, Subspace};
use std::sync::Arc;

const NONE: u32 = u32::MAX;

/// Submodule on an invariant subspace, with its inclusion.
///
/// Coordinates are read off at the pivot columns of the echelon basis.
pub fn submodule(x: &Arc<Module>, s: &Subspace) -> (Arc<Module>, Morphism) {
    let f = x.field();
    let d = x.ring().dim();
    let basis = s.basis_sparse();
    let pivots: Vec<u32> = basis.iter().map(|v| v[0].0).collect();
    let mut slot = vec![NONE; x.dim()];
    for (t, &p) in pivots.iter().enumerate() {
        slot[p as usize] = t as u32;
    }
    let n = basis.len();
    let mut acc = Accumulator::new(f, x.dim());
    let mut actions = vec![SparseMatrix::identity(f, n)];
    for l in 1..d {
        let cols: Vec<SVec> = basis
            .iter()
            .map(|v| {
                let w = x.act_sparse(l, v, &mut acc);
                debug_assert!(s.contains(&crate::exactla::densify(&w, x.dim())), "subspace is not invariant");
                w.iter().filter(|e| slot[e.0 as usize] != NONE).map(|&(i, c)| (slot[i as usize], c)).collect()
            })
            .collect();
        actions.push(SparseMatrix::from_columns(f, n, &cols));
    }
    let sub = Arc::new(Module::from_sparse(x.ring().clone(), n, actions));
    let incl = Matrix::from_sparse_columns(f, x.dim(), &basis);
    let m = Morphism::new_unchecked(sub.clone(), x.clone(), incl);
    (sub, m)
}

/// Quotient by an invariant subspace, with its projection.
pub fn quotient(x: &Arc<Module>, s: &Subspace) -> (Arc<Module>, Morphism) {
    let f = x.field();
    let d = x.ring().dim();
    let free = s.complement_indices();
    let mut slot = vec![NONE; x.dim()];
    for (t, &c) in free.iter().enumerate() {
        slot[c] = t as u32;
    }
    let mut ech = s.echelon().clone();
    let read = |v: &SVec| -> SVec {
        v.iter().filter(|e| slot[e.0 as usize] != NONE).map(|&(i, c)| (slot[i as usize], c)).collect()
    };
    let n = free.len();
    let mut actions = vec![SparseMatrix::identity(f, n)];
    for l in 1..d {
        let cols: Vec<SVec> = free
            .iter()
            .map(|&q| {
                let w = ech.reduce(x.act_basis(l, q));
                read(&w)
            })
            .collect();
        actions.push(SparseMatrix::from_columns(f, n, &cols));
    }
    let proj_cols: Vec<SVec> = (0..x.dim()).map(|i| read(&ech.reduce(&[(i as u32, 1)]))).collect();
    let q = Arc::new(Module::from_sparse(x.ring().clone(), n, actions));
    let proj = Matrix::from_sparse_columns(f, n, &proj_cols);
    let m = Morphism::new_unchecked(x.clone(), q.clone(), proj);
    (q, m)
}

/// A direct sum with canonical injections and projections.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Arc<Module>,
    pub injections: Vec<Morphism>,
    pub projections: Vec<Morphism>,
}

pub fn direct_sum(a: &Arc<Module>, b: &Arc<Module>) -> Result<DirectSum> {
    direct_sum_many(&[a.clone(), b.clone()])
}

pub fn direct_sum_many(parts: &[Arc<Module>]) -> Result<DirectSum> {
    let ring = parts.first().ok_or_else(|| Error::InvalidModule("empty direct sum".into()))?.ring().clone();
    if parts.iter().any(|m| !Arc::ptr_eq(m.ring(), &ring) && **m.ring() != *ring) {
        return Err(Error::InvalidModule("direct sum of modules over different rings".into()));
    }
    let f = ring.field();
    let total: usize = parts.iter().map(|m| m.dim()).sum();
    let mut actions = Vec::with_capacity(ring.dim());
    for l in 0..ring.dim() {
        let mut rows: Vec<SVec> = Vec::with_capacity(total);
        let mut off = 0u32;
        for m in parts {
            let a = m.action(l);
            for q in 0..m.dim() {
                rows.push(a.row(q).iter().map(|&(c, x)| (c + off, x)).collect());
            }
            off += m.dim() as u32;
        }
        actions.push(SparseMatrix::from_rows(f, total, rows));
    }
    let module = Arc::new(Module::from_sparse(ring, total, actions));
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    let mut off = 0;
    for m in parts {
        let mut inj = Matrix::zeros(f, total, m.dim());
        let mut proj = Matrix::zeros(f, m.dim(), total);
        for i in 0..m.dim() {
            inj.set(off + i, i, 1);
            proj.set(i, off + i, 1);
        }
        injections.push(Morphism::new_unchecked(m.clone(), module.clone(), inj));
        projections.push(Morphism::new_unchecked(module.clone(), m.clone(), proj));
        off += m.dim();
    }
    Ok(DirectSum { module, injections, projections })
}

/// `ker f` with its inclusion into the source.
pub fn kernel(f: &Morphism) -> (Arc<Module>, Morphism) {
    submodule(f.source(), &f.kernel_space())
}

/// `im f` with its inclusion into the target.
pub fn image(f: &Morphism) -> (Arc<Module>, Morphism) {
    submodule(f.target(), &f.image_space())
}

/// `coker f` with the projection from the target.
pub fn cokernel(f: &Morphism) -> (Arc<Module>, Morphism) {
    quotient(f.target(), &f.image_space())
}

/// Direct sum of two morphisms `a ⊕ b : A ⊕ B → A' ⊕ B'`.
pub fn morphism_sum(a: &Morphism, b: &Morphism) -> Result<(DirectSum, DirectSum, Morphism)> {
    let src = direct_sum(a.source(), b.source())?;
    let tgt = direct_sum(a.target(), b.target())?;
    let mat = a.matrix().block_diag(b.matrix());
    let m = Morphism::new_unchecked(src.module.clone(), tgt.module.clone(), mat);
    Ok((src, tgt, m))
}
