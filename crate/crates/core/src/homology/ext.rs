//! Ext groups computed from minimal resolutions.

use crate::exactla::{Accumulator, Echelon, SVec, Subspace};
use crate::modules::{free_act, hom_solutions, quotient, Module, Piece};
use std::sync::Arc;

/// Dimension of `Ext^i(M, N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtReport {
    pub degree: usize,
    pub dim: usize,
}

fn merge(f: crate::exactla::PrimeField, mut v: SVec) -> SVec {
    v.sort_unstable_by_key(|e| e.0);
    let mut out: SVec = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 = f.add(last.1, x),
            _ => out.push((i, x)),
        }
    }
    out.retain(|e| e.1 != 0);
    out
}

/// Restrictions to `ΩX` of the maps `F_X → N` sending one generator to a
/// basis vector of `N` and the others to zero, in the coordinates
/// `N^{μ(ΩX)}` used by `hom_solutions(ΩX, N)`.
fn restriction_vectors(x: &Module, n: &Module) -> Vec<SVec> {
    let f = x.field();
    let d = x.ring().dim();
    let dn = n.dim();
    let mut vecs: Vec<SVec> = vec![Vec::new(); x.mu() * dn];
    for (t, z) in x.relations().into_iter().enumerate() {
        for &(idx, c) in z {
            let (j, l) = (idx as usize / d, idx as usize % d);
            for q in 0..dn {
                for &(i, y) in n.act_basis(l, q) {
                    vecs[j * dn + q].push(((t * dn) as u32 + i, f.mul(c, y)));
                }
            }
        }
    }
    vecs.into_iter().map(|v| merge(f, v)).filter(|v| !v.is_empty()).collect()
}

fn rank_of(field: crate::exactla::PrimeField, ncols: usize, vs: &[SVec]) -> usize {
    let mut e = Echelon::new(field, ncols);
    for v in vs {
        e.insert(v);
    }
    e.rank()
}

/// `dim Ext^1(X, N) = dim Hom(ΩX, N) − dim(restrictions from F_X)`.
fn ext1(x: &Module, n: &Module) -> usize {
    let z = x.syzygy_data().module();
    let homs = hom_solutions(z, n).len();
    let res = rank_of(x.field(), z.mu() * n.dim(), &restriction_vectors(x, n));
    homs - res
}

/// `Ext^i(M, N)`, with `Ext^0 = Hom`.
pub fn ext(m: &Arc<Module>, n: &Arc<Module>, i: usize) -> ExtReport {
    let dim = if i == 0 { hom_solutions(m, n).len() } else { ext1(&m.syzygy(i - 1), n) };
    ExtReport { degree: i, dim }
}

/// `Ext^i(M, R)` straight from the resolution.
pub fn ext_ring_plain(m: &Arc<Module>, i: usize) -> ExtReport {
    ext(m, &Module::regular(m.ring()), i)
}

/// `Ext^i(M, R)`, summed over a piece decomposition of `Ω^{i-1}M` so that
/// repeated cyclic summands are handled once.
pub fn ext_ring(m: &Arc<Module>, i: usize) -> ExtReport {
    if i == 0 {
        return ExtReport { degree: 0, dim: m.dual_data().functionals.len() };
    }
    let x = m.syzygy(i - 1);
    let r = Module::regular(m.ring());
    let mut memo: Vec<(Subspace, usize)> = Vec::new();
    let mut dim = 0;
    for piece in x.pieces() {
        dim += match piece {
            Piece::Cyclic(c) => match memo.iter().find(|(i, _)| *i == c.ideal) {
                Some(&(_, e)) => e,
                None => {
                    let e = ext1(&Module::ring_quotient(m.ring(), &c.ideal), &r);
                    memo.push((c.ideal.clone(), e));
                    e
                }
            },
            Piece::General { module, .. } => ext1(module, &r),
        };
    }
    ExtReport { degree: i, dim }
}

/// `Ext^i(M, R)` as an R-module: `(ΩX)*` modulo the restrictions of
/// functionals on `F_X`, where `X = Ω^{i-1}M`; `Ext^0 = M*`.
pub fn ext_module(m: &Arc<Module>, i: usize) -> Arc<Module> {
    if i == 0 {
        return m.dual();
    }
    let x = m.syzygy(i - 1);
    let f = m.field();
    let d = m.ring().dim();
    let z = x.syzygy_data().module();
    let dual = z.dual_data();
    let mu = z.mu();
    // v_j = (z_{t,j})_t ∈ R^{μ(ΩX)}
    let mut vs: Vec<SVec> = vec![Vec::new(); x.mu()];
    for (t, rel) in x.relations().into_iter().enumerate() {
        for &(idx, c) in rel {
            let (j, l) = (idx as usize / d, idx as usize % d);
            vs[j].push(((t * d + l) as u32, c));
        }
    }
    let mut acc = Accumulator::new(f, mu * d);
    let mut sub = Subspace::zero(f, dual.module.dim());
    for v in vs {
        let v = merge(f, v);
        for l in 0..d {
            let w = free_act(m.ring(), l, &v, &mut acc);
            let dense = crate::exactla::densify(&w, mu * d);
            sub.add_dense(&dual.read(&dense));
        }
    }
    quotient(&dual.module, &sub).0
}

/// `dim ker(Ext¹(X, ΩM) → Ext¹(X, F_M))`, the map induced by `ΩM ⊆ F_M`.
pub fn ext1_map_kernel_dim(x: &Arc<Module>, m: &Arc<Module>) -> usize {
    let f = x.field();
    let z = x.syzygy_data().module();
    let om = m.syzygy_data();
    let fm = Module::free(m.ring(), m.mu());
    let (dom, dfm, mz) = (om.module().dim(), fm.dim(), z.mu());
    let homs = hom_solutions(z, om.module());
    let mut target = Echelon::new(f, mz * dfm);
    for v in restriction_vectors(x, &fm) {
        target.insert(&v);
    }
    let mut acc = Accumulator::new(f, mz * dfm);
    let mut residues = Echelon::new(f, mz * dfm);
    for h in &homs {
        for &(idx, c) in h {
            let (t, q) = (idx as usize / dom, idx as usize % dom);
            let shifted: SVec = om.embedding()[q].iter().map(|&(i, y)| (i + (t * dfm) as u32, y)).collect();
            acc.add_scaled(c, &shifted);
        }
        let r = target.reduce(&acc.take());
        residues.insert(&r);
    }
    let preimage = homs.len() - residues.rank();
    let res = rank_of(f, mz * dom, &restriction_vectors(x, om.module()));
    preimage - res
}
