//! Hom spaces, the stable category, chain lifts, Ext and torsionfreeness.

mod ext;
mod grade;
mod lift;
mod stable;

pub use ext::{ext, ext1_map_kernel_dim, ext_module, ext_ring, ext_ring_plain, ExtReport};
pub use grade::{
    auslander_sequence_check, grade, grade_condition, grade_condition_literal, n_torsionfree, AuslanderReport, Grade,
};
pub use lift::{lift_morphism, syzygy_morphism, syzygy_morphism_randomized, ChainLift};
pub use stable::{factors_through_projective, projective_residue, stable_hom, ResidueMap, StableHomSpace};

use crate::exactla::{Echelon, Matrix, SVec};
use crate::modules::{hom_matrix, hom_solutions, Module, Morphism};
use std::sync::Arc;

/// `Hom_R(M, N)` with a fixed basis.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source: Arc<Module>,
    pub target: Arc<Module>,
    pub basis: Vec<Morphism>,
    /// Basis as values on the generators of the source.
    values: Vec<SVec>,
    ech: Echelon,
}

/// Values of `f` on the minimal generators of its source, as a vector of
/// `N^μ`.
pub fn generator_values(f: &Morphism) -> SVec {
    let dn = f.target().dim();
    let mut out = Vec::new();
    for (j, &g) in f.source().generator_indices().iter().enumerate() {
        for (i, x) in f.matrix().column(g).into_iter().enumerate() {
            if x != 0 {
                out.push(((j * dn + i) as u32, x));
            }
        }
    }
    out
}

/// Basis of `Hom(M, N)` computed from a presentation of `M`.
pub fn hom_basis(m: &Arc<Module>, n: &Arc<Module>) -> HomSpace {
    let values = hom_solutions(m, n);
    let basis = values.iter().map(|y| Morphism::new_unchecked(m.clone(), n.clone(), hom_matrix(m, n, y))).collect();
    let mut ech = Echelon::new(m.field(), m.mu() * n.dim());
    for v in &values {
        ech.insert(v);
    }
    HomSpace { source: m.clone(), target: n.clone(), basis, values, ech }
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `f` in the basis. Basis vectors carry a unit at a
    /// distinct free column of the solution system, read off there.
    pub fn coordinates(&self, f: &Morphism) -> Vec<u32> {
        let v = generator_values(f);
        let mut dense = vec![0u32; self.ech.ncols()];
        for &(i, x) in &v {
            dense[i as usize] = x;
        }
        self.values.iter().map(|b| dense[b.last().map_or(0, |e| e.0 as usize)]).collect()
    }

    /// `Σ c_i basis_i`.
    pub fn combine(&self, c: &[u32]) -> Morphism {
        let f = self.source.field();
        let mut mat = Matrix::zeros(f, self.target.dim(), self.source.dim());
        for (b, &x) in self.basis.iter().zip(c) {
            if x != 0 {
                mat = mat.add(&b.matrix().scale(x));
            }
        }
        Morphism::new_unchecked(self.source.clone(), self.target.clone(), mat)
    }

    pub fn contains(&self, f: &Morphism) -> bool {
        let v = generator_values(f);
        let mut e = self.ech.clone();
        e.reduce(&v).is_empty() && f.is_equivariant()
    }
}

/// `dim Hom(M, N)` by solving `X A_l = A_l X` for all `l` directly.
pub fn hom_dim_commuting(m: &Module, n: &Module) -> usize {
    let f = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    // Unknown X is dn×dm, entry (i,j) at index i*dm + j.
    let mut e = Echelon::new(f, dn * dm);
    for l in 1..m.ring().dim() {
        let am = m.action(l).to_dense();
        let an = n.action(l).to_dense();
        for i in 0..dn {
            for j in 0..dm {
                // (X A)_{ij} − (A X)_{ij}
                let mut row: Vec<(u32, u32)> = Vec::new();
                for k in 0..dm {
                    let x = am.get(k, j);
                    if x != 0 {
                        row.push(((i * dm + k) as u32, x));
                    }
                }
                for k in 0..dn {
                    let x = an.get(i, k);
                    if x != 0 {
                        row.push(((k * dm + j) as u32, f.neg(x)));
                    }
                }
                row.sort_unstable_by_key(|e| e.0);
                let mut merged: Vec<(u32, u32)> = Vec::with_capacity(row.len());
                for (c, x) in row {
                    match merged.last_mut() {
                        Some(last) if last.0 == c => last.1 = f.add(last.1, x),
                        _ => merged.push((c, x)),
                    }
                }
                merged.retain(|e| e.1 != 0);
                e.insert(&merged);
            }
        }
    }
    dn * dm - e.rank()
}

#[cfg(test)]
mod tests;
