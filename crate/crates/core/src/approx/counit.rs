//! The counit `ψⁿ_M : TrΩⁿTrΩⁿM → M` and the transpose of a morphism.

use crate::error::{Error, Result};
use crate::exactla::{densify, sparsify, Matrix, SVec};
use crate::homology::lift_morphism;
use crate::modules::{Module, Morphism, RingMatrix};
use std::sync::Arc;

/// For each basis vector of a cokernel of a free module, a free basis
/// index mapping onto it.
pub(crate) fn quotient_section(proj: &Morphism) -> Vec<usize> {
    let mut out = vec![usize::MAX; proj.target().dim()];
    for c in 0..proj.source().dim() {
        if let [(t, 1)] = sparsify(&proj.matrix().column(c))[..] {
            if out[t as usize] == usize::MAX {
                out[t as usize] = c;
            }
        }
    }
    debug_assert!(out.iter().all(|&c| c != usize::MAX));
    out
}

/// The map of cokernels `coker(a) → coker(b)` induced by a map of free
/// modules `h` with `h(im a) ⊆ im b`.
fn induced_on_cokernels(h: &RingMatrix, src: &Morphism, tgt: &Morphism) -> Morphism {
    let f = src.source().field();
    let cols: Vec<Vec<u32>> = quotient_section(src)
        .into_iter()
        .map(|c| tgt.apply(&densify(&h.apply(&[(c as u32, 1)]), tgt.source().dim())))
        .collect();
    let mat = Matrix::from_columns(f, tgt.target().dim(), &cols);
    Morphism::new_unchecked(src.target().clone(), tgt.target().clone(), mat)
}

/// Generator images of a chain-lift component as a ring matrix.
fn ring_matrix_of(ring: &Arc<crate::algebra::Algebra>, m: &Matrix, rows: usize) -> RingMatrix {
    let d = ring.dim();
    let cols: Vec<SVec> = (0..m.cols() / d).map(|j| sparsify(&m.column(j * d))).collect();
    RingMatrix::from_columns(ring, rows, &cols)
}

/// `Tr f : Tr N → Tr M` for `f : M → N`, on the transposes built by
/// [`Module::transpose`].
pub fn transpose_morphism(f: &Morphism) -> Morphism {
    let (m, n) = (f.source(), f.target());
    let ring = m.ring();
    let lift = lift_morphism(f, 1);
    let f1 = ring_matrix_of(ring, &lift.maps[1], n.syzygy(1).mu());
    let (_, pm) = Module::presentation_cokernel(&m.minimal_presentation().transpose());
    let (_, pn) = Module::presentation_cokernel(&n.minimal_presentation().transpose());
    induced_on_cokernels(&f1.transpose(), &pn, &pm)
}

/// `ψⁿ_M`. The identity of `T = TrΩⁿM` is lifted to a chain map from the
/// dualized resolution `P_{n+1}* ← ⋯ ← P_0*` into the minimal resolution
/// `Q•` of `T`; dualizing its last component gives `Q_{n+1}* → P_0 → M`,
/// which kills the image of `Q_n*`.
pub fn counit_psi(m: &Arc<Module>, n: usize) -> Result<Morphism> {
    let ring = m.ring();
    let d = ring.dim();
    let om: Vec<Arc<Module>> = (0..=n + 1).map(|i| m.syzygy(i)).collect();
    // d(i) : P_i → P_{i-1}
    let dmat = |i: usize| om[i - 1].minimal_presentation();
    let (t, eps) = Module::presentation_cokernel(&dmat(n + 1).transpose());
    let ot: Vec<Arc<Module>> = (0..=n + 1).map(|j| t.syzygy(j)).collect();

    let mut cols: Vec<SVec> = (0..om[n + 1].mu())
        .map(|c| sparsify(&t.lift_to_cover(&eps.matrix().column(c * d))))
        .collect();
    let mut lambda = RingMatrix::from_columns(ring, t.mu(), &cols);
    for j in 1..=n + 1 {
        let del = dmat(n + 2 - j).transpose();
        let prev = &ot[j - 1];
        cols = (0..del.cols())
            .map(|c| {
                let u = lambda.apply(&del.column(c));
                debug_assert!(prev.free_cover().apply(&densify(&u, prev.cover_dim())).iter().all(|&x| x == 0));
                let z = prev.syzygy_data().read(&u);
                sparsify(&ot[j].lift_to_cover(&densify(&z, ot[j].dim())))
            })
            .collect();
        lambda = RingMatrix::from_columns(ring, ot[j].mu(), &cols);
    }

    let (s, eps_s) = Module::presentation_cokernel(&ot[n].minimal_presentation().transpose());
    let dual_lambda = lambda.transpose();
    let cover = m.free_cover();
    let image = |v: &[(u32, u32)]| cover.apply(&densify(&dual_lambda.apply(v), cover.source().dim()));

    // ε λ^T δ^T = 0
    let delta_t = ot[n].minimal_presentation().transpose();
    let mut acc = crate::exactla::Accumulator::new(m.field(), eps_s.source().dim());
    for c in 0..delta_t.cols() {
        let col = delta_t.column(c);
        for l in 0..d {
            let v = crate::modules::free_act(ring, l, &col, &mut acc);
            if image(&v).iter().any(|&x| x != 0) {
                return Err(Error::Internal("counit does not vanish on the relations".into()));
            }
        }
    }
    let cols: Vec<Vec<u32>> = quotient_section(&eps_s).into_iter().map(|c| image(&[(c as u32, 1)])).collect();
    let mat = Matrix::from_columns(m.field(), m.dim(), &cols);
    Morphism::new(s, m.clone(), mat).map_err(|e| Error::Internal(format!("counit: {e}")))
}
