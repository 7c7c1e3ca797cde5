use super::counit::quotient_section;
use super::{
    ab_approximation, corestrict, functional_kernel, left_approximation, require_in_h, stack, SeqKind,
    ShortExactSeq,
};
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::modules::{cokernel, direct_sum, Module, Morphism};
use std::sync::Arc;

/// The n-FPD hull `0 → M → Y → X → 0`: with `f : W → M` the minimal n-AB
/// approximation and `s : W → R^m` a left proj-approximation, `Y` is the
/// pushout `coker (f, s)ᵀ` and `X = coker s`. Common free summands of `Y`
/// and `X` are peeled when `minimize` is set.
pub fn fpd_hull(m: &Arc<Module>, n: usize, minimize: bool) -> Result<ShortExactSeq> {
    require_in_h(m, n)?;
    let ab = ab_approximation(m, n, true)?;
    let w = &ab.mid;
    if !w.evaluation_map().torsionless {
        return Err(Error::Internal("middle term of the minimal approximation is not torsionless".into()));
    }
    let s = left_approximation(w);
    let sum = direct_sum(m, s.target())?;
    let (_, to_y) = cokernel(&stack(&ab.surj, &s, &sum.module));
    let (_, to_x) = cokernel(&s);
    let j = to_y.compose(&sum.injections[0]);
    // [(m, p)] ↦ [p]
    let cols: Vec<Vec<u32>> = quotient_section(&to_y)
        .into_iter()
        .map(|c| to_x.apply(&sum.projections[1].matrix().column(c)))
        .collect();
    let q = Morphism::new_unchecked(to_y.target().clone(), to_x.target().clone(), Matrix::from_columns(m.field(), to_x.target().dim(), &cols));
    let (j, q) = if minimize { peel(j, q) } else { (j, q) };
    ShortExactSeq::new(j, q, SeqKind::Hull(n), m.clone())
}

/// A functional `ψ` on `X` with `ψ∘q` onto `R` splits `R` off both `Y` and
/// `X`; `M` stays inside `ker ψq`.
fn peel(mut j: Morphism, mut q: Morphism) -> (Morphism, Morphism) {
    loop {
        let (y, x) = (q.source().clone(), q.target().clone());
        let funcs = &x.dual_data().functionals;
        let gens = y.generators();
        let hit = funcs.iter().find(|psi| gens.iter().any(|g| x.evaluate_functional(psi, &q.apply(g))[0] != 0));
        let Some(psi) = hit else { return (j, q) };
        let psi_q = x.functional_morphism(psi).compose(&q);
        let ky = crate::exactla::Subspace::kernel_of(psi_q.matrix());
        let (_, incl_y) = crate::modules::submodule(&y, &ky);
        let (_, incl_x) = functional_kernel(&x, psi);
        j = corestrict(&j, &incl_y);
        q = corestrict(&q.compose(&incl_y), &incl_x);
    }
}

/// Add `R^r` to the middle and right terms.
pub fn pad_hull(seq: &ShortExactSeq, r: usize) -> Result<ShortExactSeq> {
    let free = Module::free(seq.mid.ring(), r);
    let mid = direct_sum(&seq.mid, &free)?;
    let right = direct_sum(&seq.right, &free)?;
    let f = seq.mid.field();
    let inj = Morphism::new_unchecked(
        seq.left.clone(),
        mid.module.clone(),
        seq.inj.matrix().vstack(&Matrix::zeros(f, free.dim(), seq.left.dim())),
    );
    let surj = Morphism::new_unchecked(
        mid.module.clone(),
        right.module.clone(),
        seq.surj.matrix().block_diag(&Matrix::identity(f, free.dim())),
    );
    ShortExactSeq::new(inj, surj, seq.kind, seq.base.clone())
}
