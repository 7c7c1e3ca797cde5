use super::counit::quotient_section;
use super::{
    ab_approximation, functionals_map, left_approximation, require_in_e, stack, SeqKind, ShortExactSeq,
};
use crate::error::{Error, Result};
use crate::exactla::Subspace;
use crate::invariants::xi_n;
use crate::modules::{cokernel, direct_sum, quotient, Module, Morphism};
use std::sync::Arc;

/// Components of a left proj-approximation of `X` relative to `f : X → M`:
/// lifts of minimal generators of `X* / f*(M*)`.
fn relative_approximation(f: &Morphism) -> Morphism {
    let (x, m) = (f.source(), f.target());
    let d = x.ring().dim();
    let dual = x.dual_data();
    let mut pulled = Subspace::zero(x.field(), dual.module.dim());
    let xgens = x.generators();
    for psi in &m.dual_data().functionals {
        let mut v = vec![0u32; x.mu() * d];
        for (j, g) in xgens.iter().enumerate() {
            v[j * d..(j + 1) * d].copy_from_slice(&m.evaluate_functional(psi, &f.apply(g)));
        }
        pulled.add_dense(&dual.read(&v));
    }
    let (q, proj) = quotient(&dual.module, &pulled);
    let section = quotient_section(&proj);
    let gens: Vec<_> = q.generator_indices().iter().map(|&g| &dual.functionals[section[g]]).collect();
    functionals_map(x, &gens)
}

/// Dimension check of `0 → Y* → (M⊕P)* → X* → 0`.
fn dual_sequence_exact(x: &Arc<Module>, mid: &Arc<Module>, y: &Arc<Module>, inj: &Morphism) -> bool {
    let (xs, ms, ys) = (x.dual_data(), mid.dual_data(), y.dual_data());
    if ms.functionals.len() != xs.functionals.len() + ys.functionals.len() {
        return false;
    }
    // Restrictions of the functionals on mid must span X*.
    let d = x.ring().dim();
    let xgens = x.generators();
    let mut span = Subspace::zero(x.field(), xs.module.dim());
    for phi in &ms.functionals {
        let mut v = vec![0u32; x.mu() * d];
        for (j, g) in xgens.iter().enumerate() {
            v[j * d..(j + 1) * d].copy_from_slice(&mid.evaluate_functional(phi, &inj.apply(g)));
        }
        span.add_dense(&xs.read(&v));
    }
    span.dim() == xs.functionals.len()
}

/// The n-origin extension `0 → X → M ⊕ P → Y → 0` with `X → M` the minimal
/// n-AB approximation and `X → P` a left proj-approximation relative to it.
pub fn origin_extension(m: &Arc<Module>, n: usize) -> Result<ShortExactSeq> {
    require_in_e(m, n)?;
    let ab = ab_approximation(m, n, true)?;
    let f = &ab.surj;
    let x = &ab.mid;
    let s = relative_approximation(f);
    let sum = direct_sum(m, s.target())?;
    let fs = stack(f, &s, &sum.module);
    if !fs.is_injective() {
        return Err(Error::Internal("(f, s)ᵀ is not injective".into()));
    }
    let (_, q) = cokernel(&fs);
    if !dual_sequence_exact(x, &sum.module, q.target(), &fs) {
        return Err(Error::Internal("dual sequence is not exact".into()));
    }
    ShortExactSeq::new(fs, q, SeqKind::Origin(n), m.clone())
}

/// Whether `(f, t)ᵀ` is injective for some `t : X → Q` with `Q` free; the
/// witness is `0` when `f` is already injective, otherwise a left
/// proj-approximation `s` (which works whenever any `t` does).
pub fn represented_by_monomorphisms(f: &Morphism) -> (bool, Morphism) {
    let x = f.source();
    if f.is_injective() {
        return (true, Morphism::zero(x, &Module::free(x.ring(), 0)));
    }
    let s = left_approximation(x);
    let sum = direct_sum(f.target(), s.target()).expect("same ring");
    (stack(f, &s, &sum.module).is_injective(), s)
}

#[derive(Clone, Debug)]
pub enum Witness {
    /// `f : M → Z` with `Z` free; `residue_nonzero` records `f ⊗ k ≠ 0`.
    Map { f: Morphism, residue_nonzero: bool },
    /// `ξ(n, M) = 0`.
    None,
}

/// For `M ∈ ℰₙ`: `f : M → Z = coker (p, s)ᵀ`, with `p` the minimal n-AB
/// approximation and `s` a left proj-approximation of its middle term.
pub fn witness_map(m: &Arc<Module>, n: usize) -> Result<Witness> {
    require_in_e(m, n)?;
    if xi_n(m, n) == 0 {
        return Ok(Witness::None);
    }
    let ab = ab_approximation(m, n, true)?;
    let s = left_approximation(&ab.mid);
    let sum = direct_sum(m, s.target())?;
    let (z, q) = cokernel(&stack(&ab.surj, &s, &sum.module));
    if !z.syzygy(1).is_zero() {
        return Err(Error::Internal("witness target is not free".into()));
    }
    let f = q.compose(&sum.injections[0]);
    let residue_nonzero = !f.tensor_residue_is_zero();
    Ok(Witness::Map { f, residue_nonzero })
}
