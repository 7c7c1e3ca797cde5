use super::{counit_psi, functional_kernel, require_in_a, SeqKind, ShortExactSeq};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, SVec};
use crate::modules::{cokernel, direct_sum, kernel, Module, Morphism};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// The n-AB approximation `0 → Y → TrΩⁿTrΩⁿM ⊕ R^μ → M → 0` with map
/// `(ψⁿ, cover)`; for `n = 0` the identity `0 → 0 → M → M → 0`.
pub fn ab_approximation(m: &Arc<Module>, n: usize, minimize: bool) -> Result<ShortExactSeq> {
    build(m, n, minimize, None)
}

/// Minimized n-AB approximation, peeling along random choices.
pub fn ab_approximation_randomized(m: &Arc<Module>, n: usize, seed: u64) -> Result<ShortExactSeq> {
    build(m, n, true, Some(&mut ChaCha8Rng::seed_from_u64(seed)))
}

fn build(m: &Arc<Module>, n: usize, minimize: bool, rng: Option<&mut ChaCha8Rng>) -> Result<ShortExactSeq> {
    let kind = SeqKind::Ab(n);
    if n == 0 {
        let z = Module::zero(m.ring());
        return ShortExactSeq::new(Morphism::zero(&z, m), Morphism::identity(m), kind, m.clone());
    }
    require_in_a(m, n)?;
    let psi = counit_psi(m, n)?;
    let free = Module::free(m.ring(), m.mu());
    let sum = direct_sum(psi.source(), &free)?;
    let cover = m.free_cover();
    let p = Morphism::new_unchecked(sum.module.clone(), m.clone(), psi.matrix().hstack(cover.matrix()));
    if !p.is_surjective() {
        return Err(Error::Internal("(ψ, cover) is not surjective".into()));
    }
    let mut p = p;
    if minimize {
        p = peel(p, rng);
    }
    let (_, inj) = kernel(&p);
    let seq = ShortExactSeq::new(inj, p, kind, m.clone())?;
    if minimize && !is_minimal_approximation(&seq) {
        return Err(Error::Internal("peeling stopped before the approximation became minimal".into()));
    }
    Ok(seq)
}

/// Constant terms `φ_t(y_j)` for the dual basis of `X` and the minimal
/// generators `y_j` of `ker p`.
fn pairing(x: &Arc<Module>, gens: &[Vec<u32>]) -> Vec<Vec<u32>> {
    x.dual_data()
        .functionals
        .iter()
        .map(|phi| gens.iter().map(|y| x.evaluate_functional(phi, y)[0]).collect())
        .collect()
}

/// Remove free summands of `X` shared with `Y = ker p` through the
/// inclusion: a functional `φ` with `φ(y)` a unit for some `y ∈ Y` splits
/// `X = ker φ ⊕ R·y` and `Y = (Y ∩ ker φ) ⊕ R·y`.
fn peel(mut p: Morphism, mut rng: Option<&mut ChaCha8Rng>) -> Morphism {
    loop {
        let x = p.source().clone();
        let (y, inj) = kernel(&p);
        if y.is_zero() {
            return p;
        }
        let gens: Vec<Vec<u32>> = y.generator_indices().iter().map(|&g| inj.matrix().column(g)).collect();
        let table = pairing(&x, &gens);
        let funcs = &x.dual_data().functionals;
        let Some(t) = table.iter().position(|row| row.iter().any(|&c| c != 0)) else { return p };
        let phi: SVec = match rng.as_deref_mut() {
            None => funcs[t].clone(),
            Some(r) => random_pivoting_functional(&x, funcs, &table, r).unwrap_or_else(|| funcs[t].clone()),
        };
        let (_, incl) = functional_kernel(&x, &phi);
        p = p.compose(&incl);
    }
}

/// A random combination of the dual basis pairing to a unit with `Y`.
fn random_pivoting_functional(x: &Module, funcs: &[SVec], table: &[Vec<u32>], rng: &mut ChaCha8Rng) -> Option<SVec> {
    let f = x.field();
    for _ in 0..64 {
        let c: Vec<u32> = (0..funcs.len()).map(|_| rng.gen_range(0..f.p())).collect();
        let hits = (0..table[0].len()).any(|j| {
            let v = table.iter().zip(&c).fold(0, |acc, (row, &ci)| f.add(acc, f.mul(ci, row[j])));
            v != 0
        });
        if hits {
            let mut acc = crate::exactla::Accumulator::new(f, x.cover_dim());
            for (ci, v) in c.iter().zip(funcs) {
                acc.add_scaled(*ci, v);
            }
            return Some(acc.take());
        }
    }
    None
}

/// Whether `mid = X̄ ⊕ F` (X̄ without free summands) has `F → coker p₀`
/// a minimal free cover, i.e. `μ(F) = μ(coker p₀)`.
pub fn is_minimal_approximation(seq: &ShortExactSeq) -> bool {
    let split = seq.mid.free_summand_split();
    let p0 = seq.surj.compose(&split.rest_inclusion);
    let (c, _) = cokernel(&p0);
    split.rank == c.mu()
}

/// Add `R^r` to both the left and middle terms.
pub fn pad_approximation(seq: &ShortExactSeq, r: usize) -> Result<ShortExactSeq> {
    let ring = seq.mid.ring();
    let free = Module::free(ring, r);
    let left = direct_sum(&seq.left, &free)?;
    let mid = direct_sum(&seq.mid, &free)?;
    let f = seq.mid.field();
    let inj = Morphism::new_unchecked(
        left.module.clone(),
        mid.module.clone(),
        seq.inj.matrix().block_diag(&Matrix::identity(f, free.dim())),
    );
    let surj = Morphism::new_unchecked(
        mid.module.clone(),
        seq.right.clone(),
        seq.surj.matrix().hstack(&Matrix::zeros(f, seq.right.dim(), free.dim())),
    );
    ShortExactSeq::new(inj, surj, seq.kind, seq.base.clone())
}
