//! Isomorphism testing by invariant screening and random search in Hom.

use super::dual::{hom_matrix, hom_solutions};
use super::{Module, Morphism};
use crate::exactla::Matrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// Outcome of an isomorphism test.
#[derive(Clone, Debug)]
pub enum IsoResult {
    /// An invertible equivariant map `M → N`.
    Isomorphic(Morphism),
    /// An invariant differs.
    Different(String),
    /// Search exhausted without finding an isomorphism.
    NotProven(String),
}

impl IsoResult {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoResult::Isomorphic(_))
    }
}

const SAMPLES: usize = 96;

pub fn is_isomorphic(m: &Arc<Module>, n: &Arc<Module>, seed: u64) -> IsoResult {
    if m.dim() != n.dim() {
        return IsoResult::Different(format!("dimensions {} and {}", m.dim(), n.dim()));
    }
    if m.dim() == 0 {
        return IsoResult::Isomorphic(Morphism::zero(m, n));
    }
    if m.mu() != n.mu() {
        return IsoResult::Different(format!("minimal generator counts {} and {}", m.mu(), n.mu()));
    }
    let (lm, ln) = (m.loewy_dims(), n.loewy_dims());
    if lm != ln {
        return IsoResult::Different(format!("radical filtrations {lm:?} and {ln:?}"));
    }
    if m.socle().dim() != n.socle().dim() {
        return IsoResult::Different("socle dimensions differ".into());
    }
    let f = m.field();
    let basis: Vec<Matrix> = hom_solutions(m, n).iter().map(|y| hom_matrix(m, n, y)).collect();
    if basis.is_empty() {
        return IsoResult::Different("Hom(M, N) = 0".into());
    }
    let h = basis.len();
    let combine = |c: &[u32]| -> Matrix {
        let mut acc = Matrix::zeros(f, n.dim(), m.dim());
        for (b, &x) in basis.iter().zip(c) {
            if x != 0 {
                acc = acc.add(&b.scale(x));
            }
        }
        acc
    };
    let p = f.p() as u64;
    let exhaustive = h <= 4 && p.checked_pow(h as u32).is_some_and(|t| t <= 20_000);
    if exhaustive {
        let total = p.pow(h as u32);
        for idx in 1..total {
            let mut c = vec![0u32; h];
            let mut r = idx;
            for x in c.iter_mut() {
                *x = (r % p) as u32;
                r /= p;
            }
            let mat = combine(&c);
            if mat.is_invertible() {
                return IsoResult::Isomorphic(Morphism::new_unchecked(m.clone(), n.clone(), mat));
            }
        }
        return IsoResult::Different("exhaustive search over Hom found no isomorphism".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SAMPLES {
        let c: Vec<u32> = (0..h).map(|_| rng.gen_range(0..f.p())).collect();
        let mat = combine(&c);
        if mat.is_invertible() {
            return IsoResult::Isomorphic(Morphism::new_unchecked(m.clone(), n.clone(), mat));
        }
    }
    IsoResult::NotProven(format!("no invertible element among {SAMPLES} random samples of Hom (dim {h})"))
}
