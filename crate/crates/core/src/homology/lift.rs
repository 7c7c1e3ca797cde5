//! Lifting morphisms along minimal free resolutions.

use crate::exactla::{sparsify, Accumulator, Matrix, SVec};
use crate::modules::{free_act, Morphism};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Comparison maps `f̃_i : F_i(M) → F_i(N)` between minimal resolutions,
/// together with the induced maps `Ω^i f` on syzygies.
#[derive(Clone, Debug)]
pub struct ChainLift {
    /// `f̃_0, …, f̃_n` as matrices over the k-bases of the free modules.
    pub maps: Vec<Matrix>,
    /// `Ω^0 f = f, Ω^1 f, …, Ω^{n+1} f`.
    pub syzygy_maps: Vec<Morphism>,
}

/// One step: a lift `F_X → F_Y` of `g` (as sparse columns) and `Ωg`.
fn omega_step(g: &Morphism, mut rng: Option<&mut ChaCha8Rng>) -> (Vec<SVec>, Morphism) {
    let x = g.source();
    let y = g.target();
    let ring = x.ring();
    let f = x.field();
    let d = ring.dim();
    let ny = y.cover_dim();
    let ysyz = y.syzygy_data();
    let mut acc = Accumulator::new(f, ny);
    let mut columns: Vec<SVec> = Vec::with_capacity(x.cover_dim());
    for &gen in x.generator_indices() {
        let img = g.matrix().column(gen);
        let mut w = sparsify(&y.lift_to_cover(&img));
        if let Some(r) = rng.as_deref_mut() {
            for z in ysyz.embedding() {
                acc.add_scaled(r.gen_range(0..f.p()), z);
            }
            acc.add_scaled(1, &w);
            w = acc.take();
        }
        for l in 0..d {
            columns.push(free_act(ring, l, &w, &mut acc));
        }
    }
    let xsyz = x.syzygy_data();
    let cols: Vec<SVec> = xsyz
        .embedding()
        .iter()
        .map(|z| {
            for &(i, c) in z {
                acc.add_scaled(c, &columns[i as usize]);
            }
            let u = acc.take();
            ysyz.read(&u)
        })
        .collect();
    let mat = Matrix::from_sparse_columns(f, ysyz.module().dim(), &cols);
    (columns, Morphism::new_unchecked(xsyz.module().clone(), ysyz.module().clone(), mat))
}

/// Chain lift of `f` up to degree `n`. Lifts solve for each generator
/// image with free variables set to zero, so the result is deterministic.
pub fn lift_morphism(f: &Morphism, n: usize) -> ChainLift {
    let mut maps = Vec::with_capacity(n + 1);
    let mut syzygy_maps = vec![f.clone()];
    for _ in 0..=n {
        let g = syzygy_maps.last().unwrap();
        let (cols, omega) = omega_step(g, None);
        maps.push(Matrix::from_sparse_columns(f.source().field(), g.target().cover_dim(), &cols));
        syzygy_maps.push(omega);
    }
    ChainLift { maps, syzygy_maps }
}

/// `Ω^n f`.
pub fn syzygy_morphism(f: &Morphism, n: usize) -> Morphism {
    let mut g = f.clone();
    for _ in 0..n {
        g = omega_step(&g, None).1;
    }
    g
}

/// `Ω^n f` through lifts perturbed by random elements of the syzygies.
/// Its stable class agrees with [`syzygy_morphism`].
pub fn syzygy_morphism_randomized(f: &Morphism, n: usize, seed: u64) -> Morphism {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = f.clone();
    for _ in 0..n {
        g = omega_step(&g, Some(&mut rng)).1;
    }
    g
}
