#![allow(dead_code)]

pub mod oracle;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;
use xi_core::algebra::Algebra;
use xi_core::corpus::{builtin_ring, random_module, RandomShape};
use xi_core::modules::Module;

pub const CORPUS: [&str; 5] = ["E", "A", "B", "C", "D"];

pub fn ring(name: &str) -> Arc<Algebra> {
    builtin_ring(name, 101).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A nonzero random module.
pub fn nonzero_module(r: &Arc<Algebra>, shape: RandomShape, rng: &mut ChaCha8Rng) -> Arc<Module> {
    loop {
        let m = random_module(r, shape, rng);
        if !m.is_zero() {
            return m;
        }
    }
}

/// Smaller shapes for checks that take several syzygies.
pub fn small_shape(r: &Algebra) -> RandomShape {
    let s = RandomShape::for_ring(r);
    RandomShape { max_gens: s.max_gens.min(2), max_relations: s.max_relations.min(3), max_ambient: 24 }
}
