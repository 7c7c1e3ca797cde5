//! Built-in rings, named modules, and seeded random modules.

use crate::algebra::{Algebra, RingElement};
use crate::error::{Error, Result};
use crate::exactla::PrimeField;
use crate::modules::{Module, RingMatrix};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

pub const DEFAULT_P: u32 = 101;

/// Names of the built-in rings.
pub const RING_NAMES: [&str; 5] = ["E", "A", "B", "C", "D"];

/// Build a built-in ring:
///
/// | name | ring |
/// |------|------|
/// | `E`  | `F_p[x]/(x^2)` |
/// | `A`  | `F_p[x]/(x^3)` |
/// | `B`  | `F_p[x,y]/(x^2,xy,y^2)` |
/// | `C`  | `F_p[x,y]/(x^2,y^2)` |
/// | `D`  | `F_p[x,y]/(x^3,xy,y^2)` |
pub fn builtin_ring(name: &str, p: u32) -> Result<Arc<Algebra>> {
    let f = PrimeField::new(p)?;
    let r = match name {
        "E" | "dual_numbers" => Algebra::monomial_quotient_str(f, &["x"], &["x^2"])?,
        "A" => Algebra::monomial_quotient_str(f, &["x"], &["x^3"])?,
        "B" => Algebra::monomial_quotient_str(f, &["x", "y"], &["x^2", "x*y", "y^2"])?,
        "C" => Algebra::monomial_quotient_str(f, &["x", "y"], &["x^2", "y^2"])?,
        "D" => Algebra::monomial_quotient_str(f, &["x", "y"], &["x^3", "x*y", "y^2"])?,
        _ => return Err(Error::Parse(format!("unknown built-in ring {name:?}"))),
    };
    let canonical = if name == "dual_numbers" { "E" } else { name };
    Ok(r.with_label(canonical))
}

/// All built-in rings over `F_p`.
pub fn corpus(p: u32) -> Vec<Arc<Algebra>> {
    RING_NAMES.iter().map(|n| builtin_ring(n, p).expect("built-in rings are valid")).collect()
}

/// Named modules: `free:r`, `k`, `maximal_ideal`, `R/m^n`.
pub fn builtin_module(ring: &Arc<Algebra>, name: &str) -> Result<Arc<Module>> {
    if let Some(r) = name.strip_prefix("free:") {
        let r: usize = r.parse().map_err(|_| Error::Parse(format!("bad rank in {name:?}")))?;
        return Ok(Module::free(ring, r));
    }
    if let Some(n) = name.strip_prefix("R/m^") {
        let n: usize = n.parse().map_err(|_| Error::Parse(format!("bad exponent in {name:?}")))?;
        return Ok(Module::ring_mod_power(ring, n));
    }
    match name {
        "k" => Ok(Module::residue_field(ring)),
        "R" => Ok(Module::regular(ring)),
        "maximal_ideal" | "m" => Ok(Module::maximal_ideal(ring)),
        "0" | "zero" => Ok(Module::zero(ring)),
        _ => Err(Error::Parse(format!("unknown built-in module {name:?}"))),
    }
}

/// Shape limits for random presentations.
#[derive(Clone, Copy, Debug)]
pub struct RandomShape {
    pub max_gens: usize,
    pub max_relations: usize,
    /// Bound on `gens · dim R`.
    pub max_ambient: usize,
}

impl RandomShape {
    /// Conservative defaults: syzygies grow exponentially over non-Gorenstein rings.
    pub fn for_ring(ring: &Algebra) -> Self {
        if ring.is_gorenstein() {
            RandomShape { max_gens: 3, max_relations: 4, max_ambient: 60 }
        } else {
            RandomShape { max_gens: 2, max_relations: 3, max_ambient: 60 }
        }
    }
}

/// A random element of 𝔪 with roughly half of its coefficients nonzero.
pub fn random_radical_element(ring: &Algebra, rng: &mut ChaCha8Rng) -> RingElement {
    let p = ring.field().p();
    let mut coeffs = vec![0u32; ring.dim()];
    for c in coeffs.iter_mut().skip(1) {
        if rng.gen_bool(0.5) {
            *c = rng.gen_range(1..p);
        }
    }
    RingElement { coeffs }
}

/// A random presentation with entries in 𝔪.
pub fn random_presentation(ring: &Arc<Algebra>, shape: RandomShape, rng: &mut ChaCha8Rng) -> RingMatrix {
    let max_gens = shape.max_gens.min(shape.max_ambient / ring.dim()).max(1);
    let r0 = rng.gen_range(1..=max_gens);
    let r1 = rng.gen_range(0..=shape.max_relations);
    let entries = (0..r0 * r1).map(|_| random_radical_element(ring, rng)).collect();
    RingMatrix::from_elements(ring, r0, r1, entries).expect("shape is consistent")
}

/// Cokernel of a random presentation.
pub fn random_module(ring: &Arc<Algebra>, shape: RandomShape, rng: &mut ChaCha8Rng) -> Arc<Module> {
    Module::from_presentation(&random_presentation(ring, shape, rng))
}

/// `M / (R·v)` for a random vector `v`.
pub fn random_quotient(m: &Arc<Module>, rng: &mut ChaCha8Rng) -> (Arc<Module>, crate::modules::Morphism) {
    let f = m.field();
    let v: Vec<u32> = (0..m.dim()).map(|_| rng.gen_range(0..f.p())).collect();
    let mut s = crate::exactla::Subspace::zero(f, m.dim());
    for l in 0..m.ring().dim() {
        s.add_dense(&m.action(l).mul_vec(&v));
    }
    crate::modules::quotient(m, &s)
}
