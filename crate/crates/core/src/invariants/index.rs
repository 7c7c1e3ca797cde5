//! δ and the index of a ring.

use super::{xi_n, xi_sequence};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::modules::Module;
use std::sync::Arc;

/// Rank of the largest free summand of the minimal maximal Cohen–Macaulay
/// approximation. Over an artinian Gorenstein ring every module is its own
/// approximation, so this is the free rank of `M`; it is checked against the
/// certified limit of the ξ-chain.
pub fn delta(m: &Arc<Module>) -> Result<usize> {
    if !m.ring().is_gorenstein() {
        return Err(Error::Precondition(format!(
            "ring is not Gorenstein (socle dimension {})",
            m.ring().socle().dim()
        )));
    }
    let d = m.free_summand_split().rank;
    let xi = xi_sequence(m, 1)?;
    if !xi.limit_is_exact() || xi.limit != d {
        return Err(Error::Internal(format!("free rank {d} disagrees with the ξ-limit {} ({})", xi.limit, xi.certificate)));
    }
    Ok(d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexVariant {
    /// Smallest `n` with `δ(R/𝔪^n) ≠ 0`.
    Delta,
    /// Smallest `n` with `ξ(0, R/𝔪^n) ≠ 0`, for non-Gorenstein rings.
    Xi,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexReport {
    pub index: usize,
    pub variant: IndexVariant,
    /// `(n, value at R/𝔪^n)` for every `n` tried.
    pub values: Vec<(usize, usize)>,
}

/// The index of `R`. The loop stops by `n = ℓℓ(R)` since `R/𝔪^{ℓℓ} = R`.
pub fn index(ring: &Arc<Algebra>) -> Result<IndexReport> {
    let variant = if ring.is_gorenstein() { IndexVariant::Delta } else { IndexVariant::Xi };
    let mut values = Vec::new();
    for n in 1..=ring.loewy_length() {
        let q = Module::ring_mod_power(ring, n);
        let v = match variant {
            IndexVariant::Delta => delta(&q)?,
            IndexVariant::Xi => xi_n(&q, 0),
        };
        values.push((n, v));
        if v != 0 {
            return Ok(IndexReport { index: n, variant, values });
        }
    }
    Err(Error::Internal("no power of the maximal ideal gave a free summand".into()))
}
