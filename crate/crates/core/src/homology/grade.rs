//! Grade, torsionfreeness and the grade condition.

use super::ext::{ext_module, ext_ring, ext_ring_plain};
use crate::error::{Error, Result};
use crate::modules::Module;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grade {
    Finite(usize),
    /// No nonzero Ext up to the cutoff.
    AtLeast(usize),
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Grade::Finite(i) => write!(f, "{i}"),
            Grade::AtLeast(c) => write!(f, ">= {c}"),
        }
    }
}

/// Smallest `i ≤ cutoff` with `Ext^i(M, R) ≠ 0`.
pub fn grade(m: &Arc<Module>, cutoff: usize) -> Grade {
    (0..=cutoff).find(|&i| ext_ring(m, i).dim > 0).map_or(Grade::AtLeast(cutoff), Grade::Finite)
}

/// `Ext^i(Tr M, R) = 0` for `1 ≤ i ≤ n`.
pub fn n_torsionfree(m: &Arc<Module>, n: usize) -> bool {
    if n == 0 {
        return true;
    }
    let t = m.transpose();
    (1..=n).all(|i| ext_ring(&t, i).dim == 0)
}

/// Dimensions in `0 → Ext¹(Tr M, R) → M → M** → Ext²(Tr M, R) → 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AuslanderReport {
    pub ker_phi: usize,
    pub ext1_tr: usize,
    pub coker_phi: usize,
    pub ext2_tr: usize,
}

pub fn auslander_sequence_check(m: &Arc<Module>) -> Result<AuslanderReport> {
    let ev = m.evaluation_map();
    let r = ev.phi.rank();
    let t = m.transpose();
    let report = AuslanderReport {
        ker_phi: m.dim() - r,
        ext1_tr: ext_ring(&t, 1).dim,
        coker_phi: ev.phi.target().dim() - r,
        ext2_tr: ext_ring(&t, 2).dim,
    };
    if report.ker_phi != report.ext1_tr || report.coker_phi != report.ext2_tr {
        return Err(Error::Internal(format!("four-term sequence has mismatched dimensions: {report:?}")));
    }
    Ok(report)
}

/// The n-th grade condition. Every nonzero module over an artinian local
/// ring has grade 0, so it reduces to `Ext^i(M, R) = 0` for `1 ≤ i ≤ n`.
pub fn grade_condition(m: &Arc<Module>, n: usize) -> bool {
    (1..=n).all(|i| ext_ring(m, i).dim == 0)
}

/// The grade condition from its definition: `grade Ext^i(M, R) ≥ i`.
pub fn grade_condition_literal(m: &Arc<Module>, n: usize) -> bool {
    (1..=n).all(|i| {
        let e = ext_module(m, i);
        (0..i).all(|j| ext_ring_plain(&e, j).dim == 0)
    })
}
