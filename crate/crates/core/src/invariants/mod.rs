//! The filtration `V_n(M, N)`, the approximated ξ-invariants and their
//! limit, δ, and the index of a Gorenstein ring.

mod index;

pub use index::{delta, index, IndexReport, IndexVariant};

use crate::error::{Error, Result};
use crate::exactla::{linear_relations, Subspace};
use crate::homology::{ext_ring, hom_basis, syzygy_morphism, HomSpace, ResidueMap};
use crate::modules::{Module, Morphism};
use std::fmt;
use std::sync::Arc;

pub const DEFAULT_N_MAX: usize = 12;
pub const DEFAULT_PLATEAU: usize = 4;
/// Largest ambient dimension `μ·dim R` of a free cover the engine builds.
pub const DEFAULT_BUDGET: usize = 20_000;

/// `V_n(M, N) = {f : Ω^n f factors through a projective}`.
#[derive(Clone, Debug)]
pub struct VSubspace {
    pub n: usize,
    pub hom: HomSpace,
    /// Subspace of `Hom(M, N)` in the coordinates of `hom`.
    pub basis: Subspace,
}

impl VSubspace {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }
}

fn check_budget(x: &Module, what: &str, budget: usize) -> Result<()> {
    let needed = x.mu() * x.ring().dim();
    if needed > budget {
        return Err(Error::Budget { what: what.to_string(), needed, budget });
    }
    Ok(())
}

/// Members of the span of `maps` (all `X → Y`) that factor through a
/// projective, as coefficient vectors.
fn projective_combinations(maps: &[Morphism]) -> Vec<Vec<u32>> {
    let Some(first) = maps.first() else { return Vec::new() };
    let mut rm = ResidueMap::new(first.source(), first.target());
    let residues: Vec<_> = maps.iter().map(|g| rm.residue(g.matrix())).collect();
    linear_relations(first.source().field(), &residues)
}

pub fn v_subspace(m: &Arc<Module>, n_mod: &Arc<Module>, n: usize) -> VSubspace {
    let hom = hom_basis(m, n_mod);
    let lifted: Vec<Morphism> = hom.basis.iter().map(|f| syzygy_morphism(f, n)).collect();
    let rel = projective_combinations(&lifted);
    let basis = Subspace::span(m.field(), hom.dim(), rel.iter().map(|v| v.as_slice()));
    VSubspace { n, hom, basis }
}

/// `ξ(n, M) = dim V_n(M, k)`.
pub fn xi_n(m: &Arc<Module>, n: usize) -> usize {
    v_subspace(m, &Module::residue_field(m.ring()), n).dim()
}

/// ξ(0..=n_max, M) in one pass, reusing `Ω^n f` for the next degree.
pub fn xi_values(m: &Arc<Module>, n_max: usize, budget: usize) -> Result<Vec<usize>> {
    let k = Module::residue_field(m.ring());
    let mu = m.mu();
    if mu == 0 {
        return Ok(vec![0; n_max + 1]);
    }
    let mut maps = hom_basis(m, &k).basis;
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let v = if maps[0].source().is_zero() { mu } else { projective_combinations(&maps).len() };
        out.push(v);
        if v == mu {
            // The chain is bounded by μ, so it is constant from here on.
            out.resize(n_max + 1, mu);
            break;
        }
        if n == n_max {
            break;
        }
        check_budget(maps[0].source(), &format!("syzygy {} of the module", n + 1), budget)?;
        check_budget(maps[0].target(), &format!("syzygy {} of the residue field", n + 1), budget)?;
        maps = maps.iter().map(|g| syzygy_morphism(g, 1)).collect();
    }
    Ok(out)
}

/// How the limit of the ξ-chain was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `Ω^p M = 0` within the horizon.
    PdFinite,
    /// Some `V_n` is all of `Hom(M, k)`.
    FullSpace,
    /// The ring is self-injective, so the chain is constant.
    SelfInjective,
    /// `Ext^i(M, R) = 0` for every `1 ≤ i ≤ n_max`; constant up to the
    /// horizon, limit not proven.
    ExtWindowToHorizon,
    /// The last `W` values agree; limit not proven.
    HeuristicPlateau(usize),
    /// No plateau within the horizon.
    Unresolved,
}

impl Certificate {
    /// Whether the certificate proves the limit.
    pub fn is_exact(self) -> bool {
        matches!(self, Certificate::PdFinite | Certificate::FullSpace | Certificate::SelfInjective)
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::PdFinite => write!(f, "pd-finite"),
            Certificate::FullSpace => write!(f, "full-space"),
            Certificate::SelfInjective => write!(f, "self-injective"),
            Certificate::ExtWindowToHorizon => write!(f, "ext-window-to-horizon"),
            Certificate::HeuristicPlateau(w) => write!(f, "heuristic-plateau({w})"),
            Certificate::Unresolved => write!(f, "unresolved"),
        }
    }
}

impl std::str::FromStr for Certificate {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "pd-finite" => Certificate::PdFinite,
            "full-space" => Certificate::FullSpace,
            "self-injective" => Certificate::SelfInjective,
            "ext-window-to-horizon" => Certificate::ExtWindowToHorizon,
            "unresolved" => Certificate::Unresolved,
            _ => {
                let w = s
                    .strip_prefix("heuristic-plateau(")
                    .and_then(|r| r.strip_suffix(')'))
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("unknown certificate {s:?}")))?;
                Certificate::HeuristicPlateau(w)
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiReport {
    pub mu: usize,
    pub values: Vec<usize>,
    /// The limit when the certificate is exact, otherwise a lower bound.
    pub limit: usize,
    pub certificate: Certificate,
}

impl XiReport {
    pub fn limit_is_exact(&self) -> bool {
        self.certificate.is_exact()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct XiOptions {
    pub n_max: usize,
    pub plateau: usize,
    pub budget: usize,
}

impl Default for XiOptions {
    fn default() -> Self {
        XiOptions { n_max: DEFAULT_N_MAX, plateau: DEFAULT_PLATEAU, budget: DEFAULT_BUDGET }
    }
}

pub fn xi_sequence(m: &Arc<Module>, n_max: usize) -> Result<XiReport> {
    xi_sequence_with(m, XiOptions { n_max, ..XiOptions::default() })
}

pub fn xi_sequence_with(m: &Arc<Module>, opts: XiOptions) -> Result<XiReport> {
    let values = xi_values(m, opts.n_max, opts.budget)?;
    let mu = m.mu();
    let last = *values.last().unwrap();
    // Over an artinian local ring a module of finite projective dimension
    // is free, so Ω¹M = 0 decides it.
    let pd_finite = m.is_zero() || (opts.n_max >= 1 && m.syzygy(1).is_zero());
    let (limit, certificate) = if pd_finite {
        (mu, Certificate::PdFinite)
    } else if values.contains(&mu) {
        (mu, Certificate::FullSpace)
    } else if m.ring().is_gorenstein() {
        (values[0], Certificate::SelfInjective)
    } else if opts.n_max > 0 && (1..=opts.n_max).all(|i| ext_ring(m, i).dim == 0) {
        (last, Certificate::ExtWindowToHorizon)
    } else if values.len() >= opts.plateau && values[values.len() - opts.plateau..].iter().all(|&v| v == last) {
        (last, Certificate::HeuristicPlateau(opts.plateau))
    } else {
        (last, Certificate::Unresolved)
    };
    Ok(XiReport { mu, values, limit, certificate })
}

/// Outcome of checking `ξ(a−1) = ξ(a) = ⋯ = ξ(b)` under Ext vanishing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowCheck {
    pub values: Vec<usize>,
    /// First `n` with `ξ(n) ≠ ξ(a−1)`, if any.
    pub jump: Option<usize>,
}

impl WindowCheck {
    pub fn holds(&self) -> bool {
        self.jump.is_none()
    }
}

/// Requires `Ext^i(M, R) = 0` for `a ≤ i ≤ b`.
pub fn xi_window_check(m: &Arc<Module>, a: usize, b: usize) -> Result<WindowCheck> {
    if a == 0 || a > b {
        return Err(Error::Precondition(format!("window ({a}, {b}) needs 0 < a <= b")));
    }
    if let Some(i) = (a..=b).find(|&i| ext_ring(m, i).dim != 0) {
        return Err(Error::Precondition(format!("Ext^{i}(M, R) is nonzero")));
    }
    let all = xi_values(m, b, DEFAULT_BUDGET)?;
    let values = all[a - 1..].to_vec();
    let jump = values.iter().position(|&v| v != values[0]).map(|j| j + a - 1);
    Ok(WindowCheck { values, jump })
}

#[cfg(test)]
mod tests;
