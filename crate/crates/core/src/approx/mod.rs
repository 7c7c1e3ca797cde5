//! Approximation sequences: the counit `ψⁿ`, n-AB approximations,
//! n-origin extensions, n-FPD hulls and membership in the classes
//! `𝒜ₙ ⊇ ℰₙ ⊇ ℋₙ`.
//!
//! Over an artinian local ring a module of finite projective dimension is
//! free, so every "pd ≤ n" clause is checked as `Ω¹ = 0`.

mod ab;
mod counit;
mod hull;
mod origin;

pub use ab::{ab_approximation, ab_approximation_randomized, is_minimal_approximation, pad_approximation};
pub use counit::{counit_psi, transpose_morphism};
pub use hull::{fpd_hull, pad_hull};
pub use origin::{origin_extension, represented_by_monomorphisms, witness_map, Witness};

use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};
use crate::homology::ext_ring;
use crate::modules::{direct_sum, is_isomorphic, Module, Morphism};
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeqKind {
    Ab(usize),
    Origin(usize),
    Hull(usize),
}

impl SeqKind {
    pub fn n(self) -> usize {
        match self {
            SeqKind::Ab(n) | SeqKind::Origin(n) | SeqKind::Hull(n) => n,
        }
    }
    pub fn tag(self) -> &'static str {
        match self {
            SeqKind::Ab(_) => "ab",
            SeqKind::Origin(_) => "origin",
            SeqKind::Hull(_) => "hull",
        }
    }
    pub fn from_tag(tag: &str, n: usize) -> Result<Self> {
        match tag {
            "ab" => Ok(SeqKind::Ab(n)),
            "origin" => Ok(SeqKind::Origin(n)),
            "hull" => Ok(SeqKind::Hull(n)),
            _ => Err(Error::Parse(format!("unknown sequence kind {tag:?}"))),
        }
    }
}

impl fmt::Display for SeqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.tag(), self.n())
    }
}

/// `0 → left → mid → right → 0`. `base` is the module being approximated:
/// `right` for AB, `left` for hulls, and the non-free part of `mid` for
/// origin extensions.
#[derive(Clone, Debug)]
pub struct ShortExactSeq {
    pub left: Arc<Module>,
    pub mid: Arc<Module>,
    pub right: Arc<Module>,
    pub inj: Morphism,
    pub surj: Morphism,
    pub kind: SeqKind,
    pub base: Arc<Module>,
}

impl ShortExactSeq {
    pub fn new(inj: Morphism, surj: Morphism, kind: SeqKind, base: Arc<Module>) -> Result<Self> {
        if inj.target().dim() != surj.source().dim() {
            return Err(Error::InvalidMorphism("sequence maps do not compose".into()));
        }
        Ok(ShortExactSeq {
            left: inj.source().clone(),
            mid: surj.source().clone(),
            right: surj.target().clone(),
            inj,
            surj,
            kind,
            base,
        })
    }
}

/// One checked clause of a sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SesReport {
    pub kind: SeqKind,
    pub clauses: Vec<Clause>,
}

impl SesReport {
    pub fn all_pass(&self) -> bool {
        self.clauses.iter().all(|c| c.holds)
    }
    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| !c.holds)
    }
}

fn clause(name: impl Into<String>, holds: bool, detail: impl Into<String>) -> Clause {
    Clause { name: name.into(), holds, detail: detail.into() }
}

fn pd_clause(name: &str, x: &Arc<Module>) -> Clause {
    let free = x.syzygy(1).is_zero();
    clause(name, free, if free { "Ω¹ = 0".to_string() } else { format!("Ω¹ has dimension {}", x.syzygy(1).dim()) })
}

fn ext_clauses(out: &mut Vec<Clause>, which: &str, x: &Arc<Module>, range: std::ops::RangeInclusive<usize>) {
    for i in range {
        let e = ext_ring(x, i).dim;
        out.push(clause(format!("ext-vanishing({which}, {i})"), e == 0, format!("dim Ext^{i}({which}, R) = {e}")));
    }
}

/// `mid ≅ base ⊕ R^e`.
fn splits_off_base(mid: &Arc<Module>, base: &Arc<Module>) -> Clause {
    let d = mid.ring().dim();
    let name = "mid-is-base-plus-free";
    if mid.dim() < base.dim() || !(mid.dim() - base.dim()).is_multiple_of(d) {
        return clause(name, false, "dimensions are incompatible");
    }
    let e = (mid.dim() - base.dim()) / d;
    let sum = direct_sum(base, &Module::free(base.ring(), e)).expect("same ring");
    if sum.module.same_actions(mid) {
        return clause(name, true, format!("literally base ⊕ R^{e}"));
    }
    let (sm, sb) = (mid.free_summand_split(), base.free_summand_split());
    if sm.rank != sb.rank + e {
        return clause(name, false, format!("free ranks {} and {} + {e}", sm.rank, sb.rank));
    }
    let iso = is_isomorphic(&sm.rest, &sb.rest, 0).is_isomorphic();
    clause(name, iso, if iso { "non-free parts isomorphic" } else { "non-free parts not shown isomorphic" })
}

/// Re-check exactness and the clauses of the sequence's kind.
pub fn verify_ses(seq: &ShortExactSeq) -> SesReport {
    let mut c = Vec::new();
    let (inj, surj) = (&seq.inj, &seq.surj);
    let eq = inj.is_equivariant() && surj.is_equivariant();
    c.push(clause("equivariant", eq, if eq { "both maps are R-linear" } else { "a map is not R-linear" }));
    c.push(clause("inj-injective", inj.is_injective(), format!("rank {} of {}", inj.rank(), seq.left.dim())));
    c.push(clause("surj-surjective", surj.is_surjective(), format!("rank {} of {}", surj.rank(), seq.right.dim())));
    let comp = surj.compose(inj).is_zero();
    let exact = comp && inj.rank() + surj.rank() == seq.mid.dim();
    c.push(clause("exact-at-mid", exact, if exact { "im inj = ker surj".to_string() } else if comp {
        format!("im inj has dimension {}, ker surj has {}", inj.rank(), seq.mid.dim() - surj.rank())
    } else {
        "surj ∘ inj ≠ 0".to_string()
    }));
    match seq.kind {
        SeqKind::Ab(0) => c.push(clause("left-zero", seq.left.is_zero(), format!("dim left = {}", seq.left.dim()))),
        SeqKind::Ab(n) => {
            c.push(pd_clause("left-pd", &seq.left));
            ext_clauses(&mut c, "mid", &seq.mid, 1..=n);
        }
        SeqKind::Origin(n) => {
            c.push(splits_off_base(&seq.mid, &seq.base));
            c.push(pd_clause("right-pd", &seq.right));
            ext_clauses(&mut c, "left", &seq.left, 1..=n);
        }
        SeqKind::Hull(n) => {
            c.push(pd_clause("mid-pd", &seq.mid));
            ext_clauses(&mut c, "right", &seq.right, 1..=n + 1);
        }
    }
    SesReport { kind: seq.kind, clauses: c }
}

/// Membership of `M` in `𝒜ₙ`, `ℰₙ` and `ℋₙ`, with the first failing Ext
/// degree of each criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipReport {
    pub n: usize,
    pub in_a: bool,
    pub in_e: bool,
    pub in_h: bool,
    /// First `i ≤ n+1` with `Ext^i(Tr ΩⁿM, R) ≠ 0`.
    pub torsionfree_failure: Option<usize>,
    /// First `i ≤ n` with `Ext^i(M, R) ≠ 0`.
    pub grade_failure: Option<usize>,
}

fn first_nonzero_ext(x: &Arc<Module>, upto: usize) -> Option<usize> {
    (1..=upto).find(|&i| ext_ring(x, i).dim != 0)
}

/// First `i ≤ upto` with `Ext^i(Tr ΩⁿM, R) ≠ 0`.
fn torsionfree_failure(m: &Arc<Module>, n: usize, upto: usize) -> Option<usize> {
    first_nonzero_ext(&m.syzygy(n).transpose(), upto)
}

pub fn membership(m: &Arc<Module>, n: usize) -> Result<MembershipReport> {
    let tf = torsionfree_failure(m, n, n + 1);
    let grade_failure = first_nonzero_ext(m, n);
    let r = MembershipReport {
        n,
        in_a: tf.is_none_or(|i| i > n),
        in_e: grade_failure.is_none(),
        in_h: tf.is_none(),
        torsionfree_failure: tf,
        grade_failure,
    };
    if (r.in_h && !r.in_e) || (r.in_e && !r.in_a) {
        return Err(Error::Internal(format!("class inclusions violated: {r:?}")));
    }
    Ok(r)
}

fn require_in_a(m: &Arc<Module>, n: usize) -> Result<()> {
    match torsionfree_failure(m, n, n) {
        Some(i) => Err(Error::NotInCategory(format!("not in A_{n}: Ext^{i}(Tr Ω^{n} M, R) ≠ 0"))),
        None => Ok(()),
    }
}

fn require_in_e(m: &Arc<Module>, n: usize) -> Result<()> {
    match first_nonzero_ext(m, n) {
        Some(i) => Err(Error::NotInCategory(format!("not in E_{n}: Ext^{i}(M, R) ≠ 0"))),
        None => Ok(()),
    }
}

fn require_in_h(m: &Arc<Module>, n: usize) -> Result<()> {
    match torsionfree_failure(m, n, n + 1) {
        Some(i) => Err(Error::NotInCategory(format!("not in H_{n}: Ext^{i}(Tr Ω^{n} M, R) ≠ 0"))),
        None => Ok(()),
    }
}

/// `s : X → R^m` whose components are the given functionals.
fn functionals_map(x: &Arc<Module>, functionals: &[&crate::exactla::SVec]) -> Morphism {
    let d = x.ring().dim();
    let mut mat = Matrix::zeros(x.field(), functionals.len() * d, x.dim());
    for (i, func) in functionals.iter().enumerate() {
        mat.set_block(i * d, 0, x.functional_morphism(func).matrix());
    }
    Morphism::new_unchecked(x.clone(), Module::free(x.ring(), functionals.len()), mat)
}

/// A left proj-approximation `X → R^m` built from minimal generators of
/// `X*`, so `s*` is surjective.
pub fn left_approximation(x: &Arc<Module>) -> Morphism {
    let dual = x.dual_data();
    let gens: Vec<_> = dual.module.generator_indices().iter().map(|&g| &dual.functionals[g]).collect();
    functionals_map(x, &gens)
}

/// `(f, g)ᵀ : X → A ⊕ B` into the given direct sum module.
fn stack(f: &Morphism, g: &Morphism, sum: &Arc<Module>) -> Morphism {
    Morphism::new_unchecked(f.source().clone(), sum.clone(), f.matrix().vstack(g.matrix()))
}

/// `g` with its target replaced by the submodule `incl`, assuming the image
/// lies there. Submodule coordinates are read at the pivot rows.
fn corestrict(g: &Morphism, incl: &Morphism) -> Morphism {
    let pivots: Vec<usize> = (0..incl.source().dim())
        .map(|t| incl.matrix().column(t).iter().position(|&x| x != 0).expect("basis vector is nonzero"))
        .collect();
    debug_assert!({
        let sub = incl.image_space();
        g.matrix().columns().iter().all(|c| sub.contains(c))
    });
    let mat = g.matrix().select_rows(&pivots);
    Morphism::new_unchecked(g.source().clone(), incl.source().clone(), mat)
}

/// Kernel of a functional given by its generator values, as a submodule.
fn functional_kernel(x: &Arc<Module>, func: &[(u32, u32)]) -> (Arc<Module>, Morphism) {
    let phi = x.functional_morphism(func);
    let ker = Subspace::kernel_of(phi.matrix());
    crate::modules::submodule(x, &ker)
}

#[cfg(test)]
mod tests;
