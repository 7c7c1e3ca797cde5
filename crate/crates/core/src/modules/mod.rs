//! Finitely generated R-modules stored as action representations.
//!
//! A module of dimension `D` carries one `D×D` matrix per basis element of
//! the ring. Minimal covers, syzygies and duals are derived on demand and
//! cached behind `OnceLock`s, so shared modules can be used from several
//! threads.

mod cover;
mod dual;
mod iso;
mod morphism;
mod ops;
mod presentation;
mod split;

pub use cover::{syzygy, Syzygy, Top};
pub(crate) use cover::free_act;
pub(crate) use dual::{hom_matrix, hom_solutions};
pub use dual::{Dual, Evaluation};
pub use iso::{is_isomorphic, IsoResult};
pub use morphism::Morphism;
pub use ops::{cokernel, direct_sum, direct_sum_many, image, kernel, morphism_sum, quotient, submodule, DirectSum};
pub use presentation::{PresentationMatrix, RingMatrix};
pub use split::{free_rank, CyclicPiece, FreeSplit, Piece};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Accumulator, Echelon, Matrix, PrimeField, SVec, SparseMatrix, Subspace};
use std::fmt;
use std::sync::{Arc, OnceLock};

pub struct Module {
    ring: Arc<Algebra>,
    dim: usize,
    actions: Vec<SparseMatrix>,
    cache: Cache,
}

#[derive(Default)]
struct Cache {
    transposed: OnceLock<Vec<SparseMatrix>>,
    top: OnceLock<Top>,
    syzygy: OnceLock<Syzygy>,
    section: OnceLock<crate::exactla::Solver>,
    dual: OnceLock<Dual>,
    pieces: OnceLock<Vec<Piece>>,
    free_split: OnceLock<FreeSplit>,
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module(dim={}, ring={})", self.dim, self.ring.label())
    }
}

impl Clone for Module {
    fn clone(&self) -> Self {
        Module { ring: self.ring.clone(), dim: self.dim, actions: self.actions.clone(), cache: Cache::default() }
    }
}

impl Module {
    /// Build from dense action matrices, checking the module axioms.
    pub fn new(ring: Arc<Algebra>, actions: Vec<Matrix>) -> Result<Arc<Module>> {
        let d = ring.dim();
        if actions.len() != d {
            return Err(Error::InvalidModule(format!("expected {d} action matrices, got {}", actions.len())));
        }
        let dim = actions[0].rows();
        if actions.iter().any(|a| a.rows() != dim || a.cols() != dim) {
            return Err(Error::InvalidModule("action matrices must be square of equal size".into()));
        }
        let m = Module::from_sparse(ring, dim, actions.iter().map(SparseMatrix::from_dense).collect());
        m.check_axioms()?;
        Ok(Arc::new(m))
    }

    pub(crate) fn from_sparse(ring: Arc<Algebra>, dim: usize, actions: Vec<SparseMatrix>) -> Module {
        debug_assert_eq!(actions.len(), ring.dim());
        Module { ring, dim, actions, cache: Cache::default() }
    }

    /// Verify `A₀ = I` and `A_i A_j = Σ c_{ijl} A_l`.
    pub fn check_axioms(&self) -> Result<()> {
        let f = self.field();
        if self.actions[0] != SparseMatrix::identity(f, self.dim) {
            return Err(Error::InvalidModule("b0 must act as the identity".into()));
        }
        let d = self.ring.dim();
        for i in 1..d {
            for j in i..d {
                let lhs = self.actions[i].mul(&self.actions[j]);
                let rhs = self.element_action(self.ring.product(i, j));
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!("action of b{i}*b{j} is inconsistent")));
                }
                if i != j && self.actions[j].mul(&self.actions[i]) != lhs {
                    return Err(Error::InvalidModule(format!("actions of b{i} and b{j} do not commute")));
                }
            }
        }
        Ok(())
    }

    pub fn zero(ring: &Arc<Algebra>) -> Arc<Module> {
        let f = ring.field();
        let actions = (0..ring.dim()).map(|_| SparseMatrix::zeros(f, 0, 0)).collect();
        Arc::new(Module::from_sparse(ring.clone(), 0, actions))
    }

    /// `R^r` with the blockwise regular action.
    pub fn free(ring: &Arc<Algebra>, r: usize) -> Arc<Module> {
        let d = ring.dim();
        let f = ring.field();
        let actions = (0..d)
            .map(|l| {
                let m = ring.mult_matrix(l);
                let mut rows: Vec<SVec> = Vec::with_capacity(r * d);
                for j in 0..r {
                    for q in 0..d {
                        rows.push(m.row(q).iter().map(|&(c, x)| (c + (j * d) as u32, x)).collect());
                    }
                }
                SparseMatrix::from_rows(f, r * d, rows)
            })
            .collect();
        Arc::new(Module::from_sparse(ring.clone(), r * d, actions))
    }

    pub fn regular(ring: &Arc<Algebra>) -> Arc<Module> {
        Self::free(ring, 1)
    }

    /// The residue field `k = R/𝔪`.
    pub fn residue_field(ring: &Arc<Algebra>) -> Arc<Module> {
        Self::ring_quotient(ring, ring.maximal_ideal())
    }

    /// `R/I` for an ideal given as a subspace of R.
    pub fn ring_quotient(ring: &Arc<Algebra>, ideal: &Subspace) -> Arc<Module> {
        let r = Self::regular(ring);
        ops::quotient(&r, ideal).0
    }

    /// `R/𝔪^n`.
    pub fn ring_mod_power(ring: &Arc<Algebra>, n: usize) -> Arc<Module> {
        Self::ring_quotient(ring, &ring.power(n))
    }

    /// The maximal ideal as a submodule of R.
    pub fn maximal_ideal(ring: &Arc<Algebra>) -> Arc<Module> {
        let r = Self::regular(ring);
        ops::submodule(&r, ring.maximal_ideal()).0
    }

    pub fn ring(&self) -> &Arc<Algebra> {
        &self.ring
    }
    pub fn field(&self) -> PrimeField {
        self.ring.field()
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }
    /// Action of the basis element `b_l`.
    pub fn action(&self, l: usize) -> &SparseMatrix {
        &self.actions[l]
    }
    pub fn actions(&self) -> &[SparseMatrix] {
        &self.actions
    }
    pub fn actions_dense(&self) -> Vec<Matrix> {
        self.actions.iter().map(SparseMatrix::to_dense).collect()
    }

    /// Transposed actions; row `c` of the `l`-th is `A_l e_c`.
    pub fn transposed_actions(&self) -> &[SparseMatrix] {
        self.cache.transposed.get_or_init(|| self.actions.iter().map(SparseMatrix::transpose).collect())
    }

    /// `A_l e_c` as a sparse vector.
    pub fn act_basis(&self, l: usize, c: usize) -> &[(u32, u32)] {
        self.transposed_actions()[l].row(c)
    }

    /// Matrix of the action of a ring element.
    pub fn element_action(&self, r: &[u32]) -> SparseMatrix {
        let terms: Vec<(u32, &SparseMatrix)> = r.iter().copied().zip(self.actions.iter()).collect();
        SparseMatrix::combination(self.field(), self.dim, self.dim, &terms)
    }

    /// `r·v`.
    pub fn act(&self, r: &[u32], v: &[u32]) -> Vec<u32> {
        let f = self.field();
        let mut out = vec![0u32; self.dim];
        for (l, &c) in r.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let w = self.actions[l].mul_vec(v);
            for (o, x) in out.iter_mut().zip(w) {
                *o = f.mul_add(*o, c, x);
            }
        }
        out
    }

    /// `A_l v` for sparse `v`.
    pub fn act_sparse(&self, l: usize, v: &[(u32, u32)], acc: &mut Accumulator) -> SVec {
        let t = &self.transposed_actions()[l];
        for &(c, x) in v {
            acc.add_scaled(x, t.row(c as usize));
        }
        acc.take()
    }

    /// `𝔪 X`.
    pub fn radical(&self) -> &Subspace {
        &self.top().radical
    }

    /// `𝔪^t X`.
    pub fn radical_power(&self, t: usize) -> Subspace {
        let f = self.field();
        let mut cur = Subspace::full(f, self.dim);
        let mut acc = Accumulator::new(f, self.dim);
        for _ in 0..t {
            let mut next = Subspace::zero(f, self.dim);
            for v in cur.basis_sparse() {
                for l in 1..self.ring.dim() {
                    let w = self.act_sparse(l, &v, &mut acc);
                    next.add_sparse(&w);
                }
            }
            cur = next;
            if cur.dim() == 0 {
                break;
            }
        }
        cur
    }

    /// Dimensions of `𝔪^t X` for `t = 0, 1, …` until zero.
    pub fn loewy_dims(&self) -> Vec<usize> {
        let mut out = vec![self.dim];
        let mut t = 1;
        while *out.last().unwrap() > 0 {
            out.push(self.radical_power(t).dim());
            t += 1;
        }
        out
    }

    /// `{x : 𝔪x = 0}`.
    pub fn socle(&self) -> Subspace {
        let mut e = Echelon::new(self.field(), self.dim);
        for a in &self.actions[1..] {
            for q in 0..self.dim {
                e.insert(a.row(q));
            }
        }
        Subspace::span_sparse(self.field(), self.dim, e.kernel().iter())
    }

    /// `{r ∈ R : r·v = 0}` for a basis vector `e_c`.
    pub fn annihilator_of_basis(&self, c: usize) -> Subspace {
        self.annihilator_of(&[(c as u32, 1)])
    }

    /// `{r ∈ R : r·v = 0}`.
    pub fn annihilator_of(&self, v: &[(u32, u32)]) -> Subspace {
        let f = self.field();
        let d = self.ring.dim();
        let mut acc = Accumulator::new(f, self.dim);
        let cols: Vec<SVec> = (0..d).map(|l| self.act_sparse(l, v, &mut acc)).collect();
        let m = SparseMatrix::from_columns(f, self.dim, &cols);
        let mut e = Echelon::new(f, d);
        for q in 0..self.dim {
            e.insert(m.row(q));
        }
        Subspace::span_sparse(f, d, e.kernel().iter())
    }

    /// `ann_R(X)`.
    pub fn annihilator(&self) -> Subspace {
        let mut ann = Subspace::full(self.field(), self.ring.dim());
        for &g in &self.top().gens {
            ann = ann.intersection(&self.annihilator_of_basis(g));
        }
        ann
    }

    /// Flattened action matrices, for hashing and equality tests.
    pub fn same_actions(&self, other: &Module) -> bool {
        self.dim == other.dim && self.actions == other.actions
    }
}
