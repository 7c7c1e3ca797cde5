//! Equivariant linear maps.

use super::Module;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, SparseMatrix, Subspace};
use std::sync::Arc;

/// A module homomorphism; `mat` is `dim(target) × dim(source)`.
#[derive(Clone, Debug)]
pub struct Morphism {
    source: Arc<Module>,
    target: Arc<Module>,
    mat: Matrix,
}

impl Morphism {
    /// Checked constructor.
    pub fn new(source: Arc<Module>, target: Arc<Module>, mat: Matrix) -> Result<Self> {
        if mat.rows() != target.dim() || mat.cols() != source.dim() {
            return Err(Error::InvalidMorphism(format!(
                "matrix is {}x{}, expected {}x{}",
                mat.rows(),
                mat.cols(),
                target.dim(),
                source.dim()
            )));
        }
        let m = Morphism { source, target, mat };
        if let Some(l) = m.equivariance_defect() {
            return Err(Error::InvalidMorphism(format!("not equivariant for b{l}")));
        }
        Ok(m)
    }

    pub(crate) fn new_unchecked(source: Arc<Module>, target: Arc<Module>, mat: Matrix) -> Self {
        debug_assert_eq!((mat.rows(), mat.cols()), (target.dim(), source.dim()));
        Morphism { source, target, mat }
    }

    pub fn identity(m: &Arc<Module>) -> Self {
        Morphism { source: m.clone(), target: m.clone(), mat: Matrix::identity(m.field(), m.dim()) }
    }

    pub fn zero(source: &Arc<Module>, target: &Arc<Module>) -> Self {
        Morphism { source: source.clone(), target: target.clone(), mat: Matrix::zeros(source.field(), target.dim(), source.dim()) }
    }

    pub fn source(&self) -> &Arc<Module> {
        &self.source
    }
    pub fn target(&self) -> &Arc<Module> {
        &self.target
    }
    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    /// First basis index `l` with `mat·A_l ≠ A_l·mat`, if any.
    pub fn equivariance_defect(&self) -> Option<usize> {
        let s = SparseMatrix::from_dense(&self.mat);
        (1..self.source.ring().dim()).find(|&l| s.mul(self.source.action(l)) != self.target.action(l).mul(&s))
    }

    pub fn is_equivariant(&self) -> bool {
        self.equivariance_defect().is_none()
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        self.mat.mul_vec(v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Morphism) -> Morphism {
        assert_eq!(other.target.dim(), self.source.dim(), "composition of incompatible morphisms");
        Morphism { source: other.source.clone(), target: self.target.clone(), mat: self.mat.mul(&other.mat) }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        Morphism { source: self.source.clone(), target: self.target.clone(), mat: self.mat.add(&other.mat) }
    }

    pub fn sub(&self, other: &Morphism) -> Morphism {
        Morphism { source: self.source.clone(), target: self.target.clone(), mat: self.mat.sub(&other.mat) }
    }

    pub fn scale(&self, c: u32) -> Morphism {
        Morphism { source: self.source.clone(), target: self.target.clone(), mat: self.mat.scale(c) }
    }

    pub fn rank(&self) -> usize {
        self.mat.rank()
    }
    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }
    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }
    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }
    pub fn is_isomorphism(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_injective()
    }

    pub fn image_space(&self) -> Subspace {
        Subspace::column_space(&self.mat)
    }
    pub fn kernel_space(&self) -> Subspace {
        Subspace::kernel_of(&self.mat)
    }

    /// Does `f ⊗ k` vanish, i.e. is the image inside `𝔪·target`?
    pub fn tensor_residue_is_zero(&self) -> bool {
        let rad = self.target.radical();
        self.mat.columns().iter().all(|c| rad.contains(c))
    }

    /// Replace the endpoints by modules with identical actions.
    pub fn with_endpoints(&self, source: Arc<Module>, target: Arc<Module>) -> Morphism {
        assert_eq!((source.dim(), target.dim()), (self.source.dim(), self.target.dim()));
        Morphism { source, target, mat: self.mat.clone() }
    }

    pub fn into_matrix(self) -> Matrix {
        self.mat
    }
}
