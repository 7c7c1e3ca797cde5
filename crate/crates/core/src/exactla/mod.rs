//! Exact linear algebra over prime fields.

mod echelon;
mod field;
mod matrix;
mod sparse;
mod subspace;

pub use echelon::{linear_relations, Echelon, Solver};
pub use field::PrimeField;
pub use matrix::{kernel_basis, rank, solve, Matrix};
pub use sparse::{axpy_into, axpy_sub, densify, sparsify, Accumulator, SVec, SparseMatrix};
pub use subspace::Subspace;
