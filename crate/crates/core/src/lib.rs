pub mod algebra;
pub mod approx;
pub mod corpus;
pub mod error;
pub mod homology;
pub mod invariants;
pub mod io;
pub mod modules;
pub mod exactla;

pub use error::{Error, Result};
