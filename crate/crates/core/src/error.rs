//! Error type shared by the library.

use thiserror::Error;

pub use crate::algebra::RingDefect;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid ring: {0}")]
    InvalidRing(RingDefect),

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("resource budget exceeded: {what} needs dimension {needed}, budget is {budget}")]
    Budget { what: String, needed: usize, budget: usize },

    #[error("module is not in the required class: {0}")]
    NotInCategory(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
