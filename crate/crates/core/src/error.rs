use thiserror::Error;

use crate::exactpoly::{Rational, SparsePoly};

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, got {got}")]
    Dimension { expected: usize, got: usize },

    /// `divide_linear` was handed a polynomial that does not vanish on the hyperplane.
    #[error("polynomial is not divisible by {divisor}; nonzero remainder {remainder}")]
    NotDivisible {
        divisor: String,
        remainder: Box<SparsePoly>,
    },

    #[error("linear form is identically zero")]
    ZeroLinearForm,

    #[error("denominator vanishes at grid point {point:?}; choose different offsets")]
    GridPole { point: Vec<Rational> },

    #[error("pole: {0}")]
    Pole(String),

    #[error("word {word:?} is not reduced: {reason}")]
    NotReduced { word: Vec<usize>, reason: String },

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("malformed affine root: {0}")]
    RootShape(String),

    #[error("degenerate parameters: {0}")]
    Degenerate(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
