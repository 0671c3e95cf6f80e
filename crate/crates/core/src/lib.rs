//! Exact engine for the polynomial representation of the rational double
//! affine Hecke algebra of type (C∨ₙ, Cₙ) and for multivariable Wilson
//! polynomials, with a floating-point quadrature companion.

pub mod error;
pub mod exactpoly;
pub mod numeric;
pub mod operators;
pub mod suites;
pub mod weyl;
pub mod wilson;

pub use error::{Error, Result};
pub use exactpoly::{LinearForm, Rational, SparsePoly};
