//! Exact rationals, sparse multivariate polynomials, linear forms and
//! grid-based certification of polynomial identities.

pub mod grid;
pub mod linalg;
pub mod linear;
pub mod poly;
pub mod rational;

pub use grid::{default_offsets, grid_verify_zero, interpolate_tensor, univariate_interpolate};
pub use linear::{divide_linear, LinearForm};
pub use poly::{ArithOp, Exponent, SparsePoly, TermJson};
pub use rational::{format_rational, half, int, parse_rational, q, to_f64, Rational};
