//! Floating-point companion: complex Gamma, the weights `Δ₊` and `Δ`, tensor
//! quadrature at `n = 2` and numeric cross-checks of the exact layer.

mod gamma;
mod quadrature;
mod report;
mod weight;

pub use gamma::{complex_gamma, ln_gamma, ln_gamma_real};
pub use quadrature::{pairwise_sum, quad_inner, QuadResult, Quadrature, QuadratureSpec};
pub use report::{
    constant_suite, full_mass, gustafson_constant, norms_suite, orthogonality_suite, run_numeric_suite,
    selfadjoint_suite, GramMatrix, NumericCheck, NumericReport, NUMERIC_SUITES,
};
pub use weight::{weight_eval, WeightKind};
