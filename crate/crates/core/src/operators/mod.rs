//! The faithful polynomial representation of the rational DAHA: generators,
//! `Y`-operators, intertwiners, coefficient functions and identity checks.

pub mod coeffs;
mod params;
mod rep;
pub mod symmetric;
pub mod triangular;

pub use params::Params;
pub use rep::{Op, Representation};
pub use symmetric::{apply_l_shift, apply_l_sym, is_w0_invariant, l_eigenvalue, symmetrize_cplus};
pub use triangular::{check_t_triangularity, TriangularityFailure};
pub mod relations;

pub use relations::{
    gdaha_relations, monomials_up_to, relation_suite, run_relations, verify_operator_identity, IdentityCheck, Relation,
    RelationReport,
};
