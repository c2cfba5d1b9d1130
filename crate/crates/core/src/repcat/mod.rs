//! Finite-dimensional modules: constructors, functors, verification and
//! weight analysis.

mod build;
mod functors;
mod module;
mod verify;
pub mod verma;
mod weights;

pub use build::{
    build_s, build_simple, build_t, build_verma2_trunc, build_verma_general, build_verma_trunc,
    pullback_sl2, t_basis, TruncatedVerma,
};
pub use functors::{
    basis_vector, closure, direct_sum, dual, is_stable, quotient, subquotient,
    submodule_generated, tensor, Submodule,
};
pub use module::{FdModule, ModuleError, Provenance, Truncation};
pub use verify::{verify_module, Check, VerifyReport};
pub use weights::{
    hw_data, hw_series, weight_basis, weight_decomposition, WeightBasis, WeightDecomposition,
};
