//! Exact rational linear algebra: scalars, dense matrices, subspaces and the
//! elimination kernel everything else is built on.

mod elim;
mod matrix;
pub mod rational;
mod subspace;

pub use elim::{
    algebra_radical, combine, generalized_eigenspace, integer_eigenspaces, inverse, is_nilpotent,
    kernel, kernel_of_rows, left_inverse, rank, solve, spectral_bound, LinalgError,
};
pub use matrix::Matrix;
pub use rational::Rational;
pub use subspace::{unit, Subspace};
