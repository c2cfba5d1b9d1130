//! The algebra 𝒟: PBW monomials, normal-form multiplication, grading and
//! Hopf structure.

mod element;
pub mod hopf;
mod monomial;
pub mod relations;
pub mod rewrite;

pub use element::{AlgebraElement, TensorElement};
pub use hopf::{antipode, coproduct, counit};
pub use monomial::{Generator, PbwMonomial};
pub use relations::{verify_presentation, RelationTable};
pub use rewrite::{multiply, normal_form};

use crate::linalg::Rational;
use num_traits::One;

/// Degree of a monomial in the ℤ-grading (`x`, `y` ↦ −2, `u`, `v` ↦ 2).
pub fn grade(m: &PbwMonomial) -> i64 {
    m.grade()
}

/// Raising factorial `t(t+1)…(t+k−1)`.
pub fn raising_factorial(t: &Rational, k: u64) -> Rational {
    let mut acc = Rational::one();
    let mut f = t.clone();
    for _ in 0..k {
        acc *= &f;
        f += Rational::one();
    }
    acc
}
