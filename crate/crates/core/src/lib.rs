pub mod algebra;
pub mod expr;
pub mod homcalc;
pub mod linalg;
pub mod quiver;
pub mod repcat;
