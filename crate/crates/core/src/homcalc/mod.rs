//! Hom spaces, socles, composition factors, indecomposability and Ext¹.

mod decomp;
mod ext;
mod hom;
mod system;

pub use decomp::{
    composition_factors, is_indecomposable, is_isomorphic, socle, socle_layers, Decision,
    HomcalcError,
};
pub use ext::{build_extension, ext1, ext1_ungraded, Cocycle, ExtResult};
pub use hom::{hom_space, hom_space_ungraded, HomSpace};
