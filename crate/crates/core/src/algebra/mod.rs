//! Multivector arithmetic for nondegenerate real Clifford algebras Cl(p,q).

mod blade;
mod exp;
mod multivector;
mod signature;
mod text;

pub use blade::{blade_product, BasisBlade, StructureTensor};
pub use exp::{EXP_MAX_TERMS, EXP_TOL};
pub use multivector::Multivector;
pub use signature::{Signature, N_MAX};
pub use text::{format_mv, parse_mv, styled_label, TextStyle};
