//! Real Clifford algebras Cl(p,q) and their geometric square roots of -1.
//!
//! - [`algebra`]: blade products, multivector arithmetic, involutions, duality, exp.
//! - [`symbolic`]: the exact grade-wise constraint system of `A^2 = -1` as integer
//!   quadratic forms, plus its hand-transcribed reference counterpart for n <= 4.
//! - [`roots`]: the catalog of root families for n <= 4 with constructors, samplers,
//!   a verifier, a classifier, a Levenberg-Marquardt solver and nonexistence scans.
//! - [`cli`]: the `cliffroot` command-line front end.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod roots;
pub mod symbolic;

pub use algebra::{BasisBlade, Multivector, Signature};
pub use error::{Error, Result};
