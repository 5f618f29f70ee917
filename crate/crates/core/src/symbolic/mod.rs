//! Exact constraint systems of `A^2 = -1`.

mod export;
mod poly;
mod reference;
mod render;
mod system;

pub use export::{system_to_json, FormJson, SystemJson, TermJson, EXPORT_CONVENTION};
pub use poly::{Linear, Quadratic};
pub use reference::reference_system;
pub use render::{
    constraints_to_text, display_order, form_label, quadric_signature, render_named,
    render_poly, solve_for_square, to_named, variable_name,
};
pub use system::{derive_constraints, systems_equal, ConstraintSystem, QuadraticForm};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Signature;

    #[test]
    fn reference_matches_derivation_for_all_small_signatures() {
        for n in 1..=4 {
            for sig in Signature::all_of_dim(n).unwrap() {
                let derived = derive_constraints(sig);
                let reference = reference_system(sig).unwrap();
                for m in 0..sig.dim() {
                    assert_eq!(
                        derived.form(m),
                        reference.form(m),
                        "{sig} form {m}: derived {:?} reference {:?}",
                        derived.form(m).to_polynomial(),
                        reference.form(m).to_polynomial()
                    );
                }
                assert!(systems_equal(&derived, &reference).unwrap());
            }
        }
    }
}
