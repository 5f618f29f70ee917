use serde::{Deserialize, Serialize};

use super::system::ConstraintSystem;
use crate::algebra::Signature;

pub const EXPORT_CONVENTION: &str =
    "form m is the coefficient of blade m in A^2; value = sum over listed terms of coef * a_i * a_j (i <= j), off-diagonal coef = 2 Q_ij";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub i: usize,
    pub j: usize,
    pub coef: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FormJson {
    pub mask: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SystemJson {
    pub signature: Signature,
    pub convention: String,
    pub forms: Vec<FormJson>,
}

impl From<&ConstraintSystem> for SystemJson {
    fn from(sys: &ConstraintSystem) -> Self {
        let forms = sys
            .forms()
            .iter()
            .enumerate()
            .map(|(mask, f)| FormJson {
                mask,
                terms: f
                    .to_polynomial()
                    .terms
                    .into_iter()
                    .map(|((i, j), coef)| TermJson { i, j, coef })
                    .collect(),
            })
            .collect();
        Self {
            signature: sys.signature(),
            convention: EXPORT_CONVENTION.to_string(),
            forms,
        }
    }
}

/// Pretty JSON of the system; only nonzero upper-triangle terms are listed.
pub fn system_to_json(sys: &ConstraintSystem) -> String {
    serde_json::to_string_pretty(&SystemJson::from(sys)).expect("system json")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::derive_constraints;

    #[test]
    fn n1_export() {
        let sys = derive_constraints(Signature::new(1, 0).unwrap());
        let v: serde_json::Value = serde_json::from_str(&system_to_json(&sys)).unwrap();
        assert_eq!(v["signature"], serde_json::json!([1, 0]));
        assert_eq!(v["forms"][1]["terms"], serde_json::json!([{"i": 0, "j": 1, "coef": 2}]));
        assert_eq!(v["forms"][0]["terms"].as_array().unwrap().len(), 2);
    }
}
