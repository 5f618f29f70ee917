use serde::Serialize;

use crate::algebra::Multivector;

/// Outcome of checking `A^2 = -1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub is_root: bool,
    /// Euclidean norm of the coefficients of `A^2 + 1`.
    pub residual_norm: f64,
    /// Norm of grade k of `A^2 + 1` at index k.
    pub per_grade: Vec<f64>,
    pub tol: f64,
}

/// `A^2 + 1`.
pub fn root_residual(a: &Multivector) -> Multivector {
    a * a + Multivector::scalar(a.signature(), 1.0)
}

pub fn verify(a: &Multivector, tol: f64) -> VerifyReport {
    let r = root_residual(a);
    let n = a.signature().n();
    let mut per_grade = vec![0.0; n + 1];
    for (m, &x) in r.coeffs().iter().enumerate() {
        per_grade[m.count_ones() as usize] += x * x;
    }
    per_grade.iter_mut().for_each(|g| *g = g.sqrt());
    let residual_norm = r.norm();
    VerifyReport {
        is_root: residual_norm <= tol,
        residual_norm,
        per_grade,
        tol,
    }
}
