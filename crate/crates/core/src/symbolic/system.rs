use nalgebra::DMatrix;

use super::poly::Quadratic;
use crate::algebra::{Signature, StructureTensor};
use crate::error::{Error, Result};

/// Symmetric integer matrix `Q` with `value(a) = a^T Q a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticForm {
    dim: usize,
    entries: Vec<i32>,
}

impl QuadraticForm {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![0; dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.entries[i * self.dim + j]
    }

    fn set_sym(&mut self, i: usize, j: usize, v: i32) {
        self.entries[i * self.dim + j] = v;
        self.entries[j * self.dim + i] = v;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Every entry in {-1, 0, +1}.
    pub fn is_unit_bounded(&self) -> bool {
        self.entries.iter().all(|v| v.abs() <= 1)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }

    pub fn eval(&self, a: &[f64]) -> f64 {
        let mut total = 0.0;
        for i in 0..self.dim {
            let row = &self.entries[i * self.dim..(i + 1) * self.dim];
            let ri: f64 = row.iter().zip(a).map(|(&q, &x)| f64::from(q) * x).sum();
            total += a[i] * ri;
        }
        total
    }

    /// `Q a`.
    pub fn apply(&self, a: &[f64]) -> Vec<f64> {
        (0..self.dim)
            .map(|i| {
                self.entries[i * self.dim..(i + 1) * self.dim]
                    .iter()
                    .zip(a)
                    .map(|(&q, &x)| f64::from(q) * x)
                    .sum()
            })
            .collect()
    }

    /// Build from a homogeneous quadratic polynomial; off-diagonal polynomial
    /// coefficients must be even (each equals `2 Q_ij`).
    pub fn from_polynomial(dim: usize, poly: &Quadratic) -> Result<Self> {
        if poly.constant != 0 {
            return Err(Error::InvalidArgument("quadratic form with a constant term".into()));
        }
        let mut q = Self::zeros(dim);
        for (&(i, j), &c) in &poly.terms {
            if i >= dim || j >= dim {
                return Err(Error::InvalidArgument(format!("variable index {j} >= {dim}")));
            }
            if i == j {
                q.set_sym(i, i, c as i32);
            } else if c % 2 != 0 {
                return Err(Error::InvalidArgument(format!(
                    "odd cross coefficient {c} for x{i} x{j}"
                )));
            } else {
                q.set_sym(i, j, (c / 2) as i32);
            }
        }
        Ok(q)
    }

    /// Polynomial with the x2 off-diagonal convention.
    pub fn to_polynomial(&self) -> Quadratic {
        let mut p = Quadratic::default();
        for i in 0..self.dim {
            for j in i..self.dim {
                let v = self.get(i, j) as i64;
                if v != 0 {
                    p.add_monomial(i, j, if i == j { v } else { 2 * v });
                }
            }
        }
        p
    }
}

/// One quadratic form per output blade: form `m` gives the blade-`m`
/// coefficient of `A^2`. The root condition is `form_0(a) + 1 = 0`, the
/// constraints are `form_m(a) = 0` for `m != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintSystem {
    signature: Signature,
    forms: Vec<QuadraticForm>,
}

impl ConstraintSystem {
    pub fn new(signature: Signature, forms: Vec<QuadraticForm>) -> Result<Self> {
        let dim = signature.dim();
        if forms.len() != dim || forms.iter().any(|f| f.dim() != dim) {
            return Err(Error::LengthMismatch {
                expected: dim,
                got: forms.len(),
            });
        }
        Ok(Self { signature, forms })
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn forms(&self) -> &[QuadraticForm] {
        &self.forms
    }

    pub fn form(&self, mask: usize) -> &QuadraticForm {
        &self.forms[mask]
    }

    pub fn root_form(&self) -> &QuadraticForm {
        &self.forms[0]
    }

    fn check_len(&self, a: &[f64]) -> Result<()> {
        if a.len() != self.signature.dim() {
            return Err(Error::LengthMismatch {
                expected: self.signature.dim(),
                got: a.len(),
            });
        }
        Ok(())
    }

    /// Coefficients of `A^2 + 1`.
    pub fn residual(&self, a: &[f64]) -> Result<Vec<f64>> {
        self.check_len(a)?;
        Ok(self
            .forms
            .iter()
            .enumerate()
            .map(|(m, f)| f.eval(a) + if m == 0 { 1.0 } else { 0.0 })
            .collect())
    }

    pub fn residual_norm(&self, a: &[f64]) -> Result<f64> {
        Ok(self.residual(a)?.iter().map(|r| r * r).sum::<f64>().sqrt())
    }

    /// Row `m` is the gradient `2 Q_m a`.
    pub fn jacobian(&self, a: &[f64]) -> Result<DMatrix<f64>> {
        self.check_len(a)?;
        let dim = a.len();
        let mut j = DMatrix::zeros(dim, dim);
        for (m, f) in self.forms.iter().enumerate() {
            for (i, g) in f.apply(a).into_iter().enumerate() {
                j[(m, i)] = 2.0 * g;
            }
        }
        Ok(j)
    }
}

/// Constraint system of `A^2 = -1` read off the structure tensor.
pub fn derive_constraints(sig: Signature) -> ConstraintSystem {
    let dim = sig.dim();
    let table = StructureTensor::of(sig);
    let mut forms = vec![QuadraticForm::zeros(dim); dim];
    for i in 0..dim {
        forms[0].set_sym(i, i, i32::from(table.sign(i, i)));
        for j in i + 1..dim {
            // (e_i e_j + e_j e_i) / 2 in units of e_{i^j}
            let v = (i32::from(table.sign(i, j)) + i32::from(table.sign(j, i))) / 2;
            forms[i ^ j].set_sym(i, j, v);
        }
    }
    ConstraintSystem {
        signature: sig,
        forms,
    }
}

/// Exact entrywise equality of two systems over the same signature.
pub fn systems_equal(a: &ConstraintSystem, b: &ConstraintSystem) -> Result<bool> {
    if a.signature != b.signature {
        return Err(Error::SignatureMismatch(a.signature, b.signature));
    }
    Ok(a.forms == b.forms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BasisBlade, Multivector};

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    #[test]
    fn n1_forms() {
        let sys = derive_constraints(sig(1, 0));
        // alpha^2 + beta^2 ; 2 alpha beta
        assert_eq!(sys.root_form().to_polynomial().terms.len(), 2);
        assert_eq!(sys.form(0).get(1, 1), 1);
        assert_eq!(sys.form(1).get(0, 1), 1);
        assert_eq!(sys.form(1).to_polynomial().terms[&(0, 1)], 2);
        let neg = derive_constraints(sig(0, 1));
        assert_eq!(neg.form(0).get(1, 1), -1);
    }

    #[test]
    fn n2_bivector_form_is_two_alpha_beta() {
        for (p, q) in [(2, 0), (1, 1), (0, 2)] {
            let f = derive_constraints(sig(p, q)).form(0b11).to_polynomial();
            assert_eq!(f.terms.len(), 1);
            assert_eq!(f.terms[&(0, 3)], 2);
        }
    }

    #[test]
    fn root_diagonal_is_blade_square() {
        for (p, q) in [(3, 0), (1, 2), (2, 2), (0, 4)] {
            let s = sig(p, q);
            let sys = derive_constraints(s);
            for m in 0..s.dim() {
                let b = Multivector::blade(s, BasisBlade(m), 1.0);
                assert_eq!(f64::from(sys.root_form().get(m, m)), (&b * &b).get(BasisBlade::SCALAR));
            }
        }
    }

    #[test]
    fn residual_basics() {
        let s = sig(0, 1);
        let sys = derive_constraints(s);
        assert_eq!(sys.residual(&[0.0, 1.0]).unwrap(), vec![0.0, 0.0]);
        assert_eq!(sys.residual(&[0.0, 0.0]).unwrap(), vec![1.0, 0.0]);
        assert!(sys.residual(&[0.0]).is_err());
        let j = sys.jacobian(&[0.5, 2.0]).unwrap();
        // r0 = a0^2 - a1^2 + 1, r1 = 2 a0 a1
        assert_eq!(j[(0, 0)], 1.0);
        assert_eq!(j[(0, 1)], -4.0);
        assert_eq!(j[(1, 0)], 4.0);
        assert_eq!(j[(1, 1)], 1.0);
    }

    #[test]
    fn invariants_hold_up_to_n6() {
        for n in 1..=6 {
            for s in Signature::all_of_dim(n).unwrap() {
                let sys = derive_constraints(s);
                assert!(sys.forms().iter().all(|f| f.is_symmetric() && f.is_unit_bounded()));
            }
        }
    }

    #[test]
    fn polynomial_roundtrip_and_odd_rejection() {
        let sys = derive_constraints(sig(2, 1));
        for f in sys.forms() {
            assert_eq!(&QuadraticForm::from_polynomial(8, &f.to_polynomial()).unwrap(), f);
        }
        let mut odd = Quadratic::default();
        odd.add_monomial(0, 1, 1);
        assert!(QuadraticForm::from_polynomial(2, &odd).is_err());
    }

    #[test]
    fn equality_checks_signature() {
        let a = derive_constraints(sig(2, 0));
        assert!(systems_equal(&a, &a).unwrap());
        assert!(systems_equal(&a, &derive_constraints(sig(1, 1))).is_err());
    }
}
