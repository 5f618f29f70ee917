use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub};

use super::blade::{BasisBlade, StructureTensor};
use super::signature::Signature;
use crate::error::{Error, Result};

/// Dense multivector over the 2^n canonical basis blades of Cl(p,q).
///
/// Coefficient `i` belongs to the blade with mask `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector {
    sig: Signature,
    coeffs: Vec<f64>,
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Self {
            sig,
            coeffs: vec![0.0; sig.dim()],
        }
    }

    pub fn scalar(sig: Signature, value: f64) -> Self {
        Self::blade(sig, BasisBlade::SCALAR, value)
    }

    pub fn blade(sig: Signature, blade: BasisBlade, coef: f64) -> Self {
        let mut mv = Self::zero(sig);
        mv.coeffs[blade.0] = coef;
        mv
    }

    /// Vector `sum_k v[k] e_{k+1}`.
    pub fn vector(sig: Signature, v: &[f64]) -> Result<Self> {
        if v.len() > sig.n() {
            return Err(Error::LengthMismatch {
                expected: sig.n(),
                got: v.len(),
            });
        }
        let mut mv = Self::zero(sig);
        for (k, &x) in v.iter().enumerate() {
            mv.coeffs[1 << k] = x;
        }
        Ok(mv)
    }

    pub fn from_coeffs(sig: Signature, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.len() != sig.dim() {
            return Err(Error::LengthMismatch {
                expected: sig.dim(),
                got: coeffs.len(),
            });
        }
        Ok(Self { sig, coeffs })
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<f64> {
        self.coeffs
    }

    pub fn get(&self, blade: BasisBlade) -> f64 {
        self.coeffs[blade.0]
    }

    pub fn set(&mut self, blade: BasisBlade, value: f64) {
        self.coeffs[blade.0] = value;
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch(self.sig, other.sig));
        }
        Ok(())
    }

    /// Bilinear product over blade pairs, keeping only the pairs `keep` admits.
    fn product_where(&self, other: &Self, keep: impl Fn(usize, usize) -> bool) -> Result<Self> {
        self.check(other)?;
        let table = StructureTensor::of(self.sig);
        let mut out = vec![0.0; self.sig.dim()];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0.0 || !keep(i, j) {
                    continue;
                }
                out[i ^ j] += f64::from(table.sign(i, j)) * a * b;
            }
        }
        Ok(Self {
            sig: self.sig,
            coeffs: out,
        })
    }

    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        self.product_where(other, |_, _| true)
    }

    /// Grade r+s part of each blade-pair product.
    pub fn outer_product(&self, other: &Self) -> Result<Self> {
        self.product_where(other, |i, j| i & j == 0)
    }

    /// Left contraction: grade s-r part of each blade-pair product, zero for r > s.
    pub fn left_contraction(&self, other: &Self) -> Result<Self> {
        self.product_where(other, |i, j| i & j == i)
    }

    /// `<AB>_0`.
    pub fn scalar_product(&self, other: &Self) -> Result<f64> {
        self.check(other)?;
        let table = StructureTensor::of(self.sig);
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .map(|(i, (&a, &b))| f64::from(table.sign(i, i)) * a * b)
            .sum())
    }

    pub fn grade_project(&self, k: usize) -> Result<Self> {
        if k > self.sig.n() {
            return Err(Error::GradeOutOfRange {
                grade: k,
                n: self.sig.n(),
            });
        }
        Ok(self.map_by_blade(|m, x| if m.count_ones() as usize == k { x } else { 0.0 }))
    }

    fn map_by_blade(&self, f: impl Fn(usize, f64) -> f64) -> Self {
        Self {
            sig: self.sig,
            coeffs: self.coeffs.iter().enumerate().map(|(m, &x)| f(m, x)).collect(),
        }
    }

    fn grade_sign(&self, sign: impl Fn(usize) -> bool) -> Self {
        self.map_by_blade(|m, x| if sign(m.count_ones() as usize) { -x } else { x })
    }

    /// Reversion: grade k scaled by (-1)^{k(k-1)/2}.
    pub fn reverse(&self) -> Self {
        self.grade_sign(|k| (k * k.saturating_sub(1) / 2) % 2 == 1)
    }

    /// Grade involution: grade k scaled by (-1)^k.
    pub fn grade_involution(&self) -> Self {
        self.grade_sign(|k| k % 2 == 1)
    }

    /// Clifford conjugation: grade k scaled by (-1)^{k(k+1)/2}.
    pub fn conjugate(&self) -> Self {
        self.grade_sign(|k| (k * (k + 1) / 2) % 2 == 1)
    }

    /// Unit pseudoscalar I_n = e_1 e_2 ... e_n.
    pub fn pseudoscalar(sig: Signature) -> Self {
        Self::blade(sig, BasisBlade::pseudoscalar(sig), 1.0)
    }

    /// I_n^{-1} = I_n^2 I_n, since I_n^2 = +-1.
    pub fn pseudoscalar_inverse(sig: Signature) -> Self {
        let i = BasisBlade::pseudoscalar(sig);
        let square = StructureTensor::of(sig).sign(i.0, i.0);
        Self::blade(sig, i, f64::from(square))
    }

    /// `A I_n^{-1}`.
    pub fn dual(&self) -> Self {
        self.geometric_product(&Self::pseudoscalar_inverse(self.sig))
            .expect("same signature")
    }

    /// Euclidean norm of the coefficient vector.
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map_by_blade(|_, x| s * x)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&x| x == 0.0)
    }
}

impl Index<BasisBlade> for Multivector {
    type Output = f64;
    fn index(&self, b: BasisBlade) -> &f64 {
        &self.coeffs[b.0]
    }
}

impl AddAssign<&Multivector> for Multivector {
    /// Panics on signature mismatch.
    fn add_assign(&mut self, rhs: &Multivector) {
        self.check(rhs).expect("signature mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        &self + &rhs
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self + &(-rhs)
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        &self - &rhs
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

impl Mul for &Multivector {
    type Output = Multivector;
    /// Geometric product. Panics on signature mismatch; use
    /// [`Multivector::geometric_product`] for the fallible form.
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.geometric_product(rhs).expect("signature mismatch")
    }
}

impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        &self * &rhs
    }
}

impl Mul<f64> for &Multivector {
    type Output = Multivector;
    fn mul(self, s: f64) -> Multivector {
        self.scale(s)
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, s: f64) -> Multivector {
        self.scale(s)
    }
}
