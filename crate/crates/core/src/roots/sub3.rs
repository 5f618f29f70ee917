//! The e1, e2, e3 subalgebra inside Cl(p,q), n >= 3, in the cyclic
//! coordinates `alpha + b + c + beta e123` with c on e23, e31, e12.
//!
//! Products go through [`Multivector`] so the family formulas below are
//! written in algebra terms rather than expanded coordinates.

use crate::algebra::{BasisBlade, Multivector, Signature};

/// Canonical masks of e23, e31, e12 and the sign relating each to its
/// canonical blade (`e31 = -e13`).
pub(crate) const CYCLIC: [(usize, f64); 3] = [(0b110, 1.0), (0b101, -1.0), (0b011, 1.0)];
pub(crate) const VECTOR: [usize; 3] = [0b001, 0b010, 0b100];
pub(crate) const TRIVECTOR: usize = 0b111;

/// One coefficient group of the 3D subalgebra.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub(crate) struct Group {
    pub alpha: f64,
    pub b: [f64; 3],
    pub c: [f64; 3],
    pub beta: f64,
}

impl Group {
    /// Read the group whose blades are the subalgebra blades OR `offset`.
    pub fn read(coeffs: &[f64], offset: usize) -> Self {
        Self {
            alpha: coeffs[offset],
            b: VECTOR.map(|m| coeffs[offset | m]),
            c: CYCLIC.map(|(m, s)| s * coeffs[offset | m]),
            beta: coeffs[offset | TRIVECTOR],
        }
    }

    pub fn write(&self, coeffs: &mut [f64], offset: usize) {
        coeffs[offset] = self.alpha;
        for k in 0..3 {
            coeffs[offset | VECTOR[k]] = self.b[k];
            let (m, s) = CYCLIC[k];
            coeffs[offset | m] = s * self.c[k];
        }
        coeffs[offset | TRIVECTOR] = self.beta;
    }
}

/// Euclidean dot product of coordinate triples.
pub(crate) fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn euclid(a: &[f64; 3]) -> f64 {
    dot(a, a).sqrt()
}

pub(crate) fn scale3(a: [f64; 3], s: f64) -> [f64; 3] {
    a.map(|x| s * x)
}

/// Remove from `d` its components along `normals` (zero normals are skipped),
/// Euclidean Gram-Schmidt.
pub(crate) fn project_out(d: [f64; 3], normals: &[[f64; 3]]) -> [f64; 3] {
    let mut basis: Vec<[f64; 3]> = Vec::new();
    for n in normals {
        let mut u = *n;
        for e in &basis {
            let k = dot(&u, e);
            u = [u[0] - k * e[0], u[1] - k * e[1], u[2] - k * e[2]];
        }
        let len = euclid(&u);
        if len > 1e-12 * euclid(n) && len > 0.0 {
            basis.push(scale3(u, 1.0 / len));
        }
    }
    let mut out = d;
    for e in &basis {
        let k = dot(&out, e);
        out = [out[0] - k * e[0], out[1] - k * e[1], out[2] - k * e[2]];
    }
    out
}

/// A unit vector orthogonal to `normals`: the projected coordinate axis
/// with the largest remainder.
pub(crate) fn any_orthogonal(normals: &[[f64; 3]]) -> [f64; 3] {
    let best = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
        .map(|axis| project_out(axis, normals))
        .into_iter()
        .max_by(|a, b| euclid(a).total_cmp(&euclid(b)))
        .unwrap();
    scale3(best, 1.0 / euclid(&best))
}

/// Projection of `v` onto the line spanned by `u` (zero if `u` vanishes).
pub(crate) fn project_onto(v: [f64; 3], u: [f64; 3]) -> [f64; 3] {
    let uu = dot(&u, &u);
    if uu == 0.0 {
        return [0.0; 3];
    }
    scale3(u, dot(&v, &u) / uu)
}

/// Algebra operations restricted to e1, e2, e3 of a signature with n >= 3.
pub(crate) struct Sub3 {
    sig: Signature,
    i: Multivector,
    i_inv: Multivector,
}

impl Sub3 {
    pub fn new(sig: Signature) -> Self {
        assert!(sig.n() >= 3);
        let i = Multivector::blade(sig, BasisBlade(TRIVECTOR), 1.0);
        let s = (&i * &i).get(BasisBlade::SCALAR);
        let i_inv = i.scale(s);
        Self { sig, i, i_inv }
    }

    pub fn eps4(&self) -> f64 {
        f64::from(self.sig.epsilon(4))
    }

    pub fn vec(&self, b: [f64; 3]) -> Multivector {
        let mut mv = Multivector::zero(self.sig);
        for k in 0..3 {
            mv.set(BasisBlade(VECTOR[k]), b[k]);
        }
        mv
    }

    pub fn biv(&self, c: [f64; 3]) -> Multivector {
        let mut mv = Multivector::zero(self.sig);
        for k in 0..3 {
            let (m, s) = CYCLIC[k];
            mv.set(BasisBlade(m), s * c[k]);
        }
        mv
    }

    pub fn vec_of(&self, mv: &Multivector) -> [f64; 3] {
        VECTOR.map(|m| mv.get(BasisBlade(m)))
    }

    pub fn biv_of(&self, mv: &Multivector) -> [f64; 3] {
        CYCLIC.map(|(m, s)| s * mv.get(BasisBlade(m)))
    }

    /// `<x x>_0`, which is the full square for subalgebra vectors and bivectors.
    pub fn sq(&self, x: &Multivector) -> f64 {
        x.scalar_product(x).expect("same signature")
    }

    pub fn vec_sq(&self, b: [f64; 3]) -> f64 {
        self.sq(&self.vec(b))
    }

    pub fn biv_sq(&self, c: [f64; 3]) -> f64 {
        self.sq(&self.biv(c))
    }

    /// `b ^ b'` as cyclic bivector coordinates.
    pub fn wedge_vv(&self, b: [f64; 3], bp: [f64; 3]) -> [f64; 3] {
        self.biv_of(&self.vec(b).outer_product(&self.vec(bp)).unwrap())
    }

    /// `b . c` (left contraction) as vector coordinates.
    pub fn contract_vb(&self, b: [f64; 3], c: [f64; 3]) -> [f64; 3] {
        self.vec_of(&self.vec(b).left_contraction(&self.biv(c)).unwrap())
    }

    /// `b e123` as bivector coordinates.
    pub fn vec_i(&self, b: [f64; 3]) -> [f64; 3] {
        self.biv_of(&(&self.vec(b) * &self.i))
    }

    /// `v e123^-1` as bivector coordinates.
    pub fn vec_i_inv(&self, v: [f64; 3]) -> [f64; 3] {
        self.biv_of(&(&self.vec(v) * &self.i_inv))
    }

    /// Euclidean normal `w` with `<c c'>_0 = w . c` for all c.
    pub fn biv_normal(&self, cp: [f64; 3]) -> [f64; 3] {
        let target = self.biv(cp);
        [0, 1, 2].map(|k| {
            let mut unit = [0.0; 3];
            unit[k] = 1.0;
            self.biv(unit).scalar_product(&target).unwrap()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_roundtrip() {
        let coeffs: Vec<f64> = (0..16).map(|i| i as f64).collect();
        let g = Group::read(&coeffs, 8);
        assert_eq!(g.c, [14.0, -13.0, 11.0]);
        let mut out = vec![0.0; 16];
        g.write(&mut out, 8);
        assert_eq!(&out[8..], &coeffs[8..]);
    }

    #[test]
    fn dual_of_bivector_metric() {
        // Cl(1,2): (b e123^-1) e123 = b
        let s = Sub3::new(Signature::new(1, 2).unwrap());
        let c = s.vec_i_inv([1.0, 2.0, 3.0]);
        assert_eq!(s.vec_of(&(&s.biv(c) * &s.i)), [1.0, 2.0, 3.0]);
    }

    #[test]
    fn projections() {
        let d = project_out([1.0, 1.0, 0.0], &[[1.0, 0.0, 0.0], [0.0; 3]]);
        assert_eq!(d, [0.0, 1.0, 0.0]);
        let u = any_orthogonal(&[[1.0, 1.0, 0.0], [0.0, 0.0, 2.0]]);
        assert!(dot(&u, &[1.0, 1.0, 0.0]).abs() < 1e-15 && (euclid(&u) - 1.0).abs() < 1e-15);
    }
}
