//! Hand-transcribed constraint systems for n <= 4.
//!
//! Each system is written the way it is derived by hand: the multivector is
//! split into coefficient groups (alpha, vector b, bivector c in the cyclic
//! basis {e23, e31, e12}, trivector beta e123, and for n = 4 a second group of
//! the same shape multiplied by e4). The grade parts of `A^2` are expressed
//! through coordinate formulas for the 3D products (squares, contractions,
//! wedges, multiplication by e123) weighted by the generator squares. Nothing
//! here consults the structure tensor, so comparing against
//! [`derive_constraints`](super::derive_constraints) is an independent check.
//!
//! Hand-derived constraints usually drop common factors of 2; the forms below keep
//! them so that each form is exactly the blade coefficient of `A^2`.

use super::poly::{Linear, Quadratic};
use super::system::{ConstraintSystem, QuadraticForm};
use crate::algebra::Signature;
use crate::error::{Error, Result};

/// Canonical masks of the cyclic bivector basis e23, e31, e12, with the sign
/// relating each to its canonical blade (e31 = -e13).
const CYCLIC_BIVECTORS: [(usize, i64); 3] = [(0b110, 1), (0b101, -1), (0b011, 1)];
const VECTOR_MASKS: [usize; 3] = [0b001, 0b010, 0b100];
const TRIVECTOR_MASK: usize = 0b111;

type Triple<T> = [T; 3];

/// alpha + b + c + beta e123, with every coordinate a linear form in the
/// canonical coefficients.
struct Group {
    alpha: Linear,
    b: Triple<Linear>,
    c: Triple<Linear>,
    beta: Linear,
}

impl Group {
    /// Coordinates read from the canonical coefficient block starting at `offset`.
    fn at(offset: usize) -> Self {
        Self {
            alpha: Linear::var(offset),
            b: VECTOR_MASKS.map(|m| Linear::var(offset | m)),
            c: CYCLIC_BIVECTORS.map(|(m, s)| Linear::term(offset | m, s)),
            beta: Linear::var(offset | TRIVECTOR_MASK),
        }
    }
}

/// Coordinate formulas of the 3D subalgebra spanned by e1, e2, e3.
struct Space3 {
    eps: [i64; 3],
}

impl Space3 {
    /// Indices (i, j) completing k to a cyclic triple (k, i, j).
    fn cyc(k: usize) -> (usize, usize) {
        ((k + 1) % 3, (k + 2) % 3)
    }

    /// e123^2 = -eps1 eps2 eps3.
    fn i_sq(&self) -> i64 {
        -self.eps[0] * self.eps[1] * self.eps[2]
    }

    /// E_k^2 for the cyclic bivector E_k = e_i e_j.
    fn biv_metric(&self, k: usize) -> i64 {
        let (i, j) = Self::cyc(k);
        -self.eps[i] * self.eps[j]
    }

    fn vec_dot(&self, b: &Triple<Linear>, bp: &Triple<Linear>) -> Quadratic {
        (0..3).fold(Quadratic::default(), |acc, k| acc + b[k].times(&bp[k]) * self.eps[k])
    }

    fn biv_dot(&self, c: &Triple<Linear>, cp: &Triple<Linear>) -> Quadratic {
        (0..3).fold(Quadratic::default(), |acc, k| {
            acc + c[k].times(&cp[k]) * self.biv_metric(k)
        })
    }

    /// Coefficient of e123 in b ^ c.
    fn vec_wedge_biv(&self, b: &Triple<Linear>, c: &Triple<Linear>) -> Quadratic {
        (0..3).fold(Quadratic::default(), |acc, k| acc + b[k].times(&c[k]))
    }

    /// b e123 as a bivector: (b I)_k = eps_k b_k.
    fn vec_times_i(&self, b: &Triple<Linear>) -> Triple<Linear> {
        [0, 1, 2].map(|k| b[k].scaled(self.eps[k]))
    }

    /// c e123 as a vector: (c I)_k = -eps_i eps_j c_k.
    fn biv_times_i(&self, c: &Triple<Linear>) -> Triple<Linear> {
        [0, 1, 2].map(|k| c[k].scaled(self.biv_metric(k)))
    }

    /// Left contraction b . c of a vector into a bivector:
    /// (b . c)_k = eps_j b_j c_i - eps_i b_i c_j for cyclic (k, i, j).
    fn vec_contract_biv(&self, b: &Triple<Linear>, c: &Triple<Linear>) -> Triple<Quadratic> {
        [0, 1, 2].map(|k| {
            let (i, j) = Self::cyc(k);
            b[j].times(&c[i]) * self.eps[j] - b[i].times(&c[j]) * self.eps[i]
        })
    }

    /// b ^ b' in the cyclic bivector basis: E_k component b_i b'_j - b_j b'_i.
    fn vec_wedge_vec(&self, b: &Triple<Linear>, bp: &Triple<Linear>) -> Triple<Quadratic> {
        [0, 1, 2].map(|k| {
            let (i, j) = Self::cyc(k);
            b[i].times(&bp[j]) - b[j].times(&bp[i])
        })
    }
}

fn scalar_times(s: &Linear, v: &Triple<Linear>) -> Triple<Quadratic> {
    [0, 1, 2].map(|k| s.times(&v[k]))
}

fn add3(a: Triple<Quadratic>, b: Triple<Quadratic>) -> Triple<Quadratic> {
    let [a0, a1, a2] = a;
    let [b0, b1, b2] = b;
    [a0 + b0, a1 + b1, a2 + b2]
}

fn scale3(a: Triple<Quadratic>, s: i64) -> Triple<Quadratic> {
    a.map(|q| q * s)
}

/// Accumulates output polynomials per canonical blade.
struct Output {
    polys: Vec<Quadratic>,
}

impl Output {
    fn new(dim: usize) -> Self {
        Self {
            polys: vec![Quadratic::default(); dim],
        }
    }

    fn put(&mut self, mask: usize, q: Quadratic) {
        self.polys[mask] += &q;
    }

    fn put_vector(&mut self, offset: usize, v: Triple<Quadratic>) {
        for (k, q) in v.into_iter().enumerate() {
            self.put(offset | VECTOR_MASKS[k], q);
        }
    }

    fn put_bivector(&mut self, offset: usize, c: Triple<Quadratic>) {
        for (k, q) in c.into_iter().enumerate() {
            let (mask, sign) = CYCLIC_BIVECTORS[k];
            self.put(offset | mask, q * sign);
        }
    }

    fn finish(self, sig: Signature) -> Result<ConstraintSystem> {
        let dim = sig.dim();
        let forms = self
            .polys
            .iter()
            .map(|p| QuadraticForm::from_polynomial(dim, p))
            .collect::<Result<Vec<_>>>()?;
        ConstraintSystem::new(sig, forms)
    }
}

fn eps(sig: Signature) -> Vec<i64> {
    (1..=sig.n()).map(|k| i64::from(sig.epsilon(k))).collect()
}

/// n = 1: alpha^2 + eps1 beta^2 and 2 alpha beta e1.
fn reference_n1(sig: Signature) -> Result<ConstraintSystem> {
    let e = eps(sig);
    let (alpha, beta) = (Linear::var(0), Linear::var(1));
    let mut out = Output::new(2);
    out.put(0, alpha.times(&alpha) + beta.times(&beta) * e[0]);
    out.put(1, alpha.times(&beta) * 2);
    out.finish(sig)
}

/// n = 2: root equation alpha^2 + b^2 - eps1 eps2 beta^2, vector 2 alpha b,
/// bivector 2 alpha beta e12.
fn reference_n2(sig: Signature) -> Result<ConstraintSystem> {
    let e = eps(sig);
    let alpha = Linear::var(0);
    let b = [Linear::var(1), Linear::var(2)];
    let beta = Linear::var(3);
    let mut out = Output::new(4);
    let b_sq = b[0].times(&b[0]) * e[0] + b[1].times(&b[1]) * e[1];
    out.put(0, alpha.times(&alpha) + b_sq - beta.times(&beta) * (e[0] * e[1]));
    out.put(1, alpha.times(&b[0]) * 2);
    out.put(2, alpha.times(&b[1]) * 2);
    out.put(3, alpha.times(&beta) * 2);
    out.finish(sig)
}

/// n = 3, one grade at a time:
/// scalar  alpha^2 + b^2 + c^2 - eps1 eps2 eps3 beta^2,
/// vector  2 (alpha b + beta c e123),
/// bivector 2 (alpha c + beta b e123),
/// trivector 2 (alpha beta + b1 c1 + b2 c2 + b3 c3) e123.
fn reference_n3(sig: Signature) -> Result<ConstraintSystem> {
    let e = eps(sig);
    let sp = Space3 {
        eps: [e[0], e[1], e[2]],
    };
    let x = Group::at(0);
    let mut out = Output::new(8);
    out.put(
        0,
        x.alpha.times(&x.alpha)
            + sp.vec_dot(&x.b, &x.b)
            + sp.biv_dot(&x.c, &x.c)
            + x.beta.times(&x.beta) * sp.i_sq(),
    );
    out.put_vector(
        0,
        scale3(
            add3(scalar_times(&x.alpha, &x.b), scalar_times(&x.beta, &sp.biv_times_i(&x.c))),
            2,
        ),
    );
    out.put_bivector(
        0,
        scale3(
            add3(scalar_times(&x.alpha, &x.c), scalar_times(&x.beta, &sp.vec_times_i(&x.b))),
            2,
        ),
    );
    out.put(TRIVECTOR_MASK, (x.alpha.times(&x.beta) + sp.vec_wedge_biv(&x.b, &x.c)) * 2);
    out.finish(sig)
}

/// n = 4 with the split A = X + X' e4, X = alpha + b + c + beta e123 and
/// X' = alpha' + b' + c' + beta' e123. With I = e123:
///
/// e4-free part
///   scalar    alpha^2 + b^2 + c^2 + beta^2 I^2 + eps4 (alpha'^2 - b'^2 + c'^2 - beta'^2 I^2)
///   vector    2 (alpha b + beta c I + eps4 b'.c')
///   bivector  2 (alpha c + eps4 alpha' c' + (beta b - eps4 beta' b') I)
///   trivector 2 (alpha beta + b ^ c)
/// e4 part
///   scalar    2 (alpha alpha' + c.c')
///   vector    2 (alpha b' + b.c' + beta' c I)
///   bivector  2 (b ^ b' + alpha c' + alpha' c)
///   trivector 2 (alpha beta' + b' ^ c)
fn reference_n4(sig: Signature) -> Result<ConstraintSystem> {
    let e = eps(sig);
    let e4 = e[3];
    let sp = Space3 {
        eps: [e[0], e[1], e[2]],
    };
    let x = Group::at(0);
    let y = Group::at(0b1000);
    let i2 = sp.i_sq();
    let mut out = Output::new(16);

    let unprimed_sq = x.alpha.times(&x.alpha)
        + sp.vec_dot(&x.b, &x.b)
        + sp.biv_dot(&x.c, &x.c)
        + x.beta.times(&x.beta) * i2;
    let primed_sq = y.alpha.times(&y.alpha) - sp.vec_dot(&y.b, &y.b) + sp.biv_dot(&y.c, &y.c)
        - y.beta.times(&y.beta) * i2;
    out.put(0, unprimed_sq + primed_sq * e4);

    let vector = add3(
        add3(scalar_times(&x.alpha, &x.b), scalar_times(&x.beta, &sp.biv_times_i(&x.c))),
        scale3(sp.vec_contract_biv(&y.b, &y.c), e4),
    );
    out.put_vector(0, scale3(vector, 2));

    let bivector = add3(
        add3(
            scalar_times(&x.alpha, &x.c),
            scale3(scalar_times(&y.alpha, &y.c), e4),
        ),
        add3(
            scalar_times(&x.beta, &sp.vec_times_i(&x.b)),
            scale3(scalar_times(&y.beta, &sp.vec_times_i(&y.b)), -e4),
        ),
    );
    out.put_bivector(0, scale3(bivector, 2));

    out.put(TRIVECTOR_MASK, (x.alpha.times(&x.beta) + sp.vec_wedge_biv(&x.b, &x.c)) * 2);

    let e4_blade = 0b1000;
    out.put(e4_blade, (x.alpha.times(&y.alpha) + sp.biv_dot(&x.c, &y.c)) * 2);

    let e4_vector = add3(
        add3(scalar_times(&x.alpha, &y.b), sp.vec_contract_biv(&x.b, &y.c)),
        scalar_times(&y.beta, &sp.biv_times_i(&x.c)),
    );
    out.put_vector(e4_blade, scale3(e4_vector, 2));

    let e4_bivector = add3(
        sp.vec_wedge_vec(&x.b, &y.b),
        add3(scalar_times(&x.alpha, &y.c), scalar_times(&y.alpha, &x.c)),
    );
    out.put_bivector(e4_blade, scale3(e4_bivector, 2));

    out.put(
        e4_blade | TRIVECTOR_MASK,
        (x.alpha.times(&y.beta) + sp.vec_wedge_biv(&y.b, &x.c)) * 2,
    );
    out.finish(sig)
}

/// Hand-transcribed constraint system for `sig`, n <= 4.
pub fn reference_system(sig: Signature) -> Result<ConstraintSystem> {
    match sig.n() {
        1 => reference_n1(sig),
        2 => reference_n2(sig),
        3 => reference_n3(sig),
        4 => reference_n4(sig),
        n => Err(Error::UnsupportedDimension { n, max: 4 }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n3_trivector_has_flipped_c2_in_canonical_basis() {
        let sys = reference_system(Signature::new(3, 0).unwrap()).unwrap();
        let p = sys.form(TRIVECTOR_MASK).to_polynomial();
        // alpha beta, b1 c1 (e23), b2 c2 (e31 = -e13), b3 c3 (e12)
        assert_eq!(p.terms[&(0, 7)], 2);
        assert_eq!(p.terms[&(1, 6)], 2);
        assert_eq!(p.terms[&(2, 5)], -2);
        assert_eq!(p.terms[&(3, 4)], 2);
        assert_eq!(p.terms.len(), 4);
    }

    #[test]
    fn n1_negative_root_form() {
        let sys = reference_system(Signature::new(0, 1).unwrap()).unwrap();
        let p = sys.root_form().to_polynomial();
        assert_eq!(p.terms[&(0, 0)], 1);
        assert_eq!(p.terms[&(1, 1)], -1);
    }

    #[test]
    fn n4_scalar_form_terms() {
        // Cl(4,0): I^2 = -1, eps4 = 1
        let sys = reference_system(Signature::new(4, 0).unwrap()).unwrap();
        let p = sys.root_form().to_polynomial();
        let diag = |m: usize| p.terms.get(&(m, m)).copied().unwrap_or(0);
        assert_eq!(diag(0), 1); // alpha^2
        assert_eq!(diag(1), 1); // b1^2
        assert_eq!(diag(3), -1); // c3^2 = -(e12 coefficient)^2
        assert_eq!(diag(7), -1); // beta^2 I^2
        assert_eq!(diag(8), 1); // eps4 alpha'^2
        assert_eq!(diag(9), -1); // -eps4 b1'^2
        assert_eq!(diag(11), -1); // eps4 c3'^2
        assert_eq!(diag(15), 1); // -eps4 beta'^2 I^2
        assert_eq!(p.terms.len(), 16);
    }

    #[test]
    fn rejects_large_n() {
        assert!(reference_system(Signature::new(5, 0).unwrap()).is_err());
    }
}
