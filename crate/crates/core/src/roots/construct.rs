use super::case::RootCase::{self, *};
use super::params::FamilyParams;
use super::sub3::{euclid, project_onto, project_out, scale3, Group, Sub3};
use crate::algebra::{BasisBlade, Multivector, Signature};
use crate::error::{Error, Result};

/// Magnitudes at or below this count as zero for the "!= 0" requirements
/// of a family.
pub(crate) const NONZERO_EPS: f64 = 1e-12;

fn nonzero(name: &str, x: f64) -> Result<f64> {
    if x.abs() <= NONZERO_EPS {
        return Err(Error::DegenerateParam(format!("{name} must be nonzero")));
    }
    Ok(x)
}

fn nonzero3(name: &str, v: [f64; 3]) -> Result<[f64; 3]> {
    if euclid(&v) <= NONZERO_EPS {
        return Err(Error::DegenerateParam(format!("{name} must be nonzero")));
    }
    Ok(v)
}

/// Unit direction after removing components along `normals`.
fn direction(name: &str, d: [f64; 3], normals: &[[f64; 3]]) -> Result<[f64; 3]> {
    let p = project_out(d, normals);
    let len = euclid(&p);
    if len <= 1e-9 * euclid(&d).max(1.0) {
        return Err(Error::DegenerateParam(format!(
            "{name} has no component satisfying the constraints"
        )));
    }
    Ok(scale3(p, 1.0 / len))
}

fn sqrt_nonneg(x: f64, what: &str) -> Result<f64> {
    if x < 0.0 || !x.is_finite() {
        return Err(Error::OutOfRegion(format!("{what} = {x:e}")));
    }
    Ok(x.sqrt())
}

pub(crate) fn scalar_of_square(a: &Multivector) -> f64 {
    (a * a).get(BasisBlade::SCALAR)
}

pub(crate) fn assemble4(sig: Signature, x: &Group, xp: &Group) -> Multivector {
    let mut coeffs = vec![0.0; 16];
    x.write(&mut coeffs, 0);
    xp.write(&mut coeffs, 0b1000);
    Multivector::from_coeffs(sig, coeffs).expect("n = 4")
}

/// Root of `a x^2 + b x + c = 0` on the branch `x = (-b + sigma sqrt(D)) / 2a`,
/// evaluated without cancellation; degrades to the linear root when `a`
/// vanishes.
pub(crate) fn quadratic_branch(a: f64, b: f64, c: f64, sigma: f64) -> Result<f64> {
    let size = a.abs() + b.abs() + c.abs();
    if a.abs() <= 1e-12 * size {
        if b.abs() <= 1e-12 * size {
            return Err(Error::DegenerateParam("root equation does not fix the unknown".into()));
        }
        return Ok(-c / b);
    }
    let sq = sqrt_nonneg(b * b - 4.0 * a * c, "discriminant")?;
    let num = -b + sigma * sq;
    if (sigma * sq) * b <= 0.0 && num != 0.0 {
        Ok(num / (2.0 * a))
    } else {
        // -b and sigma sqrt(D) nearly cancel: use the product of roots
        let other = -b - sigma * sq;
        if other == 0.0 {
            Ok(0.0)
        } else {
            Ok(2.0 * c / other)
        }
    }
}

/// `A(t)` is affine in `t` on the case's constrained subspace and the
/// constraints hold for every `t`, so `<A(t)^2>_0 = r0 + t^2 r2`. Returns
/// the `t >= 0` with `<A(t)^2>_0 = -1`.
fn magnitude(build: impl Fn(f64) -> Multivector) -> Result<f64> {
    let r0 = scalar_of_square(&build(0.0));
    let r2 = scalar_of_square(&build(1.0)) - r0;
    if r2.abs() <= 1e-12 * (1.0 + r0.abs()) {
        return Err(Error::DegenerateParam("free direction does not enter the root equation".into()));
    }
    sqrt_nonneg((-1.0 - r0) / r2, "squared magnitude")
}

/// Coefficients `(a, b, c)` of `a beta^2 + b beta + c = 0`, the root
/// equation of the `alpha = 0, alpha' != 0` family with beta unknown.
pub(crate) fn apn0_quadratic(
    sig: Signature,
    alpha_p: f64,
    beta_p: f64,
    b: [f64; 3],
    bp: [f64; 3],
) -> (f64, f64, f64) {
    let r = |beta| scalar_of_square(&apn0_build(sig, alpha_p, beta_p, b, bp, beta));
    let (r0, rp, rm) = (r(0.0), r(1.0), r(-1.0));
    ((rp + rm) / 2.0 - r0, (rp - rm) / 2.0, r0 + 1.0)
}

/// c = (1/alpha') b' ^ b and c' = (1/alpha') (beta' b' - eps4 beta b) e123.
pub(crate) fn apn0_build(
    sig: Signature,
    alpha_p: f64,
    beta_p: f64,
    b: [f64; 3],
    bp: [f64; 3],
    beta: f64,
) -> Multivector {
    let s = Sub3::new(sig);
    let e4 = s.eps4();
    let c = scale3(s.wedge_vv(bp, b), 1.0 / alpha_p);
    let mix = [0, 1, 2].map(|k| beta_p * bp[k] - e4 * beta * b[k]);
    let cp = scale3(s.vec_i(mix), 1.0 / alpha_p);
    let x = Group {
        alpha: 0.0,
        b,
        c,
        beta,
    };
    let xp = Group {
        alpha: alpha_p,
        b: bp,
        c: cp,
        beta: beta_p,
    };
    assemble4(sig, &x, &xp)
}

/// `c' = lambda b e123` closest to `cp`, the general solution of `b . c' = 0`
/// for `b != 0`.
fn along_dual(s: &Sub3, cp: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    if euclid(&b) == 0.0 {
        cp
    } else {
        project_onto(cp, s.vec_i(b))
    }
}

/// `-(k) (v . c') e123^-1`.
fn dual_contraction(s: &Sub3, k: f64, v: [f64; 3], cp: [f64; 3]) -> [f64; 3] {
    scale3(s.vec_i_inv(s.contract_vb(v, cp)), -k)
}

/// Assemble the root of `case` from its free parameters; dependent
/// quantities are solved from the case relations and the root equation.
pub fn construct(case: RootCase, sig: Signature, params: &FamilyParams) -> Result<Multivector> {
    case.ensure_applies(sig)?;
    let a = match case {
        N1_NEG => Multivector::blade(sig, BasisBlade(1), params.sign("sigma")?),
        N2_A0 => construct_n2(sig, params)?,
        N3_A0B0 => {
            let s = Sub3::new(sig);
            let b = params.vec3("b")?;
            // b ^ c = b1 c1 + b2 c2 + b3 c3
            let d = direction("c_dir", params.vec3("c_dir")?, &[b])?;
            let t = sqrt_nonneg((-1.0 - s.vec_sq(b)) / s.biv_sq(d), "|c|^2")?;
            let mut coeffs = vec![0.0; 8];
            Group {
                alpha: 0.0,
                b,
                c: scale3(d, t),
                beta: 0.0,
            }
            .write(&mut coeffs, 0);
            Multivector::from_coeffs(sig, coeffs)?
        }
        N3_PSEUDO => Multivector::blade(sig, BasisBlade(0b111), params.sign("sigma")?),
        _ => construct_n4(case, sig, params)?,
    };
    let r = (&a * &a + Multivector::scalar(sig, 1.0)).norm();
    if !(r <= 1e-8 * a.norm().max(1.0).powi(2)) {
        return Err(Error::OutOfRegion(format!("constructed element misses the root by {r:e}")));
    }
    Ok(a)
}

fn construct_n2(sig: Signature, params: &FamilyParams) -> Result<Multivector> {
    let (e1, e2) = (f64::from(sig.epsilon(1)), f64::from(sig.epsilon(2)));
    let sigma = params.sign("sigma")?;
    let b1 = params.get("b1")?;
    let (b2, beta) = if sig.p() == 1 {
        // beta^2 = -b1^2 + b2^2 - 1: solve for b2, which always exists
        let beta = params.get("beta")?;
        (sigma * (beta * beta + b1 * b1 + 1.0).sqrt(), beta)
    } else {
        let b2 = params.get("b2")?;
        let beta_sq = b1 * b1 * e2 + b2 * b2 * e1 + e1 * e2;
        (b2, sigma * sqrt_nonneg(beta_sq, "beta^2")?)
    };
    Multivector::from_coeffs(sig, vec![0.0, b1, b2, beta])
}

fn construct_n4(case: RootCase, sig: Signature, p: &FamilyParams) -> Result<Multivector> {
    let s = Sub3::new(sig);
    let e4 = s.eps4();
    let zero = Group::default();
    match case {
        N4_A0_APN0 => {
            let alpha_p = nonzero("alpha_p", p.get("alpha_p")?)?;
            let beta_p = p.get("beta_p")?;
            let (b, bp) = (p.vec3("b")?, p.vec3("bp")?);
            let (qa, qb, qc) = apn0_quadratic(sig, alpha_p, beta_p, b, bp);
            let beta = quadratic_branch(qa, qb, qc, p.sign("sigma")?)?;
            Ok(apn0_build(sig, alpha_p, beta_p, b, bp, beta))
        }
        N4_Z_BP0_B0 => {
            let b = p.vec3("b")?;
            let cp = along_dual(&s, p.vec3("cp")?, b);
            let d = direction("c_dir", p.vec3("c_dir")?, &[b, s.biv_normal(cp)])?;
            let build = |t: f64| {
                let x = Group { b, c: scale3(d, t), ..zero };
                assemble4(sig, &x, &Group { c: cp, ..zero })
            };
            Ok(build(magnitude(build)?))
        }
        N4_Z_BP0_BPN0 => {
            let b = p.vec3("b")?;
            let beta_p = nonzero("beta_p", p.get("beta_p")?)?;
            let d = direction("cp_dir", p.vec3("cp_dir")?, &[])?;
            let build = |t: f64| {
                let cp = scale3(d, t);
                let c = dual_contraction(&s, 1.0 / beta_p, b, cp);
                let x = Group { b, c, ..zero };
                assemble4(sig, &x, &Group { c: cp, beta: beta_p, ..zero })
            };
            Ok(build(magnitude(build)?))
        }
        N4_Z_BP0_BN0 => {
            let beta = nonzero("beta", p.get("beta")?)?;
            let beta_p = p.get("beta_p")?;
            let d = direction("cp_dir", p.vec3("cp_dir")?, &[])?;
            let build = |t: f64| {
                let x = Group { beta, ..zero };
                assemble4(sig, &x, &Group { c: scale3(d, t), beta: beta_p, ..zero })
            };
            Ok(build(magnitude(build)?))
        }
        N4_Z_BPN0_B0_BE0 => {
            let bp = nonzero3("bp", p.vec3("bp")?)?;
            let cp = along_dual(&s, p.vec3("cp")?, bp);
            let d = direction("c_dir", p.vec3("c_dir")?, &[bp, s.biv_normal(cp)])?;
            let build = |t: f64| {
                let x = Group { c: scale3(d, t), ..zero };
                assemble4(sig, &x, &Group { b: bp, c: cp, ..zero })
            };
            Ok(build(magnitude(build)?))
        }
        N4_Z_BPN0_B0_BEN0 => {
            let bp = nonzero3("bp", p.vec3("bp")?)?;
            let beta = nonzero("beta", p.get("beta")?)?;
            let d = direction("cp_dir", p.vec3("cp_dir")?, &[])?;
            let build = |t: f64| {
                let cp = scale3(d, t);
                let c = dual_contraction(&s, e4 / beta, bp, cp);
                let x = Group { c, beta, ..zero };
                assemble4(sig, &x, &Group { b: bp, c: cp, ..zero })
            };
            Ok(build(magnitude(build)?))
        }
        N4_Z_BPN0_BN0_BE0 => {
            let b = nonzero3("b", p.vec3("b")?)?;
            let gamma = nonzero("gamma", p.get("gamma")?)?;
            let cp = along_dual(&s, p.vec3("cp")?, b);
            let d = direction("c_dir", p.vec3("c_dir")?, &[b, s.biv_normal(cp)])?;
            let build = |t: f64| {
                let x = Group { b, c: scale3(d, t), ..zero };
                assemble4(sig, &x, &Group { b: scale3(b, gamma), c: cp, ..zero })
            };
            Ok(build(magnitude(build)?))
        }
        N4_Z_BPN0_BN0_BEN0 => {
            let b = nonzero3("b", p.vec3("b")?)?;
            let beta = nonzero("beta", p.get("beta")?)?;
            let beta_p = nonzero("beta_p", p.get("beta_p")?)?;
            let d = direction("cp_dir", p.vec3("cp_dir")?, &[])?;
            let bp = scale3(b, e4 * beta / beta_p);
            let build = |t: f64| {
                let cp = scale3(d, t);
                let c = dual_contraction(&s, 1.0 / beta_p, b, cp);
                let x = Group { b, c, beta, ..zero };
                assemble4(sig, &x, &Group { b: bp, c: cp, beta: beta_p, ..zero })
            };
            Ok(build(magnitude(build)?))
        }
        N1_NEG | N2_A0 | N3_A0B0 | N3_PSEUDO => unreachable!("handled by construct"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    #[test]
    fn named_constructions() {
        let s01 = sig(0, 1);
        let plus = FamilyParams::new().with("sigma", 1.0);
        let minus = FamilyParams::new().with("sigma", -1.0);
        assert_eq!(construct(N1_NEG, s01, &plus).unwrap(), Multivector::blade(s01, BasisBlade(1), 1.0));

        let s20 = sig(2, 0);
        let p = plus.clone().with("b1", 0.0).with("b2", 0.0);
        assert_eq!(construct(N2_A0, s20, &p).unwrap(), Multivector::blade(s20, BasisBlade(3), 1.0));

        let s12 = sig(1, 2);
        assert_eq!(construct(N3_PSEUDO, s12, &minus).unwrap(), Multivector::blade(s12, BasisBlade(7), -1.0));
        assert!(matches!(
            construct(N3_PSEUDO, sig(2, 1), &minus),
            Err(Error::CaseNotApplicable { .. })
        ));
    }

    #[test]
    fn n2_with_vector_part() {
        let s = sig(2, 0);
        let a = construct(N2_A0, s, &FamilyParams::new().with("b1", 1.0).with("b2", 0.0).with("sigma", 1.0))
            .unwrap();
        assert_eq!(a.coeffs()[1], 1.0);
        assert!((a.coeffs()[3] - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn existence_region() {
        let p = FamilyParams::new().with("b1", 1.0).with("b2", 0.5).with("sigma", 1.0);
        assert!(matches!(construct(N2_A0, sig(0, 2), &p), Err(Error::OutOfRegion(_))));
        assert!(matches!(construct(N2_A0, sig(0, 2), &FamilyParams::new()), Err(Error::MissingParam(_))));
    }

    #[test]
    fn degenerate_beta_p() {
        let p = FamilyParams::new()
            .with("beta_p", 0.0)
            .with_vec3("b", [0.1, 0.2, 0.3])
            .with_vec3("cp_dir", [1.0, 0.0, 0.0]);
        assert!(matches!(construct(N4_Z_BP0_BPN0, sig(1, 3), &p), Err(Error::DegenerateParam(_))));
    }

    #[test]
    fn quadratic_branches() {
        // x^2 - 3x + 2 = 0
        assert!((quadratic_branch(1.0, -3.0, 2.0, 1.0).unwrap() - 2.0).abs() < 1e-15);
        assert!((quadratic_branch(1.0, -3.0, 2.0, -1.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((quadratic_branch(0.0, 2.0, -1.0, 1.0).unwrap() - 0.5).abs() < 1e-15);
        assert!(quadratic_branch(1.0, 0.0, 1.0, 1.0).is_err());
    }
}
