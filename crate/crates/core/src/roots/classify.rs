use serde::Serialize;

use super::case::RootCase::{self, *};
use super::construct::apn0_quadratic;
use super::params::FamilyParams;
use super::sub3::{any_orthogonal, dot, euclid, scale3, Group, Sub3};
use super::verify::verify;
use crate::algebra::Multivector;
use crate::error::{Error, Result};

/// Result of [`classify`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Classification {
    Case { case: RootCase, params: FamilyParams },
    /// A root whose vanishing pattern matches no catalog case.
    Unclassified,
}

impl Classification {
    pub fn case(&self) -> Option<RootCase> {
        match self {
            Classification::Case { case, .. } => Some(*case),
            Classification::Unclassified => None,
        }
    }
}

fn sign_of(x: f64) -> f64 {
    if x >= 0.0 {
        1.0
    } else {
        -1.0
    }
}

/// Unit direction of `v`, or a unit vector orthogonal to `normals` when `v`
/// vanishes (any direction then reproduces the same element).
fn dir_or(v: [f64; 3], normals: &[[f64; 3]]) -> [f64; 3] {
    let len = euclid(&v);
    if len > 0.0 {
        scale3(v, 1.0 / len)
    } else {
        any_orthogonal(normals)
    }
}

fn found(case: RootCase, params: FamilyParams) -> Classification {
    Classification::Case { case, params }
}

/// Identify the family of a root of -1 from its vanishing pattern and
/// recover the family parameters.
///
/// A coefficient group counts as zero when its Euclidean norm is at most
/// `tol * max(1, |A|)`. The test order follows the case tree, so on family
/// boundaries the case with more vanishing groups wins.
pub fn classify(a: &Multivector, tol: f64) -> Result<Classification> {
    let sig = a.signature();
    if sig.n() > 4 {
        return Err(Error::UnsupportedDimension { n: sig.n(), max: 4 });
    }
    let report = verify(a, tol);
    if !report.is_root {
        return Err(Error::NotARoot {
            residual: report.residual_norm,
        });
    }
    let thr = tol * a.norm().max(1.0);
    let zero = |x: f64| x.abs() <= thr;
    let zero3 = |v: &[f64; 3]| euclid(v) <= thr;
    let x = a.coeffs();
    let out = match sig.n() {
        1 => {
            if zero(x[0]) && N1_NEG.applies_to(sig) {
                found(N1_NEG, FamilyParams::new().with("sigma", sign_of(x[1])))
            } else {
                Classification::Unclassified
            }
        }
        2 => {
            if !zero(x[0]) {
                Classification::Unclassified
            } else if sig.p() == 1 {
                let p = FamilyParams::new().with("b1", x[1]).with("beta", x[3]);
                found(N2_A0, p.with("sigma", sign_of(x[2])))
            } else {
                let p = FamilyParams::new().with("b1", x[1]).with("b2", x[2]);
                found(N2_A0, p.with("sigma", sign_of(x[3])))
            }
        }
        3 => {
            let g = Group::read(x, 0);
            if !zero(g.alpha) {
                Classification::Unclassified
            } else if zero(g.beta) {
                let p = FamilyParams::new()
                    .with_vec3("b", g.b)
                    .with_vec3("c_dir", dir_or(g.c, &[g.b]));
                found(N3_A0B0, p)
            } else if N3_PSEUDO.applies_to(sig) && zero3(&g.b) && zero3(&g.c) {
                found(N3_PSEUDO, FamilyParams::new().with("sigma", sign_of(g.beta)))
            } else {
                Classification::Unclassified
            }
        }
        _ => classify4(a, &zero, &zero3),
    };
    Ok(out)
}

fn classify4(a: &Multivector, zero: &dyn Fn(f64) -> bool, zero3: &dyn Fn(&[f64; 3]) -> bool) -> Classification {
    let sig = a.signature();
    let s = Sub3::new(sig);
    let x = Group::read(a.coeffs(), 0);
    let y = Group::read(a.coeffs(), 0b1000);
    if !zero(x.alpha) {
        return Classification::Unclassified;
    }
    if !zero(y.alpha) {
        let (qa, qb, _) = apn0_quadratic(sig, y.alpha, y.beta, x.b, y.b);
        let sigma = if qa.abs() <= 1e-12 * (qa.abs() + qb.abs()) {
            1.0
        } else {
            sign_of(2.0 * qa * x.beta + qb)
        };
        let p = FamilyParams::new()
            .with("alpha_p", y.alpha)
            .with("beta_p", y.beta)
            .with_vec3("b", x.b)
            .with_vec3("bp", y.b)
            .with("sigma", sigma);
        return found(N4_A0_APN0, p);
    }
    let c_dir = |normals: &[[f64; 3]]| dir_or(x.c, normals);
    let cp_dir = || dir_or(y.c, &[]);
    if zero3(&y.b) {
        if !zero(x.beta) {
            if !N4_Z_BP0_BN0.applies_to(sig) {
                return Classification::Unclassified;
            }
            let p = FamilyParams::new()
                .with("beta", x.beta)
                .with("beta_p", y.beta)
                .with_vec3("cp_dir", cp_dir());
            found(N4_Z_BP0_BN0, p)
        } else if !zero(y.beta) {
            let p = FamilyParams::new()
                .with_vec3("b", x.b)
                .with("beta_p", y.beta)
                .with_vec3("cp_dir", cp_dir());
            found(N4_Z_BP0_BPN0, p)
        } else {
            let p = FamilyParams::new()
                .with_vec3("b", x.b)
                .with_vec3("cp", y.c)
                .with_vec3("c_dir", c_dir(&[x.b, s.biv_normal(y.c)]));
            found(N4_Z_BP0_B0, p)
        }
    } else if zero3(&x.b) {
        if zero(x.beta) {
            let p = FamilyParams::new()
                .with_vec3("bp", y.b)
                .with_vec3("cp", y.c)
                .with_vec3("c_dir", c_dir(&[y.b, s.biv_normal(y.c)]));
            found(N4_Z_BPN0_B0_BE0, p)
        } else {
            let p = FamilyParams::new()
                .with_vec3("bp", y.b)
                .with("beta", x.beta)
                .with_vec3("cp_dir", cp_dir());
            found(N4_Z_BPN0_B0_BEN0, p)
        }
    } else if zero(x.beta) {
        let p = FamilyParams::new()
            .with_vec3("b", x.b)
            .with("gamma", dot(&y.b, &x.b) / dot(&x.b, &x.b))
            .with_vec3("cp", y.c)
            .with_vec3("c_dir", c_dir(&[x.b, s.biv_normal(y.c)]));
        found(N4_Z_BPN0_BN0_BE0, p)
    } else if !zero(y.beta) {
        let p = FamilyParams::new()
            .with_vec3("b", x.b)
            .with("beta", x.beta)
            .with("beta_p", y.beta)
            .with_vec3("cp_dir", cp_dir());
        found(N4_Z_BPN0_BN0_BEN0, p)
    } else {
        Classification::Unclassified
    }
}
