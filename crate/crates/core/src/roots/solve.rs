//! Levenberg-Marquardt on the residual of `A^2 = -1`.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::verify::verify;
use crate::algebra::{Multivector, Signature};
use crate::error::{Error, Result};
use crate::symbolic::{derive_constraints, ConstraintSystem};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    /// Success when the root residual norm drops below this.
    pub tol: f64,
    pub max_iter: usize,
    /// Initial damping factor lambda.
    pub damping: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_iter: 200,
            damping: 1e-3,
        }
    }
}

const DAMPING_UP: f64 = 10.0;
const DAMPING_DOWN: f64 = 0.5;
const DAMPING_MAX: f64 = 1e14;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Solution {
    #[serde(skip)]
    pub root: Multivector,
    pub residual: f64,
    pub iterations: usize,
}

fn norm(r: &[f64]) -> f64 {
    r.iter().map(|x| x * x).sum::<f64>().sqrt()
}

pub(crate) struct LmOutcome {
    pub a: Vec<f64>,
    pub residual: f64,
    pub iterations: usize,
    pub root: Option<Multivector>,
}

/// Levenberg-Marquardt over the coordinates listed in `free`; the others
/// stay at their initial values.
pub(crate) fn lm(sys: &ConstraintSystem, initial: &[f64], free: &[usize], opts: &SolveOptions) -> Result<LmOutcome> {
    if !(opts.tol > 0.0) || !(opts.damping > 0.0) {
        return Err(Error::InvalidArgument("tol and damping must be positive".into()));
    }
    let sig = sys.signature();
    let mut a = initial.to_vec();
    let mut r = sys.residual(&a)?;
    let mut f = norm(&r);
    let mut lambda = opts.damping;
    let k = free.len();
    let mut iterations = 0;
    while iterations <= opts.max_iter {
        if f < opts.tol {
            let root = Multivector::from_coeffs(sig, a.clone())?;
            let report = verify(&root, opts.tol);
            if report.is_root {
                return Ok(LmOutcome {
                    a,
                    residual: report.residual_norm,
                    iterations,
                    root: Some(root),
                });
            }
        }
        if iterations == opts.max_iter || k == 0 {
            break;
        }
        iterations += 1;
        let full = sys.jacobian(&a)?;
        let j = DMatrix::from_fn(full.nrows(), k, |row, col| full[(row, free[col])]);
        let rv = DVector::from_column_slice(&r);
        let jt = j.transpose();
        let h = &jt * &j;
        let g = &jt * &rv;
        let mut accepted = false;
        while lambda <= DAMPING_MAX {
            let damped = &h + DMatrix::identity(k, k) * lambda;
            let Some(chol) = damped.cholesky() else {
                lambda *= DAMPING_UP;
                continue;
            };
            let step = chol.solve(&(-&g));
            let mut trial = a.clone();
            for (col, &idx) in free.iter().enumerate() {
                trial[idx] += step[col];
            }
            let tr = sys.residual(&trial)?;
            let tf = norm(&tr);
            if tf < f {
                a = trial;
                r = tr;
                f = tf;
                lambda = (lambda * DAMPING_DOWN).max(1e-15);
                accepted = true;
                break;
            }
            lambda *= DAMPING_UP;
        }
        if !accepted {
            // no descent at any damping: a stationary point of |r|^2
            break;
        }
    }
    Ok(LmOutcome {
        a,
        residual: f,
        iterations,
        root: None,
    })
}

/// Minimize `|residual(a)|^2` from `initial`, reusing a derived system.
pub fn solve_with_system(sys: &ConstraintSystem, initial: &[f64], opts: &SolveOptions) -> Result<Solution> {
    let free: Vec<usize> = (0..sys.signature().dim()).collect();
    let out = lm(sys, initial, &free, opts)?;
    match out.root {
        Some(root) => Ok(Solution {
            root,
            residual: out.residual,
            iterations: out.iterations,
        }),
        None => Err(Error::NoConvergence {
            iterations: out.iterations,
            residual: out.residual,
        }),
    }
}

/// Damped Gauss-Newton search for a root of -1 starting at `initial`.
pub fn solve_numeric(sig: Signature, initial: &[f64], opts: &SolveOptions) -> Result<Multivector> {
    solve_with_system(&derive_constraints(sig), initial, opts).map(|s| s.root)
}

/// `count` starting points uniform in `[-radius, radius]^(2^n)`; start `i`
/// uses stream `i` of the seeded generator.
pub fn random_starts(sig: Signature, count: usize, seed: u64, radius: f64) -> Vec<Vec<f64>> {
    (0..count as u64)
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i);
            (0..sig.dim()).map(|_| rng.random_range(-radius..=radius)).collect()
        })
        .collect()
}

/// Independent solves from every start, in start order.
pub fn solve_multistart(sig: Signature, starts: &[Vec<f64>], opts: &SolveOptions) -> Vec<Result<Solution>> {
    let sys = derive_constraints(sig);
    starts
        .par_iter()
        .map(|s| solve_with_system(&sys, s, opts))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BasisBlade;

    #[test]
    fn converges_near_e12() {
        let s = Signature::new(2, 0).unwrap();
        let a = solve_numeric(s, &[0.0, 0.0, 0.0, 0.9], &SolveOptions::default()).unwrap();
        assert!(verify(&a, 1e-12).is_root);
        assert!(a[BasisBlade::SCALAR].abs() < 1e-9);
    }

    #[test]
    fn cl10_never_converges() {
        let s = Signature::new(1, 0).unwrap();
        for start in random_starts(s, 20, 1, 2.0) {
            match solve_numeric(s, &start, &SolveOptions::default()) {
                Err(Error::NoConvergence { residual, .. }) => assert!(residual >= 1.0 - 1e-12),
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn rejects_bad_options() {
        let s = Signature::new(1, 0).unwrap();
        let opts = SolveOptions { tol: 0.0, ..Default::default() };
        assert!(matches!(solve_numeric(s, &[0.0, 0.0], &opts), Err(Error::InvalidArgument(_))));
    }
}
