//! Numeric corroboration that a region holds no root of -1.

use rayon::prelude::*;
use serde::Serialize;

use super::solve::{lm, random_starts, SolveOptions};
use crate::algebra::{parse_mv, Signature, TextStyle};
use crate::error::{Error, Result};
use crate::symbolic::{derive_constraints, variable_name};

/// Largest full grid a scan will evaluate.
pub const GRID_LIMIT: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanReport {
    pub signature: Signature,
    pub mode: &'static str,
    /// Grid points or LM starts evaluated.
    pub points: usize,
    pub min_residual: f64,
    pub argmin: Vec<f64>,
    /// Lower bound on the residual implied by the root equation alone, when
    /// every coefficient enters it with a positive square.
    pub analytic_bound: Option<f64>,
}

fn analytic_bound(sig: Signature) -> Option<f64> {
    let sys = derive_constraints(sig);
    let root = sys.root_form();
    // |r| >= r_0 = a^T Q_0 a + 1 >= 1 when Q_0 is diagonal with nonnegative entries
    let diagonal_nonneg = (0..sig.dim()).all(|i| {
        root.get(i, i) >= 0 && (0..sig.dim()).all(|j| i == j || root.get(i, j) == 0)
    });
    diagonal_nonneg.then_some(1.0)
}

/// Evaluate the residual norm on every point of a `resolution`-per-axis
/// grid over `[lo, hi]^(2^n)`.
pub fn nonexistence_scan(sig: Signature, lo: f64, hi: f64, resolution: usize) -> Result<ScanReport> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::InvalidArgument(format!("empty or unbounded box [{lo}, {hi}]")));
    }
    if resolution < 2 {
        return Err(Error::InvalidArgument("resolution must be at least 2".into()));
    }
    let dim = sig.dim();
    let points = (resolution as u128)
        .checked_pow(dim as u32)
        .filter(|&p| p <= GRID_LIMIT)
        .ok_or(Error::InfeasibleGrid {
            points: (resolution as u128).saturating_pow(dim as u32),
            limit: GRID_LIMIT,
        })? as usize;
    let sys = derive_constraints(sig);
    let step = (hi - lo) / (resolution - 1) as f64;
    let coord = |idx: usize| -> Vec<f64> {
        let mut rest = idx;
        (0..dim)
            .map(|_| {
                let k = rest % resolution;
                rest /= resolution;
                lo + step * k as f64
            })
            .collect()
    };
    let (min_residual, best) = (0..points)
        .into_par_iter()
        .map(|idx| (sys.residual_norm(&coord(idx)).expect("length"), idx))
        .reduce(|| (f64::INFINITY, 0), |a, b| if b.0 < a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a });
    Ok(ScanReport {
        signature: sig,
        mode: "grid",
        points,
        min_residual,
        argmin: coord(best),
        analytic_bound: analytic_bound(sig),
    })
}

/// Coefficient index and sign for a coordinate name: cyclic variable names
/// (`alpha`, `b2`, `c2`, `beta'`, ...) or a blade label (`1`, `e13`, `e31`).
pub fn coordinate(sig: Signature, name: &str) -> Result<(usize, f64)> {
    let name = name.trim();
    for m in 0..sig.dim() {
        let (var, s) = variable_name(sig, m, TextStyle::Cyclic);
        let (canon, _) = variable_name(sig, m, TextStyle::Canonical);
        if var == name || var.replace('\'', "_p") == name {
            return Ok((m, s as f64));
        }
        if canon == name {
            return Ok((m, 1.0));
        }
    }
    let mv = parse_mv(sig, name)
        .map_err(|_| Error::InvalidArgument(format!("unknown coordinate '{name}'")))?;
    let nonzero: Vec<(usize, f64)> = mv
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, &x)| x != 0.0)
        .map(|(m, &x)| (m, x))
        .collect();
    match nonzero.as_slice() {
        [(m, s)] if s.abs() == 1.0 => Ok((*m, *s)),
        _ => Err(Error::InvalidArgument(format!("'{name}' is not a single coordinate"))),
    }
}

/// Fix some coordinates and minimize the residual over the others with
/// multi-start Levenberg-Marquardt. Starts are uniform in
/// `[-radius, radius]` and deterministic in `seed`.
pub fn slice_scan(
    sig: Signature,
    fixed: &[(String, f64)],
    starts: usize,
    seed: u64,
    radius: f64,
) -> Result<ScanReport> {
    if starts == 0 || !(radius > 0.0) {
        return Err(Error::InvalidArgument("need at least one start and a positive radius".into()));
    }
    let mut pinned = Vec::new();
    for (name, value) in fixed {
        let (m, s) = coordinate(sig, name)?;
        if pinned.iter().any(|&(p, _)| p == m) {
            return Err(Error::InvalidArgument(format!("coordinate '{name}' fixed twice")));
        }
        pinned.push((m, s * value));
    }
    let free: Vec<usize> = (0..sig.dim()).filter(|m| pinned.iter().all(|&(p, _)| p != *m)).collect();
    let sys = derive_constraints(sig);
    let opts = SolveOptions::default();
    let runs: Vec<(f64, Vec<f64>)> = random_starts(sig, starts, seed, radius)
        .into_par_iter()
        .map(|mut a| {
            for &(m, v) in &pinned {
                a[m] = v;
            }
            lm(&sys, &a, &free, &opts).map(|o| (o.residual, o.a))
        })
        .collect::<Result<_>>()?;
    let (min_residual, argmin) = runs
        .into_iter()
        .reduce(|a, b| if b.0 < a.0 { b } else { a })
        .expect("at least one start");
    Ok(ScanReport {
        signature: sig,
        mode: "slice",
        points: starts,
        min_residual,
        argmin,
        analytic_bound: if pinned.is_empty() { analytic_bound(sig) } else { None },
    })
}
