use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::case::RootCase::{self, *};
use super::construct::construct;
use super::params::FamilyParams;
use crate::algebra::{Multivector, Signature};
use crate::error::{Error, Result};

/// Attempts before the sampler reports an empty or thin existence region.
pub const REJECTION_CAP: usize = 10_000;
/// Free parameters required to be nonzero are drawn with `|x| >= NONZERO_FRACTION * scale`.
pub const NONZERO_FRACTION: f64 = 0.05;
/// Samples with `|A| > CONDITION_LIMIT * max(1, scale)` are rejected: they sit next
/// to a pole of a dependent quantity where `A^2` loses precision.
pub const CONDITION_LIMIT: f64 = 100.0;

#[derive(Debug, Clone, Copy)]
enum Free {
    Scalar(&'static str, bool),
    Vec3(&'static str, bool),
    Dir(&'static str),
    Sign(&'static str),
}

use Free::*;

fn free_params(case: RootCase, sig: Signature) -> Vec<Free> {
    match case {
        N1_NEG | N3_PSEUDO => vec![Sign("sigma")],
        N2_A0 if sig.p() == 1 => vec![Scalar("b1", false), Scalar("beta", false), Sign("sigma")],
        N2_A0 => vec![Scalar("b1", false), Scalar("b2", false), Sign("sigma")],
        N3_A0B0 => vec![Vec3("b", false), Dir("c_dir")],
        N4_A0_APN0 => vec![
            Scalar("alpha_p", true),
            Scalar("beta_p", false),
            Vec3("b", false),
            Vec3("bp", false),
            Sign("sigma"),
        ],
        N4_Z_BP0_B0 => vec![Vec3("b", false), Vec3("cp", false), Dir("c_dir")],
        N4_Z_BP0_BPN0 => vec![Vec3("b", false), Scalar("beta_p", true), Dir("cp_dir")],
        N4_Z_BP0_BN0 => vec![Scalar("beta", true), Scalar("beta_p", false), Dir("cp_dir")],
        N4_Z_BPN0_B0_BE0 => vec![Vec3("bp", true), Vec3("cp", false), Dir("c_dir")],
        N4_Z_BPN0_B0_BEN0 => vec![Vec3("bp", true), Scalar("beta", true), Dir("cp_dir")],
        N4_Z_BPN0_BN0_BE0 => vec![
            Vec3("b", true),
            Scalar("gamma", true),
            Vec3("cp", false),
            Dir("c_dir"),
        ],
        N4_Z_BPN0_BN0_BEN0 => vec![
            Vec3("b", true),
            Scalar("beta", true),
            Scalar("beta_p", true),
            Dir("cp_dir"),
        ],
    }
}

fn uniform(rng: &mut ChaCha8Rng, scale: f64, nonzero: bool) -> f64 {
    loop {
        let x = rng.random_range(-scale..=scale);
        if !nonzero || x.abs() >= NONZERO_FRACTION * scale {
            return x;
        }
    }
}

fn uniform3(rng: &mut ChaCha8Rng, scale: f64, nonzero: bool) -> [f64; 3] {
    loop {
        let v = [0, 1, 2].map(|_| uniform(rng, scale, false));
        let len = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if !nonzero || len >= NONZERO_FRACTION * scale {
            return v;
        }
    }
}

/// Uniform draw of the free parameters of `case`.
pub fn draw_params(case: RootCase, sig: Signature, rng: &mut ChaCha8Rng, scale: f64) -> FamilyParams {
    let mut params = FamilyParams::new();
    for free in free_params(case, sig) {
        match free {
            Scalar(name, nz) => params.set(name, uniform(rng, scale, nz)),
            Vec3(name, nz) => params.set_vec3(name, uniform3(rng, scale, nz)),
            Dir(name) => params.set_vec3(name, uniform3(rng, 1.0, true)),
            Sign(name) => params.set(name, if rng.random_bool(0.5) { 1.0 } else { -1.0 }),
        }
    }
    params
}

fn check_scale(scale: f64) -> Result<()> {
    if scale > 0.0 && scale.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("scale must be positive, got {scale}")))
    }
}

/// Rejection-sample one member of the family from `rng`.
pub fn sample_with(
    case: RootCase,
    sig: Signature,
    rng: &mut ChaCha8Rng,
    scale: f64,
) -> Result<(Multivector, FamilyParams)> {
    case.ensure_applies(sig)?;
    check_scale(scale)?;
    let limit = CONDITION_LIMIT * scale.max(1.0);
    for _ in 0..REJECTION_CAP {
        let params = draw_params(case, sig, rng, scale);
        match construct(case, sig, &params) {
            Ok(a) if a.norm() <= limit => return Ok((a, params)),
            Ok(_) | Err(Error::OutOfRegion(_) | Error::DegenerateParam(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::RejectionCapExceeded {
        attempts: REJECTION_CAP,
    })
}

fn stream_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// One member of the family, deterministic in `seed`.
pub fn sample(case: RootCase, sig: Signature, seed: u64, scale: f64) -> Result<Multivector> {
    sample_with(case, sig, &mut stream_rng(seed, 0), scale).map(|(a, _)| a)
}

/// `count` members; sample `i` uses stream `i` of the seeded generator, so
/// the result does not depend on scheduling.
pub fn sample_batch(
    case: RootCase,
    sig: Signature,
    seed: u64,
    scale: f64,
    count: usize,
) -> Result<Vec<(Multivector, FamilyParams)>> {
    case.ensure_applies(sig)?;
    check_scale(scale)?;
    (0..count as u64)
        .into_par_iter()
        .map(|i| sample_with(case, sig, &mut stream_rng(seed, i), scale))
        .collect()
}
