use super::multivector::Multivector;
use crate::error::{Error, Result};

/// Series tolerance used by [`Multivector::exp_default`].
pub const EXP_TOL: f64 = 1e-14;
/// Maximum number of series terms after scaling.
pub const EXP_MAX_TERMS: usize = 64;
const MAX_SQUARINGS: u32 = 60;

impl Multivector {
    /// Exponential by scaling and squaring of a truncated power series.
    ///
    /// No closed form is assumed: general bivectors in n >= 4 do not square
    /// to a scalar.
    pub fn exp(&self, tol: f64) -> Result<Multivector> {
        if !(tol > 0.0) {
            return Err(Error::InvalidArgument(format!("exp tolerance must be > 0, got {tol}")));
        }
        let norm = self.norm();
        if !norm.is_finite() {
            return Err(Error::ExpDiverged { norm });
        }
        let squarings = if norm > 0.5 {
            (norm / 0.5).log2().ceil() as u32
        } else {
            0
        };
        if squarings > MAX_SQUARINGS {
            return Err(Error::ExpDiverged { norm });
        }
        let x = self.scale(0.5f64.powi(squarings as i32));

        let mut sum = Multivector::scalar(self.signature(), 1.0);
        let mut term = sum.clone();
        let mut converged = false;
        for k in 1..=EXP_MAX_TERMS {
            term = (&term * &x).scale(1.0 / k as f64);
            sum += &term;
            if term.norm() <= tol * sum.norm() {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::ExpDiverged { norm });
        }
        for _ in 0..squarings {
            sum = &sum * &sum;
        }
        Ok(sum)
    }

    pub fn exp_default(&self) -> Result<Multivector> {
        self.exp(EXP_TOL)
    }
}
