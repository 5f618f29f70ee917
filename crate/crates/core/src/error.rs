use thiserror::Error;

use crate::algebra::Signature;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid signature ({p},{q}): need 1 <= p+q <= {max}")]
    InvalidSignature { p: usize, q: usize, max: usize },

    #[error("signature mismatch: {0} vs {1}")]
    SignatureMismatch(Signature, Signature),

    #[error("grade {grade} out of range for n = {n}")]
    GradeOutOfRange { grade: usize, n: usize },

    #[error("expected {expected} coefficients, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown blade label '{label}' at position {pos}")]
    UnknownBlade { label: String, pos: usize },

    #[error("duplicate blade term '{label}' at position {pos}")]
    DuplicateBlade { label: String, pos: usize },

    #[error("exponential series did not converge (input norm {norm})")]
    ExpDiverged { norm: f64 },

    #[error("operation supports n <= {max}, got n = {n}")]
    UnsupportedDimension { n: usize, max: usize },

    #[error("case {case} is not applicable to {sig}")]
    CaseNotApplicable { case: String, sig: Signature },

    #[error("missing family parameter '{0}'")]
    MissingParam(String),

    #[error("parameters outside the existence region: {0}")]
    OutOfRegion(String),

    #[error("degenerate parameter: {0}")]
    DegenerateParam(String),

    #[error("rejection sampling gave up after {attempts} attempts")]
    RejectionCapExceeded { attempts: usize },

    #[error("not a root of -1 (residual {residual:e})")]
    NotARoot { residual: f64 },

    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("grid of {points} points exceeds the limit of {limit}")]
    InfeasibleGrid { points: u128, limit: u128 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
