use num_complex::Complex64;
use thiserror::Error;

use crate::numerics::QuadValue;

/// Crate-wide error type.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("gamma pole: z = {0} is a non-positive integer")]
    GammaPole(Complex64),

    #[error("quadrature budget exceeded: {nodes} nodes, err estimate {err:.3e} (best value kept)")]
    BudgetExceeded {
        nodes: usize,
        err: f64,
        best: QuadValue,
    },

    #[error("singular factor locations coincide modulo pi: {0} and {1}")]
    OverlappingSingularities(f64, f64),

    #[error("singular exponent out of admissible range: s = {0} (need Re s > -3, s != -1, -2)")]
    ExponentOutOfRange(Complex64),

    #[error("regularization required: kernel exponent {0} has Re <= -1 and no factorized continuation applies")]
    RegularizationRequired(Complex64),

    #[error("grid mismatch: {0} vs {1} samples")]
    GridMismatch(usize, usize),

    #[error("finite-difference stencil leaves the unit disk at z = {z}, h = {h}")]
    StencilEscapesDisk { z: Complex64, h: f64 },

    #[error("function under-resolved on the grid: spectral tail fraction {tail:.3e} exceeds {limit:.3e}")]
    UnderResolved { tail: f64, limit: f64 },

    #[error("bump scale r = {r} too large for grid of {n} samples")]
    BumpTooNarrow { r: f64, n: usize },

    #[error("group element is singular (det = 0)")]
    SingularMatrix,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("constants ledger: {0}")]
    Ledger(String),
}

pub type Result<T> = std::result::Result<T, Error>;
