//! Error type shared by all solver and reconstruction stages.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of an operation
    /// (non-positive Hankel argument, |p| >= 2 sqrt(E), overlapping supports, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation at a point where the kernel is singular (|x| = 0 for d >= 2).
    #[error("singular kernel evaluation: {0}")]
    Singularity(String),

    /// Input data violates a structural invariant (coincident scatterers,
    /// mismatched lengths, off-shell wavevectors, incomplete sample tables).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The interaction matrix is singular or numerically rank-deficient at
    /// this wavenumber (a resonance); carries the condition estimate.
    #[error("singular interaction system at kappa = {kappa} (condition estimate {condition:.3e})")]
    SingularSystem { kappa: f64, condition: f64 },

    /// A least-squares design is degenerate (too few or clustered energies).
    #[error("ill-conditioned fit: {0}")]
    Conditioning(String),

    /// Gauss-Newton refinement failed to converge; the message carries the
    /// last iterate so a caller can inspect how far it got.
    #[error("no convergence after {iterations} iterations (misfit {misfit:.3e}); last iterate: {last}")]
    NonConvergence {
        iterations: usize,
        misfit: f64,
        last: String,
    },

    /// Two reconstruction routes disagree beyond the stated resolution.
    #[error("inconsistent reconstruction: {0}")]
    Inconsistent(String),

    /// Numerical quadrature failed to reach the requested accuracy.
    #[error("quadrature failure: {0}")]
    Quadrature(String),
}

pub type Result<T> = std::result::Result<T, Error>;
