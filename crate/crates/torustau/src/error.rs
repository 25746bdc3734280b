//! Crate-wide error type.
//!
//! Every numerical routine that can fail returns [`Result`]. The variants
//! distinguish precondition violations (domain errors, pole hits) from
//! runtime numerical failures (series that refuse to converge, root searches
//! that stall), because the CLI maps them to different exit codes.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A series or iteration hit its term cutoff before reaching tolerance.
    #[error("series did not converge: {what} (cutoff {cutoff}, last term {last:.3e})")]
    NonConvergent {
        what: &'static str,
        cutoff: usize,
        last: f64,
    },

    /// Input outside the validity region of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Argument too close to a point of the lattice Z + tau Z where the
    /// evaluated function has a pole.
    #[error("argument within {dist:.3e} of a lattice point")]
    LatticePoint { dist: f64 },

    /// A gamma factor was requested at a non-positive integer.
    #[error("pole error: {0}")]
    Pole(String),

    /// A denominator factor vanished, with context on which one.
    #[error("division by zero in {0}")]
    DivisionByZero(String),

    /// A theta function in a prefactor vanished (Malgrange locus).
    #[error("theta prefactor vanished: {0}")]
    ThetaZero(String),

    /// Root search exhausted without locating a root.
    #[error("root not found: {0}")]
    RootNotFound(String),

    /// Ratio of dual partition functions (or determinants) degenerate.
    #[error("degenerate ratio: {0}")]
    DegenerateRatio(String),

    /// A matrix that must be invertible was numerically singular.
    #[error("singular matrix: {0}")]
    SingularMatrix(String),

    /// Doubling the quadrature grid moved kept coefficients beyond tolerance.
    #[error("quadrature stalled: coefficient change {change:.3e} above tol {tol:.3e}")]
    QuadratureStall { change: f64, tol: f64 },

    /// sin(2 pi a) ~ 0, the monodromy parametrization degenerates.
    #[error("resonant parameter: {0}")]
    ResonantParameter(String),

    /// The Calogero-Moser flow ran into the divisor 2Q in the lattice.
    #[error("flow hit a singularity at tau = {tau_re}+{tau_im}i")]
    SingularityHit { tau_re: f64, tau_im: f64 },

    /// Bad run configuration (CLI / config file).
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code classification used by the CLI.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidConfig(_) => 4,
            _ => 3,
        }
    }
}
