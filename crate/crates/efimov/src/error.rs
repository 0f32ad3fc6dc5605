use thiserror::Error;

/// Failure modes shared across the crate.
///
/// Constructors validate their inputs and return `InvalidParameter`; the
/// numerical routines return the more specific variants so callers can tell
/// a bad request apart from a genuine absence of a solution.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument violates a documented precondition.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A root bracket does not straddle a sign change.
    #[error("bracket [{lo}, {hi}] does not straddle a sign change (f: {f_lo} .. {f_hi})")]
    InvalidBracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    /// A scan failed to locate a sign change at the requested resolution.
    #[error("failed to bracket a root: {0}")]
    BracketingFailed(String),

    /// The coupling is too weak to bind a dimer.
    #[error("coupling {lambda} is below the binding threshold {lambda_critical}; no bound state")]
    NoBoundState { lambda: f64, lambda_critical: f64 },

    /// The heavy-light mass ratio is too small for an attractive inverse-square
    /// channel; `critical` is the ratio at which the channel opens.
    #[error("mass ratio {mass_ratio} is below the critical value {critical}; no inverse-square attraction")]
    SubcriticalMassRatio { mass_ratio: f64, critical: f64 },

    /// The adiabatic binding equation has no root at this separation.
    #[error("no adiabatic root found at separation {r}")]
    NoAdiabaticRoot { r: f64 },

    /// The requested integral diverges on the given domain.
    #[error("integrand is not integrable on the requested domain: {0}")]
    DivergentIntegral(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Error {
        Error::InvalidParameter(msg.into())
    }
}
