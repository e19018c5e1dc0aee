use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input lies outside the operation's domain (negative square root,
    /// zero where a nonzero value is required, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A denominator vanished while evaluating or mapping.
    #[error("pole: {0}")]
    Pole(String),

    /// Parameters land on an excluded locus of a construction.
    #[error("degenerate parameters: {0}")]
    Degenerate(String),

    /// The residual equation of a quartic ascent has no usable solution.
    #[error("no ascent: {0}")]
    NoAscent(String),

    /// The two points handed to the quartic composition law are unusable.
    #[error("composition degenerate: {0}")]
    CompositionDegenerate(String),

    /// The branch where both sides of the factored cubic vanish; it produces
    /// no new solutions and is rejected outright.
    #[error("excluded branch: both sides of the factored cubic vanish (m = 0)")]
    ExcludedBranch,

    /// A symbolic or numeric certificate could not be produced.
    #[error("verification failed: {0}")]
    VerificationFailed(String),

    /// A step of a multi-stage pipeline degenerated.
    #[error("step `{step}` degenerated: {reason}")]
    Step { step: String, reason: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    /// Something that the mathematics guarantees did not happen.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn step(step: impl Into<String>, cause: Error) -> Self {
        Error::Step {
            step: step.into(),
            reason: cause.to_string(),
        }
    }
}
