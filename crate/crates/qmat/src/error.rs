//! Error type shared by all kernel modules.

/// Errors surfaced by kernel operations. Each variant carries a stable
/// machine-readable code for the CLI (see [`Error::code`]).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("negative power of non-invertible generator `{0}`")]
    NegativePowerOfNonInvertible(String),
    #[error("kill set is not admissible: rule ({low}, {high}) has correction {correction} containing no killed generator")]
    NonAdmissibleKillSet {
        low: String,
        high: String,
        correction: String,
    },
    #[error("cannot kill invertible generator `{0}`")]
    KillInvertible(String),
    #[error("generator `{generator}` is not q-normal: rule with `{other}` {reason}")]
    NotQNormal {
        generator: String,
        other: String,
        reason: String,
    },
    #[error("no image supplied for generator `{0}`")]
    MissingImage(String),
    #[error("homomorphism violates the defining rule for ({0}, {1})")]
    RelationViolated(String, String),
    #[error("image of invertible generator `{0}` is not a unit monomial")]
    NonUnitImage(String),
    #[error("index set size mismatch")]
    SizeMismatch,
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("graded ideal requires a non-localized ambient presentation")]
    LocalizedAmbient,
    #[error("membership oracle inconsistent with a completely prime ideal: {0}")]
    InconsistentOracle(String),
    #[error("presentation has correction terms: rule ({0}, {1})")]
    HasCorrections(String, String),
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
}

impl Error {
    /// Stable machine-readable error code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::UnknownGenerator(_) => "unknown-generator",
            Error::NegativePowerOfNonInvertible(_) => "negative-power-of-non-invertible",
            Error::NonAdmissibleKillSet { .. } => "non-admissible-kill-set",
            Error::KillInvertible(_) => "kill-invertible",
            Error::NotQNormal { .. } => "not-q-normal",
            Error::MissingImage(_) => "missing-image",
            Error::RelationViolated(..) => "relation-violated",
            Error::NonUnitImage(_) => "non-unit-image",
            Error::SizeMismatch => "size-mismatch",
            Error::NotHomogeneous => "not-homogeneous",
            Error::LocalizedAmbient => "localized-ambient",
            Error::InconsistentOracle(_) => "inconsistent-oracle",
            Error::HasCorrections(..) => "has-corrections",
            Error::UnknownSuite(_) => "unknown-suite",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
