use thiserror::Error;

/// Errors raised by the algebraic kernel and the stability deciders.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("undefined gcd: both forms are zero")]
    UndefinedGcd,
    #[error("zero form: {0}")]
    ZeroForm(&'static str),
    #[error("malformed form: {0}")]
    MalformedForm(String),
    #[error("degree ledger violation: {0}")]
    Ledger(String),
    #[error("not a valid twisted endomorphism: {0}")]
    NotTwistedEndomorphism(String),
    #[error("t-polynomial is not monic")]
    NotMonic,
    #[error("invalid splitting type: {0}")]
    SplittingType(String),
    #[error("no image: the map is zero")]
    NoImage,
    #[error("saturate first: subsheaf is not saturated")]
    NotSaturated,
    #[error("every line subbundle is invariant (scalar field)")]
    ScalarField,
    #[error("mismatched sources in multi-field")]
    MismatchedSources,
    #[error("not cataloged: {0}")]
    NotCataloged(String),
    #[error("construction fallback exhausted after {0} draws")]
    FallbackExhausted(usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("identity twist mismatch: shift requires k = 0")]
    IdentityTwistMismatch,
    #[error("twist mismatch between triple factors")]
    TwistMismatch,
    #[error("desk-scale bound exceeded: {0}")]
    DeskScale(String),
    #[error("maximal destabilizing element is not unique")]
    MaximalElementNotUnique,
    #[error("undecided: {0}")]
    Undecided(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("linear system has no solution")]
    Inconsistent,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable snake_case identifier of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::UndefinedGcd => "undefined_gcd",
            Error::ZeroForm(_) => "zero_form",
            Error::MalformedForm(_) => "malformed_form",
            Error::Ledger(_) => "ledger",
            Error::NotTwistedEndomorphism(_) => "not_twisted_endomorphism",
            Error::NotMonic => "not_monic",
            Error::SplittingType(_) => "splitting_type",
            Error::NoImage => "no_image",
            Error::NotSaturated => "not_saturated",
            Error::ScalarField => "scalar_field",
            Error::MismatchedSources => "mismatched_sources",
            Error::NotCataloged(_) => "not_cataloged",
            Error::FallbackExhausted(_) => "fallback_exhausted",
            Error::Precondition(_) => "precondition",
            Error::Domain(_) => "domain",
            Error::IdentityTwistMismatch => "identity_twist_mismatch",
            Error::TwistMismatch => "twist_mismatch",
            Error::DeskScale(_) => "desk_scale",
            Error::MaximalElementNotUnique => "maximal_element_not_unique",
            Error::Undecided(_) => "undecided",
            Error::DegreeMismatch(_) => "degree_mismatch",
            Error::Parse(_) => "parse",
            Error::Inconsistent => "inconsistent",
        }
    }
}
