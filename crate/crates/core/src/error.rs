use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rewrite budget of {budget} steps exhausted (presentation `{algebra}` does not terminate on this input)")]
    NonTerminating { algebra: String, budget: u64 },
    #[error("negative exponent on non-invertible generator `{0}`")]
    NegativeExponentOnNonInvertible(String),
    #[error("exponent overflow on generator `{0}`")]
    ExponentOverflow(String),
    #[error("too many generators: {0} (at most {max})", max = crate::ncpoly::MAX_GENERATORS)]
    TooManyGenerators(usize),
    #[error("map has no image for the inverse of `{0}`")]
    MissingInverseImage(String),
    #[error("level degree of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("ad-nilpotence bound {0} exceeded")]
    BoundExceeded(u32),
    #[error("presentation `{algebra}` failed validation: {details}")]
    ValidationFailed { algebra: String, details: String },
    #[error("fractions over different central elements cannot be combined")]
    MixedCenters,
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("negative power of a non-invertible element `{0}`")]
    NegativePowerNotInvertible(String),
    #[error("denominator outside the atom set {{ux+2, ux+4, u, x}}: {0}")]
    UnsupportedDenominator(String),
    #[error("membership matrix of about {estimated} entries exceeds the cap of {cap}")]
    BoundTooLargeForMemory { estimated: usize, cap: usize },
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
    #[error("invalid presentation text, line {line}: {msg}")]
    PresentationFormat { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
