use thiserror::Error;

use crate::linalg::LinalgError;
use crate::scalars::ScalarError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),

    #[error("unknown involution {0:?}")]
    UnknownInvolution(String),
    #[error("algebra has no comultiplication")]
    MissingComultiplication,
    #[error("missing data: {0}")]
    MissingData(String),
    #[error("character is not a central algebra map: {0}")]
    NotCentralCharacter(String),
    #[error("invalid separability idempotent: {0}")]
    InvalidIdempotent(String),
    #[error("not a normalized two-sided integral: {0}")]
    NotAnIntegral(String),
    #[error("trace form is degenerate")]
    DegenerateTraceForm,
    #[error("trace form is not symmetric: {0}")]
    NotSymmetric(String),
    #[error("volume element is not central: {0}")]
    VolumeNotCentral(String),
    #[error("character vanishes on the volume element")]
    ZeroVolumeCharacter,
    #[error("module {0:?} is not self-dual")]
    NotSelfDual(String),
    #[error("module {0:?} is not absolutely simple")]
    NotAbsolutelySimple(String),
    #[error("simples list is incomplete: sum of squared dimensions {found} != dim A = {expected}")]
    IncompleteSimplesList { found: usize, expected: usize },
    #[error("group-like axiom {axiom} violated: {detail}")]
    AxiomViolation { axiom: String, detail: String },
    #[error("zero valency at basis index {0}")]
    ZeroValency(usize),
    #[error("invalid Cayley table: {0}")]
    InvalidCayleyTable(String),
    #[error("permutation is not a group automorphism: {0}")]
    NotAutomorphism(String),
    #[error("map is not involutive: {0}")]
    NotInvolutive(String),
    #[error("not an association scheme: {0}")]
    NotAScheme(String),
    #[error("not a scheme involution: {0}")]
    NotSchemeInvolution(String),
    #[error("copivotal axiom violated: {0}")]
    CopivotalAxiomViolation(String),
    #[error("unknown example {0:?}")]
    UnknownExample(String),
    #[error("invariant form space has dimension {0}, expected 1")]
    UnexpectedFormDimension(usize),
    #[error("invariant form is not an eigenvector of the flip")]
    NoSign,
    #[error("2l = {requested} exceeds the bound {max}")]
    BoundExceeded { requested: u32, max: u32 },
    #[error("invalid structure: {0}")]
    Structure(String),
    #[error("invalid document: {0}")]
    Document(String),
}

impl Error {
    /// Errors that mean "the input is well-formed but violates a mathematical axiom".
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::NotCentralCharacter(_)
                | Error::InvalidIdempotent(_)
                | Error::NotAnIntegral(_)
                | Error::DegenerateTraceForm
                | Error::NotSymmetric(_)
                | Error::VolumeNotCentral(_)
                | Error::AxiomViolation { .. }
                | Error::ZeroValency(_)
                | Error::InvalidCayleyTable(_)
                | Error::NotAutomorphism(_)
                | Error::NotInvolutive(_)
                | Error::NotAScheme(_)
                | Error::NotSchemeInvolution(_)
                | Error::CopivotalAxiomViolation(_)
                | Error::IncompleteSimplesList { .. }
        )
    }
}
