use thiserror::Error;

/// Errors raised by the library. Each variant maps to one failure mode of an operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("q is not a primitive {n}-th root of unity (q^{k} = 1)")]
    NotPrimitiveRoot { n: usize, k: usize },
    #[error("characteristic {p} divides n = {n}")]
    CharacteristicDividesN { p: u64, n: usize },
    #[error("modulus is reducible over the prime field")]
    ReducibleModulus,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("operands belong to different algebras")]
    MixedAlgebras,
    #[error("operation unsupported over this field: {0}")]
    UnsupportedField(String),
    #[error("element is not a unit")]
    NotAUnit,
    #[error("norm is not a scalar (internal inconsistency)")]
    NormNotScalar,
    #[error("input is too large: {0}")]
    TooLarge(String),
    #[error("zero input where a nonzero element is required")]
    ZeroInput,
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("structure constants are not associative at basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit axiom fails at basis element {0}")]
    NoUnit(usize),
    #[error("corner e_{0} A e_{1} is not one-dimensional")]
    CornerNotOneDimensional(usize, usize),
    #[error("idempotents are not orthogonal or do not sum to one: {0}")]
    NotOrthogonal(String),
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("search exhausted: index d lies in [{lower}, {upper}]")]
    SearchExhausted { lower: usize, upper: usize },
    #[error("no module matrix: {0}")]
    NoModuleMatrix(String),
    #[error("modulus excluded: {0}")]
    ExcludedModulus(String),
    #[error("invalid coordinates: {0}")]
    InvalidCoordinates(String),
    #[error("fiber enumeration unsupported: {0}")]
    UnsupportedFiberEnumeration(String),
    #[error("relation violated: {0}")]
    RelationViolated(String),
    #[error("usage: {0}")]
    Usage(String),
}

impl Error {
    /// Short machine-readable tag used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse(_) => "ParseError",
            Error::NotPrimitiveRoot { .. } => "NotPrimitiveRoot",
            Error::CharacteristicDividesN { .. } => "CharacteristicDividesN",
            Error::ReducibleModulus => "ReducibleModulus",
            Error::DivisionByZero => "DivisionByZero",
            Error::MixedFields => "MixedFields",
            Error::MixedAlgebras => "MixedAlgebras",
            Error::UnsupportedField(_) => "UnsupportedField",
            Error::NotAUnit => "NotAUnit",
            Error::NormNotScalar => "NormNotScalar",
            Error::TooLarge(_) => "TooLarge",
            Error::ZeroInput => "ZeroInput",
            Error::Singular => "Singular",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NotAssociative(..) => "NotAssociative",
            Error::NoUnit(_) => "NoUnit",
            Error::CornerNotOneDimensional(..) => "CornerNotOneDimensional",
            Error::NotOrthogonal(_) => "NotOrthogonal",
            Error::HypothesisFailed(_) => "HypothesisFailed",
            Error::SearchExhausted { .. } => "SearchExhausted",
            Error::NoModuleMatrix(_) => "NoModuleMatrix",
            Error::ExcludedModulus(_) => "ExcludedModulus",
            Error::InvalidCoordinates(_) => "InvalidCoordinates",
            Error::UnsupportedFiberEnumeration(_) => "UnsupportedFiberEnumeration",
            Error::RelationViolated(_) => "RelationViolated",
            Error::Usage(_) => "Usage",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
