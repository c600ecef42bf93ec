use crate::scalar::Field;

/// Errors raised by constructors, parsers and solvers.
///
/// Mathematical check failures are not errors: they are reported through
/// [`crate::report::Report`] so that a failed axiom can be distinguished from
/// malformed input.
#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid scalar literal {literal:?}: {reason}")]
    BadScalar { literal: String, reason: String },
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("leg {leg} out of range for rank-{rank} tensor")]
    LegOutOfRange { leg: usize, rank: usize },
    #[error("matrix is singular: {0}")]
    Singular(&'static str),
    #[error("gauge element: no solution to the defining linear system")]
    GaugeNoSolution,
    #[error("gauge element: no invertible normalized candidate found")]
    GaugeNonInvertible,
    #[error(
        "gauge element: solution family is {dim}-dimensional and no canonical candidate \
         passed the post-checks"
    )]
    GaugeAmbiguous { dim: usize },
    #[error("zero integral space: no nonzero left integral exists")]
    ZeroIntegralSpace,
    #[error("left integral space has dimension {0}, expected 1")]
    IntegralDimension(usize),
    #[error("t*h is not proportional to t at basis index {0}: corrupted integral")]
    NotProportional(usize),
    #[error("projection onto integrals is identically zero")]
    ProjectionZero,
    #[error("theta_t is singular")]
    ThetaSingular,
    #[error("structure verification failed: {0}")]
    Verification(String),
    #[error("catalog: unknown entry {0:?}")]
    UnknownCatalogEntry(String),
    #[error("catalog: entry {name:?} is not defined over {field}: {reason}")]
    CatalogFieldUnsupported {
        name: String,
        field: Field,
        reason: String,
    },
    #[error("file format: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
