use thiserror::Error;

use crate::algebra::Signature;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("signature mismatch: {0} vs {1}")]
    SignatureMismatch(Signature, Signature),
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("coefficient vector has length {got}, expected {expected}")]
    CoefficientLength { expected: usize, got: usize },
    #[error("grade {grade} out of range for {generators} generators")]
    GradeOutOfRange { grade: usize, generators: usize },
    #[error("expected a homogeneous element")]
    NotHomogeneous,
    #[error("expected grade {expected}, found grade {found}")]
    WrongGrade { expected: usize, found: usize },
    #[error("ideal element: use the ideal norm")]
    IdealElement,
    #[error("euclidean element: the ideal norm applies only to ideal elements")]
    EuclideanElement,
    #[error("zero element cannot be normalized")]
    ZeroElement,
    #[error("dual number {s} + {p}I is not invertible")]
    DualNotInvertible { s: f64, p: f64 },
    #[error("not a versor: g·~g is not an invertible scalar")]
    NotVersor,
    #[error("ideal bivector has no euclidean axis")]
    IdealBivector,
    #[error("operation requires the dual euclidean algebra of the plane or space, got {0}")]
    UnsupportedSignature(Signature),
    #[error("motor logarithm undefined: axis undetermined")]
    AxisUndetermined,
    #[error("half-turn ambiguity: 1 + g vanishes")]
    HalfTurn,
    #[error("parallel lines")]
    ParallelLines,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("inertia tensor is singular")]
    SingularInertia,
    #[error("invalid body: {0}")]
    InvalidBody(String),
    #[error("division by an autodiff number with zero value")]
    AdDivisionByZero,
    #[error("{0} outside its domain at {1}")]
    AdDomain(&'static str, f64),
    #[error("autodiff gradient length mismatch: {0} vs {1}")]
    AdDimensionMismatch(usize, usize),
}
