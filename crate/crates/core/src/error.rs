use thiserror::Error;

use crate::set::ElementSet;
use crate::split::ValidationReport;

/// Which circuit axiom a candidate circuit family breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CircuitAxiom {
    /// The empty set was listed as a circuit.
    NonEmpty,
    /// One circuit strictly contains another (or a circuit is listed twice).
    Incomparable,
    /// Two circuits sharing an element admit no circuit inside their union minus it.
    Elimination,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("circuit axiom {axiom:?} violated by {witnesses:?}")]
    AxiomViolation {
        axiom: CircuitAxiom,
        witnesses: Vec<ElementSet>,
    },
    #[error("ground set is empty")]
    EmptyGroundSet,
    #[error("ground sets larger than {max} elements are not supported (got {got})")]
    GroundSetTooLarge { got: usize, max: usize },
    #[error("element {element} is outside the ground set")]
    OutOfRange { element: usize },
    #[error("contraction set {set} is not independent")]
    NonIndependentContraction { set: ElementSet },
    #[error("hypergraph violates the elementary split conditions: {0}")]
    InvalidHypergraph(ValidationReport),
    #[error("matroid is not paving: circuit {circuit} has fewer than {rank} elements")]
    NotPaving { circuit: ElementSet, rank: usize },
    #[error("{what} too large: {size} exceeds cap {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("family {0} is not available for this matroid")]
    FamilyUnavailable(&'static str),
    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),
    #[error("vector configuration: {0}")]
    InvalidVectors(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("join of steps {left} and {right} exceeds ambient dimension {ambient}")]
    StepOverflow {
        left: usize,
        right: usize,
        ambient: usize,
    },
    #[error("expected a step-1 extensor, got step {0}")]
    StepNotOne(usize),
    #[error("point {point} at ordering position {position} lies on {degree} subspaces of the prefix")]
    DegreeTooHigh {
        point: usize,
        position: usize,
        degree: usize,
    },
    #[error("the symbolic construction degenerates at point {point}")]
    SymbolicDegeneracy { point: usize },
    #[error("no sample off the non-vanishing locus after {attempts} attempts")]
    RetryExhausted { attempts: usize },
    #[error("matroid is not inductively connected")]
    NotInductivelyConnected,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    /// Stable machine-readable tag for the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::AxiomViolation { .. } => "AxiomViolation",
            Error::EmptyGroundSet => "EmptyGroundSet",
            Error::GroundSetTooLarge { .. } => "GroundSetTooLarge",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::NonIndependentContraction { .. } => "NonIndependentContraction",
            Error::InvalidHypergraph(_) => "InvalidHypergraph",
            Error::NotPaving { .. } => "NotPaving",
            Error::TooLarge { .. } => "TooLarge",
            Error::FamilyUnavailable(_) => "FamilyUnavailable",
            Error::InvalidOrdering(_) => "InvalidOrdering",
            Error::InvalidVectors(_) => "InvalidVectors",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::StepOverflow { .. } => "StepOverflow",
            Error::StepNotOne(_) => "StepNotOne",
            Error::DegreeTooHigh { .. } => "DegreeTooHigh",
            Error::SymbolicDegeneracy { .. } => "SymbolicDegeneracy",
            Error::RetryExhausted { .. } => "RetryExhausted",
            Error::NotInductivelyConnected => "NotInductivelyConnected",
            Error::Parse(_) | Error::Syntax { .. } => "ParseError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
