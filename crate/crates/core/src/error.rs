use thiserror::Error;

use crate::exact::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("indeterminate roots: the zero polynomial vanishes everywhere")]
    IndeterminateRoots,

    #[error("division by zero")]
    DivisionByZero,

    #[error("rational function has a pole at {0}")]
    Pole(Rational),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("not diagonalizable over given spectrum: eigenspace dimensions {dims:?} leave a defect of {defect}")]
    NotDiagonalizable { dims: Vec<usize>, defect: usize },

    #[error("element is not conformal (v*v != 2v or v = 0)")]
    NotConformal,

    #[error("matrix does not square to the identity")]
    NotInvolution,

    #[error("inconsistent structure: lambda = {0} is not admissible")]
    InconsistentStructure(Rational),

    #[error("operation requires lambda = {expected}, algebra has lambda = {found}")]
    WrongLambda {
        expected: Box<Rational>,
        found: Box<Rational>,
    },

    #[error("{component}: formula gives {formula}, eigen-projection gives {projection}")]
    FrameMismatch {
        component: &'static str,
        formula: String,
        projection: String,
    },

    #[error("identity `{identity}` failed: lhs = {lhs}, rhs = {rhs}")]
    IdentityFailed {
        identity: String,
        lhs: String,
        rhs: String,
    },

    #[error("not S3: {0}")]
    NotS3(String),

    #[error("unknown basis element `{0}`")]
    UnknownBasis(String),

    #[error("unknown fusion ring `{0}`")]
    UnknownRing(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("fusion table `{ring}` is corrupt: {reason}")]
    CorruptTable { ring: String, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}
