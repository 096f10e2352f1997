use alloc::string::String;

use crate::decorated::LabelError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse coefficient: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InterpolationError {
    #[error("need at least {needed} points, got {got}")]
    InsufficientPoints { needed: usize, got: usize },
    #[error("interpolation points must have distinct abscissae")]
    RepeatedAbscissa,
    #[error("fitted polynomial misses the point q = {0}")]
    NotThroughAllPoints(String),
    #[error("interpolated coefficient {0} is not an integer")]
    NonIntegral(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("label is not a special left factor")]
    NotSpecial,
    #[error("elements live in different algebras (d = {0} and d = {1})")]
    DegreeMismatch(u32, u32),
    #[error(transparent)]
    Label(#[from] LabelError),
    #[error("cannot parse word: {0}")]
    WordParse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("enumeration over F_{p}^{d} exceeds the size guard")]
    SizeGuard { p: u64, d: usize },
    #[error("flag shapes do not match the request")]
    Shape,
    #[error("orbit classification is inconsistent: {0}")]
    Inconsistent(String),
    #[error("interpolating the coefficient of {label}: {source}")]
    Interpolation { label: String, source: InterpolationError },
    #[error(transparent)]
    Label(#[from] LabelError),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("{kind} needs n >= {min}, got {n}")]
    InvalidN { kind: &'static str, n: u32, min: u32 },
    #[error("vector has length {got}, module has dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("the Casimir element does not act by a scalar")]
    NotScalar,
    #[error("k is not diagonalizable with eigenvalues ±v^a")]
    NotDiagonalizable,
    #[error("not a module weight table: {0}")]
    NotAModuleTable(String),
    #[error("cannot parse module name {0:?}")]
    Parse(String),
}
