use thiserror::Error;

use crate::report::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Malformed tables.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("a table must have at least one element")]
    Empty,
    #[error("table has {rows} rows but size is {size}")]
    RowCount { size: usize, rows: usize },
    #[error("row {row} has length {len}, expected {size}")]
    RowLength { row: usize, len: usize, size: usize },
    #[error("entry ({row},{col}) = {value} is out of range for size {size}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
    #[error("map has length {len}, expected {size}")]
    MapLength { len: usize, size: usize },
    #[error("map value {value} at position {index} is out of range for size {size}")]
    MapOutOfRange { index: usize, value: usize, size: usize },
    #[error("map is not a bijection: {value} is hit twice")]
    NotBijective { value: usize },
}

/// Why a table is not a group. Checked in the order associativity, identity, inverses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("operation is not associative at {0:?}")]
    NonAssociative([usize; 3]),
    #[error("operation has no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("group: {0}")]
    Group(#[from] GroupError),
    #[error("tables have different sizes: {left} and {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("∘ is not associative at {0:?}")]
    NotSemigroup([usize; 3]),
    #[error("left truss law fails at (a,b,c) = {0:?}")]
    LeftLaw([usize; 3]),
    #[error("right truss law fails at (a,b,c) = {0:?}")]
    RightLaw([usize; 3]),
    #[error("left and right cocycles differ at {element}: {left} vs {right}")]
    CocycleMismatch { element: usize, left: usize, right: usize },
    #[error("declared sigma({element}) = {declared} but the derived cocycle gives {derived}")]
    DeclaredSigma {
        element: usize,
        declared: usize,
        derived: usize,
    },
    #[error("map is not idempotent at {element}")]
    NotIdempotent { element: usize },
    #[error("operation requires a left truss, got a right truss")]
    RequiresLeft,
    #[error("operation requires a right truss, got a left truss")]
    RequiresRight,
    #[error("map is not a {kind} at {witness:?}")]
    NotMorphism { kind: &'static str, witness: Vec<usize> },
    #[error("(A,∘) is not a group: {0}")]
    CircNotGroup(GroupError),
    #[error("(A,◇) is not abelian: {0} and {1} do not commute")]
    NotAbelian(usize, usize),
    #[error("{element} is not central in (A,∘): fails against {witness}")]
    NotCentral { element: usize, witness: usize },
    #[error("element {element} is out of range for size {size}")]
    ElementOutOfRange { element: usize, size: usize },
    #[error("vector is not group-like")]
    NotGroupLike,
    #[error("size {size} exceeds the configured bound {bound}; {advice}")]
    TooLarge {
        size: usize,
        bound: usize,
        advice: &'static str,
    },
    #[error("unknown group name {0:?}; expected z<n>, klein4, s3, d<n> or a product like z2xz3")]
    UnknownGroup(String),
    #[error("fixture file {path}: {message}")]
    Fixture { path: String, message: String },
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("consistency check failed: {0}")]
    Violation(#[from] Violation),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

impl Error {
    /// The counterexample carried by the error, if any.
    pub fn witness(&self) -> Option<Vec<usize>> {
        match self {
            Error::Group(GroupError::NonAssociative(w))
            | Error::CircNotGroup(GroupError::NonAssociative(w))
            | Error::NotSemigroup(w)
            | Error::LeftLaw(w)
            | Error::RightLaw(w) => Some(w.to_vec()),
            Error::Group(GroupError::NoInverse(a)) | Error::CircNotGroup(GroupError::NoInverse(a)) => Some(vec![*a]),
            Error::CocycleMismatch { element, .. }
            | Error::DeclaredSigma { element, .. }
            | Error::NotIdempotent { element } => Some(vec![*element]),
            Error::NotMorphism { witness, .. } => Some(witness.clone()),
            Error::NotAbelian(a, b) => Some(vec![*a, *b]),
            Error::NotCentral { element, witness } => Some(vec![*element, *witness]),
            Error::Violation(v) => Some(v.witness.clone()),
            _ => None,
        }
    }

    /// Whether the error means the input could not be read as the expected
    /// kind of object, as opposed to an object failing a law.
    pub fn is_malformed_input(&self) -> bool {
        matches!(
            self,
            Error::Algebra(_)
                | Error::Group(_)
                | Error::Json(_)
                | Error::SizeMismatch { .. }
                | Error::ElementOutOfRange { .. }
                | Error::UnknownGroup(_)
                | Error::Fixture { .. }
        )
    }

    pub(crate) fn check_element(element: usize, size: usize) -> Result<()> {
        if element < size {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { element, size })
        }
    }
}
