use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong while constructing or realizing a polyhedron.
///
/// Messages name the offending quantity and, where one exists, the relation
/// that was violated.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An input lies outside the domain of a formula (e.g. `cos θ = 0`).
    Domain(String),
    /// The linear constraint used to solve a dependent length is singular.
    Singular(String),
    /// A solved or derived length is not strictly positive.
    Infeasible(String),
    /// A square root radicand or arccos argument is out of range at this θ.
    Range(String),
    /// No θ satisfies every vertex of the juncture.
    EmptyRange,
    /// The operation has no defined form for this suspension type.
    Unsupported(String),
    /// Consecutive segment orientations violate the exclusion rule.
    Orientation(String),
    /// A genus-1 ring does not close.
    Closure(String),
    /// A juncture parameter set disagrees with its neighbours.
    Inconsistent(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::Singular(m) => write!(f, "singular constraint: {m}"),
            Error::Infeasible(m) => write!(f, "infeasible: {m}"),
            Error::Range(m) => write!(f, "out of flexion range: {m}"),
            Error::EmptyRange => write!(f, "empty flexion range: no θ satisfies every vertex"),
            Error::Unsupported(m) => write!(f, "unsupported: {m}"),
            Error::Orientation(m) => write!(f, "orientation rule violated: {m}"),
            Error::Closure(m) => write!(f, "closure failure: {m}"),
            Error::Inconsistent(m) => write!(f, "inconsistent juncture: {m}"),
        }
    }
}

impl core::error::Error for Error {}
