use thiserror::Error;

use crate::complex::Simplex;
use crate::Label;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("the empty set is not allowed in a complex")]
    EmptySet,
    #[error("duplicate set {0}")]
    Duplicate(Simplex),
    #[error("set {set} is present but its face {missing} is not")]
    MissingFace { set: Simplex, missing: Simplex },
    #[error("set {0} has more than {1} vertices")]
    DimensionCap(Simplex, usize),
    #[error("unknown vertex {0}")]
    UnknownVertex(Label),
    #[error("{what} exceeds the size limit of {limit}")]
    SizeLimit { what: String, limit: usize },
    #[error("not a connection or Barycentric graph: {0}")]
    NotAConnectionGraph(String),
    #[error("illegal move: {0}")]
    IllegalMove(String),
    /// Two intersecting, non-nested sets whose unit spheres meet in a
    /// non-contractible graph. Signals that the input complex is not a
    /// Barycentric refinement.
    #[error("S({y}) ∩ S({z}) is not contractible")]
    IntersectionNotContractible { y: Simplex, z: Simplex },
    #[error("attaching graph U_{0} is not contractible")]
    CertificateFailure(usize),
    #[error("the complex is not one-dimensional")]
    NotOneDimensional,
    #[error("function values are not injective")]
    NonInjective,
    #[error("homotopy search got stuck: {0}")]
    Stuck(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn size(what: impl Into<String>, limit: usize) -> Self {
        Error::SizeLimit { what: what.into(), limit }
    }
}
