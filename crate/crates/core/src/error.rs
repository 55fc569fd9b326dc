use thiserror::Error;

use crate::field::Field;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong in the library.
///
/// Variants marked *internal* can only be raised if a theorem the code relies
/// on has been violated, i.e. by a bug in this crate. They abort the pipeline
/// instead of being silently repaired.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("vector is not in the span of the given basis")]
    NotInSpan,
    #[error("basis vectors are linearly dependent")]
    DependentBasis,
    #[error("pentagon equation fails at index {witness:?}")]
    PentagonFails { witness: Vec<usize> },
    #[error("the zero tensor is not a valid solution")]
    ZeroTensor,
    #[error("internal: identity is missing from the {0} coefficient space")]
    UnitarityFails(&'static str),
    #[error("internal: inverse of R is not in P⊗H")]
    GammaOutsideSpan,
    #[error("internal: generated subalgebra has dimension {dim} > {bound}")]
    BoundViolated { dim: usize, bound: usize },
    #[error("internal: {0} leaves the coefficient space")]
    ClosureViolation(String),
    #[error("internal: {0}")]
    Inconsistent(String),
    #[error("element is not R-invariant")]
    NotInvariant,
    #[error("Hopf axioms fail: {0}")]
    AxiomsFail(String),
    #[error("internal: canonical element inverse check failed")]
    InverseFails,
    #[error("regular representation is not bijective (rank {rank} of {expected})")]
    RepNotBijective { rank: usize, expected: usize },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("bad field: {0}")]
    BadField(String),
    #[error("shape error: {0}")]
    Shape(String),
}

impl Error {
    /// Input or usage problems, as opposed to failed mathematical checks.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::BadField(_)
                | Error::Shape(_)
                | Error::ZeroTensor
                | Error::BadParams(_)
                | Error::FieldMismatch(..)
                | Error::ShapeMismatch(_)
        )
    }
}
