use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyInput,
    #[error("generators have gcd {0}; the complement in the naturals would be infinite")]
    GcdNotOne(u64),
    #[error("entry {0} is not a positive integer")]
    NonPositiveEntry(i64),
    #[error("generating set contains {0} more than once")]
    DuplicateEntry(u64),
    #[error("value {0} exceeds the supported integer range")]
    TooLarge(u64),
    #[error("{0} is not an element of the semigroup")]
    NotAMember(i64),
    #[error("{0} has no factorization over the generating set")]
    NotRepresentable(u64),
    #[error("residue {residue} is out of range for multiplicity {multiplicity}")]
    InvalidResidue { residue: u64, multiplicity: u64 },
    #[error("semigroup is not additive")]
    NotAdditive,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("oracle bound {given} is below the required {required}")]
    BoundTooSmall { given: u64, required: u64 },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
