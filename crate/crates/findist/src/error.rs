//! Shared error type for every construction in the crate.

use thiserror::Error;

/// Errors raised by category constructions and checks.
///
/// Every operation in this crate is total on well-formed input; these
/// variants cover malformed presentations, ill-typed composites, missing
/// chosen structure, and enumerations that would exceed the configured
/// budget.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("unknown object `{0}`")]
    UnknownObject(String),

    #[error("unknown morphism `{0}`")]
    UnknownMorphism(String),

    #[error("type mismatch: {0}")]
    TypeMismatch(String),

    #[error("missing structure: {0}")]
    MissingStructure(String),

    #[error("shape restriction: {0}")]
    ShapeRestriction(String),

    #[error("not a lattice: {0}")]
    NotALattice(String),

    #[error("enumeration budget exceeded: needed {needed}, budget {budget}")]
    EnumerationBudgetExceeded { needed: u128, budget: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
