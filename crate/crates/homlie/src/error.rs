//! Error taxonomy shared by the whole crate.
//!
//! Mathematical hypothesis failures are ordinary values here, not panics:
//! an operation whose preconditions fail returns a variant carrying a
//! witness, so callers (and the CLI exit-code map) can distinguish bad
//! input from a genuine bug. `InvariantViolation` is reserved for
//! contradictions of verified theorems and should never occur.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("cannot parse rational {input:?}: {reason}")]
    ParseRational { input: String, reason: String },

    #[error("{space} is not closed under the bracket: witness {witness}")]
    NotASubalgebra { space: String, witness: String },

    #[error("{space} is not alpha-invariant: witness {witness}")]
    NotAlphaInvariant { space: String, witness: String },

    #[error("{space} is not a Hom-ideal: [{h}, {x}] = {value} escapes")]
    NotAnIdeal {
        space: String,
        h: String,
        x: String,
        value: String,
    },

    #[error("map is not an endomorphism: bracket witness at basis pair ({i},{j})")]
    NotAnEndomorphism { i: usize, j: usize },

    #[error("map is not a homomorphism: {witness}")]
    NotAHomomorphism { witness: String },

    #[error("action does not restrict: entry ^(e{actor})(f{target}) = {value} escapes the target subspace")]
    NotClosed {
        actor: usize,
        target: usize,
        value: String,
    },

    #[error("actions are not compatible: witness at basis tuple {witness}")]
    IncompatibleActions { witness: String },

    #[error("maps do not preserve the actions: {witness}")]
    ActionsNotPreserved { witness: String },

    #[error("action axioms fail: {witness}")]
    InvalidAction { witness: String },

    #[error("semidirect bracket is not a Hom-Lie algebra: {witness}")]
    ActionNotAdmissible { witness: String },

    #[error("induced map is not well defined at stage {stage}: witness {witness}")]
    WellDefinedness { stage: String, witness: String },

    #[error("hypothesis {index} ({name}) does not hold: {witness}")]
    HypothesisFailure {
        index: usize,
        name: String,
        witness: String,
    },

    #[error("algebra {name} is not perfect: [M,M] has rank {commutator_rank} < {dim}")]
    NotPerfect {
        name: String,
        commutator_rank: usize,
        dim: usize,
    },

    #[error("series chain is not nested at index {index}")]
    ChainNotNested { index: usize },

    #[error("unknown fixture {name:?}")]
    UnknownFixture { name: String },

    #[error("a verified theorem failed to hold ({context}); this indicates a bug")]
    InvariantViolation { context: String },
}

impl Error {
    /// Well-definedness failure with a rendered witness vector.
    pub fn not_well_defined(stage: &str, witness: &[crate::rational::Scalar]) -> Self {
        Error::WellDefinedness {
            stage: stage.to_string(),
            witness: crate::rational::format_vector(witness),
        }
    }

    pub fn hypothesis(index: usize, name: &str, witness: impl Into<String>) -> Self {
        Error::HypothesisFailure {
            index,
            name: name.to_string(),
            witness: witness.into(),
        }
    }
}
