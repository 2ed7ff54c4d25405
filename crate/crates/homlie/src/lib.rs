//! Exact-arithmetic Hom-Lie algebra toolkit.
//!
//! A Hom-Lie algebra is a vector space with a skew-symmetric bracket and a
//! linear self-map `alpha` satisfying the alpha-twisted Jacobi identity.
//! This crate represents finite-dimensional Hom-Lie algebras over the
//! rationals by structure constants and a twist matrix, and builds on top of
//! that:
//!
//! * exact rational linear algebra: canonical subspaces and quotient
//!   presentations ([`linalg`]);
//! * the algebra constructions of the theory: centers, commutators,
//!   quotients, products, Yau twists ([`algebra`]);
//! * Hom-actions, their axioms and compatibility, semidirect products
//!   ([`action`]);
//! * derived sequences, lower central series, solvability/nilpotency/Engel
//!   classification ([`series`]);
//! * the non-abelian tensor product `M ⋆ N` as an explicit quotient of
//!   `M ⊗ N`, with every induced map re-verified numerically ([`tensor`]);
//! * perfectness, universal central extensions and `H₂` via the tensor
//!   square ([`uce`]);
//! * a fixture catalog and a text definition format shared with the CLI
//!   ([`catalog`], [`textfmt`]).
//!
//! All values are immutable after construction and all operations are pure
//! functions of their inputs; everything is safe to share across threads.
//! Arithmetic is exact: a check either holds with residual zero or fails
//! with a witness.

pub mod action;
pub mod algebra;
pub mod catalog;
pub mod checks;
pub mod error;
pub mod linalg;
pub mod prng;
pub mod rational;
pub mod series;
pub mod tensor;
pub mod textfmt;
pub mod uce;

pub use action::{ActionPair, HomAction};
pub use algebra::{HomLieAlgebra, HomSubspace, SubspaceKind, ValidationReport};
pub use error::Error;
pub use linalg::{Matrix, QuotientSpace, Subspace, Vector};
pub use rational::Scalar;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
