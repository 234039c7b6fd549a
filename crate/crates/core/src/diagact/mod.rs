//! Diagonal automorphisms of hypersurfaces, written as exponent tuples
//! `1/n(k_1, ..., k_N)` for `diag(zeta^{k_1}, ..., zeta^{k_N})` with
//! `zeta = exp(2 pi i/n)`.

mod automorphism;
mod generators;
mod symmetry;

use num_bigint::BigInt;
use thiserror::Error;

pub use automorphism::{acts_with_character, DiagonalAutomorphism};
pub use generators::{chain_generator, chain_order, klein_generator, klein_order, part_generator, predicted_group};
pub use symmetry::{symmetry_group, SymmetryGroup, SymmetryGroupResult};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagError {
    #[error("denominator must be positive, got {0}")]
    Denominator(BigInt),
    #[error("automorphism has no coordinates")]
    Empty,
    #[error("expected {expected} coordinates, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("monomial {monomial:?} picks up residue {found}, others pick up {expected}")]
    NotInvariant { monomial: Vec<u32>, expected: BigInt, found: BigInt },
    #[error("cannot parse automorphism {0:?}; expected the form 1/n(k_1,...,k_N)")]
    Parse(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}
