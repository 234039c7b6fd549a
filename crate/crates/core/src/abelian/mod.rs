//! Exact finitely generated abelian group arithmetic.

mod factor;
mod group;
mod matrix;
mod snf;

use num_bigint::BigInt;
use thiserror::Error;

pub use factor::{divisors, factorize, is_probable_prime, small_prime_factors, valuation, FactorConfig, RHO_SEED};
pub use group::{
    element_order_set, max_element_order, quotient_group, DivisorClosedSet, FiniteAbelianGroup, QuotientPresentation,
};
pub use matrix::{IntScalar, Matrix};
pub use snf::{checked_smith_normal_form, smith_normal_form, SnfResult};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AbelianError {
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("could not factor {0} within the configured budget")]
    FactorizationLimit(BigInt),
    #[error("expected a positive integer, got {0}")]
    NonPositive(BigInt),
    #[error("{orders} cyclic orders but {killed} killed-element entries")]
    PresentationLength { orders: usize, killed: usize },
    #[error("not an invariant-factor chain: {0:?}")]
    InvalidInvariantFactors(Vec<BigInt>),
}
