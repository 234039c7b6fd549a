//! Monomial supports, the `F_I` family, simple polynomial types and
//! smoothness criteria.

mod criterion;
mod index;
mod simple;
mod support;

use thiserror::Error;

pub use criterion::{necessary_smoothness_check, pair_count, NecessaryCheck, DEFAULT_PAIR_BUDGET};
pub use index::{Coordinate, IndexVector, NotSimple, SingularWitness};
pub use simple::{simple_support, Part, SimpleType};
pub use support::{ExponentVector, Support};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("degree must be at least 3, got {0}")]
    Degree(u32),
    #[error("need at least one variable")]
    NoVariables,
    #[error("support is empty")]
    EmptySupport,
    #[error("monomial has {found} exponents, expected {expected}")]
    MonomialLength { expected: usize, found: usize },
    #[error("monomial {monomial:?} does not have degree {expected}")]
    MonomialDegree { expected: u32, monomial: Vec<u32> },
    #[error("target {target} out of range 1..={k}")]
    TargetOutOfRange { target: usize, k: usize },
    #[error("invalid simple type: {0}")]
    SimpleType(String),
    #[error("invalid support JSON: {0}")]
    Json(String),
    #[error("invalid polynomial: {0}")]
    Polynomial(String),
    #[error("{pairs} index-set pairs exceed the budget of {budget}")]
    ComplexityRefusal { pairs: u128, budget: u64 },
}
