//! Possible automorphism orders of smooth hypersurfaces, explicit witnesses
//! on simple forms, and the cubic fourfold case.

mod cases;
mod cubic4;
mod types;
mod witness;

use num_bigint::BigInt;
use thiserror::Error;

use crate::abelian::AbelianError;
use crate::diagact::DiagError;
use crate::polyforms::PolyError;

pub use cases::{
    liftable_sufficient, order_cases, order_cases_with_budget, order_report, order_set, CaseKind, OrderCase,
    OrderReport,
};
pub use cubic4::{cubic4_report, uniqueness_report, Cubic4Report, UniquenessRow};
pub use types::{
    admits_order, admitting_types, enumerate_simple_types, enumerate_simple_types_with_budget, type_exponent,
};
pub use witness::{block_element, witness_for_order, witness_for_order_with_budget, Witness, WitnessMethod};

/// Cap on enumerated tuples or types.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("degree must be at least 3, got {0}")]
    Degree(u32),
    #[error("need at least 3 variables, got {0}")]
    Variables(u32),
    #[error("order must be positive, got {0}")]
    NonPositiveOrder(BigInt),
    #[error("enumeration reached {count} items, over the budget of {budget}")]
    ComplexityRefusal { count: u64, budget: u64 },
    #[error("verification failed: {0}")]
    VerificationFailure(String),
    #[error(transparent)]
    Abelian(#[from] AbelianError),
    #[error(transparent)]
    Diag(#[from] DiagError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn check_params(d: u32, n: u32) -> Result<(), ClassifyError> {
    if d < 3 {
        return Err(ClassifyError::Degree(d));
    }
    if n < 3 {
        return Err(ClassifyError::Variables(n));
    }
    Ok(())
}
