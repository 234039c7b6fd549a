//! Slow, independent checks used to validate the fast paths: exhaustive
//! symmetry search, literal coset enumeration, and evaluation of partial
//! derivatives at claimed singular points.

mod brute;
mod cyclotomic;
mod singular;

use thiserror::Error;

pub use brute::{
    brute_force_symmetry_group, coset_enumerate, group_from_element_orders, MAX_BRUTE_MODULUS, MAX_BRUTE_VARS,
    MAX_COSET_ELEMENTS,
};
pub use cyclotomic::{cyclotomic_polynomial, CyclotomicValue};
pub use singular::{partials_vanish_exact, partials_vanish_float, verify_singular_point, EvalMode, FLOAT_TOLERANCE};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("modulus must be positive")]
    Modulus,
}
