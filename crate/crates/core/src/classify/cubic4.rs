use num_bigint::BigInt;

use super::cases::{order_report, OrderReport};
use super::types::admitting_types;
use super::{ClassifyError, DEFAULT_BUDGET};
use crate::abelian::{quotient_group, FiniteAbelianGroup};
use crate::diagact::predicted_group;
use crate::polyforms::SimpleType;

/// One row of the cubic fourfold table.
#[derive(Clone, Debug)]
pub struct UniquenessRow {
    pub order: BigInt,
    /// Every simple type on six variables with an automorphism of this order.
    pub admitting: Vec<SimpleType>,
    /// Symmetry group of the first admitting type.
    pub group: FiniteAbelianGroup,
}

#[derive(Clone, Debug)]
pub struct Cubic4Report {
    pub report: OrderReport,
    pub rows: Vec<UniquenessRow>,
}

impl Cubic4Report {
    pub fn all_unique(&self) -> bool {
        self.rows.iter().all(|r| r.admitting.len() == 1)
    }
}

/// Maximal automorphism orders of smooth cubic fourfolds, their witnesses,
/// and for each maximal order the list of simple types that admit it.
pub fn cubic4_report() -> Result<Cubic4Report, ClassifyError> {
    uniqueness_report(3, 6, DEFAULT_BUDGET)
}

pub fn uniqueness_report(d: u32, n_vars: u32, budget: u64) -> Result<Cubic4Report, ClassifyError> {
    let report = order_report(d, n_vars, true, budget)?;
    let rows = report
        .maximal_orders
        .maximal()
        .iter()
        .map(|m| {
            let admitting = admitting_types(d, n_vars, m);
            let group = admitting
                .first()
                .map(|t| quotient_group(&predicted_group(d, t)))
                .unwrap_or_else(FiniteAbelianGroup::trivial);
            UniquenessRow { order: m.clone(), admitting, group }
        })
        .collect();
    Ok(Cubic4Report { report, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_fourfold_uniqueness() {
        let r = cubic4_report().unwrap();
        assert!(r.all_unique());
        let types: Vec<String> = r.rows.iter().map(|row| row.admitting[0].to_string()).collect();
        assert_eq!(types, ["K6", "T2+K4", "T6", "K1+K5", "T3+K3", "T5+K1"]);
        for row in &r.rows {
            assert_eq!(row.group, FiniteAbelianGroup::cyclic(row.order.clone()));
        }
    }
}
