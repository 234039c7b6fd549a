use num_bigint::BigInt;
use num_traits::Zero;

use super::{ClassifyError, DEFAULT_BUDGET};
use crate::abelian::{element_order_set, max_element_order, quotient_group};
use crate::diagact::predicted_group;
use crate::polyforms::SimpleType;

/// Simple types on `n` variables (`exact`) or on at most `n` variables.
///
/// Ordered by total, then by [`SimpleType::search_cmp`]. With
/// `at_most_one_chain` only types with at most one chain block are kept.
pub fn enumerate_simple_types(n: u32, exact: bool, at_most_one_chain: bool) -> Vec<SimpleType> {
    enumerate_simple_types_with_budget(n, exact, at_most_one_chain, DEFAULT_BUDGET)
        .expect("the default budget covers every size the caller can wait for")
}

pub fn enumerate_simple_types_with_budget(
    n: u32,
    exact: bool,
    at_most_one_chain: bool,
    budget: u64,
) -> Result<Vec<SimpleType>, ClassifyError> {
    let totals = if exact { n..=n } else { 1..=n };
    let mut out = Vec::new();
    for total in totals {
        let mut here = Vec::new();
        for t_sum in 0..=total {
            for t in partitions(t_sum, 2) {
                if at_most_one_chain && t.len() > 1 {
                    continue;
                }
                for k in partitions(total - t_sum, 1) {
                    if k.is_empty() && t.is_empty() {
                        continue;
                    }
                    here.push(SimpleType::new(k, t.clone()).expect("parts are positive"));
                    if (out.len() + here.len()) as u64 > budget {
                        return Err(ClassifyError::ComplexityRefusal {
                            count: (out.len() + here.len()) as u64,
                            budget,
                        });
                    }
                }
            }
        }
        here.sort_by(SimpleType::search_cmp);
        out.extend(here);
    }
    Ok(out)
}

/// Partitions of `n` into parts `>= min_part`, each non-increasing.
fn partitions(n: u32, min_part: u32) -> Vec<Vec<u32>> {
    fn go(left: u32, max: u32, min: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        for x in (min..=max.min(left)).rev() {
            prefix.push(x);
            go(left - x, x, min, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, min_part, &mut Vec::new(), &mut out);
    out
}

/// Exponent of the diagonal symmetry group of the simple form of type `t`.
///
/// With two or more blocks the killed scalar has order exactly `d` in each
/// summand, so the exponent is the lcm of the summand orders. A single
/// block falls outside that rule and is handled through invariant factors.
pub fn type_exponent(d: u32, t: &SimpleType) -> BigInt {
    let p = predicted_group(d, t);
    if t.part_count() >= 2 {
        if let Ok(set) = element_order_set(&p, u64::from(d)) {
            return set.maximal()[0].clone();
        }
    }
    max_element_order(&quotient_group(&p))
}

pub fn admits_order(d: u32, t: &SimpleType, n: &BigInt) -> bool {
    (type_exponent(d, t) % n).is_zero()
}

/// All simple types on exactly `n_vars` variables (any number of chain
/// blocks) whose symmetry group has an element of order `n`.
pub fn admitting_types(d: u32, n_vars: u32, n: &BigInt) -> Vec<SimpleType> {
    enumerate_simple_types(n_vars, true, false).into_iter().filter(|t| admits_order(d, t, n)).collect()
}
