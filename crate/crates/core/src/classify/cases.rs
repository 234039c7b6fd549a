use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::witness::{witness_for_order_with_budget, Witness};
use super::{check_params, ClassifyError, DEFAULT_BUDGET};
use crate::abelian::DivisorClosedSet;
use crate::diagact::klein_order;
use crate::polyforms::SimpleType;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseKind {
    /// Klein type on all `N` variables.
    I,
    /// Chain type on all `N` variables.
    II,
    /// A single Klein block of size `a < N`.
    III,
    /// Two or more Klein blocks of distinct sizes.
    IV,
    /// Distinct Klein blocks plus one chain block.
    V,
}

impl CaseKind {
    pub fn tag(self) -> &'static str {
        match self {
            CaseKind::I => "i",
            CaseKind::II => "ii",
            CaseKind::III => "iii",
            CaseKind::IV => "iv",
            CaseKind::V => "v",
        }
    }
}

/// One bound from the order classification: every automorphism order in
/// this case divides `value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderCase {
    pub kind: CaseKind,
    /// Klein sizes `a_1 < ... < a_t` (for case i, the single entry `N`).
    pub a: Vec<u32>,
    /// Chain size `b` (for case ii, `N`).
    pub b: Option<u32>,
    pub value: BigInt,
}

impl OrderCase {
    /// The simple type whose symmetry group realises this bound.
    pub fn simple_type(&self) -> SimpleType {
        SimpleType::new(self.a.clone(), self.b.into_iter().collect()).expect("cases are nonempty")
    }
}

impl fmt::Display for OrderCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({}) ", self.kind.tag())?;
        match self.kind {
            CaseKind::I => write!(f, "N={}", self.a[0])?,
            CaseKind::II => write!(f, "N={}", self.b.unwrap_or_default())?,
            CaseKind::III => write!(f, "a={}", self.a[0])?,
            CaseKind::IV => write!(f, "a=({})", list(&self.a))?,
            CaseKind::V => write!(f, "a=({}), b={}", list(&self.a), self.b.unwrap_or_default())?,
        }
        write!(f, " -> {}", self.value)
    }
}

pub fn order_cases(d: u32, n: u32) -> Result<Vec<OrderCase>, ClassifyError> {
    order_cases_with_budget(d, n, DEFAULT_BUDGET)
}

/// Cases (i) through (v) in that order; within (iv) and (v) tuples come in
/// lexicographic order, and in (v) `b` ascends for each tuple.
pub fn order_cases_with_budget(d: u32, n: u32, budget: u64) -> Result<Vec<OrderCase>, ClassifyError> {
    check_params(d, n)?;
    let chain_bound = |b: u32| BigInt::from(d - 1).pow(b - 1);
    let mut cases = vec![
        OrderCase { kind: CaseKind::I, a: vec![n], b: None, value: klein_order(d, n) / d },
        OrderCase { kind: CaseKind::II, a: vec![], b: Some(n), value: chain_bound(n) },
    ];
    for a in 1..n {
        cases.push(OrderCase { kind: CaseKind::III, a: vec![a], b: None, value: klein_order(d, a) });
    }
    let tuples = distinct_tuples(n, budget)?;
    let lcm_of = |a: &[u32]| a.iter().fold(BigInt::one(), |acc, &x| acc.lcm(&klein_order(d, x)));
    for a in tuples.iter().filter(|a| a.len() >= 2) {
        cases.push(OrderCase { kind: CaseKind::IV, a: a.clone(), b: None, value: lcm_of(a) });
    }
    let mut count = cases.len() as u64;
    for a in &tuples {
        let used: u32 = a.iter().sum();
        for b in 2..=n.saturating_sub(used) {
            count += 1;
            if count > budget {
                return Err(ClassifyError::ComplexityRefusal { count, budget });
            }
            let value = lcm_of(a).lcm(&chain_bound(b));
            cases.push(OrderCase { kind: CaseKind::V, a: a.clone(), b: Some(b), value });
        }
    }
    Ok(cases)
}

/// Nonempty strictly increasing tuples of positive integers with sum `<= n`,
/// lexicographic.
fn distinct_tuples(n: u32, budget: u64) -> Result<Vec<Vec<u32>>, ClassifyError> {
    fn extend(
        prefix: &mut Vec<u32>,
        start: u32,
        left: u32,
        out: &mut Vec<Vec<u32>>,
        budget: u64,
    ) -> Result<(), ClassifyError> {
        for x in start..=left {
            prefix.push(x);
            out.push(prefix.clone());
            if out.len() as u64 > budget {
                return Err(ClassifyError::ComplexityRefusal { count: out.len() as u64, budget });
            }
            extend(prefix, x + 1, left - x, out, budget)?;
            prefix.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, n, &mut out, budget)?;
    Ok(out)
}

pub fn order_set(d: u32, n: u32) -> Result<DivisorClosedSet, ClassifyError> {
    Ok(order_set_of(&order_cases(d, n)?))
}

fn order_set_of(cases: &[OrderCase]) -> DivisorClosedSet {
    DivisorClosedSet::from_maximal(cases.iter().map(|c| c.value.clone()).collect())
}

/// Maximal orders for `(d, N)` with the cases producing each one and,
/// optionally, an explicit witness for each.
#[derive(Clone, Debug)]
pub struct OrderReport {
    pub d: u32,
    pub n: u32,
    pub maximal_orders: DivisorClosedSet,
    pub cases: Vec<OrderCase>,
    /// For each maximal order, indices into `cases` whose value equals it.
    pub provenance: BTreeMap<BigInt, Vec<usize>>,
    pub witnesses: BTreeMap<BigInt, Witness>,
}

pub fn order_report(d: u32, n: u32, with_witnesses: bool, budget: u64) -> Result<OrderReport, ClassifyError> {
    let cases = order_cases_with_budget(d, n, budget)?;
    let maximal_orders = order_set_of(&cases);
    let mut provenance = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    for m in maximal_orders.maximal() {
        let idx = cases.iter().enumerate().filter(|(_, c)| &c.value == m).map(|(i, _)| i).collect();
        provenance.insert(m.clone(), idx);
        if with_witnesses {
            let w = witness_for_order_with_budget(d, n, m, budget)?
                .ok_or_else(|| ClassifyError::VerificationFailure(format!("no witness for maximal order {m}")))?;
            witnesses.insert(m.clone(), w);
        }
    }
    Ok(OrderReport { d, n, maximal_orders, cases, provenance, witnesses })
}

/// Sufficient condition for a projective action of `prod Z/m_i` to lift:
/// all factors but one have order coprime to `gcd(d, N)`.
pub fn liftable_sufficient(cyclic_orders: &[BigInt], d: u32, n: u32) -> bool {
    let g = BigInt::from(d.gcd(&n));
    (0..cyclic_orders.len().max(1))
        .any(|i| cyclic_orders.iter().enumerate().filter(|&(j, _)| j != i).all(|(_, m)| m.gcd(&g).is_one()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn values(cases: &[OrderCase], kind: CaseKind) -> Vec<BigInt> {
        cases.iter().filter(|c| c.kind == kind).map(|c| c.value.clone()).collect()
    }

    #[test]
    fn cubic_fourfold_cases() {
        let cases = order_cases(3, 6).unwrap();
        assert_eq!(values(&cases, CaseKind::I), ints(&[21]));
        assert_eq!(values(&cases, CaseKind::II), ints(&[32]));
        assert_eq!(values(&cases, CaseKind::III), ints(&[3, 3, 9, 15, 33]));
        let iv: Vec<Vec<u32>> = cases.iter().filter(|c| c.kind == CaseKind::IV).map(|c| c.a.clone()).collect();
        assert_eq!(iv, vec![vec![1, 2], vec![1, 2, 3], vec![1, 3], vec![1, 4], vec![1, 5], vec![2, 3], vec![2, 4]]);
        assert_eq!(cases.iter().filter(|c| c.kind == CaseKind::V).count(), 13);
    }

    #[test]
    fn small_cases() {
        let cases = order_cases(3, 3).unwrap();
        let iv: Vec<&OrderCase> = cases.iter().filter(|c| c.kind == CaseKind::IV).collect();
        assert_eq!(iv.len(), 1);
        assert_eq!(iv[0].value, BigInt::from(3));
        assert_eq!(order_set(3, 3).unwrap().maximal(), &ints(&[4, 6])[..]);
    }

    #[test]
    fn maximal_order_sets() {
        assert_eq!(order_set(3, 6).unwrap().maximal(), &ints(&[21, 30, 32, 33, 36, 48])[..]);
        assert_eq!(order_set(3, 5).unwrap().maximal(), &ints(&[11, 15, 16, 18, 24])[..]);
        assert_eq!(order_set(3, 4).unwrap().maximal(), &ints(&[5, 8, 9, 12])[..]);
    }

    #[test]
    fn rejects_small_parameters() {
        assert!(matches!(order_cases(2, 6), Err(ClassifyError::Degree(2))));
        assert!(matches!(order_cases(3, 2), Err(ClassifyError::Variables(2))));
        assert!(matches!(order_cases_with_budget(3, 30, 10), Err(ClassifyError::ComplexityRefusal { .. })));
    }

    #[test]
    fn case_display() {
        let cases = order_cases(3, 6).unwrap();
        let last = cases.last().unwrap();
        assert_eq!(last.kind, CaseKind::V);
        assert_eq!(cases[0].to_string(), "(i) N=6 -> 21");
        assert_eq!(cases[1].to_string(), "(ii) N=6 -> 32");
        assert_eq!(cases[0].simple_type(), SimpleType::klein(6));
    }

    #[test]
    fn liftability() {
        assert!(liftable_sufficient(&ints(&[4]), 3, 6));
        assert!(!liftable_sufficient(&ints(&[3, 3]), 3, 6));
        assert!(liftable_sufficient(&ints(&[6, 5, 7]), 4, 6));
        assert!(liftable_sufficient(&[], 3, 6));
    }
}
