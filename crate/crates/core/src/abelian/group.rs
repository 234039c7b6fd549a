use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::factor::{divisors, FactorConfig};
use super::matrix::Matrix;
use super::snf::smith_normal_form;
use super::AbelianError;

/// A finite abelian group in invariant-factor form `Z/n_1 x ... x Z/n_k`
/// with `n_1 | n_2 | ... | n_k` and every `n_i >= 2`.
///
/// Two groups are isomorphic iff their factor lists are equal, so the
/// derived `PartialEq` is the isomorphism test.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<BigInt>,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        FiniteAbelianGroup { invariant_factors: Vec::new() }
    }

    pub fn cyclic(n: impl Into<BigInt>) -> Self {
        Self::from_cyclic_orders(&[n.into()])
    }

    /// Validates an invariant-factor list. Leading 1s are stripped.
    pub fn from_invariant_factors(factors: Vec<BigInt>) -> Result<Self, AbelianError> {
        let factors: Vec<BigInt> = factors.into_iter().filter(|n| !n.is_one()).collect();
        if factors.iter().any(|n| !n.is_positive()) {
            return Err(AbelianError::InvalidInvariantFactors(factors));
        }
        if factors.windows(2).any(|w| !(&w[1] % &w[0]).is_zero()) {
            return Err(AbelianError::InvalidInvariantFactors(factors));
        }
        Ok(FiniteAbelianGroup { invariant_factors: factors })
    }

    /// Canonical form of `Z/m_1 x ... x Z/m_k` for arbitrary positive `m_i`.
    pub fn from_cyclic_orders(orders: &[BigInt]) -> Self {
        let k = orders.len();
        let snf = smith_normal_form(&Matrix::diagonal(k, k, orders));
        Self::from_snf_diagonal(snf.nonzero_diag())
    }

    pub(crate) fn from_snf_diagonal(diag: &[BigInt]) -> Self {
        FiniteAbelianGroup { invariant_factors: diag.iter().filter(|n| !n.is_one()).cloned().collect() }
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() <= 1
    }

    /// Largest element order (the group exponent).
    pub fn exponent(&self) -> BigInt {
        max_element_order(self)
    }

    /// Whether some element has order exactly `n`.
    pub fn has_element_of_order(&self, n: &BigInt) -> bool {
        n.is_positive() && (self.exponent() % n).is_zero()
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariant_factors.is_empty() {
            return write!(f, "1");
        }
        for (i, n) in self.invariant_factors.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "Z/{n}")?;
        }
        Ok(())
    }
}

/// `(Z/m_1 x ... x Z/m_k) / <(c_1, ..., c_k)>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPresentation {
    cyclic_orders: Vec<BigInt>,
    killed_element: Vec<BigInt>,
}

impl QuotientPresentation {
    /// Requires every `m_i >= 1`; the `c_i` are reduced into `[0, m_i)`.
    pub fn new(cyclic_orders: Vec<BigInt>, killed_element: Vec<BigInt>) -> Result<Self, AbelianError> {
        if cyclic_orders.len() != killed_element.len() {
            return Err(AbelianError::PresentationLength { orders: cyclic_orders.len(), killed: killed_element.len() });
        }
        if let Some(bad) = cyclic_orders.iter().find(|m| !m.is_positive()) {
            return Err(AbelianError::NonPositive(bad.clone()));
        }
        let killed_element = killed_element.iter().zip(&cyclic_orders).map(|(c, m)| c.mod_floor(m)).collect();
        Ok(QuotientPresentation { cyclic_orders, killed_element })
    }

    pub fn cyclic_orders(&self) -> &[BigInt] {
        &self.cyclic_orders
    }

    pub fn killed_element(&self) -> &[BigInt] {
        &self.killed_element
    }

    pub fn len(&self) -> usize {
        self.cyclic_orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cyclic_orders.is_empty()
    }

    /// Order of `c_i` in `Z/m_i`.
    pub fn component_order(&self, i: usize) -> BigInt {
        let m = &self.cyclic_orders[i];
        m / m.gcd(&self.killed_element[i])
    }

    /// Order of the killed element in the direct product.
    pub fn killed_order(&self) -> BigInt {
        (0..self.len()).fold(BigInt::one(), |acc, i| acc.lcm(&self.component_order(i)))
    }

    /// The `(k+1) x k` relation matrix `[diag(m); c]`.
    pub fn relation_matrix(&self) -> Matrix<BigInt> {
        let k = self.len();
        let mut rows: Vec<Vec<BigInt>> = (0..k)
            .map(|i| {
                let mut r = vec![BigInt::zero(); k];
                r[i] = self.cyclic_orders[i].clone();
                r
            })
            .collect();
        rows.push(self.killed_element.clone());
        Matrix::from_rows_with_cols(rows, k)
    }
}

pub fn quotient_group(p: &QuotientPresentation) -> FiniteAbelianGroup {
    let snf = smith_normal_form(&p.relation_matrix());
    FiniteAbelianGroup::from_snf_diagonal(snf.nonzero_diag())
}

pub fn max_element_order(g: &FiniteAbelianGroup) -> BigInt {
    g.invariant_factors.last().cloned().unwrap_or_else(BigInt::one)
}

/// Element orders of a quotient whose killed entries all have order exactly
/// `d` in their summands, with at least two summands. Under that hypothesis
/// the orders are exactly the divisors of `lcm(m_i)`.
pub fn element_order_set(p: &QuotientPresentation, d: u64) -> Result<DivisorClosedSet, AbelianError> {
    if p.len() < 2 {
        return Err(AbelianError::HypothesisViolation(format!("need at least two cyclic summands, got {}", p.len())));
    }
    let d = BigInt::from(d);
    if let Some(i) = (0..p.len()).find(|&i| p.component_order(i) != d) {
        return Err(AbelianError::HypothesisViolation(format!(
            "killed entry {} has order {} in Z/{}, expected {}",
            p.killed_element[i],
            p.component_order(i),
            p.cyclic_orders[i],
            d
        )));
    }
    let lcm = p.cyclic_orders.iter().fold(BigInt::one(), |acc, m| acc.lcm(m));
    Ok(DivisorClosedSet::from_maximal(vec![lcm]))
}

/// A set of positive integers closed under taking divisors, stored as its
/// maximal elements under divisibility (ascending).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DivisorClosedSet {
    maximal: Vec<BigInt>,
}

impl DivisorClosedSet {
    pub fn empty() -> Self {
        DivisorClosedSet { maximal: Vec::new() }
    }

    /// Divisor closure of the given positive integers.
    pub fn from_maximal(mut values: Vec<BigInt>) -> Self {
        values.retain(|v| v.is_positive());
        values.sort();
        values.dedup();
        let maximal = values
            .iter()
            .enumerate()
            .filter(|(i, v)| !values[i + 1..].iter().any(|w| (w % *v).is_zero()))
            .map(|(_, v)| v.clone())
            .collect();
        DivisorClosedSet { maximal }
    }

    pub fn maximal(&self) -> &[BigInt] {
        &self.maximal
    }

    pub fn contains(&self, n: &BigInt) -> bool {
        n.is_positive() && self.maximal.iter().any(|m| (m % n).is_zero())
    }

    pub fn union(&self, other: &DivisorClosedSet) -> DivisorClosedSet {
        let mut all = self.maximal.clone();
        all.extend(other.maximal.iter().cloned());
        Self::from_maximal(all)
    }

    /// Every member, ascending.
    pub fn expand(&self, config: &FactorConfig) -> Result<Vec<BigInt>, AbelianError> {
        let mut all = Vec::new();
        for m in &self.maximal {
            all.extend(divisors(m, config)?);
        }
        all.sort();
        all.dedup();
        Ok(all)
    }
}
