use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// An element of `Q(zeta_n)` written as `sum_k c_k zeta_n^k`, `0 <= k < n`.
///
/// The representation is not unique; [`CyclotomicValue::is_zero`] decides
/// equality with zero by reducing modulo the `n`-th cyclotomic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicValue {
    n: usize,
    coeffs: Vec<BigRational>,
}

impl CyclotomicValue {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1, "order must be positive");
        CyclotomicValue { n, coeffs: vec![BigRational::zero(); n] }
    }

    /// `zeta_n^k`.
    pub fn root_power(n: usize, k: i64) -> Self {
        let mut v = Self::zero(n);
        v.coeffs[k.rem_euclid(n as i64) as usize] = BigRational::one();
        v
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        CyclotomicValue { n: self.n, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        let phi = cyclotomic_polynomial(self.n);
        remainder(&self.coeffs, &phi).iter().all(Zero::is_zero)
    }
}

impl Add for &CyclotomicValue {
    type Output = CyclotomicValue;

    fn add(self, rhs: &CyclotomicValue) -> CyclotomicValue {
        assert_eq!(self.n, rhs.n, "orders must match");
        CyclotomicValue { n: self.n, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Mul for &CyclotomicValue {
    type Output = CyclotomicValue;

    fn mul(self, rhs: &CyclotomicValue) -> CyclotomicValue {
        assert_eq!(self.n, rhs.n, "orders must match");
        let mut out = CyclotomicValue::zero(self.n);
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in rhs.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                out.coeffs[(i + j) % self.n] += a * b;
            }
        }
        out
    }
}

/// Integer coefficients of `Phi_n`, lowest degree first, from
/// `x^n - 1 = prod_{k | n} Phi_k`.
pub fn cyclotomic_polynomial(n: usize) -> Vec<BigInt> {
    let mut poly = vec![BigInt::zero(); n + 1];
    poly[0] = BigInt::from(-1);
    poly[n] = BigInt::one();
    for k in (1..n).filter(|k| n.is_multiple_of(*k)) {
        poly = exact_divide(&poly, &cyclotomic_polynomial(k));
    }
    poly
}

/// Quotient of integer polynomials when the divisor is monic and divides exactly.
fn exact_divide(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![BigInt::zero(); rem.len() - dd];
    for i in (0..q.len()).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        q[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact division");
    q
}

/// Remainder of a rational polynomial modulo a monic integer polynomial.
fn remainder(num: &[BigRational], den: &[BigInt]) -> Vec<BigRational> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    for i in (dd..rem.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i - dd + j] -= &c * BigRational::from_integer(dj.clone());
        }
    }
    rem.truncate(dd);
    rem
}
