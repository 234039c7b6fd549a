use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::DiagError;
use crate::polyforms::Support;

/// `diag(exp(2 pi i k_1/n), ..., exp(2 pi i k_N/n))`, written `1/n(k_1,...,k_N)`.
///
/// Entries are residues in `0..n`, and `n` is the exact order of the
/// diagonal matrix (so `1/6(2,4)` is stored as `1/3(1,2)`). Two values are
/// equal as matrices iff they are equal as structs; use
/// [`DiagonalAutomorphism::projective_normal`] to compare classes modulo
/// scalars.
#[derive(Clone, Debug)]
pub struct DiagonalAutomorphism {
    n: BigInt,
    exps: Vec<BigInt>,
    /// Unreduced exponents this value was written with, kept for printing
    /// only. Any arithmetic drops it.
    literal: Option<Vec<BigInt>>,
}

impl PartialEq for DiagonalAutomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.exps == other.exps
    }
}

impl Eq for DiagonalAutomorphism {}

impl std::hash::Hash for DiagonalAutomorphism {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.exps.hash(state);
    }
}

impl DiagonalAutomorphism {
    pub fn new(n: BigInt, exps: Vec<BigInt>) -> Result<Self, DiagError> {
        if !n.is_positive() {
            return Err(DiagError::Denominator(n));
        }
        if exps.is_empty() {
            return Err(DiagError::Empty);
        }
        let exps: Vec<BigInt> = exps.iter().map(|k| k.mod_floor(&n)).collect();
        let g = exps.iter().fold(n.clone(), |acc, k| acc.gcd(k));
        Ok(DiagonalAutomorphism { n: &n / &g, exps: exps.iter().map(|k| k / &g).collect(), literal: None })
    }

    /// Like [`DiagonalAutomorphism::new`], but [`to_signed_string`] will
    /// print `exps` exactly as given when no reduction was needed.
    ///
    /// [`to_signed_string`]: DiagonalAutomorphism::to_signed_string
    pub fn with_literal(n: BigInt, exps: Vec<BigInt>) -> Result<Self, DiagError> {
        let g = Self::new(n.clone(), exps.clone())?;
        Ok(g.attach_literal(&n, Some(exps)))
    }

    /// Keeps `lit` (written over denominator `n_before`) if it survives the
    /// reduction to `self.n`, with entries reduced toward zero mod `n`.
    fn attach_literal(mut self, n_before: &BigInt, lit: Option<Vec<BigInt>>) -> Self {
        let factor = n_before / &self.n;
        self.literal = lit
            .filter(|l| l.iter().all(|x| (x % &factor).is_zero()))
            .map(|l| l.iter().map(|x| (x / &factor) % &self.n).collect());
        self
    }

    pub fn from_i64(n: i64, exps: &[i64]) -> Result<Self, DiagError> {
        Self::new(BigInt::from(n), exps.iter().map(|&k| BigInt::from(k)).collect())
    }

    pub fn identity(len: usize) -> Self {
        DiagonalAutomorphism {
            n: BigInt::one(),
            exps: vec![BigInt::zero(); len],
            literal: Some(vec![BigInt::zero(); len]),
        }
    }

    /// The scalar matrix `exp(2 pi i t/n) * I`.
    pub fn scalar(len: usize, t: BigInt, n: BigInt) -> Result<Self, DiagError> {
        Self::new(n, vec![t; len])
    }

    pub fn denominator(&self) -> &BigInt {
        &self.n
    }

    pub fn exps(&self) -> &[BigInt] {
        &self.exps
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.n.is_one()
    }

    /// Order as a matrix (the reduced denominator).
    pub fn linear_order(&self) -> &BigInt {
        &self.n
    }

    /// Order of the class in `PGL`: the least `k >= 1` with
    /// `k (k_j - k_1) = 0 mod n` for every `j`.
    pub fn pgl_order(&self) -> BigInt {
        let first = &self.exps[0];
        let g = self.exps.iter().fold(self.n.clone(), |acc, k| acc.gcd(&(k - first)));
        &self.n / g
    }

    /// Representative of the class modulo scalars with first entry 0.
    pub fn projective_normal(&self) -> DiagonalAutomorphism {
        let first = self.exps[0].clone();
        let exps = self.exps.iter().map(|k| k - &first).collect();
        DiagonalAutomorphism::new(self.n.clone(), exps).expect("nonempty with positive denominator")
    }

    pub fn projectively_equal(&self, other: &DiagonalAutomorphism) -> bool {
        self.len() == other.len() && self.projective_normal() == other.projective_normal()
    }

    pub fn compose(&self, other: &DiagonalAutomorphism) -> Result<DiagonalAutomorphism, DiagError> {
        if self.len() != other.len() {
            return Err(DiagError::LengthMismatch { expected: self.len(), found: other.len() });
        }
        let l = self.n.lcm(&other.n);
        let (s, t) = (&l / &self.n, &l / &other.n);
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a * &s + b * &t).collect();
        let lit = match (&self.literal, &other.literal) {
            (Some(x), Some(y)) => Some(x.iter().zip(y).map(|(a, b)| a * &s + b * &t).collect()),
            _ => None,
        };
        Ok(DiagonalAutomorphism::new(l.clone(), exps)?.attach_literal(&l, lit))
    }

    /// `self^k`; negative `k` gives powers of the inverse.
    pub fn pow(&self, k: &BigInt) -> DiagonalAutomorphism {
        if k.is_one() {
            return self.clone();
        }
        let exps = self.exps.iter().map(|e| e * k).collect();
        let lit = self.literal.as_ref().map(|l| l.iter().map(|e| e * k).collect());
        DiagonalAutomorphism::new(self.n.clone(), exps).expect("same shape").attach_literal(&self.n, lit)
    }

    pub fn inverse(&self) -> DiagonalAutomorphism {
        self.pow(&BigInt::from(-1))
    }

    /// Places this tuple at `offset` inside a tuple of length `total`, with
    /// trivial action on the other coordinates.
    pub fn embed(&self, offset: usize, total: usize) -> Result<DiagonalAutomorphism, DiagError> {
        if offset + self.len() > total {
            return Err(DiagError::LengthMismatch { expected: total, found: offset + self.len() });
        }
        let pad = |v: &[BigInt]| {
            let mut out = vec![BigInt::zero(); total];
            out[offset..offset + v.len()].clone_from_slice(v);
            out
        };
        let lit = self.literal.as_deref().map(pad);
        Ok(DiagonalAutomorphism::new(self.n.clone(), pad(&self.exps))?.attach_literal(&self.n, lit))
    }

    /// The residue `c` such that `F(g x) = exp(2 pi i c/n) F(x)` for every
    /// form `F` with support `s`.
    pub fn acts_with_character(&self, s: &Support) -> Result<BigInt, DiagError> {
        acts_with_character(self, s)
    }

    /// Some `k` with `self^k` projectively equal to `other`, if `other` lies
    /// in the cyclic subgroup of `PGL` generated by `self`.
    pub fn projective_log(&self, other: &DiagonalAutomorphism) -> Option<BigInt> {
        if self.len() != other.len() {
            return None;
        }
        let a = self.projective_normal();
        let b = other.projective_normal();
        let order = a.n.clone();
        if !(&order % &b.n).is_zero() {
            return None;
        }
        let scale = &order / &b.n;
        // Solve k a_j = scale b_j (mod order) for all j at once.
        let mut k = BigInt::zero();
        let mut modulus = BigInt::one();
        for (aj, bj) in a.exps.iter().zip(&b.exps) {
            let rhs = (bj * &scale).mod_floor(&order);
            let g = aj.gcd(&order);
            if !(&rhs % &g).is_zero() {
                return None;
            }
            if g == order {
                continue;
            }
            let m = &order / &g;
            let inv = mod_inverse(&(aj / &g), &m).expect("coprime after dividing by gcd");
            let r = ((&rhs / &g) * inv).mod_floor(&m);
            (k, modulus) = crt(&k, &modulus, &r, &m)?;
        }
        Some(k)
    }
}

/// Residue `c` with `<alpha, exps> = c mod n` for every monomial `alpha`.
pub fn acts_with_character(g: &DiagonalAutomorphism, s: &Support) -> Result<BigInt, DiagError> {
    if g.len() != s.n_vars() {
        return Err(DiagError::LengthMismatch { expected: s.n_vars(), found: g.len() });
    }
    let mut residues = s.monomials().iter().map(|m| {
        let dot: BigInt = m.0.iter().zip(&g.exps).map(|(&a, k)| BigInt::from(a) * k).sum();
        dot.mod_floor(&g.n)
    });
    let first = residues.next().expect("supports are nonempty");
    for (i, r) in residues.enumerate() {
        if r != first {
            return Err(DiagError::NotInvariant {
                monomial: s.monomials()[i + 1].0.clone(),
                expected: first,
                found: r,
            });
        }
    }
    Ok(first)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Merges `x = a mod m` and `x = b mod n`.
fn crt(a: &BigInt, m: &BigInt, b: &BigInt, n: &BigInt) -> Option<(BigInt, BigInt)> {
    let e = m.extended_gcd(n);
    let g = e.gcd;
    let diff = b - a;
    if !(&diff % &g).is_zero() {
        return None;
    }
    let l = m / &g * n;
    let x = a + m * ((&diff / &g) * e.x).mod_floor(&(n / &g));
    Some((x.mod_floor(&l), l))
}

impl DiagonalAutomorphism {
    /// Like `Display` but with symmetric representatives in `(-n/2, n/2]`,
    /// or, for values built from literal exponent lists, those lists pushed
    /// through the arithmetic and reduced toward zero.
    pub fn to_signed_string(&self) -> String {
        let half = &self.n / 2;
        let entries: Vec<String> = match &self.literal {
            Some(lit) => lit.iter().map(ToString::to_string).collect(),
            None => {
                self.exps.iter().map(|k| if k > &half { (k - &self.n).to_string() } else { k.to_string() }).collect()
            }
        };
        format!("1/{}({})", self.n, entries.join(","))
    }
}

impl fmt::Display for DiagonalAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}(", self.n)?;
        for (i, k) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, ")")
    }
}

/// Parses `1/63(1,-2,4,-8,16,-32)`; whitespace is ignored and `−` is
/// accepted for minus.
impl FromStr for DiagonalAutomorphism {
    type Err = DiagError;

    fn from_str(s: &str) -> Result<Self, DiagError> {
        let bad = || DiagError::Parse(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).map(|c| if c == '−' { '-' } else { c }).collect();
        let rest = t.strip_prefix("1/").ok_or_else(bad)?;
        let (n, body) = rest.split_once('(').ok_or_else(bad)?;
        let body = body.strip_suffix(')').ok_or_else(bad)?;
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let exps = body.split(',').map(|x| x.parse::<BigInt>().map_err(|_| bad())).collect::<Result<Vec<_>, _>>()?;
        DiagonalAutomorphism::new(n, exps)
    }
}
