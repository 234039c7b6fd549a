use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::support::{ExponentVector, Support};
use super::{IndexVector, PolyError};

/// One block of a simple polynomial.
///
/// `Klein(a)`: `x_1^{d-1} x_2 + ... + x_a^{d-1} x_1` (`Klein(1)` is `x^d`).
/// `Chain(b)`: `x_1^{d-1} x_2 + ... + x_{b-1}^{d-1} x_b + x_b^d`, `b >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    Chain(u32),
    Klein(u32),
}

impl Part {
    pub fn size(self) -> u32 {
        match self {
            Part::Klein(a) | Part::Chain(a) => a,
        }
    }

    pub fn is_chain(self) -> bool {
        matches!(self, Part::Chain(_))
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Part::Klein(a) => write!(f, "K{a}"),
            Part::Chain(b) => write!(f, "T{b}"),
        }
    }
}

/// Shape `K_{a_1} + ... + K_{a_t} + T_{b_1} + ... + T_{b_s}` of a simple
/// polynomial. `T_1` is stored as `K_1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleType {
    k_parts: Vec<u32>,
    t_parts: Vec<u32>,
}

impl SimpleType {
    pub fn new(k_parts: Vec<u32>, t_parts: Vec<u32>) -> Result<Self, PolyError> {
        if k_parts.iter().chain(&t_parts).any(|&x| x == 0) {
            return Err(PolyError::SimpleType("parts must have size at least 1".into()));
        }
        let (ones, mut t_parts): (Vec<u32>, Vec<u32>) = t_parts.into_iter().partition(|&b| b == 1);
        let mut k_parts: Vec<u32> = k_parts.into_iter().chain(ones).collect();
        if k_parts.is_empty() && t_parts.is_empty() {
            return Err(PolyError::SimpleType("empty type".into()));
        }
        k_parts.sort_unstable();
        t_parts.sort_unstable();
        Ok(SimpleType { k_parts, t_parts })
    }

    pub fn from_parts(parts: &[Part]) -> Result<Self, PolyError> {
        let mut k = Vec::new();
        let mut t = Vec::new();
        for p in parts {
            match *p {
                Part::Klein(a) => k.push(a),
                Part::Chain(b) => t.push(b),
            }
        }
        SimpleType::new(k, t)
    }

    pub fn klein(a: u32) -> Self {
        SimpleType::new(vec![a], vec![]).expect("a >= 1")
    }

    pub fn chain(b: u32) -> Self {
        SimpleType::new(vec![], vec![b]).expect("b >= 1")
    }

    pub fn k_parts(&self) -> &[u32] {
        &self.k_parts
    }

    pub fn t_parts(&self) -> &[u32] {
        &self.t_parts
    }

    /// Number of variables.
    pub fn total(&self) -> u32 {
        self.k_parts.iter().chain(&self.t_parts).sum()
    }

    pub fn part_count(&self) -> usize {
        self.k_parts.len() + self.t_parts.len()
    }

    pub fn is_k_pure(&self) -> bool {
        self.t_parts.is_empty()
    }

    /// Parts in variable-layout order: chain parts by size, then Klein parts
    /// by size, each on a consecutive block of variables.
    pub fn parts(&self) -> Vec<Part> {
        self.t_parts.iter().map(|&b| Part::Chain(b)).chain(self.k_parts.iter().map(|&a| Part::Klein(a))).collect()
    }

    /// First variable (0-based) of each part in [`SimpleType::parts`] order.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = 0;
        self.parts()
            .iter()
            .map(|p| {
                let here = off;
                off += p.size() as usize;
                here
            })
            .collect()
    }

    /// Adds `K_1` blocks until the type has `n` variables.
    pub fn padded_to(&self, n: u32) -> SimpleType {
        let mut k = self.k_parts.clone();
        k.extend(std::iter::repeat_n(1, n.saturating_sub(self.total()) as usize));
        SimpleType::new(k, self.t_parts.clone()).expect("nonempty")
    }

    /// Search order: fewer parts first, then lexicographic on the
    /// layout-ordered part list.
    pub fn search_cmp(&self, other: &SimpleType) -> Ordering {
        self.part_count()
            .cmp(&other.part_count())
            .then_with(|| self.parts().iter().map(|p| p.size()).cmp(other.parts().iter().map(|p| p.size())))
            .then_with(|| self.parts().cmp(&other.parts()))
    }

    /// The index vector whose `F_I` is the canonical simple polynomial.
    pub fn index_vector(&self, d: u32) -> Result<IndexVector, PolyError> {
        let mut targets = Vec::with_capacity(self.total() as usize);
        for (part, off) in self.parts().into_iter().zip(self.offsets()) {
            let size = part.size() as usize;
            for j in 0..size {
                let next = match part {
                    Part::Klein(_) => off + (j + 1) % size,
                    Part::Chain(_) => off + (j + 1).min(size - 1),
                };
                targets.push(next + 1);
            }
        }
        IndexVector::new(d, targets)
    }
}

/// Canonical support of the simple polynomial of type `t` and degree `d`.
pub fn simple_support(d: u32, t: &SimpleType) -> Result<Support, PolyError> {
    let n = t.total() as usize;
    let mut monomials = Vec::with_capacity(n);
    for (part, off) in t.parts().into_iter().zip(t.offsets()) {
        let size = part.size() as usize;
        for j in 0..size {
            let i = off + j;
            let m = match part {
                Part::Klein(_) => ExponentVector::near_power(n, i, off + (j + 1) % size, d),
                Part::Chain(_) if j + 1 < size => ExponentVector::near_power(n, i, i + 1, d),
                Part::Chain(_) => ExponentVector::pure_power(n, i, d),
            };
            monomials.push(m);
        }
    }
    Support::new(d, n, monomials)
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts().iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Parses `"K4+T2"`, `"k1 + K1 + k1"` and the like.
impl FromStr for SimpleType {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, PolyError> {
        let mut k = Vec::new();
        let mut t = Vec::new();
        for token in s.split(['+', '⊕']) {
            let token: String = token.chars().filter(|c| !c.is_whitespace()).collect();
            let mut chars = token.chars();
            let kind = chars.next().map(|c| c.to_ascii_uppercase());
            let size: u32 = chars
                .as_str()
                .trim_start_matches('_')
                .parse()
                .map_err(|_| PolyError::SimpleType(format!("bad part {token:?} in {s:?}")))?;
            match kind {
                Some('K') => k.push(size),
                Some('T') => t.push(size),
                _ => return Err(PolyError::SimpleType(format!("bad part {token:?} in {s:?}"))),
            }
        }
        SimpleType::new(k, t)
    }
}
