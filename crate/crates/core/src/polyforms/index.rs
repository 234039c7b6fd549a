//! The family `F_I = x_1^{d-1} x_{i_1} + ... + x_k^{d-1} x_{i_k}`.
//!
//! `F_I` is smooth iff there is no pair `a < b` with `i_a = i_b` and
//! `i_a` outside `{a, b}`; equivalently the functional graph `a -> i_a` splits
//! into plain cycles and paths ending in a loop, which read off directly as
//! Klein and chain blocks.

use std::fmt;

use num_rational::Ratio;

use super::simple::SimpleType;
use super::support::{ExponentVector, Support};
use super::PolyError;

/// The data `(d, i_1, ..., i_k)`. Targets are stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexVector {
    d: u32,
    targets: Vec<usize>,
}

impl IndexVector {
    /// `targets` are 1-based, each in `1..=k`.
    pub fn new(d: u32, targets: Vec<usize>) -> Result<Self, PolyError> {
        if d < 3 {
            return Err(PolyError::Degree(d));
        }
        let k = targets.len();
        if k == 0 {
            return Err(PolyError::NoVariables);
        }
        if let Some(&bad) = targets.iter().find(|&&t| t == 0 || t > k) {
            return Err(PolyError::TargetOutOfRange { target: bad, k });
        }
        Ok(IndexVector { d, targets: targets.into_iter().map(|t| t - 1).collect() })
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn len(&self) -> usize {
        self.targets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.targets.is_empty()
    }

    /// 0-based target of the 0-based variable `a`.
    pub fn target(&self, a: usize) -> usize {
        self.targets[a]
    }

    pub fn targets_one_based(&self) -> Vec<usize> {
        self.targets.iter().map(|t| t + 1).collect()
    }

    pub fn build_f_i(&self) -> Support {
        let k = self.len();
        let monomials = (0..k).map(|a| ExponentVector::near_power(k, a, self.targets[a], self.d)).collect();
        Support::new(self.d, k, monomials).expect("F_I monomials are well formed")
    }

    /// First pair `a < b` (0-based, lexicographic) with `i_a = i_b` not in
    /// `{a, b}`.
    pub fn violating_pair(&self) -> Option<(usize, usize)> {
        let k = self.len();
        for a in 0..k {
            for b in a + 1..k {
                let c = self.targets[a];
                if c == self.targets[b] && c != a && c != b {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_smooth_f_i(&self) -> bool {
        self.violating_pair().is_none()
    }

    /// Reads the component structure of the functional graph.
    pub fn graph_decompose(&self) -> Result<SimpleType, NotSimple> {
        let k = self.len();
        let mut in_deg = vec![0usize; k];
        for (a, &t) in self.targets.iter().enumerate() {
            if t != a {
                in_deg[t] += 1;
            }
        }
        let mut component = vec![usize::MAX; k];
        let mut k_parts = Vec::new();
        let mut t_parts = Vec::new();
        for start in 0..k {
            if component[start] != usize::MAX {
                continue;
            }
            // Walk forward until we revisit a vertex: that vertex is on the cycle.
            let mut seen_at = vec![usize::MAX; k];
            let mut v = start;
            let mut step = 0;
            while seen_at[v] == usize::MAX {
                seen_at[v] = step;
                v = self.targets[v];
                step += 1;
            }
            let cycle_len = step - seen_at[v];
            let members = self.component_of(v);
            for &m in &members {
                component[m] = start;
            }
            let size = members.len();
            if cycle_len >= 2 {
                if size != cycle_len {
                    return Err(NotSimple);
                }
                k_parts.push(size as u32);
            } else {
                // Self-loop at v: the rest must be a single path into v.
                if members.iter().any(|&m| in_deg[m] > 1) {
                    return Err(NotSimple);
                }
                if size == 1 {
                    k_parts.push(1);
                } else {
                    t_parts.push(size as u32);
                }
            }
        }
        Ok(SimpleType::new(k_parts, t_parts).expect("nonempty"))
    }

    /// All vertices weakly connected to `v`.
    fn component_of(&self, v: usize) -> Vec<usize> {
        let k = self.len();
        let mut in_comp = vec![false; k];
        in_comp[v] = true;
        let mut changed = true;
        while changed {
            changed = false;
            for a in 0..k {
                let t = self.targets[a];
                if in_comp[a] != in_comp[t] {
                    in_comp[a] = true;
                    in_comp[t] = true;
                    changed = true;
                }
            }
        }
        (0..k).filter(|&a| in_comp[a]).collect()
    }

    /// A point where every partial derivative of `F_I` vanishes, if any:
    /// `1` at `a`, `exp(pi i/(d-1))` at `b`, zero elsewhere, for the first
    /// violating pair `(a, b)`.
    pub fn singular_witness(&self) -> Option<SingularWitness> {
        let (a, b) = self.violating_pair()?;
        let mut point = vec![Coordinate::Zero; self.len()];
        point[a] = Coordinate::One;
        point[b] = Coordinate::root(1, 2 * (i64::from(self.d) - 1));
        Some(SingularWitness { point })
    }
}

impl fmt::Display for IndexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(d={}; ", self.d)?;
        for (i, t) in self.targets.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", t + 1)?;
        }
        write!(f, ")")
    }
}

/// `F_I` is not simple (hence not smooth).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotSimple;

impl fmt::Display for NotSimple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not simple")
    }
}

impl std::error::Error for NotSimple {}

/// An exact point coordinate: zero, or the root of unity `exp(2 pi i * angle)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coordinate {
    Zero,
    One,
    /// Angle as a fraction of a full turn, reduced, in `(0, 1)`.
    Root(Ratio<i64>),
}

impl Coordinate {
    pub fn root(num: i64, den: i64) -> Coordinate {
        let r = Ratio::new(num.rem_euclid(den), den);
        if r == Ratio::from_integer(0) {
            Coordinate::One
        } else {
            Coordinate::Root(r)
        }
    }

    /// Angle fraction of a nonzero coordinate (`One` has angle 0).
    pub fn angle(self) -> Option<Ratio<i64>> {
        match self {
            Coordinate::Zero => None,
            Coordinate::One => Some(Ratio::from_integer(0)),
            Coordinate::Root(r) => Some(r),
        }
    }
}

impl fmt::Display for Coordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coordinate::Zero => write!(f, "0"),
            Coordinate::One => write!(f, "1"),
            Coordinate::Root(r) => {
                // exp(2 pi i r) = exp(i pi * 2r)
                let half_turns = *r * 2;
                let (p, q) = (*half_turns.numer(), *half_turns.denom());
                match (p, q) {
                    (1, 1) => write!(f, "-1"),
                    (1, q) => write!(f, "e^{{iπ/{q}}}"),
                    (p, 1) => write!(f, "e^{{{p}iπ}}"),
                    (p, q) => write!(f, "e^{{{p}iπ/{q}}}"),
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularWitness {
    pub point: Vec<Coordinate>,
}

impl SingularWitness {
    /// Common denominator of all angles.
    pub fn root_order(&self) -> i64 {
        self.point.iter().filter_map(|c| c.angle()).fold(1, |acc, r| num_integer::lcm(acc, *r.denom()))
    }
}

impl fmt::Display for SingularWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.point.iter().enumerate() {
            if i > 0 {
                write!(f, " : ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}
