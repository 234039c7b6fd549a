use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Value};

use super::PolyError;

/// Exponents of a monomial `x_1^{e_1} ... x_N^{e_N}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `x_i^d` in `n` variables.
    pub fn pure_power(n: usize, i: usize, d: u32) -> Self {
        let mut e = vec![0; n];
        e[i] = d;
        ExponentVector(e)
    }

    /// `x_i^{d-1} x_j` in `n` variables (`x_i^d` when `i == j`).
    pub fn near_power(n: usize, i: usize, j: usize, d: u32) -> Self {
        let mut e = vec![0; n];
        e[i] += d - 1;
        e[j] += 1;
        ExponentVector(e)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Highest power first, so x6^2 x1 reads as written by hand.
        let mut order: Vec<usize> = (0..self.0.len()).filter(|&i| self.0[i] > 0).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(self.0[i]), i));
        let mut first = true;
        for i in order {
            let e = self.0[i];
            if !first {
                write!(f, " ")?;
            }
            first = false;
            match e {
                1 => write!(f, "x{}", i + 1)?,
                _ => write!(f, "x{}^{}", i + 1, e)?,
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// The monomial support of a degree-`d` form in `n_vars` variables.
///
/// Monomials keep their insertion order (for printing) but duplicates are
/// dropped and equality is set equality.
#[derive(Clone, Debug)]
pub struct Support {
    d: u32,
    n_vars: usize,
    monomials: Vec<ExponentVector>,
}

impl Support {
    pub fn new(d: u32, n_vars: usize, monomials: Vec<ExponentVector>) -> Result<Self, PolyError> {
        if d < 3 {
            return Err(PolyError::Degree(d));
        }
        if n_vars == 0 {
            return Err(PolyError::NoVariables);
        }
        if monomials.is_empty() {
            return Err(PolyError::EmptySupport);
        }
        let mut seen = BTreeSet::new();
        let mut kept = Vec::with_capacity(monomials.len());
        for m in monomials {
            if m.len() != n_vars {
                return Err(PolyError::MonomialLength { expected: n_vars, found: m.len() });
            }
            if m.degree() != d {
                return Err(PolyError::MonomialDegree { expected: d, monomial: m.0.clone() });
            }
            if seen.insert(m.clone()) {
                kept.push(m);
            }
        }
        Ok(Support { d, n_vars, monomials: kept })
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn monomials(&self) -> &[ExponentVector] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn contains(&self, m: &ExponentVector) -> bool {
        self.monomials.contains(m)
    }

    /// Same support with variables renamed: old variable `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Support {
        let monomials = self
            .monomials
            .iter()
            .map(|m| {
                let mut e = vec![0; self.n_vars];
                for (i, &x) in m.0.iter().enumerate() {
                    e[perm[i]] = x;
                }
                ExponentVector(e)
            })
            .collect();
        Support { d: self.d, n_vars: self.n_vars, monomials }
    }

    /// `{"d": .., "n_vars": .., "monomials": [[..], ..]}`
    pub fn to_json(&self) -> Value {
        json!({
            "d": self.d,
            "n_vars": self.n_vars,
            "monomials": self.monomials.iter().map(|m| m.0.clone()).collect::<Vec<_>>(),
        })
    }

    /// Accepts either the object form produced by [`Support::to_json`] or a
    /// bare array of exponent arrays, in which case `d` must be given (or is
    /// taken from the first monomial's degree) and `n_vars` is the array width.
    pub fn from_json(text: &str, d: Option<u32>) -> Result<Support, PolyError> {
        let value: Value = serde_json::from_str(text).map_err(|e| PolyError::Json(e.to_string()))?;
        let (meta_d, meta_n, rows) = match &value {
            Value::Array(rows) => (None, None, rows),
            Value::Object(map) => {
                let rows = map
                    .get("monomials")
                    .and_then(Value::as_array)
                    .ok_or_else(|| PolyError::Json("missing \"monomials\" array".into()))?;
                let get = |k: &str| map.get(k).and_then(Value::as_u64);
                (get("d"), get("n_vars"), rows)
            }
            _ => return Err(PolyError::Json("expected an array or object".into())),
        };
        let monomials = rows
            .iter()
            .map(|row| {
                let row = row.as_array().ok_or_else(|| PolyError::Json("monomial is not an array".into()))?;
                row.iter()
                    .map(|x| {
                        x.as_u64()
                            .and_then(|x| u32::try_from(x).ok())
                            .ok_or_else(|| PolyError::Json(format!("bad exponent {x}")))
                    })
                    .collect::<Result<Vec<u32>, _>>()
                    .map(ExponentVector)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let meta_d = meta_d.map(|x| x as u32);
        if let (Some(a), Some(b)) = (d, meta_d) {
            if a != b {
                return Err(PolyError::Json(format!("degree {a} given but file says {b}")));
            }
        }
        let d =
            d.or(meta_d).or_else(|| monomials.first().map(ExponentVector::degree)).ok_or(PolyError::EmptySupport)?;
        let n = meta_n
            .map(|x| x as usize)
            .or_else(|| monomials.first().map(ExponentVector::len))
            .ok_or(PolyError::EmptySupport)?;
        Support::new(d, n, monomials)
    }

    /// Parses text such as `x1^2 x2 + x2^3` (also `x1^2*x2`). Coefficients are
    /// not supported; every listed monomial is in the support.
    pub fn parse_polynomial(d: u32, n_vars: usize, text: &str) -> Result<Support, PolyError> {
        let bad = |msg: &str| PolyError::Polynomial(format!("{msg} in {text:?}"));
        let mut monomials = Vec::new();
        for term in text.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            let mut e = vec![0u32; n_vars];
            for factor in term.split(|c: char| c == '*' || c.is_whitespace()).filter(|s| !s.is_empty()) {
                let factor = factor.strip_prefix(['x', 'X']).ok_or_else(|| bad("expected a variable"))?;
                let factor = factor.strip_prefix('_').unwrap_or(factor);
                let (var, pow) = match factor.split_once('^') {
                    Some((v, p)) => (v, p.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                    None => (factor, 1),
                };
                let var: usize = var.parse().map_err(|_| bad("bad variable index"))?;
                if var == 0 || var > n_vars {
                    return Err(bad("variable index out of range"));
                }
                e[var - 1] += pow;
            }
            monomials.push(ExponentVector(e));
        }
        Support::new(d, n_vars, monomials)
    }
}

impl PartialEq for Support {
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d
            && self.n_vars == other.n_vars
            && self.monomials.iter().collect::<BTreeSet<_>>() == other.monomials.iter().collect::<BTreeSet<_>>()
    }
}

impl Eq for Support {}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.monomials.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}
