use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::automorphism::{acts_with_character, DiagonalAutomorphism};
use super::DiagError;
use crate::abelian::{smith_normal_form, FiniteAbelianGroup, Matrix};
use crate::polyforms::Support;

/// `G_F` with one generator per invariant factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryGroupResult {
    pub group: FiniteAbelianGroup,
    pub generators: Vec<DiagonalAutomorphism>,
    /// Residue `c` with `g F = exp(2 pi i c/n) F`, relative to each
    /// generator's own denominator.
    pub scalar_characters: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymmetryGroup {
    Finite(SymmetryGroupResult),
    /// A primitive integer vector `v` such that `diag(t^{v_1}, ..., t^{v_N})`
    /// preserves every form with this support for all `t` in `C^*`.
    Infinite {
        direction: Vec<BigInt>,
    },
}

impl SymmetryGroup {
    pub fn finite(&self) -> Option<&SymmetryGroupResult> {
        match self {
            SymmetryGroup::Finite(r) => Some(r),
            SymmetryGroup::Infinite { .. } => None,
        }
    }
}

/// The group of diagonal projective automorphisms preserving every form with
/// support `s`.
///
/// With `y_j = e_j - e_N` the invariance conditions become `B' y = 0` in
/// `(Q/Z)^{N-1}`, where the rows of `B'` are `alpha_i - alpha_1` without the
/// last coordinate. If `U B' V = diag(d_1, ..., d_r)`, the solutions are
/// spanned by `V e_i / d_i`, plus a free torus when `r < N - 1`.
pub fn symmetry_group(s: &Support) -> Result<SymmetryGroup, DiagError> {
    let n = s.n_vars();
    if n == 1 {
        // P^0 is a point: every diagonal map is a scalar.
        return Ok(SymmetryGroup::Finite(SymmetryGroupResult {
            group: FiniteAbelianGroup::trivial(),
            generators: Vec::new(),
            scalar_characters: Vec::new(),
        }));
    }
    let mons = s.monomials();
    let base = &mons[0].0;
    let rows: Vec<Vec<BigInt>> =
        mons[1..].iter().map(|m| (0..n - 1).map(|j| BigInt::from(m.0[j]) - BigInt::from(base[j])).collect()).collect();
    let b = Matrix::from_rows_with_cols(rows, n - 1);
    let snf = smith_normal_form(&b);

    if snf.rank < n - 1 {
        let mut direction = snf.v.column(snf.rank);
        direction.push(BigInt::zero());
        normalize_sign(&mut direction);
        return Ok(SymmetryGroup::Infinite { direction });
    }

    let mut factors = Vec::new();
    let mut generators = Vec::new();
    let mut characters = Vec::new();
    for (i, d) in snf.diag.iter().enumerate().take(snf.rank) {
        let d = d.abs();
        if d.is_one() {
            continue;
        }
        let mut exps = snf.v.column(i);
        exps.push(BigInt::zero());
        let g = DiagonalAutomorphism::new(d.clone(), exps)?;
        let c = acts_with_character(&g, s)?;
        factors.push(d);
        generators.push(g);
        characters.push(c);
    }
    let group = FiniteAbelianGroup::from_invariant_factors(factors).map_err(|e| DiagError::Internal(e.to_string()))?;
    Ok(SymmetryGroup::Finite(SymmetryGroupResult { group, generators, scalar_characters: characters }))
}

fn normalize_sign(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        v.iter_mut().for_each(|x| *x = &*x / &g);
    }
    if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        v.iter_mut().for_each(|x| *x = -&*x);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyforms::{simple_support, SimpleType};

    fn finite(t: &str, d: u32) -> SymmetryGroupResult {
        let s = simple_support(d, &t.parse::<SimpleType>().unwrap()).unwrap();
        symmetry_group(&s).unwrap().finite().cloned().unwrap()
    }

    fn check_generators(r: &SymmetryGroupResult, s: &Support) {
        for (g, n) in r.generators.iter().zip(r.group.invariant_factors()) {
            assert_eq!(&g.pgl_order(), n);
            assert!(acts_with_character(g, s).is_ok());
        }
    }

    #[test]
    fn klein_sextic() {
        let r = finite("K6", 3);
        assert_eq!(r.group, FiniteAbelianGroup::cyclic(21));
        let table: DiagonalAutomorphism = "1/63(1,-2,4,-8,16,-32)".parse().unwrap();
        let g = &r.generators[0];
        let k = g.projective_log(&table).unwrap();
        assert!(g.pow(&k).projectively_equal(&table));
        assert!(table.projective_log(g).is_some());
        check_generators(&r, &simple_support(3, &SimpleType::klein(6)).unwrap());
    }

    #[test]
    fn chain_sextic() {
        let r = finite("T6", 3);
        assert_eq!(r.group, FiniteAbelianGroup::cyclic(32));
        let table: DiagonalAutomorphism = "1/32(1,-2,4,-8,16,0)".parse().unwrap();
        assert!(r.generators[0].projective_log(&table).is_some());
    }

    #[test]
    fn fermat_cubic_curve() {
        let r = finite("K1+K1+K1", 3);
        assert_eq!(r.group.invariant_factors(), &[BigInt::from(3), BigInt::from(3)]);
        check_generators(&r, &simple_support(3, &"K1+K1+K1".parse().unwrap()).unwrap());
    }

    #[test]
    fn unconstrained_variable_is_infinite() {
        let s = Support::parse_polynomial(3, 3, "x1^2 x2 + x2^2 x1").unwrap();
        match symmetry_group(&s).unwrap() {
            SymmetryGroup::Infinite { direction } => {
                // Scaling along the direction preserves both monomials.
                for m in s.monomials() {
                    let w: BigInt = m.0.iter().zip(&direction).map(|(&a, v)| BigInt::from(a) * v).sum();
                    let w0: BigInt = s.monomials()[0].0.iter().zip(&direction).map(|(&a, v)| BigInt::from(a) * v).sum();
                    assert_eq!(w, w0);
                }
                assert!(direction.iter().any(|x| !x.is_zero()));
            }
            other => panic!("expected infinite group, got {other:?}"),
        }
    }

    #[test]
    fn one_variable_is_trivial() {
        let s = Support::parse_polynomial(3, 1, "x1^3").unwrap();
        let g = symmetry_group(&s).unwrap();
        assert!(g.finite().unwrap().group.is_trivial());
    }

    #[test]
    fn trivial_group() {
        // x1^3 + x1^2 x2 + x2^3: differences (1,-1) and (3,-3) force y = 0.
        let s = Support::parse_polynomial(3, 2, "x1^3 + x1^2 x2 + x2^3").unwrap();
        let r = symmetry_group(&s).unwrap().finite().cloned().unwrap();
        assert!(r.group.is_trivial());
        assert!(r.generators.is_empty());
    }
}
