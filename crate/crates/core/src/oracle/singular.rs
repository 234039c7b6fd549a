use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Float, FloatConst, Zero};

use super::cyclotomic::CyclotomicValue;
use crate::polyforms::{Coordinate, IndexVector, SingularWitness, Support};

pub const FLOAT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalMode {
    /// Exact arithmetic in a cyclotomic field.
    Exact,
    /// `f64` evaluation with tolerance [`FLOAT_TOLERANCE`].
    Float,
}

/// True iff every partial derivative of `F_I` vanishes at the witness point
/// and the point is not the origin.
pub fn verify_singular_point(iv: &IndexVector, w: &SingularWitness, mode: EvalMode) -> bool {
    let s = iv.build_f_i();
    match mode {
        EvalMode::Exact => partials_vanish_exact(&s, &w.point),
        EvalMode::Float => partials_vanish_float::<f64>(&s, &w.point, FLOAT_TOLERANCE),
    }
}

fn well_formed(s: &Support, point: &[Coordinate]) -> bool {
    point.len() == s.n_vars() && point.iter().any(|c| *c != Coordinate::Zero)
}

/// Monomials of `dF/dx_j` (all coefficients 1 in `F`), as `(coefficient, exponents)`.
fn partial_terms(s: &Support, j: usize) -> impl Iterator<Item = (u32, Vec<u32>)> + '_ {
    s.monomials().iter().filter(move |m| m.0[j] > 0).map(move |m| {
        let mut e = m.0.clone();
        e[j] -= 1;
        (m.0[j], e)
    })
}

pub fn partials_vanish_exact(s: &Support, point: &[Coordinate]) -> bool {
    if !well_formed(s, point) {
        return false;
    }
    let order = SingularWitness { point: point.to_vec() }.root_order() as usize;
    // Exponent of zeta_order for each nonzero coordinate.
    let powers: Vec<Option<i64>> = point.iter().map(|c| c.angle().map(|r| (r * order as i64).to_integer())).collect();
    (0..s.n_vars()).all(|j| {
        let mut value = CyclotomicValue::zero(order);
        for (coeff, e) in partial_terms(s, j) {
            let mut k = 0i64;
            let mut vanishes = false;
            for (&ei, p) in e.iter().zip(&powers) {
                match (ei, p) {
                    (0, _) => {}
                    (_, None) => vanishes = true,
                    (_, Some(p)) => k += i64::from(ei) * p,
                }
            }
            if !vanishes {
                let term = CyclotomicValue::root_power(order, k).scaled(&BigRational::from_integer(coeff.into()));
                value = &value + &term;
            }
        }
        value.is_zero()
    })
}

/// Floating-point check with coordinates on the unit circle; generic over
/// the float type.
pub fn partials_vanish_float<F: Float + FloatConst>(s: &Support, point: &[Coordinate], tol: F) -> bool {
    if !well_formed(s, point) {
        return false;
    }
    let coords: Vec<Complex<F>> = point
        .iter()
        .map(|c| match c.angle() {
            None => Complex::zero(),
            Some(r) => {
                let frac = F::from(*r.numer()).expect("small") / F::from(*r.denom()).expect("small");
                Complex::from_polar(F::one(), F::TAU() * frac)
            }
        })
        .collect();
    (0..s.n_vars()).all(|j| {
        let mut value = Complex::<F>::zero();
        for (coeff, e) in partial_terms(s, j) {
            let term = e
                .iter()
                .zip(&coords)
                .fold(Complex::new(F::from(coeff).expect("small"), F::zero()), |acc, (&ei, z)| acc * z.powu(ei));
            value = value + term;
        }
        value.norm() < tol
    })
}
