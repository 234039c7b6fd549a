//! Smith normal form with unimodular transforms.
//!
//! For an `m x n` integer matrix `A` we compute `D = U * A * V` where `U` and
//! `V` are unimodular and `D` is diagonal with `d_1 | d_2 | ... | d_r` followed
//! by zeros. Pivots are the smallest nonzero entry (by absolute value) of the
//! active block, ties broken by lowest row then lowest column, so the output
//! is a deterministic function of the input.

use super::matrix::{IntScalar, Matrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult<T> {
    /// Diagonal of `D`, length `min(rows, cols)`, nonnegative.
    pub diag: Vec<T>,
    pub u: Matrix<T>,
    pub v: Matrix<T>,
    /// Number of nonzero diagonal entries.
    pub rank: usize,
}

impl<T: IntScalar> SnfResult<T> {
    /// The nonzero diagonal entries.
    pub fn nonzero_diag(&self) -> &[T] {
        &self.diag[..self.rank]
    }

    /// Rebuilds `D` as a full matrix of the original shape.
    pub fn diagonal_matrix(&self) -> Matrix<T> {
        Matrix::diagonal(self.u.rows(), self.v.rows(), &self.diag)
    }
}

/// Panics if a fixed-width `T` overflows; see [`checked_smith_normal_form`].
pub fn smith_normal_form<T: IntScalar>(a: &Matrix<T>) -> SnfResult<T> {
    checked_smith_normal_form(a).expect("integer overflow in Smith normal form; use BigInt entries")
}

/// `None` if an entry of `D`, `U` or `V` would overflow `T`. Never `None`
/// for `BigInt`.
pub fn checked_smith_normal_form<T: IntScalar>(a: &Matrix<T>) -> Option<SnfResult<T>> {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = Matrix::identity(m);
    let mut v = Matrix::identity(n);
    let steps = m.min(n);
    let mut rank = 0;

    'outer: for t in 0..steps {
        loop {
            let Some((pr, pc)) = min_pivot(&d, t) else {
                break 'outer;
            };
            d.swap_rows(t, pr);
            u.swap_rows(t, pr);
            d.swap_cols(t, pc);
            v.swap_cols(t, pc);

            let pivot = d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -nearest_quotient(&d[(i, t)], &pivot);
                d.checked_add_row_multiple(i, t, &q)?;
                u.checked_add_row_multiple(i, t, &q)?;
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -nearest_quotient(&d[(t, j)], &pivot);
                d.checked_add_col_multiple(j, t, &q)?;
                v.checked_add_col_multiple(j, t, &q)?;
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }

            // Row and column are cleared; enforce divisibility of the rest.
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(d[(i, j)].clone() % pivot.clone()).is_zero()));
            match offender {
                Some(i) => {
                    let one = T::one();
                    d.checked_add_row_multiple(t, i, &one)?;
                    u.checked_add_row_multiple(t, i, &one)?;
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        rank += 1;
    }

    let diag = (0..steps).map(|i| d[(i, i)].clone()).collect();
    Some(SnfResult { diag, u, v, rank })
}

/// `q` with `|x - q p| <= |p| / 2`. Smaller remainders mean fewer passes
/// and much smaller transform entries than truncating division.
fn nearest_quotient<T: IntScalar>(x: &T, p: &T) -> T {
    let (q, r) = x.div_mod_floor(p);
    // r has the sign of p, so stepping q up moves r toward zero.
    if (r.clone() + r).abs() > p.abs() {
        q + T::one()
    } else {
        q
    }
}

fn min_pivot<T: IntScalar>(d: &Matrix<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, T)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            let a = x.abs();
            let better = match &best {
                None => true,
                Some((_, _, b)) => a < *b,
            };
            if better {
                if a.is_one() {
                    return Some((i, j));
                }
                best = Some((i, j, a));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}
