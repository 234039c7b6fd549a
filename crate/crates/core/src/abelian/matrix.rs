use std::fmt;
use std::ops::{Index, IndexMut};

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, Signed};

/// Exact integer scalars usable in [`Matrix`] and the Smith normal form.
///
/// Implemented for every signed `num` integer, so `i64`, `i128` and
/// [`num_bigint::BigInt`] all work. Production code uses `BigInt`. With a
/// fixed-width type the row and column operations detect overflow instead of
/// wrapping.
pub trait IntScalar: Clone + Integer + Signed + CheckedAdd + CheckedMul + fmt::Debug + fmt::Display {}

impl<T> IntScalar for T where T: Clone + Integer + Signed + CheckedAdd + CheckedMul + fmt::Debug + fmt::Display {}

/// Dense row-major matrix over an exact integer type.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: IntScalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds a matrix from its rows. Panics if rows have unequal lengths.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: n_rows, cols, data }
    }

    /// An `rows x cols` matrix with `cols` known up front, so that zero-row
    /// matrices keep their width.
    pub fn from_rows_with_cols(rows: Vec<Vec<T>>, cols: usize) -> Self {
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: n_rows, cols, data }
    }

    pub fn diagonal(rows: usize, cols: usize, diag: &[T]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, v) in diag.iter().enumerate().take(rows.min(cols)) {
            m[(i, i)] = v.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Matrix::<T>::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a.clone() * rhs[(k, j)].clone();
                    out[(i, j)] = out[(i, j)].clone() + prod;
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix<T> {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += factor * row[src]`. Panics on overflow.
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &T) {
        self.checked_add_row_multiple(dst, src, factor).expect("integer overflow in row operation");
    }

    /// `col[dst] += factor * col[src]`. Panics on overflow.
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &T) {
        self.checked_add_col_multiple(dst, src, factor).expect("integer overflow in column operation");
    }

    /// Like [`Matrix::add_row_multiple`], but returns `None` on overflow and
    /// leaves the matrix unchanged.
    pub fn checked_add_row_multiple(&mut self, dst: usize, src: usize, factor: &T) -> Option<()> {
        let new: Vec<T> = (0..self.cols)
            .map(|j| self[(src, j)].checked_mul(factor).and_then(|v| self[(dst, j)].checked_add(&v)))
            .collect::<Option<_>>()?;
        for (j, x) in new.into_iter().enumerate() {
            self[(dst, j)] = x;
        }
        Some(())
    }

    /// Like [`Matrix::add_col_multiple`], but returns `None` on overflow and
    /// leaves the matrix unchanged.
    pub fn checked_add_col_multiple(&mut self, dst: usize, src: usize, factor: &T) -> Option<()> {
        let new: Vec<T> = (0..self.rows)
            .map(|i| self[(i, src)].checked_mul(factor).and_then(|v| self[(i, dst)].checked_add(&v)))
            .collect::<Option<_>>()?;
        for (i, x) in new.into_iter().enumerate() {
            self[(i, dst)] = x;
        }
        Some(())
    }

    pub fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            self[(r, j)] = -self[(r, j)].clone();
        }
    }

    /// Determinant by fraction-free Bareiss elimination. Square matrices only.
    pub fn determinant(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut m = self.clone();
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return T::zero();
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[(i, j)].clone() * m[(k, k)].clone() - m[(i, k)].clone() * m[(k, j)].clone();
                    m[(i, j)] = num / prev.clone();
                }
            }
            prev = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (r, c): (usize, usize)) -> &T {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix({}x{})[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:?}", self.data[r * self.cols + c])?;
            }
        }
        write!(f, "]")
    }
}
