//! Dense row-major matrices over any [`Scalar`] domain.

use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_traits::Zero;

use crate::scalar::Scalar;
use crate::linalg::LinalgError;

#[derive(Clone, PartialEq, Debug)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn scalar(n: usize, c: T) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { c.clone() } else { T::zero() })
    }

    pub fn diagonal(diag: &[T]) -> Self {
        let n = diag.len();
        Self::from_fn(n, n, |i, j| if i == j { diag[i].clone() } else { T::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Mat { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::Shape("ragged rows".into()));
        }
        Self::from_vec(r, c, rows.into_iter().flatten().collect())
    }

    /// Matrix whose columns are the given vectors (all of equal length).
    pub fn from_columns(cols: &[Vec<T>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        Self::from_fn(r, c, |i, j| cols[j][i].clone())
    }

    pub fn column_vector(v: Vec<T>) -> Self {
        let n = v.len();
        Mat { rows: n, cols: 1, data: v }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<T> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<T>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U: Scalar>(&self, f: impl FnMut(&T) -> U) -> Mat<U> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<U: Scalar, E>(&self, f: impl FnMut(&T) -> Result<U, E>) -> Result<Mat<U>, E> {
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    /// `self - c*I`.
    pub fn shift_diagonal(&self, c: &T) -> Self {
        let mut out = self.clone();
        for i in 0..self.rows.min(self.cols) {
            out[(i, i)] = out[(i, i)].clone() - c.clone();
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(Scalar::magnitude).fold(0.0, f64::max)
    }

    /// Induced infinity norm (largest absolute row sum).
    pub fn norm_inf(&self) -> f64 {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(Scalar::magnitude).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Returns `Some(c)` when the matrix is exactly `c*I`.
    pub fn as_scalar(&self) -> Option<T> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let c = self[(0, 0)].clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let expect = if i == j { &c } else { &T::zero() };
                if &self[(i, j)] != expect {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// Block diagonal sum of two square matrices.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.rows + other.rows;
        let m = self.cols + other.cols;
        Self::from_fn(n, m, |i, j| {
            if i < self.rows && j < self.cols {
                self[(i, j)].clone()
            } else if i >= self.rows && j >= self.cols {
                other[(i - self.rows, j - self.cols)].clone()
            } else {
                T::zero()
            }
        })
    }

    pub fn vstack(blocks: &[Mat<T>]) -> Self {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            data.extend(b.data.iter().cloned());
        }
        Mat { rows, cols, data }
    }

    pub fn rank(&self, tol: f64) -> usize {
        T::rank(self, tol)
    }

    pub fn nullspace(&self, tol: f64) -> Vec<Vec<T>> {
        T::nullspace(self, tol)
    }

    pub fn inverse(&self, tol: f64) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        T::inverse(self, tol)
    }
}

impl<T> Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Mul for &Mat<T> {
    type Output = Mat<T>;
    fn mul(self, rhs: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let cur = std::mem::replace(&mut out[(i, j)], T::zero());
                    out[(i, j)] = cur + a.clone() * b.clone();
                }
            }
        }
        out
    }
}

impl<T: Scalar> Add for &Mat<T> {
    type Output = Mat<T>;
    fn add(self, rhs: &Mat<T>) -> Mat<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in sum");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<T: Scalar> Sub for &Mat<T> {
    type Output = Mat<T>;
    fn sub(self, rhs: &Mat<T>) -> Mat<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in difference");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }
}

/// Checks `diff ≈ 0`: exactly for exact domains, and `max_abs(diff) <= tol*scale`
/// for floating ones. Returns the verdict and the max-entry residual.
pub fn negligible<T: Scalar>(diff: &Mat<T>, scale: f64, tol: f64) -> (bool, f64) {
    let residual = diff.max_abs();
    if T::is_exact() {
        (diff.is_zero(), residual)
    } else {
        (residual <= tol * scale.max(f64::MIN_POSITIVE), residual)
    }
}
