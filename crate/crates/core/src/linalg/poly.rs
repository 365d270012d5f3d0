//! Univariate polynomials `c_0 + c_1 x + ... + c_d x^d` over a scalar domain.
//! Used for characteristic and minimal polynomials of matrices.

use std::fmt;

use num_traits::Zero;

use crate::linalg::matrix::Mat;
use crate::scalar::{Complex, ExactScalar, Scalar};

#[derive(Clone, PartialEq, Debug)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    /// Builds from ascending coefficients, dropping trailing zeros.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![T::one()] }
    }

    /// `x - root`.
    pub fn linear(root: T) -> Self {
        Poly { coeffs: vec![-root, T::one()] }
    }

    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a T>) -> Self {
        roots.into_iter().fold(Self::one(), |acc, r| acc.mul(&Self::linear(r.clone())))
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                let cur = std::mem::replace(&mut out[i + j], T::zero());
                out[i + j] = cur + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Evaluates at a square matrix by Horner's rule.
    pub fn eval_mat(&self, m: &Mat<T>) -> Mat<T> {
        let n = m.rows();
        let mut acc = Mat::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &acc * m;
            for i in 0..n {
                acc[(i, i)] = acc[(i, i)].clone() + c.clone();
            }
        }
        acc
    }

    /// Quotient by `x - root` when the remainder vanishes (exactly, or within
    /// `tol` relative to the coefficient scale for floating domains).
    pub fn divide_linear(&self, root: &T, tol: f64) -> Option<Self> {
        let d = self.degree()?;
        if d == 0 {
            return None;
        }
        let mut quot = vec![T::zero(); d];
        let mut carry = self.coeffs[d].clone();
        for k in (0..d).rev() {
            quot[k] = carry.clone();
            carry = self.coeffs[k].clone() + carry * root.clone();
        }
        let ok = if T::is_exact() {
            carry.is_zero()
        } else {
            let scale = self.coeffs.iter().map(Scalar::magnitude).fold(1.0, f64::max);
            carry.magnitude() <= tol * scale
        };
        ok.then(|| Self::new(quot))
    }
}

impl<T: ExactScalar> Poly<T> {
    /// Exact quotient `self / divisor`; `None` if the division leaves a
    /// remainder or needs a non-exact coefficient division.
    pub fn divide_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        let Some(fd) = self.degree() else {
            return Some(Self::zero());
        };
        if fd < dd {
            return None;
        }
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); fd - dd + 1];
        for i in (0..=fd - dd).rev() {
            let c = rem[i + dd].div_exact(&lead)?;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let cur = std::mem::replace(&mut rem[i + j], T::zero());
                rem[i + j] = cur - c.clone() * dc.clone();
            }
            quot[i] = c;
        }
        rem.iter().all(Zero::is_zero).then(|| Self::new(quot))
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Poly<T> {
    /// Descending terms such as `(1)*x^2 + (-12)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Maximum coefficient distance between two complex polynomials of equal degree.
pub fn coeff_distance(a: &Poly<Complex>, b: &Poly<Complex>) -> f64 {
    let n = a.coeffs.len().max(b.coeffs.len());
    (0..n)
        .map(|k| {
            let x = a.coeffs.get(k).copied().unwrap_or_default();
            let y = b.coeffs.get(k).copied().unwrap_or_default();
            (x - y).norm()
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rational, Rational};

    fn qp(c: &[i64]) -> Poly<Rational> {
        Poly::new(c.iter().map(|&x| rational(x, 1)).collect())
    }

    #[test]
    fn arithmetic() {
        let p = Poly::from_roots(&[rational(2, 1), rational(3, 1)]);
        assert_eq!(p, qp(&[6, -5, 1]));
        assert_eq!(p.eval(&rational(2, 1)), rational(0, 1));
        assert_eq!(p.divide_linear(&rational(3, 1), 0.0), Some(qp(&[-2, 1])));
        assert_eq!(p.divide_linear(&rational(4, 1), 0.0), None);
        assert_eq!(p.divide_exact(&qp(&[-2, 1])), Some(qp(&[-3, 1])));
        assert_eq!(p.divide_exact(&qp(&[1, 1])), None);
        assert_eq!(qp(&[1, 2, 0, 0]).degree(), Some(1));
    }

    #[test]
    fn matrix_evaluation() {
        let m = Mat::diagonal(&[rational(2, 1), rational(3, 1)]);
        let p = Poly::from_roots(&[rational(2, 1), rational(3, 1)]);
        assert!(p.eval_mat(&m).is_zero());
        assert!(!qp(&[-2, 1]).eval_mat(&m).is_zero());
    }
}
