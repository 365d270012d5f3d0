//! Scalar domains and the traits that let the matrix code run over all three.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::exact;
use crate::laurent::LaurentPoly;
use crate::linalg::matrix::Mat;
use crate::linalg::numeric;
use crate::linalg::LinalgError;

pub type Rational = num_rational::BigRational;
pub type Complex = num_complex::Complex64;

/// Default relative tolerance for numeric rank and residual decisions.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Default relative tolerance for merging numerically computed eigenvalues.
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    Rational,
    Laurent,
    Complex,
}

impl Domain {
    pub fn name(self) -> &'static str {
        match self {
            Domain::Rational => "rational",
            Domain::Laurent => "laurent",
            Domain::Complex => "complex",
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A matrix entry type. Linear-algebra entry points dispatch through here so
/// generic code picks exact or floating algorithms by domain.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    const DOMAIN: Domain;

    /// Absolute value for floats and rationals; largest coefficient magnitude
    /// for Laurent polynomials.
    fn magnitude(&self) -> f64;

    fn from_integer(n: i64) -> Self;

    fn is_exact() -> bool {
        Self::DOMAIN != Domain::Complex
    }

    /// Rank over the field of fractions; `tol` is ignored by exact domains.
    fn rank(m: &Mat<Self>, tol: f64) -> usize;

    /// Kernel basis over the field of fractions, as column vectors.
    fn nullspace(m: &Mat<Self>, tol: f64) -> Vec<Vec<Self>>;

    /// Inverse within the domain. Laurent matrices are invertible only when
    /// the determinant is a unit.
    fn inverse(m: &Mat<Self>, tol: f64) -> Option<Mat<Self>>;
}

/// Integral domains with exact division, used by fraction-free elimination.
pub trait ExactScalar: Scalar {
    /// `self / d` when the quotient lies in the domain.
    fn div_exact(&self, d: &Self) -> Option<Self>;

    /// Rough size used to prefer cheap pivots.
    fn complexity(&self) -> usize;

    /// True when every nonzero element is invertible.
    fn is_field() -> bool;
}

/// Fields whose elements can be compared against complex eigenvalues.
pub trait FieldScalar: Scalar {
    fn recip(&self) -> Option<Self>;
    fn to_complex(&self) -> Complex;
    fn from_rational(q: &Rational) -> Self;
}

/// Fields with an eigenvalue routine. For `Rational` only eigenvalues lying
/// in `Q` are returned; callers needing irrational eigenvalues complexify.
pub trait EigenScalar: FieldScalar {
    fn eigenvalues(m: &Mat<Self>, cluster_tol: f64) -> Result<Vec<(Self, usize)>, LinalgError>;
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rational_to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

impl Scalar for Rational {
    const DOMAIN: Domain = Domain::Rational;

    fn magnitude(&self) -> f64 {
        rational_to_f64(&self.abs())
    }
    fn from_integer(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
    fn rank(m: &Mat<Self>, _tol: f64) -> usize {
        exact::rank_exact(m)
    }
    fn nullspace(m: &Mat<Self>, _tol: f64) -> Vec<Vec<Self>> {
        exact::nullspace_exact(m)
    }
    fn inverse(m: &Mat<Self>, _tol: f64) -> Option<Mat<Self>> {
        exact::inverse_exact(m)
    }
}

impl ExactScalar for Rational {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            None
        } else {
            Some(self / d)
        }
    }
    fn complexity(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
    fn is_field() -> bool {
        true
    }
}

impl FieldScalar for Rational {
    fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational::recip(self))
        }
    }
    fn to_complex(&self) -> Complex {
        Complex::new(rational_to_f64(self), 0.0)
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

impl EigenScalar for Rational {
    fn eigenvalues(m: &Mat<Self>, cluster_tol: f64) -> Result<Vec<(Self, usize)>, LinalgError> {
        exact::rational_eigenvalues(m, cluster_tol)
    }
}

impl Scalar for LaurentPoly {
    const DOMAIN: Domain = Domain::Laurent;

    fn magnitude(&self) -> f64 {
        self.max_abs_coeff()
    }
    fn from_integer(n: i64) -> Self {
        LaurentPoly::from_integer(n)
    }
    fn rank(m: &Mat<Self>, _tol: f64) -> usize {
        exact::rank_exact(m)
    }
    fn nullspace(m: &Mat<Self>, _tol: f64) -> Vec<Vec<Self>> {
        exact::nullspace_exact(m)
    }
    fn inverse(m: &Mat<Self>, _tol: f64) -> Option<Mat<Self>> {
        exact::inverse_exact(m)
    }
}

impl ExactScalar for LaurentPoly {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        self.divide_exact(d).ok()
    }
    fn complexity(&self) -> usize {
        self.terms()
            .map(|(_, c)| (c.numer().bits() + c.denom().bits()) as usize)
            .sum::<usize>()
            + self.num_terms()
    }
    fn is_field() -> bool {
        false
    }
}

impl Scalar for Complex {
    const DOMAIN: Domain = Domain::Complex;

    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn from_integer(n: i64) -> Self {
        Complex::new(n as f64, 0.0)
    }
    fn rank(m: &Mat<Self>, tol: f64) -> usize {
        numeric::rank_numeric(m, tol)
    }
    fn nullspace(m: &Mat<Self>, tol: f64) -> Vec<Vec<Self>> {
        numeric::nullspace_numeric(m, tol)
    }
    fn inverse(m: &Mat<Self>, tol: f64) -> Option<Mat<Self>> {
        numeric::inverse_numeric(m, tol)
    }
}

impl FieldScalar for Complex {
    fn recip(&self) -> Option<Self> {
        if self.norm() == 0.0 {
            None
        } else {
            Some(self.inv())
        }
    }
    fn to_complex(&self) -> Complex {
        *self
    }
    fn from_rational(q: &Rational) -> Self {
        Complex::new(rational_to_f64(q), 0.0)
    }
}

impl EigenScalar for Complex {
    fn eigenvalues(m: &Mat<Self>, cluster_tol: f64) -> Result<Vec<(Self, usize)>, LinalgError> {
        numeric::eigen_numeric(m, cluster_tol)
    }
}
