//! Structural analysis of braid group representations.

mod burnside;
mod corank;
mod eigen;
mod jordan;
mod search;
mod theta;

pub use burnside::{burnside_dimension, burnside_dimension_generic, BurnsideReport};
pub use corank::{corank, corank_generic, CorankEntry, CorankReport};
pub use eigen::{common_eigenvector, subgroup_line_witness, CommonEigenvector, LineWitness};
pub use jordan::{jordan_projection, subgroup_invariance_check, JordanProjection};
pub use search::invariant_subspace_search;
pub use theta::{
    central_scalar, rank_conclusion_check, theta_cycle_audit, CentralScalar, CycleAuditReport, CycleCheck,
    TableCell,
};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::braid::BraidError;
use crate::laurent::LaurentPoly;
use crate::linalg::numeric::{dot, norm2};
use crate::linalg::{LinalgError, Mat};
use crate::rep::{specialize, Rep, RepError, Specialization};
use crate::scalar::{rational, Complex, EigenScalar, Rational};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AnalysisError {
    #[error("random specializations disagree on {quantity}: {values:?}")]
    GenericDisagreement { quantity: &'static str, values: Vec<String> },
    #[error("image of the full twist is not scalar (off-scalar residual {residual:e})")]
    NotScalar { residual: f64 },
    #[error("witness is invalid: {0}")]
    WitnessInvalid(String),
    #[error("{0} is not an eigenvalue")]
    NotEigenvalue(String),
    #[error("algebra closure did not stabilize within {passes} passes")]
    ClosureStalled { passes: usize },
    #[error("witness needs the complex domain: eigenvalue {x} is irrational")]
    NeedsComplexDomain { x: String },
    #[error("operation needs at least {needed} strands, got {strands}")]
    TooFewStrands { needed: usize, strands: usize },
    #[error("vectors must have length {expected}, got {got}")]
    Shape { expected: usize, got: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Braid(#[from] BraidError),
}

impl AnalysisError {
    pub fn name(&self) -> &'static str {
        match self {
            AnalysisError::GenericDisagreement { .. } => "GenericDisagreement",
            AnalysisError::NotScalar { .. } => "NotScalar",
            AnalysisError::WitnessInvalid(_) => "WitnessInvalid",
            AnalysisError::NotEigenvalue(_) => "NotEigenvalue",
            AnalysisError::ClosureStalled { .. } => "ClosureStalled",
            AnalysisError::NeedsComplexDomain { .. } => "NeedsComplexDomain",
            AnalysisError::TooFewStrands { .. } => "TooFewStrands",
            AnalysisError::Shape { .. } => "Shape",
            AnalysisError::Linalg(e) => e.name(),
            AnalysisError::Rep(e) => e.name(),
            AnalysisError::Braid(BraidError::IndexOutOfRange { .. }) => "IndexOutOfRange",
            AnalysisError::Braid(_) => "BraidError",
        }
    }
}

/// Fields the analyses run over: exact rationals and floating complex numbers.
pub trait Field: EigenScalar + Specialization {
    fn conj(&self) -> Self;

    fn from_f64(x: f64) -> Self;

    /// A random coefficient for sampled algebra elements.
    fn sample(rng: &mut ChaCha8Rng) -> Self;

    /// Domain-specific implementation of [`jordan_projection`].
    fn projection(m: &Mat<Self>, lambda: &Self, tol: f64) -> Result<JordanProjection<Self>, AnalysisError>;
}

impl Field for Rational {
    fn conj(&self) -> Self {
        self.clone()
    }

    fn from_f64(x: f64) -> Self {
        Rational::from_float(x).unwrap_or_else(|| rational(0, 1))
    }

    fn sample(rng: &mut ChaCha8Rng) -> Self {
        rational(rng.gen_range(-4..=4), 1)
    }

    fn projection(m: &Mat<Self>, lambda: &Self, _tol: f64) -> Result<JordanProjection<Self>, AnalysisError> {
        jordan::exact_projection(m, lambda)
    }
}

impl Field for Complex {
    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn from_f64(x: f64) -> Self {
        Complex::new(x, 0.0)
    }

    fn sample(rng: &mut ChaCha8Rng) -> Self {
        Complex::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    }

    fn projection(m: &Mat<Self>, lambda: &Self, tol: f64) -> Result<JordanProjection<Self>, AnalysisError> {
        jordan::numeric_projection(m, *lambda, tol)
    }
}

/// Incrementally maintained basis of a subspace of `T^dim`.
///
/// Exact domains keep vectors in echelon form with unit pivots; the complex
/// domain keeps an orthonormal basis and accepts a vector only when its
/// component orthogonal to the span exceeds `tol` times its norm.
#[derive(Debug, Clone)]
pub(crate) struct Span<T> {
    pub basis: Vec<Vec<T>>,
    pivots: Vec<usize>,
    tol: f64,
}

impl<T: Field> Span<T> {
    pub fn new(tol: f64) -> Self {
        Span { basis: Vec::new(), pivots: Vec::new(), tol }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Adds `v` if it is not already in the span; returns the index of the
    /// new basis vector.
    pub fn insert(&mut self, mut v: Vec<T>) -> Option<usize> {
        if T::is_exact() {
            for (b, &p) in self.basis.iter().zip(&self.pivots) {
                if v[p].is_zero() {
                    continue;
                }
                let f = v[p].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    if !y.is_zero() {
                        *x = x.clone() - f.clone() * y.clone();
                    }
                }
            }
            let p = v.iter().position(|x| !x.is_zero())?;
            let inv = v[p].recip().expect("nonzero pivot");
            let v: Vec<T> = v.into_iter().map(|x| x * inv.clone()).collect();
            self.basis.push(v);
            self.pivots.push(p);
        } else {
            let original = vec_norm(&v);
            if original == 0.0 {
                return None;
            }
            for _ in 0..2 {
                for b in &self.basis {
                    let c = inner(b, &v);
                    for (x, y) in v.iter_mut().zip(b) {
                        *x = x.clone() - c.clone() * y.clone();
                    }
                }
            }
            let rest = vec_norm(&v);
            if rest <= self.tol * original {
                return None;
            }
            let inv = T::from_f64(1.0 / rest);
            self.basis.push(v.into_iter().map(|x| x * inv.clone()).collect());
            self.pivots.push(0);
        }
        Some(self.basis.len() - 1)
    }
}

fn inner<T: Field>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (x, y)| acc + x.conj() * y.clone())
}

fn vec_norm<T: Field>(v: &[T]) -> f64 {
    v.iter().map(|x| x.magnitude().powi(2)).sum::<f64>().sqrt()
}

/// Normalizes a vector so that the coordinate at `index` becomes one.
pub(crate) fn normalize_at<T: Field>(v: &[T], index: usize) -> Vec<T> {
    let inv = v[index].recip().expect("normalizing coordinate is nonzero");
    v.iter().map(|x| x.clone() * inv.clone()).collect()
}

/// Index of the first (or last) coordinate that is nonzero, ignoring entries
/// below `tol` times the largest entry in floating domains.
pub(crate) fn significant_index<T: Field>(v: &[T], tol: f64, last: bool) -> Option<usize> {
    let scale = v.iter().map(|x| x.magnitude()).fold(0.0, f64::max);
    let keep = |x: &T| if T::is_exact() { !x.is_zero() } else { x.magnitude() > tol.max(1e-12) * scale };
    if last {
        v.iter().rposition(keep)
    } else {
        v.iter().position(keep)
    }
}

/// Relative distance between two complex vectors after optimal scaling, used
/// to compare directions.
pub(crate) fn direction_residual(a: &[Complex], b: &[Complex]) -> f64 {
    let (na, nb) = (norm2(a), norm2(b));
    if na == 0.0 || nb == 0.0 {
        return if na == nb { 0.0 } else { 1.0 };
    }
    let c = dot(b, a) / (nb * nb);
    let diff: Vec<Complex> = a.iter().zip(b).map(|(x, y)| x - c * y).collect();
    norm2(&diff) / na
}

/// Rational sample points used to analyze Laurent representations through
/// specialization: three distinct values outside `{-1, 0, 1}`.
pub fn generic_points(seed: u64) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Rational> = Vec::new();
    while out.len() < 3 {
        let num: i64 = rng.gen_range(2..=97);
        let den: i64 = rng.gen_range(1..=11);
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let q = rational(sign * num, den);
        if q != rational(1, 1) && q != rational(-1, 1) && !out.contains(&q) {
            out.push(q);
        }
    }
    out
}

/// Runs `f` on three rational specializations of `rho` and requires the
/// results to agree.
pub(crate) fn generic_agreement<R: PartialEq + std::fmt::Debug>(
    rho: &Rep<LaurentPoly>,
    seed: u64,
    quantity: &'static str,
    mut f: impl FnMut(&Rep<Rational>) -> Result<R, AnalysisError>,
) -> Result<R, AnalysisError> {
    let mut results = Vec::new();
    for u in generic_points(seed) {
        let special = specialize(rho, &u, 0.0)?;
        results.push(f(&special)?);
    }
    if results.windows(2).all(|w| w[0] == w[1]) {
        Ok(results.swap_remove(0))
    } else {
        Err(AnalysisError::GenericDisagreement {
            quantity,
            values: results.iter().map(|r| format!("{r:?}")).collect(),
        })
    }
}
