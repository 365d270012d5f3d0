use super::{AnalysisError, Field, Span};
use crate::linalg::numeric::{jordan_structure, nullspace_numeric, rank_numeric};
use crate::linalg::{minpoly_exact, Mat, Poly};
use crate::rep::Rep;
use crate::scalar::{Complex, Rational};

#[derive(Debug, Clone, PartialEq)]
pub struct JordanProjection<T> {
    /// Minimal polynomial `f` of the matrix.
    pub minpoly: Poly<T>,
    /// `f / (x - λ)`.
    pub cofactor: Poly<T>,
    /// Basis of the image of `cofactor(m)`.
    pub basis: Vec<Vec<T>>,
    /// Dimension of that image: the number of Jordan blocks of `λ` having the
    /// largest size.
    pub d: usize,
}

/// Image of `g(m)` where `g = f / (x - λ)` and `f` is the minimal polynomial.
///
/// `g(m)` kills every generalized eigenspace except that of `λ`, where it
/// leaves exactly the top of each largest Jordan block, so the image has
/// dimension `d` = number of largest blocks of `λ`.
pub fn jordan_projection<T: Field>(m: &Mat<T>, lambda: &T, tol: f64) -> Result<JordanProjection<T>, AnalysisError> {
    if !m.is_square() {
        return Err(crate::linalg::LinalgError::NotSquare.into());
    }
    T::projection(m, lambda, tol)
}

pub(crate) fn exact_projection(m: &Mat<Rational>, lambda: &Rational) -> Result<JordanProjection<Rational>, AnalysisError> {
    let minpoly = minpoly_exact(m);
    let cofactor = minpoly.divide_linear(lambda, 0.0).ok_or_else(|| AnalysisError::NotEigenvalue(lambda.to_string()))?;
    let image = cofactor.eval_mat(m);
    let mut span = Span::<Rational>::new(0.0);
    for col in image.columns() {
        span.insert(col);
    }
    Ok(JordanProjection { minpoly, cofactor, d: span.dim(), basis: span.basis })
}

pub(crate) fn numeric_projection(m: &Mat<Complex>, lambda: Complex, tol: f64) -> Result<JordanProjection<Complex>, AnalysisError> {
    let data = jordan_structure(m, tol)?;
    let target = data
        .find(lambda, 1e-6)
        .ok_or_else(|| AnalysisError::NotEigenvalue(format!("{lambda}")))?
        .value;
    let mut roots: Vec<Complex> = data
        .eigenvalues
        .iter()
        .flat_map(|e| std::iter::repeat_n(e.value, e.largest_block()))
        .collect();
    let minpoly = Poly::from_roots(&roots);
    let pos = roots.iter().position(|r| *r == target).expect("target is a root");
    roots.remove(pos);
    let cofactor = Poly::from_roots(&roots);
    // product of shifted factors is better conditioned than Horner in the
    // monomial basis
    let n = m.rows();
    let image = roots.iter().fold(Mat::identity(n), |acc, r| &acc * &m.shift_diagonal(r));
    let d = rank_numeric(&image, tol);
    // image = orthogonal complement of ker(image^H), with the same rank decision
    let adjoint = Mat::from_fn(n, n, |i, j| image[(j, i)].conj());
    let mut span = Span::<Complex>::new(1e-8);
    for k in nullspace_numeric(&adjoint, tol) {
        span.insert(k);
    }
    let skip = span.dim();
    for j in 0..n {
        span.insert((0..n).map(|i| Complex::new((i == j) as u8 as f64, 0.0)).collect());
    }
    let basis = span.basis.split_off(skip);
    debug_assert_eq!(basis.len(), d);
    Ok(JordanProjection { minpoly, cofactor, basis, d })
}

/// True when `span(v)` is mapped into itself by every listed generator
/// (1-based indices).
pub fn subgroup_invariance_check<T: Field>(rho: &Rep<T>, v: &[Vec<T>], generators: &[usize], tol: f64) -> Result<bool, AnalysisError> {
    let r = rho.degree();
    if let Some(bad) = v.iter().find(|x| x.len() != r) {
        return Err(AnalysisError::Shape { expected: r, got: bad.len() });
    }
    if let Some(&i) = generators.iter().find(|&&i| i == 0 || i >= rho.strands()) {
        return Err(crate::braid::BraidError::IndexOutOfRange { index: i, strands: rho.strands() }.into());
    }
    if v.is_empty() {
        return Ok(true);
    }
    let base = Mat::from_columns(v);
    let k = base.rank(tol);
    for &i in generators {
        let image = rho.generator(i) * &base;
        let mut cols = v.to_vec();
        cols.extend(image.columns());
        if Mat::from_columns(&cols).rank(tol) != k {
            return Ok(false);
        }
    }
    Ok(true)
}
