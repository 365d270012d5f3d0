use super::{normalize_at, significant_index, AnalysisError, Field};
use crate::linalg::Mat;
use crate::rep::{Rep, Specialization};
use crate::scalar::{Complex, DEFAULT_CLUSTER_TOL, DEFAULT_TOL};

#[derive(Debug, Clone, PartialEq)]
pub struct CommonEigenvector<T> {
    /// Normalized so that the first nonzero coordinate is one.
    pub vector: Vec<T>,
    /// Eigenvalue of each generator image, in generator order.
    pub eigenvalues: Vec<T>,
}

/// A line fixed by `ρ` restricted to `B_{m-2} × <σ_{m-1}>`: `σ_i v = y v` for
/// `i <= m-3` and `σ_{m-1} v = x v`. The generator `σ_{m-2}` is unconstrained.
#[derive(Debug, Clone, PartialEq)]
pub struct LineWitness<T> {
    /// Normalized so that the last nonzero coordinate is one.
    pub vector: Vec<T>,
    pub x: T,
    pub y: T,
}

/// Vectors in `span(basis)` killed by `a - λI`. Passing `None` for the basis
/// means the whole space.
///
/// Floating rank decisions are made relative to `‖a‖`, not to the size of the
/// restricted matrix, so a subspace lying entirely in the eigenspace is kept.
fn eigen_intersect<T: Field>(a: &Mat<T>, lambda: &T, basis: Option<&[Vec<T>]>, tol: f64) -> Vec<Vec<T>> {
    let shifted = a.shift_diagonal(lambda);
    let scale = a.max_abs().max(lambda.magnitude()).max(f64::MIN_POSITIVE);
    let Some(basis) = basis else {
        return relative_kernel(&shifted, scale, tol);
    };
    if basis.is_empty() {
        return Vec::new();
    }
    let s = Mat::from_columns(basis);
    let coeffs = relative_kernel(&(&shifted * &s), scale, tol);
    coeffs.iter().map(|c| s.mul_vec(c)).collect()
}

fn relative_kernel<T: Field>(m: &Mat<T>, scale: f64, tol: f64) -> Vec<Vec<T>> {
    if T::is_exact() {
        return m.nullspace(0.0);
    }
    let size = m.max_abs();
    if size <= tol * scale {
        return (0..m.cols())
            .map(|j| (0..m.cols()).map(|i| if i == j { T::one() } else { T::zero() }).collect())
            .collect();
    }
    m.nullspace(tol * scale / size)
}

/// Eigenvalue of `a` on an approximate eigenvector `v`.
fn rayleigh<T: Field>(a: &Mat<T>, v: &[T]) -> T {
    let p = (0..v.len()).max_by(|&i, &j| v[i].magnitude().total_cmp(&v[j].magnitude())).expect("nonempty vector");
    let av = a.mul_vec(v);
    av[p].clone() * v[p].recip().expect("largest coordinate is nonzero")
}

fn by_real_desc<T: Field>(values: &mut [(T, usize)]) {
    values.sort_by(|a, b| {
        let (za, zb): (Complex, Complex) = (a.0.to_complex(), b.0.to_complex());
        zb.re.total_cmp(&za.re).then(zb.im.total_cmp(&za.im))
    });
}

fn common_search<T: Field>(gens: &[Mat<T>], k: usize, basis: Option<&[Vec<T>]>, tol: f64) -> Result<Option<Vec<T>>, AnalysisError> {
    if k == gens.len() {
        return Ok(basis.and_then(|b| b.first().cloned()));
    }
    let mut values = T::eigenvalues(&gens[k], DEFAULT_CLUSTER_TOL)?;
    by_real_desc(&mut values);
    for (lambda, _) in values {
        let next = eigen_intersect(&gens[k], &lambda, basis, tol);
        if next.is_empty() {
            continue;
        }
        if let Some(v) = common_search(gens, k + 1, Some(&next), tol)? {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// A simultaneous eigenvector of all generator images, if one exists. Over the
/// rationals only rational eigenvalues are explored.
pub fn common_eigenvector<T: Field>(rho: &Rep<T>, tol: f64) -> Result<Option<CommonEigenvector<T>>, AnalysisError> {
    let Some(v) = common_search(rho.gens(), 0, None, tol)? else {
        return Ok(None);
    };
    let first = significant_index(&v, tol, false).expect("kernel vectors are nonzero");
    let vector = normalize_at(&v, first);
    let eigenvalues = rho.gens().iter().map(|g| rayleigh(g, &vector)).collect();
    Ok(Some(CommonEigenvector { vector, eigenvalues }))
}

/// Searches for a line witness. Candidate `y` values are the eigenvalues of
/// `ρ(σ₁)` by decreasing multiplicity, then decreasing real part; candidate
/// `x` values are eigenvalues of `ρ(σ_{m-1})` by decreasing real part.
///
/// Over the rationals a witness whose `x` is irrational (for the standard
/// representation `x = √u`) is detected on the complexified representation
/// and reported as [`AnalysisError::NeedsComplexDomain`].
pub fn subgroup_line_witness<T: Field>(rho: &Rep<T>, tol: f64) -> Result<Option<LineWitness<T>>, AnalysisError> {
    let m = rho.strands();
    if m < 4 {
        return Err(AnalysisError::TooFewStrands { needed: 4, strands: m });
    }
    let gens = rho.gens();
    let last = &gens[m - 2];
    let mut ys = T::eigenvalues(&gens[0], DEFAULT_CLUSTER_TOL)?;
    by_real_desc(&mut ys);
    ys.sort_by_key(|e| std::cmp::Reverse(e.1));
    let mut xs = T::eigenvalues(last, DEFAULT_CLUSTER_TOL)?;
    by_real_desc(&mut xs);
    for (y, _) in &ys {
        let mut basis = eigen_intersect(&gens[0], y, None, tol);
        for g in &gens[1..m - 3] {
            if basis.is_empty() {
                break;
            }
            basis = eigen_intersect(g, y, Some(&basis), tol);
        }
        if basis.is_empty() {
            continue;
        }
        for (x, _) in &xs {
            let found = eigen_intersect(last, x, Some(&basis), tol);
            if let Some(v) = found.first() {
                let idx = significant_index(v, tol, true).expect("kernel vectors are nonzero");
                return Ok(Some(LineWitness { vector: normalize_at(v, idx), x: x.clone(), y: y.clone() }));
            }
        }
    }
    if T::is_exact() {
        if let Some(w) = subgroup_line_witness(&rho.to_complex(), tol.max(DEFAULT_TOL))? {
            return Err(AnalysisError::NeedsComplexDomain { x: w.x.describe() });
        }
    }
    Ok(None)
}
