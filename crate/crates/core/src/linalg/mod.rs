//! Dense linear algebra over the three scalar domains.

pub mod exact;
pub mod matrix;
pub mod numeric;
pub mod poly;

pub use exact::{charpoly_exact, det_exact, inverse_exact, minpoly_exact, nullspace_exact, rank_exact};
pub use matrix::{negligible, Mat};
pub use numeric::{
    condition_estimate, eigen_numeric, jordan_structure, jordan_structure_with, minpoly_numeric,
    nullspace_numeric, rank_numeric, JordanData, JordanEigen,
};
pub use poly::Poly;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("shape error: {0}")]
    Shape(String),
    #[error(
        "eigenvalue cluster near {near:?} has diameter {diameter:e} above the merge threshold {threshold:e}"
    )]
    ClusterAmbiguous { near: [f64; 2], diameter: f64, threshold: f64 },
    #[error("rank sequence at {eigenvalue:?} reaches nullity {nullity}, expected multiplicity {multiplicity}")]
    JordanInconsistent { eigenvalue: [f64; 2], multiplicity: usize, nullity: usize },
    #[error("eigenvalue computation failed: {0}")]
    EigenFailure(String),
}

impl LinalgError {
    pub fn name(&self) -> &'static str {
        match self {
            LinalgError::NotSquare => "NotSquare",
            LinalgError::Shape(_) => "Shape",
            LinalgError::ClusterAmbiguous { .. } => "ClusterAmbiguous",
            LinalgError::JordanInconsistent { .. } => "JordanInconsistent",
            LinalgError::EigenFailure(_) => "EigenFailure",
        }
    }
}

/// Basis of `{X : A_i X = X B_i for all i}`.
///
/// The conditions are stacked into one `(len·r²) × r²` linear system on the
/// column-major vectorization of `X` and its kernel is taken in the domain of
/// the inputs (exact, or numerically at `tol`).
pub fn intertwiner_space<T: Scalar>(a: &[Mat<T>], b: &[Mat<T>], tol: f64) -> Result<Vec<Mat<T>>, LinalgError> {
    if a.len() != b.len() {
        return Err(LinalgError::Shape(format!("{} vs {} matrices", a.len(), b.len())));
    }
    let Some(first) = a.first().or(b.first()) else {
        return Err(LinalgError::Shape("no matrices to intertwine".into()));
    };
    let r = first.rows();
    if a.iter().chain(b).any(|m| m.rows() != r || m.cols() != r) {
        return Err(LinalgError::Shape(format!("all matrices must be {r}x{r}")));
    }
    let rr = r * r;
    let mut system = Mat::<T>::zeros(a.len() * rr, rr);
    for (k, (ak, bk)) in a.iter().zip(b).enumerate() {
        for i in 0..r {
            for j in 0..r {
                let row = k * rr + i + j * r;
                // (A X)_{ij} = sum_p A_{ip} X_{pj}
                for p in 0..r {
                    let col = p + j * r;
                    system[(row, col)] = system[(row, col)].clone() + ak[(i, p)].clone();
                }
                // (X B)_{ij} = sum_q X_{iq} B_{qj}
                for q in 0..r {
                    let col = i + q * r;
                    system[(row, col)] = system[(row, col)].clone() - bk[(q, j)].clone();
                }
            }
        }
    }
    Ok(system
        .nullspace(tol)
        .into_iter()
        .map(|v| Mat::from_fn(r, r, |i, j| v[i + j * r].clone()))
        .collect())
}

/// `max_i ‖A_i X - X B_i‖` over entries.
pub fn intertwiner_residual<T: Scalar>(a: &[Mat<T>], b: &[Mat<T>], x: &Mat<T>) -> f64 {
    a.iter()
        .zip(b)
        .map(|(ak, bk)| (&(ak * x) - &(x * bk)).max_abs())
        .fold(0.0, f64::max)
}
