use serde::Serialize;

use super::{generic_agreement, AnalysisError, Field, Span};
use crate::laurent::LaurentPoly;
use crate::linalg::Mat;
use crate::rep::Rep;

/// Cap on breadth-first multiplication passes in the closure.
const MAX_PASSES: usize = 50;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BurnsideReport {
    pub degree: usize,
    /// Dimension of the unital algebra generated by the generator images.
    pub dimension: usize,
    pub irreducible: bool,
    pub passes: usize,
    pub exact: bool,
}

/// Dimension of the matrix algebra spanned by all words in the generators.
///
/// The span starts at the identity; each pass multiplies the basis elements
/// found in the previous pass on the right by every generator. Inverses are
/// not needed since each inverse is a polynomial in its generator. Stops early
/// once the span reaches `degree²`.
pub fn burnside_dimension<T: Field>(rho: &Rep<T>, tol: f64) -> Result<BurnsideReport, AnalysisError> {
    let r = rho.degree();
    let full = r * r;
    let mut span = Span::<T>::new(tol.max(1e-12));
    span.insert(Mat::<T>::identity(r).into_entries());
    let mut frontier = vec![0usize];
    let mut passes = 0;
    while !frontier.is_empty() && span.dim() < full {
        if passes == MAX_PASSES {
            return Err(AnalysisError::ClosureStalled { passes });
        }
        passes += 1;
        let mut next = Vec::new();
        for &idx in &frontier {
            let m = Mat::from_vec(r, r, span.basis[idx].clone()).expect("basis vectors have r² entries");
            for g in rho.gens() {
                if let Some(k) = span.insert((&m * g).into_entries()) {
                    next.push(k);
                    if span.dim() == full {
                        break;
                    }
                }
            }
            if span.dim() == full {
                break;
            }
        }
        frontier = next;
    }
    Ok(BurnsideReport { degree: r, dimension: span.dim(), irreducible: span.dim() == full, passes, exact: T::is_exact() })
}

/// Burnside dimension of a Laurent representation from three agreeing random
/// specializations.
pub fn burnside_dimension_generic(rho: &Rep<LaurentPoly>, seed: u64) -> Result<BurnsideReport, AnalysisError> {
    let dims = generic_agreement(rho, seed, "burnside dimension", |r| Ok(burnside_dimension(r, 0.0)?.dimension))?;
    let r = rho.degree();
    Ok(BurnsideReport { degree: r, dimension: dims, irreducible: dims == r * r, passes: 0, exact: true })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{character, specialize, standard_rep};
    use crate::scalar::{rational, Complex};

    #[test]
    fn generic_point_is_irreducible() {
        let rho = specialize(&standard_rep(3).unwrap(), &rational(2, 1), 0.0).unwrap();
        let rep = burnside_dimension(&rho, 0.0).unwrap();
        assert_eq!(rep.dimension, 9);
        assert!(rep.irreducible);
    }

    #[test]
    fn permutation_point_is_reducible() {
        let rho = specialize(&standard_rep(3).unwrap(), &rational(1, 1), 0.0).unwrap();
        let rep = burnside_dimension(&rho, 0.0).unwrap();
        assert_eq!(rep.dimension, 5);
        assert!(!rep.irreducible);
        let rho = specialize(&standard_rep(3).unwrap(), &Complex::new(1.0, 0.0), 1e-9).unwrap();
        assert_eq!(burnside_dimension(&rho, 1e-9).unwrap().dimension, 5);
    }

    #[test]
    fn characters_and_laurent() {
        let chi = character(5, rational(2, 1), "2").unwrap();
        assert_eq!(burnside_dimension(&chi, 0.0).unwrap().dimension, 1);
        let rep = burnside_dimension_generic(&standard_rep(4).unwrap(), 9).unwrap();
        assert_eq!(rep.dimension, 16);
    }

    #[test]
    fn complex_generic_point() {
        let rho = specialize(&standard_rep(5).unwrap(), &Complex::new(0.3, 1.7), 1e-9).unwrap();
        let rep = burnside_dimension(&rho, 1e-9).unwrap();
        assert_eq!(rep.dimension, 25);
        assert!(!rep.exact);
    }
}
