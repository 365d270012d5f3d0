use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{subgroup_invariance_check, AnalysisError, Field, Span};
use crate::linalg::Mat;
use crate::rep::Rep;
use crate::scalar::DEFAULT_CLUSTER_TOL;

/// Span of all images of `v` under words in `gens`.
fn spin<T: Field>(v: Vec<T>, gens: &[Mat<T>], tol: f64) -> Vec<Vec<T>> {
    let mut span = Span::new(tol);
    let Some(first) = span.insert(v) else {
        return Vec::new();
    };
    let mut queue = vec![first];
    while let Some(idx) = queue.pop() {
        let b = span.basis[idx].clone();
        for g in gens {
            if let Some(k) = span.insert(g.mul_vec(&b)) {
                queue.push(k);
            }
        }
    }
    span.basis
}

/// A random element of the algebra: a combination of generators and of
/// products of two generators with random coefficients.
fn random_element<T: Field>(gens: &[Mat<T>], rng: &mut ChaCha8Rng) -> Mat<T> {
    let r = gens[0].rows();
    let mut acc = Mat::zeros(r, r);
    for g in gens {
        acc = &acc + &g.scale(&T::sample(rng));
    }
    for _ in 0..gens.len().min(3) {
        let a = &gens[rng.gen_range(0..gens.len())];
        let b = &gens[rng.gen_range(0..gens.len())];
        acc = &acc + &(a * b).scale(&T::sample(rng));
    }
    acc
}

/// Randomized search for a proper nonzero invariant subspace.
///
/// Each attempt samples an algebra element `A`; for each eigenvalue `λ` of `A`
/// a kernel vector of `A - λI` is spun under the generators, and a kernel
/// vector of the transpose is spun under the transposed generators (a proper
/// invariant subspace there yields its annihilator). Over the rationals only
/// rational eigenvalues are tried. A `None` result proves nothing; use
/// [`super::burnside_dimension`] to certify irreducibility.
pub fn invariant_subspace_search<T: Field>(
    rho: &Rep<T>,
    tol: f64,
    attempts: usize,
    seed: u64,
) -> Result<Option<Vec<Vec<T>>>, AnalysisError> {
    let r = rho.degree();
    if r < 2 {
        return Ok(None);
    }
    let gens = rho.gens();
    let transposed: Vec<Mat<T>> = gens.iter().map(Mat::transpose).collect();
    let span_tol = tol.max(1e-10);
    let check_tol = tol.max(1e-7);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..attempts {
        let a = random_element(gens, &mut rng);
        let Ok(values) = T::eigenvalues(&a, DEFAULT_CLUSTER_TOL) else {
            continue;
        };
        for (lambda, _) in values {
            let shifted = a.shift_diagonal(&lambda);
            if let Some(v) = shifted.nullspace(tol).into_iter().next() {
                let sub = spin(v, gens, span_tol);
                if !sub.is_empty() && sub.len() < r && subgroup_invariance_check(rho, &sub, &all(rho), check_tol)? {
                    return Ok(Some(sub));
                }
            }
            if let Some(w) = shifted.transpose().nullspace(tol).into_iter().next() {
                let dual = spin(w, &transposed, span_tol);
                if !dual.is_empty() && dual.len() < r {
                    let sub = Mat::from_rows(dual).expect("rows of equal length").nullspace(tol);
                    if !sub.is_empty() && subgroup_invariance_check(rho, &sub, &all(rho), check_tol)? {
                        return Ok(Some(sub));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn all<T>(rho: &Rep<T>) -> Vec<usize>
where
    T: Field,
{
    (1..rho.strands()).collect()
}
