//! Floating complex linear algebra: ranks and kernels by complete-pivot
//! elimination, eigenvalues from a complex Schur form, clustering, and Jordan
//! block data recovered from kernel chains.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::linalg::matrix::Mat;
use crate::linalg::poly::Poly;
use crate::scalar::{Complex, FieldScalar, DEFAULT_CLUSTER_TOL};
use crate::linalg::LinalgError;

const ZERO: Complex = Complex { re: 0.0, im: 0.0 };
const ONE: Complex = Complex { re: 1.0, im: 0.0 };

pub fn complexify<T: FieldScalar>(m: &Mat<T>) -> Mat<Complex> {
    m.map(FieldScalar::to_complex)
}

/// Gauss-Jordan with complete pivoting. Returns the reduced matrix (pivot rows
/// normalized, pivot columns cleared) and the pivot column of each pivot row.
/// A pivot is accepted while its magnitude exceeds `tol` times the largest
/// entry of the input.
fn complete_pivot_reduce(m: &Mat<Complex>, tol: f64) -> (Mat<Complex>, Vec<usize>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let threshold = tol * m.max_abs();
    let mut pivots = Vec::new();
    let mut used = vec![false; cols];
    for r in 0..rows.min(cols) {
        let mut best = (0.0, r, 0);
        for i in r..rows {
            for j in (0..cols).filter(|&j| !used[j]) {
                let v = a[(i, j)].norm();
                if v > best.0 {
                    best = (v, i, j);
                }
            }
        }
        let (mag, pi, pj) = best;
        if mag <= threshold || mag == 0.0 {
            break;
        }
        if pi != r {
            for j in 0..cols {
                let tmp = a[(pi, j)];
                a[(pi, j)] = a[(r, j)];
                a[(r, j)] = tmp;
            }
        }
        let inv = a[(r, pj)].inv();
        for j in 0..cols {
            a[(r, j)] *= inv;
        }
        a[(r, pj)] = ONE;
        for i in (0..rows).filter(|&i| i != r) {
            let f = a[(i, pj)];
            if f == ZERO {
                continue;
            }
            for j in 0..cols {
                let v = a[(r, j)];
                a[(i, j)] -= f * v;
            }
            a[(i, pj)] = ZERO;
        }
        used[pj] = true;
        pivots.push(pj);
    }
    (a, pivots)
}

/// Number of pivots above `tol` times the largest input entry under
/// complete-pivot elimination.
pub fn rank_numeric(m: &Mat<Complex>, tol: f64) -> usize {
    complete_pivot_reduce(m, tol).1.len()
}

/// Orthonormal kernel basis consistent with [`rank_numeric`] at the same
/// tolerance: `rank + basis length = cols`.
pub fn nullspace_numeric(m: &Mat<Complex>, tol: f64) -> Vec<Vec<Complex>> {
    let (a, pivots) = complete_pivot_reduce(m, tol);
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    let raw: Vec<Vec<Complex>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![ZERO; m.cols()];
            v[f] = ONE;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[(r, f)];
            }
            v
        })
        .collect();
    let basis = orthonormalize(&raw, 0.0);
    debug_assert_eq!(basis.len(), raw.len());
    basis
}

pub fn dot(a: &[Complex], b: &[Complex]) -> Complex {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

pub fn norm2(v: &[Complex]) -> f64 {
    v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

pub fn max_abs_vec(v: &[Complex]) -> f64 {
    v.iter().map(|x| x.norm()).fold(0.0, f64::max)
}

/// Modified Gram-Schmidt with one re-orthogonalization pass. Vectors whose
/// remaining norm is at most `rel_tol` times their original norm are dropped.
pub fn orthonormalize(vectors: &[Vec<Complex>], rel_tol: f64) -> Vec<Vec<Complex>> {
    let mut basis: Vec<Vec<Complex>> = Vec::new();
    for v in vectors {
        let original = norm2(v);
        if original == 0.0 {
            continue;
        }
        let mut w = v.clone();
        for _ in 0..2 {
            for b in &basis {
                let c = dot(b, &w);
                for (wi, bi) in w.iter_mut().zip(b) {
                    *wi -= c * bi;
                }
            }
        }
        let n = norm2(&w);
        if n > rel_tol * original && n > 0.0 {
            basis.push(w.into_iter().map(|x| x / n).collect());
        }
    }
    basis
}

/// Inverse by Gauss-Jordan with partial pivoting; `None` when a pivot falls
/// below `tol` times the largest entry.
pub fn inverse_numeric(m: &Mat<Complex>, tol: f64) -> Option<Mat<Complex>> {
    let n = m.rows();
    if !m.is_square() {
        return None;
    }
    let threshold = tol * m.max_abs();
    let mut a = m.clone();
    let mut inv = Mat::<Complex>::identity(n);
    for c in 0..n {
        let p = (c..n).max_by(|&i, &j| a[(i, c)].norm().total_cmp(&a[(j, c)].norm()))?;
        if a[(p, c)].norm() <= threshold || a[(p, c)] == ZERO {
            return None;
        }
        if p != c {
            for j in 0..n {
                let (x, y) = (a[(p, j)], inv[(p, j)]);
                a[(p, j)] = a[(c, j)];
                inv[(p, j)] = inv[(c, j)];
                a[(c, j)] = x;
                inv[(c, j)] = y;
            }
        }
        let s = a[(c, c)].inv();
        for j in 0..n {
            a[(c, j)] *= s;
            inv[(c, j)] *= s;
        }
        for i in (0..n).filter(|&i| i != c) {
            let f = a[(i, c)];
            if f == ZERO {
                continue;
            }
            for j in 0..n {
                let (x, y) = (a[(c, j)], inv[(c, j)]);
                a[(i, j)] -= f * x;
                inv[(i, j)] -= f * y;
            }
        }
    }
    Some(inv)
}

/// Infinity-norm condition estimate `‖m‖·‖m⁻¹‖`; infinite when singular.
pub fn condition_estimate(m: &Mat<Complex>) -> f64 {
    match inverse_numeric(m, 1e-14) {
        Some(inv) => m.norm_inf() * inv.norm_inf(),
        None => f64::INFINITY,
    }
}

/// Unclustered eigenvalues from the complex Schur form.
pub fn raw_eigenvalues(m: &Mat<Complex>) -> Result<Vec<Complex>, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare);
    }
    let n = m.rows();
    match n {
        0 => return Ok(Vec::new()),
        1 => return Ok(vec![m[(0, 0)]]),
        _ => {}
    }
    let dm = DMatrix::from_row_slice(n, n, m.entries());
    // Highly derogatory inputs sometimes stall the QR sweep at machine
    // epsilon; a looser deflation threshold still leaves eigenvalues accurate
    // far below the clustering tolerances used downstream.
    for eps in [f64::EPSILON, 16.0 * f64::EPSILON, 256.0 * f64::EPSILON] {
        if let Some(schur) = nalgebra::linalg::Schur::try_new(dm.clone(), eps, 1000 * n) {
            let (_, t) = schur.unpack();
            return Ok((0..n).map(|i| t[(i, i)]).collect());
        }
    }
    Err(LinalgError::EigenFailure("Schur iteration did not converge".into()))
}

/// Eigenvalues grouped by single-linkage at distance `cluster_tol·‖m‖∞`, with
/// algebraic multiplicities. Each cluster is represented by its mean.
///
/// A cluster whose diameter exceeds the threshold (a chain of small gaps
/// joining eigenvalues that are themselves far apart) is reported as
/// [`LinalgError::ClusterAmbiguous`] rather than merged.
pub fn eigen_numeric(m: &Mat<Complex>, cluster_tol: f64) -> Result<Vec<(Complex, usize)>, LinalgError> {
    let raw = raw_eigenvalues(m)?;
    let scale = m.norm_inf();
    let threshold = cluster_tol * scale;
    let n = raw.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        p[i] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if (raw[i] - raw[j]).norm() <= threshold {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut clusters: Vec<Vec<Complex>> = Vec::new();
    let mut root_of: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        let idx = *root_of[r].get_or_insert_with(|| {
            clusters.push(Vec::new());
            clusters.len() - 1
        });
        clusters[idx].push(raw[i]);
    }
    let cleanup = 64.0 * f64::EPSILON * scale.max(1.0);
    let mut out = Vec::new();
    for c in clusters {
        let diameter = c
            .iter()
            .flat_map(|a| c.iter().map(move |b| (a - b).norm()))
            .fold(0.0, f64::max);
        let mean = c.iter().sum::<Complex>() / c.len() as f64;
        if diameter > threshold {
            return Err(LinalgError::ClusterAmbiguous {
                near: [mean.re, mean.im],
                diameter,
                threshold,
            });
        }
        let snap = |x: f64| if x.abs() <= cleanup { 0.0 } else { x };
        out.push((Complex::new(snap(mean.re), snap(mean.im)), c.len()));
    }
    out.sort_by(|a, b| b.0.re.total_cmp(&a.0.re).then(b.0.im.total_cmp(&a.0.im)));
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JordanEigen {
    pub value: Complex,
    pub multiplicity: usize,
    /// Block sizes in descending order.
    pub block_sizes: Vec<usize>,
    /// `r_k = rank((m - λI)^k)` for `k = 0, 1, ...` until it stabilizes.
    pub rank_sequence: Vec<usize>,
}

impl JordanEigen {
    /// Size `s` of the largest block.
    pub fn largest_block(&self) -> usize {
        self.block_sizes.first().copied().unwrap_or(0)
    }

    /// Number `d` of blocks of the largest size.
    pub fn largest_block_count(&self) -> usize {
        let s = self.largest_block();
        self.block_sizes.iter().filter(|&&b| b == s).count()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JordanData {
    pub eigenvalues: Vec<JordanEigen>,
}

impl JordanData {
    pub fn find(&self, lambda: Complex, tol: f64) -> Option<&JordanEigen> {
        self.eigenvalues
            .iter()
            .min_by(|a, b| (a.value - lambda).norm().total_cmp(&(b.value - lambda).norm()))
            .filter(|e| (e.value - lambda).norm() <= tol * (1.0 + lambda.norm()))
    }
}

/// Jordan block sizes per eigenvalue with the default cluster tolerance.
pub fn jordan_structure(m: &Mat<Complex>, tol: f64) -> Result<JordanData, LinalgError> {
    jordan_structure_with(m, tol, DEFAULT_CLUSTER_TOL)
}

/// Jordan block sizes per eigenvalue.
///
/// For each clustered eigenvalue λ the nullities of `(m - λI)^k` are built up
/// as a kernel chain `K_k = {v : (m - λI) v ∈ K_{k-1}}`, which avoids forming
/// matrix powers. The count of blocks of size at least `k` is `r_{k-1} - r_k`.
pub fn jordan_structure_with(m: &Mat<Complex>, tol: f64, cluster_tol: f64) -> Result<JordanData, LinalgError> {
    let n = m.rows();
    let spectrum = eigen_numeric(m, cluster_tol)?;
    let mut eigenvalues = Vec::new();
    for (lambda, mult) in spectrum {
        let shifted = m.shift_diagonal(&lambda);
        let mut ranks = vec![n];
        let mut kernel: Vec<Vec<Complex>> = Vec::new();
        loop {
            let next = if kernel.is_empty() {
                nullspace_numeric(&shifted, tol)
            } else {
                let k = kernel.len();
                let stacked = Mat::from_fn(n, n + k, |i, j| {
                    if j < n {
                        shifted[(i, j)]
                    } else {
                        -kernel[j - n][i]
                    }
                });
                let heads: Vec<Vec<Complex>> = nullspace_numeric(&stacked, tol)
                    .into_iter()
                    .map(|v| v[..n].to_vec())
                    .collect();
                let mut all = kernel.clone();
                all.extend(heads);
                orthonormalize(&all, tol.sqrt())
            };
            if next.len() <= kernel.len() || next.len() > mult {
                break;
            }
            kernel = next;
            ranks.push(n - kernel.len());
            if kernel.len() == mult {
                break;
            }
        }
        let nullity = n - *ranks.last().expect("r_0 present");
        if nullity != mult {
            return Err(LinalgError::JordanInconsistent {
                eigenvalue: [lambda.re, lambda.im],
                multiplicity: mult,
                nullity,
            });
        }
        // blocks of size >= k: ranks[k-1] - ranks[k]
        let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
        let mut block_sizes = Vec::new();
        for k in (1..=at_least.len()).rev() {
            let exactly = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
            block_sizes.extend(std::iter::repeat_n(k, exactly));
        }
        eigenvalues.push(JordanEigen { value: lambda, multiplicity: mult, block_sizes, rank_sequence: ranks });
    }
    Ok(JordanData { eigenvalues })
}

/// Minimal polynomial assembled from clustered eigenvalues and their largest
/// Jordan blocks.
pub fn minpoly_numeric(m: &Mat<Complex>, tol: f64) -> Result<Poly<Complex>, LinalgError> {
    let jd = jordan_structure(m, tol)?;
    let roots: Vec<Complex> = jd
        .eigenvalues
        .iter()
        .flat_map(|e| std::iter::repeat_n(e.value, e.largest_block()))
        .collect();
    Ok(Poly::from_roots(&roots))
}

/// Characteristic polynomial from clustered eigenvalues.
pub fn charpoly_numeric(m: &Mat<Complex>, cluster_tol: f64) -> Result<Poly<Complex>, LinalgError> {
    let ev = eigen_numeric(m, cluster_tol)?;
    let roots: Vec<Complex> = ev.iter().flat_map(|(l, k)| std::iter::repeat_n(*l, *k)).collect();
    Ok(Poly::from_roots(&roots))
}
