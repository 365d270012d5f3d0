//! Exact linear algebra over integral domains with exact division.
//!
//! Elimination is fraction-free (Bareiss style, extended to a Gauss-Jordan
//! sweep) for Laurent entries, so every intermediate stays a Laurent
//! polynomial and all divisions are exact. Over the rationals the same code
//! runs as ordinary Gauss-Jordan with normalized pivots.

use num_traits::Zero;

use crate::linalg::matrix::Mat;
use crate::linalg::numeric;
use crate::linalg::poly::Poly;
use crate::scalar::{ExactScalar, Rational};
use crate::linalg::LinalgError;

/// Reduced row echelon form scaled by a common pivot value.
///
/// Pivot row `j` has the entry `scale` in column `pivots[j]` and zeros in every
/// other pivot column. `det` is the determinant when the input is square and
/// of full rank.
pub(crate) struct Rref<T> {
    pub mat: Mat<T>,
    pub pivots: Vec<usize>,
    pub scale: T,
    pub det: T,
}

pub(crate) fn rref<T: ExactScalar>(m: &Mat<T>) -> Rref<T> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut prev = T::one();
    let mut det = T::one();
    let mut negate = false;
    let field = T::is_field();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let best = (r..rows)
            .filter(|&i| !a[(i, c)].is_zero())
            .min_by_key(|&i| a[(i, c)].complexity());
        let Some(p) = best else { continue };
        if p != r {
            for j in 0..cols {
                let tmp = a[(p, j)].clone();
                a[(p, j)] = a[(r, j)].clone();
                a[(r, j)] = tmp;
            }
            negate = !negate;
        }
        let piv = a[(r, c)].clone();
        if field {
            det = det * piv.clone();
            let inv = T::one().div_exact(&piv).expect("nonzero pivot in a field");
            for j in c..cols {
                a[(r, j)] = a[(r, j)].clone() * inv.clone();
            }
            for i in (0..rows).filter(|&i| i != r) {
                let f = a[(i, c)].clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..cols {
                    if a[(r, j)].is_zero() {
                        continue;
                    }
                    a[(i, j)] = a[(i, j)].clone() - f.clone() * a[(r, j)].clone();
                }
            }
        } else {
            for i in (0..rows).filter(|&i| i != r) {
                let f = a[(i, c)].clone();
                for j in 0..cols {
                    let keep = a[(i, j)].clone();
                    let num = if f.is_zero() || a[(r, j)].is_zero() {
                        if keep.is_zero() {
                            continue;
                        }
                        piv.clone() * keep
                    } else {
                        piv.clone() * keep - f.clone() * a[(r, j)].clone()
                    };
                    a[(i, j)] = num
                        .div_exact(&prev)
                        .expect("fraction-free elimination divides exactly");
                }
            }
            prev = piv;
        }
        pivots.push(c);
        r += 1;
    }
    let (scale, det) = if field { (T::one(), det) } else { (prev.clone(), prev) };
    let det = if negate { -det } else { det };
    Rref { mat: a, pivots, scale, det }
}

/// Rank over the field of fractions.
pub fn rank_exact<T: ExactScalar>(m: &Mat<T>) -> usize {
    rref(m).pivots.len()
}

/// Kernel basis over the field of fractions. Vectors have entries in the
/// domain itself (no fractions): the free coordinate carries the common
/// pivot value.
pub fn nullspace_exact<T: ExactScalar>(m: &Mat<T>) -> Vec<Vec<T>> {
    let rr = rref(m);
    let free = (0..m.cols()).filter(|c| !rr.pivots.contains(c));
    free.map(|f| {
        let mut v = vec![T::zero(); m.cols()];
        v[f] = rr.scale.clone();
        for (j, &pc) in rr.pivots.iter().enumerate() {
            v[pc] = -rr.mat[(j, f)].clone();
        }
        v
    })
    .collect()
}

pub fn det_exact<T: ExactScalar>(m: &Mat<T>) -> T {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let rr = rref(m);
    if rr.pivots.len() < m.rows() {
        T::zero()
    } else {
        rr.det
    }
}

/// Inverse within the domain, if it exists there.
pub fn inverse_exact<T: ExactScalar>(m: &Mat<T>) -> Option<Mat<T>> {
    let n = m.rows();
    if !m.is_square() {
        return None;
    }
    let aug = Mat::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m[(i, j)].clone()
        } else if j - n == i {
            T::one()
        } else {
            T::zero()
        }
    });
    let rr = rref(&aug);
    if rr.pivots.len() < n || rr.pivots[n - 1] != n - 1 {
        return None;
    }
    let mut out = Mat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            out[(i, j)] = rr.mat[(i, n + j)].div_exact(&rr.scale)?;
        }
    }
    Some(out)
}

/// `det(xI - m)` by the Faddeev-LeVerrier recurrence. Only divisions by the
/// integers `1..=n` occur, so this is exact over any Q-algebra.
pub fn charpoly_exact<T: ExactScalar>(m: &Mat<T>) -> Poly<T> {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.rows();
    let mut coeffs = vec![T::zero(); n + 1];
    coeffs[n] = T::one();
    let mut am = Mat::zeros(n, n); // m * M_{k-1}
    for k in 1..=n {
        let mk = am.shift_diagonal(&(-coeffs[n - k + 1].clone()));
        am = m * &mk;
        coeffs[n - k] = (-am.trace())
            .div_exact(&T::from_integer(k as i64))
            .expect("division by an integer is exact over a Q-algebra");
    }
    Poly::new(coeffs)
}

/// Monic annihilating polynomial of least degree.
///
/// Found as the first linear dependency among `vec(I), vec(m), vec(m^2), ...`.
/// Over Laurent entries the kernel vector is normalized by exact division;
/// the monic minimal polynomial divides the characteristic polynomial, which
/// has Laurent coefficients, so the division always succeeds.
pub fn minpoly_exact<T: ExactScalar>(m: &Mat<T>) -> Poly<T> {
    assert!(m.is_square(), "minimal polynomial of a non-square matrix");
    let n = m.rows();
    let mut powers = vec![Mat::identity(n)];
    for k in 1..=n {
        let next = &powers[k - 1] * m;
        powers.push(next);
        let krylov = Mat::from_fn(n * n, k + 1, |i, j| powers[j].entries()[i].clone());
        if let Some(v) = nullspace_exact(&krylov).into_iter().next() {
            let lead = v[k].clone();
            let coeffs = v
                .iter()
                .map(|c| c.div_exact(&lead).expect("monic minimal polynomial has domain coefficients"))
                .collect();
            return Poly::new(coeffs);
        }
    }
    unreachable!("Cayley-Hamilton bounds the minimal polynomial degree by n")
}

/// Continued-fraction convergents `p/q` of a float with `q <= max_den`.
fn convergents(x: f64, max_den: i128) -> Vec<Rational> {
    let mut out = Vec::new();
    if !x.is_finite() {
        return out;
    }
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut r = x;
    for _ in 0..64 {
        let a = r.floor();
        if a.abs() > 1e15 {
            break;
        }
        let ai = a as i128;
        let (h, k) = (ai * h1 + h0, ai * k1 + k0);
        if k > max_den {
            break;
        }
        out.push(Rational::new(h.into(), k.into()));
        (h0, h1, k0, k1) = (h1, h, k1, k);
        let frac = r - a;
        if frac < 1e-13 {
            break;
        }
        r = 1.0 / frac;
    }
    out
}

/// Rational eigenvalues of a rational matrix with algebraic multiplicities.
///
/// Candidates come from a floating eigensolver and are confirmed exactly as
/// roots of the characteristic polynomial; irrational eigenvalues are not
/// reported.
pub fn rational_eigenvalues(
    m: &Mat<Rational>,
    _cluster_tol: f64,
) -> Result<Vec<(Rational, usize)>, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare);
    }
    let cp = charpoly_exact(m);
    let approx = numeric::raw_eigenvalues(&numeric::complexify(m))?;
    let mut found: Vec<Rational> = Vec::new();
    for z in approx {
        let size = 1.0 + z.norm();
        if z.im.abs() > 1e-5 * size {
            continue;
        }
        for q in convergents(z.re, 1_000_000_000) {
            let close = (crate::scalar::rational_to_f64(&q) - z.re).abs() <= 1e-5 * size;
            if close && !found.contains(&q) && cp.eval(&q).is_zero() {
                found.push(q);
                break;
            }
        }
    }
    let mut out = Vec::new();
    for q in found {
        let mut mult = 0;
        let mut rest = cp.clone();
        while let Some(next) = rest.divide_linear(&q, 0.0) {
            rest = next;
            mult += 1;
        }
        out.push((q, mult));
    }
    out.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(out)
}

/// Exact rank of a rational matrix minus `q*I`, a convenience for analyses.
pub fn rank_shifted(m: &Mat<Rational>, q: &Rational) -> usize {
    rank_exact(&m.shift_diagonal(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;
    use crate::scalar::rational;

    fn qm(rows: &[&[i64]]) -> Mat<Rational> {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| rational(x, 1)).collect()).collect())
            .unwrap()
    }

    fn t() -> LaurentPoly {
        LaurentPoly::t()
    }

    fn c(n: i64) -> LaurentPoly {
        LaurentPoly::from_integer(n)
    }

    /// tau_3(sigma_1) from the standard representation.
    fn tau3_s1() -> Mat<LaurentPoly> {
        Mat::from_rows(vec![vec![c(0), t(), c(0)], vec![c(1), c(0), c(0)], vec![c(0), c(0), c(1)]])
            .unwrap()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank_exact(&qm(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank_exact(&Mat::<Rational>::identity(5)), 5);
        assert_eq!(rank_exact(&Mat::<Rational>::zeros(3, 4)), 0);
        // tau_3(sigma_1) - I has the block [[-1, t], [1, -1]] with det 1 - t.
        assert_eq!(rank_exact(&tau3_s1().shift_diagonal(&c(1))), 2);
    }

    #[test]
    fn kernels() {
        let k = nullspace_exact(&qm(&[&[1, 1], &[1, 1]]));
        assert_eq!(k, vec![vec![rational(-1, 1), rational(1, 1)]]);
        assert!(nullspace_exact(&qm(&[&[2, 1], &[1, 1]])).is_empty());
        // tau_3(sigma_1) at t = 1, minus I: kernel is span{(1,1,0), e3}
        let m = qm(&[&[-1, 1, 0], &[1, -1, 0], &[0, 0, 0]]);
        let k = nullspace_exact(&m);
        assert_eq!(k.len(), 2);
        let ones = [rational(1, 1), rational(1, 1), rational(0, 1)];
        let e3 = [rational(0, 1), rational(0, 1), rational(1, 1)];
        let span = Mat::from_columns(&k);
        for target in [ones.to_vec(), e3.to_vec()] {
            let mut cols = k.clone();
            cols.push(target);
            assert_eq!(rank_exact(&Mat::from_columns(&cols)), rank_exact(&span));
        }
    }

    #[test]
    fn laurent_kernel_and_inverse() {
        let m = tau3_s1();
        let inv = inverse_exact(&m).unwrap();
        assert_eq!(&m * &inv, Mat::identity(3));
        assert_eq!(det_exact(&m), -t());
        // 1 + t is not a unit, so this matrix has no Laurent inverse
        let n = Mat::from_rows(vec![vec![c(1), c(1)], vec![c(-1), t()]]).unwrap();
        assert!(inverse_exact(&n).is_none());
        let sing = Mat::from_rows(vec![vec![t(), c(1)], vec![t() * t(), t()]]).unwrap();
        let k = nullspace_exact(&sing);
        assert_eq!(k.len(), 1);
        assert!(sing.mul_vec(&k[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn characteristic_polynomials() {
        let comp = Mat::from_rows(vec![vec![c(0), t()], vec![c(1), c(0)]]).unwrap();
        assert_eq!(charpoly_exact(&comp), Poly::new(vec![-t(), c(0), c(1)]));
        let i3 = Mat::<Rational>::identity(3);
        let one = rational(1, 1);
        assert_eq!(charpoly_exact(&i3), Poly::from_roots(&[one.clone(), one.clone(), one.clone()]));
        // (x - 1)(x^2 - t)
        let expect = Poly::linear(c(1)).mul(&Poly::new(vec![-t(), c(0), c(1)]));
        assert_eq!(charpoly_exact(&tau3_s1()), expect);
    }

    #[test]
    fn minimal_polynomials() {
        let one = rational(1, 1);
        assert_eq!(minpoly_exact(&Mat::<Rational>::identity(3)), Poly::linear(one));
        let d = Mat::diagonal(&[rational(2, 1), rational(2, 1), rational(3, 1)]);
        assert_eq!(minpoly_exact(&d), Poly::from_roots(&[rational(2, 1), rational(3, 1)]));
        let at4 = qm(&[&[0, 4, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(
            minpoly_exact(&at4),
            Poly::from_roots(&[rational(1, 1), rational(2, 1), rational(-2, 1)])
        );
        let sym = minpoly_exact(&tau3_s1());
        assert!(charpoly_exact(&tau3_s1()).divide_exact(&sym).is_some());
        assert!(sym.eval_mat(&tau3_s1()).is_zero());
        let jb = qm(&[&[0, 1], &[0, 0]]);
        assert_eq!(minpoly_exact(&jb), Poly::new(vec![rational(0, 1), rational(0, 1), rational(1, 1)]));
    }

    #[test]
    fn rational_spectrum() {
        let at4 = qm(&[&[0, 4, 0], &[1, 0, 0], &[0, 0, 1]]);
        let ev = rational_eigenvalues(&at4, 1e-6).unwrap();
        assert_eq!(
            ev,
            vec![(rational(2, 1), 1), (rational(1, 1), 1), (rational(-2, 1), 1)]
        );
        let at2 = qm(&[&[0, 2, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(rational_eigenvalues(&at2, 1e-6).unwrap(), vec![(rational(1, 1), 1)]);
        let d = Mat::diagonal(&[rational(1, 3), rational(1, 3), rational(-7, 2)]);
        assert_eq!(
            rational_eigenvalues(&d, 1e-6).unwrap(),
            vec![(rational(1, 3), 2), (rational(-7, 2), 1)]
        );
    }
}
