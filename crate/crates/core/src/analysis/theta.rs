use serde::Serialize;

use super::{direction_residual, AnalysisError, Field};
use crate::braid::theta_word;
use crate::linalg::numeric::{max_abs_vec, rank_numeric};
use crate::linalg::Mat;
use crate::rep::Rep;
use crate::scalar::{Complex, FieldScalar, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct CentralScalar<T> {
    /// `d` with `ρ(θ)^m = d·I`.
    pub d: T,
    /// Largest entry of `ρ(θ)^m - d·I` (zero in exact domains).
    pub residual: f64,
}

/// The scalar by which the full twist `θ^m` acts.
pub fn central_scalar<T: Scalar>(rho: &Rep<T>, tol: f64) -> Result<CentralScalar<T>, AnalysisError> {
    let theta = rho.eval_word(&theta_word(rho.strands())?)?;
    let full = theta.pow(rho.strands());
    let d = full[(0, 0)].clone();
    let diff = &full - &Mat::scalar(rho.degree(), d.clone());
    let (ok, residual) = crate::linalg::negligible(&diff, full.norm_inf(), tol);
    if ok {
        Ok(CentralScalar { d, residual })
    } else {
        Err(AnalysisError::NotScalar { residual })
    }
}

/// `rank(ρ(σ₁) - yI)` in the representation's domain.
pub fn rank_conclusion_check<T: Scalar>(rho: &Rep<T>, y: &T, tol: f64) -> usize {
    rho.generator(1).shift_diagonal(y).rank(tol)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CycleCheck {
    /// Checks `ρ(θ) ρ(σ_i) ρ(θ)⁻¹ = ρ(σ_{i+1})`, indices mod `m`, `σ_0 = σ_m`.
    pub i: usize,
    pub residual: f64,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableCell {
    /// Generator index `i` (0 stands for `σ₀`).
    pub generator: usize,
    /// Vector index `j` of `v_j`.
    pub vector: usize,
    /// `"x"` or `"y"`.
    pub eigenvalue: &'static str,
    pub residual: f64,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CycleAuditReport {
    pub m: usize,
    pub tolerance: f64,
    pub d_scalar: Complex,
    pub d_residual: f64,
    pub d_ok: bool,
    pub witness_residual: f64,
    pub cycle: Vec<CycleCheck>,
    pub cycle_ok: bool,
    pub table: Vec<TableCell>,
    pub table_ok: bool,
    pub max_table_residual: f64,
    /// Largest `k` with `v_1, …, v_k` linearly independent.
    pub independence: usize,
    /// Cells left blank by the eigenvector table (`σ_i v_{i±1}`) that
    /// nevertheless satisfy `σ_i v_{i±1} = y v_{i±1}`.
    pub degeneracies: Vec<TableCell>,
    /// Whether `Cv` is invariant under every generator.
    pub line_invariant: bool,
    pub passed: bool,
}

/// Residual of `a w = λ w` for `w` scaled to unit max-norm, relative to the
/// size of `a` and `λ`.
fn eigen_residual(a: &Mat<Complex>, lambda: Complex, v: &[Complex]) -> f64 {
    let size = max_abs_vec(v);
    if size == 0.0 {
        return f64::INFINITY;
    }
    let w: Vec<Complex> = v.iter().map(|x| x / size).collect();
    let aw = a.mul_vec(&w);
    let r = aw.iter().zip(&w).map(|(p, q)| (p - lambda * q).norm()).fold(0.0, f64::max);
    r / a.norm_inf().max(lambda.norm()).max(1.0)
}

/// Audits the eigenvector table built from a line witness `v` with values
/// `(x, y)`: with `θ = σ₁⋯σ_{m-1}` and `σ₀ = θ σ_{m-1} θ⁻¹`, the vectors
/// `v_i = θ^{(i+1) mod m} v` should satisfy `σ_i v_i = x v_i` and
/// `σ_i v_{i+j} = y v_{i+j}` for `2 <= j <= m-2`, indices mod `m`.
///
/// Runs on the complexified representation.
pub fn theta_cycle_audit<T: Field>(rho: &Rep<T>, v: &[T], x: &T, y: &T, tol: f64) -> Result<CycleAuditReport, AnalysisError> {
    let m = rho.strands();
    if m < 4 {
        return Err(AnalysisError::TooFewStrands { needed: 4, strands: m });
    }
    if v.len() != rho.degree() {
        return Err(AnalysisError::Shape { expected: rho.degree(), got: v.len() });
    }
    let rho = rho.to_complex();
    let v: Vec<Complex> = v.iter().map(FieldScalar::to_complex).collect();
    let (x, y) = (x.to_complex(), y.to_complex());
    if max_abs_vec(&v) == 0.0 {
        return Err(AnalysisError::WitnessInvalid("zero vector".into()));
    }
    let gens = rho.gens();
    let mut witness_residual: f64 = 0.0;
    for (k, g) in gens.iter().enumerate() {
        let lambda = if k == m - 2 {
            x
        } else if k + 4 <= m {
            y
        } else {
            continue;
        };
        let r = eigen_residual(g, lambda, &v);
        witness_residual = witness_residual.max(r);
        if r > tol {
            return Err(AnalysisError::WitnessInvalid(format!(
                "s{} v differs from {} v by relative residual {r:e}",
                k + 1,
                if k == m - 2 { "x" } else { "y" }
            )));
        }
    }

    let theta = rho.eval_word(&theta_word(m)?)?;
    let theta_inv = theta.inverse(tol.min(1e-12)).ok_or(AnalysisError::WitnessInvalid("θ is singular".into()))?;
    let conj = |a: &Mat<Complex>| &(&theta * a) * &theta_inv;
    // s[i] = ρ(σ_i) for i = 1..m-1 and s[0] = ρ(σ₀)
    let mut s = vec![conj(&gens[m - 2])];
    s.extend(gens.iter().cloned());

    let full = theta.pow(m);
    let d_scalar = full[(0, 0)];
    let d_residual = (&full - &Mat::scalar(rho.degree(), d_scalar)).max_abs() / full.norm_inf().max(1.0);
    let d_ok = d_residual <= tol;

    let cycle: Vec<CycleCheck> = (0..m)
        .map(|i| {
            let next = &s[(i + 1) % m];
            let residual = (&conj(&s[i]) - next).max_abs() / next.norm_inf().max(1.0);
            CycleCheck { i, residual, ok: residual <= tol }
        })
        .collect();

    // vs[i] = v_i = θ^{(i+1) mod m} v
    let mut powers = vec![v.clone()];
    for k in 1..m {
        let next = theta.mul_vec(&powers[k - 1]);
        powers.push(next);
    }
    let vs: Vec<Vec<Complex>> = (0..m).map(|i| powers[(i + 1) % m].clone()).collect();

    let mut table = Vec::new();
    let mut degeneracies = Vec::new();
    for i in 0..m {
        let r = eigen_residual(&s[i], x, &vs[i]);
        table.push(TableCell { generator: i, vector: i, eigenvalue: "x", residual: r, ok: r <= tol });
        for j in 2..=m - 2 {
            let t = (i + j) % m;
            let r = eigen_residual(&s[i], y, &vs[t]);
            table.push(TableCell { generator: i, vector: t, eigenvalue: "y", residual: r, ok: r <= tol });
        }
        for t in [(i + 1) % m, (i + m - 1) % m] {
            let r = eigen_residual(&s[i], y, &vs[t]);
            if r <= tol {
                degeneracies.push(TableCell { generator: i, vector: t, eigenvalue: "y", residual: r, ok: true });
            }
        }
    }

    // v_1, v_2, …, v_{m-1}, v_m = v_0
    let order: Vec<&Vec<Complex>> = (1..=m).map(|k| &vs[k % m]).collect();
    let mut independence = 0;
    for k in 1..=m {
        let cols: Vec<Vec<Complex>> = order[..k].iter().map(|w| {
            let size = max_abs_vec(w);
            w.iter().map(|z| z / size).collect()
        }).collect();
        if rank_numeric(&Mat::from_columns(&cols), tol) == k {
            independence = k;
        } else {
            break;
        }
    }

    let line_invariant = gens.iter().all(|g| direction_residual(&g.mul_vec(&v), &v) <= tol);
    let cycle_ok = cycle.iter().all(|c| c.ok);
    let table_ok = table.iter().all(|c| c.ok);
    let max_table_residual = table.iter().map(|c| c.residual).fold(0.0, f64::max);
    Ok(CycleAuditReport {
        m,
        tolerance: tol,
        d_scalar,
        d_residual,
        d_ok,
        witness_residual,
        passed: cycle_ok && table_ok && d_ok,
        cycle,
        cycle_ok,
        table,
        table_ok,
        max_table_residual,
        independence,
        degeneracies,
        line_invariant,
    })
}
