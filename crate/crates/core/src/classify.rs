//! Recognizing `χ(y) ⊗ τ_n(u)` up to conjugation: parameter recovery,
//! intertwiner certificates, and randomized round-trip audits.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{burnside_dimension, rank_conclusion_check, AnalysisError};
use crate::linalg::numeric::{condition_estimate, eigen_numeric, inverse_numeric};
use crate::linalg::{intertwiner_space, LinalgError, Mat};
use crate::rep::{specialize, standard_rep, Rep, RepError};
use crate::scalar::{Complex, DEFAULT_CLUSTER_TOL};

/// Smallest degree for which the multiplicity `n - 2` eigenvalue is unique.
pub const MIN_DEGREE: usize = 5;
/// Degree from which irreducible `n`-dimensional representations are known
/// to be of the form `χ(y) ⊗ τ_n(u)`.
pub const THEOREM_DEGREE: usize = 9;
/// Intertwiners with a larger condition estimate are not accepted as
/// invertible.
pub const MAX_INTERTWINER_CONDITION: f64 = 1e10;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ClassifyError {
    #[error("classification needs degree at least {MIN_DEGREE}, got {0}")]
    DegreeTooSmall(usize),
    #[error("degree {degree} differs from the number of strands {strands}")]
    DegreeMismatch { degree: usize, strands: usize },
    #[error("no eigenvalue of s1 has multiplicity exactly {expected}")]
    NoDominantEigenvalue { expected: usize, spectrum: Vec<(Complex, usize)> },
    #[error("recovered u = {u} is at an excluded point (0 or 1)")]
    DegenerateU { u: Complex },
    #[error("representation is reducible: generated algebra has dimension {dimension} < {full}")]
    NotIrreducible { dimension: usize, full: usize },
    #[error("braid relations fail (largest residual {residual:e})")]
    RelationFailure { residual: f64 },
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

impl ClassifyError {
    pub fn name(&self) -> &'static str {
        match self {
            ClassifyError::DegreeTooSmall(_) => "DegreeTooSmall",
            ClassifyError::DegreeMismatch { .. } => "DegreeMismatch",
            ClassifyError::NoDominantEigenvalue { .. } => "NoDominantEigenvalue",
            ClassifyError::DegenerateU { .. } => "DegenerateU",
            ClassifyError::NotIrreducible { .. } => "NotIrreducible",
            ClassifyError::RelationFailure { .. } => "RelationFailure",
            ClassifyError::Analysis(e) => e.name(),
            ClassifyError::Rep(e) => e.name(),
            ClassifyError::Linalg(e) => e.name(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Equivalent,
    NotEquivalent,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Obstruction {
    /// The spectra of `ρ(σ₁)` and of the model's `σ₁` differ.
    EigenvalueMismatch { observed: Vec<(Complex, usize)>, model: Vec<(Complex, usize)> },
    /// The stacked intertwiner system has trivial kernel.
    ZeroSchurSpace { system_rank: usize, unknowns: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Diagnostic {
    pub severity: &'static str,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationResult {
    pub verdict: Verdict,
    pub y: Complex,
    pub u: Complex,
    /// `X` with `ρ(σ_i) X = X (χ(y) ⊗ τ_n(u))(σ_i)` for all `i`.
    pub intertwiner: Option<Mat<Complex>>,
    /// `max_i ‖ρ(σ_i) X - X M_i‖∞`.
    pub residual: f64,
    /// `max_i (‖ρ(σ_i)‖∞ + ‖M_i‖∞) ‖X‖∞`.
    pub scale: f64,
    pub condition: f64,
    pub schur_dimension: usize,
    pub eigenvalues: Vec<(Complex, usize)>,
    pub obstruction: Option<Obstruction>,
    pub burnside_dimension: Option<usize>,
    pub notes: Vec<String>,
    pub diagnostics: Vec<Diagnostic>,
}

impl ClassificationResult {
    pub fn relative_residual(&self) -> f64 {
        if self.scale > 0.0 {
            self.residual / self.scale
        } else {
            self.residual
        }
    }

    pub fn theorem_contradiction(&self) -> bool {
        self.diagnostics.iter().any(|d| d.severity == "THEOREM-CONTRADICTION")
    }
}

/// The model `χ(y) ⊗ τ_n(u)` over the complex numbers.
pub fn model_rep(n: usize, y: Complex, u: Complex) -> Result<Rep<Complex>, RepError> {
    let tau = specialize(&standard_rep(n)?, &u, crate::scalar::DEFAULT_TOL)?;
    tau.character_twist(&y, &format!("{y}"))
}

/// Recovers `(y, u)` from the spectrum of `ρ(σ₁)`: `y` is the unique
/// eigenvalue of multiplicity `n - 2`, and the remaining pair `±y√u` gives
/// `u = -λ₊λ₋ / y²`.
pub fn recover_parameters(rho: &Rep<Complex>, _tol: f64) -> Result<(Complex, Complex), ClassifyError> {
    let n = rho.degree();
    if n < MIN_DEGREE {
        return Err(ClassifyError::DegreeTooSmall(n));
    }
    let spectrum = eigen_numeric(rho.generator(1), DEFAULT_CLUSTER_TOL)?;
    let dominant: Vec<&(Complex, usize)> = spectrum.iter().filter(|(_, k)| *k == n - 2).collect();
    let rest: Vec<Complex> = spectrum
        .iter()
        .filter(|(_, k)| *k != n - 2)
        .flat_map(|(z, k)| std::iter::repeat_n(*z, *k))
        .collect();
    if dominant.len() != 1 || rest.len() != 2 {
        return Err(ClassifyError::NoDominantEigenvalue { expected: n - 2, spectrum });
    }
    let y = dominant[0].0;
    let u = -(rest[0] * rest[1]) / (y * y);
    if u.norm() <= DEFAULT_CLUSTER_TOL || (u - 1.0).norm() <= DEFAULT_CLUSTER_TOL {
        return Err(ClassifyError::DegenerateU { u });
    }
    Ok((y, u))
}

fn spectra_match(a: &[(Complex, usize)], b: &[(Complex, usize)], scale: f64) -> bool {
    a.len() == b.len()
        && a.iter().all(|(z, k)| {
            b.iter().any(|(w, l)| k == l && (z - w).norm() <= 1e-6 * scale.max(1.0))
        })
}

/// Tests `ρ ≅ χ(y) ⊗ τ_n(u)` through the space of intertwiners.
///
/// Dimension one with an invertible basis element certifies equivalence;
/// dimension zero refutes it; dimension two or more means `ρ` is not
/// irreducible, and the verdict is inconclusive.
pub fn certify_equivalence(rho: &Rep<Complex>, y: Complex, u: Complex, tol: f64) -> Result<ClassificationResult, ClassifyError> {
    let n = rho.degree();
    if n != rho.strands() {
        return Err(ClassifyError::DegreeMismatch { degree: n, strands: rho.strands() });
    }
    if u.norm() == 0.0 {
        return Err(RepError::ZeroSubstitution.into());
    }
    let model = model_rep(n, y, u)?;
    let mut notes = Vec::new();

    let observed = eigen_numeric(rho.generator(1), DEFAULT_CLUSTER_TOL)?;
    let expected = eigen_numeric(model.generator(1), DEFAULT_CLUSTER_TOL)?;
    let spectral_scale = rho.generator(1).norm_inf().max(model.generator(1).norm_inf());
    let mismatch = !spectra_match(&observed, &expected, spectral_scale);
    if mismatch {
        notes.push("eigenvalue multisets of s1 differ from the model".to_string());
    }

    let basis = intertwiner_space(rho.gens(), model.gens(), tol)?;
    let schur_dimension = basis.len();
    notes.push(format!("intertwiner space has dimension {schur_dimension}"));

    let mut result = ClassificationResult {
        verdict: Verdict::Inconclusive,
        y,
        u,
        intertwiner: None,
        residual: f64::NAN,
        scale: f64::NAN,
        condition: f64::INFINITY,
        schur_dimension,
        eigenvalues: observed.clone(),
        obstruction: None,
        burnside_dimension: None,
        notes,
        diagnostics: Vec::new(),
    };

    match schur_dimension {
        0 => {
            result.verdict = Verdict::NotEquivalent;
            result.obstruction = Some(if mismatch {
                Obstruction::EigenvalueMismatch { observed, model: expected }
            } else {
                Obstruction::ZeroSchurSpace { system_rank: n * n, unknowns: n * n }
            });
        }
        1 => {
            let x = basis.into_iter().next().expect("one basis element");
            let norm_x = x.norm_inf();
            let (mut residual, mut scale) = (0.0f64, 0.0f64);
            for (a, b) in rho.gens().iter().zip(model.gens()) {
                residual = residual.max((&(a * &x) - &(&x * b)).norm_inf());
                scale = scale.max((a.norm_inf() + b.norm_inf()) * norm_x);
            }
            result.residual = residual;
            result.scale = scale;
            result.condition = condition_estimate(&x);
            let invertible = result.condition < MAX_INTERTWINER_CONDITION && inverse_numeric(&x, 1e-14).is_some();
            let degenerate_u = u.norm() <= DEFAULT_CLUSTER_TOL || (u - 1.0).norm() <= DEFAULT_CLUSTER_TOL;
            result.verdict = if invertible && residual <= tol * scale && !degenerate_u {
                Verdict::Equivalent
            } else {
                if !invertible {
                    result.notes.push(format!("intertwiner is singular (condition {:e})", result.condition));
                }
                if degenerate_u {
                    result.notes.push("u is at an excluded point".into());
                }
                Verdict::Inconclusive
            };
            result.intertwiner = Some(x);
        }
        _ => {
            result.notes.push("intertwiner space of dimension >= 2: input is not irreducible".into());
        }
    }
    Ok(result)
}

/// Full pipeline: relations, irreducibility, parameter recovery, certificate.
pub fn classify(rho: &Rep<Complex>, tol: f64) -> Result<ClassificationResult, ClassifyError> {
    let n = rho.degree();
    if n != rho.strands() {
        return Err(ClassifyError::DegreeMismatch { degree: n, strands: rho.strands() });
    }
    let relations = rho.check_braid_relations(tol);
    if !relations.all_hold {
        return Err(ClassifyError::RelationFailure { residual: relations.max_residual });
    }
    let burnside = burnside_dimension(rho, tol)?;
    if !burnside.irreducible {
        return Err(ClassifyError::NotIrreducible { dimension: burnside.dimension, full: n * n });
    }
    let (y, u) = recover_parameters(rho, tol)?;
    let mut result = certify_equivalence(rho, y, u, tol)?;
    result.burnside_dimension = Some(burnside.dimension);
    if n >= THEOREM_DEGREE {
        if result.verdict == Verdict::NotEquivalent {
            result.diagnostics.push(Diagnostic {
                severity: "THEOREM-CONTRADICTION",
                message: format!(
                    "irreducible input of degree {n} is not equivalent to the recovered model; \
                     review tolerances before drawing conclusions"
                ),
            });
        }
    } else {
        result.notes.push(format!("degree {n} < {THEOREM_DEGREE}: verdict carries no structural guarantee"));
    }
    Ok(result)
}

/// Sampling choices of [`audit_theorem`], recorded in its summary.
pub const SAMPLING: &str = "y: |y| area-uniform in [0.5, 2], arg uniform; \
u: |u| area-uniform in [0.25, 3], arg uniform, rejecting |u - 1| < 0.25; \
P: i.i.d. standard complex Gaussian entries, resampled while condition > 1e4";

pub const MAX_CONDITION_P: f64 = 1e4;
pub const PARAMETER_TOL: f64 = 1e-7;
pub const RESIDUAL_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditRow {
    pub trial: usize,
    pub y: Complex,
    pub u: Complex,
    pub condition_p: f64,
    pub recovered_y: Option<Complex>,
    pub recovered_u: Option<Complex>,
    pub y_error: f64,
    pub u_error: f64,
    pub verdict: Option<Verdict>,
    pub relative_residual: f64,
    pub intertwiner_condition: f64,
    pub burnside_dimension: Option<usize>,
    pub corank_check: Option<usize>,
    pub theorem_contradiction: bool,
    pub error: Option<String>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditSummary {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub sampling: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub pass_rate: f64,
    pub worst_y_error: f64,
    pub worst_u_error: f64,
    pub worst_relative_residual: f64,
    pub theorem_contradictions: usize,
    pub rows: Vec<AuditRow>,
}

impl AuditSummary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.theorem_contradictions == 0
    }
}

fn polar(rng: &mut ChaCha8Rng, r_min: f64, r_max: f64) -> Complex {
    let r = rng.gen_range(r_min * r_min..=r_max * r_max).sqrt();
    Complex::from_polar(r, rng.gen_range(0.0..TAU))
}

/// Random instance `(y, u, P)` for trial `trial`; the stream is derived from
/// `(seed, trial)` only, so instances do not depend on scheduling.
pub fn sample_instance(n: usize, seed: u64, trial: usize) -> (Complex, Complex, Mat<Complex>, f64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    let y = polar(&mut rng, 0.5, 2.0);
    let u = loop {
        let u = polar(&mut rng, 0.25, 3.0);
        if (u - 1.0).norm() >= 0.25 {
            break u;
        }
    };
    let mut best: Option<(Mat<Complex>, f64)> = None;
    for _ in 0..100 {
        let p = Mat::from_fn(n, n, |_, _| Complex::new(rng.sample(StandardNormal), rng.sample(StandardNormal)));
        let c = condition_estimate(&p);
        if best.as_ref().is_none_or(|(_, b)| c < *b) {
            best = Some((p, c));
        }
        if c <= MAX_CONDITION_P {
            break;
        }
    }
    let (p, c) = best.expect("at least one sample");
    (y, u, p, c)
}

fn audit_trial(n: usize, seed: u64, trial: usize, tol: f64) -> AuditRow {
    let (y, u, p, condition_p) = sample_instance(n, seed, trial);
    let mut row = AuditRow {
        trial,
        y,
        u,
        condition_p,
        recovered_y: None,
        recovered_u: None,
        y_error: f64::NAN,
        u_error: f64::NAN,
        verdict: None,
        relative_residual: f64::NAN,
        intertwiner_condition: f64::NAN,
        burnside_dimension: None,
        corank_check: None,
        theorem_contradiction: false,
        error: None,
        passed: false,
    };
    let outcome = model_rep(n, y, u)
        .and_then(|m| m.conjugate_by(&p, 1e-14))
        .map_err(ClassifyError::from)
        .and_then(|rho| classify(&rho, tol).map(|res| (rho, res)));
    match outcome {
        Err(e) => row.error = Some(e.name().to_string()),
        Ok((rho, res)) => {
            row.recovered_y = Some(res.y);
            row.recovered_u = Some(res.u);
            row.y_error = (res.y - y).norm() / y.norm();
            row.u_error = (res.u - u).norm() / u.norm().max(1.0);
            row.verdict = Some(res.verdict);
            row.relative_residual = res.relative_residual();
            row.intertwiner_condition = res.condition;
            row.burnside_dimension = res.burnside_dimension;
            row.theorem_contradiction = res.theorem_contradiction();
            let corank = rank_conclusion_check(&rho, &res.y, tol);
            row.corank_check = Some(corank);
            row.passed = res.verdict == Verdict::Equivalent
                && row.y_error < PARAMETER_TOL
                && row.u_error < PARAMETER_TOL
                && row.relative_residual < RESIDUAL_TOL
                && corank == 2
                && condition_p <= MAX_CONDITION_P;
        }
    }
    row
}

/// Round-trip audit: classify `P (χ(y) ⊗ τ_n(u)) P⁻¹` for random `(y, u, P)`
/// and check the recovered parameters, certificate and corank. Trials run in
/// parallel on the current rayon pool; results are independent of thread
/// count.
pub fn audit_theorem(n: usize, trials: usize, seed: u64, tol: f64) -> Result<AuditSummary, ClassifyError> {
    if n < MIN_DEGREE {
        return Err(ClassifyError::DegreeTooSmall(n));
    }
    let rows: Vec<AuditRow> = (0..trials).into_par_iter().map(|t| audit_trial(n, seed, t, tol)).collect();
    let passed = rows.iter().filter(|r| r.passed).count();
    let worst = |f: fn(&AuditRow) -> f64| rows.iter().map(f).filter(|x| x.is_finite()).fold(0.0, f64::max);
    Ok(AuditSummary {
        n,
        trials,
        seed,
        tolerance: tol,
        sampling: SAMPLING,
        passed,
        failed: trials - passed,
        pass_rate: if trials == 0 { 1.0 } else { passed as f64 / trials as f64 },
        worst_y_error: worst(|r| r.y_error),
        worst_u_error: worst(|r| r.u_error),
        worst_relative_residual: worst(|r| r.relative_residual),
        theorem_contradictions: rows.iter().filter(|r| r.theorem_contradiction).count(),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn recovers_twisted_parameters() {
        let rho = model_rep(9, c(2.0, 0.0), c(3.0, 0.0)).unwrap();
        let (y, u) = recover_parameters(&rho, 1e-9).unwrap();
        assert!((y - 2.0).norm() < 1e-10);
        assert!((u - 3.0).norm() < 1e-10);
    }

    #[test]
    fn rejects_small_and_trivial() {
        let rho = model_rep(4, c(1.0, 0.0), c(2.0, 0.0)).unwrap();
        assert_eq!(recover_parameters(&rho, 1e-9), Err(ClassifyError::DegreeTooSmall(4)));
        let trivial = Rep::new(6, vec![Mat::<Complex>::identity(6); 5], "trivial", 1e-9).unwrap();
        assert!(matches!(recover_parameters(&trivial, 1e-9), Err(ClassifyError::NoDominantEigenvalue { .. })));
    }

    #[test]
    fn certificate_for_model() {
        let rho = model_rep(7, c(0.5, 1.0), c(2.5, -0.5)).unwrap();
        let res = certify_equivalence(&rho, c(0.5, 1.0), c(2.5, -0.5), 1e-9).unwrap();
        assert_eq!(res.verdict, Verdict::Equivalent);
        let x = res.intertwiner.unwrap();
        let s = x[(0, 0)];
        assert!((&x - &Mat::scalar(7, s)).max_abs() < 1e-9 * s.norm());
    }

    #[test]
    fn wrong_parameters_are_refuted() {
        let rho = model_rep(9, c(2.0, 0.0), c(3.0, 0.0)).unwrap();
        let res = certify_equivalence(&rho, c(2.0, 0.0), c(4.0, 0.0), 1e-9).unwrap();
        assert_eq!(res.verdict, Verdict::NotEquivalent);
        assert!(matches!(res.obstruction, Some(Obstruction::EigenvalueMismatch { .. })));
    }

    #[test]
    fn classifies_conjugated_model() {
        let (y, u) = (c(1.0, 1.0), c(2.5, 0.0));
        let (_, _, p, _) = sample_instance(9, 11, 0);
        let rho = model_rep(9, y, u).unwrap().conjugate_by(&p, 1e-14).unwrap();
        let res = classify(&rho, 1e-9).unwrap();
        assert_eq!(res.verdict, Verdict::Equivalent);
        assert!((res.y - y).norm() < 1e-8 * y.norm());
        assert!((res.u - u).norm() < 1e-8 * u.norm());
        assert!(!res.theorem_contradiction());
        // X P⁻¹ is scalar
        let x = res.intertwiner.unwrap();
        let xp = &x * &inverse_numeric(&p, 1e-14).unwrap();
        let s = xp[(0, 0)];
        assert!((&xp - &Mat::scalar(9, s)).max_abs() < 1e-7 * s.norm());
    }

    #[test]
    fn permutation_point_is_not_irreducible() {
        let rho = model_rep(9, c(1.0, 0.0), c(1.0, 0.0)).unwrap();
        assert!(matches!(classify(&rho, 1e-9), Err(ClassifyError::NotIrreducible { .. })));
    }

    #[test]
    fn small_audit() {
        let s = audit_theorem(5, 4, 3, 1e-9).unwrap();
        assert_eq!(s.passed, 4, "{:?}", s.rows);
        assert_eq!(s, audit_theorem(5, 4, 3, 1e-9).unwrap());
        let empty = audit_theorem(9, 0, 1, 1e-9).unwrap();
        assert!(empty.all_passed());
        assert_eq!(empty.pass_rate, 1.0);
    }
}
