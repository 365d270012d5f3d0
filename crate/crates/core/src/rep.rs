//! Braid group representations given by their generator images.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::braid::{BraidError, BraidWord};
use crate::laurent::{LaurentError, LaurentPoly};
use crate::linalg::{negligible, Mat};
use crate::scalar::{Complex, Domain, FieldScalar, Rational, Scalar, DEFAULT_TOL};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RepError {
    #[error("braid group needs at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("expected {expected} generator images, got {got}")]
    GeneratorCount { expected: usize, got: usize },
    #[error("generator images must all be {degree}x{degree}: {detail}")]
    Shape { degree: usize, detail: String },
    #[error("image of s{0} is not invertible in its domain")]
    NotInvertible(usize),
    #[error("braid relation {relation} fails with residual {residual:e}")]
    RelationFailure { relation: String, residual: f64 },
    #[error("character value must be nonzero")]
    ZeroScalar,
    #[error("specialization at t = 0 leaves GL (determinant -t vanishes)")]
    ZeroSubstitution,
    #[error("word on {word} strands evaluated in a representation of B_{rep}")]
    StrandMismatch { word: usize, rep: usize },
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Braid(#[from] BraidError),
}

impl RepError {
    pub fn name(&self) -> &'static str {
        match self {
            RepError::TooFewStrands(_) => "TooFewStrands",
            RepError::GeneratorCount { .. } => "GeneratorCount",
            RepError::Shape { .. } => "Shape",
            RepError::NotInvertible(_) => "NotInvertible",
            RepError::RelationFailure { .. } => "RelationFailure",
            RepError::ZeroScalar => "ZeroScalar",
            RepError::ZeroSubstitution => "ZeroSubstitution",
            RepError::StrandMismatch { .. } => "StrandMismatch",
            RepError::Laurent(LaurentError::ZeroSubstitution) => "ZeroSubstitution",
            RepError::Laurent(_) => "LaurentError",
            RepError::Braid(BraidError::IndexOutOfRange { .. }) => "IndexOutOfRange",
            RepError::Braid(_) => "BraidError",
        }
    }
}

/// A representation `ρ: B_m → GL_r` stored as the images of `σ₁ … σ_{m-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Rep<T> {
    strands: usize,
    degree: usize,
    label: String,
    gens: Vec<Mat<T>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RelationCheck {
    /// `"braid"` for `σ_i σ_{i+1} σ_i = σ_{i+1} σ_i σ_{i+1}`, `"commute"` for
    /// `σ_i σ_j = σ_j σ_i` with `|i - j| >= 2`.
    pub kind: &'static str,
    pub i: usize,
    pub j: usize,
    pub residual: f64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RelationReport {
    pub exact: bool,
    pub tolerance: f64,
    pub all_hold: bool,
    pub max_residual: f64,
    pub relations: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn first_failure(&self) -> Option<&RelationCheck> {
        self.relations.iter().find(|r| !r.holds)
    }
}

impl<T: Scalar> Rep<T> {
    /// Builds a representation, verifying shapes, invertibility and every
    /// braid relation (exactly, or at relative tolerance `tol`).
    pub fn new(strands: usize, gens: Vec<Mat<T>>, label: impl Into<String>, tol: f64) -> Result<Self, RepError> {
        let rep = Self::new_unchecked(strands, gens, label)?;
        for (i, g) in rep.gens.iter().enumerate() {
            if g.inverse(tol).is_none() {
                return Err(RepError::NotInvertible(i + 1));
            }
        }
        let report = rep.check_braid_relations(tol);
        if let Some(bad) = report.first_failure() {
            let relation = match bad.kind {
                "braid" => format!("s{0} s{1} s{0} = s{1} s{0} s{1}", bad.i, bad.j),
                _ => format!("s{0} s{1} = s{1} s{0}", bad.i, bad.j),
            };
            return Err(RepError::RelationFailure { relation, residual: bad.residual });
        }
        Ok(rep)
    }

    /// Shape checks only; relations and invertibility are not verified. For
    /// deliberately malformed fixtures and for constructions that preserve
    /// validity.
    pub fn new_unchecked(strands: usize, gens: Vec<Mat<T>>, label: impl Into<String>) -> Result<Self, RepError> {
        if strands < 2 {
            return Err(RepError::TooFewStrands(strands));
        }
        if gens.len() != strands - 1 {
            return Err(RepError::GeneratorCount { expected: strands - 1, got: gens.len() });
        }
        let degree = gens[0].rows();
        if degree == 0 {
            return Err(RepError::Shape { degree, detail: "empty matrix".into() });
        }
        if let Some((i, g)) = gens.iter().enumerate().find(|(_, g)| g.rows() != degree || g.cols() != degree) {
            return Err(RepError::Shape {
                degree,
                detail: format!("s{} is {}x{}", i + 1, g.rows(), g.cols()),
            });
        }
        Ok(Rep { strands, degree, label: label.into(), gens })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn domain(&self) -> Domain {
        T::DOMAIN
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn gens(&self) -> &[Mat<T>] {
        &self.gens
    }

    /// Image of `σ_i` (1-based).
    pub fn generator(&self, i: usize) -> &Mat<T> {
        &self.gens[i - 1]
    }

    /// Image of an arbitrary word: ordered product of generator images and
    /// their inverses; the empty word maps to the identity.
    pub fn eval_word(&self, w: &BraidWord) -> Result<Mat<T>, RepError> {
        if w.strands() != self.strands {
            return Err(RepError::StrandMismatch { word: w.strands(), rep: self.strands });
        }
        let mut inverses: Vec<Option<Mat<T>>> = vec![None; self.gens.len()];
        let mut acc = Mat::identity(self.degree);
        for l in w.letters() {
            let g = &self.gens[l.index - 1];
            if l.inverse {
                let slot = &mut inverses[l.index - 1];
                if slot.is_none() {
                    *slot = Some(g.inverse(DEFAULT_TOL).ok_or(RepError::NotInvertible(l.index))?);
                }
                acc = &acc * slot.as_ref().expect("filled above");
            } else {
                acc = &acc * g;
            }
        }
        Ok(acc)
    }

    /// Checks every defining relation of the braid group. Failures are report
    /// entries, not errors.
    pub fn check_braid_relations(&self, tol: f64) -> RelationReport {
        let g = &self.gens;
        let norms: Vec<f64> = g.iter().map(|m| m.norm_inf().max(1.0)).collect();
        let mut relations = Vec::new();
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                let (kind, lhs, rhs, scale) = if j == i + 1 {
                    let lhs = &(&g[i] * &g[j]) * &g[i];
                    let rhs = &(&g[j] * &g[i]) * &g[j];
                    ("braid", lhs, rhs, norms[i] * norms[j] * norms[i].max(norms[j]))
                } else {
                    ("commute", &g[i] * &g[j], &g[j] * &g[i], norms[i] * norms[j])
                };
                let (holds, residual) = negligible(&(&lhs - &rhs), scale, tol);
                relations.push(RelationCheck { kind, i: i + 1, j: j + 1, residual, holds });
            }
        }
        RelationReport {
            exact: T::is_exact(),
            tolerance: tol,
            all_hold: relations.iter().all(|r| r.holds),
            max_residual: relations.iter().map(|r| r.residual).fold(0.0, f64::max),
            relations,
        }
    }

    /// `χ(y) ⊗ ρ`: every generator image scaled by `y`.
    pub fn character_twist(&self, y: &T, y_text: &str) -> Result<Self, RepError> {
        if y.is_zero() {
            return Err(RepError::ZeroScalar);
        }
        let label = if y.is_one() { self.label.clone() } else { format!("chi({y_text}) x {}", self.label) };
        Ok(Rep {
            strands: self.strands,
            degree: self.degree,
            label,
            gens: self.gens.iter().map(|m| m.scale(y)).collect(),
        })
    }

    /// `P ρ P⁻¹`.
    pub fn conjugate_by(&self, p: &Mat<T>, tol: f64) -> Result<Self, RepError> {
        let pinv = p.inverse(tol).ok_or(RepError::NotInvertible(0))?;
        Ok(Rep {
            strands: self.strands,
            degree: self.degree,
            label: format!("P ({}) P^-1", self.label),
            gens: self.gens.iter().map(|g| &(p * g) * &pinv).collect(),
        })
    }

    /// Block-diagonal `ρ ⊕ ρ'`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, RepError> {
        if self.strands != other.strands {
            return Err(RepError::StrandMismatch { word: other.strands, rep: self.strands });
        }
        Ok(Rep {
            strands: self.strands,
            degree: self.degree + other.degree,
            label: format!("{} + {}", self.label, other.label),
            gens: self.gens.iter().zip(&other.gens).map(|(a, b)| a.direct_sum(b)).collect(),
        })
    }
}

impl<T: FieldScalar> Rep<T> {
    pub fn to_complex(&self) -> Rep<Complex> {
        Rep {
            strands: self.strands,
            degree: self.degree,
            label: self.label.clone(),
            gens: self.gens.iter().map(|m| m.map(FieldScalar::to_complex)).collect(),
        }
    }
}

/// The one-dimensional character `χ(y)`: every generator acts by `y`.
pub fn character<T: Scalar>(strands: usize, y: T, y_text: &str) -> Result<Rep<T>, RepError> {
    if y.is_zero() {
        return Err(RepError::ZeroScalar);
    }
    let gens = vec![Mat::scalar(1, y); strands.saturating_sub(1)];
    Rep::new_unchecked(strands, gens, format!("chi({y_text})"))
}

fn block_rep(n: usize, block: [LaurentPoly; 4], label: String) -> Result<Rep<LaurentPoly>, RepError> {
    if n < 2 {
        return Err(RepError::TooFewStrands(n));
    }
    let gens = (0..n - 1)
        .map(|i| {
            let mut m = Mat::<LaurentPoly>::identity(n);
            m[(i, i)] = block[0].clone();
            m[(i, i + 1)] = block[1].clone();
            m[(i + 1, i)] = block[2].clone();
            m[(i + 1, i + 1)] = block[3].clone();
            m
        })
        .collect();
    Rep::new(n, gens, label, 0.0)
}

/// The standard representation `τ_n` over `Z[t^±1]`: `σ_i` acts as the
/// identity except for the block `[[0, t], [1, 0]]` on coordinates `i, i+1`.
pub fn standard_rep(n: usize) -> Result<Rep<LaurentPoly>, RepError> {
    block_rep(
        n,
        [LaurentPoly::zero(), LaurentPoly::t(), LaurentPoly::one(), LaurentPoly::zero()],
        format!("standard({n})"),
    )
}

/// The unreduced Burau representation, block `[[1 - t, t], [1, 0]]`.
pub fn burau_rep(n: usize) -> Result<Rep<LaurentPoly>, RepError> {
    block_rep(
        n,
        [LaurentPoly::one() - LaurentPoly::t(), LaurentPoly::t(), LaurentPoly::one(), LaurentPoly::zero()],
        format!("burau({n})"),
    )
}

/// Scalar fields that `t` can be specialized to.
pub trait Specialization: FieldScalar {
    fn eval_laurent(p: &LaurentPoly, u: &Self) -> Result<Self, LaurentError>;
    fn describe(&self) -> String;
}

impl Specialization for Rational {
    fn eval_laurent(p: &LaurentPoly, u: &Self) -> Result<Self, LaurentError> {
        p.eval_rational(u)
    }
    fn describe(&self) -> String {
        self.to_string()
    }
}

impl Specialization for Complex {
    fn eval_laurent(p: &LaurentPoly, u: &Self) -> Result<Self, LaurentError> {
        p.eval_complex(*u)
    }
    fn describe(&self) -> String {
        if self.im == 0.0 {
            format!("{}", self.re)
        } else {
            format!("{}{:+}i", self.re, self.im)
        }
    }
}

/// Substitutes `t = u` in every entry and re-verifies invertibility. The
/// label flags `u = 1`, where the standard representation becomes the
/// permutation representation.
pub fn specialize<T: Specialization>(rho: &Rep<LaurentPoly>, u: &T, tol: f64) -> Result<Rep<T>, RepError> {
    if u.is_zero() {
        return Err(RepError::ZeroSubstitution);
    }
    let gens = rho
        .gens
        .iter()
        .map(|m| m.try_map(|p| T::eval_laurent(p, u)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut label = format!("{} at t={}", rho.label, u.describe());
    if u.is_one() {
        label.push_str(" [degenerate (permutation) point]");
    }
    Rep::new(rho.strands, gens, label, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{parse_word, theta_word};
    use crate::linalg::det_exact;
    use crate::scalar::rational;

    fn t() -> LaurentPoly {
        LaurentPoly::t()
    }
    fn c(n: i64) -> LaurentPoly {
        LaurentPoly::from_integer(n)
    }

    #[test]
    fn standard_generators() {
        let tau = standard_rep(3).unwrap();
        let s1 = Mat::from_rows(vec![vec![c(0), t(), c(0)], vec![c(1), c(0), c(0)], vec![c(0), c(0), c(1)]]).unwrap();
        let s2 = Mat::from_rows(vec![vec![c(1), c(0), c(0)], vec![c(0), c(0), t()], vec![c(0), c(1), c(0)]]).unwrap();
        assert_eq!(tau.gens(), &[s1, s2]);
        let tau2 = standard_rep(2).unwrap();
        assert_eq!(tau2.gens()[0], Mat::from_rows(vec![vec![c(0), t()], vec![c(1), c(0)]]).unwrap());
        for g in standard_rep(6).unwrap().gens() {
            assert_eq!(g.trace(), c(4));
            assert_eq!(det_exact(g), -t());
        }
        assert_eq!(standard_rep(1), Err(RepError::TooFewStrands(1)));
    }

    #[test]
    fn burau_generators() {
        let b = burau_rep(2).unwrap();
        assert_eq!(b.gens()[0], Mat::from_rows(vec![vec![c(1) - t(), t()], vec![c(1), c(0)]]).unwrap());
        for g in burau_rep(5).unwrap().gens() {
            for i in 0..5 {
                let s = g.row(i).iter().fold(LaurentPoly::zero(), |a, x| a + x.clone());
                assert_eq!(s, c(1));
            }
        }
    }

    #[test]
    fn twists() {
        let tau = specialize(&standard_rep(3).unwrap(), &rational(5, 1), 0.0).unwrap();
        assert_eq!(tau.character_twist(&rational(1, 1), "1").unwrap().gens(), tau.gens());
        let sym = standard_rep(3).unwrap().character_twist(&c(2), "2").unwrap();
        let expect = Mat::from_rows(vec![vec![c(0), t() * c(2), c(0)], vec![c(2), c(0), c(0)], vec![c(0), c(0), c(2)]]).unwrap();
        assert_eq!(sym.gens()[0], expect);
        assert_eq!(tau.character_twist(&rational(0, 1), "0"), Err(RepError::ZeroScalar));
    }

    #[test]
    fn specializations() {
        let tau = standard_rep(3).unwrap();
        let at2 = specialize(&tau, &rational(2, 1), 0.0).unwrap();
        let q = |x| rational(x, 1);
        assert_eq!(
            at2.gens()[0],
            Mat::from_rows(vec![vec![q(0), q(2), q(0)], vec![q(1), q(0), q(0)], vec![q(0), q(0), q(1)]]).unwrap()
        );
        let at1 = specialize(&standard_rep(4).unwrap(), &rational(1, 1), 0.0).unwrap();
        assert!(at1.label().contains("degenerate"));
        for (i, g) in at1.gens().iter().enumerate() {
            let mut p = Mat::<Rational>::identity(4);
            p[(i, i)] = q(0);
            p[(i + 1, i + 1)] = q(0);
            p[(i, i + 1)] = q(1);
            p[(i + 1, i)] = q(1);
            assert_eq!(g, &p);
        }
        assert_eq!(specialize(&tau, &rational(0, 1), 0.0), Err(RepError::ZeroSubstitution));
        let z = specialize(&tau, &Complex::new(0.0, 2.0), 1e-9).unwrap();
        assert_eq!(z.gens()[0][(0, 1)], Complex::new(0.0, 2.0));
    }

    #[test]
    fn word_evaluation() {
        let tau = standard_rep(3).unwrap();
        let th = tau.eval_word(&theta_word(3).unwrap()).unwrap();
        let expect = Mat::from_rows(vec![vec![c(0), c(0), t() * t()], vec![c(1), c(0), c(0)], vec![c(0), c(1), c(0)]]).unwrap();
        assert_eq!(th, expect);
        assert_eq!(tau.eval_word(&BraidWord::identity(3).unwrap()).unwrap(), Mat::identity(3));
        let tau2 = standard_rep(2).unwrap();
        assert_eq!(tau2.eval_word(&parse_word(2, "s1 s1").unwrap()).unwrap(), Mat::scalar(2, t()));
        let w = parse_word(3, "s1 s2^-1 s1^-1").unwrap();
        let direct = tau.eval_word(&w).unwrap();
        let back = tau.eval_word(&w.inverse()).unwrap();
        assert_eq!(&direct * &back, Mat::identity(3));
        assert!(matches!(
            tau.eval_word(&parse_word(4, "s1").unwrap()),
            Err(RepError::StrandMismatch { .. })
        ));
    }

    #[test]
    fn relation_reports() {
        let report = standard_rep(10).unwrap().check_braid_relations(0.0);
        assert!(report.all_hold && report.exact);
        assert_eq!(report.relations.len(), 9 * 8 / 2);
        assert_eq!(report.max_residual, 0.0);
        let q = |x| rational(x, 1);
        let swap = Mat::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]]).unwrap();
        let bad = Rep::new_unchecked(3, vec![Mat::identity(2), swap.clone()], "bad").unwrap();
        let report = bad.check_braid_relations(0.0);
        assert!(!report.all_hold);
        assert_eq!(report.relations[0].kind, "braid");
        assert!(matches!(
            Rep::new(3, vec![Mat::identity(2), swap], "bad", 0.0),
            Err(RepError::RelationFailure { .. })
        ));
        let same = Rep::new(5, vec![Mat::scalar(2, q(3)); 4], "scalar", 0.0).unwrap();
        assert!(same.check_braid_relations(0.0).all_hold);
    }

    #[test]
    fn construction_errors() {
        let q = |x| rational(x, 1);
        assert!(matches!(
            Rep::new(3, vec![Mat::<Rational>::identity(2)], "x", 0.0),
            Err(RepError::GeneratorCount { expected: 2, got: 1 })
        ));
        assert!(matches!(
            Rep::new(3, vec![Mat::<Rational>::identity(2), Mat::identity(3)], "x", 0.0),
            Err(RepError::Shape { .. })
        ));
        assert_eq!(
            Rep::new(2, vec![Mat::scalar(2, q(0))], "x", 0.0),
            Err(RepError::NotInvertible(1))
        );
        // det of the Burau block at t is -t; not a unit issue, so it builds
        assert!(burau_rep(3).is_ok());
    }
}
