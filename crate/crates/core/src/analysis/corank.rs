use std::cmp::Ordering;
use std::f64::consts::TAU;

use serde::Serialize;

use super::{generic_agreement, AnalysisError, Field};
use crate::laurent::LaurentPoly;
use crate::linalg::numeric::{complexify, eigen_numeric, rank_numeric};
use crate::rep::Rep;
use crate::scalar::{Complex, DEFAULT_CLUSTER_TOL};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorankEntry {
    pub y: Complex,
    /// Exact value when the eigenvalue lies in the representation's field.
    pub exact: Option<String>,
    pub multiplicity: usize,
    /// `rank(ρ(σ₁) - yI)`.
    pub rank: usize,
    /// Whether the rank was decided by exact elimination.
    pub rank_exact: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorankReport {
    pub degree: usize,
    pub best_y: Complex,
    pub best_y_exact: Option<String>,
    pub rank_at_best: usize,
    /// Sorted by rank, then `|y|`, then argument in `[0, 2π)`.
    pub per_eigenvalue: Vec<CorankEntry>,
}

impl CorankReport {
    pub fn corank(&self) -> usize {
        self.rank_at_best
    }
}

fn argument(z: Complex) -> f64 {
    let a = z.im.atan2(z.re);
    if a < 0.0 {
        a + TAU
    } else {
        a
    }
}

fn tie_break(a: &CorankEntry, b: &CorankEntry) -> Ordering {
    let (na, nb) = (a.y.norm(), b.y.norm());
    let close = (na - nb).abs() <= 1e-9 * na.max(nb).max(1.0);
    a.rank.cmp(&b.rank).then_with(|| {
        if close {
            argument(a.y).total_cmp(&argument(b.y))
        } else {
            na.total_cmp(&nb)
        }
    })
}

/// Minimum over eigenvalues `y` of `ρ(σ₁)` of `rank(ρ(σ₁) - yI)`.
///
/// Over the rationals, eigenvalues in `Q` are handled exactly and the
/// remaining ones numerically on the complexified matrix.
pub fn corank<T: Field>(rho: &Rep<T>, tol: f64) -> Result<CorankReport, AnalysisError> {
    let m = rho.generator(1);
    let mut entries = Vec::new();
    if T::is_exact() {
        for (y, mult) in T::eigenvalues(m, DEFAULT_CLUSTER_TOL)? {
            entries.push(CorankEntry {
                y: y.to_complex(),
                exact: Some(y.describe()),
                multiplicity: mult,
                rank: m.shift_diagonal(&y).rank(0.0),
                rank_exact: true,
            });
        }
    }
    let mc = complexify(m);
    for (y, mult) in eigen_numeric(&mc, DEFAULT_CLUSTER_TOL)? {
        let known = entries.iter().any(|e| (e.y - y).norm() <= 1e-7 * (1.0 + y.norm()));
        if known {
            continue;
        }
        entries.push(CorankEntry {
            y,
            exact: None,
            multiplicity: mult,
            rank: rank_numeric(&mc.shift_diagonal(&y), tol),
            rank_exact: false,
        });
    }
    entries.sort_by(tie_break);
    let best = entries.first().cloned().ok_or_else(|| AnalysisError::NotEigenvalue("no eigenvalues".into()))?;
    Ok(CorankReport {
        degree: rho.degree(),
        best_y: best.y,
        best_y_exact: best.exact,
        rank_at_best: best.rank,
        per_eigenvalue: entries,
    })
}

/// Corank of a Laurent representation, computed at three random rational
/// specializations that must agree. Returns the report of the first point.
pub fn corank_generic(rho: &Rep<LaurentPoly>, tol: f64, seed: u64) -> Result<CorankReport, AnalysisError> {
    let mut first = None;
    generic_agreement(rho, seed, "corank", |r| {
        let report = corank(r, tol)?;
        let k = report.rank_at_best;
        first.get_or_insert(report);
        Ok(k)
    })?;
    Ok(first.expect("three points evaluated"))
}
