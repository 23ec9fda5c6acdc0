//! Sweeps over the derivative order from a single starting point.
//!
//! Different orders send the same starting point to different roots, so a
//! fine alpha grid recovers most of a polynomial's roots, real and complex.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::solver::{solve, RootRecord, SolverConfig, Termination};

/// Grid and clustering settings for [`run_sweep`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepConfig {
    pub alpha_min: f64,
    pub alpha_max: f64,
    pub alpha_step: f64,
    pub x0: Complex64,
    /// Tolerances, caps and acceleration for each solve. Its `alpha` and
    /// `x0` are overwritten per grid point.
    pub solver: SolverConfig,
    /// Component-wise distance under which two roots are the same root.
    pub dedup_eps: f64,
}

impl SweepConfig {
    pub const DEFAULT_ALPHA_MIN: f64 = 0.7;
    pub const DEFAULT_ALPHA_MAX: f64 = 1.3;
    pub const DEFAULT_ALPHA_STEP: f64 = 0.0005;
    pub const DEFAULT_DEDUP_EPS: f64 = 1e-4;

    pub fn new(x0: Complex64) -> Self {
        Self {
            alpha_min: Self::DEFAULT_ALPHA_MIN,
            alpha_max: Self::DEFAULT_ALPHA_MAX,
            alpha_step: Self::DEFAULT_ALPHA_STEP,
            x0,
            solver: SolverConfig::new(1.0, x0),
            dedup_eps: Self::DEFAULT_DEDUP_EPS,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha_min > 0.0 && self.alpha_min < self.alpha_max && self.alpha_max < 2.0) {
            return Err(Error::InvalidConfig(format!(
                "need 0 < alpha_min < alpha_max < 2, got [{}, {}]",
                self.alpha_min, self.alpha_max
            )));
        }
        if !(self.alpha_step > 0.0 && self.alpha_step.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "alpha_step must be positive, got {}",
                self.alpha_step
            )));
        }
        if !(self.dedup_eps > 0.0 && self.dedup_eps.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "dedup_eps must be positive, got {}",
                self.dedup_eps
            )));
        }
        self.point_config(self.alpha_min).validate()
    }

    /// The alpha values `alpha_min + k * alpha_step` up to `alpha_max`,
    /// rounded to 12 decimals so decimal steps land on their decimal values.
    pub fn grid(&self) -> Vec<f64> {
        let span = (self.alpha_max - self.alpha_min) / self.alpha_step;
        let count = (span + 1e-9).floor() as usize + 1;
        (0..count)
            .map(|k| {
                let a = self.alpha_min + k as f64 * self.alpha_step;
                (a * 1e12).round() / 1e12
            })
            .filter(|a| *a > 0.0 && *a < 2.0)
            .collect()
    }

    fn point_config(&self, alpha: f64) -> SolverConfig {
        SolverConfig {
            alpha,
            x0: self.x0,
            ..self.solver
        }
    }
}

/// A root found by the sweep, possibly from many alpha values.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DistinctRoot {
    /// The member with the smallest residual.
    pub root: Complex64,
    /// How many records landed on this root.
    pub discoveries: usize,
    pub best_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    /// Converged runs, ascending by alpha.
    pub records: Vec<RootRecord>,
    /// Clusters of the records whose residual meets the solver tolerance.
    pub distinct_roots: Vec<DistinctRoot>,
    /// Grid points whose run did not converge.
    pub failures: usize,
    /// Converged runs (on the step criterion) whose residual still exceeds
    /// the residual tolerance; kept in `records` but not clustered.
    pub unverified: usize,
}

impl SweepReport {
    /// The distinct root within `tol` (component-wise) of `target`, if any.
    pub fn find(&self, target: Complex64, tol: f64) -> Option<&DistinctRoot> {
        self.distinct_roots
            .iter()
            .find(|d| within(d.root, target, tol))
    }

    /// Non-real distinct roots (imaginary part above `eps`) whose conjugate
    /// is not within `eps` of another distinct root.
    pub fn unpaired_conjugates(&self, eps: f64) -> Vec<Complex64> {
        self.distinct_roots
            .iter()
            .filter(|d| d.root.im.abs() > eps)
            .filter(|d| self.find(d.root.conj(), eps).is_none())
            .map(|d| d.root)
            .collect()
    }
}

pub(crate) fn within(a: Complex64, b: Complex64, eps: f64) -> bool {
    (a.re - b.re).abs() <= eps && (a.im - b.im).abs() <= eps
}

/// Greedy clustering in the given order: each root joins the first cluster
/// whose representative lies within `eps` in both components, otherwise it
/// starts a new cluster. The representative is the member with the
/// smallest residual.
pub fn cluster_roots(records: &[RootRecord], eps: f64) -> Vec<DistinctRoot> {
    let mut clusters: Vec<DistinctRoot> = Vec::new();
    for rec in records {
        match clusters.iter_mut().find(|c| within(c.root, rec.root, eps)) {
            Some(cluster) => {
                cluster.discoveries += 1;
                if rec.residual_norm < cluster.best_residual {
                    cluster.root = rec.root;
                    cluster.best_residual = rec.residual_norm;
                }
            }
            None => clusters.push(DistinctRoot {
                root: rec.root,
                discoveries: 1,
                best_residual: rec.residual_norm,
            }),
        }
    }
    clusters
}

/// Solves once per grid alpha (in parallel) and clusters the results.
///
/// The report is identical to a sequential run: records are ordered by
/// alpha before clustering.
pub fn run_sweep(p: &Polynomial, cfg: &SweepConfig) -> Result<SweepReport> {
    cfg.validate()?;
    if p.degree() < 1 {
        return Err(Error::InvalidPolynomial(
            "degree must be at least 1 to search for roots".into(),
        ));
    }
    let outcomes: Vec<RootRecord> = cfg
        .grid()
        .into_par_iter()
        .map(|alpha| solve(p, &cfg.point_config(alpha)).map(|(rec, _)| rec))
        .collect::<Result<_>>()?;

    let total = outcomes.len();
    let records: Vec<RootRecord> = outcomes
        .into_iter()
        .filter(|r| r.termination == Termination::Converged)
        .collect();
    let verified: Vec<RootRecord> = records
        .iter()
        .filter(|r| r.residual_norm <= cfg.solver.tol_res)
        .copied()
        .collect();

    Ok(SweepReport {
        failures: total - records.len(),
        unverified: records.len() - verified.len(),
        distinct_roots: cluster_roots(&verified, cfg.dedup_eps),
        records,
    })
}
