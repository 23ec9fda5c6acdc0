//! Shared inputs for the criterion benchmarks.

use fracroot_core::fixtures::{Benchmark, ALL};
use fracroot_core::{Complex64, SolverConfig, SweepConfig};

/// Benchmark polynomials paired with one order that converges from their
/// starting point.
pub fn solve_cases() -> Vec<(Benchmark, SolverConfig)> {
    ALL.iter()
        .map(|b| (*b, SolverConfig::new(b.rows[0].alpha, b.x0())))
        .collect()
}

/// A coarse sweep (121 orders) around the interesting range.
pub fn coarse_sweep(x0: Complex64) -> SweepConfig {
    SweepConfig {
        alpha_step: 0.005,
        ..SweepConfig::new(x0)
    }
}
