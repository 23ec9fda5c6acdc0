//! Polynomial root finding with the fractional Newton-Raphson method.
//!
//! The classical Newton step `x - f(x)/f'(x)` is generalised by replacing
//! `f'` with the Riemann-Liouville derivative of order `alpha` taken from
//! the origin. On monomials that derivative has the closed form
//!
//! ```text
//! D^alpha x^m = Gamma(m + 1) / Gamma(m - alpha + 1) * x^(m - alpha)
//! ```
//!
//! and for non-integer `alpha` the power `x^(m - alpha)` is complex as soon as
//! an iterate becomes negative. A real starting point can therefore reach
//! complex roots, and sweeping `alpha` from one starting point discovers
//! different roots. Convergence is linear for `alpha != 1`, so the solver
//! accelerates it with Aitken's delta-squared extrapolation.
//!
//! Crate layout:
//!
//! * [`specialfn`] - gamma, reciprocal gamma and principal-branch powers.
//! * [`poly`] - polynomials and the fractional derivative evaluator.
//! * [`solver`] - the iteration, Aitken acceleration and order estimation.
//! * [`sweep`] - alpha-grid sweeps and root clustering.
//! * [`oracle`] - Durand-Kerner reference roots for verification.
//! * [`fixtures`] - the three degree 10-12 benchmark polynomials.
//!
//! ```
//! use fracroot_core::{solve, Complex64, Polynomial, SolverConfig};
//!
//! // x^2 + 1 has no real roots; a fractional order still finds one from x0 = 1.
//! let p = Polynomial::new(vec![1.0, 0.0, 1.0]).unwrap();
//! let cfg = SolverConfig::new(0.9, Complex64::new(1.0, 0.0));
//! let (record, _trace) = solve(&p, &cfg).unwrap();
//! assert!((record.root.im.abs() - 1.0).abs() < 1e-8);
//! ```

pub mod error;
pub mod fixtures;
pub mod oracle;
pub mod poly;
pub mod solver;
pub mod specialfn;
pub mod sweep;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use oracle::{durand_kerner, monic_from_roots, OracleResult};
pub use poly::{
    frac_derivative_eval, frac_derivative_table, DerivativeRow, FractionalDerivative, Polynomial,
};
pub use solver::{
    aitken, estimate_order, iterate, phi_step, solve, AitkenGuard, IterationTrace, RootRecord,
    SolverConfig, Termination,
};
pub use specialfn::{cpow, gamma, rgamma};
pub use sweep::{cluster_roots, run_sweep, DistinctRoot, SweepConfig, SweepReport};

/// Complex values used for iterates, roots and derivative values.
pub type ComplexValue = Complex64;
