//! The fractional Newton-Raphson iteration and its Aitken-accelerated form.
//!
//! One step is
//!
//! ```text
//! x_{n+1} = x_n - f(x_n) / D^alpha f(x_n),    0 < alpha < 2
//! ```
//!
//! With `alpha = 1` this is classical Newton and converges quadratically on
//! simple roots; any other order converges linearly, which is what the
//! delta-squared acceleration in [`solve`] is for.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{FractionalDerivative, Polynomial};

/// Second differences smaller than this are treated as zero by [`aitken`].
pub const DEGENERATE_DIFFERENCE: f64 = 1e-300;

/// Errors below this are ignored by [`estimate_order`] as rounding noise.
pub const ORDER_ERROR_FLOOR: f64 = 1e-13;

/// Settings for a single root-finding run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SolverConfig {
    /// Derivative order, in `(0, 2)`.
    pub alpha: f64,
    /// Starting point.
    pub x0: Complex64,
    /// Stop once `|f(x_n)| <= tol_res`.
    pub tol_res: f64,
    /// Stop once `|x_{n+1} - x_n| <= tol_step`.
    pub tol_step: f64,
    /// Cap on the number of fractional Newton steps.
    pub max_iter: usize,
    /// Run the Aitken-accelerated loop.
    pub accelerate: bool,
    /// Which extrapolated points the accelerated loop keeps.
    pub guard: AitkenGuard,
    /// A fractional derivative with modulus below this ends the run.
    pub eps_div: f64,
}

impl SolverConfig {
    pub const DEFAULT_TOL_RES: f64 = 1e-10;
    pub const DEFAULT_TOL_STEP: f64 = 1e-12;
    pub const DEFAULT_MAX_ITER: usize = 200;
    pub const DEFAULT_EPS_DIV: f64 = 1e-14;

    /// A configuration with default tolerances and acceleration on.
    pub fn new(alpha: f64, x0: Complex64) -> Self {
        Self {
            alpha,
            x0,
            tol_res: Self::DEFAULT_TOL_RES,
            tol_step: Self::DEFAULT_TOL_STEP,
            max_iter: Self::DEFAULT_MAX_ITER,
            accelerate: true,
            guard: AitkenGuard::None,
            eps_div: Self::DEFAULT_EPS_DIV,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha < 2.0) {
            return Err(Error::DomainAlpha(self.alpha));
        }
        for (name, v) in [
            ("tol_res", self.tol_res),
            ("tol_step", self.tol_step),
            ("eps_div", self.eps_div),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidConfig(format!(
                    "{name} must be positive, got {v}"
                )));
            }
        }
        if self.max_iter == 0 {
            return Err(Error::InvalidConfig("max_iter must be at least 1".into()));
        }
        if !self.x0.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "x0 must be finite, got {}",
                self.x0
            )));
        }
        if self.alpha.fract() != 0.0 && self.x0 == Complex64::new(0.0, 0.0) {
            return Err(Error::InvalidConfig(
                "x0 must be nonzero for a non-integer alpha".into(),
            ));
        }
        Ok(())
    }
}

/// Acceptance rule for the extrapolated point of an accelerated cycle
/// `x0 -> x1 -> x2`. A rejected point means the loop restarts from `x2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub enum AitkenGuard {
    /// Keep every finite extrapolation.
    #[default]
    None,
    /// Keep it only if `|f|` there is below `|f(x2)|`.
    Residual,
    /// Keep it only if the cycle contracts, `|x2 - x1| < |x1 - x0|`, i.e. the
    /// estimated ratio of the underlying geometric sequence is below one.
    Contraction,
}

impl AitkenGuard {
    fn accepts(
        self,
        p: &Polynomial,
        (x0, x1, x2): (Complex64, Complex64, Complex64),
        candidate: Complex64,
        residual_x2: f64,
    ) -> bool {
        match self {
            AitkenGuard::None => true,
            AitkenGuard::Residual => p.eval(candidate).norm() < residual_x2,
            AitkenGuard::Contraction => (x2 - x1).norm() < (x1 - x0).norm(),
        }
    }
}

impl FromStr for AitkenGuard {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(AitkenGuard::None),
            "residual" => Ok(AitkenGuard::Residual),
            "contraction" => Ok(AitkenGuard::Contraction),
            other => Err(Error::InvalidConfig(format!(
                "unknown Aitken guard '{other}' (expected none, residual or contraction)"
            ))),
        }
    }
}

impl fmt::Display for AitkenGuard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AitkenGuard::None => "none",
            AitkenGuard::Residual => "residual",
            AitkenGuard::Contraction => "contraction",
        })
    }
}

/// Why an iteration stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Termination {
    Converged,
    MaxIterations,
    DerivativeVanished,
    Diverged,
}

impl fmt::Display for Termination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Termination::Converged => "Converged",
            Termination::MaxIterations => "MaxIterations",
            Termination::DerivativeVanished => "DerivativeVanished",
            Termination::Diverged => "Diverged",
        };
        f.write_str(s)
    }
}

/// Every point visited by a run, in order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IterationTrace {
    pub iterates: Vec<Complex64>,
    /// `|f(x_n)|` for each entry of `iterates`.
    pub residuals: Vec<f64>,
    pub termination: Termination,
    /// Indices into `iterates` that hold an Aitken-extrapolated point.
    pub accelerated_steps: Vec<usize>,
}

impl IterationTrace {
    pub fn last(&self) -> Complex64 {
        *self.iterates.last().expect("a trace always holds x0")
    }
}

/// Outcome of one solve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RootRecord {
    pub alpha: f64,
    pub root: Complex64,
    /// `|f(root)|`, recomputed from the root.
    pub residual_norm: f64,
    /// Number of fractional Newton steps taken.
    pub iterations: usize,
    pub termination: Termination,
}

struct Stepper<'a> {
    p: &'a Polynomial,
    derivative: FractionalDerivative,
    eps_div: f64,
}

impl<'a> Stepper<'a> {
    fn new(p: &'a Polynomial, alpha: f64, eps_div: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 2.0) {
            return Err(Error::DomainAlpha(alpha));
        }
        Ok(Self {
            p,
            derivative: FractionalDerivative::new(p, alpha)?,
            eps_div,
        })
    }

    fn step(&self, z: Complex64) -> Result<Complex64> {
        let d = self.derivative.eval(z)?;
        let modulus = d.norm();
        if modulus < self.eps_div {
            return Err(Error::DerivativeVanished {
                modulus,
                floor: self.eps_div,
            });
        }
        let next = z - self.p.eval(z) / d;
        if !next.is_finite() {
            return Err(Error::Divergence {
                limit: crate::poly::OVERFLOW_LIMIT,
            });
        }
        Ok(next)
    }
}

/// One fractional Newton step `z - f(z) / D^alpha f(z)`.
pub fn phi_step(p: &Polynomial, alpha: f64, z: Complex64, eps_div: f64) -> Result<Complex64> {
    Stepper::new(p, alpha, eps_div)?.step(z)
}

/// Aitken's delta-squared extrapolation of three consecutive terms:
/// `x0 - (x1 - x0)^2 / (x2 - 2 x1 + x0)`. Exact on geometric sequences.
pub fn aitken(x0: Complex64, x1: Complex64, x2: Complex64) -> Result<Complex64> {
    let second = x2 - 2.0 * x1 + x0;
    if second.norm() < DEGENERATE_DIFFERENCE {
        return Err(Error::DegenerateDifference);
    }
    let first = x1 - x0;
    Ok(x0 - first * first / second)
}

fn termination_for(err: &Error) -> Termination {
    match err {
        Error::DerivativeVanished { .. } => Termination::DerivativeVanished,
        // The origin (for non-integer alpha) and overflow both mean the
        // iterate left the region where the step is defined.
        _ => Termination::Diverged,
    }
}

/// Accumulates the trace and applies the stopping rules.
struct Run<'a> {
    p: &'a Polynomial,
    tol_res: f64,
    tol_step: f64,
    trace: IterationTrace,
    steps: usize,
}

impl<'a> Run<'a> {
    fn start(p: &'a Polynomial, cfg: &SolverConfig) -> Self {
        let residual = p.eval(cfg.x0).norm();
        Self {
            p,
            tol_res: cfg.tol_res,
            tol_step: cfg.tol_step,
            trace: IterationTrace {
                iterates: vec![cfg.x0],
                residuals: vec![residual],
                termination: Termination::MaxIterations,
                accelerated_steps: Vec::new(),
            },
            steps: 0,
        }
    }

    fn current(&self) -> Complex64 {
        self.trace.last()
    }

    /// Records `next` as the successor of the current point and reports the
    /// termination it triggers, if any.
    fn advance(&mut self, next: Complex64, accelerated: bool) -> Option<Termination> {
        let prev = self.current();
        let residual = self.p.eval(next).norm();
        if accelerated {
            self.trace.accelerated_steps.push(self.trace.iterates.len());
        }
        self.trace.iterates.push(next);
        self.trace.residuals.push(residual);
        if !residual.is_finite() {
            return Some(Termination::Diverged);
        }
        if residual <= self.tol_res || (next - prev).norm() <= self.tol_step {
            return Some(Termination::Converged);
        }
        None
    }

    fn finish(mut self, termination: Termination) -> IterationTrace {
        self.trace.termination = termination;
        self.trace
    }
}

fn invalid_trace(cfg: &SolverConfig) -> IterationTrace {
    IterationTrace {
        iterates: vec![cfg.x0],
        residuals: vec![f64::NAN],
        termination: Termination::Diverged,
        accelerated_steps: Vec::new(),
    }
}

fn run_plain(p: &Polynomial, cfg: &SolverConfig, stepper: &Stepper<'_>) -> (IterationTrace, usize) {
    let mut run = Run::start(p, cfg);
    if run.trace.residuals[0] <= cfg.tol_res {
        return (run.finish(Termination::Converged), 0);
    }
    while run.steps < cfg.max_iter {
        let next = match stepper.step(run.current()) {
            Ok(next) => next,
            Err(e) => {
                let steps = run.steps;
                return (run.finish(termination_for(&e)), steps);
            }
        };
        run.steps += 1;
        if let Some(t) = run.advance(next, false) {
            let steps = run.steps;
            return (run.finish(t), steps);
        }
    }
    let steps = run.steps;
    (run.finish(Termination::MaxIterations), steps)
}

fn run_accelerated(
    p: &Polynomial,
    cfg: &SolverConfig,
    stepper: &Stepper<'_>,
) -> (IterationTrace, usize) {
    let mut run = Run::start(p, cfg);
    if run.trace.residuals[0] <= cfg.tol_res {
        return (run.finish(Termination::Converged), 0);
    }
    macro_rules! take_step {
        ($from:expr) => {{
            if run.steps >= cfg.max_iter {
                let steps = run.steps;
                return (run.finish(Termination::MaxIterations), steps);
            }
            match stepper.step($from) {
                Ok(next) => {
                    run.steps += 1;
                    if let Some(t) = run.advance(next, false) {
                        let steps = run.steps;
                        return (run.finish(t), steps);
                    }
                    next
                }
                Err(e) => {
                    let steps = run.steps;
                    return (run.finish(termination_for(&e)), steps);
                }
            }
        }};
    }

    loop {
        let x0 = run.current();
        let x1 = take_step!(x0);
        let x2 = take_step!(x1);
        let Ok(extrapolated) = aitken(x0, x1, x2) else {
            continue;
        };
        if !extrapolated.is_finite() {
            continue;
        }
        let r2 = *run.trace.residuals.last().expect("x2 was recorded");
        if !cfg.guard.accepts(p, (x0, x1, x2), extrapolated, r2) {
            continue;
        }
        if let Some(t) = run.advance(extrapolated, true) {
            let steps = run.steps;
            return (run.finish(t), steps);
        }
    }
}

/// Runs the plain iteration (no acceleration) and returns the full trace.
///
/// Stops on `|f(x_n)| <= tol_res`, on `|x_{n+1} - x_n| <= tol_step`, after
/// `max_iter` steps, or when a step fails. A configuration that fails
/// validation yields a one-point trace terminated as `Diverged`.
pub fn iterate(p: &Polynomial, cfg: &SolverConfig) -> IterationTrace {
    let plain = SolverConfig {
        accelerate: false,
        ..*cfg
    };
    match checked_stepper(p, &plain) {
        Ok(stepper) => run_plain(p, &plain, &stepper).0,
        Err(_) => invalid_trace(cfg),
    }
}

fn checked_stepper<'a>(p: &'a Polynomial, cfg: &SolverConfig) -> Result<Stepper<'a>> {
    cfg.validate()?;
    if p.degree() < 1 {
        return Err(Error::InvalidPolynomial(
            "degree must be at least 1 to search for roots".into(),
        ));
    }
    Stepper::new(p, cfg.alpha, cfg.eps_div)
}

/// Finds one root from `cfg.x0`.
///
/// With `accelerate` set this is a Steffensen-style loop: two fractional
/// Newton steps `x1 = Phi(x0)`, `x2 = Phi(x1)`, then a restart from
/// `aitken(x0, x1, x2)`. When the extrapolation is degenerate, not finite or
/// rejected by `cfg.guard`, the loop restarts from `x2` instead. Otherwise identical to [`iterate`].
///
/// Returns an error only for an invalid configuration or polynomial; every
/// numerical failure is reported through [`Termination`].
pub fn solve(p: &Polynomial, cfg: &SolverConfig) -> Result<(RootRecord, IterationTrace)> {
    let stepper = checked_stepper(p, cfg)?;
    let (trace, iterations) = if cfg.accelerate {
        run_accelerated(p, cfg, &stepper)
    } else {
        run_plain(p, cfg, &stepper)
    };
    let root = trace.last();
    let record = RootRecord {
        alpha: cfg.alpha,
        root,
        residual_norm: p.eval(root).norm(),
        iterations,
        termination: trace.termination,
    };
    Ok((record, trace))
}

/// Empirical convergence order `q` in `e_{n+1} ~ C e_n^q`.
///
/// Uses the errors `e_n = |x_n - root|` of the trailing run of the trace in
/// which they decrease strictly and stay above [`ORDER_ERROR_FLOOR`], and
/// fits `log e_{n+1}` against `log e_n` by least squares.
pub fn estimate_order(trace: &IterationTrace, root: Complex64) -> Result<f64> {
    let errors: Vec<f64> = trace.iterates.iter().map(|x| (x - root).norm()).collect();

    let mut end = errors.len();
    while end > 0 && (errors[end - 1].is_nan() || errors[end - 1] < ORDER_ERROR_FLOOR) {
        end -= 1;
    }
    if end == 0 {
        return Err(Error::InsufficientData(0));
    }
    let mut start = end - 1;
    while start > 0 && errors[start - 1] > errors[start] {
        start -= 1;
    }
    let logs: Vec<f64> = errors[start..end].iter().map(|e| e.ln()).collect();
    let pairs = logs.len().saturating_sub(1);
    if pairs < 3 {
        return Err(Error::InsufficientData(pairs));
    }

    let n = pairs as f64;
    let (xs, ys) = (&logs[..pairs], &logs[1..]);
    let mean_x = xs.iter().sum::<f64>() / n;
    let mean_y = ys.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        sxy += (x - mean_x) * (y - mean_y);
        sxx += (x - mean_x) * (x - mean_x);
    }
    if sxx == 0.0 {
        return Err(Error::InsufficientData(pairs));
    }
    Ok(sxy / sxx)
}
