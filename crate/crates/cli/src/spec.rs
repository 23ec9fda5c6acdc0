use std::path::PathBuf;

use clap::{ArgGroup, Parser, ValueEnum};
use fracroot_core::{
    durand_kerner, frac_derivative_table, run_sweep, solve, AitkenGuard, Complex64, Polynomial,
    SolverConfig, SweepConfig,
};

use crate::input::{parse_coeff_list, parse_complex, parse_polynomial_file};
use crate::output;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// One root from one (alpha, x0) pair.
    Solve,
    /// Roots over an alpha grid from one x0, with distinct roots.
    Sweep,
    /// Fractional derivative values over an (alpha, x) grid.
    Dtable,
    /// All roots by Durand-Kerner iteration.
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

pub const DEFAULT_TABLE_ALPHAS: &str = "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1";
pub const DEFAULT_TABLE_POINTS: &str =
    "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1,1.1,1.2,1.3,1.4,1.5,1.6,1.7,1.8,1.9,2";
pub const DEFAULT_ORACLE_TOL: f64 = 1e-14;
pub const DEFAULT_ORACLE_MAX_ITER: usize = 2000;

/// Polynomial roots by the fractional Newton-Raphson method.
///
/// Coefficients are given in ascending order of power: `--coeffs "-2,0,1"`
/// is x^2 - 2.
#[derive(Debug, Clone, Parser)]
#[command(name = "fracroot", version)]
#[command(group(ArgGroup::new("source").required(true).args(["coeffs", "poly_file"])))]
pub struct RunSpec {
    #[arg(value_enum)]
    pub command: Command,

    /// Comma-separated coefficients c0,c1,...,cn.
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: Option<String>,

    /// File with one coefficient per line (ascending), or {"coeffs": [...]}.
    #[arg(long)]
    pub poly_file: Option<PathBuf>,

    /// Derivative order for `solve`, in (0, 2).
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,

    /// Sweep grid start [default: 0.7].
    #[arg(long, allow_hyphen_values = true)]
    pub alpha_min: Option<f64>,

    /// Sweep grid end [default: 1.3].
    #[arg(long, allow_hyphen_values = true)]
    pub alpha_max: Option<f64>,

    /// Sweep grid spacing [default: 0.0005].
    #[arg(long, allow_hyphen_values = true)]
    pub alpha_step: Option<f64>,

    /// Initial condition as `re` or `re,im`.
    #[arg(long, allow_hyphen_values = true)]
    pub x0: Option<String>,

    /// Residual stopping tolerance [default: 1e-10].
    #[arg(long, allow_hyphen_values = true)]
    pub tol_res: Option<f64>,

    /// Step stopping tolerance [default: 1e-12].
    #[arg(long, allow_hyphen_values = true)]
    pub tol_step: Option<f64>,

    /// Iteration cap [default: 200; 2000 for `oracle`].
    #[arg(long)]
    pub max_iter: Option<usize>,

    /// Run the plain iteration without Aitken acceleration.
    #[arg(long)]
    pub no_accelerate: bool,

    /// Which Aitken extrapolations to keep: none, residual or contraction
    /// [default: none].
    #[arg(long)]
    pub aitken_guard: Option<String>,

    /// Component-wise tolerance for merging sweep roots [default: 1e-4].
    #[arg(long, allow_hyphen_values = true)]
    pub dedup_eps: Option<f64>,

    /// Orders for `dtable` [default: 0,0.1,...,1].
    #[arg(long, allow_hyphen_values = true)]
    pub alphas: Option<String>,

    /// Real evaluation points for `dtable` [default: 0.1,0.2,...,2].
    #[arg(long, allow_hyphen_values = true)]
    pub points: Option<String>,

    /// Update tolerance for `oracle` [default: 1e-14].
    #[arg(long, allow_hyphen_values = true)]
    pub oracle_tol: Option<f64>,

    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,

    /// Include the iteration trace in `solve` output.
    #[arg(long)]
    pub trace: bool,
}

/// A validated, ready-to-run command.
#[derive(Debug, Clone)]
pub enum Plan {
    Solve(Polynomial, SolverConfig),
    Sweep(Polynomial, SweepConfig),
    Table(Polynomial, Vec<f64>, Vec<f64>),
    Oracle(Polynomial, f64, usize),
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

impl RunSpec {
    fn polynomial(&self) -> Result<Polynomial, CliError> {
        match (&self.coeffs, &self.poly_file) {
            (Some(list), None) => {
                let coeffs =
                    parse_coeff_list(list).map_err(|e| invalid(format!("--coeffs: {e}")))?;
                Ok(Polynomial::new(coeffs)?)
            }
            (None, Some(path)) => Ok(parse_polynomial_file(path)?),
            _ => Err(invalid("give exactly one of --coeffs or --poly-file")),
        }
    }

    fn x0(&self) -> Result<Complex64, CliError> {
        let raw = self
            .x0
            .as_deref()
            .ok_or_else(|| invalid("--x0 is required for this command"))?;
        parse_complex(raw).map_err(|e| invalid(format!("--x0: {e}")))
    }

    /// Solver settings with every override applied; `alpha` defaults to 1
    /// when not given (sweeps overwrite it per grid point).
    fn solver_config(&self, x0: Complex64) -> Result<SolverConfig, CliError> {
        let mut cfg = SolverConfig::new(self.alpha.unwrap_or(1.0), x0);
        if let Some(v) = self.tol_res {
            cfg.tol_res = v;
        }
        if let Some(v) = self.tol_step {
            cfg.tol_step = v;
        }
        if let Some(v) = self.max_iter {
            cfg.max_iter = v;
        }
        if let Some(g) = &self.aitken_guard {
            cfg.guard = g.parse::<AitkenGuard>()?;
        }
        cfg.accelerate = !self.no_accelerate;
        Ok(cfg)
    }

    /// Checks every argument and builds the command to run. Nothing is
    /// computed before this succeeds.
    pub fn plan(&self) -> Result<Plan, CliError> {
        let p = self.polynomial()?;
        match self.command {
            Command::Solve => {
                if self.alpha.is_none() {
                    return Err(invalid("--alpha is required for solve"));
                }
                let cfg = self.solver_config(self.x0()?)?;
                cfg.validate()?;
                require_degree(&p)?;
                Ok(Plan::Solve(p, cfg))
            }
            Command::Sweep => {
                let x0 = self.x0()?;
                let mut cfg = SweepConfig::new(x0);
                cfg.solver = self.solver_config(x0)?;
                if let Some(v) = self.alpha_min {
                    cfg.alpha_min = v;
                }
                if let Some(v) = self.alpha_max {
                    cfg.alpha_max = v;
                }
                if let Some(v) = self.alpha_step {
                    cfg.alpha_step = v;
                }
                if let Some(v) = self.dedup_eps {
                    cfg.dedup_eps = v;
                }
                cfg.validate()?;
                require_degree(&p)?;
                Ok(Plan::Sweep(p, cfg))
            }
            Command::Dtable => {
                let alphas = self.alphas.as_deref().unwrap_or(DEFAULT_TABLE_ALPHAS);
                let points = self.points.as_deref().unwrap_or(DEFAULT_TABLE_POINTS);
                let alphas =
                    parse_coeff_list(alphas).map_err(|e| invalid(format!("--alphas: {e}")))?;
                let points =
                    parse_coeff_list(points).map_err(|e| invalid(format!("--points: {e}")))?;
                Ok(Plan::Table(p, alphas, points))
            }
            Command::Oracle => {
                let tol = self.oracle_tol.unwrap_or(DEFAULT_ORACLE_TOL);
                if !(tol > 0.0 && tol.is_finite()) {
                    return Err(invalid(format!("--oracle-tol must be positive, got {tol}")));
                }
                let max_iter = self.max_iter.unwrap_or(DEFAULT_ORACLE_MAX_ITER);
                if max_iter == 0 {
                    return Err(invalid("--max-iter must be at least 1"));
                }
                require_degree(&p)?;
                Ok(Plan::Oracle(p, tol, max_iter))
            }
        }
    }
}

fn require_degree(p: &Polynomial) -> Result<(), CliError> {
    if p.degree() < 1 {
        return Err(invalid("the polynomial must have degree at least 1"));
    }
    Ok(())
}

impl Plan {
    pub fn execute(&self, format: Format, trace: bool) -> String {
        match self {
            Plan::Solve(p, cfg) => {
                let (record, steps) = solve(p, cfg).expect("configuration validated by plan()");
                output::solve(format, &record, trace.then_some(&steps))
            }
            Plan::Sweep(p, cfg) => {
                let report = run_sweep(p, cfg).expect("configuration validated by plan()");
                output::sweep(format, &report)
            }
            Plan::Table(p, alphas, points) => {
                output::table(format, &frac_derivative_table(p, alphas, points))
            }
            Plan::Oracle(p, tol, max_iter) => {
                let result = durand_kerner(p, *tol, *max_iter).expect("degree checked by plan()");
                let residuals: Vec<f64> = result.roots.iter().map(|z| p.eval(*z).norm()).collect();
                output::oracle(format, &result, &residuals)
            }
        }
    }
}
