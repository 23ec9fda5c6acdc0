//! Real-coefficient polynomials and their Riemann-Liouville derivatives.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::specialfn::{cpow, gamma, rgamma};

/// Terms whose magnitude exceeds this are reported as divergence.
pub const OVERFLOW_LIMIT: f64 = 1e300;

/// A polynomial `c_0 + c_1 x + ... + c_n x^n` with real coefficients stored
/// in ascending order of power.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients.
    ///
    /// Rejects empty input, non-finite coefficients and a zero leading
    /// coefficient (a lone zero constant is allowed).
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidPolynomial("no coefficients".into()));
        }
        if let Some((m, c)) = coeffs.iter().enumerate().find(|(_, c)| !c.is_finite()) {
            return Err(Error::InvalidPolynomial(format!(
                "coefficient of x^{m} is not finite ({c})"
            )));
        }
        if coeffs.len() > 1 && coeffs[coeffs.len() - 1] == 0.0 {
            return Err(Error::DegenerateLeadingCoefficient);
        }
        Ok(Self { coeffs })
    }

    /// Like [`Polynomial::new`] but drops trailing zero coefficients first.
    pub fn trimmed(mut coeffs: Vec<f64>) -> Result<Self> {
        while coeffs.len() > 1 && coeffs[coeffs.len() - 1] == 0.0 {
            coeffs.pop();
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Horner evaluation at a complex point.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// The classical first derivative.
    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() == 1 {
            return Polynomial { coeffs: vec![0.0] };
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(m, &c)| m as f64 * c)
            .collect();
        Polynomial { coeffs }
    }

    /// Largest coefficient magnitude.
    pub fn scale(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |acc, c| acc.max(c.abs()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Term {
    /// `c_m * Gamma(m + 1) / Gamma(m - alpha + 1)`
    weight: f64,
    /// `m - alpha`
    exponent: f64,
}

/// The order-`alpha` Riemann-Liouville derivative (lower terminal 0) of one
/// polynomial, with the gamma ratios precomputed.
///
/// Applied term by term:
/// `D^alpha x^m = Gamma(m + 1) / Gamma(m - alpha + 1) * x^(m - alpha)`.
/// Where `m - alpha + 1` is a pole of gamma the term vanishes, so `alpha = 1`
/// reproduces the classical derivative exactly and `alpha = 0` is the
/// identity.
#[derive(Debug, Clone, PartialEq)]
pub struct FractionalDerivative {
    alpha: f64,
    terms: Vec<Term>,
}

impl FractionalDerivative {
    /// Precomputes the derivative of `p` of order `alpha` in `[0, 2)`.
    ///
    /// The root-finding iteration itself needs `alpha > 0`; order zero is
    /// accepted here so the whole family can be tabulated.
    pub fn new(p: &Polynomial, alpha: f64) -> Result<Self> {
        if !(0.0..2.0).contains(&alpha) {
            return Err(Error::DomainAlpha(alpha));
        }
        let terms = p
            .coeffs()
            .iter()
            .enumerate()
            .map(|(m, &c)| {
                let m = m as f64;
                // m + 1 is a positive integer, never a pole.
                let rising = gamma(m + 1.0).expect("gamma at a positive integer");
                Term {
                    weight: c * rising * rgamma(m - alpha + 1.0),
                    exponent: m - alpha,
                }
            })
            .collect();
        Ok(Self { alpha, terms })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    fn integer_order(&self) -> bool {
        self.alpha.fract() == 0.0
    }

    /// Evaluates the derivative at `z` on the principal branch.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let at_origin = z.re == 0.0 && z.im == 0.0;
        if at_origin && !self.integer_order() {
            return Err(Error::SingularPoint { alpha: self.alpha });
        }
        let mut sum = Complex64::new(0.0, 0.0);
        for term in &self.terms {
            if term.weight == 0.0 {
                continue;
            }
            let value = if term.exponent == 0.0 {
                Complex64::new(term.weight, 0.0)
            } else {
                term.weight * cpow(z, term.exponent)?
            };
            if !value.is_finite() || value.norm() > OVERFLOW_LIMIT {
                return Err(Error::Divergence {
                    limit: OVERFLOW_LIMIT,
                });
            }
            sum += value;
        }
        if !sum.is_finite() {
            return Err(Error::Divergence {
                limit: OVERFLOW_LIMIT,
            });
        }
        Ok(sum)
    }
}

/// One-shot evaluation of `D^alpha p` at `z` for `alpha` in `(0, 2)`.
pub fn frac_derivative_eval(p: &Polynomial, alpha: f64, z: Complex64) -> Result<Complex64> {
    if !(alpha > 0.0 && alpha < 2.0) {
        return Err(Error::DomainAlpha(alpha));
    }
    FractionalDerivative::new(p, alpha)?.eval(z)
}

/// One row of a derivative table. Failed evaluations keep their error.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivativeRow {
    pub alpha: f64,
    pub z: f64,
    pub value: Result<Complex64>,
}

/// Tabulates `D^alpha p` over the grid `alphas x zs` (real points), ordered
/// by `alpha` and then `z`. Orders in `[0, 2)` are accepted.
pub fn frac_derivative_table(p: &Polynomial, alphas: &[f64], zs: &[f64]) -> Vec<DerivativeRow> {
    let mut alphas = alphas.to_vec();
    let mut zs = zs.to_vec();
    alphas.sort_by(f64::total_cmp);
    zs.sort_by(f64::total_cmp);

    let mut rows = Vec::with_capacity(alphas.len() * zs.len());
    for &alpha in &alphas {
        let op = FractionalDerivative::new(p, alpha);
        for &z in &zs {
            let value = match &op {
                Ok(op) => op.eval(Complex64::new(z, 0.0)),
                Err(e) => Err(e.clone()),
            };
            rows.push(DerivativeRow { alpha, z, value });
        }
    }
    rows
}
