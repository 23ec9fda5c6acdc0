//! Durand-Kerner reference roots, used to cross-check the sweep.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Seed base for the initial guesses `SEED^j`: neither real nor on the unit
/// circle, so no two guesses coincide and none is symmetric.
const SEED: Complex64 = Complex64::new(0.4, 0.9);

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleResult {
    /// All roots, ascending by real part and then imaginary part.
    pub roots: Vec<Complex64>,
    /// Largest `|p(root)|` over the roots.
    pub max_residual: f64,
    pub converged: bool,
}

/// All roots of `p` by simultaneous Weierstrass (Durand-Kerner) iteration.
///
/// Stops when every correction in a sweep has modulus `<= tol`, or after
/// `max_iter` sweeps with `converged = false`.
pub fn durand_kerner(p: &Polynomial, tol: f64, max_iter: usize) -> Result<OracleResult> {
    let n = p.degree();
    if n < 1 {
        return Err(Error::InvalidPolynomial(
            "degree must be at least 1 to search for roots".into(),
        ));
    }
    let lead = p.coeffs()[n];
    let monic = Polynomial::new(p.coeffs().iter().map(|c| c / lead).collect())?;

    let mut roots: Vec<Complex64> = (0..n).map(|j| SEED.powi(j as i32)).collect();
    let mut converged = false;
    for _ in 0..max_iter {
        let mut largest = 0.0f64;
        for j in 0..n {
            let zj = roots[j];
            let denom = roots
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != j)
                .fold(Complex64::new(1.0, 0.0), |acc, (_, zk)| acc * (zj - zk));
            if denom == Complex64::new(0.0, 0.0) {
                continue;
            }
            let delta = monic.eval(zj) / denom;
            if delta.is_finite() {
                roots[j] = zj - delta;
                largest = largest.max(delta.norm());
            }
        }
        if largest <= tol {
            converged = true;
            break;
        }
    }

    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let max_residual = roots.iter().map(|z| p.eval(*z).norm()).fold(0.0, f64::max);
    Ok(OracleResult {
        roots,
        max_residual,
        converged,
    })
}

/// Ascending coefficients of `prod (x - r)` over `roots`.
pub fn monic_from_roots(roots: &[Complex64]) -> Vec<Complex64> {
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    for r in roots {
        let mut next = vec![Complex64::new(0.0, 0.0); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * r;
        }
        coeffs = next;
    }
    coeffs
}
