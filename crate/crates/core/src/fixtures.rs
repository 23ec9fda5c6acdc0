//! Three benchmark polynomials of degree 10, 11 and 12 with their
//! reference roots.
//!
//! Each reference row gives the order `alpha` that reached the root from the
//! benchmark's starting point, the root (to six decimals, truncated), the
//! residual and the step count reported with it. Coefficients are stored in
//! ascending order of power.

use num_complex::Complex64;

use crate::poly::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceRow {
    pub alpha: f64,
    pub re: f64,
    pub im: f64,
    pub residual: f64,
    pub iterations: usize,
}

impl ReferenceRow {
    pub fn root(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Benchmark {
    pub name: &'static str,
    /// Ascending coefficients.
    pub coeffs: &'static [f64],
    pub x0: f64,
    pub rows: &'static [ReferenceRow],
}

impl Benchmark {
    pub fn polynomial(&self) -> Polynomial {
        Polynomial::new(self.coeffs.to_vec()).expect("benchmark coefficients are valid")
    }

    pub fn x0(&self) -> Complex64 {
        Complex64::new(self.x0, 0.0)
    }
}

const fn row(alpha: f64, re: f64, im: f64, residual: f64, iterations: usize) -> ReferenceRow {
    ReferenceRow {
        alpha,
        re,
        im,
        residual,
        iterations,
    }
}

/// `52.85x^10 - 1.82x^9 + 12.71x^8 - 40.64x^7 - 56.83x^6 + 21.48x^5
///  + 85.24x^4 - 45.05x^3 - 77.63x^2 + 60.95x - 36.92`, from `x0 = 5`.
pub const DEGREE_10: Benchmark = Benchmark {
    name: "degree10",
    coeffs: &[
        -36.92, 60.95, -77.63, -45.05, 85.24, 21.48, -56.83, -40.64, 12.71, -1.82, 52.85,
    ],
    x0: 5.0,
    rows: &[
        row(0.8365, 0.259533, -0.524092, 5.723658e-15, 15),
        row(0.837, -0.164859, 1.335121, 1.136868e-13, 11),
        row(0.8375, 0.765933, -0.513472, 4.019436e-14, 16),
        row(0.838, 0.259533, 0.524092, 5.723658e-15, 12),
        row(0.8385, -0.87073, -0.67412, 5.684341e-14, 8),
        row(0.8395, 1.073912, 0.0, 1.611601e-12, 10),
        row(0.853, 0.765933, 0.513472, 4.019436e-14, 10),
        row(0.867, -0.87073, 0.67412, 5.684341e-14, 8),
        row(0.887, -0.164859, -1.335121, 0.0, 11),
        row(0.9425, -1.019227, 0.0, 1.604121e-11, 15),
    ],
};

/// `-63.77x^11 - 58.41x^10 + 56.42x^9 + 9.97x^8 - 47.7x^7 + 42.54x^6
///  - 18.59x^5 - 61.47x^4 + 12.72x^3 - 87.72x^2 - 45.02x - 57.91`, from `x0 = 6`.
pub const DEGREE_11: Benchmark = Benchmark {
    name: "degree11",
    coeffs: &[
        -57.91, -45.02, -87.72, 12.72, -61.47, -18.59, 42.54, -47.7, 9.97, 56.42, -58.41, -63.77,
    ],
    x0: 6.0,
    rows: &[
        row(0.832, -0.357569, 0.587152, 1.775142e-14, 11),
        row(0.8325, -1.109109, -0.552923, 5.518497e-13, 15),
        row(0.834, -0.357569, -0.587152, 1.775142e-14, 9),
        row(0.8375, -1.109109, 0.552923, 3.639754e-13, 8),
        row(0.8395, 1.046902, 0.376225, 8.987733e-14, 13),
        row(0.84, 0.553442, -0.802296, 4.728105e-12, 10),
        row(0.8475, 0.045183, 0.912959, 2.711491e-14, 9),
        row(0.85, 0.045183, -0.912959, 1.599115e-13, 7),
        row(0.8655, 1.046902, -0.376225, 8.987733e-14, 10),
        row(0.8685, -1.273648, -0.0, 2.620308e-11, 22),
        row(0.8985, 0.553442, 0.802296, 3.842847e-14, 13),
    ],
};

/// `11.59x^12 - 44.9x^11 - 79.07x^10 - 13.82x^9 - 6.1x^8 + 30.84x^7
///  + 11.18x^6 - 75.32x^5 + 19.02x^4 + 14.24x^3 + 40.76x^2 - 91.51x - 69.66`,
/// from `x0 = 7`.
///
/// The source prints the `x^8` to `x^5` terms without exponent markers; they
/// are read by position between the `x^9` and `x^4` terms.
pub const DEGREE_12: Benchmark = Benchmark {
    name: "degree12",
    coeffs: &[
        -69.66, -91.51, 40.76, 14.24, 19.02, -75.32, 11.18, 30.84, -6.1, -13.82, -79.07, -44.9,
        11.59,
    ],
    x0: 7.0,
    rows: &[
        row(0.8115, -1.270682, 0.308469, 7.54247e-13, 14),
        row(0.818, -0.544422, 0.79148, 5.276258e-14, 8),
        row(0.8295, -0.137293, -1.115048, 7.972582e-13, 15),
        row(0.8325, -1.270682, -0.308469, 1.066855e-12, 10),
        row(0.8345, -0.574246, 0.0, 3.906404e-11, 25),
        row(0.8505, 0.948221, -0.321524, 8.945239e-13, 9),
        row(0.866, -0.137293, 1.115048, 4.451005e-13, 15),
        row(0.8665, 0.948221, 0.321524, 1.435445e-13, 7),
        row(0.868, -0.544422, -0.79148, 5.276258e-14, 10),
        row(0.9755, 0.616376, -0.789694, 1.272329e-13, 16),
        row(1.0625, 0.616376, 0.789694, 1.237089e-13, 10),
        row(1.1435, 5.223874, 0.0, 0.0, 9),
    ],
};

pub const ALL: [Benchmark; 3] = [DEGREE_10, DEGREE_11, DEGREE_12];
