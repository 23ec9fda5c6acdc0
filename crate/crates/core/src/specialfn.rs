//! Real gamma, reciprocal gamma and principal-branch complex powers.
//!
//! These are the only transcendental primitives the fractional derivative
//! needs: `Gamma(m + 1)`, `1 / Gamma(m - alpha + 1)` and `z^(m - alpha)`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Distance from a non-positive integer at which gamma reports a pole.
pub const POLE_TOLERANCE: f64 = 1e-12;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Largest n with n! finite in f64.
const MAX_FACTORIAL: usize = 170;

/// Returns the nearest non-positive integer when `x` lies within
/// [`POLE_TOLERANCE`] of one.
fn nearby_pole(x: f64) -> Option<f64> {
    if x > POLE_TOLERANCE {
        return None;
    }
    let n = x.round();
    ((x - n).abs() <= POLE_TOLERANCE).then_some(n)
}

/// `sin(pi * x)` with exact argument reduction, so the result stays accurate
/// for large `|x|` and near integers.
fn sin_pi(x: f64) -> f64 {
    let mut r = x % 2.0;
    if r > 1.0 {
        r -= 2.0;
    } else if r < -1.0 {
        r += 2.0;
    }
    if r > 0.5 {
        r = 1.0 - r;
    } else if r < -0.5 {
        r = -1.0 - r;
    }
    (PI * r).sin()
}

fn factorial(n: usize) -> f64 {
    (2..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// Lanczos approximation, valid for `x >= 0.5`.
fn lanczos(x: f64) -> f64 {
    let x = x - 1.0;
    let series = LANCZOS_COEFFS[1..]
        .iter()
        .enumerate()
        .fold(LANCZOS_COEFFS[0], |acc, (i, c)| {
            acc + c / (x + (i + 1) as f64)
        });
    let t = x + LANCZOS_G + 0.5;
    // t^(x + 1/2) is split in two halves so it does not overflow before e^-t
    // brings it back down.
    let half = t.powf(0.5 * (x + 0.5));
    (2.0 * PI).sqrt() * half * (half * (-t).exp()) * series
}

/// The gamma function on the real line.
///
/// Positive integers up to 171 are returned as exact products; arguments
/// below 1/2 go through the reflection formula.
pub fn gamma(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Ok(f64::NAN);
    }
    if let Some(pole) = nearby_pole(x) {
        return Err(Error::PoleArgument(pole));
    }
    if x.fract() == 0.0 && x >= 1.0 && x <= (MAX_FACTORIAL + 1) as f64 {
        return Ok(factorial(x as usize - 1));
    }
    if x < 0.5 {
        Ok(PI / (sin_pi(x) * lanczos(1.0 - x)))
    } else {
        Ok(lanczos(x))
    }
}

/// `1 / Gamma(x)`, an entire function: exactly zero at the poles of gamma.
pub fn rgamma(x: f64) -> f64 {
    if nearby_pole(x).is_some() {
        return 0.0;
    }
    if x < 0.5 {
        // 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi
        return sin_pi(x) * lanczos(1.0 - x) / PI;
    }
    match gamma(x) {
        Ok(g) => 1.0 / g,
        Err(_) => 0.0,
    }
}

/// Principal argument in `(-pi, pi]`. A negative real with a signed zero
/// imaginary part maps to `pi` regardless of the sign of that zero.
pub fn principal_arg(z: Complex64) -> f64 {
    if z.im == 0.0 && z.re < 0.0 {
        PI
    } else {
        z.im.atan2(z.re)
    }
}

/// Principal-branch power `z^beta = exp(beta * (ln|z| + i Arg z))`.
///
/// Integer exponents are single-valued and evaluated by repeated
/// multiplication; positive reals stay on the real axis.
pub fn cpow(z: Complex64, beta: f64) -> Result<Complex64> {
    if z.re == 0.0 && z.im == 0.0 {
        return if beta > 0.0 {
            Ok(Complex64::new(0.0, 0.0))
        } else {
            Err(Error::SingularPower(beta))
        };
    }
    if beta == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    if beta.fract() == 0.0 && beta.abs() <= i32::MAX as f64 {
        return Ok(z.powi(beta as i32));
    }
    if z.im == 0.0 && z.re > 0.0 {
        return Ok(Complex64::new(z.re.powf(beta), 0.0));
    }
    let modulus = z.re.hypot(z.im).powf(beta);
    let angle = beta * principal_arg(z);
    Ok(Complex64::from_polar(modulus, angle))
}
