use std::f64::consts::PI;

use fracroot_core::specialfn::{principal_arg, POLE_TOLERANCE};
use fracroot_core::{cpow, gamma, rgamma, Complex64};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

/// 1000 points in (-10, 10) at least 1e-3 away from every integer.
fn off_integer_sample() -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut out = Vec::with_capacity(1000);
    while out.len() < 1000 {
        let x: f64 = rng.gen_range(-10.0..10.0);
        if (x - x.round()).abs() > 1e-3 {
            out.push(x);
        }
    }
    out
}

#[test]
fn reflection_formula_holds() {
    for x in off_integer_sample() {
        let v = gamma(x).unwrap() * gamma(1.0 - x).unwrap() * (PI * x).sin() / PI;
        assert!((v - 1.0).abs() <= 1e-10, "x = {x}, product = {v}");
    }
}

#[test]
fn recurrence_holds() {
    for x in off_integer_sample() {
        let lhs = gamma(x + 1.0).unwrap();
        let rhs = x * gamma(x).unwrap();
        assert!(rel(lhs, rhs) <= 1e-11, "x = {x}");
    }
}

#[test]
fn reciprocal_matches_gamma() {
    for x in off_integer_sample() {
        let v = rgamma(x) * gamma(x).unwrap();
        assert!((v - 1.0).abs() <= 1e-11, "x = {x}");
    }
    for k in 0..30 {
        assert_eq!(rgamma(-(k as f64)), 0.0);
    }
}

#[test]
fn gamma_matches_factorials_and_half_integers_on_range() {
    // Exact references: n! by products, Gamma(n + 1/2) by the duplication
    // product, extended to negatives by the recurrence.
    let mut fact = 1.0;
    for n in 1..=20 {
        fact *= n as f64;
        assert_eq!(gamma(n as f64 + 1.0).unwrap(), fact);
    }
    let mut half = PI.sqrt();
    for n in 0..20 {
        let x = n as f64 + 0.5;
        assert!(rel(gamma(x).unwrap(), half) <= 1e-12, "x = {x}");
        half *= x;
    }
    let mut neg = PI.sqrt();
    for n in 1..=20 {
        let x = 0.5 - n as f64;
        neg /= x;
        assert!(rel(gamma(x).unwrap(), neg) <= 1e-12, "x = {x}");
    }
    assert!(gamma(-4.0 + POLE_TOLERANCE / 2.0).is_err());
}

#[test]
fn branch_continuity_from_above_negative_axis() {
    for &beta in &[0.3, 0.5, 0.84, 1.5, -0.9] {
        let mut previous_gap = f64::INFINITY;
        for k in 1..12 {
            let z = Complex64::new(-2.0, 10f64.powi(-k));
            let gap = (principal_arg(cpow(z, beta).unwrap()) - wrap(beta * PI)).abs();
            assert!(gap <= previous_gap + 1e-15);
            previous_gap = gap;
        }
        assert!(previous_gap < 1e-10, "beta = {beta}");
        let on_axis = cpow(Complex64::new(-2.0, 0.0), beta).unwrap();
        assert!((principal_arg(on_axis) - wrap(beta * PI)).abs() < 1e-12);
    }
}

fn wrap(theta: f64) -> f64 {
    let mut t = theta;
    while t > PI {
        t -= 2.0 * PI;
    }
    while t <= -PI {
        t += 2.0 * PI;
    }
    t
}

fn nonzero_complex() -> impl Strategy<Value = Complex64> {
    (-50.0f64..50.0, -50.0f64..50.0)
        .prop_filter("nonzero", |(re, im)| re.hypot(*im) > 1e-3)
        .prop_map(|(re, im)| Complex64::new(re, im))
}

proptest! {
    #[test]
    fn power_one_is_identity(z in nonzero_complex()) {
        let w = cpow(z, 1.0).unwrap();
        prop_assert!((w - z).norm() <= 4.0 * f64::EPSILON * z.norm());
    }

    #[test]
    fn power_inverts_on_principal_strip(z in nonzero_complex(), beta in 0.2f64..3.0) {
        prop_assume!((beta * z.arg()).abs() < PI - 1e-6);
        let back = cpow(cpow(z, beta).unwrap(), 1.0 / beta).unwrap();
        prop_assert!((back - z).norm() <= 1e-10 * (1.0 + z.norm()));
    }

    #[test]
    fn power_modulus_and_argument(z in nonzero_complex(), beta in -2.5f64..2.5) {
        let w = cpow(z, beta).unwrap();
        prop_assert!(rel(w.norm(), z.norm().powf(beta)) <= 1e-13);
        if beta.fract() != 0.0 {
            let turns = (principal_arg(w) - beta * principal_arg(z)) / (2.0 * PI);
            prop_assert!((turns - turns.round()).abs() < 1e-12);
        }
    }
}
