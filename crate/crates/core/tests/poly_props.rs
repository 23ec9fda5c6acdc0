use fracroot_core::{frac_derivative_eval, Complex64, FractionalDerivative, Polynomial};
use proptest::prelude::*;

fn coeffs(max_degree: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-10.0f64..10.0, 1..=max_degree + 1)
}

/// Points with modulus in [0.1, 10], kept a little off the negative real axis
/// so conjugation does not cross the branch cut.
fn point() -> impl Strategy<Value = Complex64> {
    (0.1f64..10.0, -3.1f64..3.1).prop_map(|(r, theta)| Complex64::from_polar(r, theta))
}

fn order() -> impl Strategy<Value = f64> {
    0.01f64..1.99
}

fn close(a: Complex64, b: Complex64, scale: f64, tol: f64) -> bool {
    (a - b).norm() <= tol * scale.max(1.0)
}

/// Sum of term magnitudes: the natural scale for rounding in the sum.
fn magnitude(p: &Polynomial, alpha: f64, z: Complex64) -> f64 {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(m, c)| {
            let mut unit = vec![0.0; m + 1];
            unit[m] = c.abs();
            let q = Polynomial::new(unit).unwrap();
            FractionalDerivative::new(&q, alpha)
                .unwrap()
                .eval(z)
                .unwrap()
                .norm()
        })
        .sum()
}

proptest! {
    #[test]
    fn linearity(a_c in coeffs(12), b_c in coeffs(12), a in -10.0f64..10.0, b in -10.0f64..10.0,
                 alpha in order(), z in point()) {
        let n = a_c.len().max(b_c.len());
        let mut combo = vec![0.0; n];
        for (m, c) in a_c.iter().enumerate() { combo[m] += a * c; }
        for (m, c) in b_c.iter().enumerate() { combo[m] += b * c; }
        let p = Polynomial::trimmed(a_c.clone());
        let q = Polynomial::trimmed(b_c.clone());
        let pq = Polynomial::trimmed(combo);
        prop_assume!(p.is_ok() && q.is_ok() && pq.is_ok());
        let (p, q, pq) = (p.unwrap(), q.unwrap(), pq.unwrap());

        let lhs = frac_derivative_eval(&pq, alpha, z).unwrap();
        let rhs = a * frac_derivative_eval(&p, alpha, z).unwrap()
            + b * frac_derivative_eval(&q, alpha, z).unwrap();
        let scale = a.abs() * magnitude(&p, alpha, z) + b.abs() * magnitude(&q, alpha, z);
        prop_assert!(close(lhs, rhs, scale, 1e-10), "{lhs} vs {rhs}");
    }

    #[test]
    fn order_one_is_classical(c in coeffs(12), z in point()) {
        let p = Polynomial::trimmed(c).unwrap();
        let classical = p.derivative().eval(z);
        let frac = frac_derivative_eval(&p, 1.0, z).unwrap();
        prop_assert!((frac - classical).norm() / (1.0 + classical.norm()) <= 1e-10);
    }

    #[test]
    fn continuous_in_order(c in coeffs(12), alpha in 0.05f64..1.95, z in point()) {
        let p = Polynomial::trimmed(c).unwrap();
        let h = 1e-6;
        let d0 = frac_derivative_eval(&p, alpha, z).unwrap();
        let d1 = frac_derivative_eval(&p, alpha + h, z).unwrap();
        // d/dalpha of each term is bounded by its magnitude times
        // |ln z| + |digamma(m - alpha + 1)|, both below 40 on this domain.
        let bound = 40.0 * magnitude(&p, alpha, z).max(1.0) * h;
        prop_assert!((d1 - d0).norm() <= bound, "{} > {}", (d1 - d0).norm(), bound);
    }

    #[test]
    fn real_on_positive_axis(c in coeffs(12), alpha in order(), x in 0.1f64..10.0) {
        let p = Polynomial::trimmed(c).unwrap();
        let v = frac_derivative_eval(&p, alpha, Complex64::new(x, 0.0)).unwrap();
        prop_assert!(v.im.abs() <= 1e-12);
    }

    #[test]
    fn conjugate_symmetry(c in coeffs(12), alpha in order(), z in point()) {
        let p = Polynomial::trimmed(c).unwrap();
        let v = frac_derivative_eval(&p, alpha, z).unwrap();
        let w = frac_derivative_eval(&p, alpha, z.conj()).unwrap();
        prop_assert!(close(w, v.conj(), magnitude(&p, alpha, z), 1e-12));
    }
}
