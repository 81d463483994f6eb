use fracint::{gamma, recip_gamma, Error};
use proptest::prelude::*;

/// Γ(x) = ∫ exp(x·u − e^u) du over the real line (substituting τ = e^u in the
/// Euler integral). The integrand is entire and decays doubly-exponentially
/// on the right, so the trapezoid rule converges geometrically.
fn euler_integral(x: f64) -> f64 {
    let (lo, hi) = (-40.0 / x - 10.0, 6.0);
    let steps = ((hi - lo) / 1e-3) as usize;
    let h = (hi - lo) / steps as f64;
    let f = |u: f64| (x * u - u.exp()).exp();
    let mut sum = 0.5 * (f(lo) + f(hi));
    for k in 1..steps {
        sum += f(lo + h * k as f64);
    }
    sum * h
}

#[test]
fn recurrence_on_dense_grid() {
    for k in 0..=1200 {
        let x = 0.5 + 9.5 * k as f64 / 1200.0;
        let (g1, g) = (gamma(x + 1.0).unwrap(), gamma(x).unwrap());
        assert!((g1 - x * g).abs() / g1 <= 1e-11, "x = {x}");
    }
}

#[test]
fn factorials() {
    let mut fact = 1.0f64;
    for n in 1..=12u32 {
        if n > 1 {
            fact *= (n - 1) as f64;
        }
        let g = gamma(n as f64).unwrap();
        assert!((g - fact).abs() / fact <= 1e-12, "n = {n}");
    }
}

#[test]
fn agrees_with_euler_integral() {
    for x in [0.5, 1.2, 2.5, 5.0] {
        let oracle = euler_integral(x);
        let g = gamma(x).unwrap();
        assert!(
            (g - oracle).abs() / oracle <= 1e-8,
            "x = {x}: {g} vs {oracle}"
        );
    }
}

#[test]
fn poles_and_domain() {
    for x in [0.0, -1.0, -2.0, -7.0, -3.0 + 1e-13] {
        assert!(matches!(gamma(x), Err(Error::Pole(_))), "x = {x}");
        assert_eq!(recip_gamma(x).unwrap(), 0.0);
    }
    for x in [f64::NAN, f64::INFINITY, f64::NEG_INFINITY] {
        assert!(gamma(x).is_err());
        assert!(recip_gamma(x).is_err());
    }
    assert!(matches!(gamma(200.0), Err(Error::Overflow(_))));
}

#[test]
fn negative_arguments_follow_reflection() {
    // Γ(−1/2) = −2√π
    let expected = -2.0 * std::f64::consts::PI.sqrt();
    assert!((gamma(-0.5).unwrap() - expected).abs() / expected.abs() < 1e-13);
    assert!(gamma(-1.5).unwrap() > 0.0);
    assert!(gamma(-2.5).unwrap() < 0.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn reflection(x in 1e-6f64..1.0 - 1e-6) {
        let v = gamma(x).unwrap() * gamma(1.0 - x).unwrap() * (std::f64::consts::PI * x).sin()
            / std::f64::consts::PI;
        prop_assert!((v - 1.0).abs() <= 1e-10, "x = {}, v = {}", x, v);
    }

    #[test]
    fn reciprocal(x in -20.0f64..150.0) {
        prop_assume!((x - x.round()).abs() > 1e-6 || x > 0.5);
        let product = recip_gamma(x).unwrap() * gamma(x).unwrap();
        prop_assert!((product - 1.0).abs() <= 1e-11, "x = {}", x);
    }

    #[test]
    fn recurrence(x in 0.5f64..10.0) {
        let (g1, g) = (gamma(x + 1.0).unwrap(), gamma(x).unwrap());
        prop_assert!((g1 - x * g).abs() / g1 <= 1e-11);
    }
}
