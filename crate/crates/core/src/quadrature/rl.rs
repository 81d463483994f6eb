use crate::error::{Error, Result};
use crate::integrand::Integrand;
use crate::special::gamma;
use crate::transform::{Horizon, Order, TransformPair};

use super::gauss_kronrod::{integrate, Tolerance, DEFAULT_BUDGET};
use super::{Method, Partition, Placement, QuadratureResult};

pub const MIN_DIRECT_BUDGET: usize = 64;

fn scaled(err: Error, scale: f64) -> Error {
    match err {
        Error::BudgetExhausted {
            best,
            error_estimate,
            evaluations,
        } => Error::BudgetExhausted {
            best: best * scale,
            error_estimate: error_estimate * scale.abs(),
            evaluations,
        },
        other => other,
    }
}

fn positive_order(alpha: Order) -> Result<f64> {
    if alpha.is_identity() {
        return Err(Error::DegenerateOrder);
    }
    Ok(alpha.value())
}

/// Riemann-Liouville integral from its defining kernel form.
///
/// Substituting `u = (t−τ)^α` turns `(t−τ)^(α−1) dτ` into `du/α`, so
/// `I^α f(t) = (1/Γ(α+1)) ∫₀^(t^α) f(t − u^(1/α)) du` with a bounded
/// integrand.
pub fn direct_rl(
    f: &Integrand,
    alpha: Order,
    t: Horizon,
    budget: usize,
) -> Result<QuadratureResult> {
    direct_rl_with(f, alpha, t, budget, Tolerance::default())
}

pub fn direct_rl_with(
    f: &Integrand,
    alpha: Order,
    t: Horizon,
    budget: usize,
    tol: Tolerance,
) -> Result<QuadratureResult> {
    let a = positive_order(alpha)?;
    if budget < MIN_DIRECT_BUDGET {
        return Err(Error::InvalidArgument(format!(
            "budget {budget} below minimum {MIN_DIRECT_BUDGET}"
        )));
    }
    let t = t.value();
    let scale = 1.0 / gamma(a + 1.0)?;
    let upper = t.powf(a);
    let inv = 1.0 / a;
    let est = integrate(
        |u: f64| f.eval((t - u.powf(inv)).max(0.0)),
        0.0,
        upper,
        tol,
        budget,
    )
    .map_err(|e| scaled(e, scale))?;
    Ok(QuadratureResult::adaptive(est, scale, Method::Direct))
}

/// The kernel form integrated as written, in `s = t − τ`, letting the
/// adaptive rule resolve the `s^(α−1)` singularity by bisection. Slower and
/// less accurate than [`direct_rl`]; kept as an independent cross-check.
pub fn direct_rl_raw(
    f: &Integrand,
    alpha: Order,
    t: Horizon,
    budget: usize,
    tol: Tolerance,
) -> Result<QuadratureResult> {
    let a = positive_order(alpha)?;
    let t = t.value();
    let scale = 1.0 / gamma(a)?;
    let est = integrate(
        |s: f64| s.powf(a - 1.0) * f.eval((t - s).max(0.0)),
        0.0,
        t,
        tol,
        budget,
    )
    .map_err(|e| scaled(e, scale))?;
    Ok(QuadratureResult::adaptive(est, scale, Method::Direct))
}

/// Plain `∫₀ᵗ f`.
pub fn plain_integral(f: &Integrand, t: Horizon, budget: usize) -> Result<QuadratureResult> {
    let est = integrate(|x| f.eval(x), 0.0, t.value(), Tolerance::default(), budget)?;
    Ok(QuadratureResult::adaptive(est, 1.0, Method::Direct))
}

/// The singularity-free Riemann form `∫₀^(t^α/Γ(α+1)) f(h(x)) dx`.
pub fn transformed_riemann(
    f: &Integrand,
    pair: &TransformPair,
    budget: usize,
) -> Result<QuadratureResult> {
    transformed_riemann_with(f, pair, budget, Tolerance::default())
}

pub fn transformed_riemann_with(
    f: &Integrand,
    pair: &TransformPair,
    budget: usize,
    tol: Tolerance,
) -> Result<QuadratureResult> {
    let width = pair.width();
    let est = integrate(
        |x: f64| {
            f.eval(
                pair.h(x.clamp(0.0, width))
                    .expect("clamped into h's domain"),
            )
        },
        0.0,
        width,
        tol,
        budget,
    )?;
    Ok(QuadratureResult::adaptive(est, 1.0, Method::Transformed))
}

/// Left-endpoint sum with a free error estimate from the coarser sum on
/// every other point (`err(S_n) ≈ S_n − S_(n/2)` for a first-order rule).
fn left_sum(heights: &[f64], increments: &[f64], method: Method) -> QuadratureResult {
    let n = increments.len();
    let value: f64 = heights.iter().zip(increments).map(|(f, d)| f * d).sum();
    let error_estimate = if n >= 2 {
        let half = n / 2;
        let coarse: f64 = (0..half)
            .map(|k| heights[2 * k] * (increments[2 * k] + increments[2 * k + 1]))
            .sum::<f64>()
            + if n % 2 == 1 {
                heights[n - 1] * increments[n - 1]
            } else {
                0.0
            };
        (value - coarse).abs()
    } else {
        value.abs()
    };
    QuadratureResult {
        value,
        error_estimate,
        method,
        evaluations: n,
        n: Some(n),
    }
}

/// `Σ f(x²_i)·[g(x²_(i+1)) − g(x²_i)]` on equal-width strips of the
/// transformed axis.
pub fn stieltjes_sum(f: &Integrand, pair: &TransformPair, n: usize) -> Result<QuadratureResult> {
    stieltjes_sum_on(f, pair, &Partition::new(pair, n, Placement::default())?)
}

pub fn stieltjes_sum_on(
    f: &Integrand,
    pair: &TransformPair,
    partition: &Partition,
) -> Result<QuadratureResult> {
    let x2 = partition.companion();
    let g: Vec<f64> = x2.iter().map(|&tau| pair.g_unchecked(tau)).collect();
    let heights: Vec<f64> = x2[..x2.len() - 1].iter().map(|&tau| f.eval(tau)).collect();
    let increments: Vec<f64> = g.windows(2).map(|w| w[1] - w[0]).collect();
    Ok(left_sum(&heights, &increments, Method::Stieltjes))
}

/// Lower Cavalieri sum `Σ f(x²_i)·Δx¹_i` on equal-width strips.
pub fn cavalieri_sum(f: &Integrand, pair: &TransformPair, n: usize) -> Result<QuadratureResult> {
    cavalieri_sum_on(f, pair, &Partition::new(pair, n, Placement::default())?)
}

pub fn cavalieri_sum_on(
    f: &Integrand,
    _pair: &TransformPair,
    partition: &Partition,
) -> Result<QuadratureResult> {
    let x1 = partition.transformed();
    let x2 = partition.companion();
    let heights: Vec<f64> = x2[..x2.len() - 1].iter().map(|&tau| f.eval(tau)).collect();
    let increments: Vec<f64> = x1.windows(2).map(|w| w[1] - w[0]).collect();
    Ok(left_sum(&heights, &increments, Method::Cavalieri))
}

/// n-th antiderivative based at 0 via the single polynomial-kernel integral
/// `(1/(n−1)!) ∫₀ᵗ (t−τ)^(n−1) f(τ) dτ`.
pub fn cauchy_repeated(f: &Integrand, n: u32, t: Horizon) -> Result<QuadratureResult> {
    cauchy_repeated_with(f, n, t, DEFAULT_BUDGET, Tolerance::default())
}

pub fn cauchy_repeated_with(
    f: &Integrand,
    n: u32,
    t: Horizon,
    budget: usize,
    tol: Tolerance,
) -> Result<QuadratureResult> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "repeated integration needs n >= 1".into(),
        ));
    }
    let t = t.value();
    let scale = 1.0 / gamma(n as f64)?;
    let power = (n - 1) as i32;
    let est = integrate(
        |tau: f64| (t - tau).powi(power) * f.eval(tau),
        0.0,
        t,
        tol,
        budget,
    )
    .map_err(|e| scaled(e, scale))?;
    Ok(QuadratureResult::adaptive(est, scale, Method::Direct))
}

/// n-fold nested integral by repeated cumulative trapezoid on a uniform grid
/// of `resolution` steps. Brute force, for validating [`cauchy_repeated`].
pub fn nested_integral_oracle(f: &Integrand, n: u32, t: Horizon, resolution: usize) -> Result<f64> {
    if !(1..=3).contains(&n) {
        return Err(Error::UnsupportedOrder(n));
    }
    if resolution == 0 {
        return Err(Error::InvalidArgument("resolution must be >= 1".into()));
    }
    let t = t.value();
    let step = t / resolution as f64;
    let mut level: Vec<f64> = (0..=resolution).map(|i| f.eval(step * i as f64)).collect();
    for _ in 0..n {
        let mut acc = 0.0;
        let mut next = Vec::with_capacity(level.len());
        next.push(0.0);
        for w in level.windows(2) {
            acc += 0.5 * step * (w[0] + w[1]);
            next.push(acc);
        }
        level = next;
    }
    Ok(level[resolution])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transform::make_transform;

    fn order(a: f64) -> Order {
        Order::new(a).unwrap()
    }

    fn horizon(t: f64) -> Horizon {
        Horizon::new(t).unwrap()
    }

    fn pair(a: f64, t: f64) -> TransformPair {
        make_transform(order(a), horizon(t)).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    const FOUR_OVER_THREE_ROOT_PI: f64 = 0.752_252_778_063_675_049_264;

    #[test]
    fn direct_examples() {
        let r = direct_rl(
            &Integrand::identity(),
            order(0.5),
            horizon(1.0),
            DEFAULT_BUDGET,
        )
        .unwrap();
        assert!(rel(r.value, FOUR_OVER_THREE_ROOT_PI) < 1e-10);
        assert_eq!(r.method, Method::Direct);
        assert!(r.evaluations > 0 && r.error_estimate.is_finite());

        let r = direct_rl(
            &Integrand::identity(),
            order(1.0),
            horizon(2.0),
            DEFAULT_BUDGET,
        )
        .unwrap();
        assert!(rel(r.value, 2.0) < 1e-12);

        // √π / (2Γ(19/10)) · 10^(9/10), mpmath
        let r = direct_rl(
            &Integrand::sqrt(),
            order(0.4),
            horizon(10.0),
            DEFAULT_BUDGET,
        )
        .unwrap();
        assert!(rel(r.value, 7.319_401_936_580_790_929) < 1e-9);
    }

    #[test]
    fn direct_rejects_bad_input() {
        let f = Integrand::identity();
        assert_eq!(
            direct_rl(&f, order(0.0), horizon(1.0), 1000),
            Err(Error::DegenerateOrder)
        );
        assert!(matches!(
            direct_rl(&f, order(0.5), horizon(1.0), 10),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn direct_budget_exhaustion_carries_scaled_best() {
        let wild = Integrand::new("wild", |x: f64| (50.0 * x).sin() * (1.0 / (x + 1e-3)).cos());
        match direct_rl(&wild, order(0.3), horizon(5.0), 64) {
            Err(Error::BudgetExhausted { best, .. }) => assert!(best.is_finite()),
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn raw_kernel_cross_check() {
        let tol = Tolerance {
            abs: 1e-9,
            rel: 1e-9,
        };
        for &a in &[0.3, 0.7] {
            let f = Integrand::identity();
            let raw = direct_rl_raw(&f, order(a), horizon(3.0), 200_000, tol).unwrap();
            let sub = direct_rl(&f, order(a), horizon(3.0), DEFAULT_BUDGET).unwrap();
            assert!(
                rel(raw.value, sub.value) < 1e-7,
                "alpha={a}: {} vs {}",
                raw.value,
                sub.value
            );
        }
    }

    #[test]
    fn transformed_examples() {
        let f = Integrand::identity();
        let r = transformed_riemann(&f, &pair(0.5, 1.0), DEFAULT_BUDGET).unwrap();
        assert!(rel(r.value, FOUR_OVER_THREE_ROOT_PI) < 1e-9);
        assert_eq!(r.method, Method::Transformed);
        let r = transformed_riemann(&f, &pair(1.0, 3.0), DEFAULT_BUDGET).unwrap();
        assert!(rel(r.value, 4.5) < 1e-12);
        // 25/(6Γ(1/5)) · 10^(6/5), mpmath
        let r = transformed_riemann(&f, &pair(0.2, 10.0), DEFAULT_BUDGET).unwrap();
        assert!(rel(r.value, 14.384_549_005_654_238_389_5) < 1e-9);
    }

    #[test]
    fn sum_examples() {
        let f = Integrand::identity();
        let s = stieltjes_sum(&f, &pair(1.0, 2.0), 100_000).unwrap();
        assert!((s.value - 2.0).abs() < 1e-4);
        assert_eq!(s.n, Some(100_000));
        let s = stieltjes_sum(&f, &pair(0.5, 1.0), 100_000).unwrap();
        assert!(rel(s.value, FOUR_OVER_THREE_ROOT_PI) < 1e-4);
        let c = cavalieri_sum(&f, &pair(1.0, 2.0), 100_000).unwrap();
        assert!((c.value - 2.0).abs() < 1e-4);
        // √π/(2Γ(17/10)) · 10^(7/10), mpmath
        let c = cavalieri_sum(&Integrand::sqrt(), &pair(0.2, 10.0), 100_000).unwrap();
        assert!(rel(c.value, 4.888_253_219_614_686_981) < 1e-3);
        assert!(stieltjes_sum(&f, &pair(0.5, 1.0), 0).is_err());
    }

    #[test]
    fn sum_error_estimate_tracks_true_error() {
        let f = Integrand::identity();
        let s = cavalieri_sum(&f, &pair(0.5, 1.0), 4000).unwrap();
        let truth = (s.value - FOUR_OVER_THREE_ROOT_PI).abs();
        assert!(s.error_estimate > 0.5 * truth && s.error_estimate < 2.0 * truth);
    }

    #[test]
    fn single_strip_sums() {
        // one strip of height f(0) = 0
        let s = cavalieri_sum(&Integrand::identity(), &pair(0.5, 1.0), 1).unwrap();
        assert_eq!(s.value, 0.0);
        assert_eq!(s.evaluations, 1);
    }

    #[test]
    fn uniform_tau_partition_converges_too() {
        let f = Integrand::identity();
        let p = pair(0.5, 1.0);
        let part = Partition::new(&p, 100_000, Placement::UniformTau).unwrap();
        let s = stieltjes_sum_on(&f, &p, &part).unwrap();
        let c = cavalieri_sum_on(&f, &p, &part).unwrap();
        assert!(rel(s.value, FOUR_OVER_THREE_ROOT_PI) < 1e-3);
        assert!(rel(s.value, c.value) < 1e-12);
    }

    #[test]
    fn cauchy_examples() {
        let f = Integrand::identity();
        assert!(
            rel(
                cauchy_repeated(&f, 2, horizon(1.0)).unwrap().value,
                1.0 / 6.0
            ) < 1e-12
        );
        assert!(rel(cauchy_repeated(&f, 1, horizon(2.0)).unwrap().value, 2.0) < 1e-12);
        let sq = Integrand::new("tau^2", |x| x * x);
        assert!(
            rel(
                cauchy_repeated(&sq, 3, horizon(1.0)).unwrap().value,
                1.0 / 60.0
            ) < 1e-12
        );
        assert!(cauchy_repeated(&f, 0, horizon(1.0)).is_err());
    }

    #[test]
    fn nested_oracle_examples() {
        let one = Integrand::new("one", |_| 1.0);
        let id = Integrand::identity();
        let h = horizon(1.0);
        assert!((nested_integral_oracle(&id, 2, h, 10_000).unwrap() - 1.0 / 6.0).abs() < 1e-6);
        assert!((nested_integral_oracle(&one, 2, h, 10_000).unwrap() - 0.5).abs() < 1e-12);
        assert!((nested_integral_oracle(&id, 3, h, 10_000).unwrap() - 1.0 / 24.0).abs() < 1e-6);
        assert_eq!(
            nested_integral_oracle(&id, 4, h, 100),
            Err(Error::UnsupportedOrder(4))
        );
        assert_eq!(
            nested_integral_oracle(&id, 0, h, 100),
            Err(Error::UnsupportedOrder(0))
        );
    }
}
