//! General Riemann-Stieltjes integrals and Cavalieri regions, independent of
//! the fractional kernel.

use crate::error::{Error, Result};
use crate::integrand::RealFn;

use super::gauss_kronrod::{integrate, Tolerance, DEFAULT_BUDGET};
use super::{Method, QuadratureResult};

const BISECTION_STEPS: usize = 200;

/// Left Riemann-Stieltjes sum `Σ f(x_i)[g(x_(i+1)) − g(x_i)]` over `n`
/// uniform steps of `[lower, upper]`.
pub fn riemann_stieltjes_sum(
    f: impl Fn(f64) -> f64,
    g: impl Fn(f64) -> f64,
    lower: f64,
    upper: f64,
    n: usize,
) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidArgument("sum needs n >= 1".into()));
    }
    let step = (upper - lower) / n as f64;
    let mut g_prev = g(lower);
    let mut total = 0.0;
    for i in 0..n {
        let x = lower + step * i as f64;
        let x_next = if i + 1 == n { upper } else { x + step };
        let g_next = g(x_next);
        total += f(x) * (g_next - g_prev);
        g_prev = g_next;
    }
    Ok(total)
}

/// `∫ f dg = ∫ f g' dx` for a differentiable integrator.
pub fn riemann_stieltjes_integral(
    f: impl Fn(f64) -> f64,
    g_prime: impl Fn(f64) -> f64,
    lower: f64,
    upper: f64,
) -> Result<QuadratureResult> {
    let est = integrate(
        |x| f(x) * g_prime(x),
        lower,
        upper,
        Tolerance::default(),
        DEFAULT_BUDGET,
    )?;
    Ok(QuadratureResult::adaptive(est, 1.0, Method::Stieltjes))
}

/// The region under `f` between the curve `x = a(y)` and its translate
/// `x = a(y) + (b − a)`, where `a = a(0)` and `b = b(0)`.
///
/// The integrator is `g(x) = x − a(f(x)) + a` and `h = g⁻¹`; `h` is found by
/// bisection on `domain`, on which `g` must be increasing.
#[derive(Clone)]
pub struct CavalieriRegion {
    f: RealFn,
    a_curve: RealFn,
    a: f64,
    b: f64,
    domain: (f64, f64),
}

impl CavalieriRegion {
    pub fn new(f: RealFn, a_curve: RealFn, b: f64, domain: (f64, f64)) -> Result<Self> {
        let a = a_curve(0.0);
        if !(a < b) || !(domain.0 < domain.1) {
            return Err(Error::InvalidArgument(format!(
                "need a(0) < b and a non-empty domain, got a={a}, b={b}, domain={domain:?}"
            )));
        }
        let region = Self {
            f,
            a_curve,
            a,
            b,
            domain,
        };
        let (lo, hi) = (region.integrator(domain.0), region.integrator(domain.1));
        if !(lo <= a && b <= hi) {
            return Err(Error::InvalidArgument(format!(
                "integrator maps the domain onto [{lo}, {hi}], which misses [{a}, {b}]"
            )));
        }
        Ok(region)
    }

    /// `g(x) = x − a(f(x)) + a`.
    pub fn integrator(&self, x: f64) -> f64 {
        x - (self.a_curve)((self.f)(x)) + self.a
    }

    /// `h = g⁻¹`.
    pub fn inverse(&self, x: f64) -> f64 {
        let (mut lo, mut hi) = self.domain;
        for _ in 0..BISECTION_STEPS {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.integrator(mid) < x {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// `(a', b') = (h(a), h(b))`, the Stieltjes integration limits.
    pub fn stieltjes_limits(&self) -> (f64, f64) {
        (self.inverse(self.a), self.inverse(self.b))
    }

    /// Lower Cavalieri sum over `n` equal strips of `[a, b]`.
    pub fn lower_sum(&self, n: usize) -> Result<f64> {
        if n == 0 {
            return Err(Error::InvalidArgument("sum needs n >= 1".into()));
        }
        let step = (self.b - self.a) / n as f64;
        Ok((0..n)
            .map(|i| (self.f)(self.inverse(self.a + step * i as f64)) * step)
            .sum())
    }

    /// Area as the Riemann integral `∫_a^b f(h(x)) dx`.
    pub fn area(&self) -> Result<QuadratureResult> {
        let est = integrate(
            |x| (self.f)(self.inverse(x)),
            self.a,
            self.b,
            Tolerance::default(),
            DEFAULT_BUDGET,
        )?;
        Ok(QuadratureResult::adaptive(est, 1.0, Method::Cavalieri))
    }

    /// Area as the left Riemann-Stieltjes sum `∫_(a')^(b') f dg` with `n` steps.
    pub fn stieltjes_sum(&self, n: usize) -> Result<f64> {
        let (lo, hi) = self.stieltjes_limits();
        riemann_stieltjes_sum(|x| (self.f)(x), |x| self.integrator(x), lo, hi, n)
    }
}

/// Recovers the strip curve from a known integrator:
/// `a(y) = f⁻¹(y) − g(f⁻¹(y)) + g(a')`.
pub fn strip_curve_from_integrator(
    f_inverse: impl Fn(f64) -> f64,
    g: impl Fn(f64) -> f64,
    a_prime: f64,
    y: f64,
) -> f64 {
    let x = f_inverse(y);
    x - g(x) + g(a_prime)
}
