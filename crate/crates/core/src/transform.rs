//! The integrator `g(τ) = (t^α − (t−τ)^α)/Γ(α+1)` that turns the
//! Riemann-Liouville integral into a Riemann-Stieltjes integral, its inverse
//! `h`, and the strip-boundary curves `a(y)`, `b(y)` of the equivalent
//! Cavalieri integral.

use crate::error::{Error, Result};
use crate::integrand::Integrand;
use crate::special::gamma;

/// Negative radicand residue in `h` tolerated and clamped to zero.
pub const RADICAND_TOLERANCE: f64 = 1e-12;

/// Fractional order α ∈ [0, 1]. Zero is the identity operator.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Order(f64);

impl Order {
    pub fn new(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || !(0.0..=1.0).contains(&alpha) {
            return Err(Error::InvalidOrder(alpha));
        }
        Ok(Self(alpha))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0.0
    }
}

/// Upper integration limit `t > 0`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Horizon(f64);

impl Horizon {
    pub fn new(t: f64) -> Result<Self> {
        if !t.is_finite() || t <= 0.0 {
            return Err(Error::InvalidHorizon(t));
        }
        Ok(Self(t))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// `g_t^α` and its inverse `h_t^α` for a fixed `(α, t)`, `α > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformPair {
    order: Order,
    horizon: Horizon,
    gamma_alpha_plus_one: f64,
    t_pow_alpha: f64,
}

pub fn make_transform(order: Order, horizon: Horizon) -> Result<TransformPair> {
    TransformPair::new(order, horizon)
}

impl TransformPair {
    pub fn new(order: Order, horizon: Horizon) -> Result<Self> {
        if order.is_identity() {
            return Err(Error::DegenerateOrder);
        }
        let alpha = order.value();
        Ok(Self {
            order,
            horizon,
            gamma_alpha_plus_one: gamma(alpha + 1.0)?,
            t_pow_alpha: horizon.value().powf(alpha),
        })
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn horizon(&self) -> Horizon {
        self.horizon
    }

    pub fn alpha(&self) -> f64 {
        self.order.value()
    }

    pub fn t(&self) -> f64 {
        self.horizon.value()
    }

    pub fn gamma_alpha_plus_one(&self) -> f64 {
        self.gamma_alpha_plus_one
    }

    /// `g(t) = t^α/Γ(α+1)`: the length of the transformed interval and the
    /// constant strip width `b(y) − a(y)`.
    pub fn width(&self) -> f64 {
        self.t_pow_alpha / self.gamma_alpha_plus_one
    }

    pub fn g(&self, tau: f64) -> Result<f64> {
        let t = self.t();
        if !(0.0..=t).contains(&tau) {
            return Err(Error::Domain(format!("g: tau = {tau} outside [0, {t}]")));
        }
        Ok(self.g_unchecked(tau))
    }

    /// `g` without the domain check; `tau` must lie in `[0, t]`.
    #[inline]
    pub(crate) fn g_unchecked(&self, tau: f64) -> f64 {
        let alpha = self.alpha();
        if alpha == 1.0 {
            return tau;
        }
        // t^α − (t−τ)^α = t^α · (1 − (1 − τ/t)^α), evaluated without cancellation
        let t = self.t();
        -(alpha * (-tau / t).ln_1p()).exp_m1() * self.t_pow_alpha / self.gamma_alpha_plus_one
    }

    /// `g'(τ) = (t−τ)^(α−1)/Γ(α)`, infinite at `τ = t` for `α < 1`.
    pub fn g_prime(&self, tau: f64) -> f64 {
        let alpha = self.alpha();
        if alpha == 1.0 {
            return 1.0;
        }
        alpha * (self.t() - tau).powf(alpha - 1.0) / self.gamma_alpha_plus_one
    }

    pub fn h(&self, x: f64) -> Result<f64> {
        let alpha = self.alpha();
        let t = self.t();
        let radicand = self.t_pow_alpha - self.gamma_alpha_plus_one * x;
        if !x.is_finite() || x < 0.0 || radicand < -RADICAND_TOLERANCE {
            return Err(Error::Domain(format!(
                "h: x = {x} outside [0, {}] (radicand {radicand:e})",
                self.width()
            )));
        }
        if alpha == 1.0 {
            return Ok(x.min(t));
        }
        let u = self.gamma_alpha_plus_one * x / self.t_pow_alpha;
        if u >= 1.0 {
            return Ok(t);
        }
        // t − (t^α − Γ(α+1)x)^(1/α) = t · (1 − (1 − u)^(1/α))
        Ok(-t * ((-u).ln_1p() / alpha).exp_m1())
    }

    /// Left strip boundary `a(y) = f⁻¹(y) − g(f⁻¹(y))`.
    pub fn a_curve(&self, f: &Integrand, y: f64) -> Result<f64> {
        let tau = f.inverse(y, self.t())?;
        Ok(tau - self.g_unchecked(tau))
    }

    /// Right strip boundary `b(y) = a(y) + t^α/Γ(α+1)`.
    pub fn b_curve(&self, f: &Integrand, y: f64) -> Result<f64> {
        Ok(self.a_curve(f, y)? + self.width())
    }
}
