//! Evaluable integrands on `[0, t]`, with optional monotonicity and inverse
//! metadata.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::operator::PowerFunction;

pub type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Bisection settings for integrands without an analytic inverse.
pub const BISECTION_ITERATIONS: usize = 80;
pub const BISECTION_REL_TOL: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotonicity {
    Increasing,
    Decreasing,
    Unknown,
}

#[derive(Clone)]
pub struct Integrand {
    eval: RealFn,
    monotone: Monotonicity,
    inverse: Option<RealFn>,
    label: String,
    power: Option<PowerFunction>,
}

impl fmt::Debug for Integrand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Integrand")
            .field("label", &self.label)
            .field("monotone", &self.monotone)
            .field("analytic_inverse", &self.inverse.is_some())
            .field("power", &self.power)
            .finish()
    }
}

impl Integrand {
    pub fn new(
        label: impl Into<String>,
        eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            eval: Arc::new(eval),
            monotone: Monotonicity::Unknown,
            inverse: None,
            label: label.into(),
            power: None,
        }
    }

    pub fn increasing(mut self) -> Self {
        self.monotone = Monotonicity::Increasing;
        self
    }

    pub fn decreasing(mut self) -> Self {
        self.monotone = Monotonicity::Decreasing;
        self
    }

    pub fn with_inverse(mut self, inverse: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        self.inverse = Some(Arc::new(inverse));
        self
    }

    /// `c·τ^p`, carrying its closed-form inverse and the power descriptor
    /// used by the oracle route.
    pub fn power(power: PowerFunction) -> Self {
        let (c, p) = (power.coefficient(), power.exponent());
        let eval: RealFn = if p == 0.0 {
            Arc::new(move |_| c)
        } else if p == 1.0 {
            Arc::new(move |tau| c * tau)
        } else if p == 0.5 {
            Arc::new(move |tau: f64| c * tau.sqrt())
        } else {
            Arc::new(move |tau: f64| c * tau.powf(p))
        };
        let monotone = match (c.partial_cmp(&0.0), p > 0.0) {
            (Some(std::cmp::Ordering::Greater), true) => Monotonicity::Increasing,
            (Some(std::cmp::Ordering::Less), true) => Monotonicity::Decreasing,
            _ => Monotonicity::Unknown,
        };
        let inverse: Option<RealFn> = if monotone == Monotonicity::Unknown {
            None
        } else if p == 1.0 {
            Some(Arc::new(move |y| y / c))
        } else if p == 0.5 {
            Some(Arc::new(move |y| (y / c) * (y / c)))
        } else {
            Some(Arc::new(move |y: f64| (y / c).max(0.0).powf(1.0 / p)))
        };
        Self {
            eval,
            monotone,
            inverse,
            label: power.to_string(),
            power: Some(power),
        }
    }

    pub fn identity() -> Self {
        Self::power(PowerFunction::monomial(1.0))
    }

    pub fn sqrt() -> Self {
        Self::power(PowerFunction::monomial(0.5))
    }

    #[inline]
    pub fn eval(&self, tau: f64) -> f64 {
        (self.eval)(tau)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn monotonicity(&self) -> Monotonicity {
        self.monotone
    }

    pub fn has_analytic_inverse(&self) -> bool {
        self.inverse.is_some()
    }

    pub fn power_function(&self) -> Option<PowerFunction> {
        self.power
    }

    pub fn as_fn(&self) -> RealFn {
        Arc::clone(&self.eval)
    }

    /// `f⁻¹(y)` on `[0, t]`: the analytic inverse when present, otherwise
    /// bisection for declared-monotone integrands.
    pub fn inverse(&self, y: f64, t: f64) -> Result<f64> {
        if self.monotone == Monotonicity::Unknown {
            return Err(Error::NonMonotone(self.label.clone()));
        }
        let (f0, ft) = (self.eval(0.0), self.eval(t));
        let (lo, hi) = if f0 <= ft { (f0, ft) } else { (ft, f0) };
        let slack = 1e-12 * lo.abs().max(hi.abs()).max(1.0);
        if !y.is_finite() || y < lo - slack || y > hi + slack {
            return Err(Error::Range { y, lo, hi });
        }
        let x = match &self.inverse {
            Some(inv) => inv(y),
            None => self.bisect(y, t),
        };
        Ok(x.clamp(0.0, t))
    }

    fn bisect(&self, y: f64, t: f64) -> f64 {
        let increasing = self.monotone == Monotonicity::Increasing;
        let (mut lo, mut hi) = (0.0, t);
        let tol = BISECTION_REL_TOL * t;
        for _ in 0..BISECTION_ITERATIONS {
            let mid = 0.5 * (lo + hi);
            let below = self.eval(mid) < y;
            if below == increasing {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo <= tol {
                break;
            }
        }
        0.5 * (lo + hi)
    }

    /// Max `|f(f⁻¹(y)) − y|` over `samples` heights spanning the range of `f`
    /// on `[0, t]`.
    pub fn inverse_residual(&self, t: f64, samples: usize) -> Result<f64> {
        let (f0, ft) = (self.eval(0.0), self.eval(t));
        let samples = samples.max(2);
        let mut worst: f64 = 0.0;
        for k in 0..samples {
            let y = f0 + (ft - f0) * k as f64 / (samples - 1) as f64;
            let x = self.inverse(y, t)?;
            worst = worst.max((self.eval(x) - y).abs());
        }
        Ok(worst)
    }
}
