//! The Riemann-Liouville operator `I^α` as a value: route dispatch, the
//! closed form on power functions, and operator composition.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::integrand::Integrand;
use crate::quadrature::{
    cavalieri_sum, direct_rl_with, integrate, stieltjes_sum, transformed_riemann_with, Method,
    QuadratureResult, Tolerance, DEFAULT_BUDGET,
};
use crate::special::gamma;
use crate::transform::{Horizon, Order, TransformPair};

pub const DEFAULT_SUM_N: usize = 100_000;
pub const DEFAULT_COMPOSE_GRID: usize = 256;
pub const MIN_COMPOSE_GRID: usize = 64;

/// Slack on `α + β ≤ 1` for decimal inputs such as 0.3 + 0.7.
pub const ORDER_SUM_SLACK: f64 = 1e-12;

/// `c·τ^p`, `p ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerFunction {
    coefficient: f64,
    exponent: f64,
}

impl PowerFunction {
    pub fn new(coefficient: f64, exponent: f64) -> Result<Self> {
        if !coefficient.is_finite() {
            return Err(Error::Domain(format!(
                "coefficient {coefficient} is not finite"
            )));
        }
        if !exponent.is_finite() || exponent < 0.0 {
            return Err(Error::Domain(format!(
                "exponent {exponent} must be finite and >= 0"
            )));
        }
        Ok(Self {
            coefficient,
            exponent,
        })
    }

    pub fn monomial(exponent: f64) -> Self {
        Self::new(1.0, exponent).expect("valid monomial exponent")
    }

    pub fn coefficient(self) -> f64 {
        self.coefficient
    }

    pub fn exponent(self) -> f64 {
        self.exponent
    }

    /// `I^α[c·τ^p](t)` in closed form.
    pub fn integral(self, alpha: Order, t: Horizon) -> Result<f64> {
        Ok(self.coefficient * power_oracle(self.exponent, alpha, t)?)
    }
}

impl fmt::Display for PowerFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pow:{}:{}", self.coefficient, self.exponent)
    }
}

/// Parses `pow:<coefficient>:<exponent>`.
impl FromStr for PowerFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split(':');
        let (Some(family), Some(c), Some(p), None) =
            (parts.next(), parts.next(), parts.next(), parts.next())
        else {
            return Err(Error::Parse(format!(
                "integrand `{s}` is not of the form pow:<coefficient>:<exponent>"
            )));
        };
        if family != "pow" {
            return Err(Error::Parse(format!("unknown integrand family `{family}`")));
        }
        let number = |text: &str, what: &str| {
            text.parse::<f64>()
                .map_err(|_| Error::Parse(format!("bad {what} `{text}` in `{s}`")))
        };
        Self::new(number(c, "coefficient")?, number(p, "exponent")?)
    }
}

/// `I^α[τ^p](t) = Γ(p+1)/Γ(p+1+α) · t^(p+α)`.
pub fn power_oracle(p: f64, alpha: Order, t: Horizon) -> Result<f64> {
    if !p.is_finite() || p < 0.0 {
        return Err(Error::Domain(format!(
            "exponent {p} must be finite and >= 0"
        )));
    }
    let a = alpha.value();
    let t = t.value();
    if a == 0.0 {
        return Ok(t.powf(p));
    }
    Ok(gamma(p + 1.0)? / gamma(p + 1.0 + a)? * t.powf(p + a))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceProfile {
    pub tolerance: Tolerance,
    pub budget: usize,
    /// Partition size for the sum routes.
    pub sum_n: usize,
}

impl Default for ToleranceProfile {
    fn default() -> Self {
        Self {
            tolerance: Tolerance::default(),
            budget: DEFAULT_BUDGET,
            sum_n: DEFAULT_SUM_N,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FractionalOperator {
    order: Order,
    route: Method,
    profile: ToleranceProfile,
}

impl FractionalOperator {
    pub fn new(order: Order) -> Self {
        Self {
            order,
            route: Method::Transformed,
            profile: ToleranceProfile::default(),
        }
    }

    pub fn with_route(mut self, route: Method) -> Self {
        self.route = route;
        self
    }

    pub fn with_profile(mut self, profile: ToleranceProfile) -> Self {
        self.profile = profile;
        self
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn route(&self) -> Method {
        self.route
    }

    pub fn profile(&self) -> ToleranceProfile {
        self.profile
    }

    /// `I^α f(t)` by the configured route. Order zero returns `f(t)`.
    pub fn apply(&self, f: &Integrand, t: Horizon) -> Result<QuadratureResult> {
        if self.order.is_identity() {
            return Ok(QuadratureResult {
                value: f.eval(t.value()),
                error_estimate: 0.0,
                method: self.route,
                evaluations: 1,
                n: None,
            });
        }
        let p = &self.profile;
        match self.route {
            Method::Direct => direct_rl_with(f, self.order, t, p.budget, p.tolerance),
            Method::Transformed => transformed_riemann_with(
                f,
                &TransformPair::new(self.order, t)?,
                p.budget,
                p.tolerance,
            ),
            Method::Stieltjes => stieltjes_sum(f, &TransformPair::new(self.order, t)?, p.sum_n),
            Method::Cavalieri => cavalieri_sum(f, &TransformPair::new(self.order, t)?, p.sum_n),
            Method::Oracle => {
                let power = f.power_function().ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "oracle route needs a power-function integrand, got `{}`",
                        f.label()
                    ))
                })?;
                Ok(QuadratureResult {
                    value: power.integral(self.order, t)?,
                    error_estimate: 0.0,
                    method: Method::Oracle,
                    evaluations: 1,
                    n: None,
                })
            }
        }
    }

    /// `I^α f(s)` including `s = 0`, where the integral vanishes for `α > 0`.
    fn apply_at(&self, f: &Integrand, s: f64) -> Result<f64> {
        if s == 0.0 {
            return Ok(if self.order.is_identity() {
                f.eval(0.0)
            } else {
                0.0
            });
        }
        Ok(self.apply(f, Horizon::new(s)?)?.value)
    }
}

/// Chebyshev-Lobatto nodes on `[0, t]`, ascending, endpoints included.
pub fn chebyshev_nodes(t: f64, count: usize) -> Vec<f64> {
    let last = (count - 1) as f64;
    let mut nodes: Vec<f64> = (0..count)
        .map(|j| 0.5 * t * (1.0 - (PI * j as f64 / last).cos()))
        .collect();
    nodes[0] = 0.0;
    nodes[count - 1] = t;
    nodes
}

/// Piecewise cubic through four neighbouring nodes on each interval.
#[derive(Debug, Clone)]
pub struct PiecewiseCubic {
    nodes: Vec<f64>,
    values: Vec<f64>,
}

impl PiecewiseCubic {
    pub fn new(nodes: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if nodes.len() < 4 || nodes.len() != values.len() {
            return Err(Error::InvalidArgument(
                "piecewise cubic needs >= 4 nodes with matching values".into(),
            ));
        }
        if !nodes.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(
                "interpolation nodes must increase".into(),
            ));
        }
        Ok(Self { nodes, values })
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Interval index `i` with `nodes[i] <= x <= nodes[i+1]`, clamped.
    fn interval(&self, x: f64) -> usize {
        let k = self.nodes.partition_point(|&n| n <= x);
        k.saturating_sub(1).min(self.nodes.len() - 2)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.eval_on(self.interval(x), x)
    }

    /// Evaluates the cubic that belongs to interval `i`.
    pub fn eval_on(&self, i: usize, x: f64) -> f64 {
        let start = i.saturating_sub(1).min(self.nodes.len() - 4);
        let xs = &self.nodes[start..start + 4];
        let ys = &self.values[start..start + 4];
        let mut sum = 0.0;
        for j in 0..4 {
            let mut basis = 1.0;
            for m in 0..4 {
                if m != j {
                    basis *= (x - xs[m]) / (xs[j] - xs[m]);
                }
            }
            sum += ys[j] * basis;
        }
        sum
    }
}

/// `I^α I^β f(t)`: tabulate `I^β f` on `grid` Chebyshev nodes over `[0, t]`,
/// interpolate piecewise-cubically, then apply `I^α` to the interpolant
/// interval by interval in the transformed variable.
pub fn compose(
    op_a: &FractionalOperator,
    op_b: &FractionalOperator,
    f: &Integrand,
    t: Horizon,
    grid: usize,
) -> Result<f64> {
    let (alpha, beta) = (op_a.order.value(), op_b.order.value());
    if alpha + beta > 1.0 + ORDER_SUM_SLACK {
        return Err(Error::InvalidArgument(format!(
            "alpha + beta = {} exceeds 1",
            alpha + beta
        )));
    }
    if grid < MIN_COMPOSE_GRID {
        return Err(Error::InvalidArgument(format!(
            "grid {grid} below minimum {MIN_COMPOSE_GRID}"
        )));
    }
    if op_b.order.is_identity() {
        return Ok(op_a.apply(f, t)?.value);
    }
    if op_a.order.is_identity() {
        return Ok(op_b.apply(f, t)?.value);
    }

    let nodes = chebyshev_nodes(t.value(), grid);
    let values = nodes
        .iter()
        .map(|&s| op_b.apply_at(f, s))
        .collect::<Result<Vec<f64>>>()?;
    if let Some(bad) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite(format!(
            "inner integral at node {} is {}; interpolant would degrade",
            nodes[bad], values[bad]
        )));
    }
    let interpolant = PiecewiseCubic::new(nodes, values)?;

    let pair = TransformPair::new(op_a.order, t)?;
    let width = pair.width();
    let profile = op_a.profile;
    let mut total = 0.0;
    for (i, w) in interpolant.nodes().windows(2).enumerate() {
        let lo = pair.g_unchecked(w[0]);
        let hi = if i + 2 == interpolant.nodes().len() {
            width
        } else {
            pair.g_unchecked(w[1])
        };
        let est = integrate(
            |x: f64| interpolant.eval_on(i, pair.h(x.clamp(0.0, width)).expect("clamped")),
            lo,
            hi,
            profile.tolerance,
            profile.budget,
        )?;
        total += est.value;
    }
    Ok(total)
}
