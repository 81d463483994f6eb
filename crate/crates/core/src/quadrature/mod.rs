//! Numerical routes to the Riemann-Liouville integral, plus integer-order
//! repeated integration.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;

pub mod gauss_kronrod;
mod partition;
mod rl;
pub mod stieltjes;

pub use gauss_kronrod::{integrate, Estimate, Tolerance, DEFAULT_BUDGET};
pub use partition::{Partition, Placement};
pub use rl::{
    cauchy_repeated, cauchy_repeated_with, cavalieri_sum, cavalieri_sum_on, direct_rl,
    direct_rl_raw, direct_rl_with, nested_integral_oracle, plain_integral, stieltjes_sum,
    stieltjes_sum_on, transformed_riemann, transformed_riemann_with, MIN_DIRECT_BUDGET,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Direct,
    Stieltjes,
    Cavalieri,
    Transformed,
    Oracle,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Direct,
        Method::Stieltjes,
        Method::Cavalieri,
        Method::Transformed,
        Method::Oracle,
    ];

    /// The four numerical routes.
    pub const NUMERICAL: [Method; 4] = [
        Method::Direct,
        Method::Stieltjes,
        Method::Cavalieri,
        Method::Transformed,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Stieltjes => "stieltjes",
            Method::Cavalieri => "cavalieri",
            Method::Transformed => "transformed",
            Method::Oracle => "oracle",
        }
    }

    pub fn is_sum(self) -> bool {
        matches!(self, Method::Stieltjes | Method::Cavalieri)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown method `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub method: Method,
    pub evaluations: usize,
    /// Partition size, for the sum methods.
    pub n: Option<usize>,
}

impl QuadratureResult {
    pub(crate) fn adaptive(est: Estimate, scale: f64, method: Method) -> Self {
        Self {
            value: est.value * scale,
            error_estimate: est.error * scale.abs(),
            method,
            evaluations: est.evaluations.max(1),
            n: None,
        }
    }
}
