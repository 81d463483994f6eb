//! Gamma and reciprocal Gamma.
//!
//! Arguments `x >= 0.5` go through a Lanczos approximation (g = 7, nine
//! coefficients); smaller arguments use the reflection identity
//! `Γ(x)Γ(1-x) = π / sin(πx)`. Positive integers up to 23 are returned as
//! exact factorials.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Arguments within this distance of a non-positive integer are poles.
pub const POLE_TOLERANCE: f64 = 1e-12;

const LANCZOS_G: f64 = 7.0;

const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const SQRT_TWO_PI: f64 = 2.506_628_274_631_000_5;

/// Largest integer argument whose factorial `(n-1)!` is exact in f64.
const EXACT_FACTORIAL_MAX: f64 = 23.0;

/// A validated Gamma argument: finite, and not a pole.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaArgument(f64);

impl GammaArgument {
    pub fn new(x: f64) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::Domain(format!("gamma argument {x} is not finite")));
        }
        if is_pole(x) {
            return Err(Error::Pole(x));
        }
        Ok(Self(x))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

fn is_pole(x: f64) -> bool {
    x <= POLE_TOLERANCE && (x - x.round()).abs() <= POLE_TOLERANCE
}

/// `sin(πx)` with argument reduction, exact zero at integers.
fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).round();
    if r == 0.0 || r.abs() == 1.0 {
        return 0.0;
    }
    let r = if r > 0.5 {
        1.0 - r
    } else if r < -0.5 {
        -1.0 - r
    } else {
        r
    };
    (PI * r).sin()
}

fn exact_factorial(n: u32) -> f64 {
    (1..n).fold(1.0, |acc, k| acc * k as f64)
}

/// Lanczos evaluation for `x >= 0.5`. Returns `inf` on overflow.
fn gamma_lanczos(x: f64) -> f64 {
    if x.fract() == 0.0 && x <= EXACT_FACTORIAL_MAX {
        return exact_factorial(x as u32);
    }
    let z = x - 1.0;
    let sum = LANCZOS_COEFFS
        .iter()
        .enumerate()
        .skip(1)
        .fold(LANCZOS_COEFFS[0], |s, (i, &c)| s + c / (z + i as f64));
    let base = z + LANCZOS_G + 0.5;
    // split the power so base^(z+0.5) does not overflow before Γ does
    let half = base.powf(0.5 * (z + 0.5));
    SQRT_TWO_PI * half * (half * (-base).exp()) * sum
}

/// Γ(x) for real, finite, non-pole `x`.
pub fn gamma(x: f64) -> Result<f64> {
    let x = GammaArgument::new(x)?.value();
    let value = if x >= 0.5 {
        gamma_lanczos(x)
    } else {
        PI / (sin_pi(x) * gamma_lanczos(1.0 - x))
    };
    if value.is_infinite() {
        return Err(Error::Overflow(x));
    }
    Ok(value)
}

/// 1/Γ(x), an entire function: exactly zero at the poles of Γ.
pub fn recip_gamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("argument {x} is not finite")));
    }
    if is_pole(x) {
        return Ok(0.0);
    }
    if x >= 0.5 {
        Ok(1.0 / gamma_lanczos(x))
    } else {
        Ok(sin_pi(x) * gamma_lanczos(1.0 - x) / PI)
    }
}
