//! Riemann-Liouville fractional integrals computed four ways: from the
//! kernel form, as a Riemann-Stieltjes sum against the integrator
//! `g(τ) = (t^α − (t−τ)^α)/Γ(α+1)`, as a lower Cavalieri sum over equal-width
//! non-rectangular strips, and as the Riemann integral of `f∘g⁻¹` over
//! `[0, t^α/Γ(α+1)]`. The strips themselves are available as geometry.

// Reference constants are kept at full published precision; `!(a < b)`
// comparisons are deliberate so that NaN falls into the error branch.
#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod geometry;
pub mod integrand;
pub mod operator;
pub mod quadrature;
pub mod special;
pub mod transform;

pub use error::{Error, Result};
pub use geometry::{
    build_strips, region_family, translate_check, StripGeometry, TranslationReport,
};
pub use integrand::{Integrand, Monotonicity};
pub use operator::{compose, power_oracle, FractionalOperator, PowerFunction, ToleranceProfile};
pub use quadrature::{Method, QuadratureResult};
pub use special::{gamma, recip_gamma};
pub use transform::{make_transform, Horizon, Order, TransformPair};
