//! Strip geometry of the Cavalieri form: boundary curves, per-strip areas and
//! region outlines.
//!
//! The region `R_t^α` is bounded by the τ-axis, the graph of `f` and the
//! right edge `x = b(y)`. Strip boundaries are the translates
//! `x = a(y) + i·Δ`, `Δ = (t^α/Γ(α+1))/n`, clipped where they leave the
//! region through the graph of `f`.

use crate::error::{Error, Result};
use crate::integrand::{Integrand, Monotonicity};
use crate::quadrature::{
    integrate, transformed_riemann, Partition, Placement, Tolerance, DEFAULT_BUDGET,
};
use crate::transform::{Horizon, Order, TransformPair};

pub const DEFAULT_CURVE_SAMPLES: usize = 200;

const CLIP_BISECTION_STEPS: usize = 200;
const CLIP_REL_TOL: f64 = 1e-12;

/// One strip side, as `(x, y)` points of increasing `y`.
#[derive(Debug, Clone, PartialEq)]
pub struct Boundary {
    pub index: usize,
    pub points: Vec<(f64, f64)>,
    /// Leading points that lie on the shared uniform height grid.
    pub grid_points: usize,
    /// Height at which the boundary meets the graph of `f`.
    pub clip_height: f64,
}

#[derive(Debug, Clone)]
pub struct StripGeometry {
    pub pair: TransformPair,
    pub n: usize,
    /// Horizontal offset between neighbouring boundaries.
    pub offset: f64,
    pub heights: Vec<f64>,
    pub boundaries: Vec<Boundary>,
    pub strip_areas: Vec<f64>,
    /// `I^α f(t)` from the transformed Riemann form.
    pub total_area: f64,
    /// Area of the region measured by horizontal slices,
    /// `∫₀^f(t) (b(y) − f⁻¹(y)) dy`.
    pub region_area: f64,
    /// Graph of `f` from the origin to `(t, f(t))`, then the right edge back
    /// down to the axis, closed at the origin.
    pub region_outline: Vec<(f64, f64)>,
}

impl StripGeometry {
    pub fn alpha(&self) -> f64 {
        self.pair.alpha()
    }

    pub fn t(&self) -> f64 {
        self.pair.t()
    }

    pub fn right_edge(&self) -> &Boundary {
        self.boundaries.last().expect("at least two boundaries")
    }

    pub fn strip_area_sum(&self) -> f64 {
        self.strip_areas.iter().sum()
    }

    /// Horizontal distance between the outermost boundaries at `y = 0`.
    pub fn span(&self) -> f64 {
        self.right_edge().points[0].0 - self.boundaries[0].points[0].0
    }
}

fn check_integrand(f: &Integrand, t: f64) -> Result<()> {
    if f.monotonicity() != Monotonicity::Increasing {
        return Err(Error::NonMonotone(f.label().to_string()));
    }
    let (f0, ft) = (f.eval(0.0), f.eval(t));
    if !(ft > f0) {
        return Err(Error::NonMonotone(f.label().to_string()));
    }
    if f0.abs() > 1e-12 * ft.abs().max(1.0) {
        return Err(Error::InvalidArgument(format!(
            "strip geometry needs f(0) = 0, got {f0}"
        )));
    }
    Ok(())
}

/// Height where boundary `x = a(y) + shift` meets the graph of `f`, i.e. the
/// root of `shift − g(f⁻¹(y))`, which decreases in `y`.
fn clip_height(f: &Integrand, pair: &TransformPair, shift: f64, top: f64) -> Result<f64> {
    let t = pair.t();
    let excess = |y: f64| -> Result<f64> { Ok(shift - pair.g_unchecked(f.inverse(y, t)?)) };
    if excess(top)? >= 0.0 {
        return Ok(top);
    }
    if shift <= 0.0 {
        return Ok(0.0);
    }
    let (mut lo, mut hi) = (0.0, top);
    for _ in 0..CLIP_BISECTION_STEPS {
        if hi - lo <= CLIP_REL_TOL * top {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if excess(mid)? >= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Builds `n` equal-width strips with boundaries sampled at
/// `samples_per_curve` uniform heights in `[0, f(t)]`.
pub fn build_strips(
    f: &Integrand,
    pair: &TransformPair,
    n: usize,
    samples_per_curve: usize,
) -> Result<StripGeometry> {
    if n == 0 {
        return Err(Error::InvalidArgument("strip count must be >= 1".into()));
    }
    if samples_per_curve < 2 {
        return Err(Error::InvalidArgument(
            "need at least 2 samples per curve".into(),
        ));
    }
    let t = pair.t();
    check_integrand(f, t)?;

    let top = f.eval(t);
    let width = pair.width();
    let offset = width / n as f64;
    let last = (samples_per_curve - 1) as f64;
    let heights: Vec<f64> = (0..samples_per_curve)
        .map(|j| {
            if j + 1 == samples_per_curve {
                top
            } else {
                top * j as f64 / last
            }
        })
        .collect();
    let left: Vec<f64> = heights
        .iter()
        .map(|&y| pair.a_curve(f, y))
        .collect::<Result<_>>()?;

    let mut boundaries = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let shift = if i == n { width } else { offset * i as f64 };
        let clip = clip_height(f, pair, shift, top)?;
        let mut points: Vec<(f64, f64)> = heights
            .iter()
            .zip(&left)
            .take_while(|(&y, _)| y <= clip)
            .map(|(&y, &a)| (a + shift, y))
            .collect();
        let grid_points = points.len();
        if points.last().is_none_or(|&(_, y)| y < clip) {
            points.push((pair.a_curve(f, clip)? + shift, clip));
        }
        boundaries.push(Boundary {
            index: i,
            points,
            grid_points,
            clip_height: clip,
        });
    }

    let partition = Partition::new(pair, n, Placement::UniformTransformed)?;
    let strip_areas: Vec<f64> = partition.companion()[..n]
        .iter()
        .map(|&tau| f.eval(tau) * offset)
        .collect();

    let total_area = transformed_riemann(f, pair, DEFAULT_BUDGET)?.value;
    let region_area = integrate(
        |y: f64| width - pair.g_unchecked(f.inverse(y, t).unwrap_or(t)),
        0.0,
        top,
        Tolerance::default(),
        DEFAULT_BUDGET,
    )?
    .value;

    let mut region_outline: Vec<(f64, f64)> = (0..samples_per_curve)
        .map(|j| {
            let tau = if j + 1 == samples_per_curve {
                t
            } else {
                t * j as f64 / last
            };
            (tau, f.eval(tau))
        })
        .collect();
    let right = &boundaries[n];
    region_outline.extend(right.points.iter().rev().skip(1).copied());
    region_outline.push((0.0, 0.0));

    Ok(StripGeometry {
        pair: *pair,
        n,
        offset,
        heights,
        boundaries,
        strip_areas,
        total_area,
        region_area,
        region_outline,
    })
}

/// One single-strip geometry per `(α, t)`, α-major.
pub fn region_family(
    f: &Integrand,
    alphas: &[Order],
    horizons: &[Horizon],
    samples: usize,
) -> Result<Vec<StripGeometry>> {
    if alphas.is_empty() || horizons.is_empty() {
        return Err(Error::InvalidArgument(
            "region family needs at least one alpha and one t".into(),
        ));
    }
    let mut family = Vec::with_capacity(alphas.len() * horizons.len());
    for &alpha in alphas {
        for &t in horizons {
            family.push(build_strips(f, &TransformPair::new(alpha, t)?, 1, samples)?);
        }
    }
    Ok(family)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TranslationReport {
    /// `max |x_(i+1)(y) − x_i(y) − Δ|` over boundaries and shared heights.
    pub max_offset_deviation: f64,
    /// Distance between unit-normalized right edges of two geometries.
    pub right_edge_shape_distance: Option<f64>,
}

fn normalized_edge(geom: &StripGeometry) -> Vec<f64> {
    let edge = &geom.right_edge().points[..geom.right_edge().grid_points];
    let (lo, hi) = edge
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &(x, _)| {
            (lo.min(x), hi.max(x))
        });
    let range = hi - lo;
    if range <= 1e-12 * geom.t() {
        return vec![0.0; edge.len()];
    }
    edge.iter().map(|&(x, _)| (x - lo) / range).collect()
}

/// Checks that boundaries are translates of each other and, given a second
/// geometry, measures how far its right edge is from a rescaled copy of this
/// one (both edges scaled to unit height and unit width).
pub fn translate_check(
    geom: &StripGeometry,
    other: Option<&StripGeometry>,
) -> Result<TranslationReport> {
    let mut max_offset_deviation: f64 = 0.0;
    for pair in geom.boundaries.windows(2) {
        let shared = pair[0].grid_points.min(pair[1].grid_points);
        for j in 0..shared {
            let (x0, y0) = pair[0].points[j];
            let (x1, y1) = pair[1].points[j];
            if y0 != y1 {
                return Err(Error::IncompatibleSampling(format!(
                    "boundaries {} and {} disagree on height {j}",
                    pair[0].index, pair[1].index
                )));
            }
            max_offset_deviation = max_offset_deviation.max((x1 - x0 - geom.offset).abs());
        }
    }

    let right_edge_shape_distance = match other {
        None => None,
        Some(o) => {
            let (a, b) = (normalized_edge(geom), normalized_edge(o));
            if a.len() != b.len() {
                return Err(Error::IncompatibleSampling(format!(
                    "right edges have {} and {} samples",
                    a.len(),
                    b.len()
                )));
            }
            Some(
                a.iter()
                    .zip(&b)
                    .map(|(p, q)| (p - q).abs())
                    .fold(0.0, f64::max),
            )
        }
    };

    Ok(TranslationReport {
        max_offset_deviation,
        right_edge_shape_distance,
    })
}
