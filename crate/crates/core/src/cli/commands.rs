use std::fmt::Write as _;
use std::io::Write;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Map, Value};

use super::format::{general, sci};
use super::svg::{shade, Plot, Series};
use super::{parse_number_list, write_output, CliError, Command, Format, Settings};
use crate::geometry::{build_strips, region_family, StripGeometry};
use crate::integrand::Integrand;
use crate::operator::{
    compose, FractionalOperator, PowerFunction, ToleranceProfile, ORDER_SUM_SLACK,
};
use crate::quadrature::Method;
use crate::special::gamma;
use crate::transform::{Horizon, Order, TransformPair};

/// One row of `compute` output.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub alpha: f64,
    pub t: f64,
    pub method: Method,
    pub value: f64,
    pub oracle: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub n_evals: usize,
    pub seconds: f64,
}

pub const COMPUTE_HEADER: &str = "alpha,t,method,value,oracle,abs_err,rel_err,n_evals,seconds";

fn rel_err(value: f64, oracle: f64) -> f64 {
    (value - oracle).abs() / oracle.abs().max(1e-300)
}

fn integrand(text: &str) -> Result<(PowerFunction, Integrand), CliError> {
    let power: PowerFunction = text.parse()?;
    Ok((power, Integrand::power(power)))
}

fn orders(text: &str) -> Result<Vec<Order>, CliError> {
    Ok(parse_number_list(text)?
        .into_iter()
        .map(Order::new)
        .collect::<crate::Result<_>>()?)
}

fn horizons(text: &str) -> Result<Vec<Horizon>, CliError> {
    Ok(parse_number_list(text)?
        .into_iter()
        .map(Horizon::new)
        .collect::<crate::Result<_>>()?)
}

fn methods(text: &str) -> Result<Vec<Method>, CliError> {
    Ok(text
        .split(',')
        .map(|m| m.trim().parse())
        .collect::<crate::Result<_>>()?)
}

fn profile(settings: &Settings) -> ToleranceProfile {
    ToleranceProfile {
        tolerance: settings.tolerance,
        budget: settings.budget,
        sum_n: settings.n,
    }
}

fn json_text(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values always serialize");
    s.push('\n');
    s
}

pub(super) fn dispatch(command: Command, stdout: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Gamma { x } => {
            let v = gamma(x)?;
            write_output(None, &format!("{}\n", general(v, 15)), stdout)
        }
        Command::Transform { alpha, t, common } => {
            let settings = Settings::resolve(&common)?;
            let text = transform_csv(alpha, t, settings.samples)?;
            write_output(common.out.as_deref(), &text, stdout)
        }
        Command::Compute {
            f,
            alpha,
            t,
            method,
            n,
            format,
            timing,
            common,
        } => {
            let mut settings = Settings::resolve(&common)?;
            if let Some(n) = n {
                settings.n = n;
            }
            let (power, f) = integrand(&f)?;
            let rows = compute_rows(
                &f,
                power,
                &orders(&alpha)?,
                &horizons(&t)?,
                &methods(&method)?,
                &settings,
                timing,
            )?;
            let text = match format {
                Format::Csv => compute_csv(&rows),
                Format::Json => json_text(&serde_json::to_value(&rows).expect("rows serialize")),
                Format::Svg => return Err(CliError::input("compute writes csv or json")),
            };
            write_output(common.out.as_deref(), &text, stdout)
        }
        Command::Compare {
            f,
            alpha,
            t,
            n,
            tol,
            common,
        } => {
            let mut settings = Settings::resolve(&common)?;
            if let Some(n) = n {
                settings.n = n;
            }
            if let Some(tol) = tol {
                settings.compare_tol = tol;
            }
            let (power, f) = integrand(&f)?;
            let report = compare_report(&f, power, &orders(&alpha)?, &horizons(&t)?, &settings)?;
            write_output(common.out.as_deref(), &json_text(&report), stdout)
        }
        Command::Strips {
            f,
            alpha,
            t,
            n,
            format,
            svg,
            common,
        } => {
            let settings = Settings::resolve(&common)?;
            let (_, f) = integrand(&f)?;
            let pair = TransformPair::new(Order::new(alpha)?, Horizon::new(t)?)?;
            let geom = build_strips(&f, &pair, n, settings.samples)?;
            let text = match format {
                Format::Csv => strips_csv(&geom),
                Format::Svg => strips_svg(&f, &geom),
                Format::Json => return Err(CliError::input("strips writes csv or svg")),
            };
            if let Some(path) = svg.as_deref() {
                write_output(Some(path), &strips_svg(&f, &geom), stdout)?;
            }
            write_output(common.out.as_deref(), &text, stdout)
        }
        Command::Regions {
            f,
            alpha,
            t,
            format,
            common,
        } => {
            let settings = Settings::resolve(&common)?;
            let (_, f) = integrand(&f)?;
            let family = region_family(&f, &orders(&alpha)?, &horizons(&t)?, settings.samples)?;
            let text = match format {
                Format::Csv => regions_csv(&family),
                Format::Svg => regions_svg(&f, &family),
                Format::Json => return Err(CliError::input("regions writes csv or svg")),
            };
            write_output(common.out.as_deref(), &text, stdout)
        }
        Command::Curves {
            f,
            alpha,
            t_max,
            t_step,
            markers,
            method,
            n,
            format,
            common,
        } => {
            let mut settings = Settings::resolve(&common)?;
            if let Some(n) = n {
                settings.n = n;
            }
            let (_, f) = integrand(&f)?;
            let route: Method = method.trim().parse()?;
            let curves = curves_data(
                &f,
                &orders(&alpha)?,
                t_max,
                t_step,
                &horizons(&markers)?,
                route,
                &settings,
            )?;
            let text = match format {
                Format::Csv => curves.csv(),
                Format::Json => json_text(&curves.json()),
                Format::Svg => curves.svg(f.label()),
            };
            write_output(common.out.as_deref(), &text, stdout)
        }
        Command::Semigroup {
            f,
            alpha,
            beta,
            t,
            grid,
            common,
        } => {
            let mut settings = Settings::resolve(&common)?;
            if let Some(grid) = grid {
                settings.grid = grid;
            }
            let (_, f) = integrand(&f)?;
            let text = semigroup_csv(&f, alpha, beta, t, &settings)?;
            write_output(common.out.as_deref(), &text, stdout)
        }
    }
}

fn uniform(hi: f64, k: usize, count: usize) -> f64 {
    if k + 1 == count {
        hi
    } else {
        hi * k as f64 / (count - 1) as f64
    }
}

fn transform_csv(alpha: f64, t: f64, samples: usize) -> Result<String, CliError> {
    let pair = TransformPair::new(Order::new(alpha)?, Horizon::new(t)?)?;
    let mut out = String::from("tau,g\n");
    for k in 0..samples {
        let tau = uniform(t, k, samples);
        let _ = writeln!(out, "{},{}", sci(tau), sci(pair.g(tau)?));
    }
    out.push_str("\nx,h\n");
    let width = pair.width();
    for k in 0..samples {
        let x = uniform(width, k, samples);
        let _ = writeln!(out, "{},{}", sci(x), sci(pair.h(x)?));
    }
    Ok(out)
}

fn compute_rows(
    f: &Integrand,
    power: PowerFunction,
    alphas: &[Order],
    ts: &[Horizon],
    routes: &[Method],
    settings: &Settings,
    timing: bool,
) -> Result<Vec<ReportRow>, CliError> {
    let mut rows = Vec::with_capacity(alphas.len() * ts.len() * routes.len());
    for &alpha in alphas {
        for &t in ts {
            let oracle = power.integral(alpha, t)?;
            for &route in routes {
                let op = FractionalOperator::new(alpha)
                    .with_route(route)
                    .with_profile(profile(settings));
                let start = Instant::now();
                let result = op.apply(f, t)?;
                let seconds = if timing {
                    start.elapsed().as_secs_f64()
                } else {
                    0.0
                };
                rows.push(ReportRow {
                    alpha: alpha.value(),
                    t: t.value(),
                    method: route,
                    value: result.value,
                    oracle,
                    abs_err: (result.value - oracle).abs(),
                    rel_err: rel_err(result.value, oracle),
                    n_evals: result.n.unwrap_or(result.evaluations),
                    seconds,
                });
            }
        }
    }
    Ok(rows)
}

fn compute_csv(rows: &[ReportRow]) -> String {
    let mut out = format!("{COMPUTE_HEADER}\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            general(r.alpha, 15),
            general(r.t, 15),
            r.method,
            sci(r.value),
            sci(r.oracle),
            sci(r.abs_err),
            sci(r.rel_err),
            r.n_evals,
            sci(r.seconds)
        );
    }
    out
}

fn compare_report(
    f: &Integrand,
    power: PowerFunction,
    alphas: &[Order],
    ts: &[Horizon],
    settings: &Settings,
) -> Result<Value, CliError> {
    let mut report = Map::new();
    for &alpha in alphas {
        for &t in ts {
            let mut named: Vec<(&str, f64)> = Vec::with_capacity(5);
            for route in Method::NUMERICAL {
                let op = FractionalOperator::new(alpha)
                    .with_route(route)
                    .with_profile(profile(settings));
                let value = op.apply(f, t).map_err(|e| {
                    CliError::numerical(format!(
                        "{route} failed at alpha={}, t={}: {e}",
                        general(alpha.value(), 15),
                        general(t.value(), 15)
                    ))
                })?;
                named.push((route.as_str(), value.value));
            }
            named.push((Method::Oracle.as_str(), power.integral(alpha, t)?));

            let mut entry = Map::new();
            entry.insert("alpha".into(), json!(alpha.value()));
            entry.insert("t".into(), json!(t.value()));
            for &(name, v) in &named {
                entry.insert(name.into(), json!(v));
            }
            let mut deltas = Map::new();
            let mut worst = 0.0f64;
            for i in 0..named.len() {
                for j in i + 1..named.len() {
                    let (a, b) = (named[i].1, named[j].1);
                    let d = (a - b).abs() / a.abs().max(b.abs()).max(1e-300);
                    worst = worst.max(d);
                    deltas.insert(format!("{}-{}", named[i].0, named[j].0), json!(d));
                }
            }
            entry.insert("rel_deltas".into(), Value::Object(deltas));
            entry.insert("max_rel_delta".into(), json!(worst));
            entry.insert("consistent".into(), json!(worst <= settings.compare_tol));
            report.insert(
                format!(
                    "alpha={},t={}",
                    general(alpha.value(), 15),
                    general(t.value(), 15)
                ),
                Value::Object(entry),
            );
        }
    }
    Ok(Value::Object(report))
}

fn strips_csv(geom: &StripGeometry) -> String {
    let mut out = String::from("boundary_index,y,x\n");
    for b in &geom.boundaries {
        for &(x, y) in &b.points {
            let _ = writeln!(out, "{},{},{}", b.index, sci(y), sci(x));
        }
    }
    out.push_str("\nstrip_index,area\n");
    for (i, area) in geom.strip_areas.iter().enumerate() {
        let _ = writeln!(out, "{},{}", i + 1, sci(*area));
    }
    out
}

fn graph_of(f: &Integrand, t: f64, samples: usize) -> Vec<(f64, f64)> {
    (0..samples)
        .map(|k| {
            let tau = uniform(t, k, samples);
            (tau, f.eval(tau))
        })
        .collect()
}

fn strips_svg(f: &Integrand, geom: &StripGeometry) -> String {
    let mut series = vec![Series {
        points: graph_of(f, geom.t(), geom.heights.len().max(2)),
        dashed: false,
        shade: 0.0,
        label: format!("y = {}", f.label()),
    }];
    let count = geom.boundaries.len();
    for (k, b) in geom.boundaries.iter().enumerate() {
        series.push(Series {
            points: b.points.clone(),
            dashed: true,
            shade: 0.3 + 0.5 * shade(k, count),
            label: format!("boundary {}", b.index),
        });
    }
    Plot {
        title: format!(
            "{} strips, alpha = {}, t = {}",
            geom.n,
            general(geom.alpha(), 6),
            general(geom.t(), 6)
        ),
        x_label: "x".into(),
        y_label: "y".into(),
        series,
    }
    .render()
}

fn regions_csv(family: &[StripGeometry]) -> String {
    let mut out = String::from("alpha,t,y,x\n");
    for g in family {
        let (a, t) = (general(g.alpha(), 15), general(g.t(), 15));
        for &(x, y) in &g.right_edge().points {
            let _ = writeln!(out, "{a},{t},{},{}", sci(y), sci(x));
        }
    }
    out.push_str("\nalpha,t,area\n");
    for g in family {
        let _ = writeln!(
            out,
            "{},{},{}",
            general(g.alpha(), 15),
            general(g.t(), 15),
            sci(g.total_area)
        );
    }
    out
}

fn regions_svg(f: &Integrand, family: &[StripGeometry]) -> String {
    let t_max = family.iter().map(StripGeometry::t).fold(0.0, f64::max);
    let mut ts: Vec<f64> = family.iter().map(StripGeometry::t).collect();
    ts.sort_by(f64::total_cmp);
    ts.dedup();
    let mut series = vec![Series {
        points: graph_of(f, t_max, 200),
        dashed: false,
        shade: 0.0,
        label: format!("y = {}", f.label()),
    }];
    for g in family {
        let k = ts.iter().position(|&t| t == g.t()).unwrap_or(0);
        series.push(Series {
            points: g.right_edge().points.clone(),
            dashed: false,
            shade: 0.2 + 0.7 * shade(k, ts.len()),
            label: format!(
                "alpha = {}, t = {}",
                general(g.alpha(), 6),
                general(g.t(), 6)
            ),
        });
    }
    Plot {
        title: "region right edges".into(),
        x_label: "x".into(),
        y_label: "y".into(),
        series,
    }
    .render()
}

struct Curves {
    /// `(alpha, points)` per order.
    series: Vec<(f64, Vec<(f64, f64)>)>,
    /// `(alpha, t, area)` from the region geometry.
    markers: Vec<(f64, f64, f64)>,
}

fn curves_data(
    f: &Integrand,
    alphas: &[Order],
    t_max: f64,
    t_step: f64,
    markers: &[Horizon],
    route: Method,
    settings: &Settings,
) -> Result<Curves, CliError> {
    if !(t_max.is_finite() && t_max > 0.0 && t_step.is_finite() && t_step > 0.0) {
        return Err(CliError::input("t-max and t-step must be positive"));
    }
    let steps = (t_max / t_step).round().max(1.0);
    if steps > 1e6 {
        return Err(CliError::input("too many curve points; raise t-step"));
    }
    let steps = steps as usize;
    let mut series = Vec::with_capacity(alphas.len());
    for &alpha in alphas {
        let op = FractionalOperator::new(alpha)
            .with_route(route)
            .with_profile(profile(settings));
        let mut points = Vec::with_capacity(steps + 1);
        for k in 0..=steps {
            let t = uniform(t_max, k, steps + 1);
            let value = if t == 0.0 {
                if alpha.is_identity() {
                    f.eval(0.0)
                } else {
                    0.0
                }
            } else {
                op.apply(f, Horizon::new(t)?)?.value
            };
            points.push((t, value));
        }
        series.push((alpha.value(), points));
    }
    let region_orders: Vec<Order> = alphas.iter().copied().filter(|a| a.value() > 0.0).collect();
    let mut marks = Vec::new();
    if !region_orders.is_empty() {
        for g in region_family(f, &region_orders, markers, settings.samples)? {
            marks.push((g.alpha(), g.t(), g.region_area));
        }
    }
    Ok(Curves {
        series,
        markers: marks,
    })
}

impl Curves {
    fn csv(&self) -> String {
        let mut out = String::from("alpha,t,value\n");
        for (alpha, points) in &self.series {
            for &(t, v) in points {
                let _ = writeln!(out, "{},{},{}", general(*alpha, 15), sci(t), sci(v));
            }
        }
        out.push_str("\nalpha,t,area_marker\n");
        for &(alpha, t, area) in &self.markers {
            let _ = writeln!(
                out,
                "{},{},{}",
                general(alpha, 15),
                general(t, 15),
                sci(area)
            );
        }
        out
    }

    fn json(&self) -> Value {
        let curves: Vec<Value> = self
            .series
            .iter()
            .map(|(alpha, points)| {
                json!({
                    "alpha": alpha,
                    "t": points.iter().map(|p| p.0).collect::<Vec<_>>(),
                    "value": points.iter().map(|p| p.1).collect::<Vec<_>>(),
                })
            })
            .collect();
        let markers: Vec<Value> = self
            .markers
            .iter()
            .map(|&(alpha, t, area)| json!({ "alpha": alpha, "t": t, "area": area }))
            .collect();
        json!({ "curves": curves, "markers": markers })
    }

    fn svg(&self, label: &str) -> String {
        let count = self.series.len();
        let series = self
            .series
            .iter()
            .enumerate()
            .map(|(k, (alpha, points))| Series {
                points: points.clone(),
                dashed: false,
                shade: shade(k, count),
                label: format!("alpha = {}", general(*alpha, 6)),
            })
            .collect();
        Plot {
            title: format!("I^alpha f(t), f = {label}"),
            x_label: "t".into(),
            y_label: "value".into(),
            series,
        }
        .render()
    }
}

fn semigroup_csv(
    f: &Integrand,
    alpha: f64,
    beta: f64,
    t: f64,
    settings: &Settings,
) -> Result<String, CliError> {
    let (a, b) = (Order::new(alpha)?, Order::new(beta)?);
    if alpha + beta > 1.0 + ORDER_SUM_SLACK {
        return Err(CliError::input(format!(
            "alpha + beta = {} exceeds 1",
            alpha + beta
        )));
    }
    let t = Horizon::new(t)?;
    let prof = profile(settings);
    let op_a = FractionalOperator::new(a).with_profile(prof);
    let op_b = FractionalOperator::new(b).with_profile(prof);
    let composed = compose(&op_a, &op_b, f, t, settings.grid)?;
    let direct = FractionalOperator::new(Order::new((alpha + beta).min(1.0))?)
        .with_profile(prof)
        .apply(f, t)?
        .value;
    let mut out = String::from("alpha,beta,t,composed,direct,rel_gap\n");
    let _ = writeln!(
        out,
        "{},{},{},{},{},{}",
        general(alpha, 15),
        general(beta, 15),
        general(t.value(), 15),
        sci(composed),
        sci(direct),
        sci(rel_err(composed, direct))
    );
    Ok(out)
}
