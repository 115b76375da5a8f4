//! Grid sweeps for the four worked examples and one-shot custom reports.
//!
//! Rows are computed in parallel and collected in grid order. Every report
//! is self-checked before it is written out.

use std::f64::consts::{FRAC_PI_8, PI};

use rayon::prelude::*;
use skewinfo::{
    amplitude_damping_channel_with, bit_flip_channel, bloch_qubit, channel_bounds, gisin_state, lifted_pauli, observable_bounds, pad_kraus,
    pauli, phase_flip_channel, rotation, unitary_channel, wyd_metric, Channel, ChannelReport, DampingForm, Maximized, Metric, Obs,
    ObservableReport, Pauli, PermutationAssignment, Side, State, WydParameter,
};

use crate::error::{CliError, Result};
use crate::grid::Grid;
use crate::table::{Cell, Table};

/// Slack allowed in every self-check comparison.
pub const CHECK_TOL: f64 = 1e-9;

pub const DEFAULT_ALPHA: f64 = 1.0 / 3.0;

/// A table plus the self-check failures found while building it.
#[derive(Debug)]
pub struct Sweep {
    pub table: Table,
    pub violations: Vec<String>,
}

/// Resolves `--metric` and `--alpha`; returns the metric and its wyd exponent.
pub fn resolve_metric(name: &str, alpha: Option<f64>) -> Result<(Metric, Option<f64>)> {
    let wyd = |a: f64| -> Result<(Metric, Option<f64>)> {
        let p = WydParameter::new(a).map_err(|e| CliError::Config(e.to_string()))?;
        Ok((wyd_metric(p), Some(a)))
    };
    match name {
        "wyd" => wyd(alpha.unwrap_or(DEFAULT_ALPHA)),
        _ if name.starts_with("wyd:") => {
            let metric = Metric::parse(name).map_err(|e| CliError::Config(e.to_string()))?;
            let a = metric.wyd_alpha().expect("wyd metric");
            match alpha {
                Some(b) if b != a => Err(CliError::Config(format!("--metric {name} conflicts with --alpha {b}"))),
                _ => Ok((metric, Some(a))),
            }
        }
        "wy" | "sld" => {
            if alpha.is_some() {
                return Err(CliError::Config(format!("--alpha does not apply to --metric {name}")));
            }
            Ok((Metric::parse(name).map_err(|e| CliError::Config(e.to_string()))?, None))
        }
        _ => Err(CliError::Config(format!("unknown metric `{name}` (expected wy, sld, wyd or wyd:<alpha>)"))),
    }
}

/// Qubit with Bloch vector `(√3/2)(cos θ, sin θ, 0)`.
pub fn circle_state(theta: f64) -> Result<State> {
    let r = 3f64.sqrt() / 2.0;
    Ok(bloch_qubit(r * theta.cos(), r * theta.sin(), 0.0)?)
}

fn observable_checks(label: &str, r: &ObservableReport, lb3_over_lb1: bool) -> Vec<String> {
    let mut out = Vec::new();
    let named = [("lb1", r.lb1), ("lb2", Some(r.lb2)), ("lb3", Some(r.lb3)), ("lb4", Some(r.lb4))];
    for (name, b) in named {
        if let Some(b) = b.filter(|&b| b > r.sum + CHECK_TOL) {
            out.push(format!("{label}: {name} = {b} exceeds sum = {}", r.sum));
        }
    }
    if r.lb4 < r.lb2 - CHECK_TOL {
        out.push(format!("{label}: lb4 = {} below lb2 = {}", r.lb4, r.lb2));
    }
    if let Some(lb1) = r.lb1.filter(|&b| lb3_over_lb1 && r.lb3 < b - CHECK_TOL) {
        out.push(format!("{label}: lb3 = {} below lb1 = {lb1}", r.lb3));
    }
    out
}

fn channel_checks(label: &str, r: &ChannelReport) -> Vec<String> {
    let mut out = Vec::new();
    let named = [("clb1", r.clb1.as_ref()), ("clb2", Some(&r.clb2)), ("clb3", Some(&r.clb3)), ("clb4", Some(&r.clb4))];
    for (name, b) in named {
        if let Some(b) = b.filter(|b| b.value > r.sum + CHECK_TOL) {
            out.push(format!("{label}: {name} = {} exceeds sum = {}", b.value, r.sum));
        }
    }
    if r.clb4.value < r.clb2.value - CHECK_TOL {
        out.push(format!("{label}: clb4 = {} below clb2 = {}", r.clb4.value, r.clb2.value));
    }
    out
}

fn metric_meta(t: &mut Table, metric: &Metric, alpha: Option<f64>) {
    t.meta("metric", metric.name());
    if let Some(a) = alpha {
        t.meta("alpha", a);
    }
}

fn paulis() -> Vec<Obs> {
    [Pauli::X, Pauli::Y, Pauli::Z].into_iter().map(pauli).collect()
}

/// Pauli observables on the circle state, over θ and optionally over the
/// wyd exponent (`alpha_grid`, which then replaces the single metric).
pub fn example1(metric: (&Metric, Option<f64>), theta: &Grid, alpha_grid: Option<&Grid>, inject_fault: bool) -> Result<Sweep> {
    let metrics: Vec<(Metric, Option<f64>)> = match alpha_grid {
        Some(g) => g.points().into_iter().map(|a| resolve_metric("wyd", Some(a))).collect::<Result<_>>()?,
        None => vec![(metric.0.clone(), metric.1)],
    };
    let points: Vec<(f64, usize)> = theta.points().into_iter().flat_map(|t| (0..metrics.len()).map(move |k| (t, k))).collect();
    let obs = paulis();
    let mut reports =
        points.par_iter().map(|&(t, k)| Ok(observable_bounds(&metrics[k].0, &circle_state(t)?, &obs)?)).collect::<Result<Vec<_>>>()?;
    if inject_fault {
        reports[0].lb3 = reports[0].sum + 1.0;
    }

    let mut table = Table::new("skewinfo.example1.v1", &["theta", "alpha", "sum", "lb1", "lb2", "lb3", "lb4", "lb4_minus_lb2"]);
    table.meta("experiment", "example1").meta("observables", "sx,sy,sz").meta("theta_grid", theta);
    match alpha_grid {
        Some(g) => {
            table.meta("metric", "wyd").meta("alpha_grid", g);
        }
        None => metric_meta(&mut table, metric.0, metric.1),
    }
    let mut violations = Vec::new();
    for (&(t, k), r) in points.iter().zip(&reports) {
        let label = match metrics[k].1 {
            Some(a) => format!("theta={t} alpha={a}"),
            None => format!("theta={t}"),
        };
        violations.extend(observable_checks(&label, r, false));
        table.push(vec![
            t.into(),
            metrics[k].1.into(),
            r.sum.into(),
            r.lb1.into(),
            r.lb2.into(),
            r.lb3.into(),
            r.lb4.into(),
            (r.lb4 - r.lb2).into(),
        ]);
    }
    Ok(Sweep { table, violations })
}

/// `I⊗σ` observables on the Gisin state over the (λ, θ) grid.
pub fn example2(metric: (&Metric, Option<f64>), lambda: &Grid, theta: &Grid, inject_fault: bool) -> Result<Sweep> {
    let points: Vec<(f64, f64)> = lambda.points().into_iter().flat_map(|l| theta.points().into_iter().map(move |t| (l, t))).collect();
    let obs: Vec<Obs> = [Pauli::X, Pauli::Y, Pauli::Z].into_iter().map(|p| lifted_pauli(p, Side::Right)).collect();
    let mut reports =
        points.par_iter().map(|&(l, t)| Ok(observable_bounds(metric.0, &gisin_state(l, t)?, &obs)?)).collect::<Result<Vec<_>>>()?;
    if inject_fault {
        reports[0].lb3 = reports[0].sum + 1.0;
    }

    let mut table = Table::new("skewinfo.example2.v1", &["lambda", "theta", "sum", "lb1", "lb2", "lb3", "lb4"]);
    table.meta("experiment", "example2");
    metric_meta(&mut table, metric.0, metric.1);
    table.meta("observables", "I*sx,I*sy,I*sz").meta("lambda_grid", lambda).meta("theta_grid", theta);
    let mut violations = Vec::new();
    for (&(l, t), r) in points.iter().zip(&reports) {
        violations.extend(observable_checks(&format!("lambda={l} theta={t}"), r, true));
        table.push(vec![l.into(), t.into(), r.sum.into(), r.lb1.into(), r.lb2.into(), r.lb3.into(), r.lb4.into()]);
    }
    Ok(Sweep { table, violations })
}

/// `A1`–`A4` for three channels with two Kraus operators, otherwise the
/// assignment in cycle notation.
pub fn case_label(a: &PermutationAssignment) -> String {
    a.case_label().map_or_else(|| a.normalized().to_string(), str::to_string)
}

fn channel_sweep(
    schema: &str,
    experiment: &str,
    metric: (&Metric, Option<f64>),
    channels: &[Channel],
    theta: &Grid,
    inject_fault: bool,
    extra_meta: &[(&str, String)],
) -> Result<Sweep> {
    let points = theta.points();
    let mut reports = points.par_iter().map(|&t| Ok(channel_bounds(metric.0, &circle_state(t)?, channels)?)).collect::<Result<Vec<_>>>()?;
    if inject_fault {
        reports[0].clb3.value = reports[0].sum + 1.0;
    }

    let mut table =
        Table::new(schema, &["theta", "sum", "clb1", "clb2", "clb3", "clb4", "clb1_case", "clb2_case", "clb3_case", "clb4_case"]);
    table.meta("experiment", experiment);
    metric_meta(&mut table, metric.0, metric.1);
    table.meta("channels", channels.iter().map(Channel::name).collect::<Vec<_>>().join(","));
    for (k, v) in extra_meta {
        table.meta(k, v);
    }
    table.meta("kraus_count", channels[0].kraus_count()).meta("theta_grid", theta);

    let mut violations = Vec::new();
    let case = |m: Option<&Maximized<f64>>| m.map_or(Cell::Empty, |m| Cell::Text(case_label(&m.assignment)));
    for (&t, r) in points.iter().zip(&reports) {
        violations.extend(channel_checks(&format!("theta={t}"), r));
        table.push(vec![
            t.into(),
            r.sum.into(),
            r.clb1.as_ref().map(|m| m.value).into(),
            r.clb2.value.into(),
            r.clb3.value.into(),
            r.clb4.value.into(),
            case(r.clb1.as_ref()),
            case(Some(&r.clb2)),
            case(Some(&r.clb3)),
            case(Some(&r.clb4)),
        ]);
    }
    Ok(Sweep { table, violations })
}

pub fn example3_channels(p: f64, form: DampingForm) -> Result<Vec<Channel>> {
    Ok(vec![bit_flip_channel(p)?, phase_flip_channel(p)?, amplitude_damping_channel_with(p, form)?])
}

/// Bit flip, phase flip and the π/8 rotation, zero-padded to a common Kraus count.
pub fn example4_channels(p: f64) -> Result<Vec<Channel>> {
    Ok(pad_kraus(&[bit_flip_channel(p)?, phase_flip_channel(p)?, unitary_channel(rotation(FRAC_PI_8))?])?)
}

fn check_p(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(CliError::Config(format!("--p must lie in [0, 1], got {p}")));
    }
    Ok(())
}

pub fn example3(metric: (&Metric, Option<f64>), theta: &Grid, p: f64, form: DampingForm, inject_fault: bool) -> Result<Sweep> {
    check_p(p)?;
    let channels = example3_channels(p, form)?;
    let meta = [("p", p.to_string()), ("ad_kraus", form.label().to_string())];
    channel_sweep("skewinfo.example3.v1", "example3", metric, &channels, theta, inject_fault, &meta)
}

pub fn example4(metric: (&Metric, Option<f64>), theta: &Grid, p: f64, inject_fault: bool) -> Result<Sweep> {
    check_p(p)?;
    let channels = example4_channels(p)?;
    let meta = [("p", p.to_string()), ("unitary_angle", (PI / 8.0).to_string())];
    channel_sweep("skewinfo.example4.v1", "example4", metric, &channels, theta, inject_fault, &meta)
}

pub fn custom_observables(metric: (&Metric, Option<f64>), rho: &State, obs: &[Obs], inject_fault: bool) -> Result<Sweep> {
    let mut r = observable_bounds(metric.0, rho, obs)?;
    if inject_fault {
        r.lb3 = r.sum + 1.0;
    }
    let mut table = Table::new("skewinfo.custom-observables.v1", &["sum", "lb1", "lb2", "lb3", "lb4"]);
    table.meta("experiment", "custom");
    metric_meta(&mut table, metric.0, metric.1);
    table.meta("dim", rho.dim()).meta("observables", obs.len());
    table.push(vec![r.sum.into(), r.lb1.into(), r.lb2.into(), r.lb3.into(), r.lb4.into()]);
    Ok(Sweep { violations: observable_checks("custom", &r, false), table })
}

/// Channels are zero-padded to a common Kraus count first.
pub fn custom_channels(metric: (&Metric, Option<f64>), rho: &State, channels: &[Channel], inject_fault: bool) -> Result<Sweep> {
    let padded = pad_kraus(channels)?;
    let mut r = channel_bounds(metric.0, rho, &padded)?;
    if inject_fault {
        r.clb3.value = r.sum + 1.0;
    }
    let mut table = Table::new(
        "skewinfo.custom-channels.v1",
        &["sum", "clb1", "clb2", "clb3", "clb4", "clb1_assignment", "clb2_assignment", "clb3_assignment", "clb4_assignment"],
    );
    table.meta("experiment", "custom");
    metric_meta(&mut table, metric.0, metric.1);
    table
        .meta("dim", rho.dim())
        .meta("channels", padded.iter().map(Channel::name).collect::<Vec<_>>().join(","))
        .meta("kraus_count", r.kraus_count);
    let text = |m: Option<&Maximized<f64>>| m.map_or(Cell::Empty, |m| Cell::Text(m.assignment.to_string()));
    table.push(vec![
        r.sum.into(),
        r.clb1.as_ref().map(|m| m.value).into(),
        r.clb2.value.into(),
        r.clb3.value.into(),
        r.clb4.value.into(),
        text(r.clb1.as_ref()),
        text(Some(&r.clb2)),
        text(Some(&r.clb3)),
        text(Some(&r.clb4)),
    ]);
    Ok(Sweep { violations: channel_checks("custom", &r), table })
}
