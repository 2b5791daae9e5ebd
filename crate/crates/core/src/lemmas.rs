//! Executable checks for every identity and inequality satisfied by xi, eta
//! and r = xi'/eta'.
//!
//! Each suite returns its checks in a fixed order; the ids are listed in
//! [`XI_CHECK_IDS`], [`ETA_CHECK_IDS`], [`R_CHECK_IDS`] and
//! [`INTEGRAL_CHECK_IDS`]. Sign claims are sampled on the grid and pass when
//! the worst violation stays within `tol`.

use std::f64::consts::{FRAC_PI_2, PI};

use rayon::prelude::*;

use crate::check::{CheckResult, GridSpec};
use crate::error::{Error, Result};
use crate::quadrature::{integrate, QuadOptions};
use crate::special::{
    eta_jet_ode_route, eta_series, ratio_r, ratio_series, xi_jet_ode_route, xi_series, ENDPOINT,
    SWITCH_RADIUS,
};

/// Finite-difference step for the sampled derivative of r.
pub const FD_STEP: f64 = 1e-5;
/// Accepted discrepancy between finite-difference and analytic r'.
pub const FD_TOL: f64 = 1e-6;

pub const XI_CHECK_IDS: [&str; 20] = [
    "xi.ode",
    "xi.first_order",
    "xi.q_eq",
    "xi.q1_eq",
    "xi.q2_eq",
    "xi.range",
    "xi.d1_increasing",
    "xi.d1_negative_left",
    "xi.d1_positive_right",
    "xi.d2_positive",
    "xi.d3_negative_left",
    "xi.d3_positive_right",
    "xi.slope_ratio_monotone",
    "xi.slope_ratio_bounds",
    "xi.slope_ratio_limits",
    "xi.value_origin",
    "xi.value_ends",
    "xi.d1_ends",
    "xi.d2_ends_and_origin",
    "xi.d3_end",
];

pub const XI_CROSS_CHECK_IDS: [&str; 1] = ["xi.ode_route_agreement"];

pub const ETA_CHECK_IDS: [&str; 17] = [
    "eta.ode",
    "eta.first_order",
    "eta.p_eq",
    "eta.p1_eq",
    "eta.p2_eq",
    "eta.p2_eq_signs",
    "eta.range",
    "eta.d1_bounds",
    "eta.d1_min_at_origin",
    "eta.d1_increasing_right",
    "eta.d2_bounds",
    "eta.d2_increasing",
    "eta.d3_positive",
    "eta.value_ends",
    "eta.d1_origin_and_ends",
    "eta.d2_ends",
    "eta.d3_ends",
];

pub const ETA_CROSS_CHECK_IDS: [&str; 1] = ["eta.ode_route_agreement"];

pub const R_CHECK_IDS: [&str; 10] = [
    "r.increasing_fd",
    "r.increasing",
    "r.fd_matches_analytic",
    "r.bound",
    "r.value_ends",
    "r.d1_end_limit",
    "r.d1_end_limit_fd",
    "r.r_eq",
    "r.r1_eq",
    "r.r1_coefficient_negative",
];

pub const INTEGRAL_CHECK_IDS: [&str; 5] = [
    "int.xi_full",
    "int.xi_half",
    "int.eta_full",
    "int.z_linear",
    "int.xi_primitive",
];

/// Derivatives of xi, eta (orders 0..=5) and r (orders 0..=3) at one point.
#[derive(Debug, Clone)]
struct Sample {
    t: f64,
    xi: [f64; 6],
    eta: [f64; 6],
    r: [f64; 4],
}

fn sample(t: f64) -> Result<Sample> {
    let to6 = |v: Vec<f64>| {
        let mut a = [0.0; 6];
        a.copy_from_slice(&v[..6]);
        a
    };
    let xi = to6(xi_series(t, 6)?.derivatives());
    let eta = to6(eta_series(t, 6)?.derivatives());
    let rv = ratio_series(t, 4)?.derivatives();
    let mut r = [0.0; 4];
    r.copy_from_slice(&rv[..4]);
    Ok(Sample { t, xi, eta, r })
}

fn samples(grid: &GridSpec) -> Result<Vec<Sample>> {
    let pts = grid.points()?;
    pts.par_iter().map(|&t| sample(t)).collect()
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!("tolerance must be positive, got {tol}")))
    }
}

fn is_interior(t: f64) -> bool {
    t.abs() < FRAC_PI_2
}

// worst violation of "sequence is nondecreasing"
fn monotone_violation<'a>(ts: &'a [f64], vals: &'a [f64]) -> impl Iterator<Item = (f64, f64)> + 'a {
    ts.windows(2)
        .zip(vals.windows(2))
        .map(|(t, v)| (t[1], v[0] - v[1]))
}

fn max_deviation(items: &[(f64, f64, f64)]) -> (f64, f64) {
    items
        .iter()
        .map(|&(t, actual, expected)| ((actual - expected).abs(), t))
        .fold((f64::NEG_INFINITY, 0.0), |acc, x| if x.0 > acc.0 { x } else { acc })
}

/// Claims about xi.
pub fn verify_xi_lemma(grid: &GridSpec, tol: f64) -> Result<Vec<CheckResult>> {
    check_tol(tol)?;
    let s = samples(grid)?;
    let ts: Vec<f64> = s.iter().map(|p| p.t).collect();
    let lo = ENDPOINT.xi_0;
    let slope_lo = ENDPOINT.xi2_0;
    let slope_hi = 4.0 / 3.0;

    let mut out = Vec::with_capacity(XI_CHECK_IDS.len());
    let resid = |f: &dyn Fn(&Sample, f64, f64) -> f64| -> Vec<(f64, f64)> {
        s.iter()
            .map(|p| {
                let (sn, cs) = p.t.sin_cos();
                (p.t, f(p, sn, cs).abs())
            })
            .collect()
    };

    out.push(CheckResult::from_samples(
        "xi.ode",
        "1/2 xi'' cos^2 t - xi' cos t sin t - xi = 2 cos^2 t",
        tol,
        resid(&|p, s, c| 0.5 * p.xi[2] * c * c - p.xi[1] * c * s - p.xi[0] - 2.0 * c * c),
    ));
    out.push(CheckResult::from_samples(
        "xi.first_order",
        "xi' cos t - 2 xi sin t = 4 t cos t",
        tol,
        resid(&|p, s, c| p.xi[1] * c - 2.0 * p.xi[0] * s - 4.0 * p.t * c),
    ));
    out.push(CheckResult::from_samples(
        "xi.q_eq",
        "1/2 q'' cos t - 2 q' sin t - 2 q cos t = -4 sin t, q = xi'",
        tol,
        resid(&|p, s, c| 0.5 * p.xi[3] * c - 2.0 * p.xi[2] * s - 2.0 * p.xi[1] * c + 4.0 * s),
    ));
    out.push(CheckResult::from_samples(
        "xi.q1_eq",
        "cos^2/(2(1+cos^2)) (q')'' - 2 cos sin/(1+cos^2) (q')' - 2 q' = -4/(1+cos^2)",
        tol,
        resid(&|p, s, c| {
            let w = 1.0 + c * c;
            c * c / (2.0 * w) * p.xi[4] - 2.0 * c * s / w * p.xi[3] - 2.0 * p.xi[2] + 4.0 / w
        }),
    ));
    out.push(CheckResult::from_samples(
        "xi.q2_eq",
        "cos^2/(2(1+cos^2)) (q'')'' - cos sin (3+2cos^2)/(1+cos^2)^2 (q'')' - 2(5cos^2+cos^4)/(1+cos^2)^2 q'' = -8 cos sin/(1+cos^2)^2",
        tol,
        resid(&|p, s, c| {
            let w = 1.0 + c * c;
            let w2 = w * w;
            c * c / (2.0 * w) * p.xi[5] - c * s * (3.0 + 2.0 * c * c) / w2 * p.xi[4]
                - 2.0 * (5.0 * c * c + c.powi(4)) / w2 * p.xi[3]
                + 8.0 * c * s / w2
        }),
    ));
    out.push(CheckResult::from_samples(
        "xi.range",
        "1 - pi^2/4 <= xi(t) <= 0",
        tol,
        s.iter().map(|p| (p.t, (lo - p.xi[0]).max(p.xi[0]))),
    ));
    let d1: Vec<f64> = s.iter().map(|p| p.xi[1]).collect();
    out.push(CheckResult::from_samples(
        "xi.d1_increasing",
        "xi' increasing on [-pi/2, pi/2]",
        tol,
        monotone_violation(&ts, &d1),
    ));
    out.push(CheckResult::from_samples(
        "xi.d1_negative_left",
        "xi' < 0 on (-pi/2, 0)",
        tol,
        s.iter()
            .filter(|p| p.t < 0.0 && is_interior(p.t))
            .map(|p| (p.t, p.xi[1])),
    ));
    out.push(CheckResult::from_samples(
        "xi.d1_positive_right",
        "xi' > 0 on (0, pi/2)",
        tol,
        s.iter()
            .filter(|p| p.t > 0.0 && is_interior(p.t))
            .map(|p| (p.t, -p.xi[1])),
    ));
    out.push(CheckResult::from_samples(
        "xi.d2_positive",
        "xi'' > 0 on [-pi/2, pi/2]",
        tol,
        s.iter().map(|p| (p.t, -p.xi[2])),
    ));
    out.push(CheckResult::from_samples(
        "xi.d3_negative_left",
        "xi''' < 0 on (-pi/2, 0)",
        tol,
        s.iter()
            .filter(|p| p.t < 0.0 && is_interior(p.t))
            .map(|p| (p.t, p.xi[3])),
    ));
    out.push(CheckResult::from_samples(
        "xi.d3_positive_right",
        "xi''' > 0 on (0, pi/2)",
        tol,
        s.iter()
            .filter(|p| p.t > 0.0 && is_interior(p.t))
            .map(|p| (p.t, -p.xi[3])),
    ));
    // (xi'/t)' = h/t^2 with h = t xi'' - xi'
    out.push(CheckResult::from_samples(
        "xi.slope_ratio_monotone",
        "h(t) = t xi''(t) - xi'(t) > 0 on (0, pi/2)",
        tol,
        s.iter()
            .filter(|p| p.t > 0.0 && is_interior(p.t))
            .map(|p| (p.t, -(p.t * p.xi[2] - p.xi[1]))),
    ));
    out.push(CheckResult::from_samples(
        "xi.slope_ratio_bounds",
        "2(3 - pi^2/4) <= xi'(t)/t <= 4/3",
        tol,
        s.iter().map(|p| {
            let ratio = if p.t == 0.0 { p.xi[2] } else { p.xi[1] / p.t };
            (p.t, (slope_lo - ratio).max(ratio - slope_hi))
        }),
    ));
    {
        let near0 = 1e-6;
        let j0 = sample(near0)?;
        let je = sample(FRAC_PI_2)?;
        let (dev, t) = max_deviation(&[
            (near0, j0.xi[1] / near0, slope_lo),
            (FRAC_PI_2, je.xi[1] / FRAC_PI_2, slope_hi),
        ]);
        // xi'(t)/t - xi''(0) = O(t^2), so 1e-6 contributes ~1e-12
        out.push(CheckResult::new(
            "xi.slope_ratio_limits",
            "xi'(t)/t -> 2(3 - pi^2/4) as t -> 0, = 4/3 at pi/2",
            dev,
            tol,
            t,
        ));
    }
    let o = sample(0.0)?;
    let r = sample(FRAC_PI_2)?;
    let l = sample(-FRAC_PI_2)?;
    out.push(CheckResult::value(
        "xi.value_origin",
        "xi(0) = 1 - pi^2/4",
        o.xi[0],
        ENDPOINT.xi_0,
        tol,
        0.0,
    ));
    let (dev, t) = max_deviation(&[(FRAC_PI_2, r.xi[0], 0.0), (-FRAC_PI_2, l.xi[0], 0.0)]);
    out.push(CheckResult::new("xi.value_ends", "xi(+-pi/2) = 0", dev, tol, t));
    let (dev, t) = max_deviation(&[
        (FRAC_PI_2, r.xi[1], ENDPOINT.xi1_end),
        (-FRAC_PI_2, l.xi[1], -ENDPOINT.xi1_end),
    ]);
    out.push(CheckResult::new("xi.d1_ends", "xi'(+-pi/2) = +-2pi/3", dev, tol, t));
    let (dev, t) = max_deviation(&[
        (FRAC_PI_2, r.xi[2], ENDPOINT.xi2_end),
        (-FRAC_PI_2, l.xi[2], ENDPOINT.xi2_end),
        (0.0, o.xi[2], ENDPOINT.xi2_0),
    ]);
    out.push(CheckResult::new(
        "xi.d2_ends_and_origin",
        "xi''(+-pi/2) = 2, xi''(0) = 2(3 - pi^2/4)",
        dev,
        tol,
        t,
    ));
    out.push(CheckResult::value(
        "xi.d3_end",
        "xi'''(pi/2) = 8pi/15",
        r.xi[3],
        ENDPOINT.xi3_end,
        tol,
        FRAC_PI_2,
    ));
    Ok(out)
}

/// Second and third derivatives of xi via the ODE route versus direct
/// Taylor-mode differentiation, away from the endpoint band.
pub fn verify_xi_ode_route(grid: &GridSpec, tol: f64) -> Result<Vec<CheckResult>> {
    check_tol(tol)?;
    let pts = grid.points()?;
    let mut worst = Vec::new();
    for &t in pts.iter().filter(|t| FRAC_PI_2 - t.abs() >= SWITCH_RADIUS) {
        let d = xi_series(t, 4)?.derivatives();
        let o = xi_jet_ode_route(t)?;
        let scale = 1.0 + d[3].abs();
        worst.push((t, ((o.f2 - d[2]).abs()).max((o.f3 - d[3]).abs() / scale)));
    }
    Ok(vec![CheckResult::from_samples(
        XI_CROSS_CHECK_IDS[0],
        "xi'' and xi''' from the ODEs agree with direct differentiation",
        tol,
        worst,
    )])
}

pub fn verify_eta_ode_route(grid: &GridSpec, tol: f64) -> Result<Vec<CheckResult>> {
    check_tol(tol)?;
    let pts = grid.points()?;
    let mut worst = Vec::new();
    for &t in pts.iter().filter(|t| FRAC_PI_2 - t.abs() >= SWITCH_RADIUS) {
        let d = eta_series(t, 4)?.derivatives();
        let o = eta_jet_ode_route(t)?;
        let scale = 1.0 + d[3].abs();
        worst.push((t, ((o.f2 - d[2]).abs()).max((o.f3 - d[3]).abs() / scale)));
    }
    Ok(vec![CheckResult::from_samples(
        ETA_CROSS_CHECK_IDS[0],
        "eta'' and eta''' from the ODEs agree with direct differentiation",
        tol,
        worst,
    )])
}

/// Claims about eta.
pub fn verify_eta_lemma(grid: &GridSpec, tol: f64) -> Result<Vec<CheckResult>> {
    check_tol(tol)?;
    let s = samples(grid)?;
    let ts: Vec<f64> = s.iter().map(|p| p.t).collect();
    let p_lo = ENDPOINT.eta1_0;
    let p_hi = ENDPOINT.eta1_end;
    let resid = |f: &dyn Fn(&Sample, f64, f64) -> f64| -> Vec<(f64, f64)> {
        s.iter()
            .map(|p| {
                let (sn, cs) = p.t.sin_cos();
                (p.t, f(p, sn, cs).abs())
            })
            .collect()
    };

    let mut out = Vec::with_capacity(ETA_CHECK_IDS.len());
    out.push(CheckResult::from_samples(
        "eta.ode",
        "1/2 eta'' cos^2 t - eta' cos t sin t - eta = -sin t",
        tol,
        resid(&|p, s, c| 0.5 * p.eta[2] * c * c - p.eta[1] * c * s - p.eta[0] + s),
    ));
    out.push(CheckResult::from_samples(
        "eta.first_order",
        "eta' cos t - 2 eta sin t = (8/pi) cos t - 2",
        tol,
        resid(&|p, s, c| p.eta[1] * c - 2.0 * p.eta[0] * s - 8.0 / PI * c + 2.0),
    ));
    out.push(CheckResult::from_samples(
        "eta.p_eq",
        "1/2 p'' cos t - 2 p' sin t - 2 p cos t = -1, p = eta'",
        tol,
        resid(&|p, s, c| 0.5 * p.eta[3] * c - 2.0 * p.eta[2] * s - 2.0 * p.eta[1] * c + 1.0),
    ));
    out.push(CheckResult::from_samples(
        "eta.p1_eq",
        "cos^2/(2(1+cos^2)) p''' - 2 cos sin/(1+cos^2) p'' - 2 p' = -sin/(1+cos^2)",
        tol,
        resid(&|p, s, c| {
            let w = 1.0 + c * c;
            c * c / (2.0 * w) * p.eta[4] - 2.0 * c * s / w * p.eta[3] - 2.0 * p.eta[2] + s / w
        }),
    ));
    // right-hand side is -cos t (2 + sin^2 t) / (1 + cos^2 t)^2
    out.push(CheckResult::from_samples(
        "eta.p2_eq",
        "cos^2/(2(1+cos^2)) (p'')'' - cos sin (3+2cos^2)/(1+cos^2)^2 (p'')' - 2(5cos^2+cos^4)/(1+cos^2)^2 p'' = -cos (2 + sin^2)/(1+cos^2)^2",
        tol,
        resid(&|p, s, c| {
            let w = 1.0 + c * c;
            let w2 = w * w;
            c * c / (2.0 * w) * p.eta[5] - c * s * (3.0 + 2.0 * c * c) / w2 * p.eta[4]
                - 2.0 * (5.0 * c * c + c.powi(4)) / w2 * p.eta[3]
                + c * (2.0 + s * s) / w2
        }),
    ));
    // the maximum-principle hypotheses: zeroth-order coefficient and rhs both negative inside
    out.push(CheckResult::from_samples(
        "eta.p2_eq_signs",
        "p''-equation: coefficient of p'' < 0 and right-hand side < 0 on (-pi/2, pi/2)",
        tol,
        s.iter().filter(|p| is_interior(p.t)).map(|p| {
            let (sn, c) = p.t.sin_cos();
            let w2 = (1.0 + c * c).powi(2);
            let coef = -2.0 * (5.0 * c * c + c.powi(4)) / w2;
            let rhs = -c * (2.0 + sn * sn) / w2;
            (p.t, coef.max(rhs))
        }),
    ));
    out.push(CheckResult::from_samples(
        "eta.range",
        "-1 <= eta(t) <= 1",
        tol,
        s.iter().map(|p| (p.t, (p.eta[0] - 1.0).max(-1.0 - p.eta[0]))),
    ));
    out.push(CheckResult::from_samples(
        "eta.d1_bounds",
        "2(4/pi - 1) <= eta'(t) <= 8/(3pi)",
        tol,
        s.iter().map(|p| (p.t, (p_lo - p.eta[1]).max(p.eta[1] - p_hi))),
    ));
    {
        let at_origin = sample(0.0)?.eta[1];
        out.push(CheckResult::from_samples(
            "eta.d1_min_at_origin",
            "eta'(t) >= eta'(0) = 2(4/pi - 1)",
            tol.max(1e-8),
            s.iter().map(|p| (p.t, at_origin - p.eta[1])),
        ));
    }
    out.push(CheckResult::from_samples(
        "eta.d1_increasing_right",
        "p' = eta'' > 0 on (0, pi/2), so eta' increases on [0, pi/2]",
        tol,
        s.iter()
            .filter(|p| p.t > 0.0 && is_interior(p.t))
            .map(|p| (p.t, -p.eta[2])),
    ));
    out.push(CheckResult::from_samples(
        "eta.d2_bounds",
        "-1/2 <= eta''(t) <= 1/2",
        tol,
        s.iter().map(|p| (p.t, (p.eta[2] - 0.5).max(-0.5 - p.eta[2]))),
    ));
    let d2: Vec<f64> = s.iter().map(|p| p.eta[2]).collect();
    out.push(CheckResult::from_samples(
        "eta.d2_increasing",
        "eta'' increasing on [-pi/2, pi/2]",
        tol,
        monotone_violation(&ts, &d2),
    ));
    out.push(CheckResult::from_samples(
        "eta.d3_positive",
        "eta''' > 0 on [-pi/2, pi/2]",
        tol,
        s.iter().map(|p| (p.t, -p.eta[3])),
    ));
    let o = sample(0.0)?;
    let r = sample(FRAC_PI_2)?;
    let l = sample(-FRAC_PI_2)?;
    let (dev, t) = max_deviation(&[(FRAC_PI_2, r.eta[0], 1.0), (-FRAC_PI_2, l.eta[0], -1.0)]);
    out.push(CheckResult::new("eta.value_ends", "eta(+-pi/2) = +-1", dev, tol, t));
    let (dev, t) = max_deviation(&[
        (0.0, o.eta[1], ENDPOINT.eta1_0),
        (FRAC_PI_2, r.eta[1], ENDPOINT.eta1_end),
        (-FRAC_PI_2, l.eta[1], ENDPOINT.eta1_end),
    ]);
    out.push(CheckResult::new(
        "eta.d1_origin_and_ends",
        "eta'(0) = 2(4/pi - 1), eta'(+-pi/2) = 8/(3pi)",
        dev,
        tol,
        t,
    ));
    let (dev, t) = max_deviation(&[
        (FRAC_PI_2, r.eta[2], ENDPOINT.eta2_end),
        (-FRAC_PI_2, l.eta[2], -ENDPOINT.eta2_end),
    ]);
    out.push(CheckResult::new("eta.d2_ends", "eta''(+-pi/2) = +-1/2", dev, tol, t));
    let (dev, t) = max_deviation(&[
        (FRAC_PI_2, r.eta[3], ENDPOINT.eta3_end),
        (-FRAC_PI_2, l.eta[3], ENDPOINT.eta3_end),
    ]);
    out.push(CheckResult::new(
        "eta.d3_ends",
        "eta'''(+-pi/2) = 32/(15pi)",
        dev,
        tol,
        t,
    ));
    Ok(out)
}

/// Centered difference of r where both neighbours exist, second-order
/// one-sided difference otherwise.
pub fn ratio_r_fd(t: f64, h: f64) -> Result<f64> {
    if t + h <= FRAC_PI_2 && t - h >= -FRAC_PI_2 {
        Ok((ratio_r(t + h)? - ratio_r(t - h)?) / (2.0 * h))
    } else if t + h > FRAC_PI_2 {
        Ok((3.0 * ratio_r(t)? - 4.0 * ratio_r(t - h)? + ratio_r(t - 2.0 * h)?) / (2.0 * h))
    } else {
        Ok((-3.0 * ratio_r(t)? + 4.0 * ratio_r(t + h)? - ratio_r(t + 2.0 * h)?) / (2.0 * h))
    }
}

/// Claims about r = xi'/eta'.
pub fn verify_r_lemma(grid: &GridSpec, tol: f64) -> Result<Vec<CheckResult>> {
    check_tol(tol)?;
    let s = samples(grid)?;
    let fd: Vec<f64> = s
        .par_iter()
        .map(|p| ratio_r_fd(p.t, FD_STEP))
        .collect::<Result<_>>()?;
    let bound = ENDPOINT.r_end;
    let mut out = Vec::with_capacity(R_CHECK_IDS.len());

    out.push(CheckResult::from_samples(
        "r.increasing_fd",
        "r'(t) > 0 (finite differences, h = 1e-5)",
        FD_TOL,
        s.iter().zip(&fd).map(|(p, d)| (p.t, -d)),
    ));
    out.push(CheckResult::from_samples(
        "r.increasing",
        "r'(t) > 0 on [-pi/2, pi/2]",
        tol,
        s.iter().map(|p| (p.t, -p.r[1])),
    ));
    out.push(CheckResult::from_samples(
        "r.fd_matches_analytic",
        "finite-difference r' agrees with the series quotient",
        FD_TOL,
        s.iter().zip(&fd).map(|(p, d)| (p.t, (d - p.r[1]).abs())),
    ));
    out.push(CheckResult::from_samples(
        "r.bound",
        "|r(t)| <= pi^2/4",
        tol,
        s.iter().map(|p| (p.t, ratio_r(p.t).unwrap_or(f64::NAN).abs() - bound)),
    ));
    {
        let r_hi = ratio_r(FRAC_PI_2)?;
        let r_lo = ratio_r(-FRAC_PI_2)?;
        // the series quotient at the endpoint must reach the same limit
        let series_hi = ratio_series(FRAC_PI_2, 1)?.coeff(0);
        let series_lo = ratio_series(-FRAC_PI_2, 1)?.coeff(0);
        let (dev, t) = max_deviation(&[
            (FRAC_PI_2, r_hi, bound),
            (-FRAC_PI_2, r_lo, -bound),
            (FRAC_PI_2, series_hi, bound),
            (-FRAC_PI_2, series_lo, -bound),
        ]);
        out.push(CheckResult::new("r.value_ends", "r(+-pi/2) = +-pi^2/4", dev, tol, t));
    }
    let r1_end = ratio_series(FRAC_PI_2, 2)?.coeff(1);
    out.push(CheckResult::value(
        "r.d1_end_limit",
        "lim r'(t), t -> pi/2-, = (4/(3pi) - pi/12) / (4/(3pi))^2",
        r1_end,
        ENDPOINT.r1_end,
        tol,
        FRAC_PI_2,
    ));
    out.push(CheckResult::value(
        "r.d1_end_limit_fd",
        "one-sided finite difference of r at pi/2 matches the limit",
        ratio_r_fd(FRAC_PI_2, FD_STEP)?,
        ENDPOINT.r1_end,
        FD_TOL,
        FRAC_PI_2,
    ));
    out.push(CheckResult::from_samples(
        "r.r_eq",
        "1/2 p r'' cos t + (p' cos t - 2 p sin t) r' - r = -4 sin t",
        tol,
        s.iter().map(|p| {
            let (sn, c) = p.t.sin_cos();
            let (pp, p1) = (p.eta[1], p.eta[2]);
            let res = 0.5 * pp * p.r[2] * c + (p1 * c - 2.0 * pp * sn) * p.r[1] - p.r[0] + 4.0 * sn;
            (p.t, res.abs())
        }),
    ));
    out.push(CheckResult::from_samples(
        "r.r1_eq",
        "[1/2 p cos t](r')'' + [3/2 p' cos t - 5/2 p sin t](r')' + [p' sin t + 2 p cos t - 3] r' = -4 cos t",
        tol,
        s.iter().map(|p| {
            let (sn, c) = p.t.sin_cos();
            let (pp, p1) = (p.eta[1], p.eta[2]);
            let res = 0.5 * pp * c * p.r[3]
                + (1.5 * p1 * c - 2.5 * pp * sn) * p.r[2]
                + (p1 * sn + 2.0 * pp * c - 3.0) * p.r[1]
                + 4.0 * c;
            (p.t, res.abs())
        }),
    ));
    let cap = 0.5 + 16.0 / (3.0 * PI) - 3.0;
    out.push(CheckResult::from_samples(
        "r.r1_coefficient_negative",
        "p' sin t + 2 p cos t - 3 < 1/2 + 16/(3pi) - 3 < 0",
        tol,
        s.iter().map(|p| {
            let (sn, c) = p.t.sin_cos();
            let coef = p.eta[2] * sn + 2.0 * p.eta[1] * c - 3.0;
            (p.t, (coef - cap).max(cap))
        }),
    ));
    Ok(out)
}

/// Quadrature identities for xi and eta and the linear test-function integral.
pub fn verify_integrals(tol: f64) -> Result<Vec<CheckResult>> {
    check_tol(tol)?;
    let opts = QuadOptions::default();
    let xi = |t: f64| xi_series(t, 1).map(|s| s.coeff(0)).unwrap_or(f64::NAN);
    let eta = |t: f64| eta_series(t, 1).map(|s| s.coeff(0)).unwrap_or(f64::NAN);

    let quad_check = |id: &str, anchor: &str, r: crate::quadrature::QuadResult, expected: f64| {
        let c = CheckResult::value(id, anchor, r.value, expected, tol, 0.0);
        if r.converged {
            c
        } else {
            CheckResult::new(id, anchor, f64::INFINITY, tol, 0.0)
                .with_note(format!("quadrature did not converge (estimate {:e})", r.error))
        }
    };

    let mut out = Vec::with_capacity(INTEGRAL_CHECK_IDS.len());
    out.push(quad_check(
        "int.xi_full",
        "integral of xi over [-pi/2, pi/2] = -pi",
        integrate(xi, -FRAC_PI_2, FRAC_PI_2, opts),
        -PI,
    ));
    out.push(quad_check(
        "int.xi_half",
        "integral of xi over [0, pi/2] = -pi/2",
        integrate(xi, 0.0, FRAC_PI_2, opts),
        -FRAC_PI_2,
    ));
    out.push(quad_check(
        "int.eta_full",
        "integral of eta over [-pi/2, pi/2] = 0",
        integrate(eta, -FRAC_PI_2, FRAC_PI_2, opts),
        0.0,
    ));
    let (c, m) = (0.3, 0.1);
    out.push(quad_check(
        "int.z_linear",
        "integral of 1 + c eta + m xi = (1 - m) pi (c = 0.3, m = 0.1)",
        integrate(|t| 1.0 + c * eta(t) + m * xi(t), -FRAC_PI_2, FRAC_PI_2, opts),
        (1.0 - m) * PI,
    ));
    {
        // xi(t) cos^2 t = -int_t^{pi/2} 4 s cos^2 s ds
        let mut worst = Vec::new();
        let mut converged = true;
        for k in 0..=24 {
            let t = -FRAC_PI_2 + PI * k as f64 / 24.0;
            let r = integrate(|s| 4.0 * s * s.cos().powi(2), t, FRAC_PI_2, opts);
            converged &= r.converged;
            let lhs = xi(t) * t.cos().powi(2);
            worst.push((t, (lhs + r.value).abs()));
        }
        let c = CheckResult::from_samples(
            "int.xi_primitive",
            "(xi(t) cos^2 t)' = 4 t cos^2 t with xi(pi/2) cos^2(pi/2) = 0",
            tol,
            worst,
        );
        out.push(if converged {
            c
        } else {
            CheckResult::new(c.id, c.anchor, f64::INFINITY, tol, 0.0)
                .with_note("quadrature did not converge")
        });
    }
    Ok(out)
}

/// Every lemma check in fixed id order: xi, xi cross-check, eta, eta
/// cross-check, r, integrals.
pub fn verify_lemmas(grid: &GridSpec, tol: f64) -> Result<Vec<CheckResult>> {
    let mut all = verify_xi_lemma(grid, tol)?;
    all.extend(verify_xi_ode_route(grid, tol)?);
    all.extend(verify_eta_lemma(grid, tol)?);
    all.extend(verify_eta_ode_route(grid, tol)?);
    all.extend(verify_r_lemma(grid, tol)?);
    all.extend(verify_integrals(tol)?);
    Ok(all)
}

/// Total number of checks produced by [`verify_lemmas`].
pub const LEMMA_CHECK_COUNT: usize = XI_CHECK_IDS.len()
    + XI_CROSS_CHECK_IDS.len()
    + ETA_CHECK_IDS.len()
    + ETA_CROSS_CHECK_IDS.len()
    + R_CHECK_IDS.len()
    + INTEGRAL_CHECK_IDS.len();
