//! The test functions xi and eta on [-pi/2, pi/2], their derivatives, and the
//! ratio r = xi'/eta'.
//!
//! ```text
//! xi(t)  = (cos^2 t + 2 t sin t cos t + t^2 - pi^2/4) / cos^2 t
//! eta(t) = ((4/pi) t + (4/pi) cos t sin t - 2 sin t)   / cos^2 t
//! ```
//!
//! Both quotients are 0/0 at t = +-pi/2. Evaluation is split in two branches:
//!
//! * **direct**: Taylor-mode differentiation of the quotient above, expanded
//!   at the evaluation point. Used while `pi/2 - |t| >= SWITCH_RADIUS`.
//! * **endpoint**: a power series in `u = pi/2 - |t|` obtained by dividing
//!   the numerator and `sin^2 u` after cancelling their common `u^2` factor.
//!   The series has radius of convergence `pi` (next pole at `t = 3pi/2`).
//!
//! Parity is enforced by construction: xi is even, eta is odd, and both are
//! evaluated at `|t|` with the sign pattern applied afterwards.

use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::Series;

/// Distance from `+-pi/2` below which the endpoint series is used.
pub const SWITCH_RADIUS: f64 = 0.6;

/// Number of coefficients kept in the endpoint expansion in `u`.
const ENDPOINT_TERMS: usize = 56;

/// Default number of local Taylor coefficients (derivative orders 0..=5).
pub const DEFAULT_ORDER: usize = 6;

/// Value and first three derivatives of a scalar function at `t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Jet3 {
    pub t: f64,
    pub f: f64,
    pub f1: f64,
    pub f2: f64,
    pub f3: f64,
}

impl Jet3 {
    pub fn from_derivatives(t: f64, d: &[f64]) -> Self {
        let at = |k: usize| d.get(k).copied().unwrap_or(0.0);
        Self {
            t,
            f: at(0),
            f1: at(1),
            f2: at(2),
            f3: at(3),
        }
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.f, self.f1, self.f2, self.f3]
    }

    pub fn is_finite(&self) -> bool {
        self.as_array().iter().all(|v| v.is_finite())
    }

    /// `a * self + b * other`, pointwise on all orders.
    pub fn combine(&self, a: f64, other: &Jet3, b: f64) -> Jet3 {
        Jet3 {
            t: self.t,
            f: a * self.f + b * other.f,
            f1: a * self.f1 + b * other.f1,
            f2: a * self.f2 + b * other.f2,
            f3: a * self.f3 + b * other.f3,
        }
    }
}

/// Closed-form endpoint and origin values of xi, eta and r.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EndpointConstants {
    /// xi(0) = 1 - pi^2/4
    pub xi_0: f64,
    /// xi'(pi/2) = 2pi/3
    pub xi1_end: f64,
    /// xi''(+-pi/2) = 2
    pub xi2_end: f64,
    /// xi''(0) = 2(3 - pi^2/4)
    pub xi2_0: f64,
    /// xi'''(pi/2) = 8pi/15
    pub xi3_end: f64,
    /// eta(pi/2) = 1
    pub eta_end: f64,
    /// eta'(0) = 2(4/pi - 1)
    pub eta1_0: f64,
    /// eta'(+-pi/2) = 8/(3pi)
    pub eta1_end: f64,
    /// eta''(pi/2) = 1/2
    pub eta2_end: f64,
    /// eta'''(+-pi/2) = 32/(15pi)
    pub eta3_end: f64,
    /// r(pi/2) = pi^2/4
    pub r_end: f64,
    /// lim r'(t) as t -> pi/2 from below: (4/(3pi) - pi/12) / (4/(3pi))^2
    pub r1_end: f64,
}

impl EndpointConstants {
    pub const fn new() -> Self {
        let k = 4.0 / (3.0 * PI);
        Self {
            xi_0: 1.0 - PI * PI / 4.0,
            xi1_end: 2.0 * PI / 3.0,
            xi2_end: 2.0,
            xi2_0: 2.0 * (3.0 - PI * PI / 4.0),
            xi3_end: 8.0 * PI / 15.0,
            eta_end: 1.0,
            eta1_0: 2.0 * (4.0 / PI - 1.0),
            eta1_end: 8.0 / (3.0 * PI),
            eta2_end: 0.5,
            eta3_end: 32.0 / (15.0 * PI),
            r_end: PI * PI / 4.0,
            r1_end: (k - PI / 12.0) / (k * k),
        }
    }
}

impl Default for EndpointConstants {
    fn default() -> Self {
        Self::new()
    }
}

pub const ENDPOINT: EndpointConstants = EndpointConstants::new();

/// Which evaluation route produced a local expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Direct,
    Endpoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Func {
    Xi,
    Eta,
}

impl Func {
    fn parity(self) -> Parity {
        match self {
            Func::Xi => Parity::Even,
            Func::Eta => Parity::Odd,
        }
    }

    // numerator of the quotient, given series for t, sin t, cos t
    fn numerator(self, t: &Series, s: &Series, c: &Series) -> Series {
        let len = t.len();
        match self {
            Func::Xi => {
                let cc = c * c;
                let tsc = &(t * s) * c;
                let tt = t * t;
                let sum = &(&cc + &tsc.scale(2.0)) + &tt;
                &sum - &Series::constant(PI * PI / 4.0, len)
            }
            Func::Eta => {
                let lin = t.scale(4.0 / PI);
                let cs = (c * s).scale(4.0 / PI);
                &(&lin + &cs) - &s.scale(2.0)
            }
        }
    }
}

pub(crate) fn check_domain(t: f64) -> Result<()> {
    if t.is_finite() && t.abs() <= FRAC_PI_2 {
        Ok(())
    } else {
        Err(Error::Domain(t))
    }
}

fn endpoint_expansion(func: Func) -> &'static Series {
    static XI: OnceLock<Series> = OnceLock::new();
    static ETA: OnceLock<Series> = OnceLock::new();
    let cell = match func {
        Func::Xi => &XI,
        Func::Eta => &ETA,
    };
    cell.get_or_init(|| {
        // t = pi/2 - u, sin t = cos u, cos t = sin u
        let len = ENDPOINT_TERMS + 2;
        let t = Series::from_coeffs({
            let mut v = vec![0.0; len];
            v[0] = FRAC_PI_2;
            v[1] = -1.0;
            v
        });
        let s = Series::cos_at(0.0, len);
        let c = Series::sin_at(0.0, len);
        let num = func.numerator(&t, &s, &c);
        let den = &c * &c;
        // both vanish to second order at u = 0
        num.shift_down(2).div(&den.shift_down(2))
    })
}

/// Local Taylor expansion of `func(t0 + h)` in `h`, for `t0 >= 0`.
fn local_nonneg(func: Func, t0: f64, len: usize, branch: Branch) -> Series {
    match branch {
        Branch::Direct => {
            let t = Series::variable(t0, len);
            let s = Series::sin_at(t0, len);
            let c = Series::cos_at(t0, len);
            let num = func.numerator(&t, &s, &c);
            num.div(&(&c * &c))
        }
        Branch::Endpoint => {
            // f(t0 + h) = X(u0 - h)
            let u0 = FRAC_PI_2 - t0;
            endpoint_expansion(func).recenter(u0, len).reflect()
        }
    }
}

fn default_branch(t: f64) -> Branch {
    if FRAC_PI_2 - t.abs() < SWITCH_RADIUS {
        Branch::Endpoint
    } else {
        Branch::Direct
    }
}

fn local(func: Func, t: f64, len: usize, branch: Branch) -> Series {
    let a = t.abs();
    let base = local_nonneg(func, a, len, branch);
    let mut out = if t < 0.0 {
        // f(t + h) = +-f(|t| - h)
        let r = base.reflect();
        match func.parity() {
            Parity::Even => r,
            Parity::Odd => -&r,
        }
    } else {
        base
    };
    if t == 0.0 {
        // odd-order coefficients of an even function (and vice versa) vanish
        let keep_even = func.parity() == Parity::Even;
        let c: Vec<f64> = out
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, v)| if (k % 2 == 0) == keep_even { *v } else { 0.0 })
            .collect();
        out = Series::from_coeffs(c);
    }
    out
}

/// Taylor coefficients of `xi(t + h)` in `h`, `len` terms.
pub fn xi_series(t: f64, len: usize) -> Result<Series> {
    check_domain(t)?;
    Ok(local(Func::Xi, t, len, default_branch(t)))
}

/// Taylor coefficients of `eta(t + h)` in `h`, `len` terms.
pub fn eta_series(t: f64, len: usize) -> Result<Series> {
    check_domain(t)?;
    Ok(local(Func::Eta, t, len, default_branch(t)))
}

/// Same as [`xi_series`] with the branch forced. The direct branch is
/// undefined at the endpoints themselves.
pub fn xi_series_on(t: f64, len: usize, branch: Branch) -> Result<Series> {
    check_domain(t)?;
    Ok(local(Func::Xi, t, len, branch))
}

pub fn eta_series_on(t: f64, len: usize, branch: Branch) -> Result<Series> {
    check_domain(t)?;
    Ok(local(Func::Eta, t, len, branch))
}

/// Derivatives `xi(t), xi'(t), ..., xi^(order)(t)`.
pub fn xi_derivatives(t: f64, order: usize) -> Result<Vec<f64>> {
    Ok(xi_series(t, order + 1)?.derivatives())
}

pub fn eta_derivatives(t: f64, order: usize) -> Result<Vec<f64>> {
    Ok(eta_series(t, order + 1)?.derivatives())
}

pub fn xi_jet(t: f64) -> Result<Jet3> {
    Ok(Jet3::from_derivatives(t, &xi_derivatives(t, 3)?))
}

pub fn eta_jet(t: f64) -> Result<Jet3> {
    Ok(Jet3::from_derivatives(t, &eta_derivatives(t, 3)?))
}

/// Taylor coefficients of `r(t + h) = xi'(t + h) / eta'(t + h)`.
pub fn ratio_series(t: f64, len: usize) -> Result<Series> {
    let q = xi_series(t, len + 1)?.derivative();
    let p = eta_series(t, len + 1)?.derivative();
    Ok(q.div(&p))
}

/// `r(t) = xi'(t) / eta'(t)`. Exact limits `+-pi^2/4` at the endpoints.
pub fn ratio_r(t: f64) -> Result<f64> {
    check_domain(t)?;
    if t == FRAC_PI_2 {
        return Ok(ENDPOINT.r_end);
    }
    if t == -FRAC_PI_2 {
        return Ok(-ENDPOINT.r_end);
    }
    let xi = xi_series(t, 2)?;
    let eta = eta_series(t, 2)?;
    Ok(xi.coeff(1) / eta.coeff(1))
}

/// Jet of xi whose second and third derivatives come from the governing
/// ODEs instead of direct differentiation:
///
/// ```text
/// xi''  = 2 (2 cos^2 t + xi' cos t sin t + xi) / cos^2 t
/// xi''' = 2 (2 xi'' sin t + 2 xi' cos t - 4 sin t) / cos t
/// ```
///
/// Only meaningful away from the endpoints, where the divisions are
/// well conditioned. Used to cross-check the direct jets.
pub fn xi_jet_ode_route(t: f64) -> Result<Jet3> {
    check_domain(t)?;
    if FRAC_PI_2 - t.abs() < SWITCH_RADIUS {
        return xi_jet(t);
    }
    let base = xi_series(t, 2)?;
    let (f, f1) = (base.coeff(0), base.coeff(1));
    let (s, c) = t.sin_cos();
    let f2 = 2.0 * (2.0 * c * c + f1 * c * s + f) / (c * c);
    let f3 = 2.0 * (2.0 * f2 * s + 2.0 * f1 * c - 4.0 * s) / c;
    Ok(Jet3 { t, f, f1, f2, f3 })
}

/// Jet of eta with higher orders from the ODEs:
///
/// ```text
/// eta''  = 2 (eta' cos t sin t + eta - sin t) / cos^2 t
/// eta''' = 2 (2 eta'' sin t + 2 eta' cos t - 1) / cos t
/// ```
pub fn eta_jet_ode_route(t: f64) -> Result<Jet3> {
    check_domain(t)?;
    if FRAC_PI_2 - t.abs() < SWITCH_RADIUS {
        return eta_jet(t);
    }
    let base = eta_series(t, 2)?;
    let (f, f1) = (base.coeff(0), base.coeff(1));
    let (s, c) = t.sin_cos();
    let f2 = 2.0 * (f1 * c * s + f - s) / (c * c);
    let f3 = 2.0 * (2.0 * f2 * s + 2.0 * f1 * c - 1.0) / c;
    Ok(Jet3 { t, f, f1, f2, f3 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn xi_at_origin_and_end() {
        let j = xi_jet(0.0).unwrap();
        assert!(close(j.f, 1.0 - PI * PI / 4.0, 1e-15));
        assert_eq!(j.f1, 0.0);
        assert!(close(j.f2, 2.0 * (3.0 - PI * PI / 4.0), 1e-13));
        assert_eq!(j.f3, 0.0);

        let e = xi_jet(FRAC_PI_2).unwrap();
        assert!(close(e.f, 0.0, 1e-15));
        assert!(close(e.f1, 2.0 * PI / 3.0, 1e-14));
        assert!(close(e.f2, 2.0, 1e-13));
        assert!(close(e.f3, 8.0 * PI / 15.0, 1e-12));
    }

    #[test]
    fn eta_at_origin_and_end() {
        let j = eta_jet(0.0).unwrap();
        assert_eq!(j.f, 0.0);
        assert!(close(j.f1, 2.0 * (4.0 / PI - 1.0), 1e-15));
        let e = eta_jet(FRAC_PI_2).unwrap();
        assert!(close(e.f, 1.0, 1e-15));
        assert!(close(e.f1, 8.0 / (3.0 * PI), 1e-14));
        assert!(close(e.f2, 0.5, 1e-13));
        assert!(close(e.f3, 32.0 / (15.0 * PI), 1e-12));
        let w = eta_jet(-FRAC_PI_2).unwrap();
        assert!(close(w.f, -1.0, 1e-15));
        assert!(close(w.f2, -0.5, 1e-13));
        assert!(close(w.f3, 32.0 / (15.0 * PI), 1e-12));
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(xi_jet(1.6), Err(Error::Domain(_))));
        assert!(matches!(eta_jet(-1.6), Err(Error::Domain(_))));
        assert!(ratio_r(f64::NAN).is_err());
    }

    #[test]
    fn ratio_limits() {
        assert_eq!(ratio_r(FRAC_PI_2).unwrap(), PI * PI / 4.0);
        assert_eq!(ratio_r(0.0).unwrap(), 0.0);
        let v = ratio_r(-PI / 4.0).unwrap();
        assert!(v < 0.0 && v > -PI * PI / 4.0);
        // the endpoint series reaches the same limit
        assert!(close(ratio_r(FRAC_PI_2 - 1e-12).unwrap(), PI * PI / 4.0, 1e-10));
    }

    #[test]
    fn ode_route_agrees_in_interior() {
        for &t in &[-1.0, -0.5, 0.1, 0.7, 1.0] {
            let a = xi_jet(t).unwrap();
            let b = xi_jet_ode_route(t).unwrap();
            assert!(close(a.f2, b.f2, 1e-11), "t={t}");
            assert!(close(a.f3, b.f3, 1e-10), "t={t}");
            let a = eta_jet(t).unwrap();
            let b = eta_jet_ode_route(t).unwrap();
            assert!(close(a.f2, b.f2, 1e-11), "t={t}");
            assert!(close(a.f3, b.f3, 1e-10), "t={t}");
        }
    }
}
