//! Eigenvalue lower bounds, the constants behind them, and the case analysis
//! over the eigenfunction asymmetry a and the curvature ratio delta.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::barrier::{z_min_coefficient, TestFunctionKind, TestFunctionSpec};
use crate::check::CheckResult;
use crate::error::{Error, Result};
use crate::quadrature::{integrate, QuadOptions};

/// Threshold nu in a < nu delta.
pub const NU: f64 = 1.53;
/// Threshold a0 in a < a0.
pub const A0: f64 = 0.765;
/// Guaranteed coefficient of (n - 1) K for n >= 3.
pub const COEFF_N_GE_3: f64 = 31.0 / 100.0;
/// Guaranteed coefficient of (n - 1) K for n = 2.
pub const COEFF_N_2: f64 = 3.0 / 8.0;
/// Relative residual accepted for the sigma-tilde quadratic.
pub const SIGMA_TILDE_RESIDUAL_TOL: f64 = 1e-12;

const PI2: f64 = PI * PI;
// pi^2/4 - 1
const KAPPA: f64 = PI2 / 4.0 - 1.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundParams {
    pub n: u32,
    #[serde(rename = "K")]
    pub k: f64,
    pub d: f64,
}

impl BoundParams {
    pub fn new(n: u32, k: f64, d: f64) -> Result<Self> {
        let p = Self { n, k, d };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidParams(format!("n must be at least 2, got {}", self.n)));
        }
        if !(self.k > 0.0 && self.k.is_finite()) {
            return Err(Error::InvalidParams(format!("K must be positive, got {}", self.k)));
        }
        if !(self.d > 0.0 && self.d.is_finite()) {
            return Err(Error::InvalidParams(format!("d must be positive, got {}", self.d)));
        }
        Ok(())
    }
}

/// (2/(3pi^2)) (4/(3(4-pi)) + 3(4-pi)/4 - 2).
pub fn tau() -> f64 {
    let x = 4.0 / (3.0 * (4.0 - PI)) + 3.0 * (4.0 - PI) / 4.0 - 2.0;
    2.0 / (3.0 * PI2) * x
}

/// 1 - sqrt(pi^2/(6(pi^2-4)) (4/(3(4-pi)) + 3(4-pi)/4 - 2)).
pub fn mu() -> f64 {
    let x = 4.0 / (3.0 * (4.0 - PI)) + 3.0 * (4.0 - PI) / 4.0 - 2.0;
    1.0 - (PI2 / (6.0 * (PI2 - 4.0)) * x).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Constants {
    pub tau: f64,
    pub mu: f64,
    /// B with min(1 + c eta + delta xi) >= B c.
    pub z_min_coefficient: f64,
    /// sigma c^2 / delta at c = nu delta.
    pub sigma_ratio_at_nu: f64,
    /// Coefficient of delta in the bound delta - sigma c^2 at c = nu delta.
    pub delta_minus_sigma_coefficient: f64,
    /// (pi^2/2) sqrt(tau/(pi^2 - 4)), the bound on sigma-tilde c^2 / delta.
    pub sigma_tilde_bound_coefficient: f64,
}

impl Constants {
    pub fn new() -> Self {
        let tau = tau();
        let b = z_min_coefficient();
        let ratio = tau * NU / b;
        Self {
            tau,
            mu: mu(),
            z_min_coefficient: b,
            sigma_ratio_at_nu: ratio,
            delta_minus_sigma_coefficient: 1.0 - ratio,
            sigma_tilde_bound_coefficient: PI2 / 2.0 * (tau / (PI2 - 4.0)).sqrt(),
        }
    }

    /// sigma = tau / (B c).
    pub fn sigma_of(&self, c: f64) -> Result<f64> {
        if !(c > 0.0 && c.is_finite()) {
            return Err(Error::InvalidParams(format!("sigma needs c > 0, got {c}")));
        }
        Ok(self.tau / (self.z_min_coefficient * c))
    }

    /// Positive root of (pi^2/4-1) c^2 s^2 + (1 - c - (pi^2/4-1) delta) s - tau = 0.
    pub fn sigma_tilde_of(&self, c: f64, delta: f64) -> Result<f64> {
        if !(c > 0.0 && c.is_finite() && delta > 0.0 && delta.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "sigma-tilde needs c > 0 and delta > 0, got c = {c}, delta = {delta}"
            )));
        }
        let qa = KAPPA * c * c;
        let qb = 1.0 - c - KAPPA * delta;
        let disc = qb * qb + 4.0 * qa * self.tau;
        if disc < 0.0 {
            return Err(Error::NegativeDiscriminant(disc));
        }
        let root = disc.sqrt();
        // cancellation-free branch for each sign of qb
        let s = if qb >= 0.0 {
            2.0 * self.tau / (qb + root)
        } else {
            (root - qb) / (2.0 * qa)
        };
        let residual = sigma_tilde_residual(self.tau, c, delta, s);
        if residual.abs() > SIGMA_TILDE_RESIDUAL_TOL * self.tau.max(1.0) {
            return Err(Error::Solver(format!(
                "sigma-tilde residual {residual:e} at c = {c}, delta = {delta}"
            )));
        }
        Ok(s)
    }
}

impl Default for Constants {
    fn default() -> Self {
        Self::new()
    }
}

pub fn constants() -> Constants {
    Constants::new()
}

/// -tau + (1 - c) s - (pi^2/4-1) delta s + (pi^2/4-1) s^2 c^2.
pub fn sigma_tilde_residual(tau: f64, c: f64, delta: f64, s: f64) -> f64 {
    -tau + (1.0 - c) * s - KAPPA * delta * s + KAPPA * s * s * c * c
}

/// Coefficient of (n - 1) K guaranteed for every eigenfunction.
pub fn guaranteed_coefficient(n: u32) -> f64 {
    if n == 2 {
        COEFF_N_2
    } else {
        COEFF_N_GE_3
    }
}

/// pi^2/d^2 + coeff (n - 1) K.
pub fn main_bound(p: &BoundParams) -> Result<f64> {
    p.validate()?;
    Ok(PI2 / (p.d * p.d) + guaranteed_coefficient(p.n) * (p.n - 1) as f64 * p.k)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassicalBounds {
    /// n K.
    pub lichnerowicz: f64,
    /// pi^2 / d^2.
    pub zhong_yang: f64,
    /// pi^2 / d^2 + (n - 1) K / 4.
    pub yang: f64,
    /// pi^2 / d^2 + (n - 1) K; conjectural, reported only.
    pub li_conjecture: f64,
}

pub fn classical_bounds(p: &BoundParams) -> Result<ClassicalBounds> {
    p.validate()?;
    let zy = PI2 / (p.d * p.d);
    let nm1k = (p.n - 1) as f64 * p.k;
    Ok(ClassicalBounds {
        lichnerowicz: p.n as f64 * p.k,
        zhong_yang: zy,
        yang: zy + 0.25 * nm1k,
        li_conjecture: zy + nm1k,
    })
}

/// Diameter below which the main bound beats n K.
pub fn crossover_diameter(n: u32, k: f64) -> Result<f64> {
    BoundParams::new(n, k, 1.0)?;
    let coeff = guaranteed_coefficient(n);
    Ok(PI / (k * (n as f64 - coeff * (n - 1) as f64)).sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[allow(non_camel_case_types)]
pub enum CaseLabel {
    A_zero,
    I,
    II_a,
    II_b_1,
    II_b_2,
    #[serde(rename = "sigma_tilde")]
    SigmaTilde,
}

impl CaseLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseLabel::A_zero => "A_zero",
            CaseLabel::I => "I",
            CaseLabel::II_a => "II_a",
            CaseLabel::II_b_1 => "II_b_1",
            CaseLabel::II_b_2 => "II_b_2",
            CaseLabel::SigmaTilde => "sigma_tilde",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseDecision {
    pub label: CaseLabel,
    /// Coefficient of (n - 1) K valid for this particular (a, delta).
    pub coefficient: f64,
    /// Smallest coefficient the case guarantees over its whole region.
    pub floor: f64,
    pub applicable_theorem: String,
    /// The comparison function that certifies the case, when there is one.
    pub test_function: Option<TestFunctionSpec>,
    /// Intermediate quantities of the coefficient chain.
    pub chain: BTreeMap<String, f64>,
}

/// ((12 - pi^2) n + pi^2 - 4) / (8n).
pub fn sigma_tilde_threshold(n: u32) -> f64 {
    let n = n as f64;
    ((12.0 - PI2) * n + PI2 - 4.0) / (8.0 * n)
}

/// (20 - pi^2)/16 > pi^2/16: for n = 2 every a < (pi^2/4) delta is below the threshold.
pub fn n2_threshold_identity() -> (f64, f64, bool) {
    let lhs = (20.0 - PI2) / 16.0;
    let rhs = PI2 / 16.0;
    (lhs, rhs, lhs > rhs)
}

/// Walks the case tree for an eigenfunction with asymmetry `a` and ratio `delta`.
/// Coefficients use c = a (b -> 1).
pub fn case_select(a: f64, delta: f64, n: u32) -> Result<CaseDecision> {
    if n < 2 {
        return Err(Error::InvalidParams(format!("n must be at least 2, got {n}")));
    }
    if !(0.0..1.0).contains(&a) {
        return Err(Error::InvalidParams(format!("a = {a} outside [0, 1)")));
    }
    let delta_max = (n - 1) as f64 / (2 * n) as f64;
    if !(delta > 0.0 && delta <= delta_max) {
        return Err(Error::InvalidParams(format!(
            "delta = {delta} outside (0, (n-1)/(2n)] = (0, {delta_max}]"
        )));
    }
    let k = constants();
    let nf = n as f64;
    let mut chain = BTreeMap::new();
    let decision = |label, coefficient: f64, floor, thm: &str, tf, chain| CaseDecision {
        label,
        coefficient,
        floor,
        applicable_theorem: thm.to_string(),
        test_function: tf,
        chain,
    };

    if a == 0.0 {
        return Ok(decision(
            CaseLabel::A_zero,
            0.5,
            0.5,
            "symmetric case: z = 1 + delta xi",
            Some(TestFunctionSpec::xi_only(delta)?),
            chain,
        ));
    }
    if a >= PI2 / 4.0 * delta {
        return Ok(decision(
            CaseLabel::I,
            0.5,
            0.5,
            "z = 1 + c eta + mu delta xi with mu = 1",
            Some(TestFunctionSpec::new(TestFunctionKind::MuCombination, a, delta)?),
            chain,
        ));
    }
    if n == 2 {
        let threshold = sigma_tilde_threshold(n);
        chain.insert("a_threshold".into(), threshold);
        if a > threshold {
            return Err(Error::Precondition(format!(
                "n = 2 with a = {a} above {threshold}; impossible for delta <= 1/4"
            )));
        }
        let st = k.sigma_tilde_of(a, delta)?;
        let m = delta - st * a * a;
        chain.insert("sigma_tilde".into(), st);
        chain.insert("sigma_tilde_c2_over_delta".into(), st * a * a / delta);
        return Ok(decision(
            CaseLabel::SigmaTilde,
            0.5 * m / delta,
            0.5 * k.mu,
            "z = 1 + c eta + (delta - sigma_tilde c^2) xi",
            Some(TestFunctionSpec::new(TestFunctionKind::SigmaTildeCombination, a, m)?),
            chain,
        ));
    }
    if a >= A0 {
        // lambda >= pi^2/d^2 + (4a/pi^2) lambda combined with lambda >= 2n alpha/(n-1)
        let coefficient = 4.0 * a * nf / (PI2 * (nf - 1.0));
        chain.insert("mu".into(), 4.0 * a / (PI2 * delta));
        chain.insert("alpha_coefficient".into(), 8.0 * a * nf / (PI2 * (nf - 1.0)));
        chain.insert("alpha_coefficient_at_a0".into(), 8.0 * A0 * nf / (PI2 * (nf - 1.0)));
        return Ok(decision(
            CaseLabel::II_a,
            coefficient,
            COEFF_N_GE_3,
            "z = 1 + c eta + mu delta xi with mu = 4a/(pi^2 delta), plus lambda >= nK",
            Some(TestFunctionSpec::new(
                TestFunctionKind::MuCombination,
                a,
                4.0 * a / PI2,
            )?),
            chain,
        ));
    }
    if a >= NU * delta {
        let mu_case = 4.0 * a / (PI2 * delta);
        chain.insert("mu".into(), mu_case);
        chain.insert("mu_floor".into(), 4.0 * NU / PI2);
        return Ok(decision(
            CaseLabel::II_b_1,
            0.5 * mu_case,
            COEFF_N_GE_3,
            "z = 1 + c eta + mu delta xi with mu = 4a/(pi^2 delta)",
            Some(TestFunctionSpec::new(
                TestFunctionKind::MuCombination,
                a,
                4.0 * a / PI2,
            )?),
            chain,
        ));
    }
    let sigma = k.sigma_of(a)?;
    let m = delta - sigma * a * a;
    chain.insert("sigma".into(), sigma);
    chain.insert("sigma_c2_over_delta".into(), sigma * a * a / delta);
    Ok(decision(
        CaseLabel::II_b_2,
        0.5 * m / delta,
        0.5 * k.delta_minus_sigma_coefficient,
        "z = 1 + c eta + (delta - sigma c^2) xi",
        Some(TestFunctionSpec::new(TestFunctionKind::SigmaCombination, a, m)?),
        chain,
    ))
}

/// Checks int z = (1 - m) pi and int 1/sqrt(z) >= pi^{3/2} / (int z)^{1/2}.
pub fn integral_chain_check(spec: &TestFunctionSpec, tol: f64) -> Result<CheckResult> {
    for i in 0..=2000 {
        let t = -FRAC_PI_2 + PI * i as f64 / 2000.0;
        let z = spec.value(t)?;
        if z <= 0.0 {
            return Err(Error::Precondition(format!("z({t}) = {z} is not positive")));
        }
    }
    let opts = QuadOptions::default();
    let z = |t: f64| spec.value(t).unwrap_or(f64::NAN);
    let int_z = integrate(z, -FRAC_PI_2, FRAC_PI_2, opts);
    let int_inv = integrate(|t| 1.0 / z(t).sqrt(), -FRAC_PI_2, FRAC_PI_2, opts);
    let expected = (1.0 - spec.m) * PI;
    let lower = PI.powf(1.5) / int_z.value.sqrt();
    let identity = (int_z.value - expected).abs();
    let gap = int_inv.value - lower;
    let violation = if int_z.converged && int_inv.converged {
        identity.max(-gap)
    } else {
        f64::INFINITY
    };
    Ok(CheckResult::new(
        "bounds.integral_chain",
        "int 1/sqrt(z) >= pi^{3/2} / (int z)^{1/2} and int z = (1 - m) pi",
        violation,
        tol,
        0.0,
    )
    .with_note(format!(
        "int z = {:.12e}, int 1/sqrt(z) = {:.12e}, lower = {:.12e}",
        int_z.value, int_inv.value, lower
    )))
}

/// Printed constants the implementation reproduces.
pub mod printed {
    pub const MU_LOW: f64 = 0.7649;
    pub const MU_HIGH: f64 = 0.7650;
    pub const SIGMA_RATIO: f64 = 0.374837516563;
    pub const DELTA_MINUS_SIGMA: f64 = 0.625162;
    pub const DELTA_MINUS_SIGMA_FULL: f64 = 0.625162283437;
    pub const SIGMA_TILDE_BOUND: f64 = 0.235;
    pub const Z_MIN_COEFFICIENT: f64 = 0.5433;
}

pub const CONSTANT_CHECK_IDS: [&str; 9] = [
    "const.mu_range",
    "const.mu_above_three_quarters",
    "const.mu_consistency",
    "const.tau_positive",
    "const.sigma_ratio",
    "const.delta_minus_sigma",
    "const.sigma_tilde_bound",
    "const.z_min_coefficient_positive",
    "const.n2_threshold_identity",
];

pub fn verify_constants() -> Vec<CheckResult> {
    let k = constants();
    let mid = 0.5 * (printed::MU_LOW + printed::MU_HIGH);
    let half = 0.5 * (printed::MU_HIGH - printed::MU_LOW);
    let (lhs, rhs, holds) = n2_threshold_identity();
    vec![
        CheckResult::new(
            CONSTANT_CHECK_IDS[0],
            "mu in [0.7649, 0.7650]",
            (k.mu - mid).abs() - half,
            0.0,
            0.0,
        )
        .with_note(format!("mu = {:.15}", k.mu)),
        CheckResult::new(
            CONSTANT_CHECK_IDS[1],
            "mu > 3/4",
            0.75 - k.mu,
            0.0,
            0.0,
        ),
        CheckResult::value(
            CONSTANT_CHECK_IDS[2],
            "mu = 1 - (pi^2/2) sqrt(tau/(pi^2 - 4))",
            k.mu,
            1.0 - k.sigma_tilde_bound_coefficient,
            1e-15,
            0.0,
        ),
        CheckResult::new(CONSTANT_CHECK_IDS[3], "tau > 0", -k.tau, 0.0, 0.0)
            .with_note(format!("tau = {:.15}", k.tau)),
        CheckResult::value(
            CONSTANT_CHECK_IDS[4],
            "sigma c^2 / delta at c = 1.53 delta = 0.374837516563",
            k.sigma_ratio_at_nu,
            printed::SIGMA_RATIO,
            1e-9,
            0.0,
        ),
        CheckResult::value(
            CONSTANT_CHECK_IDS[5],
            "delta - sigma c^2 >= 0.625162 delta",
            k.delta_minus_sigma_coefficient,
            printed::DELTA_MINUS_SIGMA,
            1e-6,
            0.0,
        )
        .with_note(format!(
            "computed {:.12}; the longer printed form {} differs by {:.1e}",
            k.delta_minus_sigma_coefficient,
            printed::DELTA_MINUS_SIGMA_FULL,
            (k.delta_minus_sigma_coefficient - printed::DELTA_MINUS_SIGMA_FULL).abs()
        )),
        CheckResult::value(
            CONSTANT_CHECK_IDS[6],
            "sigma-tilde c^2 <= (pi^2/2) sqrt(tau/(pi^2 - 4)) delta ~ 0.235 delta",
            k.sigma_tilde_bound_coefficient,
            printed::SIGMA_TILDE_BOUND,
            1e-3,
            0.0,
        ),
        CheckResult::new(
            CONSTANT_CHECK_IDS[7],
            "B > 0 in min z >= B c",
            -k.z_min_coefficient,
            0.0,
            0.0,
        )
        .with_note(format!(
            "B = {:.12}; the printed lower bound {} is a factor ~10 larger",
            k.z_min_coefficient,
            printed::Z_MIN_COEFFICIENT
        )),
        CheckResult::new(
            CONSTANT_CHECK_IDS[8],
            "(20 - pi^2)/16 > pi^2/16",
            if holds { rhs - lhs } else { f64::INFINITY },
            0.0,
            0.0,
        )
        .with_note(format!("{lhs:.12} > {rhs:.12}")),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_values() {
        let k = constants();
        // independent closed forms
        assert!((k.tau - 0.013311552243803).abs() < 1e-14);
        assert!((k.mu - 0.764993602892755).abs() < 1e-14);
        assert!((k.z_min_coefficient - 0.054334675782370).abs() < 1e-14);
        assert!((k.sigma_ratio_at_nu - 0.374837516553776).abs() < 1e-13);
        assert!((k.sigma_tilde_bound_coefficient - 0.235006397107245).abs() < 1e-14);
        assert!(verify_constants().iter().all(|c| c.pass));
    }

    #[test]
    fn main_bound_examples() {
        let b = main_bound(&BoundParams::new(2, 1.0, PI).unwrap()).unwrap();
        assert!((b - 1.375).abs() < 1e-15);
        let b = main_bound(&BoundParams::new(3, 0.5, 2.0).unwrap()).unwrap();
        assert!((b - (PI2 / 4.0 + 0.31)).abs() < 1e-15);
        assert!((b - 2.77740).abs() < 1e-5);
        let b = main_bound(&BoundParams::new(4, 1e-300, 1.5).unwrap()).unwrap();
        assert_eq!(b, PI2 / 2.25);
        assert!(BoundParams::new(1, 1.0, 1.0).is_err());
        assert!(BoundParams::new(2, 0.0, 1.0).is_err());
        assert!(BoundParams::new(2, 1.0, -1.0).is_err());
    }

    #[test]
    fn classical_examples() {
        let c = classical_bounds(&BoundParams::new(2, 1.0, PI).unwrap()).unwrap();
        assert_eq!(c.lichnerowicz, 2.0);
        assert!((c.zhong_yang - 1.0).abs() < 1e-15);
        let c = classical_bounds(&BoundParams::new(3, 1.0, PI).unwrap()).unwrap();
        assert!((c.yang - 1.5).abs() < 1e-15);
    }

    #[test]
    fn case_examples() {
        let d = case_select(0.0, 0.2, 3).unwrap();
        assert_eq!((d.label, d.coefficient), (CaseLabel::A_zero, 0.5));
        let d = case_select(0.4, 0.2, 3).unwrap();
        assert_eq!(d.label, CaseLabel::II_b_1);
        assert!(d.coefficient >= COEFF_N_GE_3);
        let d = case_select(0.1, 0.2, 3).unwrap();
        assert_eq!(d.label, CaseLabel::II_b_2);
        assert!(d.coefficient >= d.floor && d.floor >= 0.3125);
        let d = case_select(0.8, 0.33, 3).unwrap();
        assert_eq!(d.label, CaseLabel::II_a);
        let d = case_select(0.6, 0.2, 3).unwrap();
        assert_eq!(d.label, CaseLabel::I);
        let d = case_select(0.3, 0.2, 2).unwrap();
        assert_eq!(d.label, CaseLabel::SigmaTilde);
        assert!(d.coefficient >= 0.5 * mu() - 1e-15);
        assert!(case_select(0.3, 0.3, 2).is_err());
        assert!(case_select(1.0, 0.2, 3).is_err());
    }

    #[test]
    fn threshold_identity() {
        let (l, r, ok) = n2_threshold_identity();
        assert!(ok);
        assert!((l - 0.63315).abs() < 1e-5 && (r - 0.61685).abs() < 1e-5);
        assert!((sigma_tilde_threshold(2) - l).abs() < 1e-15);
    }

    #[test]
    fn sigma_tilde_solves_quadratic() {
        let k = constants();
        let s = k.sigma_tilde_of(0.3, 0.2).unwrap();
        assert!(s > 0.0);
        assert!(sigma_tilde_residual(k.tau, 0.3, 0.2, s).abs() < 1e-15);
        // textbook quadratic formula as oracle
        let (qa, qb) = (KAPPA * 0.09, 1.0 - 0.3 - KAPPA * 0.2);
        let oracle = (-qb + (qb * qb + 4.0 * qa * k.tau).sqrt()) / (2.0 * qa);
        assert!((s - oracle).abs() < 1e-12);
    }

    #[test]
    fn crossover_matches_equal_bounds() {
        for n in [2, 3, 5] {
            let d = crossover_diameter(n, 1.0).unwrap();
            let p = BoundParams::new(n, 1.0, d).unwrap();
            let diff = main_bound(&p).unwrap() - classical_bounds(&p).unwrap().lichnerowicz;
            assert!(diff.abs() < 1e-12);
        }
    }

    #[test]
    fn integral_chain_examples() {
        let one = TestFunctionSpec::xi_only(0.0).unwrap();
        assert!(integral_chain_check(&one, 1e-10).unwrap().pass);
        let s = TestFunctionSpec::new(TestFunctionKind::MuCombination, 0.2, 0.1).unwrap();
        assert!(integral_chain_check(&s, 1e-10).unwrap().pass);
        let x = TestFunctionSpec::xi_only(0.3).unwrap();
        assert!(integral_chain_check(&x, 1e-10).unwrap().pass);
        let bad = TestFunctionSpec::eta_only(1.5).unwrap();
        assert!(integral_chain_check(&bad, 1e-10).is_err());
    }
}
