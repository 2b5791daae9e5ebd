//! Barrier inequality for comparison functions z(t) = 1 + c eta + m xi.
//!
//! At a point where z touches the gradient profile Z from above, the full
//! right-hand side [`barrier_rhs`] must be nonnegative. The corollaries drop
//! the last (gradient) term, which is legitimate only under their hypotheses;
//! [`corollary_rhs`] enforces those hypotheses and reports the dropped term.

use std::f64::consts::{FRAC_PI_2, PI};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::check::{CheckResult, GridSpec};
use crate::error::{Error, Result};
use crate::special::{eta_jet, xi_jet, Jet3};

/// Slack allowed on the sign of the dropped correction term.
pub const DROPPED_TERM_SLACK: f64 = 1e-12;
/// Seed used by [`verify_barrier`] unless the caller supplies one.
pub const DEFAULT_SEED: u64 = 0x5EED_2024;

fn default_b() -> f64 {
    1.0
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BarrierPoint {
    pub t0: f64,
    pub z: f64,
    pub z1: f64,
    pub z2: f64,
    /// c = a / b.
    pub c: f64,
    pub delta: f64,
    #[serde(default = "default_b")]
    pub b: f64,
}

impl BarrierPoint {
    pub fn new(t0: f64, z: f64, z1: f64, z2: f64, c: f64, delta: f64) -> Self {
        Self {
            t0,
            z,
            z1,
            z2,
            c,
            delta,
            b: 1.0,
        }
    }

    /// Evaluates a comparison function at `t0`.
    pub fn from_jet(jet: &Jet3, c: f64, delta: f64) -> Self {
        Self::new(jet.t, jet.f, jet.f1, jet.f2, c, delta)
    }

    pub fn validate(&self) -> Result<()> {
        let all = [self.t0, self.z, self.z1, self.z2, self.c, self.delta, self.b];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParams(format!("non-finite barrier point {self:?}")));
        }
        if self.t0.abs() > FRAC_PI_2 {
            return Err(Error::Domain(self.t0));
        }
        if !(0.0..1.0).contains(&self.c) {
            return Err(Error::InvalidParams(format!("c = {} outside [0, 1)", self.c)));
        }
        if self.delta < 0.0 {
            return Err(Error::InvalidParams(format!("delta = {} is negative", self.delta)));
        }
        if self.b < 1.0 {
            return Err(Error::InvalidParams(format!("b = {} is below 1", self.b)));
        }
        if self.z <= 0.0 {
            return Err(Error::Precondition(format!("z(t0) = {} must be positive", self.z)));
        }
        Ok(())
    }

    /// The rhs without the gradient correction term.
    fn simplified(&self) -> f64 {
        let (s, c) = self.t0.sin_cos();
        0.5 * self.z2 * c * c - self.z1 * c * s - self.z + 1.0 + self.c * s
            - 2.0 * self.delta * c * c
    }

    /// (z'/(4z)) cos t0 [z' cos t0 - 2 z sin t0 + 2 sin t0 + 2c].
    fn correction(&self) -> f64 {
        let (s, c) = self.t0.sin_cos();
        self.z1 / (4.0 * self.z)
            * c
            * (self.z1 * c - 2.0 * self.z * s + 2.0 * s + 2.0 * self.c)
    }
}

/// Full right-hand side of the barrier inequality at `p`.
pub fn barrier_rhs(p: &BarrierPoint) -> Result<f64> {
    p.validate()?;
    Ok(p.simplified() - p.correction())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Corollary {
    /// z' >= 0 and 1 - c <= z <= 1 + a.
    Shifted,
    /// a = 0, z' sin t0 >= 0 and z <= 1.
    Centered,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CorollaryValue {
    /// Simplified right-hand side.
    pub rhs: f64,
    /// The correction term the corollary drops; nonnegative under its hypotheses.
    pub dropped: f64,
    pub dropped_nonnegative: bool,
}

pub fn check_corollary_hypotheses(p: &BarrierPoint, which: Corollary) -> Result<()> {
    p.validate()?;
    let s = p.t0.sin();
    match which {
        Corollary::Shifted => {
            let upper = 1.0 + p.c * p.b;
            if p.z1 < 0.0 {
                return Err(Error::Precondition(format!("shifted form needs z' >= 0, got {}", p.z1)));
            }
            if p.z < 1.0 - p.c || p.z > upper {
                return Err(Error::Precondition(format!(
                    "shifted form needs 1 - c <= z <= 1 + a, got z = {} with c = {}, a = {}",
                    p.z,
                    p.c,
                    p.c * p.b
                )));
            }
            if s.abs() > 1.0 / p.b {
                return Err(Error::Precondition(format!(
                    "shifted form needs |sin t0| <= 1/b, got {} with b = {}",
                    s.abs(),
                    p.b
                )));
            }
        }
        Corollary::Centered => {
            if p.c != 0.0 {
                return Err(Error::Precondition(format!("centred form needs c = 0, got {}", p.c)));
            }
            if p.z1 * s < 0.0 {
                return Err(Error::Precondition(format!(
                    "centred form needs z' sin t0 >= 0, got {}",
                    p.z1 * s
                )));
            }
            if p.z > 1.0 {
                return Err(Error::Precondition(format!("centred form needs z <= 1, got {}", p.z)));
            }
        }
    }
    Ok(())
}

/// Simplified right-hand side of a corollary, after enforcing its hypotheses.
pub fn corollary_rhs(p: &BarrierPoint, which: Corollary) -> Result<CorollaryValue> {
    check_corollary_hypotheses(p, which)?;
    let dropped = p.correction();
    Ok(CorollaryValue {
        rhs: p.simplified(),
        dropped,
        dropped_nonnegative: dropped >= -DROPPED_TERM_SLACK,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TestFunctionKind {
    EtaOnly,
    MuCombination,
    SigmaCombination,
    SigmaTildeCombination,
    XiOnly,
}

/// z(t) = 1 + c eta(t) + m xi(t).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TestFunctionSpec {
    pub kind: TestFunctionKind,
    pub c: f64,
    pub m: f64,
}

impl TestFunctionSpec {
    pub fn new(kind: TestFunctionKind, c: f64, m: f64) -> Result<Self> {
        if !c.is_finite() || !m.is_finite() {
            return Err(Error::InvalidParams(format!("non-finite coefficients c = {c}, m = {m}")));
        }
        match kind {
            TestFunctionKind::EtaOnly if m != 0.0 => {
                Err(Error::InvalidParams(format!("eta_only needs m = 0, got {m}")))
            }
            TestFunctionKind::XiOnly if c != 0.0 => {
                Err(Error::InvalidParams(format!("xi_only needs c = 0, got {c}")))
            }
            _ => Ok(Self { kind, c, m }),
        }
    }

    pub fn eta_only(c: f64) -> Result<Self> {
        Self::new(TestFunctionKind::EtaOnly, c, 0.0)
    }

    pub fn xi_only(m: f64) -> Result<Self> {
        Self::new(TestFunctionKind::XiOnly, 0.0, m)
    }

    pub fn jet(&self, t: f64) -> Result<Jet3> {
        let xi = xi_jet(t)?;
        let eta = eta_jet(t)?;
        let mut z = eta.combine(self.c, &xi, self.m);
        z.f += 1.0;
        Ok(z)
    }

    pub fn value(&self, t: f64) -> Result<f64> {
        self.jet(t).map(|j| j.f)
    }
}

pub fn make_test_function(spec: TestFunctionSpec) -> impl Fn(f64) -> Result<Jet3> + Send + Sync {
    move |t| spec.jet(t)
}

/// ½z″cos²t − z′cos t sin t − z − (−1 − c sin t + 2m cos²t).
pub fn z_equation_residual(spec: &TestFunctionSpec, t: f64) -> Result<f64> {
    let z = spec.jet(t)?;
    let (s, c) = t.sin_cos();
    Ok(0.5 * z.f2 * c * c - z.f1 * c * s - z.f - (-1.0 - spec.c * s + 2.0 * spec.m * c * c))
}

/// Taylor-based lower bound coefficient B with min z >= B c.
pub fn z_min_coefficient() -> f64 {
    let pi2 = PI * PI;
    let nu = 1.53;
    let head = (1.5 - pi2 / 8.0 - (pi2 / 32.0 - 1.0 / 6.0) * nu) * (2.0 / nu);
    let tail = (8.0 / (3.0 * PI) - PI / 4.0).powi(2) / (-1.0 + (12.0 - pi2) / nu);
    head - tail
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZMinBound {
    pub coefficient: f64,
    pub bound: f64,
    pub grid_min: f64,
    pub grid_argmin: f64,
    /// Sign changes of z' on (-pi/2, 0).
    pub sign_changes: usize,
}

impl ZMinBound {
    pub fn holds(&self) -> bool {
        self.grid_min >= self.bound && self.sign_changes == 1
    }
}

/// Lower bound for min of 1 + c eta + delta xi, with a grid cross-check.
pub fn z_min_bound(c: f64, delta: f64) -> Result<ZMinBound> {
    z_min_bound_on(c, delta, 100_000)
}

pub fn z_min_bound_on(c: f64, delta: f64, points: usize) -> Result<ZMinBound> {
    if !(c > 0.0 && c < 1.53 * delta && c < 0.765 && delta <= 0.5) {
        return Err(Error::Precondition(format!(
            "need 0 < c < 1.53 delta, c < 0.765, delta <= 1/2; got c = {c}, delta = {delta}"
        )));
    }
    if points < 3 {
        return Err(Error::InvalidGrid(format!("need at least 3 points, got {points}")));
    }
    let coefficient = z_min_coefficient();
    let spec = TestFunctionSpec::new(TestFunctionKind::SigmaCombination, c, delta)?;
    let mut grid_min = f64::INFINITY;
    let mut grid_argmin = 0.0;
    let mut sign_changes = 0;
    let mut prev_sign = 0.0;
    for i in 0..points {
        let t = -FRAC_PI_2 + PI * i as f64 / (points - 1) as f64;
        let z = spec.jet(t)?;
        if z.f < grid_min {
            grid_min = z.f;
            grid_argmin = t;
        }
        if t > -FRAC_PI_2 && t < 0.0 && z.f1 != 0.0 {
            let sign = z.f1.signum();
            if prev_sign != 0.0 && sign != prev_sign {
                sign_changes += 1;
            }
            prev_sign = sign;
        }
    }
    Ok(ZMinBound {
        coefficient,
        bound: coefficient * c,
        grid_min,
        grid_argmin,
        sign_changes,
    })
}

pub const BARRIER_CHECK_IDS: [&str; 9] = [
    "barrier.z_eq_residual",
    "barrier.shifted_dropped_term",
    "barrier.centered_dropped_term",
    "barrier.shifted_on_comparison",
    "barrier.contradiction_shadow",
    "barrier.z_increasing",
    "barrier.eta_only_range",
    "barrier.z_min_bound",
    "barrier.z_min_unique_critical",
];

/// Number of random comparison functions in the residual check.
pub const RANDOM_SPECS: usize = 50;
/// Random barrier points drawn per corollary.
pub const RANDOM_POINTS: usize = 40_000;

fn random_spec(rng: &mut ChaCha8Rng, i: usize) -> TestFunctionSpec {
    let kind = match i % 5 {
        0 => TestFunctionKind::EtaOnly,
        1 => TestFunctionKind::MuCombination,
        2 => TestFunctionKind::SigmaCombination,
        3 => TestFunctionKind::SigmaTildeCombination,
        _ => TestFunctionKind::XiOnly,
    };
    let c = if kind == TestFunctionKind::XiOnly { 0.0 } else { rng.gen_range(0.0..1.0) };
    let m = if kind == TestFunctionKind::EtaOnly { 0.0 } else { rng.gen_range(0.0..0.5) };
    TestFunctionSpec { kind, c, m }
}

// drawn over a box wider than the hypotheses; callers keep the admissible ones
fn random_point(rng: &mut ChaCha8Rng, which: Corollary) -> BarrierPoint {
    let t0 = rng.gen_range(-FRAC_PI_2..=FRAC_PI_2);
    let c = match which {
        Corollary::Shifted => rng.gen_range(0.0..1.0),
        Corollary::Centered => 0.0,
    };
    BarrierPoint::new(
        t0,
        rng.gen_range(1e-6..2.0),
        rng.gen_range(-4.0..4.0),
        rng.gen_range(-4.0..4.0),
        c,
        rng.gen_range(0.0..0.5),
    )
}

/// The barrier suite: identities of the comparison functions, corollary
/// hypotheses, and the sign pattern used by the contradiction arguments.
pub fn verify_barrier(grid: &GridSpec, tol: f64, seed: u64) -> Result<Vec<CheckResult>> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidParams(format!("tolerance must be positive, got {tol}")));
    }
    let pts = grid.points()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let specs: Vec<TestFunctionSpec> = (0..RANDOM_SPECS).map(|i| random_spec(&mut rng, i)).collect();
    let jets: Vec<(f64, Jet3, Jet3)> = pts
        .iter()
        .map(|&t| Ok((t, xi_jet(t)?, eta_jet(t)?)))
        .collect::<Result<_>>()?;
    let z_of = |spec: &TestFunctionSpec, xi: &Jet3, eta: &Jet3| {
        let mut z = eta.combine(spec.c, xi, spec.m);
        z.f += 1.0;
        z
    };

    let mut out = Vec::with_capacity(BARRIER_CHECK_IDS.len());

    let mut residuals = Vec::with_capacity(specs.len() * pts.len());
    for spec in &specs {
        for &t in &pts {
            residuals.push((t, z_equation_residual(spec, t)?.abs()));
        }
    }
    out.push(
        CheckResult::from_samples(
            BARRIER_CHECK_IDS[0],
            "1/2 z'' cos^2 t - z' cos t sin t - z = -1 - c sin t + 2 m cos^2 t",
            tol,
            residuals,
        )
        .with_note(format!("{} specs x {} points, seed {seed}", specs.len(), pts.len())),
    );

    for (id, which) in [
        (BARRIER_CHECK_IDS[1], Corollary::Shifted),
        (BARRIER_CHECK_IDS[2], Corollary::Centered),
    ] {
        let mut samples = Vec::with_capacity(RANDOM_POINTS);
        for _ in 0..RANDOM_POINTS {
            let p = random_point(&mut rng, which);
            if let Ok(v) = corollary_rhs(&p, which) {
                samples.push((p.t0, -v.dropped));
            }
        }
        let accepted = samples.len();
        let anchor = match which {
            Corollary::Shifted => "dropped term >= 0 when z' >= 0 and 1 - c <= z <= 1 + a",
            Corollary::Centered => "dropped term >= 0 when a = 0, z' sin t0 >= 0 and z <= 1",
        };
        out.push(
            CheckResult::from_samples(id, anchor, DROPPED_TERM_SLACK, samples)
                .with_note(format!("{accepted} of {RANDOM_POINTS} random points satisfy the hypotheses")),
        );
    }

    // grid points of actual comparison functions that meet the shifted-form hypotheses
    let mut spec_samples = Vec::new();
    let mut shadow = Vec::new();
    for spec in specs.iter().filter(|s| s.c < 1.0) {
        for (t, xi, eta) in &jets {
            let z = z_of(spec, xi, eta);
            if z.f <= 0.0 {
                continue;
            }
            // delta = m makes the simplified rhs vanish identically; take delta >= m
            for delta in [spec.m, spec.m + 0.1] {
                let p = BarrierPoint::from_jet(&z, spec.c, delta);
                let which = if spec.c == 0.0 && z.f <= 1.0 && z.f1 * t.sin() >= 0.0 {
                    Corollary::Centered
                } else {
                    Corollary::Shifted
                };
                if let Ok(v) = corollary_rhs(&p, which) {
                    spec_samples.push((*t, -v.dropped));
                    shadow.push((*t, barrier_rhs(&p)?));
                }
            }
        }
    }
    out.push(
        CheckResult::from_samples(
            BARRIER_CHECK_IDS[3],
            "dropped term >= 0 on comparison functions where the corollary hypotheses hold",
            DROPPED_TERM_SLACK,
            spec_samples,
        ),
    );
    out.push(CheckResult::from_samples(
        BARRIER_CHECK_IDS[4],
        "barrier rhs <= 0 for z solving its ODE with delta >= m under the corollary hypotheses",
        tol,
        shadow,
    ));

    let mut increasing = Vec::new();
    for spec in &specs {
        if spec.m > 0.0 && spec.c / spec.m > PI * PI / 4.0 {
            for (t, xi, eta) in &jets {
                increasing.push((*t, -z_of(spec, xi, eta).f1));
            }
        }
    }
    for &(c, m) in &[(0.5, 0.2), (0.9, 0.35), (0.25, 0.1)] {
        let spec = TestFunctionSpec::new(TestFunctionKind::MuCombination, c, m)?;
        for (t, xi, eta) in &jets {
            increasing.push((*t, -z_of(&spec, xi, eta).f1));
        }
    }
    out.push(CheckResult::from_samples(
        BARRIER_CHECK_IDS[5],
        "z' > 0 when c/m > pi^2/4",
        tol,
        increasing,
    ));

    let mut range = Vec::new();
    for c in [0.05, 0.3, 0.6, 0.95] {
        let spec = TestFunctionSpec::eta_only(c)?;
        for (t, xi, eta) in &jets {
            let z = z_of(&spec, xi, eta).f;
            range.push((*t, (1.0 - c - z).max(z - 1.0 - c)));
        }
    }
    out.push(CheckResult::from_samples(
        BARRIER_CHECK_IDS[6],
        "1 - c <= 1 + c eta(t) <= 1 + c",
        tol,
        range,
    ));

    let cases = [(0.1, 0.1), (0.05, 0.2), (0.3, 0.25), (0.7, 0.49), (0.02, 0.5)];
    let mins: Vec<(f64, ZMinBound)> = cases
        .iter()
        .map(|&(c, d)| Ok((c, z_min_bound_on(c, d, pts.len().max(1001))?)))
        .collect::<Result<_>>()?;
    out.push(
        CheckResult::from_samples(
            BARRIER_CHECK_IDS[7],
            "min of 1 + c eta + delta xi >= B c with B from the Taylor bracket",
            tol,
            mins.iter().map(|(c, m)| (*c, m.bound - m.grid_min)),
        )
        .with_note(format!("B = {:.12}", z_min_coefficient())),
    );
    out.push(CheckResult::from_samples(
        BARRIER_CHECK_IDS[8],
        "z' has exactly one sign change on (-pi/2, 0) when 0 < c < (pi^2/4) delta",
        0.0,
        mins.iter().map(|(c, m)| (*c, (m.sign_changes as f64 - 1.0).abs())),
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_point_is_zero() {
        for t0 in [-1.2, 0.0, 0.4, FRAC_PI_2] {
            let p = BarrierPoint::new(t0, 1.0, 0.0, 0.0, 0.0, 0.0);
            assert_eq!(barrier_rhs(&p).unwrap(), 0.0);
        }
    }

    #[test]
    fn pinned_regression_value() {
        let p = BarrierPoint::new(0.5, 1.2, 0.1, -0.3, 0.2, 0.1);
        // independent arithmetic
        let (s, c): (f64, f64) = (0.5f64.sin(), 0.5f64.cos());
        let simple = 0.5 * -0.3 * c * c - 0.1 * c * s - 1.2 + 1.0 + 0.2 * s - 0.2 * c * c;
        let corr = 0.1 / 4.8 * c * (0.1 * c - 2.4 * s + 2.0 * s + 0.4);
        let v = barrier_rhs(&p).unwrap();
        assert!((v - (simple - corr)).abs() < 1e-15);
        assert!((v - -0.42115288552747804).abs() < 1e-14, "{v:.17}");
    }

    #[test]
    fn xi_only_at_origin_vanishes() {
        let delta = 0.3;
        let z = TestFunctionSpec::xi_only(delta).unwrap().jet(0.0).unwrap();
        let p = BarrierPoint::from_jet(&z, 0.0, delta);
        assert!(barrier_rhs(&p).unwrap().abs() < 1e-15);
    }

    #[test]
    fn nonpositive_z_is_error() {
        let p = BarrierPoint::new(0.1, 0.0, 0.0, 0.0, 0.0, 0.0);
        assert!(matches!(barrier_rhs(&p), Err(Error::Precondition(_))));
    }

    #[test]
    fn corollary_preconditions_enforced() {
        let bad1 = BarrierPoint::new(0.3, 1.05, -0.2, 0.0, 0.1, 0.0);
        assert!(matches!(corollary_rhs(&bad1, Corollary::Shifted), Err(Error::Precondition(_))));
        let bad2 = BarrierPoint::new(0.3, 1.0, 0.0, 0.0, 0.1, 0.0);
        assert!(corollary_rhs(&bad2, Corollary::Centered).is_err());
        let bad3 = BarrierPoint::new(-0.3, 0.9, 0.5, 0.0, 0.0, 0.0);
        assert!(corollary_rhs(&bad3, Corollary::Centered).is_err());
        let zero = BarrierPoint::new(0.7, 1.0, 0.0, 0.0, 0.0, 0.0);
        assert_eq!(corollary_rhs(&zero, Corollary::Centered).unwrap().rhs, 0.0);
    }

    #[test]
    fn shifted_dropped_term_examples() {
        for t0 in [0.3, -0.3] {
            let p = BarrierPoint::new(t0, 1.05, 0.2, 0.0, 0.1, 0.0);
            let v = corollary_rhs(&p, Corollary::Shifted).unwrap();
            let (s, c) = t0.sin_cos();
            let direct = 0.2 * c * (0.2 * c - 2.1 * s + 2.0 * s + 0.2) / 4.2;
            assert!((v.dropped - direct).abs() < 1e-16);
            assert!(v.dropped >= 0.0 && v.dropped_nonnegative);
        }
    }

    #[test]
    fn test_function_examples() {
        let z = TestFunctionSpec::eta_only(1.0).unwrap().value(FRAC_PI_2).unwrap();
        assert!((z - 2.0).abs() < 1e-15);
        let s = TestFunctionSpec::new(TestFunctionKind::MuCombination, 0.3, 0.1).unwrap();
        assert!((s.value(-FRAC_PI_2).unwrap() - 0.7).abs() < 1e-15);
        let x = TestFunctionSpec::xi_only(0.2).unwrap().value(0.0).unwrap();
        assert!((x - (1.0 + 0.2 * (1.0 - PI * PI / 4.0))).abs() < 1e-15);
        assert!((x - 0.70652).abs() < 1e-5);
        assert!(TestFunctionSpec::new(TestFunctionKind::EtaOnly, 0.1, 0.2).is_err());
        assert!(TestFunctionSpec::new(TestFunctionKind::XiOnly, 0.1, 0.2).is_err());
    }

    #[test]
    fn z_equation_residual_small() {
        let s = TestFunctionSpec::new(TestFunctionKind::SigmaTildeCombination, 0.4, 0.3).unwrap();
        assert!(z_equation_residual(&s, 0.7).unwrap().abs() < 1e-10);
        let x = TestFunctionSpec::xi_only(0.25).unwrap();
        assert!(z_equation_residual(&x, -1.1).unwrap().abs() < 1e-10);
        let e = TestFunctionSpec::eta_only(0.6).unwrap();
        assert!(z_equation_residual(&e, 1.5).unwrap().abs() < 1e-10);
    }

    #[test]
    fn z_min_bound_example() {
        let r = z_min_bound(0.1, 0.1).unwrap();
        assert!((r.coefficient - 0.054334675782370).abs() < 1e-12);
        assert!(r.holds(), "{r:?}");
        assert!(r.grid_argmin < 0.0);
        assert!(z_min_bound(0.2, 0.1).is_err());
        assert!(z_min_bound(0.1, 0.6).is_err());
    }

    #[test]
    fn suite_passes_on_small_grid() {
        let checks = verify_barrier(&GridSpec::chebyshev(200), 1e-10, DEFAULT_SEED).unwrap();
        let ids: Vec<&str> = checks.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids, BARRIER_CHECK_IDS);
        for c in &checks {
            assert!(c.pass, "{c:?}");
        }
    }
}
