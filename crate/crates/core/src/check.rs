//! Check results and sampling grids shared by every verification suite.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One verified claim.
///
/// `max_violation` is the quantity compared against `tolerance`: for an
/// identity it is the largest absolute residual, for an inequality
/// `f >= 0` it is `max(-f)` (negative when the inequality holds with room).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub anchor: String,
    pub max_violation: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub worst_t: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckResult {
    pub fn new(
        id: impl Into<String>,
        anchor: impl Into<String>,
        max_violation: f64,
        tolerance: f64,
        worst_t: f64,
    ) -> Self {
        // a NaN or infinite violation can never pass, and must stay serializable
        let max_violation = if max_violation.is_finite() {
            max_violation
        } else {
            f64::MAX
        };
        Self {
            id: id.into(),
            anchor: anchor.into(),
            max_violation,
            tolerance,
            pass: max_violation <= tolerance,
            worst_t: if worst_t.is_finite() { worst_t } else { 0.0 },
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Builds a check from a sampled violation function, tracking the worst point.
    pub fn from_samples<I>(
        id: impl Into<String>,
        anchor: impl Into<String>,
        tolerance: f64,
        samples: I,
    ) -> Self
    where
        I: IntoIterator<Item = (f64, f64)>,
    {
        let mut worst = f64::NEG_INFINITY;
        let mut worst_t = 0.0;
        let mut any = false;
        for (t, v) in samples {
            any = true;
            // NaN counts as the worst possible violation
            let v = if v.is_nan() { f64::INFINITY } else { v };
            if v > worst {
                worst = v;
                worst_t = t;
            }
        }
        if !any {
            return Self::new(id, anchor, f64::INFINITY, tolerance, 0.0).with_note("no samples");
        }
        Self::new(id, anchor, worst, tolerance, worst_t)
    }

    /// `|actual - expected|` against `tolerance`.
    pub fn value(
        id: impl Into<String>,
        anchor: impl Into<String>,
        actual: f64,
        expected: f64,
        tolerance: f64,
        t: f64,
    ) -> Self {
        Self::new(id, anchor, (actual - expected).abs(), tolerance, t)
            .with_note(format!("actual {actual:.12e}, expected {expected:.12e}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Uniform,
    /// Chebyshev-Lobatto nodes; both endpoints included.
    Chebyshev,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub count: usize,
    pub spacing: Spacing,
    pub endpoint_exclusion: f64,
}

impl GridSpec {
    pub fn chebyshev(count: usize) -> Self {
        Self {
            count,
            spacing: Spacing::Chebyshev,
            endpoint_exclusion: 0.0,
        }
    }

    pub fn uniform(count: usize) -> Self {
        Self {
            count,
            spacing: Spacing::Uniform,
            endpoint_exclusion: 0.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.count < 2 {
            return Err(Error::InvalidGrid(format!(
                "count must be at least 2, got {}",
                self.count
            )));
        }
        if !(self.endpoint_exclusion >= 0.0 && self.endpoint_exclusion < FRAC_PI_2) {
            return Err(Error::InvalidGrid(format!(
                "endpoint exclusion {} outside [0, pi/2)",
                self.endpoint_exclusion
            )));
        }
        Ok(())
    }

    /// Grid points in increasing order on `[-pi/2 + excl, pi/2 - excl]`.
    pub fn points(&self) -> Result<Vec<f64>> {
        self.validate()?;
        let half = FRAC_PI_2 - self.endpoint_exclusion;
        let m = (self.count - 1) as f64;
        let pts = (0..self.count)
            .map(|i| {
                let x = match self.spacing {
                    Spacing::Uniform => -1.0 + 2.0 * i as f64 / m,
                    Spacing::Chebyshev => -(PI * i as f64 / m).cos(),
                };
                // pin the ends and the symmetric centre exactly
                if i == 0 {
                    -half
                } else if i == self.count - 1 {
                    half
                } else if 2 * i == self.count - 1 {
                    0.0
                } else {
                    (half * x).clamp(-half, half)
                }
            })
            .collect();
        Ok(pts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_iff_violation_within_tolerance() {
        assert!(CheckResult::new("a", "x", 1e-10, 1e-9, 0.0).pass);
        assert!(CheckResult::new("a", "x", 1e-9, 1e-9, 0.0).pass);
        assert!(!CheckResult::new("a", "x", 2e-9, 1e-9, 0.0).pass);
        assert!(!CheckResult::new("a", "x", f64::NAN, 1e-9, 0.0).pass);
    }

    #[test]
    fn degenerate_grid_rejected() {
        assert!(GridSpec::chebyshev(1).points().is_err());
        assert!(GridSpec::chebyshev(0).points().is_err());
        let g = GridSpec {
            count: 5,
            spacing: Spacing::Uniform,
            endpoint_exclusion: -0.1,
        };
        assert!(g.points().is_err());
    }

    #[test]
    fn chebyshev_grid_includes_endpoints_and_is_sorted() {
        let pts = GridSpec::chebyshev(101).points().unwrap();
        assert_eq!(pts[0], -FRAC_PI_2);
        assert_eq!(pts[100], FRAC_PI_2);
        assert_eq!(pts[50], 0.0);
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn worst_sample_tracked() {
        let c = CheckResult::from_samples("id", "a", 0.0, vec![(0.1, -1.0), (0.2, 0.5), (0.3, 0.2)]);
        assert_eq!(c.worst_t, 0.2);
        assert_eq!(c.max_violation, 0.5);
        assert!(!c.pass);
    }
}
