//! Serializable reports and CSV profile tables.

use std::collections::BTreeMap;
use std::io::Write;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::barrier::TestFunctionSpec;
use crate::check::CheckResult;
use crate::error::Result;
use crate::model::{compute_z, EigenSolution};
use crate::special::{eta_jet, ratio_r, xi_jet};

pub const SIGNIFICANT_DIGITS: usize = 12;

/// Rounds to 12 significant digits; non-finite values become `f64::MAX`
/// with their sign.
pub fn round_sig(x: f64) -> f64 {
    if x.is_nan() {
        return f64::MAX;
    }
    if x.is_infinite() {
        return f64::MAX.copysign(x);
    }
    // the non-finite sentinel is a fixed point
    if x == 0.0 || x.abs() == f64::MAX {
        return x;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse::<f64>()
        .map(|r| if r.is_finite() { r } else { f64::MAX.copysign(x) })
        .unwrap_or(f64::MAX)
}

fn round_value(v: Value) -> Value {
    match v {
        Value::Number(n) => match n.as_f64() {
            Some(x) if !(n.is_i64() || n.is_u64()) => Value::from(round_sig(x)),
            _ => Value::Number(n),
        },
        Value::Array(a) => Value::Array(a.into_iter().map(round_value).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, round_value(v))).collect()),
        other => other,
    }
}

fn round_check(mut c: CheckResult) -> CheckResult {
    c.max_violation = round_sig(c.max_violation);
    c.tolerance = round_sig(c.tolerance);
    c.worst_t = round_sig(c.worst_t);
    c
}

/// One suite run. `pass` is the AND of the checks; a report without checks passes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub params: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, Value>,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            params: BTreeMap::new(),
            values: BTreeMap::new(),
            checks: Vec::new(),
            pass: true,
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.params.insert(key.into(), to_rounded(value));
        self
    }

    pub fn value(mut self, key: &str, value: impl Serialize) -> Self {
        self.values.insert(key.into(), to_rounded(value));
        self
    }

    pub fn checks(mut self, checks: impl IntoIterator<Item = CheckResult>) -> Self {
        self.checks.extend(checks.into_iter().map(round_check));
        self.pass = self.checks.iter().all(|c| c.pass);
        self
    }

    pub fn failed(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// Plain-text summary: one line per check, then the verdict.
    pub fn to_text(&self) -> String {
        let mut out = format!("suite {}\n", self.suite);
        for (k, v) in &self.values {
            out.push_str(&format!("  {k} = {}\n", plain(v)));
        }
        for c in &self.checks {
            out.push_str(&format!(
                "  [{}] {:<36} violation {:>19} tol {:.3e}  ({})\n",
                if c.pass { "PASS" } else { "FAIL" },
                c.id,
                format!("{:.6e}", c.max_violation),
                c.tolerance,
                c.anchor
            ));
        }
        let failed = self.failed().count();
        out.push_str(&format!(
            "{}: {} checks, {} failed\n",
            if self.pass { "PASS" } else { "FAIL" },
            self.checks.len(),
            failed
        ));
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => match n.as_f64() {
            Some(x) if !(n.is_i64() || n.is_u64()) => format!("{x:.12}"),
            _ => n.to_string(),
        },
        other => other.to_string(),
    }
}

fn to_rounded(value: impl Serialize) -> Value {
    match serde_json::to_value(value) {
        Ok(v) => round_value(v),
        Err(e) => Value::String(format!("unserializable: {e}")),
    }
}

/// One row of the (t, xi, eta, r, Z, z) table; the model columns are empty
/// for pure test-function profiles.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProfileRow {
    pub t: f64,
    pub xi: f64,
    pub eta: f64,
    pub r: f64,
    #[serde(rename = "Z")]
    pub big_z: Option<f64>,
    pub z: Option<f64>,
}

impl ProfileRow {
    pub fn at(t: f64) -> Result<Self> {
        Ok(Self {
            t,
            xi: xi_jet(t)?.f,
            eta: eta_jet(t)?.f,
            r: ratio_r(t)?,
            big_z: None,
            z: None,
        })
    }
}

pub fn test_function_profile(points: &[f64]) -> Result<Vec<ProfileRow>> {
    points.iter().map(|&t| ProfileRow::at(t)).collect()
}

/// Z of the model eigenfunction against the comparison function, at the Z sample points.
pub fn comparison_profile(sol: &EigenSolution, spec: &TestFunctionSpec, b: f64) -> Result<Vec<ProfileRow>> {
    let zs = compute_z(sol, b)?;
    zs.t.iter()
        .zip(&zs.z)
        .map(|(&t, &big_z)| {
            Ok(ProfileRow {
                big_z: Some(big_z),
                z: Some(spec.value(t)?),
                ..ProfileRow::at(t)?
            })
        })
        .collect()
}

/// Writes rows as CSV with a header line and 12 significant digits.
pub fn write_profile_csv<W: Write>(rows: &[ProfileRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["t", "xi", "eta", "r", "Z", "z"])?;
    let cell = |x: f64| format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    for r in rows {
        w.write_record([
            cell(r.t),
            cell(r.xi),
            cell(r.eta),
            cell(r.r),
            r.big_z.map(cell).unwrap_or_default(),
            r.z.map(cell).unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Reads a table written by [`write_profile_csv`].
pub fn read_profile_csv<R: std::io::Read>(input: R) -> Result<Vec<ProfileRow>> {
    let mut r = csv::Reader::from_reader(input);
    let mut rows = Vec::new();
    for rec in r.deserialize() {
        rows.push(rec?);
    }
    Ok(rows)
}
