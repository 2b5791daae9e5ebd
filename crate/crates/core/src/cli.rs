//! Command-line front end. `run` never exits the process; it returns the
//! exit status: 0 when every check passes, 1 on failed checks or solver
//! errors, 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::barrier::{verify_barrier, DEFAULT_SEED};
use crate::bounds::{
    case_select, classical_bounds, constants, crossover_diameter, guaranteed_coefficient, main_bound, printed,
    verify_constants, BoundParams,
};
use crate::check::{CheckResult, GridSpec};
use crate::error::{Error, Result};
use crate::lemmas::verify_lemmas;
use crate::model::{
    certified_delta, check_comparison, checks_for_solution, comparison_spec, compute_z, solve_first_neumann, sweep,
    ModelProblem, Theorem, BOUND_TOL, DEFAULT_B,
};
use crate::report::{comparison_profile, test_function_profile, write_profile_csv, ProfileRow, Report};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "eigenbound", version, about = "First-eigenvalue lower bounds and their numerical verification")]
pub struct Cli {
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Grid size for the analytic suites.
    #[arg(long, global = true, default_value_t = 10_000)]
    pub grid: usize,
    /// Check tolerance; model commands default to 1e-6 when omitted.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Emit the report as JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Emit the (t, xi, eta, r, Z, z) table as CSV.
    #[arg(long, global = true)]
    pub csv: bool,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Derived constants and the printed values they reproduce.
    Constants,
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Main bound and the classical bounds.
    Bound {
        #[arg(long)]
        n: u32,
        #[arg(long = "K")]
        k: f64,
        #[arg(long)]
        d: f64,
    },
    /// Case-tree decision for (a, delta, n).
    Case {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        delta: f64,
        #[arg(long)]
        n: u32,
    },
    /// Solve one comparison model and check every bound against it.
    Model {
        #[command(flatten)]
        model: ModelArgs,
    },
    /// Z against a chosen comparison function on one model.
    Compare {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_enum)]
        theorem: TheoremArg,
    },
    /// Solve and check a JSON array of model problems.
    Sweep {
        #[arg(long)]
        config: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum Suite {
    /// Identities and inequalities of xi, eta and r = xi'/eta'.
    Lemmas,
    /// Barrier identities and corollary hypotheses.
    Barrier {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long = "K")]
    pub k: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub left: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub right: f64,
    #[arg(long, default_value_t = 2048)]
    pub mesh: usize,
    #[arg(long, default_value_t = DEFAULT_B)]
    pub b: f64,
}

impl ModelArgs {
    fn problem(&self) -> Result<ModelProblem> {
        ModelProblem::new(self.n, self.k, self.left, self.right, self.mesh)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    /// z = 1 + c eta + mu delta xi.
    Mu,
    /// z = 1 + delta xi.
    Symmetric,
    /// z = 1 + c eta + (delta - sigma-tilde c^2) xi.
    SigmaTilde,
    /// z = 1 + c eta + (delta - sigma c^2) xi.
    Sigma,
}

impl From<TheoremArg> for Theorem {
    fn from(t: TheoremArg) -> Self {
        match t {
            TheoremArg::Mu => Theorem::Mu,
            TheoremArg::Symmetric => Theorem::Symmetric,
            TheoremArg::SigmaTilde => Theorem::SigmaTilde,
            TheoremArg::Sigma => Theorem::Sigma,
        }
    }
}

struct Output {
    report: Report,
    table: Option<Vec<ProfileRow>>,
}

impl From<Report> for Output {
    fn from(report: Report) -> Self {
        Self { report, table: None }
    }
}

fn tolerance(given: Option<f64>, default: f64) -> Result<f64> {
    let tol = given.unwrap_or(default);
    if tol > 0.0 && tol.is_finite() {
        Ok(tol)
    } else {
        Err(Error::InvalidParams(format!("tolerance must be positive, got {tol}")))
    }
}

fn execute(cli: &Cli) -> Result<Output> {
    let o = &cli.output;
    let grid = GridSpec::chebyshev(o.grid);
    match &cli.command {
        Command::Constants => {
            let k = constants();
            Ok(Report::new("constants")
                .value("tau", k.tau)
                .value("mu", k.mu)
                .value("z_min_coefficient", k.z_min_coefficient)
                .value("z_min_coefficient_printed", printed::Z_MIN_COEFFICIENT)
                .value("sigma_ratio_at_nu", k.sigma_ratio_at_nu)
                .value("delta_minus_sigma_coefficient", k.delta_minus_sigma_coefficient)
                .value("delta_minus_sigma_printed", printed::DELTA_MINUS_SIGMA_FULL)
                .value("sigma_tilde_bound_coefficient", k.sigma_tilde_bound_coefficient)
                .value("coefficient_n2", guaranteed_coefficient(2))
                .value("coefficient_n_ge_3", guaranteed_coefficient(3))
                .checks(verify_constants())
                .into())
        }
        Command::Verify { suite: Suite::Lemmas } => {
            let tol = tolerance(o.tol, 1e-9)?;
            let report = Report::new("lemmas")
                .param("grid", o.grid)
                .param("spacing", "chebyshev")
                .param("tol", tol)
                .checks(verify_lemmas(&grid, tol)?);
            let table = if o.csv { Some(test_function_profile(&grid.points()?)?) } else { None };
            Ok(Output { report, table })
        }
        Command::Verify { suite: Suite::Barrier { seed } } => {
            let tol = tolerance(o.tol, 1e-9)?;
            Ok(Report::new("barrier")
                .param("grid", o.grid)
                .param("spacing", "chebyshev")
                .param("tol", tol)
                .param("seed", *seed)
                .checks(verify_barrier(&grid, tol, *seed)?)
                .into())
        }
        Command::Bound { n, k, d } => {
            let p = BoundParams::new(*n, *k, *d)?;
            let c = classical_bounds(&p)?;
            Ok(Report::new("bound")
                .param("n", n)
                .param("K", k)
                .param("d", d)
                .value("main_bound", main_bound(&p)?)
                .value("coefficient", guaranteed_coefficient(*n))
                .value("lichnerowicz", c.lichnerowicz)
                .value("zhong_yang", c.zhong_yang)
                .value("yang", c.yang)
                .value("li_conjecture", c.li_conjecture)
                .value("crossover_diameter", crossover_diameter(*n, *k)?)
                .into())
        }
        Command::Case { a, delta, n } => {
            let dec = case_select(*a, *delta, *n)?;
            let floor_check = CheckResult::new(
                "case.coefficient_above_floor",
                "coefficient(a, delta) >= case floor",
                dec.floor - dec.coefficient,
                1e-12,
                *a,
            );
            let guarantee = CheckResult::new(
                "case.floor_above_guarantee",
                "case floor >= 31/100 (n >= 3), 3/8 (n = 2)",
                guaranteed_coefficient(*n) - dec.floor,
                1e-12,
                *a,
            );
            Ok(Report::new("case")
                .param("a", a)
                .param("delta", delta)
                .param("n", n)
                .value("label", dec.label.as_str())
                .value("coefficient", dec.coefficient)
                .value("floor", dec.floor)
                .value("applicable_theorem", &dec.applicable_theorem)
                .value("test_function", dec.test_function)
                .value("chain", &dec.chain)
                .checks([floor_check, guarantee])
                .into())
        }
        Command::Model { model } => {
            let tol = tolerance(o.tol, BOUND_TOL)?;
            let p = model.problem()?;
            let sol = solve_first_neumann(&p)?;
            let checks = checks_for_solution(&sol, model.b, tol)?;
            let zs = compute_z(&sol, model.b)?;
            let z_max = zs.z.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let delta = certified_delta(&sol);
            let report = model_report("model", model, tol, &sol)
                .value("delta_certified", delta)
                .value("z_max", z_max)
                .checks(checks);
            let table = if o.csv {
                let spec = comparison_spec(sol.a, delta, p.n, model.b, None)?;
                Some(comparison_profile(&sol, &spec, model.b)?)
            } else {
                None
            };
            Ok(Output { report, table })
        }
        Command::Compare { model, theorem } => {
            let tol = tolerance(o.tol, BOUND_TOL)?;
            let p = model.problem()?;
            let sol = solve_first_neumann(&p)?;
            let delta = certified_delta(&sol);
            let spec = comparison_spec(sol.a, delta, p.n, model.b, Some((*theorem).into()))?;
            let check = check_comparison(&sol, &spec, model.b, tol)?;
            let report = model_report("compare", model, tol, &sol)
                .param("theorem", format!("{theorem:?}").to_lowercase())
                .value("delta_certified", delta)
                .value("test_function", spec)
                .checks([check]);
            let table = if o.csv { Some(comparison_profile(&sol, &spec, model.b)?) } else { None };
            Ok(Output { report, table })
        }
        Command::Sweep { config } => {
            let text = std::fs::read_to_string(config)?;
            let problems: Vec<ModelProblem> = serde_json::from_str(&text)
                .map_err(|e| Error::InvalidParams(format!("{}: {e}", config.display())))?;
            for p in &problems {
                p.validate()?;
            }
            let mut checks = Vec::new();
            let mut outcomes = Vec::new();
            for (i, r) in sweep(&problems).into_iter().enumerate() {
                match r {
                    Ok(out) => {
                        checks.extend(out.checks.iter().cloned().map(|mut c| {
                            c.id = format!("sweep[{i}].{}", c.id);
                            c
                        }));
                        outcomes.push(serde_json::json!({
                            "index": i,
                            "lambda1": out.lambda1,
                            "lambda1_extrapolated": out.lambda1_extrapolated,
                            "a": out.a,
                            "delta": out.delta,
                        }));
                    }
                    Err(e) => checks.push(
                        CheckResult::new(format!("sweep[{i}].solve"), "model solves", f64::INFINITY, 0.0, 0.0)
                            .with_note(e.to_string()),
                    ),
                }
            }
            Ok(Report::new("sweep")
                .param("config", config.display().to_string())
                .param("problems", problems.len())
                .value("outcomes", outcomes)
                .checks(checks)
                .into())
        }
    }
}

fn model_report(suite: &str, m: &ModelArgs, tol: f64, sol: &crate::model::EigenSolution) -> Report {
    Report::new(suite)
        .param("n", m.n)
        .param("K", m.k)
        .param("left", m.left)
        .param("right", m.right)
        .param("mesh", m.mesh)
        .param("b", m.b)
        .param("tol", tol)
        .value("lambda1", sol.lambda1)
        .value("lambda1_fine", sol.lambda1_fine)
        .value("lambda1_extrapolated", sol.lambda1_extrapolated)
        .value("rel_change", sol.rel_change)
        .value("a", sol.a)
        .value("k", sol.k)
        .value("delta", sol.delta)
        .value("residual", sol.residual)
}

fn is_usage(e: &Error) -> bool {
    matches!(
        e,
        Error::Domain(_) | Error::InvalidGrid(_) | Error::InvalidParams(_) | Error::Precondition(_)
    )
}

fn emit(cli: &Cli, out: &Output, stdout: &mut dyn Write) -> Result<()> {
    let mut buf = Vec::new();
    if cli.output.csv {
        let rows = out.table.as_ref().ok_or_else(|| {
            Error::InvalidParams(format!("--csv has no table for suite '{}'", out.report.suite))
        })?;
        write_profile_csv(rows, &mut buf)?;
    } else if cli.output.json {
        buf.extend_from_slice(out.report.to_json()?.as_bytes());
        buf.push(b'\n');
    } else {
        buf.extend_from_slice(out.report.to_text().as_bytes());
    }
    match &cli.output.out {
        Some(path) => std::fs::write(path, buf)?,
        None => match stdout.write_all(&buf) {
            // a closed downstream pipe is not a failure of the run
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
            r => r?,
        },
    }
    Ok(())
}

/// Parses `args` (program name first) and runs the command.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    let out = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return if is_usage(&e) { EXIT_USAGE } else { EXIT_FAIL };
        }
    };
    if let Err(e) = emit(&cli, &out, stdout) {
        let _ = writeln!(stderr, "error: {e}");
        return if is_usage(&e) { EXIT_USAGE } else { EXIT_FAIL };
    }
    if out.report.pass {
        EXIT_PASS
    } else {
        for c in out.report.failed() {
            let _ = writeln!(stderr, "failed: {} (violation {:e} > tol {:e})", c.id, c.max_violation, c.tolerance);
        }
        EXIT_FAIL
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
