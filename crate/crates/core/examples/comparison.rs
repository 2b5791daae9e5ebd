//! Gradient profile Z(t) of a model eigenfunction against the comparison
//! function z(t) chosen by the case tree, written as a CSV table.
//!
//! cargo run --release --example comparison -- [out.csv]

use eigenbound::model::{certified_delta, check_comparison, comparison_spec, solve_first_neumann, ModelProblem, DEFAULT_B};
use eigenbound::report::{comparison_profile, write_profile_csv};

fn main() -> eigenbound::Result<()> {
    let p = ModelProblem::new(3, 1.0, -0.6, 1.0, 2048)?;
    let sol = solve_first_neumann(&p)?;
    let delta = certified_delta(&sol);
    let spec = comparison_spec(sol.a, delta, p.n, DEFAULT_B, None)?;
    println!("a = {:.9}, delta = {delta:.9}, z = 1 + {:.9} eta + {:.9} xi ({:?})", sol.a, spec.c, spec.m, spec.kind);

    let check = check_comparison(&sol, &spec, DEFAULT_B, 1e-6)?;
    println!(
        "max Z - z = {:.6e} at t = {:.6} -> {}",
        check.max_violation,
        check.worst_t,
        if check.pass { "Z <= z" } else { "violated" }
    );

    let rows = comparison_profile(&sol, &spec, DEFAULT_B)?;
    match std::env::args().nth(1) {
        Some(path) => {
            write_profile_csv(&rows, std::fs::File::create(&path)?)?;
            println!("{} rows written to {path}", rows.len());
        }
        None => {
            let every = rows.len() / 8;
            let sample: Vec<_> = rows.iter().step_by(every.max(1)).copied().collect();
            write_profile_csv(&sample, std::io::stdout())?;
        }
    }
    Ok(())
}
